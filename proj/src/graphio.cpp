#include "permsim/graphio.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>
#include <stdexcept>

#include "permsim/permutation.hpp"

namespace permsim {

namespace {

constexpr char kG6Lo = 63;   // '?'
constexpr char kG6Hi = 126;  // '~'

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == '\n' || s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    return s;
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t nl = text.find('\n', start);
        if (nl == std::string_view::npos) {
            lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    return lines;
}

long long parse_ll(std::string_view tok, const char* what) {
    long long v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw std::runtime_error(std::string("expected an integer for ") + what);
    return v;
}

bool looks_like_integer(std::string_view tok) {
    if (tok.empty()) return false;
    std::size_t i = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
    if (i == tok.size()) return false;
    for (; i < tok.size(); ++i)
        if (tok[i] < '0' || tok[i] > '9') return false;
    return true;
}

std::size_t triangle_count(const Graph& g) {
    std::size_t count = 0;
    const std::size_t n = g.vertex_count();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!g.has_edge(i, j)) continue;
            for (std::size_t k = j + 1; k < n; ++k)
                if (g.has_edge(i, k) && g.has_edge(j, k)) ++count;
        }
    return count;
}

}  // namespace

std::size_t Graph::edge_count() const {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

std::size_t Graph::degree(std::size_t v) const {
    std::size_t d = 0;
    for (std::size_t u = 0; u < n_; ++u)
        if (u != v && has_edge(u, v)) ++d;
    return d;
}

Graph parse_graph6(std::string_view line) {
    line = trim(line);
    if (line.empty()) throw std::runtime_error("graph6: empty line");
    if (line[0] == '~') throw std::runtime_error("graph6: long form (n >= 63) not supported");
    for (char c : line)
        if (c < kG6Lo || c > kG6Hi)
            throw std::runtime_error("graph6: character out of range [63,126]");

    const std::size_t n = static_cast<std::size_t>(line[0] - kG6Lo);
    if (n == 0) throw std::runtime_error("graph6: graph must have at least one vertex");
    const std::size_t bits = n * (n - 1) / 2;
    const std::size_t want = 1 + (bits + 5) / 6;
    if (line.size() != want) throw std::runtime_error("graph6: malformed length");

    Graph g(n);
    for (std::size_t k = 0; k < bits; ++k) {
        const int sextet = line[1 + k / 6] - kG6Lo;
        g.set_pair_bit(k, (sextet >> (5 - k % 6)) & 1);
    }
    return g;
}

std::string encode_graph6(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n >= 63) throw std::runtime_error("graph6: long form (n >= 63) not supported");
    const std::size_t bits = n * (n - 1) / 2;
    std::string out(1 + (bits + 5) / 6, kG6Lo);
    out[0] = static_cast<char>(kG6Lo + n);
    for (std::size_t k = 0; k < bits; ++k)
        if (g.pair_bit(k)) out[1 + k / 6] += (1 << (5 - k % 6));
    return out;
}

std::vector<Graph> parse_graph6_file(std::string_view text) {
    std::vector<Graph> graphs;
    for (std::string_view line : split_lines(text)) {
        line = trim(line);
        if (line.empty() || line.starts_with(">>")) continue;
        graphs.push_back(parse_graph6(line));
    }
    return graphs;
}

ExactMatrix parse_matrix_text(std::string_view text) {
    const std::vector<std::string_view> lines = split_lines(text);
    std::size_t row = 0;

    auto next_tokens = [&]() -> std::vector<std::string_view> {
        while (row < lines.size()) {
            std::string_view line = trim(lines[row++]);
            if (line.empty()) continue;
            std::vector<std::string_view> toks;
            std::size_t i = 0;
            while (i < line.size()) {
                while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
                std::size_t j = i;
                while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
                if (j > i) toks.push_back(line.substr(i, j - i));
                i = j;
            }
            return toks;
        }
        return {};
    };

    const std::vector<std::string_view> head = next_tokens();
    if (head.size() != 1 || !looks_like_integer(head[0]))
        throw std::runtime_error("matrix: first line must be the dimension");
    const long long n_ll = parse_ll(head[0], "dimension");
    if (n_ll <= 0) throw std::runtime_error("matrix: dimension must be positive");
    const std::size_t n = static_cast<std::size_t>(n_ll);

    ExactMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::vector<std::string_view> toks = next_tokens();
        if (toks.size() != n) throw std::runtime_error("matrix: row length mismatch");
        for (std::size_t j = 0; j < n; ++j) {
            if (!looks_like_integer(toks[j]))
                throw std::runtime_error("matrix: non-integer token");
            m.at(i, j) = BigInt(std::string(toks[j]));
        }
    }
    return m;
}

Graph parse_dimacs(std::string_view text) {
    std::optional<Graph> g;
    std::size_t edges_declared = 0, edges_seen = 0;
    for (std::string_view raw : split_lines(text)) {
        const std::string_view line = trim(raw);
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream is{std::string(line)};
        std::string tag;
        is >> tag;
        if (tag == "p") {
            if (g) throw std::runtime_error("dimacs: duplicate problem line");
            std::string kind;
            long long n = 0, m = 0;
            if (!(is >> kind >> n >> m) || kind != "edge" || n <= 0 || m < 0)
                throw std::runtime_error("dimacs: malformed problem line");
            g.emplace(static_cast<std::size_t>(n));
            edges_declared = static_cast<std::size_t>(m);
        } else if (tag == "e") {
            if (!g) throw std::runtime_error("dimacs: edge before problem line");
            long long u = 0, v = 0;
            if (!(is >> u >> v)) throw std::runtime_error("dimacs: malformed edge line");
            const std::size_t n = g->vertex_count();
            if (u < 1 || v < 1 || u > static_cast<long long>(n) || v > static_cast<long long>(n))
                throw std::runtime_error("dimacs: vertex index out of range");
            if (u == v) throw std::runtime_error("dimacs: self-loops are not allowed");
            g->set_edge(static_cast<std::size_t>(u - 1), static_cast<std::size_t>(v - 1));
            ++edges_seen;
        } else {
            throw std::runtime_error("dimacs: unknown line type '" + tag + "'");
        }
    }
    if (!g) throw std::runtime_error("dimacs: missing problem line");
    if (edges_seen != edges_declared)
        throw std::runtime_error("dimacs: edge count does not match header");
    return *g;
}

ExactMatrix adjacency_matrix(const Graph& g) {
    const std::size_t n = g.vertex_count();
    ExactMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (g.has_edge(i, j)) {
                m.at(i, j) = 1;
                m.at(j, i) = 1;
            }
    return m;
}

GraphEnumerator::GraphEnumerator(std::size_t n) : n_(n) {
    if (n == 0) throw std::invalid_argument("graph must have at least one vertex");
    if (n > 7) throw std::invalid_argument("labeled enumeration is capped at n = 7");
    total_ = std::uint64_t{1} << (n * (n - 1) / 2);
}

std::optional<Graph> GraphEnumerator::next() {
    if (mask_ >= total_) return std::nullopt;
    Graph g(n_);
    for (std::size_t k = 0; k < g.pair_count(); ++k) g.set_pair_bit(k, (mask_ >> k) & 1);
    ++mask_;
    return g;
}

std::vector<Graph> enumerate_isomorphism_classes(std::size_t n) {
    using Key = std::pair<std::vector<std::size_t>, std::size_t>;
    std::map<Key, std::vector<std::size_t>> buckets;  // key -> indices into reps
    std::vector<Graph> reps;
    std::vector<ExactMatrix> rep_adj;

    auto key_of = [](const Graph& g) -> Key {
        std::vector<std::size_t> degs(g.vertex_count());
        for (std::size_t v = 0; v < g.vertex_count(); ++v) degs[v] = g.degree(v);
        std::sort(degs.begin(), degs.end());
        return {std::move(degs), triangle_count(g)};
    };

    GraphEnumerator en(n);
    while (auto g = en.next()) {
        const Key key = key_of(*g);
        const ExactMatrix adj = adjacency_matrix(*g);
        bool known = false;
        for (std::size_t idx : buckets[key]) {
            if (brute_force_similar(adj, rep_adj[idx]).has_value()) {
                known = true;
                break;
            }
        }
        if (!known) {
            buckets[key].push_back(reps.size());
            reps.push_back(std::move(*g));
            rep_adj.push_back(adj);
        }
    }
    return reps;
}

}  // namespace permsim
