#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "permsim/matrix.hpp"

namespace permsim {

// Simple undirected graph: vertex count plus upper-triangle adjacency bits.
// Bit k covers the pair (i, j), i < j, with k = j(j-1)/2 + i -- the same
// column-major order graph6 uses, so codec and storage agree bit for bit.
class Graph {
public:
    explicit Graph(std::size_t n) : n_(n), bits_(n * (n - 1) / 2, false) {
        if (n == 0) throw std::invalid_argument("graph must have at least one vertex");
    }

    std::size_t vertex_count() const { return n_; }
    std::size_t pair_count() const { return bits_.size(); }

    bool has_edge(std::size_t u, std::size_t v) const {
        if (u == v) return false;
        return bits_[pair_index(u, v)];
    }

    void set_edge(std::size_t u, std::size_t v, bool present = true) {
        if (u == v) throw std::invalid_argument("self-loops are not allowed");
        bits_[pair_index(u, v)] = present;
    }

    bool pair_bit(std::size_t k) const { return bits_[k]; }
    void set_pair_bit(std::size_t k, bool present) { bits_[k] = present; }

    std::size_t edge_count() const;
    std::size_t degree(std::size_t v) const;

    bool operator==(const Graph&) const = default;

private:
    std::size_t pair_index(std::size_t u, std::size_t v) const {
        if (u >= n_ || v >= n_) throw std::out_of_range("vertex index");
        if (u > v) std::swap(u, v);
        return v * (v - 1) / 2 + u;
    }

    std::size_t n_;
    std::vector<bool> bits_;
};

// graph6, short form only (1 <= n < 63): one printable byte n+63, then the
// upper-triangle bits packed 6 per byte, most significant first, zero padded.
Graph parse_graph6(std::string_view line);
std::string encode_graph6(const Graph& g);

// Every line of a graph6 file (blank lines and ">>graph6<<" headers skipped).
std::vector<Graph> parse_graph6_file(std::string_view text);

// Plain matrix text: first line n, then n rows of n whitespace-separated
// integers of arbitrary sign and magnitude.
ExactMatrix parse_matrix_text(std::string_view text);

// DIMACS edge format: "p edge <n> <m>" then m lines "e <u> <v>", 1-indexed;
// "c" comment lines allowed.
Graph parse_dimacs(std::string_view text);

ExactMatrix adjacency_matrix(const Graph& g);

// Streams all 2^(n(n-1)/2) labeled graphs on n vertices in bitmask order.
// Ceiling n <= 7: past that the labeled space stops being desk-scale.
class GraphEnumerator {
public:
    explicit GraphEnumerator(std::size_t n);

    std::optional<Graph> next();
    std::uint64_t total() const { return total_; }

private:
    std::size_t n_;
    std::uint64_t mask_ = 0;
    std::uint64_t total_;
};

// One representative per isomorphism class, in first-seen enumeration order.
// Candidates are bucketed by (degree multiset, triangle count) -- both
// isomorphism invariants -- and confirmed by the brute-force oracle, which
// stays the sole decider.
std::vector<Graph> enumerate_isomorphism_classes(std::size_t n);

}  // namespace permsim
