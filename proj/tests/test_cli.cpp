#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "permsim/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct TempFile {
    fs::path path;

    TempFile(const std::string& name, const std::string& contents) {
        path = fs::temp_directory_path() / ("permsim_test_" + name);
        std::ofstream out(path, std::ios::binary);
        out << contents;
    }
    ~TempFile() {
        std::error_code ec;
        fs::remove(path, ec);
    }
    std::string str() const { return path.string(); }
};

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = permsim::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("test subcommand exit codes") {
    TempFile k2("k2.g6", "A_\n");
    TempFile empty2("e2.txt", "2\n0 0\n0 0\n");

    SUBCASE("a graph against itself is indistinguishable, exit 0") {
        const CliResult r = run({"test", k2.str(), k2.str()});
        CHECK(r.code == 0);
        CHECK(r.out.find("INDISTINGUISHABLE") != std::string::npos);
        CHECK(r.out.find("error bound:") != std::string::npos);
    }
    SUBCASE("K_2 against the empty matrix is distinct, exit 1") {
        const CliResult r = run({"test", k2.str(), empty2.str()});
        CHECK(r.code == 1);
        CHECK(r.out.find("DISTINCT") != std::string::npos);
        CHECK(r.out.find("witness: trial 0") != std::string::npos);
    }
    SUBCASE("missing file is a usage error, exit 2") {
        const CliResult r = run({"test", "/nonexistent/x.g6", k2.str()});
        CHECK(r.code == 2);
        CHECK(r.err.find("error:") != std::string::npos);
    }
    SUBCASE("invalid prime is rejected, exit 2") {
        const CliResult r = run({"test", k2.str(), k2.str(), "--prime", "91"});
        CHECK(r.code == 2);
    }
    SUBCASE("dimension mismatch is distinct") {
        TempFile m3("m3.txt", "3\n0 0 0\n0 0 0\n0 0 0\n");
        const CliResult r = run({"test", empty2.str(), m3.str()});
        CHECK(r.code == 1);
        CHECK(r.out.find("dimension mismatch") != std::string::npos);
    }
    SUBCASE("--exact reports input determinants and co-det status") {
        const CliResult r = run({"test", k2.str(), empty2.str(), "--exact"});
        CHECK(r.out.find("exact det(A) = -1") != std::string::npos);
        CHECK(r.out.find("exact det(B) = 0") != std::string::npos);
        CHECK(r.out.find("co-det inputs: no") != std::string::npos);
    }
    SUBCASE("same config and seed give byte-identical output") {
        const CliResult a = run({"test", k2.str(), empty2.str(), "--seed", "9"});
        const CliResult b = run({"test", k2.str(), empty2.str(), "--seed", "9"});
        CHECK(a.out == b.out);
        CHECK(a.code == b.code);
    }
}

TEST_CASE("oracle subcommand") {
    SUBCASE("identical inputs give the identity witness, exit 0") {
        TempFile k3("k3.g6", "Bw\n");
        const CliResult r = run({"oracle", k3.str(), k3.str()});
        CHECK(r.code == 0);
        CHECK(r.out.find("SIMILAR") == 0);
        CHECK(r.out.find("witness: 0 1 2") != std::string::npos);
    }
    SUBCASE("relabeled paths are similar, exit 0") {
        // edges 01, 12 vs edges 01, 02
        TempFile a("pa.dimacs", "p edge 3 2\ne 1 2\ne 2 3\n");
        TempFile b("pb.dimacs", "p edge 3 2\ne 1 2\ne 1 3\n");
        const CliResult r = run({"oracle", a.str(), b.str()});
        CHECK(r.code == 0);
        CHECK(r.out.find("witness:") != std::string::npos);
    }
    SUBCASE("non-similar inputs, exit 1") {
        TempFile k3("k3.g6", "Bw\n");
        TempFile e3("e3.g6", "B?\n");
        const CliResult r = run({"oracle", k3.str(), e3.str()});
        CHECK(r.code == 1);
        CHECK(r.out.find("NOT SIMILAR") != std::string::npos);
    }
    SUBCASE("guard refuses n = 12 without the override, exit 2") {
        std::string m12 = "12\n";
        for (int i = 0; i < 12; ++i) {
            for (int j = 0; j < 12; ++j) m12 += j ? " 0" : "0";
            m12 += "\n";
        }
        TempFile big("m12.txt", m12);
        const CliResult r = run({"oracle", big.str(), big.str()});
        CHECK(r.code == 2);
        CHECK(r.err.find("override") != std::string::npos);
        const CliResult forced = run({"oracle", big.str(), big.str(), "--force-oracle"});
        CHECK(forced.code == 0);
    }
}

TEST_CASE("hunt subcommand") {
    SUBCASE("finds the 5-vertex cospectral pair in a corpus file") {
        // star K_{1,4} and C_4 + isolated vertex
        TempFile corpus("c5.g6", "Ds_\nDl?\n");
        const CliResult r = run({"hunt", "--corpus", corpus.str(), "--budget", "20"});
        CHECK(r.code == 0);
        CHECK(r.out.find("codet_pairs=1") != std::string::npos);
        CHECK(r.out.find("candidates=0") != std::string::npos);
    }
    SUBCASE("empty corpus gives an empty report, exit 0") {
        TempFile corpus("empty.g6", "");
        const CliResult r = run({"hunt", "--corpus", corpus.str()});
        CHECK(r.code == 0);
        CHECK(r.out.find("pairs_examined=0") != std::string::npos);
    }
    SUBCASE("--out writes the report to a file") {
        TempFile corpus("c5b.g6", "Ds_\nDl?\n");
        const fs::path out_path = fs::temp_directory_path() / "permsim_test_report.tsv";
        const CliResult r =
            run({"hunt", "--corpus", corpus.str(), "--out", out_path.string()});
        CHECK(r.code == 0);
        std::ifstream in(out_path);
        std::stringstream content;
        content << in.rdbuf();
        CHECK(content.str().find("# hunt report") == 0);
        CHECK(content.str().find("# summary") != std::string::npos);
        fs::remove(out_path);
    }
    SUBCASE("byte-identical reports for the same config") {
        const CliResult a = run({"hunt", "--n", "4", "--budget", "15", "--seed", "3"});
        const CliResult b = run({"hunt", "--n", "4", "--budget", "15", "--seed", "3"});
        CHECK(a.out == b.out);
    }
    SUBCASE("enumeration ceiling, exit 2") {
        const CliResult r = run({"hunt", "--n", "9"});
        CHECK(r.code == 2);
    }
}

TEST_CASE("bench subcommand") {
    const CliResult r = run({"bench", "--sizes", "4,8,16"});
    CHECK(r.code == 0);
    CHECK(r.out.find("n=4") != std::string::npos);
    CHECK(r.out.find("n=8") != std::string::npos);
    CHECK(r.out.find("n=16") != std::string::npos);
    CHECK(r.out.find("log-log slope:") != std::string::npos);
    CHECK(r.out.find("NOT reproduced") != std::string::npos);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"test", "only_one_arg"}).code == 2);
    CHECK(run({"test", "a", "b", "--format", "tsv"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_SUITE_END();
