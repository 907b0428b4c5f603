#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "modsep/cli.hpp"
#include "modsep/corpus.hpp"
#include "modsep/experiment.hpp"
#include "modsep/graph_io.hpp"

using namespace modsep;
namespace fs = std::filesystem;

namespace {

struct CliResult {
    int code = -1;
    std::string out;
    std::string err;
};

CliResult cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch_dir() {
    static const fs::path dir = [] {
        auto p = fs::temp_directory_path() /
                 ("modsep-cli-test-" + std::to_string(::getpid()));
        fs::create_directories(p);
        return p;
    }();
    return dir;
}

fs::path write_file(const std::string& name, const std::string& content) {
    const fs::path p = scratch_dir() / name;
    std::ofstream f(p);
    f << content;
    return p;
}

fs::path dumbbell_file() {
    static const fs::path p = [] {
        const fs::path path = scratch_dir() / "dumbbell.txt";
        save_graph_file(dumbbell(), path.string(), GraphFormat::edge_list);
        return path;
    }();
    return p;
}

fs::path two_triangles_file() {
    static const fs::path p = [] {
        const fs::path path = scratch_dir() / "two-triangles.txt";
        save_graph_file(two_triangles(), path.string(), GraphFormat::edge_list);
        return path;
    }();
    return p;
}

// value of a "key value" line, or empty
std::string field(const std::string& text, const std::string& key) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind(key + " ", 0) == 0) return line.substr(key.size() + 1);
    }
    return {};
}

std::string strip_last_column(const std::string& csv) {
    std::istringstream in(csv);
    std::string line, out;
    while (std::getline(in, line)) {
        const auto comma = line.rfind(',');
        out += line.substr(0, comma);
        out += '\n';
    }
    return out;
}

}  // namespace

TEST_CASE("help and usage errors") {
    CHECK(cli({"--help"}).code == 0);
    const auto help = cli({"--help"});
    CHECK(help.out.find("generate") != std::string::npos);
    CHECK(help.out.find("verify") != std::string::npos);

    CHECK(cli({}).code == 2);
    CHECK(cli({"frobnicate"}).code == 2);
    CHECK(cli({"generate"}).code == 2);                    // missing args
    CHECK(cli({"generate", "star"}).code == 2);            // missing size
    CHECK(cli({"generate", "nosuch", "5"}).code == 2);     // bad family
    CHECK(cli({"verify", "nosuch"}).code == 2);            // bad suite
}

TEST_CASE("generate writes a parseable graph") {
    const fs::path p = scratch_dir() / "star5.txt";
    const auto res = cli({"generate", "star", "5", "--out", p.string()});
    CHECK(res.code == 0);
    CHECK(res.out == "n 6 m 5 max_degree 5\n");
    CHECK(res.err.empty());
    const Graph g = load_graph_file(p.string(), GraphFormat::edge_list);
    CHECK(g.vertex_count() == 6);
    CHECK(g.max_degree() == 5);
}

TEST_CASE("generate to stdout keeps stats on stderr") {
    const auto res = cli({"generate", "path", "3"});
    CHECK(res.code == 0);
    CHECK(res.out == "0 1\n1 2\n");
    CHECK(res.err == "n 3 m 2 max_degree 2\n");
}

TEST_CASE("generate metis format") {
    const fs::path p = scratch_dir() / "cycle4.metis";
    CHECK(cli({"generate", "cycle", "4", "--format", "metis", "--out",
               p.string()}).code == 0);
    const Graph g = load_graph_file(p.string(), GraphFormat::metis);
    CHECK(g.edge_count() == 4);
    CHECK(cli({"generate", "cycle", "4", "--format", "dot"}).code == 2);
}

TEST_CASE("score a given partition") {
    const auto part = write_file("db-part.txt", "0 0 0\n1 1 1\n");
    const auto res =
        cli({"score", dumbbell_file().string(), "--partition", part.string()});
    CHECK(res.code == 0);
    CHECK(field(res.out, "blocks") == "2");
    CHECK(std::stod(field(res.out, "score")) ==
          doctest::Approx(5.0 / 14.0).epsilon(1e-15));

    const auto bad = write_file("short-part.txt", "0 0 0 1\n");
    CHECK(cli({"score", dumbbell_file().string(), "--partition",
               bad.string()}).code == 2);
    CHECK(cli({"score", dumbbell_file().string(), "--partition",
               (scratch_dir() / "missing.txt").string()}).code == 2);
    CHECK(cli({"score", dumbbell_file().string()}).code == 2);
}

TEST_CASE("oracle finds the exact optimum") {
    const auto res = cli({"oracle", two_triangles_file().string()});
    CHECK(res.code == 0);
    CHECK(field(res.out, "enumerated") == "203");
    CHECK(field(res.out, "score_num") == "72");
    CHECK(field(res.out, "score_den") == "144");
    CHECK(field(res.out, "score") == "0.5");
    CHECK(field(res.out, "partition") == "0 0 0 1 1 1");

    CHECK(cli({"oracle", two_triangles_file().string(), "--max-n", "4"}).code == 2);
    CHECK(cli({"oracle", (scratch_dir() / "nofile").string()}).code == 2);
}

TEST_CASE("bound reports a certified score") {
    const auto res = cli({"bound", dumbbell_file().string(), "--epsilon", "0.5"});
    CHECK(res.code == 0);
    CHECK(field(res.out, "n") == "6");
    CHECK(field(res.out, "m") == "7");
    CHECK(field(res.out, "spectral_converged") == "1");
    CHECK(std::stod(field(res.out, "score")) <= 5.0 / 14.0 + 1e-12);
    CHECK(std::stod(field(res.out, "identity_gap")) <= 1e-12);

    const auto audited = cli({"bound", dumbbell_file().string(), "--epsilon",
                              "0.5", "--audit"});
    CHECK(audited.code == 0);
    CHECK(field(audited.out, "audit_passed") == "1");
    CHECK(audited.out.find("audit partition-validity pass") != std::string::npos);
}

TEST_CASE("bound output is byte deterministic") {
    const std::vector<std::string> args = {"bound", dumbbell_file().string(),
                                           "--epsilon", "0.3", "--seed", "5"};
    const auto a = cli(args);
    const auto b = cli(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.err == b.err);
}

TEST_CASE("partition emits a JSON report") {
    const auto res = cli({"partition", dumbbell_file().string(), "--epsilon",
                          "0.5", "--audit"});
    CHECK(res.code == 0);
    const auto j = nlohmann::json::parse(res.out);
    CHECK(j["schema"] == "modsep-partition-v1");
    CHECK(j["n"] == 6);
    CHECK(j["m"] == 7);
    CHECK(j["audit"]["passed"] == true);
    CHECK(j["all_spectral_converged"] == true);
    std::vector<bool> seen(6, false);
    for (const auto& block : j["blocks"])
        for (int v : block) seen[static_cast<std::size_t>(v)] = true;
    for (bool s : seen) CHECK(s);
    CHECK(j["trace"].size() >= 1);
    CHECK(j["ledger"]["step_limit"] == 3);

    const fs::path out_path = scratch_dir() / "report.json";
    const auto to_file = cli({"partition", dumbbell_file().string(), "--epsilon",
                              "0.5", "--out", out_path.string()});
    CHECK(to_file.code == 0);
    std::ifstream f(out_path);
    std::stringstream buf;
    buf << f.rdbuf();
    const auto j2 = nlohmann::json::parse(buf.str());
    CHECK(j2["schema"] == "modsep-partition-v1");
    CHECK_FALSE(j2.contains("audit"));
}

TEST_CASE("experiment prints versioned CSV") {
    const auto res = cli({"experiment", "--family", "path", "--sizes", "8,16",
                          "--epsilon", "0.2"});
    CHECK(res.code == 0);
    std::istringstream in(res.out);
    std::string header;
    std::getline(in, header);
    CHECK(header == kExperimentCsvHeader);
    int rows = 0;
    std::string line;
    while (std::getline(in, line)) {
        ++rows;
        CHECK(line.rfind("path,", 0) == 0);
    }
    CHECK(rows == 2);

    CHECK(cli({"experiment", "--family", "path"}).code == 2);  // sizes required
    CHECK(cli({"experiment", "--family", "nosuch", "--sizes", "4"}).code == 2);
}

TEST_CASE("experiment is deterministic apart from wall time") {
    const std::vector<std::string> args = {"experiment", "--family", "cycle",
                                           "--sizes",     "12,24",   "--epsilon",
                                           "0.2,0.4",     "--seed",  "3"};
    const auto a = cli(args);
    const auto b = cli(args);
    CHECK(a.code == 0);
    CHECK(strip_last_column(a.out) == strip_last_column(b.out));
}

TEST_CASE("verify suite runs end to end") {
    const auto res = cli({"verify", "lambda-order"});
    CHECK(res.code == 0);
    CHECK(res.out.find("lambda-order:") != std::string::npos);
    CHECK(res.out.find("0 failures") != std::string::npos);
    CHECK(res.out.find("PASS") != std::string::npos);
}
