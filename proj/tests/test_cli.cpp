#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "sbd/sbd.hpp"

using namespace sbd;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int code;
    std::string out, err;
};

RunResult run_tool(const fs::path& dir, const std::string& args) {
    fs::path out = dir / "stdout.txt";
    fs::path err = dir / "stderr.txt";
    std::string cmd = std::string(SBDTOOL_PATH) + " " + args + " >" + out.string() + " 2>" +
                      err.string();
    int status = std::system(cmd.c_str());
    auto slurp = [](const fs::path& p) {
        std::ifstream in(p);
        return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    };
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, slurp(out), slurp(err)};
}

fs::path fresh_dir(const char* tag) {
    fs::path dir = fs::temp_directory_path() / (std::string("sbd_cli_") + tag);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

void write_file(const fs::path& p, const std::string& text) {
    std::ofstream out(p);
    out << text;
}

} // namespace

TEST_CASE("decompose emits the worked-example document") {
    auto dir = fresh_dir("decompose");
    write_file(dir / "cfg.json", R"({"family":"vandermonde","nodes":["1","2","4"]})");
    auto res = run_tool(dir, "decompose " + (dir / "cfg.json").string() + " --out " +
                                 (dir / "sbd.json").string());
    REQUIRE(res.code == 0);
    Json doc = read_json_file(dir / "sbd.json");
    CHECK(doc.at("B") == Json::parse(R"([["1","1","1"],["1","1","2"],["1","1","1"]])"));
    CHECK(doc.at("C") == Json::parse(
                             R"([["1","1","1","1"],["1","1","1","1"],["1","1","1","1"],["1","2","3","1"]])"));
    CHECK(doc.at("scalar") == "rational");

    // the emitted file is self-consistent
    auto chk = run_tool(dir, "check-file " + (dir / "sbd.json").string());
    CHECK(chk.code == 0);

    // reconstruct through the CLI reproduces the dense matrix
    auto rec = run_tool(dir, "reconstruct " + (dir / "sbd.json").string());
    REQUIRE(rec.code == 0);
    Json m = Json::parse(rec.out);
    CHECK(m.at("entries") == Json::parse(R"([["1","1","1"],["1","2","4"],["1","4","16"]])"));
}

TEST_CASE("decompose --fix-corner normalizes every stored corner entry") {
    auto dir = fresh_dir("fixcorner");
    write_file(dir / "cfg.json", R"({"family":"vandermonde","nodes":["1/2","2","3"]})");
    auto res = run_tool(dir, "decompose " + (dir / "cfg.json").string() + " --fix-corner --out " +
                                 (dir / "sbd.json").string());
    REQUIRE(res.code == 0);
    Json doc = read_json_file(dir / "sbd.json");
    CHECK(doc.at("transform") == "fix-corner");
    Document parsed = document_from_json(doc);
    auto fseq = sbd_expand(materialize_sbd<Rational>(parsed));
    for (const auto& f : fseq.factors)
        if (f.kind != FactorKind::diagonal) CHECK(f.d(3) == 1);
    // still reconstructs the same matrix
    CHECK(reconstruct(fseq) == dense_matrix<Rational>(parsed.config));
    auto chk = run_tool(dir, "check-file " + (dir / "sbd.json").string());
    CHECK(chk.code == 0);
}

TEST_CASE("strict-mode violations exit 2 and name the domain") {
    auto dir = fresh_dir("strict");
    write_file(dir / "cfg.json",
               R"({"family":"q_bernstein_vandermonde","nodes":["1/2","1"],"q":"1/2"})");
    auto res = run_tool(dir, "decompose " + (dir / "cfg.json").string());
    CHECK(res.code == 2);
    CHECK(res.err.find("[0,1)") != std::string::npos);
    // permissive mode accepts the same config
    auto ok = run_tool(dir, "decompose " + (dir / "cfg.json").string() + " --permissive");
    CHECK(ok.code == 0);
}

TEST_CASE("verify passes a healthy config and writes a report") {
    auto dir = fresh_dir("verify");
    write_file(dir / "cfg.json", R"({
        "family": "q_bernstein_vandermonde",
        "nodes": ["0", "0.125", "0.125", "0.5", "0.75"],
        "q": "0.5"
    })");
    auto res = run_tool(dir, "verify " + (dir / "cfg.json").string() + " --trials 100 --seed 1" +
                                 " --out " + (dir / "report.json").string());
    REQUIRE(res.code == 0);
    Json report = read_json_file(dir / "report.json");
    CHECK(report.contains("max_rel_error_B"));
    CHECK(report.contains("max_rel_error_C"));
    CHECK(report.at("n") == 5);
    CHECK(report.at("seed") == 1);
    CHECK(res.err.find("PASS") != std::string::npos);
}

TEST_CASE("check-file flags a corrupted document") {
    auto dir = fresh_dir("corrupt");
    write_file(dir / "cfg.json", R"({"family":"vandermonde","nodes":["1","2","4"]})");
    auto res = run_tool(dir, "decompose " + (dir / "cfg.json").string() + " --out " +
                                 (dir / "sbd.json").string());
    REQUIRE(res.code == 0);
    Json doc = read_json_file(dir / "sbd.json");
    doc["B"][2][1] = "7/3"; // hand-corrupt one entry
    write_json_atomic(dir / "sbd.json", doc);
    auto chk = run_tool(dir, "check-file " + (dir / "sbd.json").string());
    CHECK(chk.code == 1);
}

TEST_CASE("rank prints exact ranks") {
    auto dir = fresh_dir("rank");
    write_file(dir / "ones.json", R"({"family":"vandermonde","nodes":["1","1","1"]})");
    auto res = run_tool(dir, "rank " + (dir / "ones.json").string());
    REQUIRE(res.code == 0);
    CHECK(res.out == "1\n");
    write_file(dir / "distinct.json", R"({"family":"vandermonde","nodes":["1","2","4"]})");
    res = run_tool(dir, "rank " + (dir / "distinct.json").string());
    CHECK(res.out == "3\n");
}

TEST_CASE("scaled variant emits a factor document for the rational family") {
    auto dir = fresh_dir("scaled");
    write_file(dir / "cfg.json", R"({
        "family": "rational_bernstein_vandermonde",
        "nodes": ["1/4", "1/2"],
        "weights": ["1", "2"]
    })");
    auto res = run_tool(dir, "decompose " + (dir / "cfg.json").string() +
                                 " --variant scaled --out " + (dir / "factors.json").string());
    REQUIRE(res.code == 0);
    Json doc = read_json_file(dir / "factors.json");
    CHECK(doc.at("schema") == "sbd-factors/1");
    auto chk = run_tool(dir, "check-file " + (dir / "factors.json").string());
    CHECK(chk.code == 0);
    auto rec = run_tool(dir, "reconstruct " + (dir / "factors.json").string());
    REQUIRE(rec.code == 0);
    Document parsed = document_from_json(doc);
    Json m = Json::parse(rec.out);
    auto dense = dense_matrix<Rational>(parsed.config);
    CHECK(m.at("entries")[0][0] == canonical(dense(1, 1)));

    // the scaled variant is specific to the rational family
    write_file(dir / "v.json", R"({"family":"vandermonde","nodes":["1","2"]})");
    auto bad = run_tool(dir, "decompose " + (dir / "v.json").string() + " --variant scaled");
    CHECK(bad.code == 2);
}

TEST_CASE("usage errors exit 2") {
    auto dir = fresh_dir("usage");
    auto res = run_tool(dir, "decompose " + (dir / "missing.json").string());
    CHECK(res.code == 2);
    auto none = run_tool(dir, "");
    CHECK(none.code == 2);
    auto badflag = run_tool(dir, "rank --frobnicate");
    CHECK(badflag.code == 2);
}

TEST_CASE("binary64 pipeline through the CLI") {
    auto dir = fresh_dir("f64");
    write_file(dir / "cfg.json", R"({
        "family": "h_bernstein_vandermonde",
        "nodes": ["0", "0.25", "0.5"],
        "h": "0.5"
    })");
    auto res = run_tool(dir, "decompose " + (dir / "cfg.json").string() + " --scalar f64 --out " +
                                 (dir / "sbd.json").string());
    REQUIRE(res.code == 0);
    Json doc = read_json_file(dir / "sbd.json");
    CHECK(doc.at("scalar") == "binary64");
    auto chk = run_tool(dir, "check-file " + (dir / "sbd.json").string());
    CHECK(chk.code == 0);
}
