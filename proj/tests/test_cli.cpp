#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "tgf/cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = tgf::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

tgf::Json parsed(const Result& r) { return tgf::Json::parse(r.out); }

std::filesystem::path temp_file(const std::string& name, const std::string& contents) {
    const auto p = std::filesystem::temp_directory_path() / name;
    std::ofstream(p) << contents;
    return p;
}

}  // namespace

TEST_CASE("tutte of a triangle") {
    const Result r = run({"tutte", "--family", "cycle:3"});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"coeffs\":[[0,1,\"1\"],[1,0,\"1\"],[2,0,\"1\"]]}\n");
    const Result v = run({"tutte", "--family", "cycle:3", "--x", "2", "--y", "3"});
    CHECK(parsed(v)["value"]["re"] == 9.0);
}

TEST_CASE("stats") {
    const tgf::Json j = parsed(run({"stats", "--family", "bouquet:2"}));
    CHECK(j["vertices"] == 1);
    CHECK(j["edges"] == 2);
    CHECK(j["components"] == 1);
    CHECK(j["rank"] == 0);
    CHECK(j["nullity"] == 2);
}

TEST_CASE("verify alon-tarsi on a triangle") {
    const Result r = run({"verify", "alon-tarsi", "--family", "cycle:3", "--q", "3"});
    CHECK(r.code == 0);
    const tgf::Json j = parsed(r);
    CHECK(j["identity"] == "alon-tarsi");
    CHECK(j["lhs"]["re"] == 6.0);
    CHECK(j["rhs"]["re"] == 6.0);
    CHECK(j["pass"] == true);
}

TEST_CASE("other verify identities pass") {
    const std::vector<std::vector<std::string>> cases = {
        {"verify", "tarsi", "--family", "complete:4", "--q", "3"},
        {"verify", "prop-constant", "--family", "cycle:3", "--q", "3", "--y", "0", "--w", "1"},
        {"verify", "coeff", "--family", "cycle:3", "--q", "4", "--s", "2", "--t", "1", "--seed", "9"},
        {"verify", "l2", "--family", "path:2", "--kernel", "petersen", "--q", "3"},
        {"verify", "l2-tutte", "--family", "cycle:3", "--kernel", "petersen", "--q", "3"},
        {"verify", "macwilliams", "--family", "path:1", "--q", "2", "--weights", "3,1"},
        {"verify", "penrose", "--family", "k4"},
        {"verify", "corpus", "--max-vertices", "2", "--max-edges", "3"},
        {"verify", "score-l2", "--family", "cycle:4"},
    };
    for (const auto& args : cases) {
        INFO(args[1]);
        const Result r = run(args);
        CHECK(r.code == 0);
        CHECK(r.err.empty());
    }
}

TEST_CASE("size guard exits with 2") {
    const Result r = run({"expand", "--family", "cycle:99", "--q", "5", "--g", "1,-1,0,0,0", "--s", "1", "--t", "1"});
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK_FALSE(r.err.empty());
}

TEST_CASE("input errors exit with 1") {
    CHECK(run({"tutte"}).code == 1);
    CHECK(run({"tutte", "--family", "nonsense:3"}).code == 1);
    CHECK(run({"expand", "--family", "cycle:3", "--q", "4", "--g", "1,2,3"}).code == 1);
    CHECK(run({"verify", "no-such-identity", "--family", "cycle:3"}).code == 1);
    CHECK(run({"verify", "penrose", "--family", "cycle:4"}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"tutte", "--graph", "/nonexistent/graph.txt"}).code == 1);
}

TEST_CASE("parse errors report the line") {
    const auto p = temp_file("tgf_cli_bad_graph.txt", "vertices 3\nedge 0 1\nedge 0 x\n");
    const Result r = run({"tutte", "--graph", p.string()});
    CHECK(r.code == 1);
    CHECK(r.err.find("line 3") != std::string::npos);
    std::filesystem::remove(p);
}

TEST_CASE("failed verification exits with 3") {
    // monochromial at a point where the tolerance is below double rounding.
    const Result r = run({"verify", "monochromial", "--family", "complete:4", "--q", "3", "--y", "0.1+0.7i", "--tol", "1e-300"});
    const tgf::Json j = parsed(r);
    if (j["abs_err"] == 0.0) {
        CHECK(r.code == 0);
    } else {
        CHECK(r.code == 3);
        CHECK(j["pass"] == false);
    }
}

TEST_CASE("graph files round-trip") {
    const tgf::Multigraph g(3, {{0, 1}, {1, 2}, {2, 0}, {1, 1}});
    const auto p = temp_file("tgf_cli_graph.txt", tgf::serialize(g));
    const Result a = run({"tutte", "--graph", p.string()});
    CHECK(a.code == 0);
    CHECK(parsed(a)["coeffs"] == tgf::to_json(tgf::tutte_dc(g)));
    CHECK(run({"tutte", "--graph", p.string(), "--family", "cycle:3"}).code == 1);
    std::filesystem::remove(p);
}

TEST_CASE("output file") {
    const auto p = std::filesystem::temp_directory_path() / "tgf_cli_out.json";
    const Result r = run({"tutte", "--family", "cycle:3", "--output", p.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(p);
    std::string text((std::istreambuf_iterator<char>(in)), {});
    CHECK(text == "{\"coeffs\":[[0,1,\"1\"],[1,0,\"1\"],[2,0,\"1\"]]}\n");
    std::filesystem::remove(p);
}

TEST_CASE("repeated runs are byte-identical") {
    const std::vector<std::string> args = {"verify", "l2", "--family", "complete:4", "--q", "3", "--s", "2", "--t", "1", "--seed", "42"};
    const Result a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(parsed(a)["seed"] == 42);
    const Result c = run({"verify", "corpus", "--max-vertices", "3", "--max-edges", "3", "--seed", "5"});
    CHECK(c.out == run({"verify", "corpus", "--max-vertices", "3", "--max-edges", "3", "--seed", "5"}).out);
}

TEST_CASE("other subcommands") {
    const tgf::Json c = parsed(run({"chromatic", "--family", "complete:4", "--q", "5"}));
    CHECK(c["tutte"] == "120");
    CHECK(c["brute_force"] == 120);
    const tgf::Json f = parsed(run({"flows", "--family", "cycle:3", "--q", "3"}));
    CHECK(f["count"] == 3);
    CHECK(f["hamming"] == tgf::Json::parse("[2,0,0,1]"));
    const tgf::Json t = parsed(run({"tensions", "--family", "path:1", "--q", "2"}));
    CHECK(t["count"] == 2);
    const tgf::Json e = parsed(run({"expand", "--family", "path:1", "--kernel", "petersen", "--q", "3"}));
    CHECK(e["l2_norm_sq"] == 2.0);
    CHECK(e["l0_norm"] == 2);
    const tgf::Json k = parsed(run({"coeff", "--family", "path:1", "--kernel", "petersen", "--q", "3", "--a", "1,0"}));
    CHECK(k["expansion"]["re"] == 1.0);
    CHECK(k["coset"]["re"] == 1.0);
    const tgf::Json l = parsed(run({"l2", "--family", "cycle:3", "--kernel", "petersen", "--q", "3"}));
    CHECK(l["l2_norm_sq"] == 6.0);
    CHECK(l["tutte_form"]["value"]["re"] == 6.0);
    const tgf::Json p = parsed(run({"potts", "--family", "cycle:3", "--q", "3", "--w", "1", "--y", "0"}));
    CHECK(p["partition"]["re"] == 6.0);
    const tgf::Json m = parsed(run({"potts", "--family", "cycle:3", "--q", "2", "--matrix", "2,1,1,2"}));
    CHECK(m["hamming_kernel"]["y"]["re"] == 2.0);
    CHECK(m["family_probe"]["consistent"] == true);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("the installed binary") {
    const char* path = std::getenv("TGF_CLI_PATH");
    if (!path) SKIP("TGF_CLI_PATH not set");
    const auto out = std::filesystem::temp_directory_path() / "tgf_cli_binary.json";
    const std::string base = std::string("\"") + path + "\" ";
    CHECK(std::system((base + "verify alon-tarsi --family cycle:3 --q 3 --output " + out.string()).c_str()) == 0);
    std::ifstream in(out);
    const tgf::Json j = tgf::Json::parse(in);
    CHECK(j["pass"] == true);
    const int guard = std::system((base + "expand --family cycle:99 --q 5 --g 1,-1,0,0,0 --s 1 --t 1 2>/dev/null").c_str());
    CHECK(WEXITSTATUS(guard) == 2);
    std::filesystem::remove(out);
}
