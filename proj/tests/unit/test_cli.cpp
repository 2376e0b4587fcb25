#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fixtures.hpp"
#include "hubrank_cli/cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    args.insert(args.begin(), "hubrank");
    std::ostringstream out, err;
    const int code = hubrank::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const char* name)
{
    return (hubrank::testing::data_dir() / name).string();
}

std::vector<std::string> lines(const std::string& s)
{
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string line; std::getline(in, line);) {
        out.push_back(line);
    }
    return out;
}

} // namespace

TEST_CASE("rank prints node,score,rank in the input's index base")
{
    const Result r = run({"rank", "--input", data("example1.txt"), "--method", "exp-exact", "--side", "hub"});
    REQUIRE(r.code == 0);
    const auto l = lines(r.out);
    REQUIRE(l.size() == 5);
    CHECK(l[0] == "node,score,rank");
    CHECK(l[1] == "1,2.3319,1");
    CHECK(l[2] == "3,2.2812,2");
    CHECK(l[3] == "2,2.2289,3");
    CHECK(l[4] == "4,1.6414,4");

    const Result zero = run({"rank", "--input", data("example1.txt"), "--method", "degree", "--base", "1"});
    CHECK(zero.code == 0);
}

TEST_CASE("degree authorities of example 3 with ties sharing a rank")
{
    const Result r = run({"rank", "--input", data("example3.txt"), "--method", "degree", "--side", "authority"});
    REQUIRE(r.code == 0);
    const auto l = lines(r.out);
    CHECK(l[1] == "1,4.0000,1");
    CHECK(l[2] == "2,1.0000,2");
    CHECK(l[5] == "5,1.0000,2");
    CHECK(l[6] == "6,0.0000,6");
}

TEST_CASE("matrix market input, --top and --precision full")
{
    const Result r = run({"rank", "--input", data("example1.mtx"), "--method", "exp-exact", "--side", "authority",
                          "--top", "2", "--precision", "full"});
    REQUIRE(r.code == 0);
    const auto l = lines(r.out);
    REQUIRE(l.size() == 3);
    CHECK(l[1].rfind("2,3.0208", 0) == 0);
    CHECK(l[1].size() > std::string("2,3.0209,1").size());
}

TEST_CASE("JSON and CSV carry the same numbers")
{
    const std::vector<std::string> base{"rank", "--input", data("example1.txt"), "--method", "hits",
                                        "--precision", "full"};
    const Result csv = run(base);
    auto with_json = base;
    with_json.push_back("--json");
    const Result js = run(with_json);
    REQUIRE(csv.code == 0);
    REQUIRE(js.code == 0);
    const auto j = nlohmann::json::parse(js.out);
    CHECK(j["method"] == "hits");
    CHECK(j["side"] == "hub");
    CHECK(j["diagnostics"]["converged"] == true);
    const auto l = lines(csv.out);
    for (std::size_t r = 0; r < 4; ++r) {
        const auto& row = j["rows"][r];
        std::ostringstream expected;
        expected << row["node"].get<int>() << ',';
        const std::string field = l[r + 1].substr(expected.str().size());
        const std::string score = field.substr(0, field.find(','));
        CHECK(std::stod(score) == row["score"].get<double>());
    }
}

TEST_CASE("output does not depend on the thread count")
{
    const std::vector<std::string> base{"rank", "--input", data("example1.txt"), "--method", "exp-quad",
                                        "--precision", "full", "--json"};
    auto threaded = base;
    threaded.insert(threaded.end(), {"--threads", "3"});
    CHECK(run(base).out == run(threaded).out);
}

TEST_CASE("topk subcommand")
{
    const Result r = run({"topk", "--input", data("example3.txt"), "--k", "1", "--side", "hub"});
    REQUIRE(r.code == 0);
    const auto l = lines(r.out);
    CHECK(l.back() == "6,3.7622,1,3.7622,3.7622,2,true");
    CHECK(r.out.find("# certified: true") != std::string::npos);

    const Result a = run({"topk", "--input", data("example1.txt"), "--k", "2", "--side", "authority", "--json"});
    REQUIRE(a.code == 0);
    const auto j = nlohmann::json::parse(a.out);
    CHECK(j["members"][0]["node"] == 2);
    CHECK(j["members"][1]["node"] == 3);
    CHECK(j["certified"] == true);
    CHECK(j["iterations_per_node"].size() == 4);

    const Result big = run({"topk", "--input", data("example1.txt"), "--k", "10"});
    CHECK(big.code == 2);
    CHECK(big.out.empty());
    CHECK(run({"topk", "--input", data("example1.txt")}).code == 2);
}

TEST_CASE("compare subcommand")
{
    const Result r = run({"compare", "--input", data("example1.txt"), "--method", "exp-exact", "--method", "hits",
                          "--side", "authority"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("kendall_tau_b,1.0000") != std::string::npos);
    CHECK(r.out.find("overlap_at_4,1.0000") != std::string::npos);
    CHECK(r.out.find("top_4_a,2 3 4 1") != std::string::npos);

    const Result self = run({"compare", "--input", data("example2.txt"), "--method", "katz", "--method", "katz",
                             "--json"});
    REQUIRE(self.code == 0);
    CHECK(nlohmann::json::parse(self.out)["kendall_tau_b"] == 1.0);

    const Result k = run({"compare", "--input", data("example1.txt"), "--method", "exp-exact", "--method", "katz",
                          "--json", "--ks", "1,2"});
    REQUIRE(k.code == 0);
    const auto j = nlohmann::json::parse(k.out);
    CHECK(j["overlap_at_k"].size() == 2);
    CHECK(j["overlap_at_k"][1]["top_a"].size() == 2);

    CHECK(run({"compare", "--input", data("example1.txt"), "--method", "hits"}).code == 2);
}

TEST_CASE("spectrum subcommand")
{
    const Result r = run({"spectrum", "--input", data("example2.txt"), "--json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["degenerate"] == true);
    CHECK(j["relative_gap"] == 0.0);

    const Result c = run({"spectrum", "--input", data("two_cycle.txt"), "--ritz", "2"});
    REQUIRE(c.code == 0);
    CHECK(c.out.find("sigma1,1.0000") != std::string::npos);
    CHECK(c.out.find("symmetry_fraction,1.0000") != std::string::npos);
    CHECK(c.out.find("ritz,") != std::string::npos);
}

TEST_CASE("exit codes and error reporting")
{
    const Result empty = run({"rank", "--input", data("empty.txt"), "--method", "degree"});
    CHECK(empty.code == 1);
    CHECK(empty.out.empty());
    CHECK_FALSE(empty.err.empty());

    const Result bad = run({"rank", "--input", data("malformed.txt"), "--method", "degree"});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("line 2") != std::string::npos);

    CHECK(run({"rank", "--input", data("missing.txt"), "--method", "degree"}).code == 1);
    CHECK(run({"rank", "--input", data("example1.txt"), "--method", "bogus"}).code == 2);
    CHECK(run({"rank", "--input", data("example1.txt"), "--method", "pagerank", "--alpha", "1.5"}).code == 2);
    CHECK(run({"rank", "--input", data("example1.txt"), "--method", "katz", "--c", "5"}).code == 2);
    CHECK(run({"rank", "--input", data("example1.txt"), "--method", "exp-exact", "--side", "both"}).code == 2);
    CHECK(run({"rank", "--input", data("example1.txt")}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);

    const Result degenerate = run({"rank", "--input", data("example2.txt"), "--method", "hits"});
    CHECK(degenerate.code == 0);
    CHECK(degenerate.err.find("degenerate") != std::string::npos);
}

TEST_CASE("--out writes the file and nothing to stdout")
{
    const auto path = std::filesystem::temp_directory_path() / "hubrank_cli_out.csv";
    const Result r = run({"rank", "--input", data("example1.txt"), "--method", "degree", "--out", path.string()});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::string first;
    std::getline(in, first);
    CHECK(first == "node,score,rank");
    std::filesystem::remove(path);
}
