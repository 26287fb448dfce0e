#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "fqgraphs/cli.hpp"

using namespace fqg;

namespace {

struct CliRun {
    int exit_code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    args.insert(args.begin(), "fqgraphs");
    std::ostringstream out, err;
    int rc = run_cli(args, out, err);
    return {rc, out.str(), err.str()};
}

} // namespace

TEST_CASE("field command prints a context summary") {
    CliRun r = run({"field", "--p", "3", "--r", "2", "--no-meta"});
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["field"]["q"] == 9);
    CHECK(j["field"]["modulus"] == json::array({1, 0, 1}));
    CHECK_FALSE(j.contains("meta"));
}

TEST_CASE("field command rejects a composite characteristic with exit 2") {
    CliRun r = run({"field", "--p", "4", "--r", "1"});
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("not prime") != std::string::npos);
}

TEST_CASE("form command emits the sphere table") {
    CliRun r = run({"form", "--q", "5", "--kind", "plus_even", "--dim", "2", "--no-meta"});
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["form"]["sphere_sizes"] == json::array({9, 4, 4, 4, 4}));
    CHECK(j["form"]["rank"] == 2);
}

TEST_CASE("graph command builds and certifies") {
    CliRun r = run({"graph", "--family", "euclidean", "--q", "5", "--d", "2", "--kind", "plus_even", "--a",
                    "1", "--certify", "--no-meta"});
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["graph"]["n"] == 25);
    CHECK(j["certificate"]["pass"] == true);
    CHECK(j["certificate"]["bound_formula"] == "2*q^((d-1)/2)");
}

TEST_CASE("graph command: bch k=3 is the 64-vertex 7-regular graph") {
    CliRun r = run({"graph", "--family", "bch", "--k", "3", "--no-meta"});
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["graph"]["n"] == 64);
    CHECK(j["graph"]["edges"].size() == 64 * 7 / 2);
}

TEST_CASE("graph command reports ceiling violations as parameter errors") {
    CliRun r = run({"graph", "--family", "euclidean", "--q", "13", "--d", "2", "--a", "1", "--ceiling", "100"});
    CHECK(r.exit_code == 2);
}

TEST_CASE("halfplane graph certificate matches the stated triple") {
    CliRun r = run({"graph", "--family", "halfplane", "--q", "7", "--a", "1", "--certify", "--no-meta"});
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["graph"]["n"] == 42);
    CHECK(j["certificate"]["d"] == 8);
    CHECK(j["certificate"]["pass"] == true);
}

TEST_CASE("ramsey command: witness and congruence error") {
    CliRun ok = run({"ramsey", "--q", "17", "--no-meta"});
    REQUIRE(ok.exit_code == 0);
    json j = json::parse(ok.out);
    CHECK(j["witness"]["n"] == 289);
    CHECK(j["witness"]["triangle_count"] == 0);

    CliRun bad = run({"ramsey", "--q", "13"});
    CHECK(bad.exit_code == 2);

    CliRun exact = run({"ramsey", "--q", "5", "--exact-alpha", "--no-meta"});
    REQUIRE(exact.exit_code == 0);
    json je = json::parse(exact.out);
    CHECK(je["witness"]["alpha_kind"] == "exact");
    CHECK(je["witness"]["alpha_value"] == 10.0);
}

TEST_CASE("distance command: exhaustive golden table and experiments") {
    CliRun gold = run({"distance", "--space", "halfplane", "--q", "5", "--exhaustive", "--max-size", "4"});
    REQUIRE(gold.exit_code == 0);
    CHECK(gold.out.substr(0, gold.out.find('\n')) == "space,q,d,kind,size,subsets,min_delta,max_delta");
    CHECK(gold.out.find("halfplane,5,2,poincare,4,4845,") != std::string::npos);

    CliRun exp = run({"distance", "--q", "5", "--d", "2", "--kind", "plus_even", "--sizes", "5,25",
                      "--trials", "4", "--seed", "9"});
    REQUIRE(exp.exit_code == 0);
    CHECK(std::count(exp.out.begin(), exp.out.end(), '\n') == 9); // header + 8 rows

    CliRun missing = run({"distance", "--q", "5"});
    CHECK(missing.exit_code == 2);
}

TEST_CASE("distance command reads a JSON config file") {
    std::string path = "/tmp/fqgraphs_test_config.json";
    {
        std::ofstream cfg(path);
        cfg << R"({"space":"euclidean","q":3,"d":2,"kind":"minus_even","sizes":[3,9],"trials":2,"seed":4})";
    }
    CliRun r = run({"distance", "--config", path, "--format", "json", "--no-meta"});
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["config"]["q"] == 3);
    CHECK(j["rows"].size() == 4);
}

TEST_CASE("identical invocation and seed give byte-identical output") {
    std::vector<std::string> args = {"distance", "--q", "7", "--d", "2", "--kind", "minus_even",
                                     "--sizes", "10,20", "--trials", "6", "--seed", "11"};
    CliRun a = run(args);
    CliRun b = run(args);
    CHECK(a.out == b.out);
    args.back() = "12"; // different seed
    CliRun c = run(args);
    CHECK(a.out != c.out);
}

TEST_CASE("suite --list enumerates the criteria") {
    CliRun r = run({"suite", "--list"});
    REQUIRE(r.exit_code == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 12);
    CHECK(r.out.find("valency_reproduction") != std::string::npos);
    CHECK(r.out.find("determinism_runtime") != std::string::npos);
}

TEST_CASE("suite runs a single fast criterion") {
    CliRun r = run({"suite", "--only", "3"});
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("PASS  3") != std::string::npos);
}

TEST_CASE("suite with injected adjacency corruption fails with exit 1") {
    CliRun r = run({"suite", "--only", "1", "--inject-corruption"});
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("FAIL") != std::string::npos);
}

TEST_CASE("graph --adjlist writes the text format") {
    std::string path = "/tmp/fqgraphs_test_adj.txt";
    CliRun r = run({"graph", "--family", "euclidean", "--q", "3", "--d", "2", "--kind", "plus_even", "--a",
                    "1", "--adjlist", path, "--no-meta"});
    REQUIRE(r.exit_code == 0);
    std::ifstream in(path);
    std::string first;
    std::getline(in, first);
    CHECK(first.substr(0, 2) == "0:");
}

TEST_CASE("unknown family is a usage error") {
    CliRun r = run({"graph", "--family", "moebius", "--q", "5"});
    CHECK(r.exit_code == 2);
}
