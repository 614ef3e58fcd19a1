#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "czsynth/formats.hpp"
#include "test_util.hpp"

using namespace czsynth;
using testutil::random_graph;

TEST_CASE("graph format round-trip") {
    std::mt19937_64 rng(91);
    for (int t = 0; t < 50; ++t) {
        Graph g = random_graph(1 + rng() % 12, rng);
        std::ostringstream out;
        write_graph(out, g);
        std::istringstream in(out.str());
        CHECK(read_graph(in) == g);
    }
}

TEST_CASE("graph format accepts comments and blank lines") {
    std::istringstream in("# header\n3\n\n0 1\n# middle\n1 2\n");
    Graph g = read_graph(in);
    CHECK(g.n() == 3);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 2));
    CHECK(g.edge_count() == 2);
}

TEST_CASE("graph format rejects malformed input") {
    auto reject = [](const std::string& s) {
        std::istringstream in(s);
        CHECK_THROWS_AS(read_graph(in), parse_error);
    };
    reject("");
    reject("x\n");
    reject("3\n1 0\n");     // u >= v
    reject("3\n0 0\n");     // loop
    reject("3\n0 3\n");     // out of range
    reject("3\n0 1\n0 1\n"); // duplicate
    reject("3\n0 1 2\n");   // extra token
}

TEST_CASE("interval file parsing") {
    std::istringstream in("# comment\n1 3 8\n0 1 4\n2 9 10\n");
    IntervalSystem sys = read_intervals(in, 3);
    CHECK(sys.at(0).left == 1);
    CHECK(sys.at(0).right == 4);
    CHECK(sys.at(1).left == 3);

    std::istringstream missing("0 1 4\n");
    CHECK_THROWS_AS(read_intervals(missing, 2), parse_error);
    std::istringstream dup("0 1 4\n0 5 6\n");
    CHECK_THROWS_AS(read_intervals(dup, 1), parse_error);
    std::istringstream shared("0 1 4\n1 4 6\n");
    CHECK_THROWS_AS(read_intervals(shared, 2), parse_error);
}

TEST_CASE("contraction file parsing") {
    std::istringstream in("0 1\n0 2\n");
    ContractionSequence cs = read_contractions(in, 3);
    CHECK(cs.merges.size() == 2);
    CHECK(cs.merges[0] == std::make_pair<std::size_t, std::size_t>(0, 1));

    std::istringstream toofew("0 1\n");
    CHECK_THROWS_AS(read_contractions(toofew, 3), parse_error);
    std::istringstream self("0 0\n1 2\n");
    CHECK_THROWS_AS(read_contractions(self, 3), parse_error);
}

TEST_CASE("cut file parsing") {
    std::istringstream in("0 2 3\n");
    VertexSet x = read_cut(in, 5);
    CHECK(x.count() == 3);
    CHECK(x.test(0));
    CHECK(x.test(2));
    CHECK(x.test(3));

    std::istringstream bad("0 9\n");
    CHECK_THROWS_AS(read_cut(bad, 5), parse_error);
}

TEST_CASE("ops json round-trip") {
    OperationSequence seq(4);
    seq.push_lc(2);
    seq.push_toggle(0, 3);
    seq.push_lc(1);
    nlohmann::json j = ops_to_json(seq);
    CHECK(j["n"] == 4);
    CHECK(j["ops"].size() == 3);
    CHECK(j["ops"][0]["op"] == "LC");
    CHECK(j["ops"][1]["op"] == "CZ");
    OperationSequence back = ops_from_json(j);
    CHECK(back.n == seq.n);
    CHECK(back.ops == seq.ops);

    CHECK_THROWS_AS(ops_from_json(nlohmann::json{{"n", 2}}), parse_error);
    CHECK_THROWS_AS(
        ops_from_json(nlohmann::json{{"n", 2},
                                     {"ops", {{{"op", "XX"}, {"v", 0}}}}}),
        parse_error);
}

TEST_CASE("gates json round-trip") {
    GateList gl(3);
    gl.gates.push_back(Gate::h(0));
    gl.gates.push_back(Gate::s(1));
    gl.gates.push_back(Gate::cz(0, 2));
    nlohmann::json j = gates_to_json(gl);
    REQUIRE(j.is_array());
    CHECK(j.size() == 3);
    CHECK(j[2]["g"] == "CZ");
    GateList back = gates_from_json(j, 3);
    CHECK(back.gates == gl.gates);

    CHECK_THROWS_AS(gates_from_json(j, 2), parse_error); // qubit out of range
    nlohmann::json badkind = nlohmann::json::array({{{"g", "T"}, {"q", 0}}});
    CHECK_THROWS_AS(gates_from_json(badkind, 3), parse_error);
}

TEST_CASE("read_file reports missing files") {
    CHECK_THROWS_AS(read_graph_file("/nonexistent/path/graph.txt"), parse_error);
    CHECK_THROWS_AS(read_json_file("/nonexistent/path/ops.json"), parse_error);
}
