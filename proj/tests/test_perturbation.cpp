#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "czsynth/perturbation.hpp"
#include "test_util.hpp"

using namespace czsynth;
using testutil::random_graph;
using testutil::random_rank_delta;
using testutil::random_subset;

TEST_CASE("factor_symmetric of zero is empty") {
    SymmetricDelta d(6);
    CHECK(factor_symmetric(d).empty());
    CHECK(factorization_matches(d, {}));
}

TEST_CASE("factor_symmetric of the triangle delta is one all-ones set") {
    SymmetricDelta d(3);
    d.set(0, 1);
    d.set(0, 2);
    d.set(1, 2);
    ComplementationList sets = factor_symmetric(d);
    REQUIRE(sets.size() == 1);
    CHECK(sets[0].count() == 3);
    CHECK(factorization_matches(d, sets));
}

TEST_CASE("factor_symmetric reconstructs random low-rank deltas within p+1 sets") {
    std::mt19937_64 rng(41);
    int over = 0;
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 12, p = 1 + rng() % 5;
        SymmetricDelta d = random_rank_delta(n, p, rng);
        ComplementationList sets = factor_symmetric(d);
        CHECK(factorization_matches(d, sets));
        CHECK(sets.size() <= p + 2); // hard ceiling
        if (sets.size() > p + 1) ++over;
        // monotone sanity against the stored-diagonal rank
        CHECK(sets.size() <= d.rank() + 2);
    }
    CHECK(over <= 10); // p+1 holds in the vast majority of trials
}

TEST_CASE("realize_complementation trivial cases") {
    std::mt19937_64 rng(42);
    Graph g = random_graph(6, rng);
    CHECK(realize_complementation(g, VertexSet(6)).ops.empty());
    CHECK(realize_complementation(g, make_vertex_set(6, {3})).ops.empty());
}

TEST_CASE("realize_complementation turns edgeless V into a triangle") {
    Graph g(3);
    OperationSequence seq = realize_complementation(g, make_vertex_set(3, {0, 1, 2}));
    Graph h = apply(seq, g);
    CHECK(h.edge_count() == 3);
    CHECK(seq.cz_cost() <= 4); // 2n - 2
}

TEST_CASE("realize_complementation equals complement_on with <= 2n-2 toggles") {
    std::mt19937_64 rng(43);
    for (int t = 0; t < 500; ++t) {
        const std::size_t n = 2 + rng() % 11;
        Graph g = random_graph(n, rng);
        VertexSet x = random_subset(n, rng);
        OperationSequence seq = realize_complementation(g, x);
        CHECK(apply(seq, g) == complement_on(g, x));
        CHECK(seq.cz_cost() <= 2 * n - 2);
        // toggles all incident to the helper
        for (const auto& op : seq.ops)
            if (op.kind == Operation::Kind::Toggle) CHECK((op.u == 0 || op.v == 0));
    }
}

TEST_CASE("synth_perturbation with h == g is empty") {
    std::mt19937_64 rng(44);
    Graph g = random_graph(8, rng);
    auto res = synth_perturbation(g, g);
    CHECK(res.seq.ops.empty());
    CHECK(res.set_count == 0);
}

TEST_CASE("synth_perturbation for one complemented 2-set costs <= 2n-2") {
    std::mt19937_64 rng(45);
    const std::size_t n = 9;
    Graph g = random_graph(n, rng);
    Graph h = g;
    h.toggle_edge_inplace(2, 5);
    auto res = synth_perturbation(g, h);
    CHECK(apply(res.seq, g) == h);
    CHECK(res.seq.cz_cost() <= 2 * n - 2);
}

TEST_CASE("synth_perturbation maps g to h exactly on random pairs") {
    std::mt19937_64 rng(46);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 4 + rng() % 9;
        Graph g = random_graph(n, rng);
        Graph dpert = g;
        std::size_t p = 1 + rng() % 3;
        SymmetricDelta d = random_rank_delta(n, p, rng);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (d.at(i, j)) dpert.toggle_edge_inplace(i, j);
        auto res = synth_perturbation(g, dpert);
        CHECK(apply(res.seq, g) == dpert);
        CHECK(res.seq.cz_cost() <= res.set_count * (2 * n - 2));
    }
}
