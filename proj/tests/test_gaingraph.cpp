#include <doctest.h>

#include <random>

#include "pgr/error.hpp"
#include "pgr/gain_graph.hpp"
#include "pgr/int_rank.hpp"
#include "support.hpp"

using namespace pgr;
using pgr::testing::fixture;
using pgr::testing::vid;

namespace {

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error thrown");
    return ErrorKind::MalformedInput;
}

}  // namespace

TEST_CASE("reversed edge with negated gain is identical") {
    GainGraph g(1, 2);
    g.add_edge(1, 0, {-1});
    CHECK(kind_of([&] { g.add_edge(0, 1, {1}); }) == ErrorKind::IdenticalEdge);
}

TEST_CASE("parallel edges with distinct gains are accepted") {
    GainGraph g(1, 2);
    g.add_edge(0, 1, {0});
    CHECK(g.add_edge(0, 1, {1}) == 1);
    CHECK(g.num_edges() == 2);
}

TEST_CASE("edge validation") {
    GainGraph g(2, 2);
    CHECK(kind_of([&] { g.add_edge(0, 0, {0, 0}); }) == ErrorKind::LoopEdge);
    CHECK(kind_of([&] { g.add_edge(0, 1, {1}); }) == ErrorKind::DimensionMismatch);
    CHECK(kind_of([&] { g.add_edge(0, 7, {0, 0}); }) == ErrorKind::UnknownVertex);
}

TEST_CASE("canonical orientation negates the gain") {
    GainGraph g(2, 2);
    const EdgeId e = g.add_edge(1, 0, {1, -2});
    CHECK(g.edge(e).tail == 0);
    CHECK(g.edge(e).head == 1);
    CHECK(g.edge(e).gain == GainVec{-1, 2});
    CHECK(g.gain_from(e, 1) == GainVec{1, -2});
    CHECK(g.find_edge(1, 0, {1, -2}) == e);
}

TEST_CASE("walk gains on the figure graphs") {
    const GainGraph b = fixture("fig1b.json").graph;
    // a -> b on the (0,0) edge, back to a on the (1,1) edge
    const Walk w{{vid(b, "a"), vid(b, "b"), vid(b, "a")}, {0, 2}};
    CHECK(walk_gain(b, w) == GainVec{1, 1});
    CHECK(walk_gain(b, Walk{{vid(b, "c")}, {}}) == GainVec(2));

    const GainGraph d = fixture("fig1d.json").graph;
    const Walk tri{{vid(d, "a"), vid(d, "b"), vid(d, "c"), vid(d, "a")}, {0, 3, 1}};
    CHECK(walk_gain(d, tri) == GainVec{1, 1});
}

TEST_CASE("reversed walk negates the gain") {
    const GainGraph d = fixture("fig1d.json").graph;
    const Walk fwd{{0, 1, 2}, {0, 3}};
    const Walk back{{2, 1, 0}, {3, 0}};
    CHECK(walk_gain(d, back) == -walk_gain(d, fwd));
}

TEST_CASE("broken walks are rejected") {
    const GainGraph d = fixture("fig1d.json").graph;
    CHECK(kind_of([&] { walk_gain(d, Walk{{0, 2}, {0}}); }) == ErrorKind::InvalidWalk);
    CHECK(kind_of([&] { walk_gain(d, Walk{{0, 1}, {}}); }) == ErrorKind::InvalidWalk);
}

TEST_CASE("switching") {
    const GainGraph b = fixture("fig1b.json").graph;
    const GainGraph same = switch_vertex(b, 1, GainVec(2));
    for (EdgeId e = 0; e < b.num_edges(); ++e) CHECK(same.edge(e).gain == b.edge(e).gain);

    const GainGraph s = switch_vertex(b, vid(b, "b"), {1, 1});
    const Walk digon{{0, 1, 0}, {0, 2}};
    CHECK(walk_gain(s, digon) == GainVec{1, 1});
}

TEST_CASE("gain subgroup rank") {
    CHECK(gain_subgroup_rank(fixture("fig1b.json").graph, EdgeSet{0, 1, 2, 3}) == 1);
    const GainGraph d = fixture("fig1d.json").graph;
    CHECK(gain_subgroup_rank(d, EdgeSet::all(d)) == 2);
    CHECK(gain_subgroup_rank(d, EdgeSet{0, 1, 3}) == 1);
    CHECK(gain_subgroup_rank(d, EdgeSet{0, 1}) == 0);
}

TEST_CASE("balance") {
    GainGraph tri(1, 3);
    tri.add_edge(0, 1, {0});
    tri.add_edge(1, 2, {0});
    tri.add_edge(0, 2, {0});
    CHECK(is_balanced(tri, EdgeSet::all(tri)));

    GainGraph digon(1, 2);
    digon.add_edge(0, 1, {0});
    digon.add_edge(0, 1, {1});
    CHECK_FALSE(is_balanced(digon, EdgeSet::all(digon)));

    const GainGraph d2 = fixture("fig2d.json").graph;
    CHECK(is_balanced(d2, EdgeSet{0, 1, 2, 3}));
    CHECK_FALSE(is_balanced(d2, EdgeSet::all(d2)));
}

TEST_CASE("subgraph keeps parent maps") {
    const GainGraph d2 = fixture("fig2d.json").graph;
    const Subgraph s = subgraph(d2, EdgeSet{3, 4, 5});
    CHECK(s.graph.num_vertices() == 2);
    CHECK(s.graph.num_edges() == 3);
    CHECK(s.parent_vertex == std::vector<VertexId>{2, 3});
    CHECK(s.parent_edge == std::vector<EdgeId>{3, 4, 5});
    CHECK(s.graph.name(0) == "c");
}

TEST_CASE("integer rank") {
    CHECK(integer_rank({}) == 0);
    CHECK(integer_rank({{1, 1}, {2, 2}}) == 1);
    CHECK(integer_rank({{1, 0}, {0, 2}, {3, 3}}) == 2);
    CHECK(integer_rank({{0, 0}, {0, 0}}) == 0);
    CHECK(integer_rank({{2147483647, 1}, {2147483646, 1}}) == 2);
}

TEST_CASE("properties on random graphs") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 200; ++round) {
        const int k = 1 + static_cast<int>(rng() % 2);
        const GainGraph g = pgr::testing::random_graph(rng, k, 2 + static_cast<int>(rng() % 5), 1 + static_cast<int>(rng() % 9));
        const EdgeSet all = EdgeSet::all(g);
        const EdgeSet sub = pgr::testing::random_subset(rng, all);
        const int r_all = gain_subgroup_rank(g, all);
        const int r_sub = gain_subgroup_rank(g, sub);
        CHECK(r_sub <= r_all);
        CHECK(r_all <= k);
        const GainForest forest = gain_forest(g, all);
        const int cyclomatic = g.num_edges() - static_cast<int>(vertices_of(g, all).size()) + forest.components;
        CHECK(r_all <= cyclomatic);

        const VertexId v = static_cast<VertexId>(rng() % static_cast<unsigned>(g.num_vertices()));
        const GainGraph s = switch_vertex(g, v, pgr::testing::random_gain(rng, k, 3));
        CHECK(gain_subgroup_rank(s, all) == r_all);
        CHECK(is_balanced(s, sub) == is_balanced(g, sub));
        const Walk w = pgr::testing::random_closed_walk(rng, g, 12);
        CHECK(walk_gain(s, w) == walk_gain(g, w));
    }
}
