#include <doctest.h>

#include <random>

#include "pgr/blocks.hpp"
#include "pgr/bruteforce.hpp"
#include "pgr/error.hpp"
#include "support.hpp"

using namespace pgr;
using pgr::testing::balanced_k4;
using pgr::testing::base_case;
using pgr::testing::fixture;
using pgr::testing::vid;

namespace {

GainGraph path3() {
    GainGraph g(1, 3);
    g.add_edge(0, 1, {0});
    g.add_edge(1, 2, {0});
    return g;
}

GainGraph prism() {
    GainGraph g(0, 6);
    for (auto [u, w] : {std::pair{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}})
        g.add_edge(u, w, GainVec(0));
    return g;
}

}  // namespace

TEST_CASE("connected components") {
    CHECK(connected_components(fixture("fig1b.json").graph).size() == 1);
    GainGraph two(1, 4);
    two.add_edge(0, 1, {0});
    two.add_edge(0, 1, {1});
    two.add_edge(2, 3, {0});
    two.add_edge(2, 3, {1});
    CHECK(connected_components(two).size() == 2);
    CHECK(connected_components(GainGraph(2, 3)).size() == 3);
    CHECK_FALSE(is_connected(two));
}

TEST_CASE("block decomposition") {
    const GainGraph b = fixture("fig2b.json").graph;
    const BlockDecomposition bd = block_decomposition(b);
    CHECK(bd.cut_vertices == std::vector<VertexId>{vid(b, "c")});
    REQUIRE(bd.blocks.size() == 2);
    CHECK(bd.blocks[0] == EdgeSet{0, 1, 2, 3});
    CHECK(bd.blocks[1] == EdgeSet{4, 5, 6});

    GainGraph digon(1, 2);
    digon.add_edge(0, 1, {0});
    digon.add_edge(0, 1, {1});
    CHECK(block_decomposition(digon).cut_vertices.empty());
    CHECK(block_decomposition(digon).blocks.size() == 1);
    CHECK(is_two_connected(digon));

    const BlockDecomposition p = block_decomposition(path3());
    CHECK(p.cut_vertices == std::vector<VertexId>{1});
    CHECK(p.blocks.size() == 2);
    CHECK_FALSE(is_two_connected(path3()));
}

TEST_CASE("3-connectivity") {
    const ThreeConnectivity k4 = is_three_connected(balanced_k4(0));
    CHECK(k4.three_connected);
    CHECK_FALSE(k4.separator);

    GainGraph sub(0, 5);
    for (auto [u, w] : {std::pair{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {4, 1}}) sub.add_edge(u, w, GainVec(0));
    const ThreeConnectivity s = is_three_connected(sub);
    CHECK_FALSE(s.three_connected);
    REQUIRE(s.separator);
    CHECK(*s.separator == std::pair<VertexId, VertexId>{0, 1});

    CHECK(is_three_connected(prism()).three_connected);
    CHECK_THROWS_AS(is_three_connected(path3()), Error);
}

TEST_CASE("(0,2)-blocks on the figure graphs") {
    const GainGraph d2 = fixture("fig2d.json").graph;
    const auto blk = find_zero_two_block(d2);
    REQUIRE(blk);
    CHECK(blk->boundary == std::array<VertexId, 2>{vid(d2, "c"), vid(d2, "d")});
    CHECK(blk->interior == std::vector<VertexId>{vid(d2, "a"), vid(d2, "b")});
    CHECK(blk->edges == EdgeSet{0, 1, 2});
    CHECK(is_valid_zero_two_block(d2, *blk));
    CHECK(bf::is_zero_two_block(d2, blk->edges));
    CHECK(cleaving_gain(d2, *blk) == GainVec{0, 0});

    CHECK_FALSE(find_zero_two_block(base_case()));
    CHECK_FALSE(bf::find_zero_two_block(base_case()));
}

TEST_CASE("(0,2)-block on K4 with a digon") {
    GainGraph g = balanced_k4(1);
    g.add_edge(0, 1, {1});  // unbalanced digon on x = 0, y = 1
    const auto blk = find_zero_two_block(g);
    REQUIRE(blk);
    CHECK(blk->boundary == std::array<VertexId, 2>{0, 1});
    CHECK(blk->interior == std::vector<VertexId>{2, 3});
    const auto ref = bf::find_zero_two_block(g);
    REQUIRE(ref);
    CHECK(ref->boundary == blk->boundary);
    CHECK(ref->interior == blk->interior);
}

TEST_CASE("cleaving gain") {
    GainGraph g(1, {"a", "b", "x", "y"});
    g.add_edge(0, 2, {0});
    g.add_edge(2, 1, {2});
    g.add_edge(0, 1, {0});
    g.add_edge(0, 1, {1});
    g.add_edge(0, 3, {0});
    g.add_edge(3, 1, {0});
    ZeroTwoBlock blk{{0, 1}, {2}, EdgeSet{0, 1}};
    CHECK(is_valid_zero_two_block(g, blk));
    CHECK(cleaving_gain(g, blk) == GainVec{2});

    // switching at an interior vertex leaves it alone; at a boundary vertex it shifts
    CHECK(cleaving_gain(switch_vertex(g, 2, {5}), blk) == GainVec{2});
    CHECK(cleaving_gain(switch_vertex(g, 0, {3}), blk) == GainVec{5});
}

TEST_CASE("block search agrees with exhaustive enumeration") {
    std::mt19937_64 rng(21);
    int found = 0;
    for (int round = 0; round < 300; ++round) {
        const int k = 1 + static_cast<int>(rng() % 2);
        const int n = 3 + static_cast<int>(rng() % 5);
        const GainGraph g = pgr::testing::random_graph(rng, k, n, n + static_cast<int>(rng() % 6), 1);
        if (g.num_edges() > bf::kMaxBlockEdges) continue;
        const auto fast = find_zero_two_block(g, Exec::parallel);
        const auto slow = bf::find_zero_two_block(g);
        CHECK(fast.has_value() == slow.has_value());
        if (fast) {
            ++found;
            CHECK(is_valid_zero_two_block(g, *fast));
            CHECK(bf::is_zero_two_block(g, fast->edges));
            CHECK(is_valid_zero_two_block(g, *slow));
        }
        const auto serial = find_zero_two_block(g, Exec::serial);
        CHECK(serial.has_value() == fast.has_value());
        if (serial && fast) {
            CHECK(serial->boundary == fast->boundary);
            CHECK(serial->edges == fast->edges);
        }
    }
    CHECK(found > 20);
}

TEST_CASE("blocks partition the edges") {
    std::mt19937_64 rng(17);
    for (int round = 0; round < 100; ++round) {
        const GainGraph g = pgr::testing::random_graph(rng, 1, 2 + static_cast<int>(rng() % 7), static_cast<int>(rng() % 12));
        const BlockDecomposition bd = block_decomposition(g);
        std::vector<int> hits(static_cast<std::size_t>(g.num_edges()), 0);
        for (const EdgeSet& b : bd.blocks)
            for (EdgeId e : b) ++hits[static_cast<std::size_t>(e)];
        for (int h : hits) CHECK(h == 1);
        for (VertexId c : bd.cut_vertices) {
            int blocks_at = 0;
            for (const EdgeSet& b : bd.blocks) {
                const auto vs = vertices_of(g, b);
                blocks_at += std::binary_search(vs.begin(), vs.end(), c);
            }
            CHECK(blocks_at >= 2);
        }
        CHECK(bd.blocks == bf::two_connected_components(g));
        if (is_connected(g) && g.num_vertices() >= 3) {
            const auto ref = bf::cut_vertex(g);
            CHECK(bd.cut_vertices.empty() != ref.has_value());
            if (ref) CHECK(bd.cut_vertices.front() == *ref);
        }
        if (g.num_vertices() >= 4) {
            const ThreeConnectivity s = is_three_connected(g, Exec::serial);
            const ThreeConnectivity p = is_three_connected(g, Exec::parallel);
            CHECK(s.separator == p.separator);
            CHECK(s.separator == bf::separating_pair(g));
        }
    }
}
