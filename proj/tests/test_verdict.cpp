#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "pgr/bruteforce.hpp"
#include "pgr/error.hpp"
#include "pgr/verdict.hpp"
#include "support.hpp"

using namespace pgr;
using pgr::testing::balanced_k4;
using pgr::testing::base_case;
using pgr::testing::fixture;
using pgr::testing::vid;

namespace {

bool has_kind(const Verdict& v, std::string_view k) {
    return std::any_of(v.violations.begin(), v.violations.end(), [&](const Certificate& c) { return kind(c) == k; });
}

std::vector<std::string_view> kinds(const Verdict& v) {
    std::vector<std::string_view> out;
    for (const Certificate& c : v.violations) out.push_back(kind(c));
    return out;
}

GainGraph relabel(const GainGraph& g, const std::vector<VertexId>& perm) {
    GainGraph out(g.k(), g.num_vertices());
    for (const Edge& e : g.edges())
        out.add_edge(perm[static_cast<std::size_t>(e.tail)], perm[static_cast<std::size_t>(e.head)], e.gain);
    return out;
}

}  // namespace

TEST_CASE("base case is globally rigid") {
    const Verdict v = decide(base_case());
    CHECK(v.globally_rigid);
    CHECK(kind(v.certificate) == "satisfies_main0");
    CHECK(v.violations.empty());
    CHECK(validate_certificate(base_case(), v));
    CHECK(decide_surface(base_case(), Surface::cylinder).globally_rigid);
}

TEST_CASE("figure graphs") {
    const GainGraph b = fixture("fig1b.json").graph;
    const Verdict vb = decide(b);
    CHECK_FALSE(vb.globally_rigid);
    CHECK(kind(vb.certificate) == "rank_deficient_component");
    CHECK(std::get<cert::RankDeficientComponent>(vb.certificate).rank == 1);

    const GainGraph d = fixture("fig1d.json").graph;
    const Verdict vd = decide(d);
    CHECK_FALSE(vd.globally_rigid);
    CHECK(has_kind(vd, "not_redundantly_rigid"));
    CHECK_FALSE(has_kind(vd, "rank_deficient_component"));

    const GainGraph d2 = fixture("fig2d.json").graph;
    const Verdict v2 = decide(d2);
    CHECK_FALSE(v2.globally_rigid);
    REQUIRE(kind(v2.certificate) == "zero_two_block");
    const auto& z = std::get<cert::ZeroTwoBlockFound>(v2.certificate);
    CHECK(z.block.boundary == std::array<VertexId, 2>{vid(d2, "c"), vid(d2, "d")});

    const GainGraph b2 = fixture("fig2b.json").graph;
    const Verdict vb2 = decide(b2);
    CHECK_FALSE(vb2.globally_rigid);
    REQUIRE(kind(vb2.certificate) == "rank_deficient_component");
    const auto& rd = std::get<cert::RankDeficientComponent>(vb2.certificate);
    const auto vs = vertices_of(b2, rd.edges);
    CHECK(std::binary_search(vs.begin(), vs.end(), vid(b2, "c")));

    for (const GainGraph* g : {&b, &d, &d2, &b2}) CHECK(validate_certificate(*g, decide(*g)));
}

TEST_CASE("small cases") {
    CHECK(decide(GainGraph(2, 1)).globally_rigid);
    CHECK(decide(GainGraph(0, 1)).globally_rigid);

    GainGraph two(2, 2);
    two.add_edge(0, 1, {0, 0});
    two.add_edge(0, 1, {1, 0});
    const Verdict v = decide(two);
    CHECK_FALSE(v.globally_rigid);
    CHECK(kind(v.certificate) == "small_case_flexible");
    two.add_edge(0, 1, {0, 1});
    CHECK(decide(two).globally_rigid);

    GainGraph tri(0, 3);
    tri.add_edge(0, 1, GainVec(0));
    tri.add_edge(1, 2, GainVec(0));
    CHECK(kind(decide(tri).certificate) == "not_complete_small");
    tri.add_edge(0, 2, GainVec(0));
    CHECK(decide(tri).globally_rigid);

    CHECK(decide(balanced_k4(0)).globally_rigid);
    CHECK(kind(decide(GainGraph(1, 3)).certificate) == "disconnected");
    CHECK_THROWS_AS(decide(GainGraph(1, 0)), Error);
}

TEST_CASE("surfaces") {
    const GainGraph d2 = fixture("fig2d.json").graph;
    const Verdict v = decide_surface(d2, Surface::torus);
    CHECK_FALSE(v.globally_rigid);
    CHECK(describe(d2, v.certificate, v.surface).find("contractible") != std::string::npos);
    try {
        decide_surface(base_case(), Surface::torus);
        FAIL("expected SurfaceRankMismatch");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SurfaceRankMismatch);
    }
}

TEST_CASE("degree-3 contraction") {
    GainGraph star(1, {"a", "b", "c", "v"});
    star.add_edge(3, 0, {1});
    star.add_edge(3, 1, {4});
    star.add_edge(3, 2, {-2});
    const GainGraph t = contract_degree3(star, 3);
    REQUIRE(t.num_edges() == 3);
    CHECK(t.find_edge(0, 1, {3}));
    CHECK(t.find_edge(0, 2, {-3}));
    CHECK(t.find_edge(1, 2, {-6}));
    CHECK(is_balanced(t, EdgeSet::all(t)));

    GainGraph par(1, {"u", "w", "v"});
    par.add_edge(2, 0, {0});
    par.add_edge(2, 0, {1});
    par.add_edge(2, 1, {0});
    const GainGraph p = contract_degree3(par, 2);
    REQUIRE(p.num_edges() == 2);
    CHECK(p.find_edge(0, 1, {0}));
    CHECK(p.find_edge(0, 1, {-1}));

    GainGraph dup = par;
    dup.add_edge(0, 1, {0});
    CHECK(contract_degree3(dup, 2).num_edges() == 2);

    try {
        contract_degree3(base_case(), 1);  // v has degree 4
        FAIL("expected WrongDegree");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::WrongDegree);
    }
}

TEST_CASE("nondegeneracy") {
    GainGraph g(2, 2);
    g.add_edge(0, 1, {0, 0});
    g.add_edge(0, 1, {1, 0});
    CHECK(is_nondegenerate(g, 0, Lattice::standard(2)));
    g.add_edge(0, 1, {2, 0});
    CHECK_FALSE(is_nondegenerate(g, 0, Lattice::standard(2)));
    CHECK_THROWS_AS(is_nondegenerate(g, 0, Lattice::standard(1)), Error);
    CHECK(is_nondegenerate(base_case(), 1, Lattice::standard(1)));
}

TEST_CASE("decide agrees with the brute-force decision") {
    std::mt19937_64 rng(31);
    int positives = 0;
    for (int round = 0; round < 250; ++round) {
        const int k = static_cast<int>(rng() % 3);
        const int n = 1 + static_cast<int>(rng() % 6);
        const GainGraph g = pgr::testing::random_graph(rng, k, n, static_cast<int>(rng() % 13), 1);
        const Verdict fast = decide(g);
        const Verdict slow = bf::decide(g);
        CHECK(fast.globally_rigid == slow.globally_rigid);
        CHECK(kinds(fast) == kinds(slow));
        CHECK(validate_certificate(g, fast));
        CHECK(validate_certificate(g, slow));
        CHECK(decide(g, Exec::serial).globally_rigid == fast.globally_rigid);
        positives += fast.globally_rigid;
    }
    CHECK(positives > 10);
}

TEST_CASE("decide is invariant under switching and relabeling") {
    std::mt19937_64 rng(37);
    for (int round = 0; round < 120; ++round) {
        const int k = static_cast<int>(rng() % 3);
        const int n = 2 + static_cast<int>(rng() % 5);
        const GainGraph g = pgr::testing::random_graph(rng, k, n, n + static_cast<int>(rng() % 8), 1);
        const bool rigid = decide(g).globally_rigid;
        const VertexId v = static_cast<VertexId>(rng() % static_cast<unsigned>(n));
        CHECK(decide(switch_vertex(g, v, pgr::testing::random_gain(rng, k, 2))).globally_rigid == rigid);
        std::vector<VertexId> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(decide(relabel(g, perm)).globally_rigid == rigid);
    }
}

TEST_CASE("tampered certificates are rejected") {
    const GainGraph d2 = fixture("fig2d.json").graph;
    Verdict v = decide(d2);
    auto z = std::get<cert::ZeroTwoBlockFound>(v.certificate);
    z.block.boundary = {0, 1};
    v.certificate = z;
    CHECK_FALSE(validate_certificate(d2, v));

    Verdict w = decide(base_case());
    w.certificate = cert::NotTwoConnected{1};
    w.globally_rigid = false;
    CHECK_FALSE(validate_certificate(base_case(), w));
}
