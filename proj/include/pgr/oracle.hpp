#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "pgr/exec.hpp"
#include "pgr/gain_graph.hpp"
#include "pgr/lattice.hpp"

namespace pgr {

inline constexpr std::uint64_t kDefaultPrime = 2147483629ULL;

struct FieldConfig {
    std::uint64_t prime = kDefaultPrime;
    std::uint64_t seed = 1;
    int trials = 3;
};

// Throws BadPrime unless prime is a 31..61 bit prime, MalformedInput if trials < 1.
void validate(const FieldConfig& cfg);

// Rational coordinates for every vertex.
struct Placement {
    std::vector<Point> coords;
};

// Deterministic pseudo-random rational placement, coordinates in [-1, 1]
// with denominator 1000.
Placement random_placement(int num_vertices, std::uint64_t seed);

using RationalMatrix = std::vector<std::vector<Rational>>;
using ModMatrix = std::vector<std::vector<std::uint64_t>>;

// Row of e = (u, v, g): p(u) - p(v) - L g in u's columns, its negation in
// v's columns. The factor 2 of the true derivative is dropped.
RationalMatrix rigidity_jacobian(const GainGraph& g, const Lattice& lat, const Placement& p);

// Same matrix over Z/prime with coordinates given as field elements.
ModMatrix rigidity_jacobian_mod_p(const GainGraph& g, const Lattice& lat,
                                  const std::vector<std::array<std::uint64_t, 2>>& coords, std::uint64_t prime);

int rank_mod_p(ModMatrix m, std::uint64_t prime);
int rank_rational(RationalMatrix m);

// Maximum rank over cfg.trials random placements in the prime field.
int generic_rank_mod_p(const GainGraph& g, const Lattice& lat, const FieldConfig& cfg,
                       Exec exec = Exec::parallel);

struct CrossCheck {
    int combinatorial = 0;
    int numeric = 0;
    bool agree = false;
    std::vector<std::uint64_t> primes_used;
};

// Compares rank2(E) with the field rank, moving on to further primes while
// the field rank falls short.
CrossCheck cross_check(const GainGraph& g, const Lattice& lat, const FieldConfig& cfg, Exec exec = Exec::parallel);

// Integer box of lattice cells, one inclusive range per coordinate.
struct Window {
    std::vector<std::pair<std::int64_t, std::int64_t>> ranges;
};

struct PatchPoint {
    VertexId vertex;
    GainVec cell;
    Point position;
};

struct Patch {
    std::vector<PatchPoint> points;
    std::vector<std::pair<std::size_t, std::size_t>> bars;
};

// Finite piece of the covering framework: p(v) + L(cell) for every cell in
// the window, and a bar (u, c) -- (v, c + g) for every edge whose both ends
// land inside the window.
Patch expand_patch(const GainGraph& g, const Lattice& lat, const Placement& p, const Window& window);

}  // namespace pgr
