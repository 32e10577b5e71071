#include "pgr/oracle.hpp"

#include <algorithm>
#include <array>
#include <optional>

#include "pgr/error.hpp"
#include "pgr/sparsity.hpp"

namespace pgr {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

u64 mul_mod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 pow_mod(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    a %= p;
    for (; e; e >>= 1) {
        if (e & 1) r = mul_mod(r, a, p);
        a = mul_mod(a, a, p);
    }
    return r;
}

u64 inv_mod(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
        if (n % q == 0) return n == q;
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        u64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s && composite; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) composite = false;
        }
        if (composite) return false;
    }
    return true;
}

u64 splitmix64(u64& state) {
    u64 z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

u64 reduce(std::int64_t x, u64 p) {
    const auto m = static_cast<std::int64_t>(x % static_cast<std::int64_t>(p));
    return static_cast<u64>(m < 0 ? m + static_cast<std::int64_t>(p) : m);
}

u64 reduce(const Rational& r, u64 p) {
    const u64 den = reduce(r.denominator(), p);
    if (den == 0) throw Error(ErrorKind::BadPrime, "prime divides a lattice denominator");
    return mul_mod(reduce(r.numerator(), p), inv_mod(den, p), p);
}

// Lattice columns reduced mod p; the reduction must stay nonsingular.
std::vector<std::array<u64, 2>> reduce_lattice(const Lattice& lat, u64 p) {
    std::vector<std::array<u64, 2>> cols;
    for (const Point& c : lat.columns()) cols.push_back({reduce(c[0], p), reduce(c[1], p)});
    bool singular = false;
    if (cols.size() == 1) singular = cols[0][0] == 0 && cols[0][1] == 0;
    if (cols.size() == 2)
        singular = mul_mod(cols[0][0], cols[1][1], p) == mul_mod(cols[0][1], cols[1][0], p);
    if (singular) throw Error(ErrorKind::BadPrime, "lattice is singular modulo the prime");
    return cols;
}

void check_dims(const GainGraph& g, const Lattice& lat, std::size_t coords) {
    if (lat.k() != g.k()) throw Error(ErrorKind::DimensionMismatch, "lattice rank does not match graph");
    if (coords != idx(g.num_vertices()))
        throw Error(ErrorKind::DimensionMismatch, "placement does not cover every vertex");
}

const std::array<u64, 3> kEscalation{kDefaultPrime, 2305843009213693951ULL, 4294967291ULL};
constexpr u64 kSpare = 1000000000000000003ULL;

}  // namespace

void validate(const FieldConfig& cfg) {
    if (cfg.prime < (u64{1} << 30) || cfg.prime >= (u64{1} << 61) || !is_prime(cfg.prime))
        throw Error(ErrorKind::BadPrime, std::to_string(cfg.prime) + " is not a 31-61 bit prime");
    if (cfg.trials < 1) throw Error(ErrorKind::MalformedInput, "trials must be positive");
}

Placement random_placement(int num_vertices, std::uint64_t seed) {
    Placement p;
    u64 state = seed;
    for (int v = 0; v < num_vertices; ++v) {
        Point pt;
        for (auto& c : pt) c = Rational(static_cast<std::int64_t>(splitmix64(state) % 2001) - 1000, 1000);
        p.coords.push_back(pt);
    }
    return p;
}

RationalMatrix rigidity_jacobian(const GainGraph& g, const Lattice& lat, const Placement& p) {
    check_dims(g, lat, p.coords.size());
    RationalMatrix m(idx(g.num_edges()), std::vector<Rational>(idx(2 * g.num_vertices())));
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const Edge& ed = g.edge(e);
        const Point shift = lat.apply(ed.gain);
        auto& row = m[idx(e)];
        for (int c = 0; c < 2; ++c) {
            const Rational d = p.coords[idx(ed.tail)][idx(c)] - p.coords[idx(ed.head)][idx(c)] - shift[idx(c)];
            row[idx(2 * ed.tail + c)] += d;
            row[idx(2 * ed.head + c)] -= d;
        }
    }
    return m;
}

ModMatrix rigidity_jacobian_mod_p(const GainGraph& g, const Lattice& lat,
                                  const std::vector<std::array<std::uint64_t, 2>>& coords, std::uint64_t prime) {
    check_dims(g, lat, coords.size());
    const auto cols = reduce_lattice(lat, prime);
    ModMatrix m(idx(g.num_edges()), std::vector<u64>(idx(2 * g.num_vertices())));
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const Edge& ed = g.edge(e);
        auto& row = m[idx(e)];
        for (int c = 0; c < 2; ++c) {
            u64 shift = 0;
            for (int i = 0; i < g.k(); ++i)
                shift = (shift + mul_mod(reduce(ed.gain[i], prime), cols[idx(i)][idx(c)], prime)) % prime;
            u64 d = (coords[idx(ed.tail)][idx(c)] + prime - coords[idx(ed.head)][idx(c)]) % prime;
            d = (d + prime - shift) % prime;
            row[idx(2 * ed.tail + c)] = (row[idx(2 * ed.tail + c)] + d) % prime;
            row[idx(2 * ed.head + c)] = (row[idx(2 * ed.head + c)] + prime - d) % prime;
        }
    }
    return m;
}

int rank_mod_p(ModMatrix m, std::uint64_t prime) {
    int rank = 0;
    const std::size_t cols = m.empty() ? 0 : m.front().size();
    for (std::size_t c = 0; c < cols && idx(rank) < m.size(); ++c) {
        std::size_t pivot = idx(rank);
        while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[pivot], m[idx(rank)]);
        auto& prow = m[idx(rank)];
        const u64 inv = inv_mod(prow[c], prime);
        for (std::size_t r = idx(rank) + 1; r < m.size(); ++r) {
            if (m[r][c] == 0) continue;
            const u64 f = mul_mod(m[r][c], inv, prime);
            for (std::size_t j = c; j < cols; ++j) m[r][j] = (m[r][j] + prime - mul_mod(f, prow[j], prime)) % prime;
        }
        ++rank;
    }
    return rank;
}

int rank_rational(RationalMatrix m) {
    int rank = 0;
    const std::size_t cols = m.empty() ? 0 : m.front().size();
    for (std::size_t c = 0; c < cols && idx(rank) < m.size(); ++c) {
        std::size_t pivot = idx(rank);
        while (pivot < m.size() && is_zero(m[pivot][c])) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[pivot], m[idx(rank)]);
        const auto& prow = m[idx(rank)];
        for (std::size_t r = idx(rank) + 1; r < m.size(); ++r) {
            if (is_zero(m[r][c])) continue;
            const Rational f = m[r][c] / prow[c];
            for (std::size_t j = c; j < cols; ++j) m[r][j] -= f * prow[j];
        }
        ++rank;
    }
    return rank;
}

int generic_rank_mod_p(const GainGraph& g, const Lattice& lat, const FieldConfig& cfg, Exec exec) {
    validate(cfg);
    if (lat.k() != g.k()) throw Error(ErrorKind::DimensionMismatch, "lattice rank does not match graph");
    reduce_lattice(lat, cfg.prime);
    std::vector<int> ranks(idx(cfg.trials), 0);
    auto trial = [&](int t) {
        u64 state = cfg.seed ^ (0xd1b54a32d192ed03ULL * static_cast<u64>(t + 1));
        std::vector<std::array<u64, 2>> coords(idx(g.num_vertices()));
        for (auto& c : coords) c = {splitmix64(state) % cfg.prime, splitmix64(state) % cfg.prime};
        ranks[idx(t)] = rank_mod_p(rigidity_jacobian_mod_p(g, lat, coords, cfg.prime), cfg.prime);
    };
    if (exec == Exec::serial) {
        for (int t = 0; t < cfg.trials; ++t) trial(t);
    } else {
#pragma omp parallel for schedule(static)
        for (int t = 0; t < cfg.trials; ++t) trial(t);
    }
    return *std::max_element(ranks.begin(), ranks.end());
}

CrossCheck cross_check(const GainGraph& g, const Lattice& lat, const FieldConfig& cfg, Exec exec) {
    validate(cfg);
    CrossCheck out;
    out.combinatorial = rank2(g, EdgeSet::all(g));

    std::vector<u64> primes{cfg.prime};
    for (u64 p : kEscalation)
        if (std::find(primes.begin(), primes.end(), p) == primes.end() && primes.size() < 3) primes.push_back(p);
    if (primes.size() < 3) primes.push_back(kSpare);

    bool any = false;
    for (u64 p : primes) {
        FieldConfig c = cfg;
        c.prime = p;
        int r = 0;
        try {
            r = generic_rank_mod_p(g, lat, c, exec);
        } catch (const Error& err) {
            if (err.kind() != ErrorKind::BadPrime) throw;
            continue;
        }
        any = true;
        out.primes_used.push_back(p);
        out.numeric = std::max(out.numeric, r);
        if (out.numeric >= out.combinatorial) break;
    }
    if (!any) throw Error(ErrorKind::BadPrime, "no usable prime for this lattice");
    out.agree = out.numeric == out.combinatorial;
    return out;
}

Patch expand_patch(const GainGraph& g, const Lattice& lat, const Placement& p, const Window& window) {
    check_dims(g, lat, p.coords.size());
    if (window.ranges.size() != idx(g.k())) throw Error(ErrorKind::DimensionMismatch, "window rank does not match graph");
    for (const auto& [lo, hi] : window.ranges)
        if (lo > hi) throw Error(ErrorKind::MalformedInput, "empty window range");

    std::vector<GainVec> cells{GainVec(g.k())};
    for (int i = 0; i < g.k(); ++i) {
        std::vector<GainVec> next;
        for (const GainVec& c : cells)
            for (std::int64_t x = window.ranges[idx(i)].first; x <= window.ranges[idx(i)].second; ++x) {
                GainVec d = c;
                d[i] = x;
                next.push_back(d);
            }
        cells = std::move(next);
    }
    auto cell_index = [&](const GainVec& c) -> std::optional<std::size_t> {
        std::size_t at = 0;
        for (int i = 0; i < g.k(); ++i) {
            const auto [lo, hi] = window.ranges[idx(i)];
            if (c[i] < lo || c[i] > hi) return std::nullopt;
            at = at * static_cast<std::size_t>(hi - lo + 1) + static_cast<std::size_t>(c[i] - lo);
        }
        return at;
    };

    const std::size_t n = idx(g.num_vertices());
    Patch patch;
    for (const GainVec& c : cells) {
        const Point shift = lat.apply(c);
        for (VertexId v = 0; v < g.num_vertices(); ++v)
            patch.points.push_back({v, c, {p.coords[idx(v)][0] + shift[0], p.coords[idx(v)][1] + shift[1]}});
    }
    for (std::size_t ci = 0; ci < cells.size(); ++ci)
        for (const Edge& e : g.edges())
            if (auto cj = cell_index(cells[ci] + e.gain))
                patch.bars.emplace_back(ci * n + idx(e.tail), *cj * n + idx(e.head));
    return patch;
}

}  // namespace pgr
