#include "pgr/bruteforce.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>

#include "pgr/error.hpp"

namespace pgr::bf {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

using Mask = std::uint32_t;

EdgeSet from_mask(const std::vector<EdgeId>& ids, Mask m) {
    std::vector<EdgeId> out;
    for (std::size_t i = 0; i < ids.size(); ++i)
        if (m >> i & 1U) out.push_back(ids[i]);
    return EdgeSet(std::move(out));
}

// Relaxation potentials for every vertex touched by f; nullopt elsewhere.
std::vector<std::optional<GainVec>> potentials(const GainGraph& g, const EdgeSet& f) {
    std::vector<std::optional<GainVec>> pot(idx(g.num_vertices()));
    while (true) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (EdgeId e : f) {
                const Edge& ed = g.edge(e);
                auto& pt = pot[idx(ed.tail)];
                auto& ph = pot[idx(ed.head)];
                if (pt && !ph) {
                    ph = *pt + ed.gain;
                    changed = true;
                } else if (ph && !pt) {
                    pt = *ph - ed.gain;
                    changed = true;
                }
            }
        }
        auto fresh = std::find_if(f.begin(), f.end(), [&](EdgeId e) { return !pot[idx(g.edge(e).tail)]; });
        if (fresh == f.end()) return pot;
        pot[idx(g.edge(*fresh).tail)] = GainVec(g.k());
    }
}

std::vector<GainVec> discrepancies(const GainGraph& g, const EdgeSet& f) {
    const auto pot = potentials(g, f);
    std::vector<GainVec> out;
    for (EdgeId e : f) {
        const Edge& ed = g.edge(e);
        out.push_back(*pot[idx(ed.tail)] + ed.gain - *pot[idx(ed.head)]);
    }
    return out;
}

// Subsets of `ids` (by bit) that break one of the two counts themselves.
std::vector<char> own_violations(const GainGraph& g, const std::vector<EdgeId>& ids, Exec exec) {
    if (ids.size() > idx(kMaxSubsetEdges)) throw Error(ErrorKind::TooLarge, "exhaustive check limited to 20 edges");
    const Mask total = Mask{1} << ids.size();
    std::vector<char> viol(total, 0);
    auto check = [&](Mask m) {
        if (m == 0) return;
        const EdgeSet s = from_mask(ids, m);
        const int nv = static_cast<int>(vertices_of(g, s).size());
        const int ne = std::popcount(m);
        viol[m] = ne > 2 * nv - kUnbalancedSlack || (ne > 2 * nv - kBalancedSlack && bf::is_balanced(g, s));
    };
    const auto count = static_cast<long>(total);
    if (exec == Exec::serial) {
        for (long m = 0; m < count; ++m) check(static_cast<Mask>(m));
    } else {
#pragma omp parallel for schedule(dynamic, 256)
        for (long m = 0; m < count; ++m) check(static_cast<Mask>(m));
    }
    return viol;
}

// dep[m]: some subset of m violates a count.
std::vector<char> dependence(const GainGraph& g, const std::vector<EdgeId>& ids, Exec exec) {
    std::vector<char> dep = own_violations(g, ids, exec);
    for (Mask m = 1; m < dep.size(); ++m) {
        if (dep[m]) continue;
        for (Mask rest = m; rest; rest &= rest - 1)
            if (dep[m & ~(rest & -rest)]) {
                dep[m] = 1;
                break;
            }
    }
    return dep;
}

std::vector<std::vector<VertexId>> components_avoiding(const GainGraph& g, const std::vector<VertexId>& removed) {
    std::vector<char> gone(idx(g.num_vertices()), 0), seen(idx(g.num_vertices()), 0);
    for (VertexId v : removed) gone[idx(v)] = 1;
    std::vector<std::vector<VertexId>> comps;
    for (VertexId s = 0; s < g.num_vertices(); ++s) {
        if (gone[idx(s)] || seen[idx(s)]) continue;
        std::vector<VertexId> comp{s}, stack{s};
        seen[idx(s)] = 1;
        while (!stack.empty()) {
            const VertexId v = stack.back();
            stack.pop_back();
            for (const Edge& e : g.edges()) {
                VertexId w = -1;
                if (e.tail == v) w = e.head;
                if (e.head == v) w = e.tail;
                if (w < 0 || gone[idx(w)] || seen[idx(w)]) continue;
                seen[idx(w)] = 1;
                comp.push_back(w);
                stack.push_back(w);
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

ZeroTwoBlock lift(const Subgraph& sub, const ZeroTwoBlock& local) {
    ZeroTwoBlock out;
    out.boundary = {sub.parent_vertex[idx(local.boundary[0])], sub.parent_vertex[idx(local.boundary[1])]};
    for (VertexId v : local.interior) out.interior.push_back(sub.parent_vertex[idx(v)]);
    std::vector<EdgeId> edges;
    for (EdgeId e : local.edges) edges.push_back(sub.parent_edge[idx(e)]);
    out.edges = EdgeSet(std::move(edges));
    return out;
}

int target(const GainGraph& g) { return 2 * g.num_vertices() - (g.k() == 0 ? 3 : 2); }

}  // namespace

bool is_balanced(const GainGraph& g, const EdgeSet& f) {
    const auto d = discrepancies(g, f);
    return std::all_of(d.begin(), d.end(), [](const GainVec& x) { return x.is_zero(); });
}

int gain_rank(const GainGraph& g, const EdgeSet& f) {
    const auto d = discrepancies(g, f);
    int rank = 0;
    for (const GainVec& x : d)
        if (!x.is_zero()) rank = 1;
    for (const GainVec& x : d)
        for (const GainVec& y : d)
            if (g.k() == 2 && x[0] * y[1] != x[1] * y[0]) return 2;
    return rank;
}

bool is_independent(const GainGraph& g, const EdgeSet& f, Exec exec) {
    check_edge_set(g, f);
    const auto viol = own_violations(g, f.ids(), exec);
    return std::none_of(viol.begin(), viol.end(), [](char c) { return c != 0; });
}

int rank(const GainGraph& g, const EdgeSet& f, Exec exec) {
    check_edge_set(g, f);
    const auto dep = dependence(g, f.ids(), exec);
    int best = 0;
    for (Mask m = 0; m < dep.size(); ++m)
        if (!dep[m]) best = std::max(best, std::popcount(m));
    return best;
}

std::vector<Circuit> circuits(const GainGraph& g) {
    const std::vector<EdgeId> ids = EdgeSet::all(g).ids();
    const auto dep = dependence(g, ids, Exec::parallel);
    std::vector<Circuit> out;
    for (Mask m = 1; m < dep.size(); ++m) {
        if (!dep[m]) continue;
        bool minimal = true;
        for (Mask rest = m; rest && minimal; rest &= rest - 1) minimal = !dep[m & ~(rest & -rest)];
        if (minimal) out.push_back({from_mask(ids, m)});
    }
    std::sort(out.begin(), out.end(), [](const Circuit& a, const Circuit& b) { return a.edges.ids() < b.edges.ids(); });
    return out;
}

MPartition m_components(const GainGraph& g) {
    std::vector<EdgeId> parent(idx(g.num_edges()));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](EdgeId x) {
        while (parent[idx(x)] != x) x = parent[idx(x)];
        return x;
    };
    for (const Circuit& c : circuits(g))
        for (EdgeId e : c.edges) {
            const EdgeId a = find(e), b = find(c.edges.ids().front());
            if (a != b) parent[idx(std::max(a, b))] = std::min(a, b);
        }
    std::map<EdgeId, std::vector<EdgeId>> groups;
    for (EdgeId e = 0; e < g.num_edges(); ++e) groups[find(e)].push_back(e);
    MPartition out;
    for (auto& [root, members] : groups) out.classes.emplace_back(std::move(members));
    return out;
}

bool is_zero_two_block(const GainGraph& g, const EdgeSet& h) {
    if (h.empty()) return false;
    int boundary = 0, interior = 0;
    for (VertexId v : vertices_of(g, h)) {
        const auto inc = g.incident(v);
        const bool outside =
            std::any_of(inc.begin(), inc.end(), [&](const Incidence& i) { return !h.contains(i.edge); });
        outside ? ++boundary : ++interior;
    }
    return boundary == 2 && interior > 0 && bf::is_balanced(g, h);
}

std::optional<ZeroTwoBlock> find_zero_two_block(const GainGraph& g) {
    if (g.num_edges() > kMaxBlockEdges) throw Error(ErrorKind::TooLarge, "block enumeration limited to 16 edges");
    const std::vector<EdgeId> ids = EdgeSet::all(g).ids();
    std::optional<ZeroTwoBlock> best;
    for (Mask m = 1; m < (Mask{1} << ids.size()); ++m) {
        const EdgeSet h = from_mask(ids, m);
        if (!is_zero_two_block(g, h)) continue;
        ZeroTwoBlock blk;
        std::vector<VertexId> boundary;
        for (VertexId v : vertices_of(g, h)) {
            const auto inc = g.incident(v);
            const bool outside =
                std::any_of(inc.begin(), inc.end(), [&](const Incidence& i) { return !h.contains(i.edge); });
            (outside ? boundary : blk.interior).push_back(v);
        }
        blk.boundary = {boundary[0], boundary[1]};
        blk.edges = h;
        const bool better = !best || blk.interior.size() > best->interior.size() ||
                            (blk.interior.size() == best->interior.size() && blk.boundary < best->boundary);
        if (better) best = std::move(blk);
    }
    return best;
}

bool is_connected(const GainGraph& g) { return components_avoiding(g, {}).size() <= 1; }

std::optional<VertexId> cut_vertex(const GainGraph& g) {
    for (VertexId x = 0; x < g.num_vertices(); ++x)
        if (components_avoiding(g, {x}).size() > 1) return x;
    return std::nullopt;
}

std::optional<std::pair<VertexId, VertexId>> separating_pair(const GainGraph& g) {
    for (VertexId x = 0; x < g.num_vertices(); ++x)
        for (VertexId y = x + 1; y < g.num_vertices(); ++y)
            if (components_avoiding(g, {x, y}).size() > 1) return std::pair{x, y};
    return std::nullopt;
}

std::vector<EdgeSet> two_connected_components(const GainGraph& g) {
    const auto m = idx(g.num_edges());
    // side[x][e]: component of G - x holding e's end other than x.
    std::vector<std::vector<int>> side(idx(g.num_vertices()), std::vector<int>(m, -1));
    for (VertexId x = 0; x < g.num_vertices(); ++x) {
        const auto comps = components_avoiding(g, {x});
        std::vector<int> at(idx(g.num_vertices()), -1);
        for (std::size_t c = 0; c < comps.size(); ++c)
            for (VertexId v : comps[c]) at[idx(v)] = static_cast<int>(c);
        for (EdgeId e = 0; e < g.num_edges(); ++e) {
            const Edge& ed = g.edge(e);
            side[idx(x)][idx(e)] = at[idx(ed.tail == x ? ed.head : ed.tail)];
        }
    }
    const auto whole = components_avoiding(g, {});
    std::vector<int> comp_of(idx(g.num_vertices()));
    for (std::size_t c = 0; c < whole.size(); ++c)
        for (VertexId v : whole[c]) comp_of[idx(v)] = static_cast<int>(c);

    std::vector<char> placed(m, 0);
    std::vector<EdgeSet> out;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        if (placed[idx(e)]) continue;
        std::vector<EdgeId> cls;
        for (EdgeId f = e; f < g.num_edges(); ++f) {
            if (placed[idx(f)] || comp_of[idx(g.edge(e).tail)] != comp_of[idx(g.edge(f).tail)]) continue;
            bool together = true;
            for (VertexId x = 0; x < g.num_vertices() && together; ++x)
                together = side[idx(x)][idx(e)] == side[idx(x)][idx(f)];
            if (together) {
                cls.push_back(f);
                placed[idx(f)] = 1;
            }
        }
        out.emplace_back(std::move(cls));
    }
    return out;
}

bool is_rigid(const GainGraph& g) { return rank(g, EdgeSet::all(g)) == target(g); }

std::optional<EdgeId> redundancy_witness(const GainGraph& g) {
    const EdgeSet all = EdgeSet::all(g);
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        if (rank(g, all.without(e)) < target(g)) return e;
    return std::nullopt;
}

namespace {

bool complete(const GainGraph& g) {
    for (VertexId u = 0; u < g.num_vertices(); ++u)
        for (VertexId w = u + 1; w < g.num_vertices(); ++w) {
            const bool joined = std::any_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
                return (e.tail == u && e.head == w) || (e.tail == w && e.head == u);
            });
            if (!joined) return false;
        }
    return true;
}

std::optional<Certificate> redundancy_clause(const GainGraph& g, const EdgeSet& component,
                                             const std::vector<EdgeId>& parent_edge) {
    if (!bf::is_rigid(g)) return cert::NotRedundantlyRigid{std::nullopt, component};
    if (auto e = redundancy_witness(g)) return cert::NotRedundantlyRigid{parent_edge[idx(*e)], component};
    return std::nullopt;
}

Verdict finish(std::vector<Certificate> violations, Certificate positive) {
    Verdict v;
    v.globally_rigid = violations.empty();
    v.certificate = violations.empty() ? std::move(positive) : violations.front();
    v.violations = std::move(violations);
    return v;
}

}  // namespace

Verdict decide(const GainGraph& g) {
    const int n = g.num_vertices();
    if (n == 0) throw Error(ErrorKind::MalformedInput, "graph has no vertices");
    if (n == 1) return finish({}, cert::SmallCaseRigid{"single vertex orbit"});
    const auto comps = components_avoiding(g, {});
    if (comps.size() > 1) return finish({cert::Disconnected{comps.front()}}, {});

    std::vector<EdgeId> identity(idx(g.num_edges()));
    std::iota(identity.begin(), identity.end(), 0);
    if (g.k() == 0) {
        if (n <= 3)
            return complete(g) ? finish({}, cert::SmallCaseRigid{"complete graph on at most three vertices"})
                               : finish({cert::NotCompleteSmall{}}, {});
        std::vector<Certificate> v;
        if (auto sep = separating_pair(g)) v.push_back(cert::NotThreeConnected{sep->first, sep->second});
        if (auto r = redundancy_clause(g, {}, identity)) v.push_back(*r);
        return finish(std::move(v), cert::FiniteConditions{});
    }
    if (n == 2) {
        const int r = gain_rank(g, EdgeSet::all(g));
        if (r == g.k()) return finish({}, cert::SmallCaseRigid{"two vertex orbits with full-rank gain subgroup"});
        return finish({cert::SmallCaseFlexible{"two vertex orbits with gain subgroup of rank below k", r}}, {});
    }
    if (g.k() == 1) {
        std::vector<Certificate> v;
        if (auto c = cut_vertex(g)) v.push_back(cert::NotTwoConnected{*c});
        if (auto b = bf::find_zero_two_block(g)) v.push_back(cert::ZeroTwoBlockFound{*b, {}});
        if (auto r = redundancy_clause(g, {}, identity)) v.push_back(*r);
        return finish(std::move(v), cert::RankOneConditions{});
    }
    std::vector<Certificate> rank_fail, block_fail, redundancy_fail;
    cert::RankTwoConditions report;
    for (const EdgeSet& comp : two_connected_components(g)) {
        const Subgraph sub = subgraph(g, comp);
        const int r = gain_rank(sub.graph, EdgeSet::all(sub.graph));
        report.components.push_back({comp, sub.parent_vertex, r});
        if (r < 2) rank_fail.push_back(cert::RankDeficientComponent{comp, r});
        if (auto b = bf::find_zero_two_block(sub.graph)) block_fail.push_back(cert::ZeroTwoBlockFound{lift(sub, *b), comp});
        if (auto c = redundancy_clause(sub.graph, comp, sub.parent_edge)) redundancy_fail.push_back(*c);
    }
    std::vector<Certificate> v = std::move(rank_fail);
    v.insert(v.end(), block_fail.begin(), block_fail.end());
    v.insert(v.end(), redundancy_fail.begin(), redundancy_fail.end());
    return finish(std::move(v), std::move(report));
}

}  // namespace pgr::bf
