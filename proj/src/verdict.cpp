#include "pgr/verdict.hpp"

#include <algorithm>
#include <sstream>

#include "pgr/error.hpp"
#include "pgr/sparsity.hpp"

namespace pgr {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

bool is_complete_simple(const GainGraph& g) {
    for (VertexId u = 0; u < g.num_vertices(); ++u)
        for (VertexId w = u + 1; w < g.num_vertices(); ++w) {
            const auto inc = g.incident(u);
            if (std::none_of(inc.begin(), inc.end(), [&](const Incidence& i) { return i.other == w; })) return false;
        }
    return true;
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

ZeroTwoBlock lower(const Subgraph& sub, const ZeroTwoBlock& global) {
    auto local_vertex = [&](VertexId v) {
        auto it = std::find(sub.parent_vertex.begin(), sub.parent_vertex.end(), v);
        return it == sub.parent_vertex.end() ? -1 : static_cast<VertexId>(it - sub.parent_vertex.begin());
    };
    auto local_edge = [&](EdgeId e) {
        auto it = std::find(sub.parent_edge.begin(), sub.parent_edge.end(), e);
        return it == sub.parent_edge.end() ? -1 : static_cast<EdgeId>(it - sub.parent_edge.begin());
    };
    ZeroTwoBlock out;
    out.boundary = {local_vertex(global.boundary[0]), local_vertex(global.boundary[1])};
    for (VertexId v : global.interior) out.interior.push_back(local_vertex(v));
    std::vector<EdgeId> edges;
    for (EdgeId e : global.edges) edges.push_back(local_edge(e));
    out.edges = EdgeSet(std::move(edges));
    return out;
}

// Scope of a witness: the whole graph or one 2-connected component.
Subgraph scope_of(const GainGraph& g, const EdgeSet& component) {
    if (component.empty()) return subgraph(g, EdgeSet::all(g));
    return subgraph(g, component);
}

Verdict positive(Certificate c) {
    Verdict v;
    v.globally_rigid = true;
    v.certificate = std::move(c);
    return v;
}

Verdict negative(std::vector<Certificate> violations) {
    Verdict v;
    v.globally_rigid = false;
    v.certificate = violations.front();
    v.violations = std::move(violations);
    return v;
}

Verdict decide_finite(const GainGraph& g, Exec exec) {
    const int n = g.num_vertices();
    if (n <= 3) {
        if (is_complete_simple(g)) return positive(cert::SmallCaseRigid{"complete graph on at most three vertices"});
        return negative({cert::NotCompleteSmall{}});
    }
    std::vector<Certificate> violations;
    const ThreeConnectivity three = is_three_connected(g, exec);
    if (!three.three_connected)
        violations.push_back(cert::NotThreeConnected{three.separator->first, three.separator->second});
    const RedundancyReport red = is_redundantly_rigid(g, exec);
    if (!red.redundant) violations.push_back(cert::NotRedundantlyRigid{red.witness, {}});
    if (violations.empty()) return positive(cert::FiniteConditions{});
    return negative(std::move(violations));
}

Verdict decide_rank_one(const GainGraph& g, Exec exec) {
    std::vector<Certificate> violations;
    const BlockDecomposition bd = block_decomposition(g);
    if (!bd.cut_vertices.empty()) violations.push_back(cert::NotTwoConnected{bd.cut_vertices.front()});
    if (auto blk = find_zero_two_block(g, exec)) violations.push_back(cert::ZeroTwoBlockFound{std::move(*blk), {}});
    const RedundancyReport red = is_redundantly_rigid(g, exec);
    if (!red.redundant) violations.push_back(cert::NotRedundantlyRigid{red.witness, {}});
    if (violations.empty()) return positive(cert::RankOneConditions{});
    return negative(std::move(violations));
}

Verdict decide_rank_two(const GainGraph& g, Exec exec) {
    const BlockDecomposition bd = block_decomposition(g);
    std::vector<Certificate> rank_fail, block_fail, redundancy_fail;
    cert::RankTwoConditions report;
    for (const EdgeSet& comp : bd.blocks) {
        const Subgraph sub = subgraph(g, comp);
        const int rank = gain_subgroup_rank(sub.graph, EdgeSet::all(sub.graph));
        report.components.push_back({comp, sub.parent_vertex, rank});
        if (rank < 2) rank_fail.push_back(cert::RankDeficientComponent{comp, rank});
        if (auto blk = find_zero_two_block(sub.graph, exec))
            block_fail.push_back(cert::ZeroTwoBlockFound{lift(sub, *blk), comp});
        const RedundancyReport red = is_redundantly_rigid(sub.graph, exec);
        if (!red.redundant) {
            std::optional<EdgeId> edge;
            if (red.witness) edge = sub.parent_edge[idx(*red.witness)];
            redundancy_fail.push_back(cert::NotRedundantlyRigid{edge, comp});
        }
    }
    std::vector<Certificate> violations = std::move(rank_fail);
    violations.insert(violations.end(), block_fail.begin(), block_fail.end());
    violations.insert(violations.end(), redundancy_fail.begin(), redundancy_fail.end());
    if (violations.empty()) return positive(std::move(report));
    return negative(std::move(violations));
}

std::string vertex_list(const GainGraph& g, const std::vector<VertexId>& vs) {
    std::string s = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + g.name(vs[i]);
    return s + "}";
}

std::string edge_text(const GainGraph& g, EdgeId e) {
    const Edge& ed = g.edge(e);
    return "e" + std::to_string(e) + " " + g.name(ed.tail) + "->" + g.name(ed.head) + " " + to_string(ed.gain);
}

}  // namespace

std::string_view kind(const Certificate& c) {
    return std::visit(overloaded{
                          [](const cert::RankOneConditions&) { return std::string_view("satisfies_main0"); },
                          [](const cert::RankTwoConditions&) { return std::string_view("satisfies_main1"); },
                          [](const cert::FiniteConditions&) { return std::string_view("satisfies_jj"); },
                          [](const cert::SmallCaseRigid&) { return std::string_view("small_case_rigid"); },
                          [](const cert::Disconnected&) { return std::string_view("disconnected"); },
                          [](const cert::NotTwoConnected&) { return std::string_view("not_two_connected"); },
                          [](const cert::NotThreeConnected&) { return std::string_view("not_three_connected"); },
                          [](const cert::NotRedundantlyRigid&) { return std::string_view("not_redundantly_rigid"); },
                          [](const cert::ZeroTwoBlockFound&) { return std::string_view("zero_two_block"); },
                          [](const cert::RankDeficientComponent&) {
                              return std::string_view("rank_deficient_component");
                          },
                          [](const cert::SmallCaseFlexible&) { return std::string_view("small_case_flexible"); },
                          [](const cert::NotCompleteSmall&) { return std::string_view("not_complete_small"); },
                      },
                      c);
}

bool is_positive(const Certificate& c) { return c.index() <= 3; }

Verdict decide(const GainGraph& g, Exec exec) {
    const int n = g.num_vertices();
    if (n == 0) throw Error(ErrorKind::MalformedInput, "graph has no vertices");
    if (n == 1) return positive(cert::SmallCaseRigid{"single vertex orbit"});

    const auto comps = connected_components(g);
    if (comps.size() > 1) return negative({cert::Disconnected{comps.front()}});

    if (g.k() == 0) return decide_finite(g, exec);
    if (n == 2) {
        const int rank = gain_subgroup_rank(g, EdgeSet::all(g));
        if (rank == g.k()) return positive(cert::SmallCaseRigid{"two vertex orbits with full-rank gain subgroup"});
        return negative({cert::SmallCaseFlexible{"two vertex orbits with gain subgroup of rank below k", rank}});
    }
    return g.k() == 1 ? decide_rank_one(g, exec) : decide_rank_two(g, exec);
}

Verdict decide_surface(const GainGraph& g, Surface surface, Exec exec) {
    if (surface == Surface::cylinder && g.k() != 1)
        throw Error(ErrorKind::SurfaceRankMismatch, "a cylinder quotient needs k = 1");
    if (surface == Surface::torus && g.k() != 2)
        throw Error(ErrorKind::SurfaceRankMismatch, "a torus quotient needs k = 2");
    Verdict v = decide(g, exec);
    v.surface = surface;
    return v;
}

namespace {

bool check_one(const GainGraph& g, const Certificate& c) {
    return std::visit(
        overloaded{
            [&](const cert::RankOneConditions&) {
                return g.k() == 1 && g.num_vertices() >= 3 && is_two_connected(g) && !find_zero_two_block(g) &&
                       is_redundantly_rigid(g).redundant;
            },
            [&](const cert::RankTwoConditions& r) {
                if (g.k() != 2 || g.num_vertices() < 3 || !is_connected(g)) return false;
                for (const auto& comp : r.components) {
                    const Subgraph sub = subgraph(g, comp.edges);
                    if (gain_subgroup_rank(sub.graph, EdgeSet::all(sub.graph)) != 2 || comp.rank != 2) return false;
                    if (find_zero_two_block(sub.graph) || !is_redundantly_rigid(sub.graph).redundant) return false;
                }
                return block_decomposition(g).blocks.size() == r.components.size();
            },
            [&](const cert::FiniteConditions&) {
                return g.k() == 0 && g.num_vertices() >= 4 && is_three_connected(g).three_connected &&
                       is_redundantly_rigid(g).redundant;
            },
            [&](const cert::SmallCaseRigid&) {
                const int n = g.num_vertices();
                if (n == 1) return true;
                if (g.k() == 0) return n <= 3 && is_complete_simple(g);
                return n == 2 && gain_subgroup_rank(g, EdgeSet::all(g)) == g.k();
            },
            [&](const cert::Disconnected& d) {
                if (d.component.empty() || static_cast<int>(d.component.size()) >= g.num_vertices()) return false;
                for (VertexId v : d.component)
                    for (const Incidence& inc : g.incident(v))
                        if (std::find(d.component.begin(), d.component.end(), inc.other) == d.component.end())
                            return false;
                return true;
            },
            [&](const cert::NotTwoConnected& c2) {
                if (!g.has_vertex(c2.cut_vertex)) return false;
                return connected_components(remove_vertex(g, c2.cut_vertex).graph).size() > 1;
            },
            [&](const cert::NotThreeConnected& c3) {
                if (!g.has_vertex(c3.first) || !g.has_vertex(c3.second) || c3.first == c3.second) return false;
                const Subgraph a = remove_vertex(g, std::max(c3.first, c3.second));
                const Subgraph b = remove_vertex(a.graph, std::min(c3.first, c3.second));
                return connected_components(b.graph).size() > 1;
            },
            [&](const cert::NotRedundantlyRigid& r) {
                const Subgraph scope = scope_of(g, r.component);
                if (scope.graph.k() == 0 && scope.graph.num_vertices() < 2) return false;
                if (!r.edge) return !is_rigid(scope.graph);
                auto it = std::find(scope.parent_edge.begin(), scope.parent_edge.end(), *r.edge);
                if (it == scope.parent_edge.end()) return false;
                const EdgeId local = static_cast<EdgeId>(it - scope.parent_edge.begin());
                const EdgeSet all = EdgeSet::all(scope.graph);
                const int target = rigidity_target(scope.graph.num_vertices(), scope.graph.k());
                return rank2(scope.graph, all) == target && rank2(scope.graph, all.without(local)) < target;
            },
            [&](const cert::ZeroTwoBlockFound& z) {
                if (!z.block.edges.empty() && z.block.edges.ids().back() >= g.num_edges()) return false;
                const Subgraph scope = scope_of(g, z.component);
                return is_valid_zero_two_block(scope.graph, lower(scope, z.block));
            },
            [&](const cert::RankDeficientComponent& r) {
                check_edge_set(g, r.edges);
                return gain_subgroup_rank(g, r.edges) == r.rank && r.rank < g.k();
            },
            [&](const cert::SmallCaseFlexible& s) {
                return g.num_vertices() == 2 && g.k() >= 1 && gain_subgroup_rank(g, EdgeSet::all(g)) == s.rank &&
                       s.rank < g.k();
            },
            [&](const cert::NotCompleteSmall&) {
                return g.k() == 0 && g.num_vertices() <= 3 && !is_complete_simple(g);
            },
        },
        c);
}

}  // namespace

bool validate_certificate(const GainGraph& g, const Verdict& verdict) {
    if (verdict.globally_rigid != is_positive(verdict.certificate)) return false;
    if (!check_one(g, verdict.certificate)) return false;
    return std::all_of(verdict.violations.begin(), verdict.violations.end(),
                       [&](const Certificate& c) { return !is_positive(c) && check_one(g, c); });
}

std::string describe(const GainGraph& g, const Certificate& c, Surface surface) {
    const bool on_surface = surface != Surface::plane;
    std::ostringstream os;
    std::visit(overloaded{
                   [&](const cert::RankOneConditions&) {
                       os << "globally rigid: 2-connected, redundantly periodically rigid, and no "
                          << (on_surface ? "contractible subgraph H with |V(H)| >= 3 and |B(H)| = 2"
                                         : "(0,2)-block");
                   },
                   [&](const cert::RankTwoConditions& r) {
                       os << "globally rigid: each of the " << r.components.size()
                          << " 2-connected component(s) is redundantly periodically rigid, has rank two, and has no "
                          << (on_surface ? "contractible subgraph with two boundary vertices" : "(0,2)-block");
                   },
                   [&](const cert::FiniteConditions&) { os << "globally rigid: 3-connected and redundantly rigid"; },
                   [&](const cert::SmallCaseRigid& s) { os << "globally rigid: " << s.reason; },
                   [&](const cert::Disconnected& d) {
                       os << "not globally rigid: disconnected, component " << vertex_list(g, d.component)
                          << " can be translated independently";
                   },
                   [&](const cert::NotTwoConnected& c2) {
                       os << "not globally rigid: " << g.name(c2.cut_vertex) << " is a cut vertex";
                   },
                   [&](const cert::NotThreeConnected& c3) {
                       os << "not globally rigid: {" << g.name(c3.first) << "," << g.name(c3.second)
                          << "} is a separating pair";
                   },
                   [&](const cert::NotRedundantlyRigid& r) {
                       if (r.edge)
                           os << "not globally rigid: deleting " << edge_text(g, *r.edge) << " destroys rigidity";
                       else
                           os << "not globally rigid: not rigid";
                       if (!r.component.empty()) os << " (within a 2-connected component)";
                   },
                   [&](const cert::ZeroTwoBlockFound& z) {
                       os << "not globally rigid: "
                          << (on_surface ? "contractible subgraph with boundary " : "(0,2)-block with boundary ")
                          << vertex_list(g, {z.block.boundary[0], z.block.boundary[1]}) << " and interior "
                          << vertex_list(g, z.block.interior);
                   },
                   [&](const cert::RankDeficientComponent& r) {
                       os << "not globally rigid: a 2-connected component on "
                          << vertex_list(g, vertices_of(g, r.edges)) << " has gain rank " << r.rank << " < 2";
                   },
                   [&](const cert::SmallCaseFlexible& s) {
                       os << "not globally rigid: " << s.reason << " (rank " << s.rank << ")";
                   },
                   [&](const cert::NotCompleteSmall&) {
                       os << "not globally rigid: at most three vertices and not complete";
                   },
               },
               c);
    return os.str();
}

GainGraph contract_degree3(const GainGraph& g, VertexId v) {
    if (!g.has_vertex(v)) throw Error(ErrorKind::UnknownVertex, "contraction at unknown vertex");
    if (g.degree(v) != 3)
        throw Error(ErrorKind::WrongDegree, "vertex " + g.name(v) + " has degree " + std::to_string(g.degree(v)));
    Subgraph rest = remove_vertex(g, v);
    auto local = [v](VertexId u) { return u < v ? u : u - 1; };
    const auto inc = g.incident(v);
    for (std::size_t i = 0; i < inc.size(); ++i)
        for (std::size_t j = i + 1; j < inc.size(); ++j) {
            if (inc[i].other == inc[j].other) continue;
            const GainVec gain = g.gain_from(inc[j].edge, v) - g.gain_from(inc[i].edge, v);
            const VertexId u = local(inc[i].other);
            const VertexId w = local(inc[j].other);
            if (!rest.graph.find_edge(u, w, gain)) rest.graph.add_edge(u, w, gain);
        }
    return rest.graph;
}

bool is_nondegenerate(const GainGraph& g, VertexId v, const Lattice& lat) {
    if (!g.has_vertex(v)) throw Error(ErrorKind::UnknownVertex, "unknown vertex");
    if (lat.k() != g.k()) throw Error(ErrorKind::DimensionMismatch, "lattice rank does not match graph");
    std::vector<std::vector<Point>> by_neighbour(idx(g.num_vertices()));
    for (const Incidence& inc : g.incident(v)) by_neighbour[idx(inc.other)].push_back(lat.apply(g.gain_from(inc.edge, v)));
    for (const auto& pts : by_neighbour) {
        if (pts.size() > 3) return false;
        if (pts.size() == 2 && pts[0] == pts[1]) return false;
        if (pts.size() == 3) {
            const Rational cross = (pts[1][0] - pts[0][0]) * (pts[2][1] - pts[0][1]) -
                                   (pts[1][1] - pts[0][1]) * (pts[2][0] - pts[0][0]);
            if (is_zero(cross)) return false;
        }
    }
    return true;
}

}  // namespace pgr
