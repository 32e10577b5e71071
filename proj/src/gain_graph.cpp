#include "pgr/gain_graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <sstream>

#include "pgr/error.hpp"
#include "pgr/int_rank.hpp"

namespace pgr {

GainVec::GainVec(int k) : k_(k) {
    if (k < 0 || k > kMaxPeriodicity)
        throw Error(ErrorKind::DimensionMismatch, "periodicity rank must be 0, 1 or 2");
}

GainVec::GainVec(std::initializer_list<std::int64_t> coords) : GainVec(static_cast<int>(coords.size())) {
    std::copy(coords.begin(), coords.end(), c_.begin());
}

GainVec& GainVec::operator+=(const GainVec& o) {
    if (k_ != o.k_) throw Error(ErrorKind::DimensionMismatch, "adding gains of different arity");
    c_[0] += o.c_[0];
    c_[1] += o.c_[1];
    return *this;
}

GainVec& GainVec::operator-=(const GainVec& o) {
    if (k_ != o.k_) throw Error(ErrorKind::DimensionMismatch, "subtracting gains of different arity");
    c_[0] -= o.c_[0];
    c_[1] -= o.c_[1];
    return *this;
}

GainVec GainVec::operator-() const {
    GainVec r = *this;
    r.c_[0] = -r.c_[0];
    r.c_[1] = -r.c_[1];
    return r;
}

std::string to_string(const GainVec& g) {
    std::ostringstream os;
    os << '(';
    for (int i = 0; i < g.dim(); ++i) os << (i ? "," : "") << g[i];
    os << ')';
    return os.str();
}

GainGraph::GainGraph(int k) : k_(k) {
    if (k < 0 || k > kMaxPeriodicity)
        throw Error(ErrorKind::DimensionMismatch, "periodicity rank must be 0, 1 or 2");
}

GainGraph::GainGraph(int k, int num_vertices) : GainGraph(k) {
    for (int i = 0; i < num_vertices; ++i) add_vertex();
}

GainGraph::GainGraph(int k, std::vector<std::string> names) : GainGraph(k) {
    for (auto& n : names) add_vertex(std::move(n));
}

VertexId GainGraph::add_vertex(std::string name) {
    const auto id = static_cast<VertexId>(names_.size());
    if (name.empty()) name = "v" + std::to_string(id);
    names_.push_back(std::move(name));
    adj_.emplace_back();
    return id;
}

EdgeId GainGraph::add_edge(VertexId tail, VertexId head, GainVec gain) {
    if (!has_vertex(tail) || !has_vertex(head))
        throw Error(ErrorKind::UnknownVertex, "edge endpoint is not a vertex of the graph");
    if (gain.dim() != k_)
        throw Error(ErrorKind::DimensionMismatch,
                    "gain " + to_string(gain) + " has arity " + std::to_string(gain.dim()) + ", expected " +
                        std::to_string(k_));
    if (tail == head) throw Error(ErrorKind::LoopEdge, "loop at vertex " + name(tail));
    constexpr std::int64_t lim = std::numeric_limits<std::int32_t>::max();
    for (int i = 0; i < k_; ++i)
        if (gain[i] > lim || gain[i] < -lim)
            throw Error(ErrorKind::MalformedInput, "gain coordinate exceeds 32-bit range");
    if (tail > head) {
        std::swap(tail, head);
        gain = -gain;
    }
    Key key{tail, head, gain};
    if (keys_.contains(key))
        throw Error(ErrorKind::IdenticalEdge,
                    "edge " + name(tail) + "->" + name(head) + " " + to_string(gain) + " already present");
    const auto id = static_cast<EdgeId>(edges_.size());
    keys_.emplace(std::move(key), id);
    edges_.push_back(Edge{tail, head, gain});
    adj_[static_cast<std::size_t>(tail)].push_back({id, head});
    adj_[static_cast<std::size_t>(head)].push_back({id, tail});
    return id;
}

std::optional<VertexId> GainGraph::find_vertex(std::string_view n) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == n) return static_cast<VertexId>(i);
    return std::nullopt;
}

std::optional<EdgeId> GainGraph::find_edge(VertexId tail, VertexId head, const GainVec& gain) const {
    if (tail > head) return find_edge(head, tail, -gain);
    auto it = keys_.find(Key{tail, head, gain});
    if (it == keys_.end()) return std::nullopt;
    return it->second;
}

VertexId GainGraph::other_end(EdgeId e, VertexId v) const {
    const Edge& ed = edge(e);
    return ed.tail == v ? ed.head : ed.tail;
}

GainVec GainGraph::gain_from(EdgeId e, VertexId from) const {
    const Edge& ed = edge(e);
    return ed.tail == from ? ed.gain : -ed.gain;
}

GainGraph add_edge(const GainGraph& g, VertexId tail, VertexId head, GainVec gain) {
    GainGraph out = g;
    out.add_edge(tail, head, std::move(gain));
    return out;
}

EdgeSet::EdgeSet(std::vector<EdgeId> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

EdgeSet EdgeSet::all(const GainGraph& g) {
    std::vector<EdgeId> ids(static_cast<std::size_t>(g.num_edges()));
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<EdgeId>(i);
    EdgeSet s;
    s.ids_ = std::move(ids);
    return s;
}

bool EdgeSet::contains(EdgeId e) const { return std::binary_search(ids_.begin(), ids_.end(), e); }

EdgeSet EdgeSet::with(EdgeId e) const {
    EdgeSet s = *this;
    auto it = std::lower_bound(s.ids_.begin(), s.ids_.end(), e);
    if (it == s.ids_.end() || *it != e) s.ids_.insert(it, e);
    return s;
}

EdgeSet EdgeSet::without(EdgeId e) const {
    EdgeSet s = *this;
    auto it = std::lower_bound(s.ids_.begin(), s.ids_.end(), e);
    if (it != s.ids_.end() && *it == e) s.ids_.erase(it);
    return s;
}

void check_edge_set(const GainGraph& g, const EdgeSet& f) {
    if (!f.empty() && (f.ids().front() < 0 || f.ids().back() >= g.num_edges()))
        throw Error(ErrorKind::MalformedInput, "edge set refers to an edge outside the graph");
}

std::vector<VertexId> vertices_of(const GainGraph& g, const EdgeSet& f) {
    std::vector<char> seen(static_cast<std::size_t>(g.num_vertices()), 0);
    for (EdgeId e : f) {
        seen[static_cast<std::size_t>(g.edge(e).tail)] = 1;
        seen[static_cast<std::size_t>(g.edge(e).head)] = 1;
    }
    std::vector<VertexId> out;
    for (std::size_t v = 0; v < seen.size(); ++v)
        if (seen[v]) out.push_back(static_cast<VertexId>(v));
    return out;
}

GainVec walk_gain(const GainGraph& g, const Walk& walk) {
    if (walk.vertices.size() != walk.edges.size() + 1)
        throw Error(ErrorKind::InvalidWalk, "walk must alternate vertices and edges");
    for (VertexId v : walk.vertices)
        if (!g.has_vertex(v)) throw Error(ErrorKind::InvalidWalk, "walk visits an unknown vertex");
    GainVec total(g.k());
    for (std::size_t i = 0; i < walk.edges.size(); ++i) {
        const EdgeId e = walk.edges[i];
        if (e < 0 || e >= g.num_edges()) throw Error(ErrorKind::InvalidWalk, "walk uses an unknown edge");
        const Edge& ed = g.edge(e);
        const VertexId from = walk.vertices[i];
        const VertexId to = walk.vertices[i + 1];
        if (ed.tail == from && ed.head == to)
            total += ed.gain;
        else if (ed.head == from && ed.tail == to)
            total -= ed.gain;
        else
            throw Error(ErrorKind::InvalidWalk, "edge " + std::to_string(e) + " does not join consecutive walk vertices");
    }
    return total;
}

GainGraph switch_vertex(const GainGraph& g, VertexId v, const GainVec& gamma) {
    if (!g.has_vertex(v)) throw Error(ErrorKind::UnknownVertex, "switching at unknown vertex");
    if (gamma.dim() != g.k()) throw Error(ErrorKind::DimensionMismatch, "switching gain has wrong arity");
    GainGraph out(g.k());
    for (VertexId u = 0; u < g.num_vertices(); ++u) out.add_vertex(g.name(u));
    for (const Edge& e : g.edges()) {
        GainVec gain = e.gain;
        if (e.tail == v) gain += gamma;
        if (e.head == v) gain -= gamma;
        out.add_edge(e.tail, e.head, gain);
    }
    return out;
}

GainForest gain_forest(const GainGraph& g, const EdgeSet& f) {
    check_edge_set(g, f);
    const auto n = static_cast<std::size_t>(g.num_vertices());
    GainForest forest;
    forest.root.assign(n, -1);
    forest.potential.assign(n, GainVec(g.k()));

    std::vector<std::vector<Incidence>> adj(n);
    for (EdgeId e : f) {
        const Edge& ed = g.edge(e);
        adj[static_cast<std::size_t>(ed.tail)].push_back({e, ed.head});
        adj[static_cast<std::size_t>(ed.head)].push_back({e, ed.tail});
    }

    std::vector<char> tree_edge(static_cast<std::size_t>(g.num_edges()), 0);
    for (VertexId s = 0; s < static_cast<VertexId>(n); ++s) {
        if (adj[static_cast<std::size_t>(s)].empty() || forest.root[static_cast<std::size_t>(s)] != -1) continue;
        ++forest.components;
        forest.root[static_cast<std::size_t>(s)] = s;
        std::queue<VertexId> q;
        q.push(s);
        while (!q.empty()) {
            const VertexId u = q.front();
            q.pop();
            for (const Incidence& inc : adj[static_cast<std::size_t>(u)]) {
                auto& r = forest.root[static_cast<std::size_t>(inc.other)];
                if (r != -1) continue;
                r = s;
                tree_edge[static_cast<std::size_t>(inc.edge)] = 1;
                forest.potential[static_cast<std::size_t>(inc.other)] =
                    forest.potential[static_cast<std::size_t>(u)] + g.gain_from(inc.edge, u);
                q.push(inc.other);
            }
        }
    }
    for (EdgeId e : f) {
        if (tree_edge[static_cast<std::size_t>(e)]) continue;
        const Edge& ed = g.edge(e);
        forest.cycle_gains.push_back(forest.potential[static_cast<std::size_t>(ed.tail)] + ed.gain -
                                     forest.potential[static_cast<std::size_t>(ed.head)]);
    }
    return forest;
}

int gain_subgroup_rank(const GainGraph& g, const EdgeSet& f) {
    if (g.k() == 0) {
        check_edge_set(g, f);
        return 0;
    }
    const GainForest forest = gain_forest(g, f);
    std::vector<IntRow> rows;
    for (const GainVec& c : forest.cycle_gains) {
        if (c.is_zero()) continue;
        IntRow row(static_cast<std::size_t>(g.k()));
        for (int i = 0; i < g.k(); ++i) row[static_cast<std::size_t>(i)] = c[i];
        rows.push_back(std::move(row));
    }
    return integer_rank(std::move(rows));
}

bool is_balanced(const GainGraph& g, const EdgeSet& f) {
    if (g.k() == 0) {
        check_edge_set(g, f);
        return true;
    }
    const GainForest forest = gain_forest(g, f);
    return std::all_of(forest.cycle_gains.begin(), forest.cycle_gains.end(),
                       [](const GainVec& c) { return c.is_zero(); });
}

Subgraph subgraph(const GainGraph& g, const EdgeSet& f) {
    check_edge_set(g, f);
    Subgraph sub{GainGraph(g.k()), {}, {}};
    std::vector<VertexId> local(static_cast<std::size_t>(g.num_vertices()), -1);
    for (VertexId v : vertices_of(g, f)) {
        local[static_cast<std::size_t>(v)] = sub.graph.add_vertex(g.name(v));
        sub.parent_vertex.push_back(v);
    }
    for (EdgeId e : f) {
        const Edge& ed = g.edge(e);
        sub.graph.add_edge(local[static_cast<std::size_t>(ed.tail)], local[static_cast<std::size_t>(ed.head)], ed.gain);
        sub.parent_edge.push_back(e);
    }
    return sub;
}

Subgraph remove_vertex(const GainGraph& g, VertexId v) {
    if (!g.has_vertex(v)) throw Error(ErrorKind::UnknownVertex, "cannot remove unknown vertex");
    Subgraph sub{GainGraph(g.k()), {}, {}};
    std::vector<VertexId> local(static_cast<std::size_t>(g.num_vertices()), -1);
    for (VertexId u = 0; u < g.num_vertices(); ++u) {
        if (u == v) continue;
        local[static_cast<std::size_t>(u)] = sub.graph.add_vertex(g.name(u));
        sub.parent_vertex.push_back(u);
    }
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const Edge& ed = g.edge(e);
        if (ed.tail == v || ed.head == v) continue;
        sub.graph.add_edge(local[static_cast<std::size_t>(ed.tail)], local[static_cast<std::size_t>(ed.head)], ed.gain);
        sub.parent_edge.push_back(e);
    }
    return sub;
}

}  // namespace pgr
