#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace pgr {

using VertexId = int;
using EdgeId = int;

inline constexpr int kMaxPeriodicity = 2;

// Element of Z^k, k in {0, 1, 2}. Coordinates past k are kept at zero.
class GainVec {
public:
    GainVec() = default;
    explicit GainVec(int k);
    GainVec(std::initializer_list<std::int64_t> coords);

    int dim() const noexcept { return k_; }
    bool is_zero() const noexcept { return c_[0] == 0 && c_[1] == 0; }

    std::int64_t operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    std::int64_t& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }

    GainVec& operator+=(const GainVec& o);
    GainVec& operator-=(const GainVec& o);
    friend GainVec operator+(GainVec a, const GainVec& b) { return a += b; }
    friend GainVec operator-(GainVec a, const GainVec& b) { return a -= b; }
    GainVec operator-() const;

    friend bool operator==(const GainVec&, const GainVec&) = default;
    friend auto operator<=>(const GainVec&, const GainVec&) = default;

private:
    int k_ = 0;
    std::array<std::int64_t, kMaxPeriodicity> c_{};
};

std::string to_string(const GainVec& g);

// Stored in canonical orientation: tail < head. Reversal negates the gain.
struct Edge {
    VertexId tail;
    VertexId head;
    GainVec gain;
};

struct Incidence {
    EdgeId edge;
    VertexId other;
};

// Finite loopless semi-simple Z^k-labeled multigraph.
class GainGraph {
public:
    explicit GainGraph(int k = 0);
    GainGraph(int k, int num_vertices);
    GainGraph(int k, std::vector<std::string> names);

    VertexId add_vertex(std::string name = {});

    // Normalizes the edge to tail < head and rejects loops, identical edges
    // and gains of the wrong arity.
    EdgeId add_edge(VertexId tail, VertexId head, GainVec gain);

    int k() const noexcept { return k_; }
    int num_vertices() const noexcept { return static_cast<int>(names_.size()); }
    int num_edges() const noexcept { return static_cast<int>(edges_.size()); }

    const Edge& edge(EdgeId e) const { return edges_.at(static_cast<std::size_t>(e)); }
    std::span<const Edge> edges() const noexcept { return edges_; }
    std::span<const Incidence> incident(VertexId v) const { return adj_.at(static_cast<std::size_t>(v)); }
    int degree(VertexId v) const { return static_cast<int>(incident(v).size()); }

    const std::string& name(VertexId v) const { return names_.at(static_cast<std::size_t>(v)); }
    std::optional<VertexId> find_vertex(std::string_view name) const;
    bool has_vertex(VertexId v) const noexcept { return v >= 0 && v < num_vertices(); }

    // Looks up an edge by any orientation of its key.
    std::optional<EdgeId> find_edge(VertexId tail, VertexId head, const GainVec& gain) const;

    VertexId other_end(EdgeId e, VertexId v) const;
    // Gain of e when traversed starting at `from`.
    GainVec gain_from(EdgeId e, VertexId from) const;

private:
    using Key = std::tuple<VertexId, VertexId, GainVec>;

    int k_;
    std::vector<std::string> names_;
    std::vector<Edge> edges_;
    std::vector<std::vector<Incidence>> adj_;
    std::map<Key, EdgeId> keys_;
};

// Value-returning form of GainGraph::add_edge.
GainGraph add_edge(const GainGraph& g, VertexId tail, VertexId head, GainVec gain);

// Sorted, duplicate-free set of edge ids of one graph.
class EdgeSet {
public:
    EdgeSet() = default;
    explicit EdgeSet(std::vector<EdgeId> ids);
    EdgeSet(std::initializer_list<EdgeId> ids) : EdgeSet(std::vector<EdgeId>(ids)) {}

    static EdgeSet all(const GainGraph& g);

    bool contains(EdgeId e) const;
    std::size_t size() const noexcept { return ids_.size(); }
    bool empty() const noexcept { return ids_.empty(); }
    auto begin() const noexcept { return ids_.begin(); }
    auto end() const noexcept { return ids_.end(); }
    const std::vector<EdgeId>& ids() const noexcept { return ids_; }

    EdgeSet with(EdgeId e) const;
    EdgeSet without(EdgeId e) const;

    friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

private:
    std::vector<EdgeId> ids_;
};

// Throws MalformedInput when f names an edge outside g.
void check_edge_set(const GainGraph& g, const EdgeSet& f);

// V(F): vertices incident to f, ascending.
std::vector<VertexId> vertices_of(const GainGraph& g, const EdgeSet& f);

// Alternating vertex/edge sequence; vertices.size() == edges.size() + 1.
struct Walk {
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edges;
};

GainVec walk_gain(const GainGraph& g, const Walk& walk);

// Switching at v by gamma: +gamma on edges leaving v, -gamma on edges entering v.
GainGraph switch_vertex(const GainGraph& g, VertexId v, const GainVec& gamma);

// Spanning forest of (V(F), F) with tree potentials.
struct GainForest {
    std::vector<VertexId> root;        // -1 when v is not incident to f
    std::vector<GainVec> potential;    // walk gain from root to v along the tree
    std::vector<GainVec> cycle_gains;  // fundamental-cycle gains of non-tree edges
    int components = 0;
};

GainForest gain_forest(const GainGraph& g, const EdgeSet& f);

int gain_subgroup_rank(const GainGraph& g, const EdgeSet& f);
bool is_balanced(const GainGraph& g, const EdgeSet& f);

// Standalone graph on V(F) carrying exactly the edges of F, with maps back
// into the parent graph.
struct Subgraph {
    GainGraph graph;
    std::vector<VertexId> parent_vertex;
    std::vector<EdgeId> parent_edge;
};

Subgraph subgraph(const GainGraph& g, const EdgeSet& f);

// g with vertex v and its incident edges removed.
Subgraph remove_vertex(const GainGraph& g, VertexId v);

}  // namespace pgr
