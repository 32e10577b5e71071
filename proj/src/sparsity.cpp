#include "pgr/sparsity.hpp"

#include <algorithm>
#include <numeric>

#include "pgr/error.hpp"

namespace pgr {

namespace {

// Incremental (2,2)/(2,3) pebble game over gain-labeled edges. Each vertex
// holds two pebbles; an accepted edge is covered by a pebble of its tail.
class PebbleGame {
public:
    explicit PebbleGame(const GainGraph& g)
        : g_(g),
          pebbles_(static_cast<std::size_t>(g.num_vertices()), 2),
          out_(static_cast<std::size_t>(g.num_vertices())),
          head_(static_cast<std::size_t>(g.num_edges()), -1),
          mark_(static_cast<std::size_t>(g.num_vertices()), 0) {}

    bool try_insert(EdgeId e) {
        const Edge& ed = g_.edge(e);
        const VertexId u = ed.tail;
        const VertexId v = ed.head;
        while (peb(u) + peb(v) < 4) {
            if (peb(u) < 2 && find_pebble(u, v)) continue;
            if (peb(v) < 2 && find_pebble(v, u)) continue;
            break;
        }
        const int gathered = peb(u) + peb(v);
        if (gathered < 3) return false;
        if (gathered == 3 && !closes_unbalanced(e, u, v)) return false;
        orient(e, peb(u) > 0 ? u : v, peb(u) > 0 ? v : u);
        return true;
    }

private:
    int& peb(VertexId v) { return pebbles_[static_cast<std::size_t>(v)]; }

    void orient(EdgeId e, VertexId tail, VertexId head) {
        out_[static_cast<std::size_t>(tail)].push_back(e);
        head_[static_cast<std::size_t>(e)] = head;
        --peb(tail);
    }

    void reverse(EdgeId e, VertexId tail) {
        auto& list = out_[static_cast<std::size_t>(tail)];
        list.erase(std::find(list.begin(), list.end(), e));
        const VertexId head = head_[static_cast<std::size_t>(e)];
        out_[static_cast<std::size_t>(head)].push_back(e);
        head_[static_cast<std::size_t>(e)] = tail;
        ++peb(tail);
        --peb(head);
    }

    // Moves one free pebble to `from` by reversing a directed path, never
    // passing through `blocked`.
    bool find_pebble(VertexId from, VertexId blocked) {
        ++epoch_;
        std::vector<std::pair<VertexId, EdgeId>> parent(static_cast<std::size_t>(g_.num_vertices()), {-1, -1});
        std::vector<VertexId> stack{from};
        mark_[static_cast<std::size_t>(from)] = epoch_;
        mark_[static_cast<std::size_t>(blocked)] = epoch_;
        while (!stack.empty()) {
            const VertexId x = stack.back();
            stack.pop_back();
            for (EdgeId e : out_[static_cast<std::size_t>(x)]) {
                const VertexId y = head_[static_cast<std::size_t>(e)];
                if (mark_[static_cast<std::size_t>(y)] == epoch_) continue;
                mark_[static_cast<std::size_t>(y)] = epoch_;
                parent[static_cast<std::size_t>(y)] = {x, e};
                if (peb(y) > 0) {
                    for (VertexId w = y; w != from;) {
                        const auto [p, pe] = parent[static_cast<std::size_t>(w)];
                        reverse(pe, p);
                        w = p;
                    }
                    return true;
                }
                stack.push_back(y);
            }
        }
        return false;
    }

    // With exactly three pebbles on {u, v}, the vertices reachable from {u, v}
    // span the smallest (2,3)-tight set containing both. Inserting e is legal
    // iff that set plus e is unbalanced.
    bool closes_unbalanced(EdgeId e, VertexId u, VertexId v) {
        if (g_.k() == 0) return false;
        ++epoch_;
        std::vector<VertexId> stack{u, v};
        mark_[static_cast<std::size_t>(u)] = epoch_;
        mark_[static_cast<std::size_t>(v)] = epoch_;
        std::vector<EdgeId> span{e};
        while (!stack.empty()) {
            const VertexId x = stack.back();
            stack.pop_back();
            for (EdgeId f : out_[static_cast<std::size_t>(x)]) {
                span.push_back(f);
                const VertexId y = head_[static_cast<std::size_t>(f)];
                if (mark_[static_cast<std::size_t>(y)] == epoch_) continue;
                mark_[static_cast<std::size_t>(y)] = epoch_;
                stack.push_back(y);
            }
        }
        return !is_balanced(g_, EdgeSet(std::move(span)));
    }

    const GainGraph& g_;
    std::vector<int> pebbles_;
    std::vector<std::vector<EdgeId>> out_;
    std::vector<VertexId> head_;
    std::vector<unsigned> mark_;
    unsigned epoch_ = 0;
};

void require_periodic(const GainGraph& g) {
    if (g.k() == 0)
        throw Error(ErrorKind::WrongPeriodicityRank, "periodic rigidity needs k >= 1; use the finite predicate");
}

void require_finite(const GainGraph& g) {
    if (g.k() != 0)
        throw Error(ErrorKind::WrongPeriodicityRank, "finite rigidity needs k = 0; use the periodic predicate");
    if (g.num_vertices() < 2) throw Error(ErrorKind::TooSmall, "finite rigidity needs at least two vertices");
}

}  // namespace

int rigidity_target(int num_vertices, int k) {
    constexpr int d = 2;
    const int free = d - k;
    return d * num_vertices - d - free * (free - 1) / 2;
}

EdgeSet independent_basis(const GainGraph& g, const EdgeSet& f) {
    check_edge_set(g, f);
    PebbleGame game(g);
    std::vector<EdgeId> accepted;
    for (EdgeId e : f)
        if (game.try_insert(e)) accepted.push_back(e);
    return EdgeSet(std::move(accepted));
}

bool is_independent(const GainGraph& g, const EdgeSet& f) {
    check_edge_set(g, f);
    PebbleGame game(g);
    return std::all_of(f.begin(), f.end(), [&](EdgeId e) { return game.try_insert(e); });
}

int rank2(const GainGraph& g, const EdgeSet& f) { return static_cast<int>(independent_basis(g, f).size()); }

bool is_periodically_rigid(const GainGraph& g) {
    require_periodic(g);
    return rank2(g, EdgeSet::all(g)) == rigidity_target(g.num_vertices(), g.k());
}

bool is_rigid_finite(const GainGraph& g) {
    require_finite(g);
    return rank2(g, EdgeSet::all(g)) == rigidity_target(g.num_vertices(), 0);
}

bool is_rigid(const GainGraph& g) { return g.k() == 0 ? is_rigid_finite(g) : is_periodically_rigid(g); }

RedundancyReport is_redundantly_rigid(const GainGraph& g, Exec exec) {
    if (g.k() == 0) require_finite(g);
    RedundancyReport report;
    const EdgeSet all = EdgeSet::all(g);
    const EdgeSet basis = independent_basis(g, all);
    const int target = rigidity_target(g.num_vertices(), g.k());
    report.rigid = static_cast<int>(basis.size()) == target;
    if (!report.rigid) return report;

    // Deleting an edge outside the basis keeps the basis, so only basis
    // edges can be coloops.
    const std::vector<EdgeId>& candidates = basis.ids();
    const auto n = static_cast<long>(candidates.size());
    std::optional<EdgeId> first;
    if (exec == Exec::serial) {
        for (EdgeId e : candidates) {
            if (rank2(g, all.without(e)) < target) {
                first = e;
                break;
            }
        }
    } else {
        std::vector<char> fails(candidates.size(), 0);
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < n; ++i)
            fails[static_cast<std::size_t>(i)] = rank2(g, all.without(candidates[static_cast<std::size_t>(i)])) < target;
        for (std::size_t i = 0; i < candidates.size(); ++i)
            if (fails[i]) {
                first = candidates[i];
                break;
            }
    }
    report.witness = first;
    report.redundant = !first.has_value();
    return report;
}

Circuit fundamental_circuit(const GainGraph& g, const EdgeSet& basis, EdgeId e) {
    check_edge_set(g, basis);
    if (e < 0 || e >= g.num_edges()) throw Error(ErrorKind::MalformedInput, "unknown edge");
    if (!is_independent(g, basis)) throw Error(ErrorKind::MalformedInput, "basis is not independent");
    EdgeSet current = basis.with(e);
    if (is_independent(g, current)) throw Error(ErrorKind::NotDependent, "basis plus edge is independent");
    for (EdgeId x : basis.with(e)) {
        EdgeSet trial = current.without(x);
        if (!is_independent(g, trial)) current = std::move(trial);
    }
    return Circuit{std::move(current)};
}

MPartition m_components(const GainGraph& g) {
    const EdgeSet all = EdgeSet::all(g);
    const EdgeSet basis = independent_basis(g, all);
    std::vector<EdgeId> parent(static_cast<std::size_t>(g.num_edges()));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](EdgeId x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (EdgeId e : all) {
        if (basis.contains(e)) continue;
        const Circuit c = fundamental_circuit(g, basis, e);
        for (EdgeId x : c.edges) {
            const EdgeId a = find(x), b = find(e);
            if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
        }
    }
    std::vector<std::vector<EdgeId>> groups(static_cast<std::size_t>(g.num_edges()));
    for (EdgeId e : all) groups[static_cast<std::size_t>(find(e))].push_back(e);
    MPartition partition;
    for (auto& grp : groups)
        if (!grp.empty()) partition.classes.emplace_back(std::move(grp));
    return partition;
}

bool is_m_connected(const GainGraph& g) {
    if (g.num_edges() < 2) throw Error(ErrorKind::TooFewEdges, "M-connectivity needs at least two edges");
    return m_components(g).classes.size() == 1;
}

}  // namespace pgr
