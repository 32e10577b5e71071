#include "pgr/blocks.hpp"

#include <algorithm>
#include <queue>
#include <tuple>

#include "pgr/error.hpp"

namespace pgr {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

// Components of g with the `removed` vertices deleted.
std::vector<std::vector<VertexId>> components_without(const GainGraph& g, std::span<const VertexId> removed) {
    std::vector<char> seen(idx(g.num_vertices()), 0);
    for (VertexId r : removed) seen[idx(r)] = 1;
    std::vector<std::vector<VertexId>> comps;
    for (VertexId s = 0; s < g.num_vertices(); ++s) {
        if (seen[idx(s)]) continue;
        seen[idx(s)] = 1;
        std::vector<VertexId> comp{s};
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (const Incidence& inc : g.incident(comp[i]))
                if (!seen[idx(inc.other)]) {
                    seen[idx(inc.other)] = 1;
                    comp.push_back(inc.other);
                }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

struct Candidate {
    ZeroTwoBlock block;
    long pair_rank = 0;
};

bool better(const Candidate& a, const Candidate& b) {
    if (a.block.interior.size() != b.block.interior.size()) return a.block.interior.size() > b.block.interior.size();
    return a.pair_rank < b.pair_rank;
}

// Best (0,2)-block with boundary {a, b}. The interior of any such block is a
// union of components of G - {a, b}, so it suffices to try the minimal
// combinations of balanced components and a-b edges.
std::optional<ZeroTwoBlock> best_block_for_pair(const GainGraph& g, VertexId a, VertexId b) {
    struct Part {
        std::vector<VertexId> vertices;
        std::vector<EdgeId> edges;
        int at_a = 0;
        int at_b = 0;
    };
    const std::array<VertexId, 2> removed{a, b};
    std::vector<VertexId> comp_of(idx(g.num_vertices()), -1);
    std::vector<Part> parts;
    for (auto& comp : components_without(g, removed)) {
        Part p;
        for (VertexId v : comp) comp_of[idx(v)] = static_cast<VertexId>(parts.size());
        p.vertices = std::move(comp);
        parts.push_back(std::move(p));
    }
    std::vector<EdgeId> ab_edges;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const Edge& ed = g.edge(e);
        const bool ta = ed.tail == a || ed.head == a;
        const bool tb = ed.tail == b || ed.head == b;
        if (ta && tb) {
            ab_edges.push_back(e);
            continue;
        }
        const VertexId inner = (ta || tb) ? (ta ? g.other_end(e, a) : g.other_end(e, b)) : ed.tail;
        Part& p = parts[idx(comp_of[idx(inner)])];
        p.edges.push_back(e);
        p.at_a += ta;
        p.at_b += tb;
    }

    const int deg_a = g.degree(a);
    const int deg_b = g.degree(b);
    std::vector<const Part*> both, only_a, only_b, neither;
    for (const Part& p : parts) {
        if (p.edges.empty() || !is_balanced(g, EdgeSet(p.edges))) continue;
        if (p.at_a && p.at_b)
            both.push_back(&p);
        else if (p.at_a)
            only_a.push_back(&p);
        else if (p.at_b)
            only_b.push_back(&p);
        else
            neither.push_back(&p);
    }

    std::optional<ZeroTwoBlock> best;
    auto offer = [&](std::vector<const Part*> used, std::optional<EdgeId> ab) {
        ZeroTwoBlock blk;
        blk.boundary = {a, b};
        std::vector<EdgeId> edges;
        for (const Part* p : used) {
            blk.interior.insert(blk.interior.end(), p->vertices.begin(), p->vertices.end());
            edges.insert(edges.end(), p->edges.begin(), p->edges.end());
        }
        if (ab) edges.push_back(*ab);
        std::sort(blk.interior.begin(), blk.interior.end());
        blk.edges = EdgeSet(std::move(edges));
        if (!best || blk.interior.size() > best->interior.size()) best = std::move(blk);
    };

    const bool have_ab = !ab_edges.empty();
    for (const Part* p : both)
        if (deg_a > p->at_a && deg_b > p->at_b) offer({p}, std::nullopt);
    if (have_ab) {
        for (const Part* p : only_a)
            if (deg_a > p->at_a + 1 && deg_b > 1) offer({p}, ab_edges.front());
        for (const Part* p : only_b)
            if (deg_a > 1 && deg_b > p->at_b + 1) offer({p}, ab_edges.front());
    }
    for (const Part* pa : only_a)
        for (const Part* pb : only_b)
            if (deg_a > pa->at_a && deg_b > pb->at_b) offer({pa, pb}, std::nullopt);
    if (have_ab)
        for (const Part* p : neither)
            if (deg_a > 1 && deg_b > 1) offer({p}, ab_edges.front());
    return best;
}

bool connected_without(const GainGraph& g, VertexId x, VertexId y) {
    const std::array<VertexId, 2> removed{x, y};
    return components_without(g, removed).size() <= 1;
}

}  // namespace

std::vector<std::vector<VertexId>> connected_components(const GainGraph& g) { return components_without(g, {}); }

bool is_connected(const GainGraph& g) { return connected_components(g).size() <= 1; }

BlockDecomposition block_decomposition(const GainGraph& g) {
    const auto n = idx(g.num_vertices());
    std::vector<int> disc(n, -1), low(n, -1);
    std::vector<char> is_cut(n, 0);
    std::vector<EdgeId> edge_stack;
    BlockDecomposition out;
    int timer = 0;

    struct Frame {
        VertexId v;
        EdgeId via;
        std::size_t next;
    };

    for (VertexId root = 0; root < g.num_vertices(); ++root) {
        if (disc[idx(root)] != -1 || g.degree(root) == 0) continue;
        int root_children = 0;
        std::vector<Frame> frames{{root, -1, 0}};
        disc[idx(root)] = low[idx(root)] = timer++;
        while (!frames.empty()) {
            Frame& f = frames.back();
            const auto inc = g.incident(f.v);
            if (f.next < inc.size()) {
                const Incidence in = inc[f.next++];
                if (in.edge == f.via) continue;
                const VertexId w = in.other;
                if (disc[idx(w)] == -1) {
                    edge_stack.push_back(in.edge);
                    disc[idx(w)] = low[idx(w)] = timer++;
                    if (f.v == root) ++root_children;
                    frames.push_back({w, in.edge, 0});
                } else if (disc[idx(w)] < disc[idx(f.v)]) {
                    edge_stack.push_back(in.edge);
                    low[idx(f.v)] = std::min(low[idx(f.v)], disc[idx(w)]);
                }
                continue;
            }
            const Frame done = f;
            frames.pop_back();
            if (frames.empty()) break;
            const VertexId u = frames.back().v;
            low[idx(u)] = std::min(low[idx(u)], low[idx(done.v)]);
            if (low[idx(done.v)] >= disc[idx(u)]) {
                if (u != root) is_cut[idx(u)] = 1;
                std::vector<EdgeId> block;
                while (true) {
                    const EdgeId e = edge_stack.back();
                    edge_stack.pop_back();
                    block.push_back(e);
                    if (e == done.via) break;
                }
                out.blocks.emplace_back(std::move(block));
            }
        }
        if (root_children > 1) is_cut[idx(root)] = 1;
    }
    for (std::size_t v = 0; v < n; ++v)
        if (is_cut[v]) out.cut_vertices.push_back(static_cast<VertexId>(v));
    std::sort(out.blocks.begin(), out.blocks.end(),
              [](const EdgeSet& x, const EdgeSet& y) { return x.ids().front() < y.ids().front(); });
    return out;
}

bool is_two_connected(const GainGraph& g) {
    if (g.num_vertices() < 2 || !is_connected(g)) return false;
    return block_decomposition(g).cut_vertices.empty();
}

ThreeConnectivity is_three_connected(const GainGraph& g, Exec exec) {
    const int n = g.num_vertices();
    if (n < 4) throw Error(ErrorKind::TooSmall, "3-connectivity test needs at least four vertices");
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (VertexId x = 0; x < n; ++x)
        for (VertexId y = x + 1; y < n; ++y) pairs.emplace_back(x, y);

    const long count = static_cast<long>(pairs.size());
    long first = count;
    if (exec == Exec::serial) {
        for (long i = 0; i < count; ++i)
            if (!connected_without(g, pairs[static_cast<std::size_t>(i)].first, pairs[static_cast<std::size_t>(i)].second)) {
                first = i;
                break;
            }
    } else {
#pragma omp parallel for schedule(dynamic) reduction(min : first)
        for (long i = 0; i < count; ++i)
            if (!connected_without(g, pairs[static_cast<std::size_t>(i)].first, pairs[static_cast<std::size_t>(i)].second))
                first = std::min(first, i);
    }
    ThreeConnectivity result;
    result.three_connected = first == count;
    if (!result.three_connected) result.separator = pairs[static_cast<std::size_t>(first)];
    return result;
}

std::optional<ZeroTwoBlock> find_zero_two_block(const GainGraph& g, Exec exec) {
    const int n = g.num_vertices();
    if (n < 3) return std::nullopt;
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (VertexId a = 0; a < n; ++a)
        for (VertexId b = a + 1; b < n; ++b) pairs.emplace_back(a, b);

    std::vector<std::optional<ZeroTwoBlock>> per_pair(pairs.size());
    const long count = static_cast<long>(pairs.size());
    if (exec == Exec::serial) {
        for (long i = 0; i < count; ++i) {
            const auto [a, b] = pairs[static_cast<std::size_t>(i)];
            per_pair[static_cast<std::size_t>(i)] = best_block_for_pair(g, a, b);
        }
    } else {
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < count; ++i) {
            const auto [a, b] = pairs[static_cast<std::size_t>(i)];
            per_pair[static_cast<std::size_t>(i)] = best_block_for_pair(g, a, b);
        }
    }

    std::optional<Candidate> best;
    for (long i = 0; i < count; ++i) {
        auto& found = per_pair[static_cast<std::size_t>(i)];
        if (!found) continue;
        Candidate c{std::move(*found), i};
        if (!best || better(c, *best)) best = std::move(c);
    }
    if (!best) return std::nullopt;
    return std::move(best->block);
}

bool is_valid_zero_two_block(const GainGraph& g, const ZeroTwoBlock& block) {
    if (block.edges.empty() || block.interior.empty()) return false;
    if (block.edges.ids().front() < 0 || block.edges.ids().back() >= g.num_edges()) return false;
    const auto [a, b] = std::tuple{block.boundary[0], block.boundary[1]};
    if (a == b || !g.has_vertex(a) || !g.has_vertex(b)) return false;
    std::vector<VertexId> boundary, interior;
    for (VertexId v : vertices_of(g, block.edges)) {
        const auto inc = g.incident(v);
        const bool outside = std::any_of(inc.begin(), inc.end(),
                                         [&](const Incidence& i) { return !block.edges.contains(i.edge); });
        (outside ? boundary : interior).push_back(v);
    }
    std::array<VertexId, 2> expected{std::min(a, b), std::max(a, b)};
    if (boundary.size() != 2 || boundary[0] != expected[0] || boundary[1] != expected[1]) return false;
    std::vector<VertexId> claimed = block.interior;
    std::sort(claimed.begin(), claimed.end());
    return claimed == interior && is_balanced(g, block.edges);
}

GainVec cleaving_gain(const GainGraph& g, const ZeroTwoBlock& block) {
    const GainForest forest = gain_forest(g, block.edges);
    const VertexId a = block.boundary[0];
    const VertexId b = block.boundary[1];
    if (forest.root[idx(a)] == -1 || forest.root[idx(a)] != forest.root[idx(b)])
        throw Error(ErrorKind::MalformedInput, "boundary vertices are not joined inside the block");
    return forest.potential[idx(b)] - forest.potential[idx(a)];
}

}  // namespace pgr
