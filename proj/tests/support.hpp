#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pgr/document.hpp"
#include "pgr/gain_graph.hpp"

namespace pgr::testing {

inline GraphDocument fixture(const std::string& name) { return load_document(std::string(PGR_FIXTURE_DIR) + "/" + name); }

inline VertexId vid(const GainGraph& g, const std::string& name) { return g.find_vertex(name).value(); }

inline GainGraph balanced_k4(int k) {
    GainGraph g(k, 4);
    for (VertexId u = 0; u < 4; ++u)
        for (VertexId w = u + 1; w < 4; ++w) g.add_edge(u, w, GainVec(k));
    return g;
}

// Two unbalanced digons u-v, v-w and one u-w edge, k = 1.
inline GainGraph base_case() {
    GainGraph g(1, {"u", "v", "w"});
    g.add_edge(0, 1, {0});
    g.add_edge(0, 1, {1});
    g.add_edge(1, 2, {0});
    g.add_edge(1, 2, {1});
    g.add_edge(0, 2, {0});
    return g;
}

inline GainVec random_gain(std::mt19937_64& rng, int k, int span) {
    std::uniform_int_distribution<std::int64_t> d(-span, span);
    GainVec g(k);
    for (int i = 0; i < k; ++i) g[i] = d(rng);
    return g;
}

// Random semi-simple gain graph; edges that would repeat a key are skipped.
inline GainGraph random_graph(std::mt19937_64& rng, int k, int n, int m, int span = 2) {
    GainGraph g(k, n);
    if (n < 2) return g;
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int tries = 0; g.num_edges() < m && tries < 20 * m; ++tries) {
        const VertexId u = pick(rng);
        const VertexId w = pick(rng);
        if (u == w) continue;
        const GainVec gain = random_gain(rng, k, span);
        if (!g.find_edge(u, w, gain)) g.add_edge(u, w, gain);
    }
    return g;
}

inline EdgeSet random_subset(std::mt19937_64& rng, const EdgeSet& f) {
    std::vector<EdgeId> out;
    for (EdgeId e : f)
        if (rng() & 1U) out.push_back(e);
    return EdgeSet(std::move(out));
}

// Random wander that stops when it first returns to its start; if it never
// does, it retraces itself (and has zero gain).
inline Walk random_closed_walk(std::mt19937_64& rng, const GainGraph& g, int steps) {
    Walk w;
    std::uniform_int_distribution<int> pick(0, g.num_vertices() - 1);
    const VertexId start = pick(rng);
    w.vertices.push_back(start);
    VertexId at = start;
    for (int s = 0; s < steps; ++s) {
        const auto inc = g.incident(at);
        if (inc.empty()) break;
        const Incidence& i = inc[rng() % inc.size()];
        w.edges.push_back(i.edge);
        w.vertices.push_back(i.other);
        at = i.other;
        if (at == start) return w;
    }
    for (std::size_t j = w.edges.size(); j-- > 0;) {
        w.edges.push_back(w.edges[j]);
        w.vertices.push_back(w.vertices[j]);
    }
    return w;
}

}  // namespace pgr::testing
