#pragma once

#include <optional>
#include <vector>

#include "pgr/exec.hpp"
#include "pgr/gain_graph.hpp"

namespace pgr {

// Count matroid on gain-labeled edges: every nonempty F has |F| <= 2|V(F)| - 2,
// every nonempty balanced F has |F| <= 2|V(F)| - 3. For k = 0 every set is
// balanced and this is the planar Laman matroid.
inline constexpr int kUnbalancedSlack = 2;
inline constexpr int kBalancedSlack = 3;

// Rank of the generic rigidity matrix of a periodic framework in the plane
// with n vertex orbits and periodicity rank k: 2n - 2 - C(2 - k, 2).
int rigidity_target(int num_vertices, int k);

bool is_independent(const GainGraph& g, const EdgeSet& f);
int rank2(const GainGraph& g, const EdgeSet& f);

// Greedy maximal independent subset of f in ascending edge-id order.
EdgeSet independent_basis(const GainGraph& g, const EdgeSet& f);

bool is_periodically_rigid(const GainGraph& g);
bool is_rigid_finite(const GainGraph& g);
// Dispatches to the predicate matching g.k().
bool is_rigid(const GainGraph& g);

struct RedundancyReport {
    bool redundant = false;
    bool rigid = false;
    std::optional<EdgeId> witness;  // first edge whose deletion breaks rigidity
};

RedundancyReport is_redundantly_rigid(const GainGraph& g, Exec exec = Exec::parallel);

struct Circuit {
    EdgeSet edges;
};

Circuit fundamental_circuit(const GainGraph& g, const EdgeSet& basis, EdgeId e);

struct MPartition {
    std::vector<EdgeSet> classes;  // ordered by smallest member
};

MPartition m_components(const GainGraph& g);
bool is_m_connected(const GainGraph& g);

}  // namespace pgr
