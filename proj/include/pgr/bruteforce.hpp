#pragma once

#include <optional>
#include <vector>

#include "pgr/blocks.hpp"
#include "pgr/exec.hpp"
#include "pgr/gain_graph.hpp"
#include "pgr/sparsity.hpp"
#include "pgr/verdict.hpp"

// Exhaustive reference implementations. Slow on purpose; used as test
// oracles for the production algorithms.
namespace pgr::bf {

inline constexpr int kMaxSubsetEdges = 20;
inline constexpr int kMaxBlockEdges = 16;

// Both counts checked on every nonempty subset of f. |f| <= 20.
bool is_independent(const GainGraph& g, const EdgeSet& f, Exec exec = Exec::parallel);
int rank(const GainGraph& g, const EdgeSet& f, Exec exec = Exec::parallel);
// All minimal dependent subsets of E, sorted.
std::vector<Circuit> circuits(const GainGraph& g);
MPartition m_components(const GainGraph& g);

// Every nonempty edge subset tested against the definition. |E| <= 16.
// Picks the largest interior, then the first boundary pair, then the
// smallest edge subset.
std::optional<ZeroTwoBlock> find_zero_two_block(const GainGraph& g);
bool is_zero_two_block(const GainGraph& g, const EdgeSet& h);

// Closed-walk gains all zero: potentials by relaxation, then every edge checked.
bool is_balanced(const GainGraph& g, const EdgeSet& f);
int gain_rank(const GainGraph& g, const EdgeSet& f);

bool is_connected(const GainGraph& g);
std::optional<VertexId> cut_vertex(const GainGraph& g);
std::optional<std::pair<VertexId, VertexId>> separating_pair(const GainGraph& g);
// Edges e ~ f iff no single vertex separates them.
std::vector<EdgeSet> two_connected_components(const GainGraph& g);
std::optional<EdgeId> redundancy_witness(const GainGraph& g);
bool is_rigid(const GainGraph& g);

// Same dispatch and clause order as pgr::decide.
Verdict decide(const GainGraph& g);

}  // namespace pgr::bf
