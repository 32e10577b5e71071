#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "pgr/exec.hpp"
#include "pgr/gain_graph.hpp"

namespace pgr {

// Vertex sets of the connected components, isolated vertices included,
// in order of smallest member.
std::vector<std::vector<VertexId>> connected_components(const GainGraph& g);
bool is_connected(const GainGraph& g);

struct BlockDecomposition {
    std::vector<VertexId> cut_vertices;  // ascending
    std::vector<EdgeSet> blocks;         // 2-connected components, bridges included
};

BlockDecomposition block_decomposition(const GainGraph& g);

// Connected with no cut vertex. Graphs on fewer than two vertices are not
// considered 2-connected.
bool is_two_connected(const GainGraph& g);

struct ThreeConnectivity {
    bool three_connected = false;
    std::optional<std::pair<VertexId, VertexId>> separator;
};

ThreeConnectivity is_three_connected(const GainGraph& g, Exec exec = Exec::parallel);

// Balanced subgraph H with B(H) = boundary and nonempty interior I(H).
// Edges are all edges meeting the interior plus, in graphs with cut
// vertices, possibly one boundary-boundary edge.
struct ZeroTwoBlock {
    std::array<VertexId, 2> boundary{};
    std::vector<VertexId> interior;
    EdgeSet edges;
};

// Returns the candidate with the largest interior; ties go to the
// lexicographically first boundary pair.
std::optional<ZeroTwoBlock> find_zero_two_block(const GainGraph& g, Exec exec = Exec::parallel);

// Checks the block against the definition directly.
bool is_valid_zero_two_block(const GainGraph& g, const ZeroTwoBlock& block);

// Gain of the boundary[0] -> boundary[1] edge whose addition keeps the
// block balanced.
GainVec cleaving_gain(const GainGraph& g, const ZeroTwoBlock& block);

}  // namespace pgr
