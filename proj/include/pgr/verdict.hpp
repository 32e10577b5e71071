#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pgr/blocks.hpp"
#include "pgr/exec.hpp"
#include "pgr/gain_graph.hpp"
#include "pgr/lattice.hpp"

namespace pgr {

enum class Surface { plane, cylinder, torus };

namespace cert {

// Positive outcomes.
struct RankOneConditions {};  // 2-connected, redundantly rigid, no (0,2)-block
struct ComponentReport {
    EdgeSet edges;
    std::vector<VertexId> vertices;
    int rank = 0;
};
struct RankTwoConditions {
    std::vector<ComponentReport> components;
};
struct FiniteConditions {};  // 3-connected and redundantly rigid
struct SmallCaseRigid {
    std::string reason;
};

// Negative outcomes. `component` is the edge set of the 2-connected
// component a witness lives in (rank-two case); empty means the whole graph.
struct Disconnected {
    std::vector<VertexId> component;
};
struct NotTwoConnected {
    VertexId cut_vertex = -1;
};
struct NotThreeConnected {
    VertexId first = -1;
    VertexId second = -1;
};
struct NotRedundantlyRigid {
    std::optional<EdgeId> edge;  // nullopt: not rigid to begin with
    EdgeSet component;
};
struct ZeroTwoBlockFound {
    ZeroTwoBlock block;
    EdgeSet component;
};
struct RankDeficientComponent {
    EdgeSet edges;
    int rank = 0;
};
struct SmallCaseFlexible {
    std::string reason;
    int rank = 0;
};
struct NotCompleteSmall {};

}  // namespace cert

using Certificate =
    std::variant<cert::RankOneConditions, cert::RankTwoConditions, cert::FiniteConditions, cert::SmallCaseRigid,
                 cert::Disconnected, cert::NotTwoConnected, cert::NotThreeConnected, cert::NotRedundantlyRigid,
                 cert::ZeroTwoBlockFound, cert::RankDeficientComponent, cert::SmallCaseFlexible,
                 cert::NotCompleteSmall>;

// Stable machine-readable tag, e.g. "zero_two_block".
std::string_view kind(const Certificate& c);
bool is_positive(const Certificate& c);

struct Verdict {
    bool globally_rigid = false;
    Certificate certificate;
    // Every violated clause, primary certificate first. Empty when positive.
    std::vector<Certificate> violations;
    Surface surface = Surface::plane;
};

// Generic global rigidity of periodic frameworks in the plane with the given
// quotient, dispatched on k and |V|.
Verdict decide(const GainGraph& g, Exec exec = Exec::parallel);

// Same decision, phrased for a flat cylinder (k = 1) or flat torus (k = 2).
Verdict decide_surface(const GainGraph& g, Surface surface, Exec exec = Exec::parallel);

// Re-checks every witness in the verdict against g.
bool validate_certificate(const GainGraph& g, const Verdict& verdict);

std::string describe(const GainGraph& g, const Certificate& c, Surface surface = Surface::plane);

// Removes the degree-3 vertex v and joins each pair of its non-parallel
// neighbours u, w by u->w labelled gain(v,w) - gain(v,u), skipping edges
// that are already present.
GainGraph contract_degree3(const GainGraph& g, VertexId v);

// For every neighbour u of v, the lattice images of the gains on the v-u
// edges (oriented from v) are affinely independent.
bool is_nondegenerate(const GainGraph& g, VertexId v, const Lattice& lat);

}  // namespace pgr
