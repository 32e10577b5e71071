#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "pgr/gain_graph.hpp"
#include "pgr/lattice.hpp"
#include "pgr/oracle.hpp"
#include "pgr/sparsity.hpp"
#include "pgr/verdict.hpp"

namespace pgr {

using Json = nlohmann::ordered_json;

// On-disk graph file:
//   {"k": 1, "vertices": ["a", "b"], "edges": [{"tail": "a", "head": "b", "gain": [1]}],
//    "lattice": [["1"], ["0"]], "surface": "cylinder", "placement": {"a": ["0", "1/2"]}}
// lattice is 2 rows by k columns of rational strings; lattice, surface and
// placement are optional.
struct GraphDocument {
    GainGraph graph;
    std::optional<Lattice> lattice;
    std::optional<Surface> surface;
    std::optional<Placement> placement;

    Lattice lattice_or_standard() const { return lattice ? *lattice : Lattice::standard(graph.k()); }
};

GraphDocument parse_document(std::string_view text);
GraphDocument load_document(const std::filesystem::path& path);
Json to_json(const GraphDocument& doc);

std::string_view to_string(Surface s);
Surface parse_surface(std::string_view s);

Json edge_json(const GainGraph& g, EdgeId e);
Json certificate_json(const GainGraph& g, const Certificate& c);
Json verdict_json(const GainGraph& g, const Verdict& v);
Json block_json(const GainGraph& g, const ZeroTwoBlock& b);
Json partition_json(const GainGraph& g, const MPartition& p);
Json cross_check_json(const CrossCheck& c);
Json patch_json(const GainGraph& g, const Patch& p);

}  // namespace pgr
