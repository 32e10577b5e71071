// pgr: generic global rigidity of periodic frameworks from a quotient gain graph.
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "pgr/blocks.hpp"
#include "pgr/bruteforce.hpp"
#include "pgr/document.hpp"
#include "pgr/error.hpp"
#include "pgr/oracle.hpp"
#include "pgr/sparsity.hpp"
#include "pgr/verdict.hpp"

namespace {

using namespace pgr;

constexpr int kRigid = 0;
constexpr int kNotRigid = 1;
constexpr int kInputError = 2;

struct Options {
    std::string path;
    std::string format = "text";
    std::optional<int> k;
    std::uint64_t seed = 1;
    std::uint64_t prime = kDefaultPrime;
    int trials = 3;
    bool paranoid = false;
    std::string window;
    std::string vertex;
    std::string query;
};

GraphDocument load(const Options& o) {
    GraphDocument doc = load_document(o.path);
    if (o.k && *o.k != doc.graph.k())
        throw Error(ErrorKind::DimensionMismatch, "--k " + std::to_string(*o.k) + " does not match document k = " +
                                                      std::to_string(doc.graph.k()));
    return doc;
}

FieldConfig field(const Options& o) { return FieldConfig{o.prime, o.seed, o.trials}; }

void emit(const Options& o, const Json& j, const std::string& text) {
    if (o.format == "json")
        std::cout << j.dump(2) << '\n';
    else
        std::cout << text;
}

std::string edge_line(const GainGraph& g, EdgeId e) {
    const Edge& ed = g.edge(e);
    return "e" + std::to_string(e) + " " + g.name(ed.tail) + "->" + g.name(ed.head) + " " + to_string(ed.gain);
}

std::string edges_text(const GainGraph& g, const EdgeSet& f) {
    std::string s;
    for (EdgeId e : f) s += "  " + edge_line(g, e) + "\n";
    return s;
}

int cmd_decide(const Options& o) {
    const GraphDocument doc = load(o);
    const GainGraph& g = doc.graph;
    const Verdict v = doc.surface ? decide_surface(g, *doc.surface) : decide(g);
    Json j = verdict_json(g, v);
    std::ostringstream text;
    text << describe(g, v.certificate, v.surface) << '\n';
    for (std::size_t i = 1; i < v.violations.size(); ++i)
        text << "  also: " << describe(g, v.violations[i], v.surface) << '\n';

    if (o.paranoid) {
        Json p;
        const bool small = g.num_edges() <= bf::kMaxBlockEdges;
        if (small) {
            const Verdict ref = bf::decide(g);
            const bool same = ref.globally_rigid == v.globally_rigid && kind(ref.certificate) == kind(v.certificate);
            p["bruteforce_agrees"] = same;
            text << "paranoid: brute-force decision " << (same ? "agrees" : "DISAGREES") << '\n';
        } else {
            p["bruteforce_agrees"] = nullptr;
            text << "paranoid: brute-force decision skipped (more than " << bf::kMaxBlockEdges << " edges)\n";
        }
        const CrossCheck cc = cross_check(g, doc.lattice_or_standard(), field(o));
        p["oracle"] = cross_check_json(cc);
        p["certificate_valid"] = validate_certificate(g, v);
        text << "paranoid: rank2 " << cc.combinatorial << ", field rank " << cc.numeric
             << (cc.agree ? " (agree)" : " (DISAGREE)") << '\n';
        j["paranoid"] = std::move(p);
    }
    emit(o, j, text.str());
    return v.globally_rigid ? kRigid : kNotRigid;
}

int cmd_query(const Options& o) {
    const GraphDocument doc = load(o);
    const GainGraph& g = doc.graph;
    const EdgeSet all = EdgeSet::all(g);
    Json j;
    j["query"] = o.query;
    std::ostringstream text;
    if (o.query == "rank") {
        const int r = rank2(g, all);
        j["rank"] = r;
        j["gain_subgroup_rank"] = gain_subgroup_rank(g, all);
        j["target"] = rigidity_target(g.num_vertices(), g.k());
        text << "rank " << r << " of " << rigidity_target(g.num_vertices(), g.k()) << '\n';
    } else if (o.query == "independent") {
        const bool ind = is_independent(g, all);
        j["independent"] = ind;
        text << (ind ? "independent" : "dependent") << '\n';
    } else if (o.query == "mcomp") {
        const MPartition p = m_components(g);
        j["classes"] = partition_json(g, p);
        text << p.classes.size() << " M-component(s)\n";
        for (std::size_t i = 0; i < p.classes.size(); ++i) text << "class " << i << ":\n" << edges_text(g, p.classes[i]);
    } else if (o.query == "blocks") {
        const BlockDecomposition bd = block_decomposition(g);
        Json cuts = Json::array();
        for (VertexId v : bd.cut_vertices) cuts.push_back(g.name(v));
        Json blocks = Json::array();
        for (const EdgeSet& b : bd.blocks) blocks.push_back(Json{{"vertices", [&] {
                                                                      Json vs = Json::array();
                                                                      for (VertexId v : vertices_of(g, b)) vs.push_back(g.name(v));
                                                                      return vs;
                                                                  }()},
                                                                 {"edges", b.ids()}});
        j["cut_vertices"] = cuts;
        j["blocks"] = blocks;
        text << "cut vertices:";
        for (VertexId v : bd.cut_vertices) text << ' ' << g.name(v);
        text << "\n" << bd.blocks.size() << " 2-connected component(s)\n";
    } else if (o.query == "zerotwoblock") {
        const auto b = find_zero_two_block(g);
        j["block"] = b ? block_json(g, *b) : Json(nullptr);
        if (b)
            text << "(0,2)-block with boundary {" << g.name(b->boundary[0]) << "," << g.name(b->boundary[1]) << "}\n"
                 << edges_text(g, b->edges);
        else
            text << "no (0,2)-block\n";
    } else if (o.query == "rigid") {
        const bool r = is_rigid(g);
        j["rigid"] = r;
        text << (r ? "rigid" : "not rigid") << '\n';
    } else if (o.query == "redundant") {
        const RedundancyReport r = is_redundantly_rigid(g);
        j["redundant"] = r.redundant;
        j["rigid"] = r.rigid;
        j["witness"] = r.witness ? edge_json(g, *r.witness) : Json(nullptr);
        text << (r.redundant ? "redundantly rigid" : "not redundantly rigid");
        if (r.witness) text << " (deleting " << edge_line(g, *r.witness) << " breaks rigidity)";
        text << '\n';
    }
    emit(o, j, text.str());
    return 0;
}

int cmd_oracle(const Options& o) {
    const GraphDocument doc = load(o);
    const CrossCheck cc = cross_check(doc.graph, doc.lattice_or_standard(), field(o));
    std::ostringstream text;
    text << "rank2 " << cc.combinatorial << ", field rank " << cc.numeric << (cc.agree ? ", agree" : ", DISAGREE")
         << '\n';
    emit(o, cross_check_json(cc), text.str());
    return cc.agree ? 0 : 1;
}

Window parse_window(const std::string& spec, int k) {
    std::vector<std::int64_t> xs;
    std::stringstream in(spec);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        try {
            std::size_t used = 0;
            xs.push_back(std::stoll(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw Error(ErrorKind::MalformedInput, "bad --window entry \"" + tok + "\"");
        }
    }
    if (xs.size() != static_cast<std::size_t>(2 * k))
        throw Error(ErrorKind::DimensionMismatch, "--window needs 2k comma-separated integers");
    Window w;
    for (std::size_t i = 0; i + 1 < xs.size(); i += 2) w.ranges.emplace_back(xs[i], xs[i + 1]);
    return w;
}

int cmd_expand(const Options& o) {
    const GraphDocument doc = load(o);
    const GainGraph& g = doc.graph;
    const Window w = parse_window(o.window, g.k());
    const Placement p = doc.placement ? *doc.placement : random_placement(g.num_vertices(), o.seed);
    const Patch patch = expand_patch(g, doc.lattice_or_standard(), p, w);
    std::ostringstream text;
    text << patch.points.size() << " points, " << patch.bars.size() << " bars\n";
    emit(o, patch_json(g, patch), text.str());
    return 0;
}

int cmd_reduce(const Options& o) {
    GraphDocument doc = load(o);
    const auto v = doc.graph.find_vertex(o.vertex);
    if (!v) throw Error(ErrorKind::UnknownVertex, "unknown vertex \"" + o.vertex + "\"");
    GraphDocument out{contract_degree3(doc.graph, *v), doc.lattice, doc.surface, std::nullopt};
    const Json j = to_json(out);
    // A graph file is always JSON.
    std::cout << j.dump(2) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generic global rigidity of periodic frameworks in the plane"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* sub) {
        sub->add_option("path", o.path, "graph document (JSON)")->required();
        sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--k", o.k, "expected periodicity rank");
        sub->add_option("--seed", o.seed, "random seed");
    };
    auto field_flags = [&](CLI::App* sub) {
        sub->add_option("--prime", o.prime, "prime field modulus");
        sub->add_option("--trials", o.trials, "random placements per prime");
    };

    auto* decide_cmd = app.add_subcommand("decide", "decide generic global rigidity");
    common(decide_cmd);
    field_flags(decide_cmd);
    decide_cmd->add_flag("--paranoid", o.paranoid, "cross-check with brute force and the field-rank oracle");

    auto* query_cmd = app.add_subcommand("query", "run a single predicate");
    query_cmd->add_option("what", o.query, "rank|independent|mcomp|blocks|zerotwoblock|rigid|redundant")
        ->required()
        ->check(CLI::IsMember({"rank", "independent", "mcomp", "blocks", "zerotwoblock", "rigid", "redundant"}));
    common(query_cmd);

    auto* oracle_cmd = app.add_subcommand("oracle", "compare rank2 with the rigidity-matrix rank over a prime field");
    common(oracle_cmd);
    field_flags(oracle_cmd);

    auto* expand_cmd = app.add_subcommand("expand", "expand a finite patch of the covering framework");
    common(expand_cmd);
    expand_cmd->add_option("--window", o.window, "a,b[,c,d] inclusive cell ranges");

    auto* reduce_cmd = app.add_subcommand("reduce", "contract a degree-3 vertex");
    common(reduce_cmd);
    reduce_cmd->add_option("--vertex", o.vertex, "vertex id")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kInputError;
    }

    try {
        if (*decide_cmd) return cmd_decide(o);
        if (*query_cmd) return cmd_query(o);
        if (*oracle_cmd) return cmd_oracle(o);
        if (*expand_cmd) return cmd_expand(o);
        if (*reduce_cmd) return cmd_reduce(o);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}
