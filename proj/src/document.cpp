#include "pgr/document.hpp"

#include <fstream>
#include <sstream>

#include "pgr/error.hpp"

namespace pgr {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorKind::MalformedInput, what); }

const Json& field(const Json& obj, const char* name) {
    if (!obj.contains(name)) malformed(std::string("missing field \"") + name + "\"");
    return obj.at(name);
}

std::string rational_string(const Json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<std::int64_t>());
    malformed("rational entries must be strings like \"3/4\" or integers");
}

VertexId vertex_ref(const GainGraph& g, const Json& j) {
    if (!j.is_string()) malformed("vertex references must be strings");
    auto v = g.find_vertex(j.get<std::string>());
    if (!v) throw Error(ErrorKind::UnknownVertex, "unknown vertex \"" + j.get<std::string>() + "\"");
    return *v;
}

Json gain_json(const GainVec& gv) {
    Json arr = Json::array();
    for (int i = 0; i < gv.dim(); ++i) arr.push_back(gv[i]);
    return arr;
}

Json names(const GainGraph& g, const std::vector<VertexId>& vs) {
    Json arr = Json::array();
    for (VertexId v : vs) arr.push_back(g.name(v));
    return arr;
}

Json edges_json(const GainGraph& g, const EdgeSet& f) {
    Json arr = Json::array();
    for (EdgeId e : f) arr.push_back(edge_json(g, e));
    return arr;
}

Json point_json(const Point& p) { return Json::array({to_string(p[0]), to_string(p[1])}); }

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

std::string_view to_string(Surface s) {
    switch (s) {
        case Surface::plane: return "plane";
        case Surface::cylinder: return "cylinder";
        case Surface::torus: return "torus";
    }
    return "plane";
}

Surface parse_surface(std::string_view s) {
    if (s == "cylinder") return Surface::cylinder;
    if (s == "torus") return Surface::torus;
    malformed("surface must be \"cylinder\" or \"torus\"");
}

GraphDocument parse_document(std::string_view text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        malformed(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) malformed("document must be a JSON object");
    try {
        const Json& kj = field(j, "k");
        if (!kj.is_number_integer()) malformed("k must be an integer");
        const int k = kj.get<int>();
        if (k < 0 || k > kMaxPeriodicity) throw Error(ErrorKind::DimensionMismatch, "k must be 0, 1 or 2");

        const Json& vj = field(j, "vertices");
        if (!vj.is_array()) malformed("vertices must be an array");
        GraphDocument doc{GainGraph(k), std::nullopt, std::nullopt, std::nullopt};
        for (const Json& name : vj) {
            if (!name.is_string() || name.get<std::string>().empty()) malformed("vertex ids must be nonempty strings");
            if (doc.graph.find_vertex(name.get<std::string>())) malformed("duplicate vertex \"" + name.get<std::string>() + "\"");
            doc.graph.add_vertex(name.get<std::string>());
        }

        const Json& ej = field(j, "edges");
        if (!ej.is_array()) malformed("edges must be an array");
        for (const Json& e : ej) {
            if (!e.is_object()) malformed("edges must be objects");
            const Json& gj = field(e, "gain");
            if (!gj.is_array()) malformed("gain must be an integer array");
            if (gj.size() != idx(k)) throw Error(ErrorKind::DimensionMismatch, "gain arity differs from k");
            GainVec gain(k);
            for (int i = 0; i < k; ++i) {
                if (!gj[idx(i)].is_number_integer()) malformed("gain entries must be integers");
                gain[i] = gj[idx(i)].get<std::int64_t>();
            }
            doc.graph.add_edge(vertex_ref(doc.graph, field(e, "tail")), vertex_ref(doc.graph, field(e, "head")), gain);
        }

        if (j.contains("lattice")) {
            const Json& lj = j.at("lattice");
            if (!lj.is_array() || lj.size() != 2) malformed("lattice must have two rows");
            std::vector<Point> cols(idx(k));
            for (std::size_t r = 0; r < 2; ++r) {
                if (!lj[r].is_array() || lj[r].size() != idx(k))
                    throw Error(ErrorKind::DimensionMismatch, "lattice rows must have k entries");
                for (std::size_t c = 0; c < idx(k); ++c) cols[c][r] = parse_rational(rational_string(lj[r][c]));
            }
            doc.lattice = Lattice(k, std::move(cols));
        }

        if (j.contains("surface")) {
            if (!j.at("surface").is_string()) malformed("surface must be a string");
            doc.surface = parse_surface(j.at("surface").get<std::string>());
            const int want = *doc.surface == Surface::cylinder ? 1 : 2;
            if (want != k) throw Error(ErrorKind::SurfaceRankMismatch, "surface does not match k");
        }

        if (j.contains("placement")) {
            const Json& pj = j.at("placement");
            if (!pj.is_object()) malformed("placement must map vertex ids to coordinate pairs");
            Placement p;
            p.coords.resize(idx(doc.graph.num_vertices()));
            std::vector<char> seen(p.coords.size(), 0);
            for (const auto& [name, xy] : pj.items()) {
                const VertexId v = vertex_ref(doc.graph, Json(name));
                if (!xy.is_array() || xy.size() != 2) malformed("placement entries must be pairs");
                p.coords[idx(v)] = {parse_rational(rational_string(xy[0])), parse_rational(rational_string(xy[1]))};
                seen[idx(v)] = 1;
            }
            if (std::find(seen.begin(), seen.end(), 0) != seen.end())
                throw Error(ErrorKind::DimensionMismatch, "placement does not cover every vertex");
            doc.placement = std::move(p);
        }
        return doc;
    } catch (const nlohmann::json::exception& e) {
        malformed(e.what());
    }
}

GraphDocument load_document(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) malformed("cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_document(buf.str());
}

Json to_json(const GraphDocument& doc) {
    const GainGraph& g = doc.graph;
    Json j;
    j["k"] = g.k();
    Json vs = Json::array();
    for (VertexId v = 0; v < g.num_vertices(); ++v) vs.push_back(g.name(v));
    j["vertices"] = std::move(vs);
    Json es = Json::array();
    for (const Edge& e : g.edges())
        es.push_back(Json{{"tail", g.name(e.tail)}, {"head", g.name(e.head)}, {"gain", gain_json(e.gain)}});
    j["edges"] = std::move(es);
    if (doc.lattice) {
        Json rows = Json::array();
        for (std::size_t r = 0; r < 2; ++r) {
            Json row = Json::array();
            for (const Point& c : doc.lattice->columns()) row.push_back(to_string(c[r]));
            rows.push_back(std::move(row));
        }
        j["lattice"] = std::move(rows);
    }
    if (doc.surface) j["surface"] = to_string(*doc.surface);
    if (doc.placement) {
        Json p = Json::object();
        for (VertexId v = 0; v < g.num_vertices(); ++v) p[g.name(v)] = point_json(doc.placement->coords[idx(v)]);
        j["placement"] = std::move(p);
    }
    return j;
}

Json edge_json(const GainGraph& g, EdgeId e) {
    const Edge& ed = g.edge(e);
    return Json{{"id", e}, {"tail", g.name(ed.tail)}, {"head", g.name(ed.head)}, {"gain", gain_json(ed.gain)}};
}

Json block_json(const GainGraph& g, const ZeroTwoBlock& b) {
    return Json{{"boundary", names(g, {b.boundary[0], b.boundary[1]})},
                {"interior", names(g, b.interior)},
                {"edges", edges_json(g, b.edges)}};
}

Json certificate_json(const GainGraph& g, const Certificate& c) {
    Json j;
    j["kind"] = std::string(kind(c));
    std::visit(overloaded{
                   [](const cert::RankOneConditions&) {},
                   [&](const cert::RankTwoConditions& r) {
                       Json comps = Json::array();
                       for (const auto& comp : r.components)
                           comps.push_back(Json{{"vertices", names(g, comp.vertices)},
                                                {"edges", edges_json(g, comp.edges)},
                                                {"rank", comp.rank}});
                       j["components"] = std::move(comps);
                   },
                   [](const cert::FiniteConditions&) {},
                   [&](const cert::SmallCaseRigid& s) { j["reason"] = s.reason; },
                   [&](const cert::Disconnected& d) { j["component"] = names(g, d.component); },
                   [&](const cert::NotTwoConnected& c2) { j["cut_vertex"] = g.name(c2.cut_vertex); },
                   [&](const cert::NotThreeConnected& c3) { j["separator"] = names(g, {c3.first, c3.second}); },
                   [&](const cert::NotRedundantlyRigid& r) {
                       j["edge"] = r.edge ? edge_json(g, *r.edge) : Json(nullptr);
                       j["rigid"] = r.edge.has_value();
                       if (!r.component.empty()) j["component"] = edges_json(g, r.component);
                   },
                   [&](const cert::ZeroTwoBlockFound& z) {
                       j["block"] = block_json(g, z.block);
                       j["boundary"] = j["block"]["boundary"];
                       if (!z.component.empty()) j["component"] = edges_json(g, z.component);
                   },
                   [&](const cert::RankDeficientComponent& r) {
                       j["component"] = edges_json(g, r.edges);
                       j["rank"] = r.rank;
                   },
                   [&](const cert::SmallCaseFlexible& s) {
                       j["reason"] = s.reason;
                       j["rank"] = s.rank;
                   },
                   [](const cert::NotCompleteSmall&) {},
               },
               c);
    return j;
}

Json verdict_json(const GainGraph& g, const Verdict& v) {
    Json j;
    j["globally_rigid"] = v.globally_rigid;
    j["surface"] = to_string(v.surface);
    j["k"] = g.k();
    j["certificate"] = certificate_json(g, v.certificate);
    j["description"] = describe(g, v.certificate, v.surface);
    Json vs = Json::array();
    for (const Certificate& c : v.violations) vs.push_back(certificate_json(g, c));
    j["violations"] = std::move(vs);
    return j;
}

Json partition_json(const GainGraph& g, const MPartition& p) {
    Json arr = Json::array();
    for (const EdgeSet& cls : p.classes) arr.push_back(edges_json(g, cls));
    return arr;
}

Json cross_check_json(const CrossCheck& c) {
    Json primes = Json::array();
    for (auto p : c.primes_used) primes.push_back(p);
    return Json{{"combinatorial", c.combinatorial}, {"numeric", c.numeric}, {"agree", c.agree}, {"primes", primes}};
}

Json patch_json(const GainGraph& g, const Patch& p) {
    Json points = Json::array();
    for (const PatchPoint& pt : p.points) {
        Json cell = Json::array();
        for (int i = 0; i < pt.cell.dim(); ++i) cell.push_back(pt.cell[i]);
        points.push_back(Json{{"vertex", g.name(pt.vertex)}, {"cell", cell}, {"position", point_json(pt.position)}});
    }
    Json bars = Json::array();
    for (const auto& [a, b] : p.bars) bars.push_back(Json::array({a, b}));
    return Json{{"points", points}, {"bars", bars}};
}

}  // namespace pgr
