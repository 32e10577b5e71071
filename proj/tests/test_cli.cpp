#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "pgr/document.hpp"
#include "pgr/error.hpp"
#include "support.hpp"

using namespace pgr;

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(PGR_CLI) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string fx(const std::string& name) { return std::string(PGR_FIXTURE_DIR) + "/" + name; }

}  // namespace

TEST_CASE("document round trip") {
    for (const char* name : {"fig1b.json", "fig1d.json", "fig2b.json", "fig2d.json", "base5.json"}) {
        const GraphDocument doc = pgr::testing::fixture(name);
        const std::string once = to_json(doc).dump();
        CHECK(to_json(parse_document(once)).dump() == once);
    }
    const std::string text = R"({"k": 2, "vertices": ["p", "q"], "edges": [{"tail": "q", "head": "p", "gain": [1, 0]}],
        "lattice": [["1", "1/2"], ["0", "3"]], "surface": "torus", "placement": {"p": ["0", "1"], "q": ["1/3", "-2"]}})";
    const GraphDocument doc = parse_document(text);
    CHECK(doc.graph.edge(0).gain == GainVec{-1, 0});
    CHECK(doc.lattice->column(1)[0] == Rational(1, 2));
    CHECK(to_json(parse_document(to_json(doc).dump())).dump() == to_json(doc).dump());
}

TEST_CASE("malformed documents") {
    auto kind_of = [](const std::string& text) {
        try {
            parse_document(text);
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::TooLarge;  // sentinel: nothing thrown
    };
    CHECK(kind_of("{") == ErrorKind::MalformedInput);
    CHECK(kind_of(R"({"k": 1, "vertices": ["a"], "edges": [{"tail": "a", "head": "b", "gain": [0]}]})") ==
          ErrorKind::UnknownVertex);
    CHECK(kind_of(R"({"k": 1, "vertices": ["a", "b"], "edges": [{"tail": "a", "head": "b", "gain": [0, 1]}]})") ==
          ErrorKind::DimensionMismatch);
    CHECK(kind_of(R"({"k": 1, "vertices": ["a"], "edges": [{"tail": "a", "head": "a", "gain": [0]}]})") ==
          ErrorKind::LoopEdge);
    CHECK(kind_of(R"({"k": 1, "vertices": ["a", "b"], "edges": [], "surface": "torus"})") ==
          ErrorKind::SurfaceRankMismatch);
    CHECK(kind_of(R"({"k": 2, "vertices": ["a", "b"], "edges": [], "lattice": [["1", "2"], ["2", "4"]]})") ==
          ErrorKind::MalformedInput);
}

TEST_CASE("decide exit codes and certificates") {
    const Run d2 = run("decide --format json " + fx("fig2d.json"));
    CHECK(d2.code == 1);
    const Json j = Json::parse(d2.out);
    CHECK(j["certificate"]["kind"] == "zero_two_block");
    CHECK(j["certificate"]["boundary"] == Json::array({"c", "d"}));

    const Run base = run("decide --format json " + fx("base5.json"));
    CHECK(base.code == 0);
    CHECK(Json::parse(base.out)["certificate"]["kind"] == "satisfies_main0");

    CHECK(run("decide " + fx("truncated.json")).code == 2);
    CHECK(run("decide /nonexistent.json").code == 2);
    CHECK(run("decide --k 1 " + fx("fig2d.json")).code == 2);
    CHECK(run("decide --paranoid " + fx("fig1d.json")).out.find("agrees") != std::string::npos);
}

TEST_CASE("queries") {
    CHECK(Json::parse(run("query rank --format json " + fx("fig1d.json")).out)["rank"] == 4);
    const Json blocks = Json::parse(run("query blocks --format json " + fx("fig2b.json")).out);
    CHECK(blocks["cut_vertices"] == Json::array({"c"}));
    const Json z = Json::parse(run("query zerotwoblock --format json " + fx("fig2d.json")).out);
    CHECK(z["block"]["boundary"] == Json::array({"c", "d"}));
    CHECK(Json::parse(run("query redundant --format json " + fx("base5.json")).out)["redundant"] == true);
    CHECK(run("query nonsense " + fx("base5.json")).code == 2);
}

TEST_CASE("oracle, expand and reduce") {
    const Run o = run("oracle --format json " + fx("fig1d.json"));
    CHECK(o.code == 0);
    CHECK(Json::parse(o.out)["numeric"] == 4);

    const Json patch = Json::parse(run("expand --format json --window 0,2,0,2 " + fx("fig1b.json")).out);
    CHECK(patch["points"].size() == 27);
    CHECK(patch["bars"].size() == 26);
    CHECK(run("expand --window 0,2 " + fx("fig1b.json")).code == 2);

    const Run red = run("reduce --vertex a " + fx("fig1b.json"));
    REQUIRE(red.code == 0);
    const GraphDocument g = parse_document(red.out);
    CHECK(g.graph.num_vertices() == 2);
    CHECK(g.graph.num_edges() == 2);
    CHECK(run("reduce --vertex v " + fx("base5.json")).code == 2);
}
