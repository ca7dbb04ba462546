#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "izeta/cli.hpp"
#include "izeta/report.hpp"

using namespace izeta;
namespace fs = std::filesystem;

namespace {

const char* kFig1Json = R"({
  "components": [
    {"id": "E1", "kind": "exceptional", "N": 4, "nu": 2, "self_intersection": -2, "over_origin": true},
    {"id": "E2", "kind": "exceptional", "N": 5, "nu": 3, "self_intersection": -2, "over_origin": true},
    {"id": "E3", "kind": "exceptional", "N": 6, "nu": 4, "self_intersection": -1, "over_origin": true}
  ],
  "edges": [["E1", "E2"], ["E2", "E3"]],
  "metadata": {}
})";

// Same data supplied through generic counts instead of self-intersections.
const char* kFig1CountsJson = R"({
  "components": [
    {"id": "E1", "kind": "exceptional", "N": 4, "nu": 2, "n_generic": 3, "over_origin": true},
    {"id": "E2", "kind": "exceptional", "N": 5, "nu": 3, "n_generic": 0, "over_origin": true},
    {"id": "E3", "kind": "exceptional", "N": 6, "nu": 4, "n_generic": 1, "over_origin": true}
  ],
  "edges": [["E1", "E2"], ["E2", "E3"]]
})";

const char* kFig3Json = R"({
  "components": [
    {"id": "E1", "kind": "exceptional", "N": 2, "nu": 2, "self_intersection": -3, "over_origin": true},
    {"id": "E2", "kind": "exceptional", "N": 3, "nu": 3, "self_intersection": -2, "over_origin": true},
    {"id": "E3", "kind": "exceptional", "N": 6, "nu": 5, "self_intersection": -2, "over_origin": true},
    {"id": "E4", "kind": "exceptional", "N": 7, "nu": 6, "self_intersection": -2, "over_origin": true},
    {"id": "E5", "kind": "exceptional", "N": 8, "nu": 7, "self_intersection": -2, "over_origin": true},
    {"id": "E6", "kind": "exceptional", "N": 9, "nu": 8, "self_intersection": -1, "over_origin": true}
  ],
  "edges": [["E1", "E3"], ["E2", "E3"], ["E3", "E4"], ["E4", "E5"], ["E5", "E6"]]
})";

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("izeta_test_" + std::to_string(static_cast<long long>(::getpid())));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    std::string file(const std::string& name, const std::string& content) const {
        fs::path p = path / name;
        std::ofstream out(p, std::ios::binary);
        out << content;
        return p.string();
    }
    std::string read(const std::string& name) const {
        std::ifstream in(path / name, std::ios::binary);
        std::stringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
};

bool same_graph(const DualGraph& a, const DualGraph& b) {
    if (a.components.size() != b.components.size() || a.edges.size() != b.edges.size())
        return false;
    for (std::size_t i = 0; i < a.components.size(); ++i) {
        const Component &x = a.components[i], &y = b.components[i];
        if (x.id != y.id || x.kind != y.kind || x.N != y.N || x.nu != y.nu ||
            x.self_intersection != y.self_intersection || x.n_generic != y.n_generic ||
            x.over_origin != y.over_origin)
            return false;
    }
    for (std::size_t i = 0; i < a.edges.size(); ++i)
        if (a.edges[i].a != b.edges[i].a || a.edges[i].b != b.edges[i].b) return false;
    return a.metadata == b.metadata;
}

}  // namespace

TEST_CASE("graph JSON round-trip") {
    DualGraph g = from_json(kFig1Json);
    CHECK(same_graph(from_json(to_json(g)), g));
    std::string once = to_json(g);
    CHECK(to_json(from_json(once)) == once);
}

TEST_CASE("schema errors carry paths") {
    try {
        from_json(R"({"components": [{"id": "E1", "kind": "exceptional", "nu": 2,
                     "over_origin": true}]})");
        FAIL("expected SchemaError");
    } catch (const SchemaError& e) {
        CHECK(std::string(e.what()).find("components[0]") != std::string::npos);
        CHECK(std::string(e.what()).find("'N'") != std::string::npos);
    }
    CHECK_THROWS_AS(from_json("not json"), SchemaError);
    CHECK_THROWS_AS(from_json(R"({"components": [], "edges": [["A","B"]]})"), SchemaError);
}

TEST_CASE("dot export shows the figure") {
    DualGraph g = from_json(kFig1CountsJson);
    std::string dot = to_dot(g);
    CHECK(dot.find("E1 (4,2)") != std::string::npos);
    CHECK(dot.find("E2 (5,3)") != std::string::npos);
    CHECK(dot.find("E3 (6,4)") != std::string::npos);
    int solid = 0;
    std::istringstream lines(dot);
    std::string line;
    while (std::getline(lines, line))
        if (line.find("--") != std::string::npos && line.find("dashed") == std::string::npos)
            ++solid;
    CHECK(solid == 2);
    CHECK(dot.find("style=dashed") != std::string::npos);  // generic-curve arcs
}

TEST_CASE("graph path reproduces the figure data") {
    SUBCASE("poles from the self-intersection form") {
        GraphReport rep = analyze_graph(from_json(kFig1Json), true, false, false);
        REQUIRE(rep.zeta.has_value());
        REQUIRE(rep.poles.size() == 2);
        CHECK(rep.poles[0].value == Rational(-2, 3));
        CHECK(rep.poles[1].value == Rational(-1, 2));
    }
    SUBCASE("poles from the generic-count form") {
        GraphReport rep = analyze_graph(from_json(kFig1CountsJson), true, false, false);
        REQUIRE(rep.poles.size() == 2);
        CHECK(rep.poles[0].value == Rational(-2, 3));
        CHECK(rep.poles[1].value == Rational(-1, 2));
    }
    SUBCASE("cluster zeta on the chain of six") {
        GraphReport rep = analyze_graph(from_json(kFig3Json), false, true, false);
        REQUIRE(rep.mono.has_value());
        REQUIRE(rep.mono->clusters.size() == 1);
        CHECK(rep.mono->clusters[0].zeta.to_string() == "(1-t^2)(1-t^3) / (1-t^6)");
        CHECK(!rep.warnings.empty());  // graph-only assumptions are flagged
    }
    SUBCASE("conjecture on the graph path") {
        GraphReport rep = analyze_graph(from_json(kFig3Json), true, true, true);
        REQUIRE(rep.conjecture.has_value());
        CHECK(rep.conjecture->verified());
    }
}

TEST_CASE("analyze agrees with the graph path on its own export") {
    for (const auto& text : {"x^3*y, x^6+y^4", "x^4, x*y^2, y^3", "x^3*y, x^3-y^2", "y^2-x^3"}) {
        AnalysisReport a = analyze_ideal(text, 17, true);
        DualGraph g = from_json(to_json(a.graph));
        GraphReport b = analyze_graph(g, true, true, true);
        INFO(text);
        REQUIRE(b.zeta.has_value());
        CHECK(a.zeta == *b.zeta);
        REQUIRE(a.poles.size() == b.poles.size());
        for (std::size_t i = 0; i < a.poles.size(); ++i) {
            CHECK(a.poles[i].value == b.poles[i].value);
            CHECK(a.poles[i].order == b.poles[i].order);
        }
        REQUIRE(a.mono.clusters.size() == b.mono->clusters.size());
        for (std::size_t i = 0; i < a.mono.clusters.size(); ++i)
            CHECK(a.mono.clusters[i].zeta == b.mono->clusters[i].zeta);
        CHECK(a.conjecture->verified() == b.conjecture->verified());
    }
}

TEST_CASE("byte-identical JSON reports for identical seeds") {
    AnalysisReport r1 = analyze_ideal("x^3*y, x^6+y^4", 17, true);
    AnalysisReport r2 = analyze_ideal("x^3*y, x^6+y^4", 17, true);
    CHECK(report_to_json(r1) == report_to_json(r2));
    AnalysisReport r3 = analyze_ideal("x^3*y, x^6+y^4", 99, true);
    CHECK(report_to_json(r1) != report_to_json(r3));  // the seed is part of the report
}

TEST_CASE("cli analyze exit codes and outputs") {
    TempDir tmp;
    std::ostringstream out, err;
    AnalyzeOptions opts;
    opts.ideal = "x^3*y, x^6+y^4";
    opts.json_path = tmp.file("r.json", "");
    opts.dot_path = tmp.file("r.dot", "");
    opts.quiet = true;
    CHECK(run_analyze(opts, out, err) == kExitOk);
    CHECK(tmp.read("r.json").find("\"verdict\": \"VERIFIED\"") != std::string::npos);
    CHECK(tmp.read("r.dot").find("graph dual") != std::string::npos);

    AnalyzeOptions bad;
    bad.ideal = "1";
    std::ostringstream out2, err2;
    CHECK(run_analyze(bad, out2, err2) == kExitError);
    CHECK(err2.str().find("vanish at the origin") != std::string::npos);

    AnalyzeOptions irr;
    irr.ideal = "y^2-2*x^2, x^3";
    std::ostringstream out3, err3;
    CHECK(run_analyze(irr, out3, err3) == kExitError);
    CHECK(err3.str().find("irrational center") != std::string::npos);
    CHECK(err3.str().find("v^2-2") != std::string::npos);
}

TEST_CASE("cli graph path exit codes") {
    TempDir tmp;
    SUBCASE("figure graphs succeed") {
        GraphOptions opts;
        opts.in_path = tmp.file("fig3.json", kFig3Json);
        opts.zeta = opts.monodromy = opts.check_conjecture = true;
        std::ostringstream out, err;
        CHECK(run_graph(opts, out, err) == kExitOk);
        CHECK(out.str().find("(1-t^2)(1-t^3) / (1-t^6)") != std::string::npos);
    }
    SUBCASE("alpha violation fails validation") {
        std::string broken = kFig1Json;
        auto pos = broken.find("\"nu\": 3");
        REQUIRE(pos != std::string::npos);
        broken.replace(pos, 7, "\"nu\": 9");
        GraphOptions opts;
        opts.in_path = tmp.file("broken.json", broken);
        opts.zeta = true;
        std::ostringstream out, err;
        CHECK(run_graph(opts, out, err) == kExitError);
        CHECK(out.str().find("FAIL") != std::string::npos);
    }
    SUBCASE("two-component cycle fails the tree check") {
        const char* cyclic = R"({
          "components": [
            {"id": "E1", "kind": "exceptional", "N": 1, "nu": 2, "n_generic": 0, "over_origin": true},
            {"id": "E2", "kind": "exceptional", "N": 1, "nu": 2, "n_generic": 0, "over_origin": true}
          ],
          "edges": [["E1", "E2"], ["E1", "E2"]]
        })";
        GraphOptions opts;
        opts.in_path = tmp.file("cyclic.json", cyclic);
        std::ostringstream out, err;
        CHECK(run_graph(opts, out, err) == kExitError);
        CHECK(out.str().find("exceptional-tree") != std::string::npos);
    }
}

TEST_CASE("cli corpus") {
    TempDir tmp;
    SUBCASE("empty directory errors") {
        CorpusOptions opts;
        opts.dir = tmp.path.string();
        std::ostringstream out, err;
        CHECK(run_corpus(opts, out, err) == kExitError);
        CHECK(err.str().find("no cases found") != std::string::npos);
    }
    SUBCASE("passing and failing cases") {
        tmp.file("a_good.json", R"({"name": "good", "ideal": "x, y",
                                    "expect": {"poles": ["-2"], "verdict": "VERIFIED"}})");
        tmp.file("b_bad.json", R"({"name": "bad-expectation", "ideal": "x, y",
                                   "expect": {"poles": ["-3"]}})");
        tmp.file("c_malformed.json", "{ not json");
        CorpusOptions opts;
        opts.dir = tmp.path.string();
        std::ostringstream out, err;
        CHECK(run_corpus(opts, out, err) == kExitError);
        CHECK(out.str().find("PASS  good") != std::string::npos);
        CHECK(out.str().find("FAIL  bad-expectation") != std::string::npos);
        CHECK(out.str().find("FAIL  c_malformed.json") != std::string::npos);
        CHECK(out.str().find("1/3 cases passed") != std::string::npos);
    }
    SUBCASE("concurrent jobs agree with serial") {
        tmp.file("a.json", R"({"ideal": "x^3*y, x^6+y^4"})");
        tmp.file("b.json", R"({"ideal": "x^4, x*y^2, y^3"})");
        tmp.file("c.json", R"({"ideal": "y^2-x^3"})");
        CorpusOptions serial{tmp.path.string(), 1}, parallel{tmp.path.string(), 3};
        std::ostringstream o1, e1, o2, e2;
        CHECK(run_corpus(serial, o1, e1) == kExitOk);
        CHECK(run_corpus(parallel, o2, e2) == kExitOk);
        CHECK(o1.str() == o2.str());
    }
}
