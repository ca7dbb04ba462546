// Acceptance suite: one pass/fail line per criterion, exit code 0 only when
// every criterion holds. Criterion 8 additionally drives the installed CLI
// binary when its path is passed as argv[1].

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "corpus_gen.hpp"
#include "izeta/cli.hpp"
#include "izeta/report.hpp"

using namespace izeta;
namespace fs = std::filesystem;

namespace {

int failures = 0;
std::chrono::steady_clock::time_point suite_start;

struct Criterion {
    int number;
    std::string description;
    std::ostringstream why;
    bool ok = true;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            why << (why.str().empty() ? "" : "; ") << what;
        }
    }
    ~Criterion() {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << number << ": " << description
                  << "  [" << ms << " ms]";
        if (!ok) {
            std::cout << "  -- " << why.str();
            ++failures;
        }
        std::cout << "\n";
    }
};

std::multiset<std::pair<long long, long long>> numerical_data(const DualGraph& g) {
    std::multiset<std::pair<long long, long long>> out;
    for (const auto& c : g.components)
        if (c.kind == ComponentKind::Exceptional) out.insert({c.N, c.nu});
    return out;
}

std::set<Rational> pole_values(const PoleList& ps) {
    std::set<Rational> out;
    for (const auto& p : ps) out.insert(p.value);
    return out;
}

bool has_edge(const DualGraph& g, const std::string& a, const std::string& b) {
    for (const auto& e : g.edges)
        if ((e.a == a && e.b == b) || (e.a == b && e.b == a)) return true;
    return false;
}

const PoleCertificate* cert_for(const ConjectureReport& rep, const Rational& pole) {
    for (const auto& c : rep.certificates)
        if (c.pole == pole) return &c;
    return nullptr;
}

void criterion_1() {
    Criterion c{1, "example 1 end-to-end (x^3*y, x^6+y^4)"};
    AnalysisReport rep = analyze_ideal("x^3*y, x^6+y^4", 17, true);
    c.require(numerical_data(rep.graph) ==
                  std::multiset<std::pair<long long, long long>>{{4, 2}, {5, 3}, {6, 4}},
              "numerical data");
    c.require(rep.graph.edges.size() == 2 && has_edge(rep.graph, "E1", "E2") &&
                  has_edge(rep.graph, "E2", "E3"),
              "chain E1-E2-E3");
    c.require(pole_values(rep.poles) == std::set<Rational>{Rational(-1, 2), Rational(-2, 3)},
              "pole set {-1/2, -2/3}");
    c.require(rep.mono.contracted == std::set<std::string>{"E2"}, "contracted set {E2}");
    bool one_group = rep.mono.groups.size() == 1 && rep.mono.groups[0].members.size() == 2 &&
                     rep.mono.groups[0].members[0].id == "E1" &&
                     rep.mono.groups[0].members[0].degree == 3 &&
                     rep.mono.groups[0].members[1].id == "E3" &&
                     rep.mono.groups[0].members[1].degree == 1;
    c.require(one_group, "one image group with degrees {E1: 3, E3: 1}");
    c.require(rep.mono.groups.at(0).zeta.to_string() == "(1-t^4)^3(1-t^6)",
              "generic zeta (1-t^4)^3(1-t^6)");
    c.require(rep.conjecture && rep.conjecture->verified(), "VERIFIED");
    const auto* w12 = cert_for(*rep.conjecture, Rational(-1, 2));
    const auto* w23 = cert_for(*rep.conjecture, Rational(-2, 3));
    c.require(w12 && w12->eigenvalue == "exp(-2*pi*i*1/2)", "eigenvalue exp(-pi*i)");
    c.require(w23 && w23->eigenvalue == "exp(-2*pi*i*2/3)", "eigenvalue exp(-4*pi*i/3)");
}

void criterion_2() {
    Criterion c{2, "example 2 end-to-end (x^4, x*y^2, y^3)"};
    AnalysisReport rep = analyze_ideal("x^4, x*y^2, y^3", 17, true);
    c.require(numerical_data(rep.graph) ==
                  std::multiset<std::pair<long long, long long>>{{3, 2}, {4, 3}, {8, 5}},
              "numerical data");
    c.require(pole_values(rep.poles) == std::set<Rational>{Rational(-2, 3), Rational(-5, 8)},
              "pole set {-2/3, -5/8}");
    int exc_groups = 0;
    bool degrees_one = true;
    for (const auto& g : rep.mono.groups)
        if (!g.weak) {
            ++exc_groups;
            for (const auto& m : g.members) degrees_one = degrees_one && m.degree == 1;
        }
    c.require(exc_groups == 2 && degrees_one, "two image groups with degree-1 maps");
    std::multiset<std::string> zetas;
    for (const auto& g : rep.mono.groups)
        if (!g.weak) zetas.insert(g.zeta.to_string());
    c.require(zetas == std::multiset<std::string>{"(1-t^3)", "(1-t^8)"},
              "generic zetas 1-t^3 and 1-t^8");
    c.require(rep.mono.clusters.size() == 1 &&
                  rep.mono.clusters[0].zeta.to_string() == "(1-t^4)",
              "cluster zeta 1-t^4");
    c.require(rep.conjecture && rep.conjecture->verified(), "VERIFIED");
    const auto* a = cert_for(*rep.conjecture, Rational(-2, 3));
    const auto* b = cert_for(*rep.conjecture, Rational(-5, 8));
    c.require(a && a->eigenvalue == "exp(-2*pi*i*2/3)", "eigenvalue exp(-4*pi*i/3)");
    c.require(b && b->eigenvalue == "exp(-2*pi*i*5/8)", "eigenvalue exp(-5*pi*i/4)");
}

void criterion_3() {
    Criterion c{3, "example 3 end-to-end (x^3*y, x^3-y^2)"};
    AnalysisReport rep = analyze_ideal("x^3*y, x^3-y^2", 17, true);
    c.require(numerical_data(rep.graph) == std::multiset<std::pair<long long, long long>>{
                                               {2, 2}, {3, 3}, {6, 5}, {7, 6}, {8, 7}, {9, 8}},
              "numerical data");
    bool adj = rep.graph.edges.size() == 5 && has_edge(rep.graph, "E1", "E3") &&
               has_edge(rep.graph, "E2", "E3") && has_edge(rep.graph, "E3", "E4") &&
               has_edge(rep.graph, "E4", "E5") && has_edge(rep.graph, "E5", "E6");
    c.require(adj, "adjacency of the figure");
    c.require(pole_values(rep.poles) == std::set<Rational>{Rational(-5, 6), Rational(-8, 9)},
              "pole set {-5/6, -8/9}");
    c.require(rep.mono.contracted == std::set<std::string>{"E1", "E2", "E3", "E4", "E5"},
              "contracted {E1..E5}");
    c.require(rep.mono.clusters.size() == 1 &&
                  rep.mono.clusters[0].zeta.to_string() == "(1-t^2)(1-t^3) / (1-t^6)",
              "cluster zeta (1-t^2)(1-t^3)/(1-t^6)");
    std::multiset<std::string> zetas;
    for (const auto& g : rep.mono.groups)
        if (!g.weak) zetas.insert(g.zeta.to_string());
    c.require(zetas == std::multiset<std::string>{"(1-t^9)"}, "generic zeta 1-t^9");
    c.require(rep.conjecture && rep.conjecture->verified(), "VERIFIED");
    const auto* a = cert_for(*rep.conjecture, Rational(-5, 6));
    const auto* b = cert_for(*rep.conjecture, Rational(-8, 9));
    c.require(a && a->kind == CertificateKind::ClusterWitness && a->chi_sum == -1,
              "-5/6 is a cluster witness with chi-sum -1");
    c.require(a && a->eigenvalue == "exp(-2*pi*i*5/6)", "eigenvalue exp(-5*pi*i/3)");
    c.require(b && b->eigenvalue == "exp(-2*pi*i*8/9)", "eigenvalue exp(-16*pi*i/9)");
}

void criterion_4() {
    Criterion c{4, "classical regression: the cusp (y^2-x^3)"};
    AnalysisReport rep = analyze_ideal("y^2-x^3", 17, true);
    c.require(pole_values(rep.poles) == std::set<Rational>{Rational(-1), Rational(-5, 6)},
              "pole set {-1, -5/6}");
    c.require(rep.mono.clusters.size() == 1 &&
                  rep.mono.clusters[0].zeta.to_string() == "(1-t^2)(1-t^3) / (1-t^6)",
              "zeta at the origin (1-t^2)(1-t^3)/(1-t^6)");
    // Independent route: the classical product over the resolution graph.
    CyclotomicFactored direct;
    for (const auto& comp : rep.graph.components)
        if (comp.kind == ComponentKind::Exceptional)
            direct.multiply(comp.N, chi_open(rep.graph, comp.id));
    c.require(rep.mono.clusters.size() == 1 && rep.mono.clusters[0].zeta == direct,
              "matches the per-component chi product");
}

void criterion_5(const std::vector<std::string>& corpus) {
    Criterion c{5, "pole-theorem equivalence on the generated corpus (" +
                       std::to_string(corpus.size()) + " ideals)"};
    c.require(corpus.size() >= 50, "corpus has at least 50 ideals");
    for (const auto& text : corpus) {
        auto res = principalize(Ideal::from_text(text));
        auto z = topological_zeta_local(res.graph);
        if (!same_pole_values(poles_of(z), pole_characterization(res.graph)))
            c.require(false, "pole sets disagree for (" + text + ")");
    }
}

void criterion_6(const std::vector<std::string>& corpus) {
    Criterion c{6, "invariant suite on the corpus (validation, counts, blow-up invariance)"};
    for (const auto& text : corpus) {
        auto res = principalize(Ideal::from_text(text));
        auto val = validate(res.graph);
        if (!val.all_pass()) c.require(false, "validation failed for (" + text + ")");
        if (!res.split.residual_is_unit) {
            for (long long seed : {17LL, 18LL, 19LL}) {
                auto gm = generic_member(res, seed);
                for (const auto& comp : res.graph.components)
                    if (comp.kind == ComponentKind::Exceptional &&
                        gm.counts.at(comp.id) != *comp.n_generic)
                        c.require(false, "generic counts differ for (" + text + ")");
            }
        }
        if (!res.graph.exceptional_ids().empty()) {
            auto z0 = topological_zeta_local(res.graph);
            auto again = principalize(Ideal::from_text(text));
            blow_up_extra_free_point(again, again.graph.exceptional_ids().front());
            rebuild_graph(again);
            if (!(topological_zeta_local(again.graph) == z0))
                c.require(false, "extra blow-up changed the zeta for (" + text + ")");
        }
    }
}

void criterion_7(const std::vector<std::string>& corpus) {
    Criterion c{7, "conjecture verified with re-checked certificates on the corpus"};
    for (const auto& text : corpus) {
        AnalysisReport rep = analyze_ideal(text, 17, true);
        if (!rep.conjecture->verified()) {
            c.require(false, "violation for (" + text + ")");
            continue;
        }
        for (const auto& cert : rep.conjecture->certificates) {
            Int d = den(cert.pole);
            long long dd = d.convert_to<long long>();
            if (cert.kind == CertificateKind::WitnessComponent) {
                if (cert.order < 1) c.require(false, "witness order < 1 for (" + text + ")");
                if (rep.graph.at(cert.witness).N % dd != 0)
                    c.require(false, "witness multiplicity not divisible for (" + text + ")");
                if (eigenvalue_order(cert.zeta, -cert.pole) != cert.order)
                    c.require(false, "order recomputation differs for (" + text + ")");
            } else if (cert.kind == CertificateKind::ClusterWitness) {
                if (cert.chi_sum >= 0) c.require(false, "chi-sum not negative for (" + text + ")");
                if (cert.order == 0) c.require(false, "cluster order zero for (" + text + ")");
            }
            bool divides_some = false;
            for (const auto& comp : rep.graph.components)
                if (comp.N % dd == 0) divides_some = true;
            if (!divides_some)
                c.require(false, "pole denominator divides no multiplicity for (" + text + ")");
        }
    }
}

void criterion_8(const std::string& cli_path) {
    Criterion c{8, "determinism and analyze/graph round-trip agreement"};
    AnalysisReport r1 = analyze_ideal("x^3*y, x^3-y^2", 41, true);
    AnalysisReport r2 = analyze_ideal("x^3*y, x^3-y^2", 41, true);
    c.require(report_to_json(r1) == report_to_json(r2), "byte-identical in-process reports");

    for (const auto& text : {"x^3*y, x^6+y^4", "x^4, x*y^2, y^3", "x^3*y, x^3-y^2", "y^2-x^3"}) {
        AnalysisReport a = analyze_ideal(text, 17, true);
        GraphReport b = analyze_graph(from_json(to_json(a.graph)), true, true, true);
        bool zeta_eq = b.zeta && a.zeta == *b.zeta;
        bool poles_eq = pole_values(a.poles) == pole_values(b.poles);
        bool clusters_eq = b.mono && a.mono.clusters.size() == b.mono->clusters.size();
        if (clusters_eq)
            for (std::size_t i = 0; i < a.mono.clusters.size(); ++i)
                clusters_eq = clusters_eq && a.mono.clusters[i].zeta == b.mono->clusters[i].zeta;
        c.require(zeta_eq && poles_eq && clusters_eq,
                  std::string("round-trip disagreement for (") + text + ")");
    }

    if (!cli_path.empty()) {
        fs::path tmp = fs::temp_directory_path() / "izeta_acceptance";
        fs::create_directories(tmp);
        auto run = [&](const std::string& out_name) {
            std::string cmd = "\"" + cli_path + "\" analyze --ideal \"x^3*y, x^6+y^4\" --seed 17 " +
                              "--quiet --json \"" + (tmp / out_name).string() + "\"";
            return std::system(cmd.c_str());
        };
        c.require(run("a.json") == 0 && run("b.json") == 0, "CLI runs succeed");
        std::ifstream fa(tmp / "a.json", std::ios::binary), fb(tmp / "b.json", std::ios::binary);
        std::stringstream sa, sb;
        sa << fa.rdbuf();
        sb << fb.rdbuf();
        c.require(sa.str() == sb.str() && !sa.str().empty(), "byte-identical CLI reports");
        std::error_code ec;
        fs::remove_all(tmp, ec);
    }
}

}  // namespace

int main(int argc, char** argv) {
    suite_start = std::chrono::steady_clock::now();
    std::string cli_path = argc > 1 ? argv[1] : "";
    try {
        criterion_1();
        criterion_2();
        criterion_3();
        criterion_4();
        auto corpus = izeta_testing::build_corpus(50);
        criterion_5(corpus);
        criterion_6(corpus);
        criterion_7(corpus);
        criterion_8(cli_path);
    } catch (const std::exception& e) {
        std::cout << "FAIL  acceptance suite aborted: " << e.what() << "\n";
        return 1;
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - suite_start)
                  .count();
    std::cout << (failures == 0 ? "all criteria passed" : "criteria failed") << "  [total " << ms
              << " ms]\n";
    return failures == 0 ? 0 : 1;
}
