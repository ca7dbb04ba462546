#include "izeta/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "izeta/report.hpp"

namespace izeta {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

long long default_seed() {
    if (const char* env = std::getenv("IZETA_SEED")) {
        try {
            return std::stoll(env);
        } catch (...) {
            throw InputError("IZETA_SEED is not an integer");
        }
    }
    return 17;
}

namespace {

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot open '" + path + "' for writing");
    out << content;
}

}  // namespace

int run_analyze(const AnalyzeOptions& opts, std::ostream& out, std::ostream& err) {
    try {
        AnalysisReport rep = analyze_ideal(opts.ideal, opts.seed, !opts.no_conjecture);
        if (!opts.quiet) out << report_to_text(rep);
        if (!opts.json_path.empty()) write_file(opts.json_path, report_to_json(rep));
        if (!opts.dot_path.empty()) write_file(opts.dot_path, to_dot(rep.graph));
        if (rep.conjecture && !rep.conjecture->verified()) return kExitViolation;
        return kExitOk;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
}

int run_graph(const GraphOptions& opts, std::ostream& out, std::ostream& err) {
    try {
        std::ifstream in(opts.in_path, std::ios::binary);
        if (!in) throw InputError("cannot open '" + opts.in_path + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        DualGraph g = from_json(buf.str());
        GraphReport rep =
            analyze_graph(g, opts.zeta, opts.monodromy, opts.check_conjecture);
        out << graph_report_to_text(rep);
        if (!opts.json_path.empty()) write_file(opts.json_path, graph_report_to_json(rep));
        if (!opts.dot_path.empty()) write_file(opts.dot_path, to_dot(rep.graph));
        if (!rep.validation.all_pass()) return kExitError;
        if (rep.conjecture && !rep.conjecture->verified()) return kExitViolation;
        return kExitOk;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
}

// ---------------------------------------------------------------------------
// Corpus runner: a directory of JSON case files, each an ideal or a graph
// with optional expectations.
// ---------------------------------------------------------------------------

namespace {

struct CaseResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

std::string cyclo_list_text(const std::vector<Cluster>& cs) {
    std::string out;
    for (const auto& c : cs) out += (out.empty() ? "" : " | ") + c.zeta.to_string();
    return out;
}

CaseResult run_case(const fs::path& path) {
    CaseResult result;
    result.name = path.filename().string();
    try {
        std::ifstream in(path, std::ios::binary);
        std::stringstream buf;
        buf << in.rdbuf();
        ordered_json j = ordered_json::parse(buf.str());
        if (j.contains("name") && j["name"].is_string()) result.name = j["name"].get<std::string>();

        ordered_json expect =
            j.contains("expect") && j["expect"].is_object() ? j["expect"] : ordered_json::object();
        std::ostringstream why;
        bool ok = true;
        auto fail = [&](const std::string& msg) {
            ok = false;
            why << msg << "; ";
        };

        DualGraph graph;
        PoleList poles;
        MonodromyAnalysis mono;
        std::optional<ConjectureReport> conj;

        if (j.contains("ideal")) {
            long long seed = j.contains("seed") ? j["seed"].get<long long>() : default_seed();
            AnalysisReport rep = analyze_ideal(j["ideal"].get<std::string>(), seed, true);
            graph = rep.graph;
            poles = rep.poles;
            mono = rep.mono;
            conj = rep.conjecture;
        } else if (j.contains("graph")) {
            DualGraph g = from_json(j["graph"].dump());
            GraphReport rep = analyze_graph(g, true, true, true);
            if (!rep.validation.all_pass())
                throw InputError("graph validation failed:\n" + rep.validation.to_string());
            graph = rep.graph;
            poles = rep.poles;
            mono = *rep.mono;
            conj = rep.conjecture;
        } else {
            throw InputError("case file has neither 'ideal' nor 'graph'");
        }

        // Invariant suite on every case.
        ValidationReport val = validate(graph);
        if (!val.all_pass()) fail("validation failed: " + val.to_string());
        if (conj) {
            if (!conj->verified()) fail("conjecture violation");
            for (const auto& cert : conj->certificates) {
                if (cert.kind == CertificateKind::WitnessComponent && cert.order < 1)
                    fail("witness certificate with non-positive order");
                if (cert.kind == CertificateKind::ClusterWitness &&
                    (cert.chi_sum >= 0 || cert.order == 0))
                    fail("cluster certificate failed its own re-check");
            }
        }

        // Stated expectations.
        if (expect.contains("numerical_data")) {
            std::multiset<std::pair<long long, long long>> want, got;
            for (const auto& nd : expect["numerical_data"])
                want.insert({nd[0].get<long long>(), nd[1].get<long long>()});
            for (const auto& c : graph.components)
                if (c.kind == ComponentKind::Exceptional) got.insert({c.N, c.nu});
            if (want != got) fail("numerical data mismatch");
        }
        if (expect.contains("poles")) {
            std::set<Rational> want, got;
            for (const auto& p : expect["poles"])
                want.insert(rational_from_string(p.get<std::string>()));
            for (const auto& p : poles) got.insert(p.value);
            if (want != got) fail("pole set mismatch");
        }
        if (expect.contains("contracted")) {
            std::set<std::string> want;
            for (const auto& id : expect["contracted"]) want.insert(id.get<std::string>());
            if (want != mono.contracted) fail("contracted set mismatch");
        }
        if (expect.contains("generic_zetas")) {
            std::multiset<std::string> want, got;
            for (const auto& z : expect["generic_zetas"]) want.insert(z.get<std::string>());
            for (const auto& g : mono.groups)
                if (!g.weak) got.insert(g.zeta.to_string());
            if (want != got) fail("generic-point zeta mismatch");
        }
        if (expect.contains("cluster_zetas")) {
            std::multiset<std::string> want, got;
            for (const auto& z : expect["cluster_zetas"]) want.insert(z.get<std::string>());
            for (const auto& c : mono.clusters) got.insert(c.zeta.to_string());
            if (want != got)
                fail("cluster zeta mismatch (got " + cyclo_list_text(mono.clusters) + ")");
        }
        if (expect.contains("verdict")) {
            std::string want = expect["verdict"].get<std::string>();
            std::string got = !conj ? "NONE" : conj->verified() ? "VERIFIED" : "VIOLATION";
            if (want != got) fail("verdict mismatch: " + got);
        }

        result.pass = ok;
        result.detail = why.str();
    } catch (const std::exception& e) {
        result.pass = false;
        result.detail = e.what();
    }
    return result;
}

}  // namespace

int run_corpus(const CorpusOptions& opts, std::ostream& out, std::ostream& err) {
    std::vector<fs::path> files;
    try {
        for (const auto& entry : fs::directory_iterator(opts.dir))
            if (entry.is_regular_file() && entry.path().extension() == ".json")
                files.push_back(entry.path());
    } catch (const fs::filesystem_error& e) {
        err << "error: cannot read corpus directory: " << e.what() << "\n";
        return kExitError;
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) {
        err << "error: no cases found in '" << opts.dir << "'\n";
        return kExitError;
    }

    std::vector<CaseResult> results(files.size());
    int jobs = std::max(1, opts.jobs);
    if (jobs == 1) {
        for (std::size_t i = 0; i < files.size(); ++i) results[i] = run_case(files[i]);
    } else {
        std::size_t next = 0;
        while (next < files.size()) {
            std::size_t batch = std::min<std::size_t>(jobs, files.size() - next);
            std::vector<std::future<CaseResult>> futs;
            for (std::size_t k = 0; k < batch; ++k)
                futs.push_back(std::async(std::launch::async, run_case, files[next + k]));
            for (std::size_t k = 0; k < batch; ++k) results[next + k] = futs[k].get();
            next += batch;
        }
    }

    std::size_t passed = 0;
    for (const auto& r : results) {
        out << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
        if (!r.pass && !r.detail.empty()) out << "  (" << r.detail << ")";
        out << "\n";
        if (r.pass) ++passed;
    }
    out << passed << "/" << results.size() << " cases passed\n";
    return passed == results.size() ? kExitOk : kExitError;
}

}  // namespace izeta
