#include <iostream>

#include <CLI11.hpp>

#include "izeta/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"izeta: principalization, topological and monodromy zeta functions of plane "
                 "curve ideals, and monodromy-conjecture certificates"};
    app.require_subcommand(1);

    izeta::AnalyzeOptions aopts;
    long long seed_flag = -1;
    auto* analyze = app.add_subcommand("analyze", "run the full pipeline on an ideal");
    analyze->add_option("--ideal", aopts.ideal, "comma-separated generators, e.g. \"x^3*y, x^6+y^4\"")
        ->required();
    analyze->add_option("--seed", seed_flag, "seed for the generic-member draw (default 17)");
    analyze->add_option("--json", aopts.json_path, "write the JSON report to this path");
    analyze->add_option("--dot", aopts.dot_path, "write the dual graph in DOT format");
    analyze->add_flag("--no-conjecture", aopts.no_conjecture, "skip the conjecture check");
    analyze->add_flag("--quiet", aopts.quiet, "suppress the human-readable report");

    izeta::GraphOptions gopts;
    auto* graph = app.add_subcommand("graph", "run the combinatorial path on a dual-graph JSON");
    graph->add_option("--in", gopts.in_path, "dual graph JSON file")->required();
    graph->add_flag("--zeta", gopts.zeta, "compute the local topological zeta function");
    graph->add_flag("--monodromy", gopts.monodromy, "compute cluster and generic-point zetas");
    graph->add_flag("--check-conjecture", gopts.check_conjecture, "verify the conjecture");
    graph->add_option("--json", gopts.json_path, "write the JSON report to this path");
    graph->add_option("--dot", gopts.dot_path, "write the graph in DOT format");

    izeta::CorpusOptions copts;
    auto* corpus = app.add_subcommand("corpus", "run a directory of case files");
    corpus->add_option("--dir", copts.dir, "directory of *.json cases")->required();
    corpus->add_option("--jobs", copts.jobs, "number of concurrent cases (default 1)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) {
            aopts.seed = seed_flag >= 0 ? seed_flag : izeta::default_seed();
            return izeta::run_analyze(aopts, std::cout, std::cerr);
        }
        if (graph->parsed()) return izeta::run_graph(gopts, std::cout, std::cerr);
        if (corpus->parsed()) return izeta::run_corpus(copts, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return izeta::kExitError;
    }
    return izeta::kExitError;
}
