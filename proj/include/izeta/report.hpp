#pragma once

#include <optional>
#include <string>
#include <vector>

#include "izeta/conjecture.hpp"
#include "izeta/monodromy.hpp"
#include "izeta/resolution.hpp"
#include "izeta/zeta.hpp"

namespace izeta {

// Everything the pipeline produces for one ideal. Both pole computations are
// present and guaranteed equal; a mismatch aborts the analysis instead of
// producing a report.
struct AnalysisReport {
    std::string ideal_text;
    long long seed = 17;
    std::string h_text;
    std::vector<std::string> residual_texts;
    bool residual_is_unit = false;
    int blow_ups = 0;

    DualGraph graph;
    RationalFunctionS zeta;
    PoleList poles;  // reduced-function orders merged with condition tags
    MonodromyAnalysis mono;
    std::optional<ConjectureReport> conjecture;
    std::vector<std::string> warnings;
    long long elapsed_ms = 0;  // human-readable output only, never serialized
};

AnalysisReport analyze_ideal(const std::string& ideal_text, long long seed, bool run_conjecture);

std::string report_to_json(const AnalysisReport& rep);
std::string report_to_text(const AnalysisReport& rep);

// The graph-only path: ingests a dual graph and computes the requested
// sections from combinatorial data alone.
struct GraphReport {
    DualGraph graph;
    ValidationReport validation;
    std::optional<RationalFunctionS> zeta;
    PoleList poles;
    std::optional<MonodromyAnalysis> mono;
    std::optional<ConjectureReport> conjecture;
    std::vector<std::string> warnings;
};

GraphReport analyze_graph(const DualGraph& g, bool want_zeta, bool want_monodromy,
                          bool want_conjecture);

std::string graph_report_to_json(const GraphReport& rep);
std::string graph_report_to_text(const GraphReport& rep);

}  // namespace izeta
