#pragma once

#include <iosfwd>
#include <string>

namespace izeta {

// Exit codes shared by all subcommands: 0 success / conjecture verified,
// 1 input or processing error, 2 conjecture violation.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitViolation = 2;

struct AnalyzeOptions {
    std::string ideal;
    long long seed = 17;
    std::string json_path;  // empty: skip
    std::string dot_path;
    bool no_conjecture = false;
    bool quiet = false;  // suppress the human-readable report
};
int run_analyze(const AnalyzeOptions& opts, std::ostream& out, std::ostream& err);

struct GraphOptions {
    std::string in_path;
    bool zeta = false;
    bool monodromy = false;
    bool check_conjecture = false;
    std::string json_path;
    std::string dot_path;
};
int run_graph(const GraphOptions& opts, std::ostream& out, std::ostream& err);

struct CorpusOptions {
    std::string dir;
    int jobs = 1;
};
int run_corpus(const CorpusOptions& opts, std::ostream& out, std::ostream& err);

long long default_seed();  // 17, overridable through IZETA_SEED

}  // namespace izeta
