#pragma once

#include <string>
#include <vector>

#include "degseq/functions.hpp"
#include "degseq/graph.hpp"

namespace degseq {

enum class Mode { Max, Min };
enum class OracleKind { ThresholdOnly, AllGraphical, ComplementDuality };

std::string to_string(Mode m);
std::string to_string(OracleKind k);

struct NearTieEntry {
    DegreeSequence sequence;
    long double gap = 0.0L;
};

struct ExtremalReport {
    FunctionSpec objective;
    int n = 0;
    long m = 0;
    Mode mode = Mode::Max;
    OracleKind oracle = OracleKind::AllGraphical;
    Scalar optimum;
    std::vector<DegreeSequence> optimal_sequences;  // sorted, largest first
    bool unique = false;
    std::vector<NearTieEntry> near_ties;            // within tau of the optimum
    std::string note;
};

// One representative per isomorphism class (threshold graphs are determined
// by their degree sequence), all with exactly m edges.
std::vector<Graph> enumerate_threshold_graphs(int n, long m);

// Every non-increasing graphical sequence of length n summing to 2m.
std::vector<DegreeSequence> enumerate_graphical_sequences(int n, long m);

ExtremalReport find_extremal(const FunctionSpec& spec, int n, long m, Mode mode,
                             OracleKind oracle, const EvalOptions& opts = {});

enum class Verdict { Pass, Fail, Inconclusive, Skipped };
std::string to_string(Verdict v);

struct VerifyResult {
    Verdict verdict = Verdict::Pass;
    ExtremalReport report;
    std::string note;
};

// PASS iff the all-graphical maximum is attained exactly by QS(n,m) — except
// the predicted tie at m = 3 when f(3) = 3(f(2)-f(1)), where the optimal set
// must be exactly {star, triangle}. Requires m <= n-1.
VerifyResult verify_unique_quasi_star(const FunctionSpec& f, int n, long m,
                                      const EvalOptions& opts = {});

// PASS iff the threshold-only minimum is attained exactly by QK(n,m).
VerifyResult verify_unique_quasi_complete(const FunctionSpec& g, int n, long m,
                                          const EvalOptions& opts = {});

// PASS iff every all-graphical minimizer has an isolated vertex; Skipped when
// m > C(n-1,2) (outside the lemma's scope).
VerifyResult verify_isolated_vertex_lemma(const FunctionSpec& g, int n, long m,
                                          const EvalOptions& opts = {});

}  // namespace degseq
