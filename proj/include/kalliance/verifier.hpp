#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kalliance/corpus.hpp"
#include "kalliance/graph.hpp"

namespace kalliance {

// Exhaustive structural checks at small n (enumeration cap n <= 10).
// The checks here run on raw subset bitmasks, independent of the
// predicate/solver code paths, so the two routes cross-validate.
//
//   T-dual         cover(X) <=> complement(X) free, all three families
//   T-rem1         per-vertex witness structure of minimal covers / maximal free sets
//   T-dom          complement of a minimal defensive k-cover is dominating      (1-delta <= k)
//   T-goa          complement of a minimal defensive k-cover is a global
//                  offensive k-alliance                                          (1-delta <= k)
//   T-goac         complement of a minimal global offensive k-cover (|X| >= 2)
//                  is an offensive (k-2)-alliance; global for k in {3..Delta}    (k >= 2-Delta)
//   T-13           global offensive k-alliance complements are defensive
//                  (1-k)-free; defensive k-alliance complements are global
//                  offensive (1-k)-free                                          (1-Delta <= k <= Delta-1)
//   T-table        five cover/free conversion rows, each under its own range
//   T-ext-goaf     a global offensive k-free set with |X| <= n-2 extends by
//                  one vertex to a (k+2)-free set                                (1 <= k <= Delta-2)
//   T-ext-daf      a defensive k-free set stays free at k+2 after adding any
//                  one vertex                                                    (max(-Delta,-delta-1) <= k <= Delta-2)
//   T-oac2         minimal offensive k-covers have at least two vertices        (k <= delta)
//   T-front        both sides of a partition into global boundary offensive
//                  0-alliances are minimal global offensive 0-alliances          (k = 0)
//   T-oac-counter  fixed instance: S = {1,2,4,5,6} is a minimal offensive
//                  0-cover whose complement is not dominating (c8-chords)
enum class TheoremStatus {
    ok,             // instances checked, none failed
    vacuous,        // no premise-satisfying instance existed
    skipped,        // k outside the theorem's stated range (or graph not applicable)
    counterexample, // at least one instance failed
};

const char* theorem_status_name(TheoremStatus s);

struct TheoremReport {
    std::string theorem;
    int k = 0;
    long long instances = 0;
    long long verified = 0;
    TheoremStatus status = TheoremStatus::skipped;
    std::string detail;  // human note: skip reason or first-failure description
    std::optional<std::vector<int>> counterexample;  // first failing subset
};

std::vector<std::string> all_theorem_ids();

// Stated k-range of a theorem on g; empty optional marks "not applicable"
// ranges (empty interval). Throws std::invalid_argument for unknown ids.
std::optional<std::pair<int, int>> theorem_k_range(const Graph& g, const std::string& theorem_id);

// Checks one theorem at one k. Throws cap_error for n > 10 and
// std::invalid_argument for unknown theorem ids. k outside the stated
// range yields status skipped, not an error.
TheoremReport verify(const Graph& g, const std::string& theorem_id, int k);

struct TheoremFailure {
    std::string theorem;
    std::string graph;
    int k = 0;
    std::string detail;
};

struct TheoremAggregate {
    std::string theorem;
    long long runs = 0;       // (graph, k) pairs checked
    long long instances = 0;  // premise-satisfying instances
    long long verified = 0;
    long long vacuous_runs = 0;
    long long skipped_runs = 0;
    long long counterexamples = 0;
};

struct CorpusRunReport {
    std::vector<TheoremAggregate> per_theorem;  // in requested theorem order
    std::vector<TheoremFailure> failures;
    long long total_instances = 0;
    long long total_counterexamples = 0;
    std::optional<double> wall_ms;  // set only when timing was requested
    bool ok = true;
};

// Runs the theorem list over the corpus, every k in each theorem's stated
// range intersected with k_range when given (out-of-range ks count as
// skipped runs). T-oac-counter is a fixed instance and runs only on
// entries named "c8-chords". Tasks run on `threads` workers (>= 1);
// output is deterministic regardless of thread count.
CorpusRunReport corpus_run(const std::vector<CorpusEntry>& corpus,
                           const std::vector<std::string>& theorems,
                           std::optional<std::pair<int, int>> k_range, int threads,
                           bool timing);

}  // namespace kalliance
