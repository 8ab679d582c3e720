#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ramsey/colorings.hpp"
#include "ramsey/core.hpp"
#include "ramsey/game.hpp"

namespace ramsey {

// ---------------------------------------------------------------------
// Exact small Ramsey values by backtracking search.

struct RamseyQuery {
    int k = 3;
    int t = 2;
    int n = 3;
    int n_max = 10;
};

struct ExactRamseyResult {
    // Least N such that every coloring of the k-subsets of [N] yields a
    // (k+1)-set with >= t red edges or an all-blue n-set; empty when the
    // value exceeds n_max.
    std::optional<int> value;
    int searched_up_to = 0;
    // A good coloring at value-1 produced by the search, when one was
    // actually searched for (i.e. value > the first N tried).
    std::optional<ExplicitColoring> witness_below;
};

// A coloring of K_N^k avoiding both target configurations, or nullopt if
// none exists. Backtracking over edge colors with unit propagation on the
// "at most t-1 red in each (k+1)-set" and "not all blue in each n-set"
// constraints; by vertex transitivity the first edge is fixed red and the
// all-blue coloring is checked separately.
std::optional<ExplicitColoring> find_good_coloring(int k, int t, int n, int N);

// Searches N upward from max(n, k). Each searched level must satisfy
// C(N, k) <= 40 (the guard is per level, so queries that resolve below
// the cap succeed regardless of n_max).
ExactRamseyResult exact_ramsey(const RamseyQuery& query);

// "k t n value searched_up_to" lines, one per query, in input order.
// The stored fixture file is regenerated through this function.
std::string exact_value_table(std::span<const RamseyQuery> queries);

// ---------------------------------------------------------------------
// The sequence dichotomy behind the blue-clique arguments: a long enough
// sequence with distinct neighbours has a monotone run of length
// run_length or extrema_count consecutive alternating extrema starting
// with a local maximum. Guaranteed once the length reaches
// 2 * extrema_count * run_length - 1.

struct DichotomyResult {
    enum class Kind { MonotoneRun, AlternatingExtrema, NotGuaranteed };
    Kind kind = Kind::NotGuaranteed;
    std::size_t run_start = 0;            // 1-based; MonotoneRun only
    std::vector<std::size_t> extrema;     // 1-based positions, alternating max/min
};

DichotomyResult check_sequence_dichotomy(std::span<const int> seq, int run_length,
                                         int extrema_count);

// ---------------------------------------------------------------------
// End-to-end check of a stepping-up coloring.

struct SteppingCheck {
    enum class Status { Pass, CounterWitness, VacuousPrecondition };
    Status status = Status::Pass;
    std::optional<ConfigurationWitness> witness;
    std::string detail;
    bool blue_side_vacuous = false;  // clique target exceeds 2^N
    int blue_target = 0;             // 2kn (standard) or 4n^2 (strong)
};

// Verifies that phi itself avoids a red heavy (t-1)-target and a blue
// n-clique (else VacuousPrecondition), then scans the stepped-up coloring
// on {0,1}^N for a (k+1)-set with >= t red edges and, when the target
// fits inside the universe, for a blue clique of the target size.
SteppingCheck check_stepping_conclusion(const BaseTwoColoring& phi, int k, int t, int n,
                                        int N, StepVariant mode,
                                        const ScanOptions& opts = {});

// ---------------------------------------------------------------------
// Exhaustive adversary for the builder game: walks every painter reply
// sequence (up to node_budget proposals) and checks that each leaf ends
// in a verified outcome within the resource limits, with the per-stage
// observations holding along the way.

struct PainterTreeReport {
    std::uint64_t nodes = 0;
    std::uint64_t leaves = 0;
    bool budget_exhausted = false;
    GameStats max_stats;  // componentwise maxima over all leaves
    std::vector<std::string> violations;
};

PainterTreeReport explore_all_painters(const GameConfig& config,
                                       std::uint64_t node_budget,
                                       bool check_each_stage = true);

}  // namespace ramsey
