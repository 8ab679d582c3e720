#include "ramsey/verifier.hpp"

#include <algorithm>
#include <sstream>

namespace ramsey {

namespace {

constexpr std::uint64_t kEdgeGuard = 40;         // max C(N, k) per searched level
constexpr std::uint64_t kSubsetGuard = 30000000;  // max enumerated (k+1)-subsets

// Feasibility solver for one level N: DPLL over edge colors.
class GoodColoringSolver {
public:
    GoodColoringSolver(int k, int t, int n, int N) : k_(k), t_(t), n_(n), N_(N) {
        auto edges = enumerate_k_subsets(static_cast<std::size_t>(N), k);
        edge_count_ = static_cast<int>(edges.size());
        edge_rank_ = [this](std::span<const Vertex> edge) {
            std::uint64_t rank = 0;
            for (std::size_t i = 0; i < edge.size(); ++i)
                rank += binomial(edge[i] - 1, i + 1);
            return static_cast<int>(rank);
        };

        edge_cliques_.resize(static_cast<std::size_t>(edge_count_));
        edge_nsets_.resize(static_cast<std::size_t>(edge_count_));

        for (const auto& tuple : enumerate_k_subsets(static_cast<std::size_t>(N), k + 1)) {
            std::vector<int> members;
            for (std::size_t skip = 0; skip < tuple.size(); ++skip) {
                std::vector<Vertex> edge;
                for (std::size_t i = 0; i < tuple.size(); ++i)
                    if (i != skip) edge.push_back(tuple[i]);
                members.push_back(edge_rank_(edge));
            }
            const int id = static_cast<int>(clique_edges_.size());
            for (int e : members) edge_cliques_[static_cast<std::size_t>(e)].push_back(id);
            clique_edges_.push_back(std::move(members));
        }

        if (n <= N) {
            for (const auto& tuple : enumerate_k_subsets(static_cast<std::size_t>(N), n)) {
                std::vector<int> members;
                KSubsetStream stream(tuple.size(), k);
                std::vector<std::size_t> pick(static_cast<std::size_t>(k));
                while (stream.next(pick)) {
                    std::vector<Vertex> edge;
                    for (auto i : pick) edge.push_back(tuple[i]);
                    members.push_back(edge_rank_(edge));
                }
                const int id = static_cast<int>(nset_edges_.size());
                for (int e : members) edge_nsets_[static_cast<std::size_t>(e)].push_back(id);
                nset_edges_.push_back(std::move(members));
            }
        }

        color_.assign(static_cast<std::size_t>(edge_count_), kUnset);
        clique_reds_.assign(clique_edges_.size(), 0);
        nset_blues_.assign(nset_edges_.size(), 0);
    }

    std::optional<ExplicitColoring> solve() {
        // The all-blue coloring is the only good coloring with no red
        // edge; it is good exactly when no n-set exists.
        if (N_ < n_) {
            ExplicitColoring table;
            table.N = N_;
            table.k = k_;
            table.colors.assign(static_cast<std::size_t>(edge_count_), Color::Blue);
            return table;
        }
        // Otherwise some edge is red, and by relabeling the colex-first
        // edge can be assumed red.
        if (edge_count_ == 0) return std::nullopt;
        if (!assign(0, Color::Red)) return std::nullopt;
        if (!search()) return std::nullopt;
        ExplicitColoring table;
        table.N = N_;
        table.k = k_;
        table.colors.resize(static_cast<std::size_t>(edge_count_));
        for (int e = 0; e < edge_count_; ++e)
            table.colors[static_cast<std::size_t>(e)] =
                color_[static_cast<std::size_t>(e)] == kRed ? Color::Red : Color::Blue;
        return table;
    }

private:
    static constexpr std::int8_t kUnset = 0, kRed = 1, kBlue = 2;

    bool search() {
        int branch = -1;
        for (int e = 0; e < edge_count_; ++e) {
            if (color_[static_cast<std::size_t>(e)] == kUnset) {
                branch = e;
                break;
            }
        }
        if (branch < 0) return true;

        for (Color c : {Color::Red, Color::Blue}) {
            const std::size_t mark = trail_.size();
            if (assign(branch, c) && search()) return true;
            undo_to(mark);
        }
        return false;
    }

    // Assigns edge -> c plus all unit consequences; false on conflict
    // (counters stay consistent either way, the caller unwinds the trail).
    bool assign(int edge, Color c) {
        std::vector<std::pair<int, Color>> queue{{edge, c}};
        while (!queue.empty()) {
            auto [e, want] = queue.back();
            queue.pop_back();
            const auto idx = static_cast<std::size_t>(e);
            if (color_[idx] != kUnset) {
                if (color_[idx] != (want == Color::Red ? kRed : kBlue)) return false;
                continue;
            }
            color_[idx] = want == Color::Red ? kRed : kBlue;
            trail_.push_back(e);

            // Counters must be updated for every constraint of the edge
            // even on conflict, or undo_to() would desynchronize them.
            bool conflict = false;
            if (want == Color::Red) {
                for (int y : edge_cliques_[idx]) {
                    const auto yi = static_cast<std::size_t>(y);
                    if (++clique_reds_[yi] >= t_) {
                        conflict = true;
                    } else if (clique_reds_[yi] == t_ - 1) {
                        for (int other : clique_edges_[yi])
                            if (color_[static_cast<std::size_t>(other)] == kUnset)
                                queue.emplace_back(other, Color::Blue);
                    }
                }
            } else {
                for (int x : edge_nsets_[idx]) {
                    const auto xi = static_cast<std::size_t>(x);
                    const int size = static_cast<int>(nset_edges_[xi].size());
                    if (++nset_blues_[xi] == size) {
                        conflict = true;
                    } else if (nset_blues_[xi] == size - 1) {
                        for (int other : nset_edges_[xi])
                            if (color_[static_cast<std::size_t>(other)] == kUnset)
                                queue.emplace_back(other, Color::Red);
                    }
                }
            }
            if (conflict) return false;
        }
        return true;
    }

    void undo_to(std::size_t mark) {
        while (trail_.size() > mark) {
            const int e = trail_.back();
            trail_.pop_back();
            const auto idx = static_cast<std::size_t>(e);
            if (color_[idx] == kRed) {
                for (int y : edge_cliques_[idx]) --clique_reds_[static_cast<std::size_t>(y)];
            } else {
                for (int x : edge_nsets_[idx]) --nset_blues_[static_cast<std::size_t>(x)];
            }
            color_[idx] = kUnset;
        }
    }

    int k_, t_, n_, N_;
    int edge_count_ = 0;
    std::function<int(std::span<const Vertex>)> edge_rank_;
    std::vector<std::vector<int>> clique_edges_, nset_edges_;
    std::vector<std::vector<int>> edge_cliques_, edge_nsets_;
    std::vector<std::int8_t> color_;
    std::vector<int> clique_reds_, nset_blues_;
    std::vector<int> trail_;
};

void validate_query(int k, int t, int n) {
    if (k < 2) throw DomainError("exact_ramsey: k must be >= 2");
    if (t < 2 || t > k + 1) throw DomainError("exact_ramsey: t must be in 2..k+1");
    if (n < k) throw DomainError("exact_ramsey: n must be >= k");
}

}  // namespace

std::optional<ExplicitColoring> find_good_coloring(int k, int t, int n, int N) {
    validate_query(k, t, n);
    if (N < k) throw DomainError("find_good_coloring: N must be >= k");
    if (binomial(static_cast<std::uint64_t>(N), static_cast<std::uint64_t>(k)) > kEdgeGuard)
        throw CapacityError("find_good_coloring: C(N, k) exceeds the search guard of 40");
    return GoodColoringSolver(k, t, n, N).solve();
}

ExactRamseyResult exact_ramsey(const RamseyQuery& query) {
    validate_query(query.k, query.t, query.n);
    ExactRamseyResult result;
    const int start = std::max(query.n, query.k);
    std::optional<ExplicitColoring> last_good;
    for (int N = start; N <= query.n_max; ++N) {
        auto good = find_good_coloring(query.k, query.t, query.n, N);
        result.searched_up_to = N;
        if (!good) {
            result.value = N;
            result.witness_below = std::move(last_good);
            return result;
        }
        last_good = std::move(good);
    }
    result.searched_up_to = query.n_max;
    return result;
}

std::string exact_value_table(std::span<const RamseyQuery> queries) {
    std::ostringstream out;
    for (const auto& query : queries) {
        const auto result = exact_ramsey(query);
        out << query.k << ' ' << query.t << ' ' << query.n << ' ';
        if (result.value)
            out << *result.value;
        else
            out << "exceeded";
        out << ' ' << result.searched_up_to << '\n';
    }
    return out.str();
}

DichotomyResult check_sequence_dichotomy(std::span<const int> seq, int run_length,
                                         int extrema_count) {
    if (seq.size() < 2)
        throw DomainError("check_sequence_dichotomy: need at least two entries");
    if (run_length < 2) throw DomainError("check_sequence_dichotomy: run target must be >= 2");
    if (extrema_count < 1)
        throw DomainError("check_sequence_dichotomy: extrema target must be >= 1");
    for (std::size_t i = 0; i + 1 < seq.size(); ++i)
        if (seq[i] == seq[i + 1])
            throw DomainError("check_sequence_dichotomy: adjacent entries must differ");

    DichotomyResult result;

    // Leftmost monotone run of run_length entries wins.
    std::size_t run_start = 0;
    for (std::size_t i = 1; i < seq.size(); ++i) {
        if (i >= 2) {
            const bool up_prev = seq[i - 1] > seq[i - 2];
            const bool up_here = seq[i] > seq[i - 1];
            if (up_prev != up_here) run_start = i - 1;
        }
        if (i - run_start + 1 >= static_cast<std::size_t>(run_length)) {
            result.kind = DichotomyResult::Kind::MonotoneRun;
            result.run_start = run_start + 1;
            return result;
        }
    }

    // Extrema positions; consecutive extrema alternate automatically, so
    // any window works once its first member is a local maximum.
    std::vector<std::size_t> extrema;
    std::vector<bool> is_max;
    for (std::size_t i = 1; i + 1 < seq.size(); ++i) {
        const bool up_before = seq[i] > seq[i - 1];
        const bool up_after = seq[i + 1] > seq[i];
        if (up_before != up_after) {
            extrema.push_back(i + 1);  // 1-based
            is_max.push_back(up_before);
        }
    }
    for (std::size_t j = 0; j + static_cast<std::size_t>(extrema_count) <= extrema.size();
         ++j) {
        if (!is_max[j]) continue;
        result.kind = DichotomyResult::Kind::AlternatingExtrema;
        result.extrema.assign(extrema.begin() + static_cast<std::ptrdiff_t>(j),
                              extrema.begin() + static_cast<std::ptrdiff_t>(j) +
                                  extrema_count);
        return result;
    }

    result.kind = DichotomyResult::Kind::NotGuaranteed;
    return result;
}

SteppingCheck check_stepping_conclusion(const BaseTwoColoring& phi, int k, int t, int n,
                                        int N, StepVariant mode, const ScanOptions& opts) {
    if (phi.N() != N) throw DomainError("check_stepping_conclusion: phi must live on [N]");
    if (phi.uniformity() != k - 1)
        throw DomainError("check_stepping_conclusion: phi must color (k-1)-subsets");
    if (n < k - 1) throw DomainError("check_stepping_conclusion: n must be >= k-1");
    check_variant_supports(mode, k, t);

    const std::uint64_t universe = std::uint64_t{1} << N;

    SteppingCheck check;
    check.blue_target = mode == StepVariant::Standard ? 2 * k * n : 4 * n * n;

    // The construction only promises anything when phi itself is a good
    // base coloring.
    const auto phi_oracle = phi.as_oracle();
    const auto base_domain = VertexDomain::integers(N).vertices();
    if (auto bad = find_red_heavy_set(*phi_oracle, t - 1, base_domain, opts)) {
        check.status = SteppingCheck::Status::VacuousPrecondition;
        check.witness = std::move(bad);
        check.detail = "phi contains a (k)-set with >= t-1 red edges";
        return check;
    }
    if (N >= n) {
        if (auto bad = find_blue_clique(*phi_oracle, n, base_domain, opts)) {
            check.status = SteppingCheck::Status::VacuousPrecondition;
            check.witness = std::move(bad);
            check.detail = "phi contains a blue clique of size n";
            return check;
        }
    }

    if (binomial(universe, static_cast<std::uint64_t>(k + 1)) > kSubsetGuard)
        throw CapacityError("check_stepping_conclusion: (k+1)-subset scan too large");

    const auto oracle = make_stepping_oracle(phi, k, mode, /*allow_unverified=*/true);
    const auto tokens = VertexDomain::bit_vectors(N).vertices();

    if (auto bad = find_red_heavy_set(*oracle, t, tokens, opts)) {
        check.status = SteppingCheck::Status::CounterWitness;
        check.witness = std::move(bad);
        check.detail = "stepped coloring carries a (k+1)-set with >= t red edges";
        return check;
    }

    std::ostringstream detail;
    detail << "red side clean over all (k+1)-subsets of {0,1}^" << N;
    if (static_cast<std::uint64_t>(check.blue_target) > universe) {
        check.blue_side_vacuous = true;
        detail << "; blue clique target " << check.blue_target
               << " exceeds the universe size " << universe << " (vacuous)";
    } else {
        if (binomial(universe, static_cast<std::uint64_t>(check.blue_target)) > kSubsetGuard)
            throw CapacityError("check_stepping_conclusion: blue-side scan too large");
        if (auto bad = find_blue_clique(*oracle, check.blue_target, tokens, opts)) {
            check.status = SteppingCheck::Status::CounterWitness;
            check.witness = std::move(bad);
            check.detail = "stepped coloring contains a blue clique of the target size";
            return check;
        }
        detail << "; blue side clean at clique size " << check.blue_target;
    }
    check.status = SteppingCheck::Status::Pass;
    check.detail = detail.str();
    return check;
}

namespace {

void verify_leaf(const Simulator& sim, const ResourceLimits& limits,
                 PainterTreeReport& report) {
    ++report.leaves;
    const auto& stats = sim.state().stats;
    report.max_stats.vertices = std::max(report.max_stats.vertices, stats.vertices);
    report.max_stats.red_edges = std::max(report.max_stats.red_edges, stats.red_edges);
    report.max_stats.total_edges = std::max(report.max_stats.total_edges, stats.total_edges);
    if (!limits.within(stats)) {
        report.violations.push_back("resource bounds exceeded: s=" +
                                    std::to_string(stats.vertices) +
                                    " r=" + std::to_string(stats.red_edges) +
                                    " m=" + std::to_string(stats.total_edges));
        return;
    }

    const auto& witness = sim.outcome().witness;
    const auto& drawn = sim.state().drawn;
    if (witness.kind == ConfigurationWitness::Kind::RedFork) {
        for (const auto& edge : witness.red_edges) {
            auto it = drawn.find(edge);
            if (it == drawn.end() || it->second != Color::Red)
                report.violations.push_back("fork edge not drawn red");
        }
    } else if (witness.kind == ConfigurationWitness::Kind::BlueClique) {
        const int edge_size = sim.state().k - 1;
        if (static_cast<int>(witness.vertices.size()) >= edge_size) {
            KSubsetStream edges(witness.vertices.size(), edge_size);
            std::vector<std::size_t> pick(static_cast<std::size_t>(edge_size));
            std::vector<Vertex> edge(static_cast<std::size_t>(edge_size));
            while (edges.next(pick)) {
                for (int i = 0; i < edge_size; ++i)
                    edge[static_cast<std::size_t>(i)] =
                        witness.vertices[pick[static_cast<std::size_t>(i)]];
                auto it = drawn.find(edge);
                if (it == drawn.end() || it->second != Color::Blue)
                    report.violations.push_back("clique edge not drawn blue");
            }
        }
    } else {
        report.violations.push_back("unexpected outcome kind");
    }
}

void dfs_painters(Simulator sim, const ResourceLimits& limits, std::uint64_t node_budget,
                  bool check_each_stage, PainterTreeReport& report) {
    while (!sim.finished() && sim.at_stage_boundary()) {
        if (check_each_stage) {
            for (auto& violation : check_observations(sim.state()))
                report.violations.push_back(std::move(violation));
        }
        try {
            sim.advance();
        } catch (const ContractViolation& error) {
            report.violations.push_back(error.what());
            return;
        }
    }
    if (sim.finished()) {
        // The per-stage observations are only promised while no outcome
        // has been declared; a won game legitimately violates them.
        verify_leaf(sim, limits, report);
        return;
    }
    if (report.budget_exhausted) return;
    if (++report.nodes > node_budget) {
        report.budget_exhausted = true;
        return;
    }
    Simulator red_branch = sim;
    red_branch.apply(Color::Red);
    dfs_painters(std::move(red_branch), limits, node_budget, check_each_stage, report);
    if (report.budget_exhausted) return;
    sim.apply(Color::Blue);
    dfs_painters(std::move(sim), limits, node_budget, check_each_stage, report);
}

}  // namespace

PainterTreeReport explore_all_painters(const GameConfig& config, std::uint64_t node_budget,
                                       bool check_each_stage) {
    PainterTreeReport report;
    const auto limits = ResourceLimits::for_game(config.k, config.n);
    dfs_painters(Simulator(config), limits, node_budget, check_each_stage, report);
    if (report.violations.size() > 50) report.violations.resize(50);
    return report;
}

}  // namespace ramsey
