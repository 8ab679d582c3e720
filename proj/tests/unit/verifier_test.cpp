#include <doctest.h>

#include <algorithm>

#include "ramsey/rng.hpp"
#include "ramsey/verifier.hpp"

using namespace ramsey;

TEST_CASE("exact_ramsey: degenerate n = k instances") {
    for (int t : {2, 3, 4}) {
        const auto result = exact_ramsey(RamseyQuery{3, t, 3, 10});
        REQUIRE(result.value.has_value());
        CHECK(*result.value == 4);
    }
    for (int t : {2, 3, 4, 5}) {
        const auto result = exact_ramsey(RamseyQuery{4, t, 4, 10});
        REQUIRE(result.value.has_value());
        CHECK(*result.value == 5);
    }
}

TEST_CASE("exact_ramsey(3,2,4): two-sided confirmation") {
    const auto result = exact_ramsey(RamseyQuery{3, 2, 4, 10});
    REQUIRE(result.value.has_value());
    CHECK(*result.value == 5);

    // The witness below the value is a genuinely good coloring.
    REQUIRE(result.witness_below.has_value());
    const auto& witness = *result.witness_below;
    CHECK(witness.N == 4);
    const auto oracle = witness.as_oracle();
    const auto domain = VertexDomain::integers(witness.N).vertices();
    CHECK(!find_red_heavy_set(*oracle, 2, domain).has_value());
    CHECK(!find_blue_clique(*oracle, 4, domain).has_value());

    // Independent confirmation at the value itself: every one of the
    // 2^C(5,3) colorings hits a target, by plain enumeration.
    const auto edges = enumerate_k_subsets(5, 3);
    REQUIRE(edges.size() == 10);
    const auto quads = enumerate_k_subsets(5, 4);
    for (std::uint32_t code = 0; code < (1u << 10); ++code) {
        bool red_heavy = false, blue_clique = false;
        for (const auto& quad : quads) {
            int reds = 0, blues = 0;
            for (std::size_t skip = 0; skip < 4; ++skip) {
                std::vector<Vertex> edge;
                for (std::size_t i = 0; i < 4; ++i)
                    if (i != skip) edge.push_back(quad[i]);
                std::uint64_t rank = 0;
                for (std::size_t i = 0; i < edge.size(); ++i)
                    rank += binomial(edge[i] - 1, i + 1);
                if (code & (1u << rank))
                    ++reds;
                else
                    ++blues;
            }
            if (reds >= 2) red_heavy = true;
            if (blues == 4) blue_clique = true;
        }
        CHECK((red_heavy || blue_clique));
    }
}

TEST_CASE("good-coloring search agrees with full enumeration on small instances") {
    // Brute force: try all 2^C(N,k) colorings directly.
    const auto exists_by_enumeration = [](int k, int t, int n, int N) {
        const auto edges = enumerate_k_subsets(static_cast<std::size_t>(N), k);
        const auto tuples = enumerate_k_subsets(static_cast<std::size_t>(N), k + 1);
        const auto nsets = n <= N ? enumerate_k_subsets(static_cast<std::size_t>(N), n)
                                  : std::vector<std::vector<Vertex>>{};
        const auto rank_of = [](std::span<const Vertex> edge) {
            std::uint64_t rank = 0;
            for (std::size_t i = 0; i < edge.size(); ++i)
                rank += binomial(edge[i] - 1, i + 1);
            return rank;
        };
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << edges.size()); ++code) {
            bool good = true;
            for (const auto& tuple : tuples) {
                int reds = 0;
                for (std::size_t skip = 0; skip < tuple.size(); ++skip) {
                    std::vector<Vertex> edge;
                    for (std::size_t i = 0; i < tuple.size(); ++i)
                        if (i != skip) edge.push_back(tuple[i]);
                    if (code & (std::uint64_t{1} << rank_of(edge))) ++reds;
                }
                if (reds >= t) {
                    good = false;
                    break;
                }
            }
            for (const auto& nset : nsets) {
                if (!good) break;
                bool all_blue = true;
                KSubsetStream stream(nset.size(), 3);
                // Only used with k = 3 below.
                std::vector<std::size_t> pick(3);
                while (stream.next(pick)) {
                    std::vector<Vertex> edge{nset[pick[0]], nset[pick[1]], nset[pick[2]]};
                    if (code & (std::uint64_t{1} << rank_of(edge))) {
                        all_blue = false;
                        break;
                    }
                }
                if (all_blue) good = false;
            }
            if (good) return true;
        }
        return false;
    };

    for (int t = 2; t <= 4; ++t)
        for (int n = 3; n <= 5; ++n)
            for (int N = std::max(3, n); N <= 5; ++N) {
                const bool fast = find_good_coloring(3, t, n, N).has_value();
                const bool slow = exists_by_enumeration(3, t, n, N);
                CAPTURE(t);
                CAPTURE(n);
                CAPTURE(N);
                CHECK(fast == slow);
            }
}

TEST_CASE("exact_ramsey: monotone in n and t across computed values") {
    const int v33 = *exact_ramsey(RamseyQuery{3, 3, 3, 10}).value;
    const int v23 = *exact_ramsey(RamseyQuery{3, 2, 3, 10}).value;
    const int v24 = *exact_ramsey(RamseyQuery{3, 2, 4, 10}).value;
    CHECK(v23 <= v33);
    CHECK(v23 <= v24);
}

TEST_CASE("exact_ramsey guard and exceeded reporting") {
    // (3,3,4) has good colorings past the per-level guard C(N,3) <= 40.
    CHECK_THROWS_AS(exact_ramsey(RamseyQuery{3, 3, 4, 10}), CapacityError);
    CHECK_THROWS_AS(exact_ramsey(RamseyQuery{1, 2, 3, 10}), DomainError);
    CHECK_THROWS_AS(exact_ramsey(RamseyQuery{3, 7, 4, 10}), DomainError);

    // A ceiling below the true value reports "exceeded".
    const auto capped = exact_ramsey(RamseyQuery{3, 2, 4, 4});
    CHECK(!capped.value.has_value());
    CHECK(capped.searched_up_to == 4);
}

TEST_CASE("exact value table renders one line per query") {
    const std::vector<RamseyQuery> queries{{3, 2, 3, 10}, {3, 2, 4, 10}};
    CHECK(exact_value_table(queries) == "3 2 3 4 4\n3 2 4 5 5\n");
}

TEST_CASE("dichotomy: monotone run preferred and found leftmost") {
    const std::vector<int> increasing{1, 2, 3, 4, 5, 6};
    const auto result = check_sequence_dichotomy(increasing, 3, 2);
    CHECK(result.kind == DichotomyResult::Kind::MonotoneRun);
    CHECK(result.run_start == 1);

    const std::vector<int> late_run{5, 1, 6, 2, 3, 4};
    const auto late = check_sequence_dichotomy(late_run, 3, 2);
    CHECK(late.kind == DichotomyResult::Kind::MonotoneRun);
    CHECK(late.run_start == 4);
}

TEST_CASE("dichotomy: alternating extrema when no run exists") {
    const std::vector<int> seq{9, 1, 8, 2, 7, 3, 6, 4};
    const auto result = check_sequence_dichotomy(seq, 3, 3);
    REQUIRE(result.kind == DichotomyResult::Kind::AlternatingExtrema);
    REQUIRE(result.extrema.size() == 3);
    // First reported extremum is a local maximum.
    CHECK(result.extrema == std::vector<std::size_t>{3, 4, 5});
}

TEST_CASE("dichotomy: short sequences may be NotGuaranteed") {
    const std::vector<int> seq{1, 5, 2};
    const auto result = check_sequence_dichotomy(seq, 3, 2);
    CHECK(result.kind == DichotomyResult::Kind::NotGuaranteed);
    const std::vector<int> bad{1, 1, 2};
    CHECK_THROWS_AS(check_sequence_dichotomy(bad, 3, 2), DomainError);
}

TEST_CASE("dichotomy: guaranteed at length 2kn-1 on random sequences") {
    SplitMix64 rng(77);
    for (auto [k, n] : std::vector<std::pair<int, int>>{{6, 3}, {7, 3}}) {
        const std::size_t length = static_cast<std::size_t>(2 * k * n - 1);
        for (int trial = 0; trial < 500; ++trial) {
            std::vector<int> seq{0};
            while (seq.size() < length) {
                const int step = 1 + static_cast<int>(rng.next_below(9));
                seq.push_back(seq.back() + (rng.next_below(2) ? step : -step));
            }
            const auto result = check_sequence_dichotomy(seq, n, k);
            CHECK(result.kind != DichotomyResult::Kind::NotGuaranteed);
        }
    }
}

TEST_CASE("check_stepping_conclusion: all-blue base passes the red side") {
    auto phi = BaseTwoColoring::constant(5, 5, Color::Blue);
    // n=6 keeps the base precondition satisfiable on 5 vertices.
    const auto check =
        check_stepping_conclusion(phi, 6, 4, 6, 5, StepVariant::Standard, {2});
    CHECK(check.status == SteppingCheck::Status::Pass);
    CHECK(check.blue_side_vacuous);
    CHECK(check.blue_target == 2 * 6 * 6);
}

TEST_CASE("check_stepping_conclusion: all-red base is a vacuous precondition") {
    // N=6 so the base actually contains 6-sets; the precondition check
    // runs before any universe-size guard.
    auto phi = BaseTwoColoring::constant(6, 5, Color::Red);
    const auto check =
        check_stepping_conclusion(phi, 6, 4, 7, 6, StepVariant::Standard, {2});
    CHECK(check.status == SteppingCheck::Status::VacuousPrecondition);
    REQUIRE(check.witness.has_value());
    CHECK(check.witness->kind == ConfigurationWitness::Kind::RedHeavySet);

    // All-blue base with n <= N trips the blue precondition instead.
    auto blue = BaseTwoColoring::constant(6, 5, Color::Blue);
    const auto bluecheck =
        check_stepping_conclusion(blue, 6, 4, 6, 6, StepVariant::Standard, {2});
    CHECK(bluecheck.status == SteppingCheck::Status::VacuousPrecondition);
    REQUIRE(bluecheck.witness.has_value());
    CHECK(bluecheck.witness->kind == ConfigurationWitness::Kind::BlueClique);
}

TEST_CASE("check_stepping_conclusion: strong variant at k=7") {
    auto phi = BaseTwoColoring::constant(5, 6, Color::Blue);
    const auto check = check_stepping_conclusion(phi, 7, 4, 6, 5, StepVariant::Strong, {2});
    CHECK(check.status == SteppingCheck::Status::Pass);
    CHECK(check.blue_side_vacuous);
    CHECK(check.blue_target == 4 * 36);
    // The standard rule is refused for t=4 with odd k.
    CHECK_THROWS_AS(
        check_stepping_conclusion(phi, 7, 4, 6, 5, StepVariant::Standard, {2}),
        UsageError);
}

TEST_CASE("explore_all_painters: clean small trees with exact node counts") {
    const auto tiny = explore_all_painters(GameConfig{3, 2, 0}, 1000000);
    CHECK(tiny.nodes == 2);
    CHECK(tiny.leaves == 3);
    CHECK(!tiny.budget_exhausted);
    CHECK(tiny.violations.empty());
    CHECK(tiny.max_stats.vertices == 3);

    const auto mid = explore_all_painters(GameConfig{3, 4, 0}, 1000000);
    CHECK(mid.leaves == mid.nodes + 1);
    CHECK(mid.violations.empty());
    CHECK(ResourceLimits::for_game(3, 4).vertices >= mid.max_stats.vertices);
}

TEST_CASE("explore_all_painters: budget exhaustion is reported, not fatal") {
    const auto report = explore_all_painters(GameConfig{3, 6, 0}, 100);
    CHECK(report.budget_exhausted);
    CHECK(report.violations.empty());
}
