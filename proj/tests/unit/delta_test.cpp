#include <doctest.h>

#include <algorithm>
#include <vector>

#include "ramsey/combinatorics.hpp"
#include "ramsey/delta.hpp"
#include "ramsey/rng.hpp"

using namespace ramsey;

TEST_CASE("bit vertex parsing, rendering, ordering") {
    const auto a = BitVertex::from_string("10110");
    const auto b = BitVertex::from_string("10011");
    CHECK(a.to_string() == "10110");
    CHECK(a.bit(1) == 1);
    CHECK(a.bit(2) == 0);
    CHECK(a.value() == 22);
    CHECK(bit_compare(a, b) == std::strong_ordering::greater);
    CHECK(bit_compare(a, a) == std::strong_ordering::equal);
    CHECK(bit_compare(BitVertex::from_string("01"), BitVertex::from_string("10")) ==
          std::strong_ordering::less);
    CHECK_THROWS_AS(bit_compare(a, BitVertex::from_string("101")), DomainError);
}

TEST_CASE("delta is the least differing index") {
    const auto a = BitVertex::from_string("10110");
    const auto b = BitVertex::from_string("10011");
    CHECK(delta(a, b) == 3);
    CHECK(delta(BitVertex::from_string("0110"), BitVertex::from_string("1110")) == 1);
    CHECK_THROWS_AS(delta(a, a), DomainError);
    CHECK_THROWS_AS(delta(a, BitVertex::from_string("1")), DomainError);
}

TEST_CASE("delta sequence of a sorted tuple") {
    const std::vector<BitVertex> tuple{BitVertex::from_string("00"),
                                       BitVertex::from_string("01"),
                                       BitVertex::from_string("10")};
    CHECK(delta_sequence(tuple) == std::vector<int>{2, 1});

    const std::vector<BitVertex> pair{BitVertex::from_string("000"),
                                      BitVertex::from_string("100")};
    CHECK(delta_sequence(pair) == std::vector<int>{1});

    const std::vector<BitVertex> unsorted{BitVertex::from_string("01"),
                                          BitVertex::from_string("00")};
    CHECK_THROWS_AS(delta_sequence(unsorted), DomainError);
    const std::vector<BitVertex> dup{BitVertex::from_string("01"),
                                     BitVertex::from_string("01")};
    CHECK_THROWS_AS(delta_sequence(dup), DomainError);
}

TEST_CASE("classify: spec shapes") {
    CHECK(classify(std::vector<int>{5, 2, 4, 1, 3}, 6) == DeltaClass::Zigzag);
    CHECK(classify(std::vector<int>{7, 1, 6, 3, 5, 2}, 7) == DeltaClass::StrongZigzag);
    CHECK(classify(std::vector<int>{7, 1, 6, 2, 5, 3}, 7) == DeltaClass::Zigzag);
    CHECK(classify(std::vector<int>{1, 2, 3, 4, 5}, 6) == DeltaClass::Increasing);
    CHECK(classify(std::vector<int>{5, 4, 3, 2, 1}, 6) == DeltaClass::Decreasing);
    // Monotone wins over the truncated zigzag shape at k=3.
    CHECK(classify(std::vector<int>{2, 1}, 3) == DeltaClass::Decreasing);
    CHECK(classify(std::vector<int>{1, 2}, 3) == DeltaClass::Increasing);
    // Wrong-direction alternation is not zigzag.
    CHECK(classify(std::vector<int>{1, 3, 2, 4, 3}, 6) == DeltaClass::Other);
    CHECK(classify(std::vector<int>{3, 1, 2}, 4) == DeltaClass::Zigzag);
    CHECK(classify(std::vector<int>{1, 3, 2}, 4) == DeltaClass::Other);
    CHECK_THROWS_AS(classify(std::vector<int>{1, 1, 2}, 4), DomainError);
    CHECK_THROWS_AS(classify(std::vector<int>{1, 2, 3}, 6), DomainError);
}

namespace {

std::vector<std::uint64_t> random_sorted_tuple(SplitMix64& rng, int n_bits, int size) {
    std::vector<std::uint64_t> tuple;
    while (static_cast<int>(tuple.size()) < size) {
        const auto v = rng.next_below(std::uint64_t{1} << n_bits);
        if (std::find(tuple.begin(), tuple.end(), v) == tuple.end()) tuple.push_back(v);
    }
    std::sort(tuple.begin(), tuple.end());
    return tuple;
}

}  // namespace

TEST_CASE("property A exhaustively at N <= 4") {
    for (int n_bits = 1; n_bits <= 4; ++n_bits) {
        const std::uint64_t size = std::uint64_t{1} << n_bits;
        for (std::uint64_t a = 0; a < size; ++a)
            for (std::uint64_t b = a + 1; b < size; ++b)
                for (std::uint64_t c = b + 1; c < size; ++c)
                    CHECK(delta_token(a, b, n_bits) != delta_token(b, c, n_bits));
    }
}

TEST_CASE("property B exhaustively at N = 4, tuples up to size 6") {
    const int n_bits = 4;
    for (int size = 2; size <= 6; ++size) {
        // All sorted `size`-tuples of {0..15} via an index odometer.
        std::vector<std::uint64_t> tuple(static_cast<std::size_t>(size));
        std::vector<int> idx(static_cast<std::size_t>(size));
        for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i;
        while (true) {
            for (int i = 0; i < size; ++i)
                tuple[static_cast<std::size_t>(i)] =
                    static_cast<std::uint64_t>(idx[static_cast<std::size_t>(i)]);
            const auto deltas = delta_sequence_tokens(tuple, n_bits);
            CHECK(delta_token(tuple.front(), tuple.back(), n_bits) ==
                  *std::min_element(deltas.begin(), deltas.end()));
            int pos = size - 1;
            while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == 16 - size + pos) --pos;
            if (pos < 0) break;
            ++idx[static_cast<std::size_t>(pos)];
            for (int j = pos + 1; j < size; ++j)
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
}

TEST_CASE("properties A, B and the Fact on random tuples at N = 16") {
    SplitMix64 rng(2024);
    for (int trial = 0; trial < 2000; ++trial) {
        const int size = 3 + static_cast<int>(rng.next_below(4));
        const auto tuple = random_sorted_tuple(rng, 16, size);
        const auto deltas = delta_sequence_tokens(tuple, 16);
        // B on the full interval and A on adjacent pairs.
        CHECK(delta_token(tuple.front(), tuple.back(), 16) ==
              *std::min_element(deltas.begin(), deltas.end()));
        for (std::size_t i = 0; i + 1 < deltas.size(); ++i) CHECK(deltas[i] != deltas[i + 1]);
        // The Fact: d_i != d_{i+2} whenever d_{i+1} > d_i.
        for (std::size_t i = 0; i + 2 < deltas.size(); ++i)
            if (deltas[i + 1] > deltas[i]) CHECK(deltas[i] != deltas[i + 2]);
    }
}

TEST_CASE("property B on every sub-interval of random sorted 6-sets in bit-length 5") {
    SplitMix64 rng(99);
    for (int trial = 0; trial < 500; ++trial) {
        const auto tuple = random_sorted_tuple(rng, 5, 6);
        const auto deltas = delta_sequence_tokens(tuple, 5);
        for (std::size_t lo = 0; lo < tuple.size(); ++lo)
            for (std::size_t hi = lo + 1; hi < tuple.size(); ++hi) {
                const int direct = delta_token(tuple[lo], tuple[hi], 5);
                const int expected =
                    *std::min_element(deltas.begin() + static_cast<std::ptrdiff_t>(lo),
                                      deltas.begin() + static_cast<std::ptrdiff_t>(hi));
                CHECK(direct == expected);
            }
    }
}

TEST_CASE("no monotone/zigzag deletion pair in small universes (k=6)") {
    // Two 6-sets sharing 5 vertices are deletions of a common 7-set; a
    // monotone one and a zigzag-shaped one never coexist.
    for (int n_bits : {3, 4}) {
        const std::uint64_t size = std::uint64_t{1} << n_bits;
        KSubsetStream stream(size, 7);
        std::vector<std::size_t> S(7);
        int deltas[5];
        while (stream.next(S)) {
            bool has_monotone = false, has_zigzag = false;
            for (int skip = 0; skip < 7; ++skip) {
                int w = 0;
                std::size_t prev = SIZE_MAX;
                for (int i = 0; i < 7; ++i) {
                    if (i == skip) continue;
                    if (prev != SIZE_MAX)
                        deltas[w++] = delta_token(prev, S[static_cast<std::size_t>(i)], n_bits);
                    prev = S[static_cast<std::size_t>(i)];
                }
                const auto cls = classify(std::span<const int>(deltas, 5), 6);
                if (is_monotone(cls)) has_monotone = true;
                if (is_zigzag_shaped(cls)) has_zigzag = true;
            }
            CHECK(!(has_monotone && has_zigzag));
        }
    }
}

TEST_CASE("increasing 7-sets: deletion deltas drop exactly the merged step (N=3,4)") {
    for (int n_bits : {3, 4}) {
        const std::uint64_t size = std::uint64_t{1} << n_bits;
        KSubsetStream stream(size, 7);
        std::vector<std::size_t> S(7);
        while (stream.next(S)) {
            int deltas[6];
            for (int i = 0; i < 6; ++i)
                deltas[i] = delta_token(S[static_cast<std::size_t>(i)],
                                        S[static_cast<std::size_t>(i + 1)], n_bits);
            bool increasing = true;
            for (int i = 0; i + 1 < 6; ++i) increasing = increasing && deltas[i] < deltas[i + 1];
            if (!increasing) continue;

            std::vector<int> got, expected;
            for (int skip = 0; skip < 6; ++skip) {
                got.clear();
                std::size_t prev = SIZE_MAX;
                for (int i = 0; i < 7; ++i) {
                    if (i == skip) continue;
                    if (prev != SIZE_MAX)
                        got.push_back(delta_token(prev, S[static_cast<std::size_t>(i)], n_bits));
                    prev = S[static_cast<std::size_t>(i)];
                }
                expected.clear();
                for (int i = 0; i < 6; ++i)
                    if (i != skip) expected.push_back(deltas[i]);
                CHECK(got == expected);
            }
            // Removing the last vertex or the one before it leaves the
            // same delta sequence.
            got.clear();
            std::size_t prev = SIZE_MAX;
            for (int i = 0; i < 6; ++i) {
                if (prev != SIZE_MAX)
                    got.push_back(delta_token(prev, S[static_cast<std::size_t>(i)], n_bits));
                prev = S[static_cast<std::size_t>(i)];
            }
            CHECK(got == std::vector<int>(deltas, deltas + 5));
        }
    }
}

TEST_CASE("make_profile ties the pieces together") {
    const std::vector<BitVertex> tuple{
        BitVertex::from_string("000"), BitVertex::from_string("001"),
        BitVertex::from_string("010"), BitVertex::from_string("100")};
    const auto profile = make_profile(tuple);
    CHECK(profile.deltas == std::vector<int>{3, 2, 1});
    CHECK(profile.cls == DeltaClass::Decreasing);
    CHECK(to_string(profile.cls) == "decreasing");
}
