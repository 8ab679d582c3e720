#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ramsey/errors.hpp"

namespace ramsey {

// A vertex of the 2^N universe: a length-N binary vector, bit 1 leftmost
// (most significant). Vertices compare by the integer the bits spell.
class BitVertex {
public:
    BitVertex(int length, std::uint64_t value);
    static BitVertex from_string(std::string_view bits);  // e.g. "10110"

    int length() const { return length_; }
    std::uint64_t value() const { return value_; }
    int bit(int i) const;        // 1-based, i=1 is the leftmost bit
    std::string to_string() const;

    friend bool operator==(const BitVertex&, const BitVertex&) = default;

private:
    int length_;
    std::uint64_t value_;
};

// Three-way order of two equal-length vertices: decided at the least index
// where they differ (0 there means smaller). Equivalent to comparing the
// binary values.
std::strong_ordering bit_compare(const BitVertex& a, const BitVertex& b);

// Least 1-based index at which a and b differ. Undefined (DomainError)
// for a == b.
int delta(const BitVertex& a, const BitVertex& b);

// Same on raw token values from a fixed length-n_bits universe; the hot
// path for scans.
int delta_token(std::uint64_t a, std::uint64_t b, int n_bits);

// deltas[i] = delta(S[i], S[i+1]) for a strictly increasing S (m >= 2
// vertices give m-1 deltas).
std::vector<int> delta_sequence(std::span<const BitVertex> sorted);
std::vector<int> delta_sequence_tokens(std::span<const std::uint64_t> sorted, int n_bits);

enum class DeltaClass { Increasing, Decreasing, Zigzag, StrongZigzag, Other };

std::string_view to_string(DeltaClass cls);

// True for the alternating shape, with or without the strong tail.
constexpr bool is_zigzag_shaped(DeltaClass cls) {
    return cls == DeltaClass::Zigzag || cls == DeltaClass::StrongZigzag;
}
constexpr bool is_monotone(DeltaClass cls) {
    return cls == DeltaClass::Increasing || cls == DeltaClass::Decreasing;
}

// Classifies a delta sequence of length k-1 (k >= 3):
//   Increasing / Decreasing  strictly monotone (checked first; a two-term
//                            descent is Decreasing, not Zigzag);
//   Zigzag                   d1 > d2 < d3 > d4 < ...  exact alternation
//                            starting downward (the opposite start is not
//                            a zigzag);
//   StrongZigzag             Zigzag and additionally d_{k-1} < d_{k-3};
//                            the tail test applies only for odd k;
//   Other                    anything else.
// Adjacent equal entries are rejected: genuine delta sequences of sorted
// vertex sets never have them.
DeltaClass classify(std::span<const int> deltas, int k);

struct DeltaProfile {
    std::vector<int> deltas;
    DeltaClass cls;
};

DeltaProfile make_profile(std::span<const BitVertex> sorted);

}  // namespace ramsey
