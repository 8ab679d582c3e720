#include "ramsey/delta.hpp"

#include <bit>

namespace ramsey {

BitVertex::BitVertex(int length, std::uint64_t value) : length_(length), value_(value) {
    if (length < 1 || length > 63)
        throw DomainError("BitVertex: length must be in 1..63");
    if (length < 64 && value >> length)
        throw DomainError("BitVertex: value does not fit in the given length");
}

BitVertex BitVertex::from_string(std::string_view bits) {
    if (bits.empty()) throw DomainError("BitVertex: empty bit string");
    std::uint64_t value = 0;
    for (char c : bits) {
        if (c != '0' && c != '1')
            throw DomainError("BitVertex: bit string must contain only 0 and 1");
        value = (value << 1) | static_cast<std::uint64_t>(c - '0');
    }
    return BitVertex(static_cast<int>(bits.size()), value);
}

int BitVertex::bit(int i) const {
    if (i < 1 || i > length_)
        throw DomainError("BitVertex: bit index out of range");
    return static_cast<int>((value_ >> (length_ - i)) & 1u);
}

std::string BitVertex::to_string() const {
    std::string s(static_cast<std::size_t>(length_), '0');
    for (int i = 1; i <= length_; ++i)
        s[static_cast<std::size_t>(i - 1)] = static_cast<char>('0' + bit(i));
    return s;
}

std::strong_ordering bit_compare(const BitVertex& a, const BitVertex& b) {
    if (a.length() != b.length())
        throw DomainError("bit_compare: length mismatch");
    return a.value() <=> b.value();
}

int delta_token(std::uint64_t a, std::uint64_t b, int n_bits) {
    const std::uint64_t x = a ^ b;
    if (x == 0) throw DomainError("delta: undefined for equal vertices");
    const int highest = 63 - std::countl_zero(x);
    return n_bits - highest;
}

int delta(const BitVertex& a, const BitVertex& b) {
    if (a.length() != b.length())
        throw DomainError("delta: length mismatch");
    return delta_token(a.value(), b.value(), a.length());
}

std::vector<int> delta_sequence(std::span<const BitVertex> sorted) {
    if (sorted.size() < 2)
        throw DomainError("delta_sequence: need at least two vertices");
    std::vector<int> deltas;
    deltas.reserve(sorted.size() - 1);
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
        if (!(bit_compare(sorted[i], sorted[i + 1]) == std::strong_ordering::less))
            throw DomainError("delta_sequence: input must be strictly increasing");
        deltas.push_back(delta(sorted[i], sorted[i + 1]));
    }
    return deltas;
}

std::vector<int> delta_sequence_tokens(std::span<const std::uint64_t> sorted, int n_bits) {
    if (sorted.size() < 2)
        throw DomainError("delta_sequence: need at least two vertices");
    std::vector<int> deltas;
    deltas.reserve(sorted.size() - 1);
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
        if (sorted[i] >= sorted[i + 1])
            throw DomainError("delta_sequence: input must be strictly increasing");
        deltas.push_back(delta_token(sorted[i], sorted[i + 1], n_bits));
    }
    return deltas;
}

std::string_view to_string(DeltaClass cls) {
    switch (cls) {
        case DeltaClass::Increasing: return "increasing";
        case DeltaClass::Decreasing: return "decreasing";
        case DeltaClass::Zigzag: return "zigzag";
        case DeltaClass::StrongZigzag: return "strong-zigzag";
        case DeltaClass::Other: return "other";
    }
    return "other";
}

DeltaClass classify(std::span<const int> deltas, int k) {
    if (k < 3) throw DomainError("classify: k must be >= 3");
    if (deltas.size() != static_cast<std::size_t>(k - 1))
        throw DomainError("classify: expected k-1 deltas");
    for (std::size_t i = 0; i + 1 < deltas.size(); ++i)
        if (deltas[i] == deltas[i + 1])
            throw DomainError("classify: adjacent deltas must differ");

    bool increasing = true, decreasing = true;
    for (std::size_t i = 0; i + 1 < deltas.size(); ++i) {
        if (deltas[i] < deltas[i + 1]) decreasing = false;
        else increasing = false;
    }
    if (increasing) return DeltaClass::Increasing;
    if (decreasing) return DeltaClass::Decreasing;

    // d1 > d2 < d3 > d4 < ... : descents at even i (1-based pair index).
    bool alternating = true;
    for (std::size_t i = 0; i + 1 < deltas.size(); ++i) {
        const bool want_descent = (i % 2 == 0);
        if (want_descent ? !(deltas[i] > deltas[i + 1]) : !(deltas[i] < deltas[i + 1])) {
            alternating = false;
            break;
        }
    }
    if (!alternating) return DeltaClass::Other;
    // The strong tail d_{k-1} < d_{k-3} only applies for odd k (where both
    // sit on the local-minimum side of the alternation).
    if (k % 2 == 1 && k >= 5 &&
        deltas[static_cast<std::size_t>(k - 2)] < deltas[static_cast<std::size_t>(k - 4)])
        return DeltaClass::StrongZigzag;
    return DeltaClass::Zigzag;
}

DeltaProfile make_profile(std::span<const BitVertex> sorted) {
    DeltaProfile profile;
    profile.deltas = delta_sequence(sorted);
    profile.cls = classify(profile.deltas, static_cast<int>(sorted.size()));
    return profile;
}

}  // namespace ramsey
