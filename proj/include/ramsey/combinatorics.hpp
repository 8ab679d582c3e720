#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "ramsey/errors.hpp"

namespace ramsey {

inline constexpr std::uint64_t kBinomialSaturated =
    std::numeric_limits<std::uint64_t>::max();

// C(n, k), saturating at kBinomialSaturated instead of overflowing.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// Colex rank of a sorted 0-based index tuple: rank(S) = sum_i C(s_i, i+1).
std::uint64_t colex_rank(std::span<const std::size_t> sorted);

// Inverse of colex_rank for k-subsets of {0, ..., domain_size-1}.
void colex_unrank(std::uint64_t rank, std::size_t domain_size, int k,
                  std::span<std::size_t> out);

// -1 / 0 / +1 comparison of two equal-size sorted tuples in colex order
// (compare at the largest position where they differ).
int colex_compare(std::span<const std::size_t> a, std::span<const std::size_t> b);

// Streams the k-subsets of {0, ..., domain_size-1} in colex order as
// 0-based index tuples. No materialized list: next() advances in place.
class KSubsetStream {
public:
    KSubsetStream(std::size_t domain_size, int k);

    // Returns false when exhausted; otherwise fills out[0..k).
    bool next(std::span<std::size_t> out);

    const std::vector<std::size_t>& current() const { return indices_; }
    std::uint64_t total() const { return total_; }

    // Repositions the stream at the subset of the given colex rank.
    void seek(std::uint64_t rank);

private:
    std::size_t domain_size_;
    int k_;
    std::uint64_t total_;
    std::uint64_t emitted_ = 0;
    std::vector<std::size_t> indices_;
};

// Every k-subset of {1, ..., domain_size} in colex order, materialized.
// Convenience for small enumerations; scans use KSubsetStream.
std::vector<std::vector<std::uint64_t>> enumerate_k_subsets(std::size_t domain_size, int k);

struct ScanOptions {
    int jobs = 1;
};

// Visits every k-subset of {0..domain_size-1} and returns the colex rank
// and indices of the first subset matching `pred`, or nullopt. With
// jobs > 1 the rank space is split into contiguous chunks; workers past a
// found match stop early, and the reported match is the colex minimum, so
// parallel and serial runs agree.
std::optional<std::vector<std::size_t>> scan_find_first(
    std::size_t domain_size, int k, const ScanOptions& opts,
    const std::function<bool(std::span<const std::size_t>)>& pred);

// Fold over all k-subsets: each worker evaluates `eval` per subset and
// keeps a running maximum; the overall maximum (with colex-first argmax)
// is returned. Deterministic regardless of jobs.
struct ScanMaxResult {
    long long max_value;
    std::vector<std::size_t> argmax;  // colex-first subset attaining the max
};
ScanMaxResult scan_max(std::size_t domain_size, int k, const ScanOptions& opts,
                       const std::function<long long(std::span<const std::size_t>)>& eval);

}  // namespace ramsey
