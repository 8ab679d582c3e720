#include "ramsey/combinatorics.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace ramsey {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        const std::uint64_t num = n - k + i;
        // result * num / i is integral at every step; detect overflow first.
        if (result > kBinomialSaturated / num) return kBinomialSaturated;
        result = result * num / i;
    }
    return result;
}

std::uint64_t colex_rank(std::span<const std::size_t> sorted) {
    std::uint64_t rank = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i)
        rank += binomial(sorted[i], i + 1);
    return rank;
}

void colex_unrank(std::uint64_t rank, std::size_t domain_size, int k,
                  std::span<std::size_t> out) {
    if (static_cast<std::size_t>(k) != out.size())
        throw DomainError("colex_unrank: output span size must equal k");
    std::size_t hi = domain_size;
    for (int i = k; i >= 1; --i) {
        // Largest s with C(s, i) <= rank; linear scan down is fine at the
        // sizes this library handles (domain <= 64).
        std::size_t s = hi;
        while (s > 0 && binomial(s, i) > rank) --s;
        if (binomial(s, i) > rank)
            throw DomainError("colex_unrank: rank out of range");
        out[i - 1] = s;
        rank -= binomial(s, i);
        hi = s;
    }
}

int colex_compare(std::span<const std::size_t> a, std::span<const std::size_t> b) {
    if (a.size() != b.size())
        throw DomainError("colex_compare: size mismatch");
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

KSubsetStream::KSubsetStream(std::size_t domain_size, int k)
    : domain_size_(domain_size), k_(k), total_(0) {
    if (k < 0) throw DomainError("KSubsetStream: k must be >= 0");
    total_ = binomial(domain_size, static_cast<std::uint64_t>(k));
    if (total_ == kBinomialSaturated)
        throw CapacityError("KSubsetStream: C(domain_size, k) exceeds 64-bit range");
    indices_.resize(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) indices_[static_cast<std::size_t>(i)] = static_cast<std::size_t>(i);
}

bool KSubsetStream::next(std::span<std::size_t> out) {
    if (emitted_ >= total_) return false;
    if (out.size() != indices_.size())
        throw DomainError("KSubsetStream: output span size must equal k");
    std::copy(indices_.begin(), indices_.end(), out.begin());
    ++emitted_;
    if (emitted_ >= total_) return true;
    // Colex successor: bump the lowest index with room, reset those below.
    for (std::size_t i = 0; i < indices_.size(); ++i) {
        const std::size_t limit =
            (i + 1 < indices_.size()) ? indices_[i + 1] : domain_size_;
        if (indices_[i] + 1 < limit) {
            ++indices_[i];
            for (std::size_t j = 0; j < i; ++j) indices_[j] = j;
            break;
        }
    }
    return true;
}

void KSubsetStream::seek(std::uint64_t rank) {
    if (rank > total_) throw DomainError("KSubsetStream: seek past end");
    emitted_ = rank;
    if (rank < total_)
        colex_unrank(rank, domain_size_, k_, indices_);
}

std::vector<std::vector<std::uint64_t>> enumerate_k_subsets(std::size_t domain_size, int k) {
    std::vector<std::vector<std::uint64_t>> result;
    if (k < 0) throw DomainError("enumerate_k_subsets: k must be >= 0");
    KSubsetStream stream(domain_size, k);
    std::vector<std::size_t> buf(static_cast<std::size_t>(k));
    while (stream.next(buf)) {
        std::vector<std::uint64_t> subset(buf.size());
        for (std::size_t i = 0; i < buf.size(); ++i) subset[i] = buf[i] + 1;
        result.push_back(std::move(subset));
    }
    return result;
}

namespace {

// Splits [0, total) into one contiguous rank range per worker.
std::vector<std::pair<std::uint64_t, std::uint64_t>> rank_chunks(std::uint64_t total, int jobs) {
    const int workers = std::max(1, jobs);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> chunks;
    const std::uint64_t per = total / static_cast<std::uint64_t>(workers);
    std::uint64_t begin = 0;
    for (int w = 0; w < workers; ++w) {
        std::uint64_t end = (w + 1 == workers) ? total : begin + per;
        chunks.emplace_back(begin, end);
        begin = end;
    }
    return chunks;
}

// Runs one task per chunk on its own thread, propagating the first
// exception rather than terminating.
void run_workers(std::size_t count, const std::function<void(std::size_t)>& task) {
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> threads;
    threads.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        threads.emplace_back([&, i] {
            try {
                task(i);
            } catch (...) {
                const std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace

std::optional<std::vector<std::size_t>> scan_find_first(
    std::size_t domain_size, int k, const ScanOptions& opts,
    const std::function<bool(std::span<const std::size_t>)>& pred) {
    KSubsetStream probe(domain_size, k);
    const std::uint64_t total = probe.total();
    if (total == 0) return std::nullopt;

    std::atomic<std::uint64_t> best_rank{kBinomialSaturated};
    auto chunks = rank_chunks(total, opts.jobs);

    auto worker = [&](std::uint64_t begin, std::uint64_t end) {
        KSubsetStream stream(domain_size, k);
        stream.seek(begin);
        std::vector<std::size_t> buf(static_cast<std::size_t>(k));
        for (std::uint64_t rank = begin; rank < end; ++rank) {
            if (rank >= best_rank.load(std::memory_order_relaxed)) return;
            if (!stream.next(buf)) return;
            if (pred(buf)) {
                std::uint64_t seen = best_rank.load(std::memory_order_relaxed);
                while (rank < seen &&
                       !best_rank.compare_exchange_weak(seen, rank, std::memory_order_relaxed)) {
                }
                return;
            }
        }
    };

    if (chunks.size() == 1) {
        worker(chunks[0].first, chunks[0].second);
    } else {
        run_workers(chunks.size(),
                    [&](std::size_t i) { worker(chunks[i].first, chunks[i].second); });
    }

    const std::uint64_t found = best_rank.load();
    if (found == kBinomialSaturated) return std::nullopt;
    std::vector<std::size_t> result(static_cast<std::size_t>(k));
    colex_unrank(found, domain_size, k, result);
    return result;
}

ScanMaxResult scan_max(std::size_t domain_size, int k, const ScanOptions& opts,
                       const std::function<long long(std::span<const std::size_t>)>& eval) {
    KSubsetStream probe(domain_size, k);
    const std::uint64_t total = probe.total();
    if (total == 0) throw DomainError("scan_max: empty subset stream");

    auto chunks = rank_chunks(total, opts.jobs);
    struct Local {
        long long best = std::numeric_limits<long long>::min();
        std::uint64_t best_rank = kBinomialSaturated;
    };
    std::vector<Local> locals(chunks.size());

    auto worker = [&](std::size_t idx) {
        auto [begin, end] = chunks[idx];
        KSubsetStream stream(domain_size, k);
        stream.seek(begin);
        std::vector<std::size_t> buf(static_cast<std::size_t>(k));
        Local local;
        for (std::uint64_t rank = begin; rank < end; ++rank) {
            if (!stream.next(buf)) break;
            const long long v = eval(buf);
            if (v > local.best) {
                local.best = v;
                local.best_rank = rank;
            }
        }
        locals[idx] = local;
    };

    if (chunks.size() == 1) {
        worker(0);
    } else {
        run_workers(chunks.size(), worker);
    }

    Local best;
    for (const auto& local : locals) {
        if (local.best_rank == kBinomialSaturated) continue;
        if (local.best > best.best ||
            (local.best == best.best && local.best_rank < best.best_rank)) {
            best = local;
        }
    }
    ScanMaxResult result;
    result.max_value = best.best;
    result.argmax.resize(static_cast<std::size_t>(k));
    colex_unrank(best.best_rank, domain_size, k, result.argmax);
    return result;
}

}  // namespace ramsey
