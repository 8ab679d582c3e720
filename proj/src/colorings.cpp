#include "ramsey/colorings.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "ramsey/delta.hpp"
#include "ramsey/rng.hpp"

namespace ramsey {

namespace {

constexpr std::size_t kMaxUniformity = 16;

// Colex rank of a strictly increasing 1-based tuple from [N].
std::uint64_t subset_rank(std::span<const Vertex> subset, int N) {
    std::uint64_t rank = 0;
    Vertex prev = 0;
    for (std::size_t i = 0; i < subset.size(); ++i) {
        const Vertex v = subset[i];
        if (v <= prev || v > static_cast<Vertex>(N))
            throw DomainError("subset must be strictly increasing within [N]");
        prev = v;
        rank += binomial(v - 1, i + 1);
    }
    return rank;
}

}  // namespace

KaryBaseColoring::KaryBaseColoring(int N, int k, std::vector<std::uint8_t> values)
    : N_(N), k_(k), values_(std::move(values)) {
    if (k < 2) throw DomainError("KaryBaseColoring: k must be >= 2");
    if (N < k - 1) throw DomainError("KaryBaseColoring: N must be >= k-1");
    const std::uint64_t expected = binomial(static_cast<std::uint64_t>(N),
                                            static_cast<std::uint64_t>(k - 1));
    if (values_.size() != expected)
        throw DomainError("KaryBaseColoring: table size must be C(N, k-1)");
    for (auto v : values_)
        if (v < 1 || v > k)
            throw DomainError("KaryBaseColoring: values must lie in 1..k");
}

int KaryBaseColoring::value(std::span<const Vertex> subset) const {
    if (subset.size() != static_cast<std::size_t>(k_ - 1))
        throw DomainError("KaryBaseColoring: expected a (k-1)-subset");
    return values_[subset_rank(subset, N_)];
}

void KaryBaseColoring::set_value(std::span<const Vertex> subset, int value) {
    if (subset.size() != static_cast<std::size_t>(k_ - 1))
        throw DomainError("KaryBaseColoring: expected a (k-1)-subset");
    if (value < 1 || value > k_)
        throw DomainError("KaryBaseColoring: value out of range");
    values_[subset_rank(subset, N_)] = static_cast<std::uint8_t>(value);
}

double KaryBaseColoring::red_density(int k) {
    return std::pow(static_cast<double>(k), -static_cast<double>(k));
}

KaryBaseColoring random_base(int N, int k, std::uint64_t seed) {
    if (k < 2) throw DomainError("random_base: k must be >= 2");
    if (N < k - 1) throw DomainError("random_base: N must be >= k-1");
    const std::uint64_t count = binomial(static_cast<std::uint64_t>(N),
                                         static_cast<std::uint64_t>(k - 1));
    SplitMix64 rng(seed);
    std::vector<std::uint8_t> values(count);
    for (auto& v : values)
        v = static_cast<std::uint8_t>(1 + rng.next_below(static_cast<std::uint64_t>(k)));
    return KaryBaseColoring(N, k, std::move(values));
}

BaseTwoColoring::BaseTwoColoring(int N, int uniformity, std::vector<Color> values)
    : N_(N), uniformity_(uniformity), values_(std::move(values)) {
    if (uniformity < 1) throw DomainError("BaseTwoColoring: uniformity must be >= 1");
    if (N < 1) throw DomainError("BaseTwoColoring: N must be >= 1");
    // N < uniformity is legal: the table is empty and the coloring is
    // total on an empty edge set (the regime where stepping never takes
    // the monotone branch).
    const std::uint64_t expected = binomial(static_cast<std::uint64_t>(N),
                                            static_cast<std::uint64_t>(uniformity));
    if (values_.size() != expected)
        throw DomainError("BaseTwoColoring: table size must be C(N, uniformity)");
}

BaseTwoColoring BaseTwoColoring::constant(int N, int uniformity, Color color) {
    const std::uint64_t count = binomial(static_cast<std::uint64_t>(N),
                                         static_cast<std::uint64_t>(uniformity));
    return BaseTwoColoring(N, uniformity, std::vector<Color>(count, color));
}

Color BaseTwoColoring::value(std::span<const Vertex> subset) const {
    if (subset.size() != static_cast<std::size_t>(uniformity_))
        throw DomainError("BaseTwoColoring: subset size mismatch");
    return values_[subset_rank(subset, N_)];
}

void BaseTwoColoring::set_value(std::span<const Vertex> subset, Color color) {
    if (subset.size() != static_cast<std::size_t>(uniformity_))
        throw DomainError("BaseTwoColoring: subset size mismatch");
    values_[subset_rank(subset, N_)] = color;
}

std::unique_ptr<ColoringOracle> BaseTwoColoring::as_oracle() const {
    BaseTwoColoring copy = *this;
    return std::make_unique<LambdaOracle>(
        uniformity_, VertexDomain::integers(N_),
        [phi = std::move(copy)](std::span<const Vertex> edge) { return phi.value(edge); });
}

BaseTwoColoring random_base_two(int N, int uniformity, std::uint64_t seed) {
    const std::uint64_t count = binomial(static_cast<std::uint64_t>(N),
                                         static_cast<std::uint64_t>(uniformity));
    if (count == kBinomialSaturated)
        throw CapacityError("random_base_two: table too large");
    SplitMix64 rng(seed);
    std::vector<Color> values(count);
    for (auto& v : values) v = rng.next_below(2) == 0 ? Color::Red : Color::Blue;
    return BaseTwoColoring(N, uniformity, std::move(values));
}

Color rank_color(const KaryBaseColoring& phi, std::span<const Vertex> edge) {
    const int k = phi.k();
    if (edge.size() != static_cast<std::size_t>(k))
        throw DomainError("rank_color: expected a k-edge");
    if (edge.size() > kMaxUniformity)
        throw CapacityError("rank_color: uniformity above the supported limit");
    Vertex rest[kMaxUniformity];
    for (int i = 1; i <= k; ++i) {
        std::size_t w = 0;
        for (int j = 1; j <= k; ++j)
            if (j != i) rest[w++] = edge[static_cast<std::size_t>(j - 1)];
        if (phi.value(std::span<const Vertex>(rest, static_cast<std::size_t>(k - 1))) != i)
            return Color::Blue;
    }
    return Color::Red;
}

RankColoringOracle::RankColoringOracle(KaryBaseColoring phi)
    : ColoringOracle(phi.k(), VertexDomain::integers(phi.N())), phi_(std::move(phi)) {}

Color RankColoringOracle::eval(std::span<const Vertex> edge) const {
    return rank_color(phi_, edge);
}

StepVariant required_step_variant(int k, int t) {
    if (t == 4 && k % 2 == 1) return StepVariant::Strong;
    return StepVariant::Standard;
}

void check_variant_supports(StepVariant variant, int k, int t) {
    if (t < 4) throw UsageError("stepping-up targets require t >= 4");
    if (variant == StepVariant::Standard && t == 4 && k % 2 == 1)
        throw UsageError(
            "the standard stepping rule does not serve t=4 with odd k; "
            "use the strong-zigzag rule");
}

namespace {

Color step_color_impl(const BaseTwoColoring& phi, std::span<const Vertex> edge, int k,
                      bool strong) {
    if (edge.size() != static_cast<std::size_t>(k))
        throw DomainError("step_up_color: expected a k-edge");
    if (k < 3) throw DomainError("step_up_color: k must be >= 3");
    if (edge.size() > kMaxUniformity)
        throw CapacityError("step_up_color: uniformity above the supported limit");

    const int n_bits = phi.N();
    const Vertex limit = Vertex{1} << n_bits;
    int deltas[kMaxUniformity];
    for (std::size_t i = 0; i < edge.size(); ++i) {
        if (edge[i] >= limit)
            throw DomainError("step_up_color: vertex outside {0,1}^N");
        if (i + 1 < edge.size()) {
            if (edge[i] >= edge[i + 1])
                throw DomainError("step_up_color: edge must be strictly increasing");
            deltas[i] = delta_token(edge[i], edge[i + 1], n_bits);
        }
    }
    const auto span = std::span<const int>(deltas, edge.size() - 1);
    const DeltaClass cls = classify(span, k);

    if (is_monotone(cls)) {
        // Monotone deltas are pairwise distinct, so they form a genuine
        // (k-1)-subset of [N]; phi wants it sorted ascending.
        Vertex sorted[kMaxUniformity];
        if (cls == DeltaClass::Increasing) {
            for (std::size_t i = 0; i < span.size(); ++i)
                sorted[i] = static_cast<Vertex>(span[i]);
        } else {
            for (std::size_t i = 0; i < span.size(); ++i)
                sorted[i] = static_cast<Vertex>(span[span.size() - 1 - i]);
        }
        return phi.value(std::span<const Vertex>(sorted, span.size()));
    }
    if (strong) return cls == DeltaClass::StrongZigzag ? Color::Red : Color::Blue;
    return is_zigzag_shaped(cls) ? Color::Red : Color::Blue;
}

class SteppingOracle final : public ColoringOracle {
public:
    SteppingOracle(BaseTwoColoring phi, int k, StepVariant variant)
        : ColoringOracle(k, VertexDomain::bit_vectors(phi.N())),
          phi_(std::move(phi)),
          strong_(variant == StepVariant::Strong) {}

private:
    Color eval(std::span<const Vertex> edge) const override {
        return step_color_impl(phi_, edge, uniformity(), strong_);
    }
    BaseTwoColoring phi_;
    bool strong_;
};

}  // namespace

Color step_up_color(const BaseTwoColoring& phi, std::span<const Vertex> edge, int k) {
    return step_color_impl(phi, edge, k, false);
}

Color step_up_color_strong(const BaseTwoColoring& phi, std::span<const Vertex> edge, int k) {
    return step_color_impl(phi, edge, k, true);
}

std::unique_ptr<ColoringOracle> make_stepping_oracle(BaseTwoColoring phi, int k,
                                                     StepVariant variant,
                                                     bool allow_unverified) {
    if (k < 3) throw DomainError("make_stepping_oracle: k must be >= 3");
    if (phi.uniformity() != k - 1)
        throw DomainError("make_stepping_oracle: phi must color (k-1)-subsets");
    if (!allow_unverified) {
        if (variant == StepVariant::Standard && k < 6)
            throw UsageError(
                "the stepping construction is unverified for k < 6; pass "
                "allow_unverified to experiment anyway");
        if (variant == StepVariant::Strong && !(k > 6 && k % 2 == 1))
            throw UsageError(
                "the strong stepping construction is unverified unless k is "
                "odd and > 6; pass allow_unverified to experiment anyway");
    }
    return std::make_unique<SteppingOracle>(std::move(phi), k, variant);
}

Color ExplicitColoring::color(std::span<const Vertex> edge) const {
    if (edge.size() != static_cast<std::size_t>(k))
        throw DomainError("ExplicitColoring: edge size mismatch");
    return colors[subset_rank(edge, N)];
}

std::unique_ptr<ColoringOracle> ExplicitColoring::as_oracle() const {
    ExplicitColoring copy = *this;
    return std::make_unique<LambdaOracle>(
        k, VertexDomain::integers(N),
        [table = std::move(copy)](std::span<const Vertex> edge) { return table.color(edge); });
}

ExplicitColoring random_explicit(int N, int k, std::uint64_t seed) {
    if (k < 1 || N < k) throw DomainError("random_explicit: need N >= k >= 1");
    ExplicitColoring table;
    table.N = N;
    table.k = k;
    const std::uint64_t count = binomial(static_cast<std::uint64_t>(N),
                                         static_cast<std::uint64_t>(k));
    SplitMix64 rng(seed);
    table.colors.resize(count);
    for (auto& c : table.colors) c = rng.next_below(2) == 0 ? Color::Red : Color::Blue;
    return table;
}

ExplicitColoring materialize(const ColoringOracle& oracle) {
    const auto& domain = oracle.domain();
    if (domain.kind == VertexDomain::Kind::BitVectors && domain.n > 6)
        throw CapacityError(
            "materialize: explicit tables over {0,1}^N are refused for N > 6");
    const auto vertices = domain.vertices();
    const int k = oracle.uniformity();

    ExplicitColoring table;
    table.N = static_cast<int>(vertices.size());
    table.k = k;
    KSubsetStream stream(vertices.size(), k);
    table.colors.reserve(stream.total());
    std::vector<std::size_t> pick(static_cast<std::size_t>(k));
    std::vector<Vertex> edge(static_cast<std::size_t>(k));
    while (stream.next(pick)) {
        for (int i = 0; i < k; ++i)
            edge[static_cast<std::size_t>(i)] = vertices[pick[static_cast<std::size_t>(i)]];
        table.colors.push_back(oracle.color(edge));
    }
    return table;
}

std::uint64_t SteinerFamily::counting_lower_bound() const {
    const std::uint64_t total = binomial(static_cast<std::uint64_t>(n),
                                         static_cast<std::uint64_t>(k));
    const std::uint64_t dominated =
        1 + static_cast<std::uint64_t>(k) * static_cast<std::uint64_t>(n - k);
    return (total + dominated - 1) / dominated;
}

SteinerFamily greedy_partial_steiner(int n, int k) {
    if (k < 2 || n < k) throw DomainError("greedy_partial_steiner: need n >= k >= 2");
    if (n > 64) throw CapacityError("greedy_partial_steiner: n above bitmask limit");

    SteinerFamily family;
    family.n = n;
    family.k = k;
    std::vector<std::uint64_t> masks;

    KSubsetStream stream(static_cast<std::size_t>(n), k);
    std::vector<std::size_t> pick(static_cast<std::size_t>(k));
    while (stream.next(pick)) {
        std::uint64_t mask = 0;
        for (auto i : pick) mask |= std::uint64_t{1} << i;
        bool compatible = true;
        for (auto existing : masks) {
            if (std::popcount(existing & mask) > k - 2) {
                compatible = false;
                break;
            }
        }
        if (!compatible) continue;
        masks.push_back(mask);
        std::vector<Vertex> block(pick.size());
        for (std::size_t i = 0; i < pick.size(); ++i) block[i] = pick[i] + 1;
        family.blocks.push_back(std::move(block));
    }
    return family;
}

}  // namespace ramsey
