#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "ramsey/core.hpp"

namespace ramsey {

// k-ary coloring of the (k-1)-subsets of [N]: the base layer of the rank
// coloring. Values are 1..k, stored by colex rank of the subset.
class KaryBaseColoring {
public:
    KaryBaseColoring(int N, int k, std::vector<std::uint8_t> values);

    int N() const { return N_; }
    int k() const { return k_; }
    std::size_t table_size() const { return values_.size(); }

    // subset: strictly increasing (k-1)-tuple from [N]; returns 1..k.
    int value(std::span<const Vertex> subset) const;

    void set_value(std::span<const Vertex> subset, int value);  // for mutation tests

    // Red probability of a single k-edge under the rank rule: k^-k.
    static double red_density(int k);

private:
    int N_;
    int k_;
    std::vector<std::uint8_t> values_;
};

// Seeded uniform k-ary base coloring: subsets take values in colex order,
// each drawn from SplitMix64(seed) by rejection sampling.
KaryBaseColoring random_base(int N, int k, std::uint64_t seed);

// Red/blue coloring of the (step_k - 1)-subsets of [N]: the base layer phi
// of the stepping-up colorings.
class BaseTwoColoring {
public:
    BaseTwoColoring(int N, int uniformity, std::vector<Color> values);
    static BaseTwoColoring constant(int N, int uniformity, Color color);

    int N() const { return N_; }
    int uniformity() const { return uniformity_; }
    std::size_t table_size() const { return values_.size(); }

    Color value(std::span<const Vertex> subset) const;
    void set_value(std::span<const Vertex> subset, Color color);

    // Adapter so the generic finders run directly on the base layer.
    std::unique_ptr<ColoringOracle> as_oracle() const;

private:
    int N_;
    int uniformity_;
    std::vector<Color> values_;
};

BaseTwoColoring random_base_two(int N, int uniformity, std::uint64_t seed);

// chi(e) = red iff phi assigns every (k-1)-subset of e the rank of its
// missing vertex. At most two red edges can share k+1 vertices.
Color rank_color(const KaryBaseColoring& phi, std::span<const Vertex> edge);

class RankColoringOracle final : public ColoringOracle {
public:
    explicit RankColoringOracle(KaryBaseColoring phi);
    const KaryBaseColoring& base() const { return phi_; }

private:
    Color eval(std::span<const Vertex> edge) const override;
    KaryBaseColoring phi_;
};

enum class StepVariant { Standard, Strong };

// Which stepping rule a target (k, t) needs: the standard rule except for
// t = 4 with odd k, which requires the strong-zigzag rule.
StepVariant required_step_variant(int k, int t);

// Throws UsageError if the chosen variant cannot serve the (k, t) target.
void check_variant_supports(StepVariant variant, int k, int t);

// chi(e) for e a strictly increasing k-tuple of {0,1}^N tokens:
//   red  iff delta(e) monotone and phi is red on the delta set, or
//            delta(e) zigzag (standard) / strong-zigzag (strong);
//   blue otherwise.
Color step_up_color(const BaseTwoColoring& phi, std::span<const Vertex> edge, int k);
Color step_up_color_strong(const BaseTwoColoring& phi, std::span<const Vertex> edge, int k);

// Lazy oracle over {0,1}^N. The guarantees of the construction hold for
// k >= 6 (standard) and odd k > 6 (strong); smaller k is allowed only with
// allow_unverified, since nothing is promised there.
std::unique_ptr<ColoringOracle> make_stepping_oracle(BaseTwoColoring phi, int k,
                                                     StepVariant variant,
                                                     bool allow_unverified = false);

// Fully materialized coloring of the k-subsets of [N], stored by colex
// rank. Backing store of explicit coloring files and search results.
struct ExplicitColoring {
    int N = 0;
    int k = 0;
    std::vector<Color> colors;  // size C(N, k)

    Color color(std::span<const Vertex> edge) const;
    std::unique_ptr<ColoringOracle> as_oracle() const;
};

ExplicitColoring random_explicit(int N, int k, std::uint64_t seed);

// Materializes any oracle into a table. Refused for bit-vector universes
// with N > 6: the table would span C(2^N, k) edges.
ExplicitColoring materialize(const ColoringOracle& oracle);

// Partial Steiner system: k-blocks of [n] with pairwise intersections of
// at most k-2 points, maximal under colex-greedy insertion.
struct SteinerFamily {
    int n = 0;
    int k = 0;
    std::vector<std::vector<Vertex>> blocks;

    // C(n,k) / (1 + k(n-k)): every maximal family is at least this big.
    std::uint64_t counting_lower_bound() const;
};

SteinerFamily greedy_partial_steiner(int n, int k);

}  // namespace ramsey
