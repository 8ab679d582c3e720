#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ramsey/combinatorics.hpp"
#include "ramsey/errors.hpp"

namespace ramsey {

// Vertices are opaque ordered tokens: 1..N for integer universes, the
// binary value for {0,1}^N universes. Finders only rely on the order, so
// the same code runs over both.
using Vertex = std::uint64_t;

enum class Color : std::uint8_t { Red, Blue };

inline char color_char(Color c) { return c == Color::Red ? 'R' : 'B'; }

// The vertex universe a coloring lives on.
struct VertexDomain {
    enum class Kind { Integers, BitVectors };
    Kind kind = Kind::Integers;
    int n = 0;  // Integers: tokens 1..n; BitVectors: all of {0,1}^n

    std::size_t size() const;
    std::vector<Vertex> vertices() const;  // ascending
    std::string render(Vertex v) const;    // "7" or "00111"
    bool contains(Vertex v) const;

    static VertexDomain integers(int n) { return {Kind::Integers, n}; }
    static VertexDomain bit_vectors(int n) { return {Kind::BitVectors, n}; }
};

// A red/blue coloring of the k-subsets of a vertex domain. eval must be
// pure: same edge, same color, safe to call from several threads at once.
class ColoringOracle {
public:
    virtual ~ColoringOracle() = default;

    int uniformity() const { return k_; }
    const VertexDomain& domain() const { return domain_; }

    // edge must be a strictly increasing k-tuple from the domain.
    Color color(std::span<const Vertex> edge) const;

protected:
    ColoringOracle(int k, VertexDomain domain);
    virtual Color eval(std::span<const Vertex> edge) const = 0;

private:
    int k_;
    VertexDomain domain_;
};

// Oracle defined by a callable; used for ad-hoc colorings in tests and
// for adapters.
class LambdaOracle final : public ColoringOracle {
public:
    using Fn = std::function<Color(std::span<const Vertex>)>;
    LambdaOracle(int k, VertexDomain domain, Fn fn)
        : ColoringOracle(k, domain), fn_(std::move(fn)) {}

private:
    Color eval(std::span<const Vertex> edge) const override { return fn_(edge); }
    Fn fn_;
};

struct ConfigurationWitness {
    enum class Kind {
        BlueClique,   // every k-subset of `vertices` is blue
        RedHeavySet,  // k+1 vertices carrying >= t red edges
        RedFork,      // two (k-1)-edges sharing their first k-2 vertices
        RedAnchored,  // k+1 ordered vertices, t red edges incl. the first k
    };
    Kind kind;
    std::vector<Vertex> vertices;
    std::vector<std::vector<Vertex>> red_edges;  // empty for BlueClique
};

std::string_view to_string(ConfigurationWitness::Kind kind);

// Number of red k-subsets of S, |S| = k+1.
int red_count(const ColoringOracle& oracle, std::span<const Vertex> S);

// Colex-first n-subset of `domain` whose k-subsets are all blue, if any.
std::optional<ConfigurationWitness> find_blue_clique(
    const ColoringOracle& oracle, int n, std::span<const Vertex> domain,
    const ScanOptions& opts = {});

// Colex-first (k+1)-subset of `domain` carrying at least t red edges.
std::optional<ConfigurationWitness> find_red_heavy_set(
    const ColoringOracle& oracle, int t, std::span<const Vertex> domain,
    const ScanOptions& opts = {});

// Colex-first (k+1)-subset with t red edges one of which is the subset's
// first k vertices.
std::optional<ConfigurationWitness> find_red_anchored_set(
    const ColoringOracle& oracle, int t, std::span<const Vertex> domain,
    const ScanOptions& opts = {});

// Re-checks a witness against the oracle; used by tests as a self-check.
bool verify_witness(const ColoringOracle& oracle, const ConfigurationWitness& witness);

}  // namespace ramsey
