#include "ramsey/core.hpp"

#include <algorithm>

#include "ramsey/delta.hpp"

namespace ramsey {

std::size_t VertexDomain::size() const {
    if (kind == Kind::Integers) return static_cast<std::size_t>(n);
    return std::size_t{1} << n;
}

std::vector<Vertex> VertexDomain::vertices() const {
    if (size() > (std::size_t{1} << 22))
        throw CapacityError("VertexDomain: refusing to materialize a universe this large");
    std::vector<Vertex> out;
    out.reserve(size());
    if (kind == Kind::Integers) {
        for (int v = 1; v <= n; ++v) out.push_back(static_cast<Vertex>(v));
    } else {
        for (Vertex v = 0; v < (Vertex{1} << n); ++v) out.push_back(v);
    }
    return out;
}

std::string VertexDomain::render(Vertex v) const {
    if (kind == Kind::Integers) return std::to_string(v);
    return BitVertex(n, v).to_string();
}

bool VertexDomain::contains(Vertex v) const {
    if (kind == Kind::Integers) return v >= 1 && v <= static_cast<Vertex>(n);
    return v < (Vertex{1} << n);
}

ColoringOracle::ColoringOracle(int k, VertexDomain domain)
    : k_(k), domain_(domain) {
    if (k < 1) throw DomainError("ColoringOracle: uniformity must be >= 1");
    if (domain.kind == VertexDomain::Kind::BitVectors && (domain.n < 1 || domain.n > 62))
        throw DomainError("ColoringOracle: bit-vector universe length out of range");
}

Color ColoringOracle::color(std::span<const Vertex> edge) const {
    if (edge.size() != static_cast<std::size_t>(k_))
        throw DomainError("ColoringOracle: edge size must equal the uniformity");
    for (std::size_t i = 0; i + 1 < edge.size(); ++i)
        if (edge[i] >= edge[i + 1])
            throw DomainError("ColoringOracle: edge must be strictly increasing");
    return eval(edge);
}

std::string_view to_string(ConfigurationWitness::Kind kind) {
    using Kind = ConfigurationWitness::Kind;
    switch (kind) {
        case Kind::BlueClique: return "BlueClique";
        case Kind::RedHeavySet: return "RedHeavySet";
        case Kind::RedFork: return "RedFork";
        case Kind::RedAnchored: return "RedAnchored";
    }
    return "?";
}

namespace {

constexpr std::size_t kMaxUniformity = 16;

// Gathers domain[indices[i]] into a stack buffer.
inline void gather(std::span<const Vertex> domain, std::span<const std::size_t> indices,
                   std::span<Vertex> out) {
    for (std::size_t i = 0; i < indices.size(); ++i) out[i] = domain[indices[i]];
}

// Red edges inside the (k+1)-tuple `S`, stopping early once `stop_at` is
// reached. Returns the red edges found (missing vertex index order).
int count_red_in_tuple(const ColoringOracle& oracle, std::span<const Vertex> S,
                       int stop_at, std::vector<std::vector<Vertex>>* red_edges) {
    const std::size_t k = static_cast<std::size_t>(oracle.uniformity());
    Vertex edge[kMaxUniformity];
    int reds = 0;
    for (std::size_t skip = 0; skip < S.size(); ++skip) {
        std::size_t w = 0;
        for (std::size_t i = 0; i < S.size(); ++i)
            if (i != skip) edge[w++] = S[i];
        if (oracle.color(std::span<const Vertex>(edge, k)) == Color::Red) {
            ++reds;
            if (red_edges) red_edges->emplace_back(edge, edge + k);
            if (reds >= stop_at) return reds;
        }
    }
    return reds;
}

}  // namespace

int red_count(const ColoringOracle& oracle, std::span<const Vertex> S) {
    const int k = oracle.uniformity();
    if (S.size() != static_cast<std::size_t>(k + 1))
        throw DomainError("red_count: expected a (k+1)-set");
    if (S.size() > kMaxUniformity)
        throw CapacityError("red_count: uniformity above the supported limit");
    return count_red_in_tuple(oracle, S, k + 2, nullptr);
}

std::optional<ConfigurationWitness> find_blue_clique(
    const ColoringOracle& oracle, int n, std::span<const Vertex> domain,
    const ScanOptions& opts) {
    const int k = oracle.uniformity();
    if (n < k) throw DomainError("find_blue_clique: clique size must be >= uniformity");
    if (n > 64) throw CapacityError("find_blue_clique: clique size above the supported limit");
    if (static_cast<std::size_t>(k) > kMaxUniformity)
        throw CapacityError("find_blue_clique: uniformity above the supported limit");

    auto all_blue = [&](std::span<const std::size_t> indices) {
        Vertex clique[64];
        gather(domain, indices, std::span<Vertex>(clique, indices.size()));
        KSubsetStream edges(indices.size(), k);
        std::size_t pick[kMaxUniformity];
        Vertex edge[kMaxUniformity];
        while (edges.next(std::span<std::size_t>(pick, static_cast<std::size_t>(k)))) {
            for (int i = 0; i < k; ++i) edge[i] = clique[pick[i]];
            if (oracle.color(std::span<const Vertex>(edge, static_cast<std::size_t>(k))) ==
                Color::Red)
                return false;
        }
        return true;
    };

    auto found = scan_find_first(domain.size(), n, opts, all_blue);
    if (!found) return std::nullopt;
    ConfigurationWitness witness;
    witness.kind = ConfigurationWitness::Kind::BlueClique;
    witness.vertices.resize(found->size());
    gather(domain, *found, witness.vertices);
    return witness;
}

std::optional<ConfigurationWitness> find_red_heavy_set(
    const ColoringOracle& oracle, int t, std::span<const Vertex> domain,
    const ScanOptions& opts) {
    const int k = oracle.uniformity();
    if (t < 2 || t > k + 1)
        throw DomainError("find_red_heavy_set: t must be in 2..k+1");
    if (static_cast<std::size_t>(k + 1) > kMaxUniformity)
        throw CapacityError("find_red_heavy_set: uniformity above the supported limit");

    auto heavy = [&](std::span<const std::size_t> indices) {
        Vertex tuple[kMaxUniformity];
        gather(domain, indices, std::span<Vertex>(tuple, indices.size()));
        return count_red_in_tuple(oracle, std::span<const Vertex>(tuple, indices.size()), t,
                                  nullptr) >= t;
    };

    auto found = scan_find_first(domain.size(), k + 1, opts, heavy);
    if (!found) return std::nullopt;
    ConfigurationWitness witness;
    witness.kind = ConfigurationWitness::Kind::RedHeavySet;
    witness.vertices.resize(found->size());
    gather(domain, *found, witness.vertices);
    count_red_in_tuple(oracle, witness.vertices, k + 2, &witness.red_edges);
    return witness;
}

std::optional<ConfigurationWitness> find_red_anchored_set(
    const ColoringOracle& oracle, int t, std::span<const Vertex> domain,
    const ScanOptions& opts) {
    const int k = oracle.uniformity();
    if (t < 2 || t > k + 1)
        throw DomainError("find_red_anchored_set: t must be in 2..k+1");
    if (static_cast<std::size_t>(k + 1) > kMaxUniformity)
        throw CapacityError("find_red_anchored_set: uniformity above the supported limit");

    // The anchor edge is the first k of the k+1 ordered vertices, i.e. the
    // tuple minus its last vertex.
    auto anchored = [&](std::span<const std::size_t> indices) {
        Vertex tuple[kMaxUniformity];
        gather(domain, indices, std::span<Vertex>(tuple, indices.size()));
        if (oracle.color(std::span<const Vertex>(tuple, static_cast<std::size_t>(k))) !=
            Color::Red)
            return false;
        return count_red_in_tuple(oracle, std::span<const Vertex>(tuple, indices.size()), t,
                                  nullptr) >= t;
    };

    auto found = scan_find_first(domain.size(), k + 1, opts, anchored);
    if (!found) return std::nullopt;
    ConfigurationWitness witness;
    witness.kind = ConfigurationWitness::Kind::RedAnchored;
    witness.vertices.resize(found->size());
    gather(domain, *found, witness.vertices);
    count_red_in_tuple(oracle, witness.vertices, k + 2, &witness.red_edges);
    return witness;
}

bool verify_witness(const ColoringOracle& oracle, const ConfigurationWitness& witness) {
    using Kind = ConfigurationWitness::Kind;
    const int k = oracle.uniformity();
    switch (witness.kind) {
        case Kind::BlueClique: {
            if (witness.vertices.size() < static_cast<std::size_t>(k)) return true;
            KSubsetStream edges(witness.vertices.size(), k);
            std::vector<std::size_t> pick(static_cast<std::size_t>(k));
            std::vector<Vertex> edge(static_cast<std::size_t>(k));
            while (edges.next(pick)) {
                for (int i = 0; i < k; ++i)
                    edge[static_cast<std::size_t>(i)] = witness.vertices[pick[static_cast<std::size_t>(i)]];
                if (oracle.color(edge) == Color::Red) return false;
            }
            return true;
        }
        case Kind::RedHeavySet:
        case Kind::RedAnchored: {
            if (witness.vertices.size() != static_cast<std::size_t>(k + 1)) return false;
            for (const auto& edge : witness.red_edges) {
                if (oracle.color(edge) != Color::Red) return false;
                if (!std::includes(witness.vertices.begin(), witness.vertices.end(),
                                   edge.begin(), edge.end()))
                    return false;
            }
            if (witness.kind == Kind::RedAnchored) {
                std::vector<Vertex> anchor(witness.vertices.begin(),
                                           witness.vertices.end() - 1);
                if (std::find(witness.red_edges.begin(), witness.red_edges.end(), anchor) ==
                    witness.red_edges.end())
                    return false;
            }
            return true;
        }
        case Kind::RedFork: {
            if (witness.red_edges.size() != 2) return false;
            const auto& e1 = witness.red_edges[0];
            const auto& e2 = witness.red_edges[1];
            if (e1.size() != e2.size() || e1.size() < 1) return false;
            if (e1.back() == e2.back()) return false;
            if (!std::equal(e1.begin(), e1.end() - 1, e2.begin())) return false;
            return oracle.color(e1) == Color::Red && oracle.color(e2) == Color::Red;
        }
    }
    return false;
}

}  // namespace ramsey
