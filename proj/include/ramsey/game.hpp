#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ramsey/core.hpp"

namespace ramsey {

// On-line ordered game on (k-1)-uniform edges: the builder exposes
// vertices 1, 2, ... and proposes edges S + {v} with S a (k-2)-subset of
// the blue set T, in colex order; the painter must answer each proposal
// immediately. The builder chases a red fork (two red edges sharing their
// first k-2 vertices) or a blue clique of size n inside T.

struct GameConfig {
    int k = 3;                  // edges are (k-1)-sets
    int n = 2;                  // blue clique target
    std::uint64_t budget = 0;   // max vertices; 0 = 4(C(n,k-2)+1)+k
};

struct GameStats {
    std::uint64_t vertices = 0;     // s
    std::uint64_t red_edges = 0;    // r
    std::uint64_t total_edges = 0;  // m
};

struct ResourceLimits {
    std::uint64_t vertices;       // 2(C(n,k-2)+1)+(k-2)
    std::uint64_t red_edges;      // C(n,k-2)+1
    std::uint64_t edges_per_vertex;  // C(n,k-2)+1; m <= s * this

    static ResourceLimits for_game(int k, int n);
    bool within(const GameStats& stats) const;
};

struct GameState {
    int k = 0;
    int n = 0;
    std::vector<std::string> labels;          // labels[v-1], over {R, B}
    std::vector<Vertex> T;                    // ascending
    std::map<std::vector<Vertex>, Color> drawn;
    GameStats stats;

    bool in_T(Vertex v) const;
    int seed_count() const { return k - 2; }
};

// (vertex, label) snapshot in exposure order.
std::vector<std::pair<Vertex, std::string>> label_table(const GameState& state);

// -1/0/+1 colex comparison of equal-size sorted vertex tuples.
int colex_compare_vertices(std::span<const Vertex> a, std::span<const Vertex> b);

// The five per-stage invariants of the builder strategy plus bookkeeping
// consistency; returns human-readable violations (empty = all hold).
//   1. a label has no R exactly for members of T;
//   2. every exposed non-seed vertex outside T has label B...BR;
//   3. no two labels carry R at the same position;
//   4. labels are pairwise distinct (seed vertices share the empty label
//      and are exempt);
//   5. no label has more than C(n, k-2) B's.
std::vector<std::string> check_observations(const GameState& state);

struct GameOutcome {
    ConfigurationWitness witness;   // RedFork or BlueClique
    GameStats stats;
    std::vector<std::string> transcript;
};

// The deterministic builder as an explicit state machine. The cycle is:
// at a stage boundary, advance() exposes the next vertex; then
// proposed_edge() awaits a color and apply() consumes it, until the stage
// resolves (back to a boundary) or the game finishes. Copyable, so
// adversarial painters can search over futures.
class Simulator {
public:
    explicit Simulator(const GameConfig& config);

    bool finished() const { return outcome_.has_value(); }

    // True between stages (also right after construction and when the
    // game is over): the invariant hook point.
    bool at_stage_boundary() const { return stage_boundary_; }

    // Exposes the next vertex and starts its stage. Throws
    // ContractViolation when the vertex budget is exhausted.
    void advance();

    const std::vector<Vertex>& proposed_edge() const;
    void apply(Color reply);

    // apply + advance through the following boundary, for search code
    // that doesn't observe intermediate states.
    void step(Color reply);

    const GameState& state() const { return state_; }
    const GameOutcome& outcome() const;
    const std::vector<std::string>& transcript() const { return transcript_; }

private:
    void expose_next();
    void begin_stage();
    void finish_red_fork(Vertex other);
    void finish_blue_clique();
    void emit(std::string line) { transcript_.push_back(std::move(line)); }

    GameConfig config_;
    GameState state_;
    std::vector<std::string> transcript_;
    std::optional<GameOutcome> outcome_;
    bool stage_boundary_ = false;

    Vertex current_ = 0;                      // vertex whose stage is running
    std::vector<Vertex> stage_T_;             // T frozen at stage start
    std::vector<std::size_t> stage_pick_;     // current (k-2)-subset of stage_T_
    std::uint64_t stage_rank_ = 0;            // 1-based label position
    std::uint64_t stage_total_ = 0;
    std::vector<Vertex> proposed_;
    std::map<std::uint64_t, Vertex> red_at_position_;
};

class Painter {
public:
    virtual ~Painter() = default;
    virtual Color respond(const GameState& state, std::span<const Vertex> edge) = 0;
    virtual std::string name() const = 0;
};

// Factory for the CLI painter spec: "red", "blue", "random:SEED",
// "minimax:DEPTH".
std::unique_ptr<Painter> make_painter(const std::string& spec, const GameConfig& config);

// Painter that replays the DRAW lines of a recorded transcript.
std::unique_ptr<Painter> make_transcript_painter(const std::vector<std::string>& transcript);

using StageHook = std::function<void(const GameState&)>;

// Plays a full game; throws ContractViolation if the vertex budget runs
// out before an outcome (the strategy's guarantees make that a bug, not a
// normal result).
GameOutcome run_game(const GameConfig& config, Painter& painter,
                     const StageHook& on_stage = {});

}  // namespace ramsey
