#include "ramsey/game.hpp"

#include <algorithm>
#include <sstream>

#include "ramsey/rng.hpp"

namespace ramsey {

namespace {

std::uint64_t stage_capacity(int k, int n) {
    return binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k - 2));
}

std::string join_vertices(std::span<const Vertex> vs) {
    std::ostringstream out;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) out << ' ';
        out << vs[i];
    }
    return out.str();
}

}  // namespace

ResourceLimits ResourceLimits::for_game(int k, int n) {
    const std::uint64_t c = stage_capacity(k, n);
    return ResourceLimits{2 * (c + 1) + static_cast<std::uint64_t>(k - 2), c + 1, c + 1};
}

bool ResourceLimits::within(const GameStats& stats) const {
    return stats.vertices <= vertices && stats.red_edges <= red_edges &&
           stats.total_edges <= stats.vertices * edges_per_vertex;
}

bool GameState::in_T(Vertex v) const {
    return std::binary_search(T.begin(), T.end(), v);
}

std::vector<std::pair<Vertex, std::string>> label_table(const GameState& state) {
    std::vector<std::pair<Vertex, std::string>> table;
    table.reserve(state.labels.size());
    for (std::size_t i = 0; i < state.labels.size(); ++i)
        table.emplace_back(static_cast<Vertex>(i + 1), state.labels[i]);
    return table;
}

int colex_compare_vertices(std::span<const Vertex> a, std::span<const Vertex> b) {
    if (a.size() != b.size())
        throw DomainError("colex_compare_vertices: size mismatch");
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

std::vector<std::string> check_observations(const GameState& state) {
    std::vector<std::string> violations;
    const auto seed = static_cast<std::size_t>(state.seed_count());
    const std::uint64_t max_blues = stage_capacity(state.k, state.n);

    std::map<std::size_t, Vertex> red_positions;
    std::map<std::string, Vertex> seen_labels;
    for (std::size_t i = 0; i < state.labels.size(); ++i) {
        const Vertex v = static_cast<Vertex>(i + 1);
        const std::string& label = state.labels[i];
        const std::size_t r_pos = label.find('R');
        const bool has_r = r_pos != std::string::npos;

        if (state.in_T(v) == has_r)
            violations.push_back("observation 1: vertex " + std::to_string(v));
        if (i >= seed && !state.in_T(v)) {
            if (!has_r || r_pos + 1 != label.size())
                violations.push_back("observation 2: vertex " + std::to_string(v));
        }
        if (has_r) {
            auto [it, fresh] = red_positions.emplace(r_pos, v);
            if (!fresh)
                violations.push_back("observation 3: position " + std::to_string(r_pos + 1));
        }
        if (i >= seed) {
            auto [it, fresh] = seen_labels.emplace(label, v);
            if (!fresh)
                violations.push_back("observation 4: vertices " + std::to_string(it->second) +
                                     " and " + std::to_string(v));
        }
        const auto blues = static_cast<std::uint64_t>(
            std::count(label.begin(), label.end(), 'B'));
        if (blues > max_blues)
            violations.push_back("observation 5: vertex " + std::to_string(v));
    }

    std::uint64_t reds = 0;
    for (const auto& [edge, color] : state.drawn) {
        if (color == Color::Red) ++reds;
        bool inside_T = true;
        for (Vertex v : edge) inside_T = inside_T && state.in_T(v);
        if (inside_T && color == Color::Red)
            violations.push_back("red edge inside T: " + join_vertices(edge));
    }
    // Every (k-1)-subset of T must already be drawn (necessarily blue, by
    // the check above): T only grows through all-blue stages.
    if (state.T.size() >= static_cast<std::size_t>(state.k - 1)) {
        KSubsetStream subsets(state.T.size(), state.k - 1);
        std::vector<std::size_t> pick(static_cast<std::size_t>(state.k - 1));
        std::vector<Vertex> edge(static_cast<std::size_t>(state.k - 1));
        while (subsets.next(pick)) {
            for (std::size_t i = 0; i < pick.size(); ++i) edge[i] = state.T[pick[i]];
            if (!state.drawn.count(edge)) {
                violations.push_back("undrawn T-subset: " + join_vertices(edge));
                break;
            }
        }
    }
    if (state.stats.total_edges != state.drawn.size())
        violations.push_back("stats: m != |drawn|");
    if (state.stats.red_edges != reds)
        violations.push_back("stats: r != number of red edges");
    if (state.stats.vertices != state.labels.size())
        violations.push_back("stats: s != exposed vertices");
    return violations;
}

Simulator::Simulator(const GameConfig& config) : config_(config) {
    if (config.k < 3) throw DomainError("game: k must be >= 3");
    if (config.n < std::max(1, config.k - 2))
        throw DomainError("game: n must be at least max(1, k-2)");
    const std::uint64_t default_budget =
        4 * (stage_capacity(config.k, config.n) + 1) + static_cast<std::uint64_t>(config.k);
    if (config_.budget == 0) config_.budget = default_budget;
    const std::uint64_t min_budget =
        2 * (stage_capacity(config.k, config.n) + 1) + static_cast<std::uint64_t>(config.k - 2);
    if (config_.budget < min_budget)
        throw DomainError("game: budget below the strategy's requirement");

    state_.k = config.k;
    state_.n = config.n;

    for (int i = 0; i < config.k - 2; ++i) {
        const Vertex v = static_cast<Vertex>(i + 1);
        state_.labels.emplace_back();
        state_.T.push_back(v);
        ++state_.stats.vertices;
        emit("EXPOSE " + std::to_string(v));
    }
    stage_boundary_ = true;
    if (static_cast<int>(state_.T.size()) >= state_.n) finish_blue_clique();
}

void Simulator::advance() {
    if (finished()) throw DomainError("game: the game is over");
    if (!stage_boundary_) throw DomainError("game: a proposal is pending");
    expose_next();
}

const std::vector<Vertex>& Simulator::proposed_edge() const {
    if (finished() || stage_boundary_)
        throw DomainError("game: no pending proposal");
    return proposed_;
}

void Simulator::step(Color reply) {
    if (stage_boundary_ && !finished()) advance();
    apply(reply);
    if (stage_boundary_ && !finished()) advance();
}

const GameOutcome& Simulator::outcome() const {
    if (!outcome_) throw DomainError("game: not finished yet");
    return *outcome_;
}

void Simulator::expose_next() {
    if (state_.stats.vertices + 1 > config_.budget)
        throw ContractViolation(
            "game: vertex budget exhausted without an outcome; the builder "
            "strategy must not let this happen");
    current_ = static_cast<Vertex>(state_.labels.size() + 1);
    state_.labels.emplace_back();
    ++state_.stats.vertices;
    emit("EXPOSE " + std::to_string(current_));
    begin_stage();
}

void Simulator::begin_stage() {
    stage_T_ = state_.T;
    stage_rank_ = 0;
    stage_total_ = binomial(stage_T_.size(), static_cast<std::uint64_t>(config_.k - 2));
    stage_pick_.assign(static_cast<std::size_t>(config_.k - 2), 0);
    for (std::size_t i = 0; i < stage_pick_.size(); ++i) stage_pick_[i] = i;

    proposed_.clear();
    for (auto i : stage_pick_) proposed_.push_back(stage_T_[i]);
    proposed_.push_back(current_);
    stage_boundary_ = false;
}

void Simulator::apply(Color reply) {
    if (finished()) throw DomainError("game: the game is over");
    if (stage_boundary_) throw DomainError("game: no pending proposal; call advance()");

    state_.drawn.emplace(proposed_, reply);
    ++state_.stats.total_edges;
    ++stage_rank_;
    emit("DRAW " + join_vertices(proposed_) + " -> " + (reply == Color::Red ? "R" : "B"));
    state_.labels[current_ - 1].push_back(reply == Color::Red ? 'R' : 'B');

    if (reply == Color::Red) {
        ++state_.stats.red_edges;
        auto hit = red_at_position_.find(stage_rank_);
        if (hit != red_at_position_.end()) {
            finish_red_fork(hit->second);
            return;
        }
        red_at_position_.emplace(stage_rank_, current_);
        stage_boundary_ = true;
        return;
    }

    if (stage_rank_ < stage_total_) {
        // Advance to the colex-next (k-2)-subset of the frozen T.
        for (std::size_t i = 0; i < stage_pick_.size(); ++i) {
            const std::size_t limit =
                (i + 1 < stage_pick_.size()) ? stage_pick_[i + 1] : stage_T_.size();
            if (stage_pick_[i] + 1 < limit) {
                ++stage_pick_[i];
                for (std::size_t j = 0; j < i; ++j) stage_pick_[j] = j;
                break;
            }
        }
        proposed_.clear();
        for (auto i : stage_pick_) proposed_.push_back(stage_T_[i]);
        proposed_.push_back(current_);
        return;
    }

    // Every edge of the stage came back blue: the vertex joins T.
    state_.T.push_back(current_);
    emit("T+ " + std::to_string(current_));
    stage_boundary_ = true;
    if (static_cast<int>(state_.T.size()) >= state_.n) finish_blue_clique();
}

void Simulator::finish_red_fork(Vertex other) {
    ConfigurationWitness witness;
    witness.kind = ConfigurationWitness::Kind::RedFork;

    std::vector<Vertex> shared(proposed_.begin(), proposed_.end() - 1);
    std::vector<Vertex> e1 = shared;
    e1.push_back(other);
    std::vector<Vertex> e2 = shared;
    e2.push_back(current_);
    witness.red_edges = {std::move(e1), std::move(e2)};
    witness.vertices = shared;
    witness.vertices.push_back(other);
    witness.vertices.push_back(current_);

    emit("WIN RedF " + join_vertices(witness.vertices));
    stage_boundary_ = true;
    outcome_ = GameOutcome{std::move(witness), state_.stats, transcript_};
}

void Simulator::finish_blue_clique() {
    // All (k-1)-subsets of T have been drawn blue, so the first n vertices
    // of T must work; still search and re-verify rather than assume.
    const int n = state_.n;
    const int edge_size = config_.k - 1;
    std::optional<std::vector<Vertex>> found;

    KSubsetStream subsets(state_.T.size(), n);
    std::vector<std::size_t> pick(static_cast<std::size_t>(n));
    while (subsets.next(pick) && !found) {
        std::vector<Vertex> candidate;
        candidate.reserve(pick.size());
        for (auto i : pick) candidate.push_back(state_.T[i]);

        bool all_blue = true;
        if (n >= edge_size) {
            KSubsetStream edges(candidate.size(), edge_size);
            std::vector<std::size_t> epick(static_cast<std::size_t>(edge_size));
            std::vector<Vertex> edge(static_cast<std::size_t>(edge_size));
            while (edges.next(epick)) {
                for (int i = 0; i < edge_size; ++i)
                    edge[static_cast<std::size_t>(i)] = candidate[epick[static_cast<std::size_t>(i)]];
                auto it = state_.drawn.find(edge);
                if (it == state_.drawn.end() || it->second != Color::Blue) {
                    all_blue = false;
                    break;
                }
            }
        }
        if (all_blue) found = std::move(candidate);
    }
    if (!found)
        throw ContractViolation("game: T reached size n without a verifiable blue clique");

    ConfigurationWitness witness;
    witness.kind = ConfigurationWitness::Kind::BlueClique;
    witness.vertices = std::move(*found);
    emit("WIN Blue " + join_vertices(witness.vertices));
    stage_boundary_ = true;
    outcome_ = GameOutcome{std::move(witness), state_.stats, transcript_};
}

namespace {

class ConstantPainter final : public Painter {
public:
    explicit ConstantPainter(Color color) : color_(color) {}
    Color respond(const GameState&, std::span<const Vertex>) override { return color_; }
    std::string name() const override { return color_ == Color::Red ? "red" : "blue"; }

private:
    Color color_;
};

class RandomPainter final : public Painter {
public:
    explicit RandomPainter(std::uint64_t seed) : rng_(seed), seed_(seed) {}
    Color respond(const GameState&, std::span<const Vertex>) override {
        return rng_.next_below(2) == 0 ? Color::Red : Color::Blue;
    }
    std::string name() const override { return "random:" + std::to_string(seed_); }

private:
    SplitMix64 rng_;
    std::uint64_t seed_;
};

// Adversarial painter: looks `depth` replies ahead in the (deterministic)
// builder's future and picks the reply that maximizes the number of
// vertices the builder ends up spending. Ties resolve to red.
class MinimaxPainter final : public Painter {
public:
    MinimaxPainter(const GameConfig& config, int depth)
        : mirror_(config), depth_(depth) {}

    Color respond(const GameState&, std::span<const Vertex> edge) override {
        while (!mirror_.finished() && mirror_.at_stage_boundary()) mirror_.advance();
        if (mirror_.finished() ||
            !std::equal(edge.begin(), edge.end(), mirror_.proposed_edge().begin(),
                        mirror_.proposed_edge().end()))
            throw DomainError("minimax painter: drifted out of sync with the game");
        const std::uint64_t red_value = value_after(mirror_, Color::Red, depth_);
        const std::uint64_t blue_value = value_after(mirror_, Color::Blue, depth_);
        const Color choice = blue_value > red_value ? Color::Blue : Color::Red;
        mirror_.apply(choice);
        return choice;
    }

    std::string name() const override { return "minimax:" + std::to_string(depth_); }

private:
    static std::uint64_t value_after(const Simulator& sim, Color reply, int depth) {
        Simulator next = sim;
        try {
            next.step(reply);
        } catch (const ContractViolation&) {
            // A budget blow-up is the adversary's jackpot.
            return ~std::uint64_t{0};
        }
        if (next.finished() || depth <= 1) return next.state().stats.vertices;
        return std::max(value_after(next, Color::Red, depth - 1),
                        value_after(next, Color::Blue, depth - 1));
    }

    Simulator mirror_;
    int depth_;
};

class TranscriptPainter final : public Painter {
public:
    explicit TranscriptPainter(std::vector<std::pair<std::vector<Vertex>, Color>> replies)
        : replies_(std::move(replies)) {}

    Color respond(const GameState&, std::span<const Vertex> edge) override {
        if (next_ >= replies_.size())
            throw DomainError("replay: transcript ended before the game did");
        const auto& [recorded, color] = replies_[next_++];
        if (!std::equal(edge.begin(), edge.end(), recorded.begin(), recorded.end()))
            throw DomainError("replay: transcript edge does not match the builder");
        return color;
    }
    std::string name() const override { return "replay"; }

private:
    std::vector<std::pair<std::vector<Vertex>, Color>> replies_;
    std::size_t next_ = 0;
};

}  // namespace

std::unique_ptr<Painter> make_painter(const std::string& spec, const GameConfig& config) {
    if (spec == "red") return std::make_unique<ConstantPainter>(Color::Red);
    if (spec == "blue") return std::make_unique<ConstantPainter>(Color::Blue);
    const auto colon = spec.find(':');
    const std::string head = spec.substr(0, colon);
    const std::string tail = colon == std::string::npos ? "" : spec.substr(colon + 1);
    try {
        if (head == "random") return std::make_unique<RandomPainter>(std::stoull(tail));
        if (head == "minimax") {
            const int depth = std::stoi(tail);
            if (depth < 1 || depth > 24)
                throw UsageError("painter: minimax depth must be in 1..24");
            return std::make_unique<MinimaxPainter>(config, depth);
        }
    } catch (const std::invalid_argument&) {
    } catch (const std::out_of_range&) {
    }
    throw UsageError("painter: expected red, blue, random:SEED or minimax:DEPTH");
}

std::unique_ptr<Painter> make_transcript_painter(const std::vector<std::string>& transcript) {
    std::vector<std::pair<std::vector<Vertex>, Color>> replies;
    for (std::size_t line_no = 0; line_no < transcript.size(); ++line_no) {
        const std::string& line = transcript[line_no];
        if (line.rfind("DRAW ", 0) != 0) continue;
        const auto arrow = line.find(" -> ");
        if (arrow == std::string::npos)
            throw DomainError("replay: malformed DRAW line " + std::to_string(line_no + 1));
        std::istringstream vs(line.substr(5, arrow - 5));
        std::vector<Vertex> edge;
        Vertex v;
        while (vs >> v) edge.push_back(v);
        const std::string color = line.substr(arrow + 4);
        if (edge.empty() || (color != "R" && color != "B"))
            throw DomainError("replay: malformed DRAW line " + std::to_string(line_no + 1));
        replies.emplace_back(std::move(edge), color == "R" ? Color::Red : Color::Blue);
    }
    return std::make_unique<TranscriptPainter>(std::move(replies));
}

GameOutcome run_game(const GameConfig& config, Painter& painter, const StageHook& on_stage) {
    Simulator sim(config);
    while (!sim.finished()) {
        if (sim.at_stage_boundary()) {
            // Hook point: the per-stage observations hold here, since no
            // outcome has been declared yet.
            if (on_stage) on_stage(sim.state());
            sim.advance();
            continue;
        }
        sim.apply(painter.respond(sim.state(), sim.proposed_edge()));
    }
    return sim.outcome();
}

}  // namespace ramsey
