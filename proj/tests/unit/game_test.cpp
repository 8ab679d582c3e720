#include <doctest.h>

#include <algorithm>

#include "ramsey/game.hpp"

using namespace ramsey;

TEST_CASE("colex order on (k-2)-sets") {
    const std::vector<Vertex> a{1, 3}, b{2, 3}, c{1, 4};
    CHECK(colex_compare_vertices(a, b) < 0);   // differ at the lower position
    CHECK(colex_compare_vertices(b, c) < 0);   // max elements 3 < 4
    CHECK(colex_compare_vertices(a, a) == 0);
    const std::vector<Vertex> wrong{1};
    CHECK_THROWS_AS(colex_compare_vertices(a, wrong), DomainError);
}

TEST_CASE("all-red painter forces the fork immediately (k=3, n=2)") {
    GameConfig config{3, 2, 0};
    auto painter = make_painter("red", config);
    const auto outcome = run_game(config, *painter);
    CHECK(outcome.witness.kind == ConfigurationWitness::Kind::RedFork);
    CHECK(outcome.witness.vertices == std::vector<Vertex>{1, 2, 3});
    REQUIRE(outcome.witness.red_edges.size() == 2);
    CHECK(outcome.witness.red_edges[0] == std::vector<Vertex>{1, 2});
    CHECK(outcome.witness.red_edges[1] == std::vector<Vertex>{1, 3});
    CHECK(outcome.stats.vertices == 3);
    CHECK(outcome.stats.red_edges == 2);
    CHECK(outcome.stats.total_edges == 2);
}

TEST_CASE("all-blue painter yields a blue clique at once (k=3, n=2)") {
    GameConfig config{3, 2, 0};
    auto painter = make_painter("blue", config);
    const auto outcome = run_game(config, *painter);
    CHECK(outcome.witness.kind == ConfigurationWitness::Kind::BlueClique);
    CHECK(outcome.witness.vertices == std::vector<Vertex>{1, 2});
    CHECK(outcome.stats.vertices == 2);
    CHECK(outcome.stats.red_edges == 0);
    CHECK(outcome.stats.total_edges == 1);
}

TEST_CASE("degenerate target n = k-2 wins on the seed vertices") {
    GameConfig config{4, 2, 0};
    auto painter = make_painter("red", config);
    const auto outcome = run_game(config, *painter);
    CHECK(outcome.witness.kind == ConfigurationWitness::Kind::BlueClique);
    CHECK(outcome.stats.vertices == 2);
    CHECK(outcome.stats.total_edges == 0);
}

TEST_CASE("seeding and labels") {
    Simulator sim(GameConfig{4, 4, 0});
    // k-2 = 2 seed vertices, both labeled with the empty string, in T.
    const auto table = label_table(sim.state());
    REQUIRE(table.size() == 2);
    CHECK(table[0] == std::pair<Vertex, std::string>{1, ""});
    CHECK(table[1] == std::pair<Vertex, std::string>{2, ""});
    CHECK(sim.state().T == std::vector<Vertex>{1, 2});
    CHECK(sim.at_stage_boundary());
    CHECK(check_observations(sim.state()).empty());

    // One all-blue stage: the vertex joins T with label "B".
    sim.advance();
    CHECK(sim.proposed_edge() == std::vector<Vertex>{1, 2, 3});
    sim.apply(Color::Blue);
    CHECK(sim.state().labels[2] == "B");
    CHECK(sim.state().in_T(3));
    CHECK(check_observations(sim.state()).empty());

    // A stage ending in red leaves label B...BR outside T.
    sim.advance();
    sim.apply(Color::Blue);   // {1,2}+4
    sim.apply(Color::Blue);   // {1,3}+4
    sim.apply(Color::Red);    // {2,3}+4
    CHECK(sim.state().labels[3] == "BBR");
    CHECK(!sim.state().in_T(4));
    CHECK(sim.at_stage_boundary());
    CHECK(check_observations(sim.state()).empty());
}

TEST_CASE("stages propose edges in colex order of T-subsets") {
    Simulator sim(GameConfig{4, 5, 0});
    sim.advance();
    sim.apply(Color::Blue);  // v3 joins T = {1,2,3}
    sim.advance();
    CHECK(sim.proposed_edge() == std::vector<Vertex>{1, 2, 4});
    sim.apply(Color::Blue);
    CHECK(sim.proposed_edge() == std::vector<Vertex>{1, 3, 4});
    sim.apply(Color::Blue);
    CHECK(sim.proposed_edge() == std::vector<Vertex>{2, 3, 4});
    sim.apply(Color::Blue);  // v4 joins T
    CHECK(sim.state().T == std::vector<Vertex>{1, 2, 3, 4});
}

TEST_CASE("fork detection pairs the two red replies at one label position") {
    // k=3, n=3: vertex 2 red at position 1; vertex 3 blue then joins T;
    // vertex 4 red at position 1 closes the fork with vertex 2.
    Simulator sim(GameConfig{3, 3, 0});
    sim.advance();
    sim.apply(Color::Red);  // (1,2) red
    sim.advance();
    sim.apply(Color::Blue);  // (1,3) blue -> T = {1,3}
    sim.advance();
    CHECK(sim.proposed_edge() == std::vector<Vertex>{1, 4});
    sim.apply(Color::Red);
    REQUIRE(sim.finished());
    const auto& witness = sim.outcome().witness;
    CHECK(witness.kind == ConfigurationWitness::Kind::RedFork);
    CHECK(witness.vertices == std::vector<Vertex>{1, 2, 4});
    CHECK(witness.red_edges[0] == std::vector<Vertex>{1, 2});
    CHECK(witness.red_edges[1] == std::vector<Vertex>{1, 4});
}

TEST_CASE("blue clique witness re-verifies against drawn edges") {
    GameConfig config{3, 4, 0};
    auto painter = make_painter("blue", config);
    const auto outcome = run_game(config, *painter);
    REQUIRE(outcome.witness.kind == ConfigurationWitness::Kind::BlueClique);
    REQUIRE(outcome.witness.vertices.size() == 4);
    // All pairs inside the witness were drawn blue during the game.
    CHECK(outcome.stats.total_edges == 1 + 2 + 3);
}

TEST_CASE("observations hold at every stage under a mixed painter") {
    GameConfig config{3, 5, 0};
    auto painter = make_painter("random:11", config);
    std::size_t hooks = 0;
    const auto outcome = run_game(config, *painter, [&](const GameState& state) {
        ++hooks;
        const auto violations = check_observations(state);
        CHECK(violations.empty());
    });
    CHECK(hooks > 0);
    CHECK(ResourceLimits::for_game(3, 5).within(outcome.stats));
}

TEST_CASE("random painter games are reproducible") {
    GameConfig config{3, 4, 0};
    auto p1 = make_painter("random:42", config);
    auto p2 = make_painter("random:42", config);
    const auto a = run_game(config, *p1);
    const auto b = run_game(config, *p2);
    CHECK(a.transcript == b.transcript);
    CHECK(a.witness.vertices == b.witness.vertices);
}

TEST_CASE("minimax painter is deterministic and within bounds") {
    GameConfig config{3, 3, 0};
    auto p1 = make_painter("minimax:10", config);
    auto p2 = make_painter("minimax:10", config);
    const auto a = run_game(config, *p1);
    const auto b = run_game(config, *p2);
    CHECK(a.transcript == b.transcript);
    CHECK(ResourceLimits::for_game(3, 3).within(a.stats));
}

TEST_CASE("transcripts replay bit-exactly") {
    GameConfig config{4, 4, 0};
    auto painter = make_painter("random:5", config);
    const auto original = run_game(config, *painter);

    auto replayer = make_transcript_painter(original.transcript);
    const auto replayed = run_game(config, *replayer);
    CHECK(replayed.transcript == original.transcript);
    CHECK(replayed.stats.vertices == original.stats.vertices);
    CHECK(replayed.witness.vertices == original.witness.vertices);
}

TEST_CASE("replay rejects a transcript from a different game") {
    GameConfig small{3, 2, 0};
    auto painter = make_painter("blue", small);
    const auto outcome = run_game(small, *painter);
    auto replayer = make_transcript_painter(outcome.transcript);
    GameConfig other{3, 4, 0};
    CHECK_THROWS_AS(run_game(other, *replayer), DomainError);
}

TEST_CASE("configuration validation") {
    CHECK_THROWS_AS(Simulator(GameConfig{2, 3, 0}), DomainError);
    CHECK_THROWS_AS(Simulator(GameConfig{4, 1, 0}), DomainError);
    // Budget below the strategy's requirement is rejected up front.
    CHECK_THROWS_AS(Simulator(GameConfig{3, 5, 3}), DomainError);
    CHECK_THROWS_AS(make_painter("nonsense", GameConfig{3, 3, 0}), UsageError);
    CHECK_THROWS_AS(make_painter("minimax:0", GameConfig{3, 3, 0}), UsageError);
    CHECK_THROWS_AS(make_painter("random:x", GameConfig{3, 3, 0}), UsageError);
}

TEST_CASE("resource limits formulas") {
    const auto limits = ResourceLimits::for_game(3, 5);
    CHECK(limits.vertices == 13);       // 2(C(5,1)+1)+1
    CHECK(limits.red_edges == 6);       // C(5,1)+1
    CHECK(limits.edges_per_vertex == 6);
    GameStats fine{13, 6, 78};
    CHECK(limits.within(fine));
    GameStats too_many_reds{13, 7, 78};
    CHECK(!limits.within(too_many_reds));
}
