#include <doctest.h>

#include <cstdio>
#include <functional>
#include <set>

#include "fractw/alice.hpp"
#include "fractw/bob.hpp"
#include "fractw/clique.hpp"
#include "fractw/error.hpp"
#include "fractw/transcript.hpp"

using namespace fractw;

namespace {

bool throws_errc(Errc want, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == want;
  }
  return false;
}

}  // namespace

TEST_CASE("transcript round-trip") {
  GameConfig cfg{2, 2};
  std::vector<BobMove> moves = {
      {{0, 1}, {EdgeColor::Blue, EdgeColor::Blue}},
      {{2, 0}, {EdgeColor::Blue, EdgeColor::Red}},
      {{3}, {EdgeColor::Red}},
  };
  GreedyAlice alice;
  GameRecord rec = replay_moves(cfg, moves, alice, true);
  std::string text = transcript_to_jsonl(rec);

  GameTranscript tr = transcript_from_jsonl(text);
  CHECK(tr.cfg.t == 2);
  CHECK(tr.cfg.omega == 2);
  REQUIRE(tr.moves.size() == 3);
  for (std::size_t i = 0; i < moves.size(); ++i) {
    CHECK(tr.moves[i].back == moves[i].back);
    CHECK(tr.moves[i].colors == moves[i].colors);
  }

  GreedyAlice fresh;
  GameRecord again = replay_moves(tr.cfg, tr.moves, fresh, true);
  CHECK(again.total == rec.total);
  CHECK(again.graph.edge_count() == rec.graph.edge_count());
}

TEST_CASE("transcript file round-trip") {
  GameConfig cfg{3, 2};
  std::vector<BobMove> moves = {{{0, 1}, {EdgeColor::Blue, EdgeColor::Red}}};
  GreedyAlice alice;
  GameRecord rec = replay_moves(cfg, moves, alice);
  std::string path = "transcript_test.jsonl";
  write_transcript_file(rec, path);
  GameTranscript tr = read_transcript_file(path);
  CHECK(tr.cfg.t == 3);
  REQUIRE(tr.moves.size() == 1);
  CHECK(tr.moves[0].back == moves[0].back);
  std::remove(path.c_str());
}

TEST_CASE("transcript parse errors") {
  auto parse = [](const std::string& s) { return transcript_from_jsonl(s); };
  CHECK(throws_errc(Errc::parse_error, [&] { parse(""); }));
  CHECK(throws_errc(Errc::parse_error, [&] { parse("not json\n"); }));
  // Vertex ids must arrive in board order.
  CHECK(throws_errc(Errc::parse_error, [&] {
    parse("{\"t\":2,\"omega\":2}\n{\"v\":5,\"back\":[1],\"colors\":[\"r\"]}\n");
  }));
  // Back vertices must precede the new vertex.
  CHECK(throws_errc(Errc::parse_error, [&] {
    parse("{\"t\":2,\"omega\":2}\n{\"v\":3,\"back\":[3],\"colors\":[\"b\"]}\n");
  }));
  CHECK(throws_errc(Errc::parse_error, [&] {
    parse("{\"t\":2,\"omega\":2}\n{\"v\":3,\"back\":[1],\"colors\":[\"x\"]}\n");
  }));
  CHECK(throws_errc(Errc::parse_error, [&] {
    parse("{\"t\":2,\"omega\":2}\n{\"v\":3,\"back\":[1,2],\"colors\":[\"b\"]}\n");
  }));
  // Blank lines are fine.
  GameTranscript tr = parse("{\"t\":2,\"omega\":2}\n\n{\"v\":3,\"back\":[1,2],\"colors\":[\"b\",\"r\"]}\n");
  REQUIRE(tr.moves.size() == 1);
  CHECK(tr.moves[0].back == std::vector<int>{0, 1});
}

TEST_CASE("corollary 1 plans") {
  SUBCASE("t=2 omega=2") {
    AdversaryPlan p = plan_corollary1(2, 2);
    REQUIRE(p.stages.size() == 1);
    CHECK(p.stages[0].gadget.graph.vertex_count() == 2);
    CHECK(p.stages[0].gadget.q() == 2);
    CHECK(p.tail == 1);
    CHECK(p.guaranteed() == rat(5, 2));
  }
  SUBCASE("t=3 omega=2") {
    AdversaryPlan p = plan_corollary1(3, 2);
    REQUIRE(p.stages.size() == 2);
    CHECK(p.stages[0].gadget.graph.vertex_count() == 2);
    CHECK(p.stages[1].gadget.graph.vertex_count() == 1);
    CHECK(p.tail == 0);
    CHECK(p.guaranteed() == rat(5, 2));
  }
  SUBCASE("t=4 omega=3") {
    AdversaryPlan p = plan_corollary1(4, 3);
    REQUIRE(p.stages.size() == 2);
    CHECK(p.guaranteed() == rat(25, 6));  // 5 - 1/3 - 1/2
    CHECK(p.tail == 1);
  }
  SUBCASE("out of range") {
    CHECK(throws_errc(Errc::bad_range, [] { plan_corollary1(4, 2); }));
    CHECK(throws_errc(Errc::bad_range, [] { plan_corollary1(1, 2); }));
    CHECK(throws_errc(Errc::bad_range, [] { plan_corollary1(7, 3); }));
  }
}

TEST_CASE("theorem 3 plans pick the strongest gadget that fits") {
  SUBCASE("t=2 caps force the edge gadget") {
    AdversaryPlan p = plan_theorem3(2, 2);
    REQUIRE(p.stages.size() == 1);
    CHECK(p.stages[0].gadget.width() <= 1);
    CHECK(p.guaranteed() == rat(5, 2));
  }
  SUBCASE("t=3 omega=2 upgrades the first stage to the five-cycle") {
    AdversaryPlan p = plan_theorem3(3, 2);
    REQUIRE(p.stages.size() == 2);
    CHECK(p.stages[0].gadget.graph.vertex_count() == 5);
    CHECK(p.stages[0].gadget.q() == rat(5, 2));
    CHECK(p.guaranteed() == rat(13, 5));  // 4 - 2/5 - 1, beats 5/2
    CHECK(p.guaranteed() > plan_corollary1(3, 2).guaranteed());
  }
  SUBCASE("large clique caps keep the complete-graph gadget") {
    AdversaryPlan p = plan_theorem3(4, 4);
    REQUIRE(p.stages.size() == 1);
    CHECK(p.stages[0].gadget.graph.vertex_count() == 4);
    CHECK(p.guaranteed() == rat(19, 4));
  }
  SUBCASE("never below the closed form") {
    for (int t = 2; t <= 8; ++t)
      for (int omega = (t + 2) / 2; omega <= t; ++omega)
        CHECK(plan_theorem3(t, omega).guaranteed() >= plan_corollary1(t, omega).guaranteed());
  }
}

TEST_CASE("adversary forces 5/2 against the greedy strategy at t=2") {
  GreedyAlice alice;
  ForcedBoundReport rep = execute_adversary(plan_corollary1(2, 2), alice, true);

  CHECK(rep.guaranteed == rat(5, 2));
  CHECK(rep.union_measure == rat(5, 2));
  CHECK(rep.record.total == rat(5, 2));

  REQUIRE(rep.kprime.size() == 3);
  CHECK(rep.kprime == std::vector<int>{2, 3, 5});
  REQUIRE(rep.pairs.size() == 1);
  CHECK(rep.pairs[0].v == 2);
  CHECK(rep.pairs[0].u == 3);
  CHECK(rep.pairs[0].overlap == rat(1, 2));
  CHECK(rep.pairs[0].cap == rat(1, 2));

  // The board stayed legal: its blue part has no triangle.
  RBGraph blue = rep.record.graph.blue_subgraph();
  CHECK(clique_number(blue, CliqueScope::BlueOnly) <= 2);

  // The forcing run replays deterministically.
  GameTranscript tr = transcript_of(rep.record);
  GreedyAlice fresh;
  GameRecord again = replay_moves(tr.cfg, tr.moves, fresh, true);
  CHECK(again.total == rep.record.total);
}

TEST_CASE("adversary runs across the legal grid") {
  struct Probe {
    int t, omega;
    bool theorem3;
  };
  const Probe probes[] = {{3, 2, true}, {4, 3, false}, {4, 3, true},
                          {5, 3, false}, {4, 4, true}, {5, 4, true}};
  for (const Probe& pr : probes) {
    CAPTURE(pr.t);
    CAPTURE(pr.omega);
    AdversaryPlan plan =
        pr.theorem3 ? plan_theorem3(pr.t, pr.omega) : plan_corollary1(pr.t, pr.omega);
    GreedyAlice alice;
    ForcedBoundReport rep = execute_adversary(plan, alice, true);
    CHECK(static_cast<int>(rep.kprime.size()) == pr.t + 1);
    CHECK(rep.union_measure >= rep.guaranteed);
    CHECK(rep.union_measure <= GameConfig{pr.t, pr.omega}.greedy_window());
    for (const auto& p : rep.pairs) CHECK(p.overlap <= p.cap);
    if (rep.record.graph.vertex_count() <= 30) {
      RBGraph blue = rep.record.graph.blue_subgraph();
      CHECK(clique_number(blue, CliqueScope::BlueOnly) <= pr.omega);
    }
  }
}

TEST_CASE("adversary holds against random opponents") {
  AdversaryPlan plan = plan_theorem3(3, 2);
  for (unsigned seed = 1; seed <= 4; ++seed) {
    RandomAlice alice(seed);
    ForcedBoundReport rep = execute_adversary(plan, alice, true);
    CHECK(rep.union_measure >= rep.guaranteed);
  }
}

TEST_CASE("random bob plays legal games") {
  SUBCASE("stays inside the greedy window") {
    for (unsigned seed = 1; seed <= 5; ++seed) {
      RandomBob bob(seed, 12);
      GreedyAlice alice;
      GameRecord rec = run_game(GameConfig{3, 3}, alice, bob, true);
      CHECK(rec.moves.size() == 12);
      CHECK(rec.total <= GameConfig{3, 3}.greedy_window());
    }
  }
  SUBCASE("seeded determinism") {
    auto play = [] {
      RandomBob bob(99, 10);
      GreedyAlice alice;
      return run_game(GameConfig{4, 2}, alice, bob, true);
    };
    GameRecord a = play();
    GameRecord b = play();
    CHECK(a.total == b.total);
    CHECK(a.graph.edge_count() == b.graph.edge_count());
    CHECK(transcript_to_jsonl(a) == transcript_to_jsonl(b));
  }
  SUBCASE("legal against a random colourer too") {
    RandomBob bob(7, 15);
    RandomAlice alice(3);
    GameRecord rec = run_game(GameConfig{2, 2}, alice, bob, true);
    CHECK(rec.moves.size() == 15);
  }
}
