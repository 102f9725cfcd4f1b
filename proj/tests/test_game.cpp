#include <doctest.h>

#include <algorithm>

#include "fractw/alice.hpp"
#include "fractw/error.hpp"
#include "fractw/game.hpp"

using namespace fractw;

namespace {

BobMove attach(std::vector<int> back, std::vector<EdgeColor> colors) {
  return BobMove{std::move(back), std::move(colors)};
}

constexpr auto R = EdgeColor::Red;
constexpr auto B = EdgeColor::Blue;

void check_gamma_invariants(const GameRecord& rec, const GreedyAlice& alice) {
  const auto& g = alice.gammas();
  rec.graph.for_each_edge([&](int u, int v, EdgeColor c) {
    int shared = 0;
    for (int col : g[u]) shared += std::count(g[v].begin(), g[v].end(), col);
    if (c == EdgeColor::Blue) CHECK(shared == 0);
    if (c == EdgeColor::Red) CHECK(shared == 1);
  });
}

}  // namespace

TEST_CASE("config validation") {
  CHECK_NOTHROW((GameConfig{2, 2}.validate()));
  CHECK_NOTHROW((GameConfig{8, 5}.validate()));
  CHECK_NOTHROW((GameConfig{1, 2}.validate()));  // trees
  CHECK_THROWS_AS((GameConfig{2, 3}.validate()), Error);
  CHECK_THROWS_AS((GameConfig{0, 2}.validate()), Error);
  CHECK_THROWS_AS((GameConfig{3, 1}.validate()), Error);
  CHECK((GameConfig{2, 2}.greedy_window() == rat(5, 2)));
  CHECK((GameConfig{3, 2}.greedy_window() == rat(10, 3)));
  CHECK((GameConfig{1, 2}.greedy_window() == rat(2)));
}

TEST_CASE("board opens with a red clique that Alice colours first") {
  GameState st(GameConfig{3, 2});
  CHECK(st.graph().vertex_count() == 3);
  CHECK(st.graph().edge_color(0, 1) == R);
  CHECK(st.alice_to_move());
  CHECK(st.pending_vertex() == 0);
  CHECK_THROWS_AS(st.bob_move(attach({0}, {R})), Error);  // Alice owes responses
  st.alice_move(ColorSet::interval(rat(0), rat(1)));
  CHECK(st.pending_vertex() == 1);
  st.alice_move(ColorSet::interval(rat(0), rat(1)));  // red edges allow overlap
  st.alice_move(ColorSet::interval(rat(5), rat(6)));
  CHECK(!st.alice_to_move());
  CHECK(st.total_measure() == rat(2));
}

TEST_CASE("referee enforces the rules of each move") {
  GameState st(GameConfig{2, 2});
  st.alice_move(ColorSet::interval(rat(0), rat(1)));
  st.alice_move(ColorSet::interval(rat(1), rat(2)));

  SUBCASE("attachment must be a clique") {
    GameState s2(GameConfig{3, 2});
    while (s2.alice_to_move()) s2.alice_move(ColorSet::interval(rat(9), rat(10)));
    int a = s2.bob_move(attach({0}, {B}));
    s2.alice_move(ColorSet::interval(rat(0), rat(1)));
    int b = s2.bob_move(attach({1}, {B}));
    s2.alice_move(ColorSet::interval(rat(0), rat(1)));
    CHECK_THROWS_AS(s2.bob_move(attach({a, b}, {R, R})), Error);  // a-b not adjacent
  }
  SUBCASE("attachment arguments are checked") {
    CHECK_THROWS_AS(st.bob_move(attach({0, 1, 0}, {R, R, R})), Error);
    CHECK_THROWS_AS(st.bob_move(attach({7}, {R})), Error);
    CHECK_THROWS_AS(st.bob_move(attach({0}, {})), Error);
  }
  SUBCASE("alternation is enforced") {
    st.bob_move(attach({0, 1}, {B, B}));
    CHECK_THROWS_AS(st.bob_move(attach({0, 1}, {B, B})), Error);
    st.alice_move(ColorSet::interval(rat(4), rat(5)));
    CHECK_THROWS_AS(st.alice_move(ColorSet::interval(rat(8), rat(9))), Error);
  }
  SUBCASE("blue cliques stop at omega") {
    int v = st.bob_move(attach({0, 1}, {B, B}));  // fine: 0-1 is red
    st.alice_move(ColorSet::interval(rat(4), rat(5)));
    // v-0 is blue, so attaching blue to both v and 0 would close a blue K_3.
    CHECK_THROWS_AS(st.bob_move(attach({v, 0}, {B, B})), Error);
    CHECK_NOTHROW(st.bob_move(attach({v, 0}, {B, R})));
  }
  SUBCASE("alice must give measure one") {
    st.bob_move(attach({0, 1}, {B, B}));
    CHECK_THROWS_AS(st.alice_move(ColorSet::interval(rat(0), rat(2))), Error);
    CHECK_THROWS_AS(st.alice_move(ColorSet()), Error);
  }
  SUBCASE("alice must respect blue edges") {
    st.bob_move(attach({0, 1}, {B, R}));
    // Overlaps vertex 0's [0,1) across a blue edge.
    CHECK_THROWS_AS(st.alice_move(ColorSet::interval(rat(1, 2), rat(3, 2))), Error);
    CHECK_NOTHROW(st.alice_move(ColorSet::interval(rat(1), rat(2))));
  }
  SUBCASE("rejected moves leave no trace") {
    try {
      st.bob_move(attach({0, 7}, {R, R}));
    } catch (const Error&) {
    }
    CHECK(st.graph().vertex_count() == 2);
    CHECK(!st.alice_to_move());
  }
}

TEST_CASE("small attachments get red padding to a full clique") {
  GameState st(GameConfig{3, 2});
  while (st.alice_to_move()) st.alice_move(ColorSet::interval(rat(50), rat(51)));
  int v = st.bob_move(attach({0}, {B}));
  CHECK(st.graph().degree(v) == 3);
  CHECK(st.graph().edge_color(v, 0) == B);
  CHECK(st.graph().edge_color(v, 1) == R);
  CHECK(st.graph().edge_color(v, 2) == R);
  CHECK(st.witness().back[v] == std::vector<int>{0, 1, 2});
  st.alice_move(ColorSet::interval(rat(0), rat(1)));
  CHECK(!st.audit().has_value());
}

TEST_CASE("greedy alice plays the documented small games") {
  GameConfig cfg{2, 2};
  GreedyAlice alice;

  SUBCASE("initial star pattern then a blue attachment") {
    std::vector<BobMove> moves = {attach({0, 1}, {B, B})};
    GameRecord rec = replay_moves(cfg, moves, alice, true);
    // Starting clique: {1,2} and {1,3} as cells of width 1/2.
    CHECK(rec.initial[0] == ColorSet::interval(rat(0), rat(1)));
    CHECK(rec.initial[1] ==
          ColorSet::from_intervals({{rat(0), rat(1, 2)}, {rat(1), rat(3, 2)}}));
    // The new vertex is blue to everything, so it takes fresh colours {4,5}.
    CHECK(alice.gammas()[2] == std::vector<int>{4, 5});
    CHECK(rec.moves[0].phi == ColorSet::interval(rat(3, 2), rat(5, 2)));
    CHECK(rec.total == rat(5, 2));
  }
  SUBCASE("red attachments inherit private colours") {
    std::vector<BobMove> moves = {attach({0, 1}, {R, R})};
    GameRecord rec = replay_moves(cfg, moves, alice, true);
    CHECK(alice.gammas()[2] == std::vector<int>{2, 3});
    CHECK(rec.total == rat(3, 2));  // nothing new was spent
  }
  SUBCASE("mixed attachment") {
    std::vector<BobMove> moves = {attach({0, 1}, {R, B})};
    GameRecord rec = replay_moves(cfg, moves, alice, true);
    CHECK(alice.gammas()[2] == std::vector<int>{2, 4});
    CHECK(rec.total == rat(2));
  }
  SUBCASE("a longer exchange stays within the window") {
    std::vector<BobMove> moves = {
        attach({0, 1}, {B, B}),  // v2, blue pair over the red base
        attach({0, 2}, {B, R}),  // v3
        attach({2, 3}, {B, B}),  // v4, 2-3 is red
        attach({0, 1}, {R, B}),  // v5
        attach({4, 2}, {B, R}),  // v6, 4-2 is blue
    };
    GameRecord rec = replay_moves(cfg, moves, alice, true);
    CHECK(rec.total <= cfg.greedy_window());
    for (const auto& g : alice.gammas()) {
      CHECK(g.size() == 2);
      for (int c : g) CHECK(c <= alice.palette_size());
    }
    check_gamma_invariants(rec, alice);
  }
}

TEST_CASE("greedy alice in the tree game") {
  GameConfig cfg{1, 2};
  GreedyAlice alice;
  std::vector<BobMove> moves = {attach({0}, {B}), attach({1}, {B}), attach({0}, {R})};
  GameRecord rec = replay_moves(cfg, moves, alice, true);
  CHECK(alice.gammas()[0] == std::vector<int>{1});
  CHECK(alice.gammas()[1] == std::vector<int>{2});
  CHECK(alice.gammas()[2] == std::vector<int>{1});
  CHECK(alice.gammas()[3] == std::vector<int>{1});
  CHECK(rec.total == rat(2));
  CHECK(rec.total <= cfg.greedy_window());
}

TEST_CASE("greedy alice keeps the invariants on a wider board") {
  GameConfig cfg{4, 3};
  GreedyAlice alice;
  std::vector<BobMove> moves = {
      attach({0, 1, 2, 3}, {B, B, R, R}),  // v4
      attach({0, 1, 2, 3}, {R, B, B, B}),  // v5
      attach({4, 0, 1}, {B, B, R}),        // v6 (padded)
      attach({6, 4, 0}, {B, R, B}),        // v7 (padded)
      attach({7, 6}, {B, B}),              // v8 (padded), 7-6 is blue
  };
  GameRecord rec = replay_moves(cfg, moves, alice, true);
  CHECK(rec.total <= cfg.greedy_window());
  CHECK(rec.graph.vertex_count() == 9);
  check_gamma_invariants(rec, alice);
}

TEST_CASE("replaying the same script reproduces the same game") {
  GameConfig cfg{3, 3};
  std::vector<BobMove> moves = {
      attach({0, 1, 2}, {B, B, B}),
      attach({0, 1, 3}, {B, R, B}),
      attach({3, 4}, {B, B}),
  };
  GreedyAlice a1, a2;
  GameRecord r1 = replay_moves(cfg, moves, a1, true);
  GameRecord r2 = replay_moves(cfg, moves, a2, true);
  CHECK(r1.total == r2.total);
  REQUIRE(r1.moves.size() == r2.moves.size());
  for (std::size_t i = 0; i < r1.moves.size(); ++i)
    CHECK(r1.moves[i].phi == r2.moves[i].phi);
  CHECK(a1.gammas() == a2.gammas());
}

TEST_CASE("random alice is legal and deterministic under a fixed seed") {
  GameConfig cfg{3, 2};
  std::vector<BobMove> moves = {
      attach({0, 1, 2}, {B, B, R}),
      attach({0, 1, 3}, {B, R, R}),
      attach({1, 3, 4}, {B, R, B}),
  };
  RandomAlice a1(7), a2(7), a3(8);
  GameRecord r1 = replay_moves(cfg, moves, a1, true);
  GameRecord r2 = replay_moves(cfg, moves, a2, true);
  GameRecord r3 = replay_moves(cfg, moves, a3, true);
  CHECK(r1.total == r2.total);
  CHECK(r1.total <= rat(cfg.t + 1));
  CHECK(r3.total <= rat(cfg.t + 1));
}

TEST_CASE("lemma 2 bound on coloured cliques") {
  GameConfig cfg{3, 3};
  GreedyAlice alice;
  std::vector<BobMove> moves = {
      attach({0, 1, 2}, {B, B, B}),
      attach({1, 2, 3}, {B, B, B}),
  };
  GameRecord rec = replay_moves(cfg, moves, alice, true);
  // The attachment clique of the last vertex.
  auto rep = lemma2_check(rec.graph, {1, 2, 3}, alice.gammas(), cfg.t);
  CHECK(rep.hypotheses_ok);
  CHECK(rep.holds);
  CHECK(rep.bound == 3 * 2 + rep.blue_clique);

  // The starting clique is all red with one shared colour: 3t - 2 colours,
  // exactly the worst case s(t-1) + 1.
  auto tight = lemma2_check(rec.graph, {0, 1, 2}, alice.gammas(), cfg.t);
  CHECK(tight.hypotheses_ok);
  CHECK(tight.holds);
  CHECK(tight.union_size == 7);
  CHECK(tight.blue_clique == 1);
  CHECK(tight.bound == 7);  // sharp

  // Violating the hypotheses is reported.
  auto bad = lemma2_check(rec.graph, {0, 1, 2}, {{1, 2, 3}, {1, 2, 4}, {1, 6, 7}}, 3);
  CHECK(!bad.hypotheses_ok);
}
