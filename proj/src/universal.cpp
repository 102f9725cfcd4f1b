#include "fractw/universal.hpp"

#include <algorithm>

#include "fractw/error.hpp"
#include "fractw/game.hpp"

namespace fractw {

namespace {

// All t-cliques of g, each sorted, in lexicographic order.
std::vector<std::vector<int>> all_t_cliques(const RBGraph& g, int t) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int from) -> void {
    if (static_cast<int>(cur.size()) == t) {
      out.push_back(cur);
      return;
    }
    for (int v = from; v < g.vertex_count(); ++v) {
      bool ok = true;
      for (int u : cur)
        if (!g.has_edge(u, v)) {
          ok = false;
          break;
        }
      if (ok) {
        cur.push_back(v);
        self(self, v + 1);
        cur.pop_back();
      }
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

UniversalBoard materialize_universal(int t, int omega, int rounds) {
  GameConfig cfg{t, omega};
  cfg.validate();
  if (rounds < 0) fail(Errc::bad_params, "negative round count");
  if (t > 3 || rounds > 2)
    fail(Errc::too_large,
         "universal board is limited to t <= 3 and at most 2 rounds; got t=" +
             std::to_string(t) + " rounds=" + std::to_string(rounds));

  UniversalBoard board;
  RBGraph& g = board.graph;
  EliminationWitness& w = board.witness;
  w.width = t;
  for (int i = 0; i < t; ++i) {
    g.add_vertex();
    for (int j = 0; j < i; ++j) g.add_edge(i, j, EdgeColor::Red);
    w.order.push_back(i);
    std::vector<int> back(w.order.begin(), w.order.end() - 1);
    w.back.push_back(back);
  }

  for (int r = 0; r < rounds; ++r) {
    std::vector<std::vector<int>> cliques = all_t_cliques(g, t);
    int added = 0;
    for (const auto& clique : cliques) {
      for (unsigned mask = 0; mask < (1u << t); ++mask) {
        std::vector<int> blues;
        for (int j = 0; j < t; ++j)
          if (mask >> j & 1) blues.push_back(clique[j]);
        if (closes_blue_clique(g, blues, omega)) continue;
        int v = g.add_vertex();
        for (int j = 0; j < t; ++j)
          g.add_edge(v, clique[j], mask >> j & 1 ? EdgeColor::Blue : EdgeColor::Red);
        w.order.push_back(v);
        w.back.push_back(clique);
        ++added;
      }
    }
    board.added_per_round.push_back(added);
  }

  if (auto err = verify_witness(g, w)) fail(Errc::witness_invalid, *err);
  return board;
}

}  // namespace fractw
