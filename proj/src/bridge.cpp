#include "fractw/bridge.hpp"

#include <algorithm>
#include <string>

#include "fractw/clique.hpp"
#include "fractw/error.hpp"

namespace fractw {

std::optional<std::string> verify_fractional_coloring(const RBGraph& g,
                                                      const FractionalColoring& fc) {
  if (static_cast<int>(fc.phi.size()) != g.vertex_count())
    return "expected " + std::to_string(g.vertex_count()) + " colour sets, got " +
           std::to_string(fc.phi.size());
  for (int v = 0; v < g.vertex_count(); ++v)
    if (fc.phi[v].measure() != 1)
      return "vertex " + std::to_string(v) + " has measure " + rat_str(fc.phi[v].measure());
  std::optional<std::string> bad;
  g.for_each_edge([&](int u, int v, EdgeColor) {
    if (!bad && !fc.phi[u].disjoint_with(fc.phi[v]))
      bad = "adjacent vertices " + std::to_string(u) + " and " + std::to_string(v) +
            " share colour";
  });
  if (bad) return bad;
  ColorSet all;
  for (const ColorSet& s : fc.phi) all = all.unite(s);
  if (all.measure() != fc.total)
    return "recorded total " + rat_str(fc.total) + " differs from union measure " +
           rat_str(all.measure());
  return std::nullopt;
}

FractionalColoring color_graph_via_alice(const RBGraph& g, const EliminationWitness& w,
                                         AliceStrategy& alice) {
  if (auto err = verify_witness(g, w)) fail(Errc::witness_invalid, *err);
  int n = g.vertex_count();
  int omega_game = std::max(n > 0 ? clique_number(g) : 0, 2);
  int t_host = std::max(w.width, omega_game >= 3 ? omega_game : 1);
  GameConfig cfg{t_host, omega_game};

  GameState state(cfg);
  alice.reset(cfg);
  while (state.alice_to_move()) state.alice_move(alice.respond(state, state.pending_vertex()));

  std::vector<int> id(n, -1);
  for (int pos = 0; pos < n; ++pos) {
    int x = w.order[pos];
    BobMove m;
    for (int b : completion_predecessors(w, pos)) {
      m.back.push_back(id[b]);
      m.colors.push_back(g.has_edge(x, b) ? EdgeColor::Blue : EdgeColor::Red);
    }
    id[x] = state.bob_move(m);
    state.alice_move(alice.respond(state, id[x]));
  }

  // The blue part of the board must be a copy of g and nothing else.
  std::vector<int> rev(state.graph().vertex_count(), -1);
  for (int v = 0; v < n; ++v) rev[id[v]] = v;
  state.graph().for_each_edge([&](int a, int b, EdgeColor c) {
    if (c != EdgeColor::Blue) return;
    if (rev[a] < 0 || rev[b] < 0 || !g.has_edge(rev[a], rev[b]))
      fail(Errc::illegal_coloring, "stray blue edge on the host board");
  });

  FractionalColoring fc;
  fc.host = cfg;
  fc.phi.reserve(n);
  for (int v = 0; v < n; ++v) fc.phi.push_back(*state.coloring()[id[v]]);
  fc.total = state.union_phi(id).measure();
  if (auto err = verify_fractional_coloring(g, fc)) fail(Errc::illegal_coloring, *err);
  return fc;
}

FractionalColoring color_graph_via_alice(const RBGraph& g, AliceStrategy& alice) {
  return color_graph_via_alice(g, greedy_width_witness(g), alice);
}

}  // namespace fractw
