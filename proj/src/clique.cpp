#include "fractw/clique.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "fractw/error.hpp"

namespace fractw {

namespace {

struct Searcher {
  const std::vector<std::uint64_t>& adj;
  std::vector<int> best;
  std::vector<int> cur;

  // Greedy colouring of P in ascending vertex order; candidates come back
  // ordered by colour class so the bound tightens as we sweep from the end.
  void order_by_colour(std::uint64_t p, std::vector<int>& verts, std::vector<int>& bound) {
    verts.clear();
    bound.clear();
    int colour = 0;
    while (p) {
      ++colour;
      std::uint64_t cls = p;
      while (cls) {
        int v = std::countr_zero(cls);
        verts.push_back(v);
        bound.push_back(colour);
        p &= ~(std::uint64_t(1) << v);
        cls &= ~(std::uint64_t(1) << v);
        cls &= ~adj[v];
      }
    }
  }

  void expand(std::uint64_t p) {
    if (!p) {
      if (cur.size() > best.size()) best = cur;
      return;
    }
    std::vector<int> verts, bound;
    order_by_colour(p, verts, bound);
    for (int i = static_cast<int>(verts.size()) - 1; i >= 0; --i) {
      if (cur.size() + bound[i] <= best.size()) return;
      int v = verts[i];
      cur.push_back(v);
      expand(p & adj[v]);
      cur.pop_back();
      p &= ~(std::uint64_t(1) << v);
    }
  }
};

}  // namespace

std::vector<int> max_clique(const RBGraph& g, CliqueScope scope, int guard) {
  const int n = g.vertex_count();
  if (guard < 0 || guard > 64) fail(Errc::bad_params, "clique guard must be in [0, 64]");
  if (n > guard)
    fail(Errc::size_guard, "graph has " + std::to_string(n) + " vertices, clique guard is " +
                               std::to_string(guard));
  std::vector<std::uint64_t> adj(n, 0);
  g.for_each_edge([&](int u, int v, EdgeColor c) {
    if (scope == CliqueScope::BlueOnly && c != EdgeColor::Blue) return;
    adj[u] |= std::uint64_t(1) << v;
    adj[v] |= std::uint64_t(1) << u;
  });
  Searcher s{adj, {}, {}};
  std::uint64_t all = n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1;
  s.expand(all);
  std::sort(s.best.begin(), s.best.end());
  return s.best;
}

int clique_number(const RBGraph& g, CliqueScope scope, int guard) {
  return static_cast<int>(max_clique(g, scope, guard).size());
}

bool is_blue_clique(const RBGraph& g, const std::vector<int>& verts) {
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      auto c = g.edge_color(verts[i], verts[j]);
      if (!c || *c != EdgeColor::Blue) return false;
    }
  return true;
}

}  // namespace fractw
