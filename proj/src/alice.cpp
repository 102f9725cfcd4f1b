#include "fractw/alice.hpp"

#include <algorithm>
#include <set>

#include "fractw/clique.hpp"
#include "fractw/error.hpp"

namespace fractw {

void GreedyAlice::reset(const GameConfig& cfg) {
  cfg_ = cfg;
  palette_ = cfg.t * cfg.t + cfg.omega - 1;
  gamma_.clear();
}

ColorSet GreedyAlice::respond(const GameState& state, int vertex) {
  const int t = cfg_.t;
  if (static_cast<int>(gamma_.size()) != vertex)
    fail(Errc::bad_params, "greedy strategy expects vertices in arrival order");

  std::vector<int> mine;
  if (vertex < t) {
    // Starting clique: all sets share colour 1 and are otherwise disjoint,
    // so each pair overlaps in exactly the one colour its red edge demands.
    mine.push_back(1);
    for (int j = 0; j < t - 1; ++j) mine.push_back(vertex * (t - 1) + 2 + j);
  } else {
    const auto& nbrs = state.graph().neighbors(vertex);
    if (static_cast<int>(nbrs.size()) != t)
      fail(Errc::bad_params, "expected a full t-clique attachment");
    // Colours anywhere on the attachment clique cannot be freely reused.
    std::set<int> on_clique;
    for (const auto& [u, c] : nbrs)
      for (int col : gamma_.at(u)) on_clique.insert(col);
    // Each red neighbor donates a colour no other clique vertex holds,
    // keeping the red overlap at exactly one.
    for (const auto& [u, c] : nbrs) {
      if (c != EdgeColor::Red) continue;
      int donated = 0;
      for (int col : gamma_[u]) {
        bool elsewhere = false;
        for (const auto& [w, c2] : nbrs)
          if (w != u &&
              std::find(gamma_[w].begin(), gamma_[w].end(), col) != gamma_[w].end()) {
            elsewhere = true;
            break;
          }
        if (!elsewhere) {
          donated = col;
          break;
        }
      }
      if (donated == 0)
        fail(Errc::palette_exhausted, "no private colour on red neighbor " + std::to_string(u));
      mine.push_back(donated);
    }
    // Pairwise distinct automatically: u's donated colour lies in gamma(u)
    // and outside every other clique member's set.
    std::sort(mine.begin(), mine.end());
    if (std::adjacent_find(mine.begin(), mine.end()) != mine.end())
      fail(Errc::palette_exhausted, "red donations collided");
    for (int col = 1; static_cast<int>(mine.size()) < t; ++col) {
      if (col > palette_)
        fail(Errc::palette_exhausted, "palette of " + std::to_string(palette_) + " spent");
      if (on_clique.count(col)) continue;
      mine.push_back(col);
    }
    std::sort(mine.begin(), mine.end());
  }
  gamma_.push_back(mine);
  return ColorSet::from_cells(mine, t);
}

void RandomAlice::reset(const GameConfig& cfg) {
  cfg_ = cfg;
  rng_.seed(seed_);
  cells_.clear();
}

ColorSet RandomAlice::respond(const GameState& state, int vertex) {
  const int t = cfg_.t;
  const int ncells = t * (t + 1);  // covers [0, t + 1)
  if (static_cast<int>(cells_.size()) != vertex)
    fail(Errc::bad_params, "random strategy expects vertices in arrival order");
  std::set<int> blocked;
  for (int u : state.graph().blue_neighbors(vertex))
    if (u < vertex)
      for (int c : cells_[u]) blocked.insert(c);
  std::vector<int> free;
  for (int c = 1; c <= ncells; ++c)
    if (!blocked.count(c)) free.push_back(c);
  if (static_cast<int>(free.size()) < t)
    fail(Errc::palette_exhausted, "fewer than t unblocked cells");
  std::shuffle(free.begin(), free.end(), rng_);
  std::vector<int> mine(free.begin(), free.begin() + t);
  std::sort(mine.begin(), mine.end());
  cells_.push_back(mine);
  return ColorSet::from_cells(mine, t);
}

Lemma2Report lemma2_check(const RBGraph& g, const std::vector<int>& clique,
                          const std::vector<std::vector<int>>& gamma, int t) {
  Lemma2Report rep;
  const int s = static_cast<int>(clique.size());
  if (!g.is_clique(clique)) return rep;

  std::set<int> all;
  for (int i = 0; i < s; ++i) {
    const auto& gi = gamma.at(clique[i]);
    if (static_cast<int>(gi.size()) != t) return rep;
    all.insert(gi.begin(), gi.end());
    for (int j = i + 1; j < s; ++j) {
      const auto& gj = gamma.at(clique[j]);
      int shared = 0;
      for (int c : gi) shared += std::count(gj.begin(), gj.end(), c);
      auto col = g.edge_color(clique[i], clique[j]);
      if (*col == EdgeColor::Blue && shared != 0) return rep;
      if (*col == EdgeColor::Red && shared != 1) return rep;
    }
  }
  rep.hypotheses_ok = true;

  RBGraph sub(s);
  for (int i = 0; i < s; ++i)
    for (int j = i + 1; j < s; ++j)
      sub.add_edge(i, j, *g.edge_color(clique[i], clique[j]));
  rep.blue_clique = clique_number(sub, CliqueScope::BlueOnly);
  rep.union_size = static_cast<int>(all.size());
  rep.bound = s * (t - 1) + rep.blue_clique;
  rep.holds = rep.union_size <= rep.bound;
  return rep;
}

}  // namespace fractw
