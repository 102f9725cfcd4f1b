#pragma once

#include <random>
#include <vector>

#include "fractw/game.hpp"

namespace fractw {

// The palette strategy behind the t + (omega-1)/t upper bound. Every vertex
// receives t colours from {1, ..., t^2 + omega - 1}, kept disjoint across
// blue edges and overlapping in exactly one colour across red edges; the
// colour set is the union of the matching width-1/t cells.
class GreedyAlice : public AliceStrategy {
 public:
  void reset(const GameConfig& cfg) override;
  ColorSet respond(const GameState& state, int vertex) override;

  int palette_size() const { return palette_; }
  // Colour sets assigned so far, indexed by vertex; exposed for invariant
  // checks in tests.
  const std::vector<std::vector<int>>& gammas() const { return gamma_; }

 private:
  GameConfig cfg_;
  int palette_ = 0;
  std::vector<std::vector<int>> gamma_;
};

// Baseline: picks t legal cells uniformly at random out of [0, t + 1).
class RandomAlice : public AliceStrategy {
 public:
  explicit RandomAlice(std::uint64_t seed = 0) : seed_(seed) {}
  void reset(const GameConfig& cfg) override;
  ColorSet respond(const GameState& state, int vertex) override;

 private:
  GameConfig cfg_;
  std::uint64_t seed_;
  std::mt19937_64 rng_;
  std::vector<std::vector<int>> cells_;
};

// Counts the distinct colours on a red/blue-coloured clique whose colour
// sets follow the blue-disjoint / red-share-one rules, and compares against
// the worst case s(t-1) + w', where s is the clique size and w' its largest
// blue subclique.
struct Lemma2Report {
  int union_size = 0;
  int bound = 0;
  int blue_clique = 0;
  bool hypotheses_ok = false;
  bool holds = false;
};
Lemma2Report lemma2_check(const RBGraph& g, const std::vector<int>& clique,
                          const std::vector<std::vector<int>>& gamma, int t);

}  // namespace fractw
