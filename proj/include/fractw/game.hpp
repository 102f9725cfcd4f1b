#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fractw/color_set.hpp"
#include "fractw/rational.hpp"
#include "fractw/rbgraph.hpp"
#include "fractw/witness.hpp"

namespace fractw {

struct GameConfig {
  int t = 2;
  int omega = 2;

  // Requires t >= 1 and 2 <= omega <= t, except that trees (t = 1) are
  // played with omega = 2, which the blue forest satisfies vacuously.
  void validate() const;
  // Measure of the palette Alice's greedy strategy never exceeds.
  Rational greedy_window() const;  // t + (omega - 1) / t
};

// One of Bob's moves: a new vertex attached to `back`, with `colors[i]` the
// colour of the edge to `back[i]`. The attachment set must be a clique of at
// most t vertices; the referee extends it to a full t-clique with red edges.
struct BobMove {
  std::vector<int> back;
  std::vector<EdgeColor> colors;
};

// True when `blues` already spans an all-blue clique on omega vertices, so a
// new vertex joined blue to all of them would close a blue K_{omega+1}.
bool closes_blue_clique(const RBGraph& g, const std::vector<int>& blues, int omega);

// Referee for the online colouring game. The board starts with a red
// t-clique whose vertices Alice must colour before Bob's first move; after
// that, moves alternate Bob then Alice. All rule checks happen before any
// mutation, so a rejected move leaves the state untouched.
class GameState {
 public:
  explicit GameState(GameConfig cfg);

  const GameConfig& config() const { return cfg_; }
  const RBGraph& graph() const { return g_; }
  const EliminationWitness& witness() const { return w_; }
  const std::vector<std::optional<ColorSet>>& coloring() const { return phi_; }

  bool alice_to_move() const { return pending_ >= 0; }
  int pending_vertex() const { return pending_; }
  int turns_played() const { return turns_; }  // Bob moves accepted so far

  // Validates and applies Bob's move; returns the new vertex id.
  int bob_move(const BobMove& m);
  // Validates and applies Alice's response for the pending vertex.
  void alice_move(const ColorSet& phi);

  ColorSet union_phi() const;
  ColorSet union_phi(const std::vector<int>& verts) const;
  Rational total_measure() const { return union_phi().measure(); }

  // Full invariant sweep (witness validity, measures, blue disjointness,
  // blue clique bound); empty when everything holds.
  std::optional<std::string> audit() const;

 private:
  GameConfig cfg_;
  RBGraph g_;
  EliminationWitness w_;
  std::vector<std::optional<ColorSet>> phi_;
  int pending_ = -1;
  int turns_ = 0;

  void advance_pending();
};

class AliceStrategy {
 public:
  virtual ~AliceStrategy() = default;
  virtual void reset(const GameConfig&) {}
  virtual ColorSet respond(const GameState& state, int vertex) = 0;
};

class BobStrategy {
 public:
  virtual ~BobStrategy() = default;
  virtual void reset(const GameConfig&) {}
  // Empty result ends the game.
  virtual std::optional<BobMove> next_move(const GameState& state) = 0;
};

struct GameRecord {
  GameConfig cfg;
  struct Move {
    int vertex = -1;  // id assigned by the referee
    BobMove move;     // as submitted, before red padding
    ColorSet phi;     // Alice's response
  };
  std::vector<ColorSet> initial;  // Alice's sets for the starting clique
  std::vector<Move> moves;
  Rational total;  // measure of the union of all of Alice's sets

  // Final board, for inspection after the game.
  RBGraph graph;
  EliminationWitness witness;
  std::vector<ColorSet> phi;  // per vertex
};

// Plays a full game. With audit_each set, every turn ends with a full
// invariant sweep and any violation is thrown as an Error.
GameRecord run_game(const GameConfig& cfg, AliceStrategy& alice, BobStrategy& bob,
                    bool audit_each = false);

// Replays recorded Bob moves against a fresh Alice.
GameRecord replay_moves(const GameConfig& cfg, const std::vector<BobMove>& moves,
                        AliceStrategy& alice, bool audit_each = false);

}  // namespace fractw
