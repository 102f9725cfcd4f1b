#pragma once

#include <optional>
#include <random>
#include <vector>

#include "fractw/game.hpp"
#include "fractw/generators.hpp"

namespace fractw {

// Bob playing uniformly random legal attachments: a random clique of random
// size with random edge colours, re-coloured red where needed to stay legal.
class RandomBob : public BobStrategy {
 public:
  RandomBob(unsigned long long seed, int moves) : seed_(seed), moves_(moves) {}
  void reset(const GameConfig&) override;
  std::optional<BobMove> next_move(const GameState& state) override;

 private:
  unsigned long long seed_;
  int moves_;
  std::mt19937_64 rng_;
  int made_ = 0;
};

// One stage of the recursive adversary. The gadget's fractional chromatic
// number q forces some gadget vertex to overlap the stage pivot by at most
// 1/q of its measure.
struct AdversaryStage {
  Gadget gadget;
};

struct AdversaryPlan {
  GameConfig cfg;
  std::vector<AdversaryStage> stages;  // t - omega + 1 of them
  int tail = 0;                        // 2*omega - t - 1 closing vertices

  // What the construction forces from any Alice: t + 1 - sum_i 1/q_i.
  Rational guaranteed() const;
  // Checks the shape: (t+1)/2 <= omega <= t, stage count, and per stage i
  // width(gadget) <= t - 2i + 1 and clique(gadget) <= omega - i + 1.
  void validate() const;
};

// Stage i uses the complete graph on omega - i + 1 vertices, giving the
// closed-form bound t + 1 - sum 1/(omega - i + 1).
AdversaryPlan plan_corollary1(int t, int omega);
// Stage i uses the registered gadget of largest fractional chromatic number
// that fits the stage caps, with the complete graph as fallback.
AdversaryPlan plan_theorem3(int t, int omega);

struct ForcedBoundReport {
  AdversaryPlan plan;
  GameRecord record;
  std::vector<int> kprime;  // vertex ids of the forced clique on t+1 vertices
  struct Pair {
    int v = -1;        // stage pivot
    int u = -1;        // matched gadget vertex
    Rational overlap;  // mu(phi(v) cap phi(u))
    Rational cap;      // 1/q for the stage gadget
  };
  std::vector<Pair> pairs;  // the red matching, one per stage
  Rational union_measure;   // mu of Alice's sets over kprime
  Rational guaranteed;      // t + 1 - sum of caps
};

// Runs the construction against Alice and checks the forced bound exactly.
// Throws Errc::claim_violated if some stage's best overlap exceeds its cap,
// which a sound gadget certificate rules out.
ForcedBoundReport execute_adversary(const AdversaryPlan& plan, AliceStrategy& alice,
                                    bool audit_each = false);

}  // namespace fractw
