#pragma once

#include <vector>

#include "fractw/rbgraph.hpp"
#include "fractw/witness.hpp"

namespace fractw {

// A board containing every position Bob can reach in a bounded number of
// breadth-first rounds: starting from the red t-clique, each round snapshots
// all t-cliques of the current board and attaches, for every clique and every
// red/blue colour pattern, one child vertex - skipping patterns whose blue
// endpoints already span a blue omega-clique.
struct UniversalBoard {
  RBGraph graph;
  EliminationWitness witness;
  std::vector<int> added_per_round;
};

// Grows combinatorially; guarded to t <= 3 and rounds <= 2.
UniversalBoard materialize_universal(int t, int omega, int rounds);

}  // namespace fractw
