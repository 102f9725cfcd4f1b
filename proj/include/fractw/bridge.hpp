#pragma once

#include <vector>

#include "fractw/alice.hpp"
#include "fractw/game.hpp"
#include "fractw/witness.hpp"

namespace fractw {

// A fractional colouring of a graph obtained by playing it through the game:
// unit-measure colour sets, disjoint across edges, drawn from a pool of total
// measure `total`. Any such colouring certifies chi_f <= total.
struct FractionalColoring {
  GameConfig host;             // parameters of the game that produced it
  std::vector<ColorSet> phi;   // one set per vertex of the input graph
  Rational total;              // measure of the union over the input graph
};

// nullopt when the colouring is valid for g; otherwise a violation message.
std::optional<std::string> verify_fractional_coloring(const RBGraph& g,
                                                      const FractionalColoring& fc);

// Feeds g (every edge treated as an edge, colours ignored) to Alice along the
// witness order: each vertex arrives attached blue to its graph neighbours
// and red along the remaining completion edges. The blue part of the final
// board is exactly g, so Alice's sets restrict to a fractional colouring.
FractionalColoring color_graph_via_alice(const RBGraph& g, const EliminationWitness& w,
                                         AliceStrategy& alice);
// Same, with a greedy witness.
FractionalColoring color_graph_via_alice(const RBGraph& g, AliceStrategy& alice);

}  // namespace fractw
