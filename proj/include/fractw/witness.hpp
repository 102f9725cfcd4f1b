#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fractw/rbgraph.hpp"

namespace fractw {

// Constructive certificate that a graph is a partial t-tree of width <= width:
// an insertion order plus, for each vertex, the set of earlier vertices it was
// attached to. The witnessed completion joins every vertex to its
// back-neighbors and completes the first `width` vertices of the order into a
// clique; back sets must be cliques in that completion.
struct EliminationWitness {
  int width = 0;
  std::vector<int> order;               // insertion order (vertex ids)
  std::vector<std::vector<int>> back;   // back[v] = back-neighbors of vertex v
};

// nullopt when the witness validates; otherwise a human-readable violation.
std::optional<std::string> verify_witness(const RBGraph& g, const EliminationWitness& w);

// Predecessors that realise the completion when the order is materialised
// left to right: the initial segment grows a clique, later vertices attach
// along their back sets. The result never exceeds `width` vertices.
std::vector<int> completion_predecessors(const EliminationWitness& w, int pos);

// Heuristic (min-degree elimination) witness for an arbitrary graph. Always
// valid; the width is whatever the heuristic achieves, not necessarily optimal.
EliminationWitness greedy_width_witness(const RBGraph& g);

std::string witness_to_json(const EliminationWitness& w);
EliminationWitness witness_from_json(const std::string& text);
void write_witness_file(const EliminationWitness& w, const std::string& path);
EliminationWitness read_witness_file(const std::string& path);

}  // namespace fractw
