#pragma once

#include <vector>

#include "fractw/rbgraph.hpp"

namespace fractw {

enum class CliqueScope { Any, BlueOnly };

// Exact maximum clique (branch-and-bound with a greedy colouring bound).
// Deterministic for a given graph; the returned witness is sorted. Graphs
// larger than `guard` vertices are rejected with SizeGuard; the
// implementation caps at 64 vertices.
std::vector<int> max_clique(const RBGraph& g, CliqueScope scope = CliqueScope::Any,
                            int guard = 64);

int clique_number(const RBGraph& g, CliqueScope scope = CliqueScope::Any, int guard = 64);

// True iff the vertices of `verts` are pairwise joined by blue edges.
bool is_blue_clique(const RBGraph& g, const std::vector<int>& verts);

}  // namespace fractw
