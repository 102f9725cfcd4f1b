#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace fractw {

enum class EdgeColor { Red, Blue };

char edge_color_char(EdgeColor c);
EdgeColor edge_color_from_char(char c);

// Simple undirected graph whose every edge carries one Red/Blue label.
// Ordered adjacency maps keep iteration deterministic.
class RBGraph {
public:
  RBGraph() = default;
  explicit RBGraph(int n);

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return edge_count_; }

  int add_vertex();
  void add_edge(int u, int v, EdgeColor color);

  bool has_edge(int u, int v) const;
  std::optional<EdgeColor> edge_color(int u, int v) const;

  const std::map<int, EdgeColor>& neighbors(int v) const;
  std::vector<int> red_neighbors(int v) const;
  std::vector<int> blue_neighbors(int v) const;
  int degree(int v) const;

  bool is_clique(const std::vector<int>& verts) const;

  // Same vertex set, Blue edges only. The blue subgraph is the real graph;
  // red edges are scaffolding.
  RBGraph blue_subgraph() const;

  void for_each_edge(const std::function<void(int, int, EdgeColor)>& fn) const;

private:
  void check_vertex(int v) const;

  std::vector<std::map<int, EdgeColor>> adj_;
  int edge_count_ = 0;
};

}  // namespace fractw
