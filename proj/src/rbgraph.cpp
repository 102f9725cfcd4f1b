#include "fractw/rbgraph.hpp"

#include <string>

#include "fractw/error.hpp"

namespace fractw {

char edge_color_char(EdgeColor c) { return c == EdgeColor::Red ? 'r' : 'b'; }

EdgeColor edge_color_from_char(char c) {
  if (c == 'R' || c == 'r') return EdgeColor::Red;
  if (c == 'B' || c == 'b') return EdgeColor::Blue;
  fail(Errc::parse_error, std::string("unknown edge color '") + c + "'");
}

RBGraph::RBGraph(int n) {
  if (n < 0) fail(Errc::bad_params, "negative vertex count");
  adj_.resize(static_cast<std::size_t>(n));
}

int RBGraph::add_vertex() {
  adj_.emplace_back();
  return vertex_count() - 1;
}

void RBGraph::check_vertex(int v) const {
  if (v < 0 || v >= vertex_count())
    fail(Errc::bad_params, "vertex " + std::to_string(v) + " out of range");
}

void RBGraph::add_edge(int u, int v, EdgeColor color) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) fail(Errc::bad_params, "loop at vertex " + std::to_string(u));
  if (has_edge(u, v))
    fail(Errc::bad_params, "duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
  adj_[u][v] = color;
  adj_[v][u] = color;
  ++edge_count_;
}

bool RBGraph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return adj_[u].count(v) != 0;
}

std::optional<EdgeColor> RBGraph::edge_color(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  auto it = adj_[u].find(v);
  if (it == adj_[u].end()) return std::nullopt;
  return it->second;
}

const std::map<int, EdgeColor>& RBGraph::neighbors(int v) const {
  check_vertex(v);
  return adj_[v];
}

std::vector<int> RBGraph::red_neighbors(int v) const {
  check_vertex(v);
  std::vector<int> out;
  for (const auto& [u, c] : adj_[v])
    if (c == EdgeColor::Red) out.push_back(u);
  return out;
}

std::vector<int> RBGraph::blue_neighbors(int v) const {
  check_vertex(v);
  std::vector<int> out;
  for (const auto& [u, c] : adj_[v])
    if (c == EdgeColor::Blue) out.push_back(u);
  return out;
}

int RBGraph::degree(int v) const {
  check_vertex(v);
  return static_cast<int>(adj_[v].size());
}

bool RBGraph::is_clique(const std::vector<int>& verts) const {
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (!has_edge(verts[i], verts[j])) return false;
  return true;
}

RBGraph RBGraph::blue_subgraph() const {
  RBGraph out(vertex_count());
  for_each_edge([&](int u, int v, EdgeColor c) {
    if (c == EdgeColor::Blue) out.add_edge(u, v, EdgeColor::Blue);
  });
  return out;
}

void RBGraph::for_each_edge(const std::function<void(int, int, EdgeColor)>& fn) const {
  for (int u = 0; u < vertex_count(); ++u)
    for (const auto& [v, c] : adj_[u])
      if (u < v) fn(u, v, c);
}

}  // namespace fractw
