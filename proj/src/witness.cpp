#include "fractw/witness.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "fractw/error.hpp"

namespace fractw {

namespace {

std::string vstr(int v) { return std::to_string(v); }

}  // namespace

std::optional<std::string> verify_witness(const RBGraph& g, const EliminationWitness& w) {
  const int n = g.vertex_count();
  if (w.width < 0) return "negative width";
  if (static_cast<int>(w.order.size()) != n) return "order length != vertex count";
  if (static_cast<int>(w.back.size()) != n) return "back table length != vertex count";

  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    int v = w.order[i];
    if (v < 0 || v >= n) return "order entry " + vstr(v) + " out of range";
    if (pos[v] != -1) return "vertex " + vstr(v) + " repeated in order";
    pos[v] = i;
  }

  // Completion: back-neighbor stars plus the initial clique.
  std::vector<std::vector<bool>> comp(n, std::vector<bool>(n, false));
  auto join = [&](int a, int b) { comp[a][b] = comp[b][a] = true; };
  const int init = std::min(w.width, n);
  for (int i = 0; i < init; ++i)
    for (int j = i + 1; j < init; ++j) join(w.order[i], w.order[j]);

  for (int v = 0; v < n; ++v) {
    const auto& bs = w.back[v];
    if (static_cast<int>(bs.size()) > w.width)
      return "vertex " + vstr(v) + " has " + vstr(static_cast<int>(bs.size())) +
             " back-neighbors, width is " + vstr(w.width);
    std::set<int> seen;
    for (int b : bs) {
      if (b < 0 || b >= n) return "back-neighbor " + vstr(b) + " out of range";
      if (!seen.insert(b).second) return "vertex " + vstr(v) + " repeats back-neighbor " + vstr(b);
      if (pos[b] >= pos[v])
        return "back-neighbor " + vstr(b) + " of " + vstr(v) + " does not precede it";
      join(v, b);
    }
  }

  for (int v = 0; v < n; ++v) {
    const auto& bs = w.back[v];
    for (std::size_t i = 0; i < bs.size(); ++i)
      for (std::size_t j = i + 1; j < bs.size(); ++j)
        if (!comp[bs[i]][bs[j]])
          return "back set of " + vstr(v) + " is not a clique in the completion (" +
                 vstr(bs[i]) + "-" + vstr(bs[j]) + " missing)";
  }

  std::optional<std::string> bad;
  g.for_each_edge([&](int u, int v, EdgeColor) {
    if (!bad && !comp[u][v]) bad = "edge " + vstr(u) + "-" + vstr(v) + " not covered";
  });
  return bad;
}

std::vector<int> completion_predecessors(const EliminationWitness& w, int pos) {
  if (pos < w.width)
    return {w.order.begin(), w.order.begin() + pos};
  return w.back[w.order[pos]];
}

EliminationWitness greedy_width_witness(const RBGraph& g) {
  const int n = g.vertex_count();
  std::vector<std::set<int>> adj(n);
  g.for_each_edge([&](int u, int v, EdgeColor) {
    adj[u].insert(v);
    adj[v].insert(u);
  });

  EliminationWitness w;
  w.back.resize(n);
  std::vector<bool> gone(n, false);
  std::vector<int> elim;
  elim.reserve(n);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (gone[v]) continue;
      if (best == -1 || adj[v].size() < adj[best].size()) best = v;
    }
    std::vector<int> nbrs(adj[best].begin(), adj[best].end());
    w.back[best] = nbrs;
    w.width = std::max(w.width, static_cast<int>(nbrs.size()));
    for (std::size_t i = 0; i < nbrs.size(); ++i)
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        adj[nbrs[i]].insert(nbrs[j]);
        adj[nbrs[j]].insert(nbrs[i]);
      }
    for (int u : nbrs) adj[u].erase(best);
    gone[best] = true;
    elim.push_back(best);
  }
  w.order.assign(elim.rbegin(), elim.rend());
  return w;
}

std::string witness_to_json(const EliminationWitness& w) {
  nlohmann::json j;
  j["width"] = w.width;
  nlohmann::json order = nlohmann::json::array();
  for (int v : w.order) order.push_back(v + 1);  // files are 1-indexed, like DIMACS
  j["order"] = order;
  nlohmann::json back = nlohmann::json::object();
  for (int v = 0; v < static_cast<int>(w.back.size()); ++v) {
    if (w.back[v].empty()) continue;
    nlohmann::json bs = nlohmann::json::array();
    for (int b : w.back[v]) bs.push_back(b + 1);
    back[std::to_string(v + 1)] = bs;
  }
  j["back"] = back;
  return j.dump();
}

EliminationWitness witness_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::parse_error, std::string("witness json: ") + e.what());
  }
  try {
    EliminationWitness w;
    w.width = j.at("width").get<int>();
    for (int v : j.at("order")) w.order.push_back(v - 1);
    w.back.resize(w.order.size());
    for (const auto& [key, val] : j.at("back").items()) {
      int v = std::stoi(key) - 1;
      if (v < 0 || v >= static_cast<int>(w.back.size()))
        fail(Errc::parse_error, "witness back key out of range: " + key);
      for (int b : val) w.back[v].push_back(b - 1);
    }
    return w;
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::parse_error, std::string("witness json: ") + e.what());
  }
}

void write_witness_file(const EliminationWitness& w, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(Errc::io_error, "cannot write " + path);
  out << witness_to_json(w) << "\n";
}

EliminationWitness read_witness_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::io_error, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return witness_from_json(ss.str());
}

}  // namespace fractw
