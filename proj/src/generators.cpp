#include "fractw/generators.hpp"

#include <algorithm>
#include <bit>

#include "fractw/clique.hpp"
#include "fractw/error.hpp"

namespace fractw {

namespace {

Gadget finish(std::string name, RBGraph g, EliminationWitness w, const Rational& expect_q) {
  Gadget gd;
  gd.name = std::move(name);
  gd.clique_no = clique_number(g);
  gd.cert = chif_exact(g);
  if (auto err = verify_witness(g, w))
    fail(Errc::witness_invalid, gd.name + ": " + *err);
  if (gd.cert.value != expect_q)
    fail(Errc::bad_params, gd.name + ": oracle value " + rat_str(gd.cert.value) +
                               " differs from expected " + rat_str(expect_q));
  gd.graph = std::move(g);
  gd.witness = std::move(w);
  return gd;
}

}  // namespace

RBGraph gen_clique(int m, EdgeColor c) {
  if (m < 1) fail(Errc::bad_params, "clique needs at least one vertex");
  RBGraph g(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) g.add_edge(i, j, c);
  return g;
}

RBGraph gen_cycle(int n, EdgeColor c) {
  if (n < 3) fail(Errc::bad_params, "cycle needs at least three vertices");
  RBGraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n, c);
  return g;
}

RBGraph gen_kneser(int n, int k) {
  if (k < 1 || n < 2 * k) fail(Errc::bad_params, "kneser needs n >= 2k >= 2");
  if (n > 20) fail(Errc::too_large, "kneser ground set capped at 20");
  std::vector<unsigned> subsets;
  for (unsigned s = 0; s < (1u << n); ++s)
    if (std::popcount(s) == k) subsets.push_back(s);
  RBGraph g(static_cast<int>(subsets.size()));
  for (std::size_t i = 0; i < subsets.size(); ++i)
    for (std::size_t j = i + 1; j < subsets.size(); ++j)
      if (!(subsets[i] & subsets[j]))
        g.add_edge(static_cast<int>(i), static_cast<int>(j), EdgeColor::Blue);
  return g;
}

RBGraph gen_mycielski(const RBGraph& g) {
  const int n = g.vertex_count();
  if (n == 0) fail(Errc::bad_params, "mycielski of the empty graph");
  RBGraph m(2 * n + 1);
  const int z = 2 * n;
  g.for_each_edge([&](int u, int v, EdgeColor c) {
    if (c != EdgeColor::Blue) return;
    m.add_edge(u, v, EdgeColor::Blue);
    m.add_edge(u, n + v, EdgeColor::Blue);
    m.add_edge(v, n + u, EdgeColor::Blue);
  });
  for (int v = 0; v < n; ++v) m.add_edge(n + v, z, EdgeColor::Blue);
  return m;
}

Gadget gadget_clique(int m) {
  RBGraph g = gen_clique(m);
  EliminationWitness w;
  w.width = m - 1;
  for (int v = 0; v < m; ++v) {
    w.order.push_back(v);
    std::vector<int> back;
    for (int u = 0; u < v; ++u) back.push_back(u);
    w.back.push_back(back);
  }
  return finish("clique:" + std::to_string(m), std::move(g), std::move(w), rat(m));
}

Gadget gadget_cycle(int n) {
  if (n < 3 || n % 2 == 0) fail(Errc::bad_params, "gadget cycles must be odd, n >= 3");
  RBGraph g = gen_cycle(n);
  EliminationWitness w;
  w.width = 2;
  for (int v = 0; v < n; ++v) {
    w.order.push_back(v);
    if (v == 0)
      w.back.push_back({});
    else if (v == 1)
      w.back.push_back({0});
    else
      w.back.push_back({v - 1, 0});
  }
  return finish("cycle:" + std::to_string(n), std::move(g), std::move(w), rat(n, n / 2));
}

Gadget gadget_kneser(int n, int k) {
  RBGraph g = gen_kneser(n, k);
  EliminationWitness w = greedy_width_witness(g);
  return finish("kneser:" + std::to_string(n) + "," + std::to_string(k), std::move(g),
                std::move(w), rat(n, k));
}

Gadget gadget_mycielski(const Gadget& base) {
  RBGraph g = gen_mycielski(base.graph);
  EliminationWitness w = greedy_width_witness(g);
  Rational q = base.q() + 1 / base.q();
  return finish("mycielski:" + base.name, std::move(g), std::move(w), q);
}

const std::vector<Gadget>& gadget_registry() {
  static const std::vector<Gadget> reg = [] {
    std::vector<Gadget> v;
    v.push_back(gadget_cycle(5));
    v.push_back(gadget_cycle(7));
    v.push_back(gadget_cycle(9));
    v.push_back(gadget_mycielski(gadget_cycle(5)));
    return v;
  }();
  return reg;
}

Gadget gadget_by_name(const std::string& spec) {
  auto bad = [&]() -> Gadget {
    fail(Errc::bad_params, "unknown gadget '" + spec + "'");
  };
  auto colon = spec.find(':');
  if (colon == std::string::npos) return bad();
  std::string kind = spec.substr(0, colon), rest = spec.substr(colon + 1);
  try {
    if (kind == "clique") return gadget_clique(std::stoi(rest));
    if (kind == "cycle") return gadget_cycle(std::stoi(rest));
    if (kind == "kneser") {
      auto comma = rest.find(',');
      if (comma == std::string::npos) return bad();
      return gadget_kneser(std::stoi(rest.substr(0, comma)), std::stoi(rest.substr(comma + 1)));
    }
    if (kind == "mycielski") return gadget_mycielski(gadget_by_name(rest));
  } catch (const std::invalid_argument&) {
    return bad();
  } catch (const std::out_of_range&) {
    return bad();
  }
  return bad();
}

}  // namespace fractw
