#include "fractw/chif.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>

#include <json.hpp>

#include "fractw/error.hpp"
#include "fractw/simplex.hpp"

namespace fractw {

namespace {

using std::uint64_t;

uint64_t bit(int v) { return uint64_t(1) << v; }

// Bron-Kerbosch with pivoting on the complement graph: maximal cliques of
// the complement are exactly the maximal independent sets.
struct MisEnum {
  int n;
  std::vector<uint64_t> nbr;  // complement adjacency
  std::vector<uint64_t> out;

  void run(uint64_t r, uint64_t p, uint64_t x) {
    if (!p && !x) {
      out.push_back(r);
      return;
    }
    uint64_t px = p | x;
    int pivot = -1, best = -1;
    for (uint64_t s = px; s;) {
      int u = std::countr_zero(s);
      s &= s - 1;
      int gain = std::popcount(p & nbr[u]);
      if (gain > best) {
        best = gain;
        pivot = u;
      }
    }
    uint64_t cand = p & ~nbr[pivot];
    while (cand) {
      int v = std::countr_zero(cand);
      cand &= cand - 1;
      run(r | bit(v), p & nbr[v], x & nbr[v]);
      p &= ~bit(v);
      x |= bit(v);
    }
  }
};

}  // namespace

int mis_guard() {
  if (const char* env = std::getenv("FRACTW_GUARD_N")) {
    int v = std::atoi(env);
    if (v > 0) return std::min(v, 62);
  }
  return 30;
}

std::vector<uint64_t> enumerate_mis(const RBGraph& g) {
  const int n = g.vertex_count();
  const int guard = mis_guard();
  if (n > guard)
    fail(Errc::size_guard, "graph has " + std::to_string(n) +
                               " vertices, independent-set guard is " + std::to_string(guard));
  if (n == 0) return {};
  MisEnum e;
  e.n = n;
  uint64_t all = (n == 64) ? ~uint64_t(0) : (uint64_t(1) << n) - 1;
  e.nbr.assign(n, 0);
  g.for_each_edge([&](int u, int v, EdgeColor) {
    e.nbr[u] |= bit(v);
    e.nbr[v] |= bit(u);
  });
  for (int v = 0; v < n; ++v) e.nbr[v] = all & ~e.nbr[v] & ~bit(v);
  e.run(0, all, 0);
  std::sort(e.out.begin(), e.out.end());
  return e.out;
}

ChifCertificate chif_exact(const RBGraph& g) {
  ChifCertificate cert;
  cert.n = g.vertex_count();
  cert.sets = enumerate_mis(g);
  if (cert.n == 0) {
    cert.value = 0;
    return cert;
  }
  const int m = static_cast<int>(cert.sets.size());
  const int n = cert.n;
  // Packing side: max 1'y with y summing to at most one on each maximal
  // independent set. Its dual weights the sets and is the fractional cover.
  std::vector<std::vector<Rational>> A(m, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < m; ++i)
    for (int v = 0; v < n; ++v)
      if (cert.sets[i] & bit(v)) A[i][v] = 1;
  SimplexResult lp =
      solve_packing(A, std::vector<Rational>(m, rat(1)), std::vector<Rational>(n, rat(1)));
  cert.value = lp.value;
  cert.vertex_weights = lp.primal;
  cert.cover_weights = lp.dual;
  if (auto err = verify_chif_certificate(g, cert))
    fail(Errc::bad_params, "internal: simplex produced an invalid certificate: " + *err);
  return cert;
}

std::optional<std::string> verify_chif_certificate(const RBGraph& g,
                                                   const ChifCertificate& cert) {
  const int n = g.vertex_count();
  if (cert.n != n) return "certificate is for a different vertex count";
  if (n == 0) return cert.value == 0 ? std::nullopt : std::make_optional("empty graph needs value 0");
  if (cert.sets.size() != cert.cover_weights.size()) return "cover weight count mismatch";
  if (static_cast<int>(cert.vertex_weights.size()) != n) return "vertex weight count mismatch";

  std::vector<uint64_t> nbr(n, 0);
  g.for_each_edge([&](int u, int v, EdgeColor) {
    nbr[u] |= bit(v);
    nbr[v] |= bit(u);
  });
  for (std::size_t i = 0; i < cert.sets.size(); ++i) {
    uint64_t s = cert.sets[i];
    if (n < 64 && (s >> n)) return "set " + std::to_string(i) + " mentions unknown vertices";
    for (uint64_t t = s; t;) {
      int v = std::countr_zero(t);
      t &= t - 1;
      if (s & nbr[v]) return "set " + std::to_string(i) + " is not independent";
    }
    if (cert.cover_weights[i] < 0) return "negative cover weight";
  }
  // Cover feasibility: each vertex receives total weight at least one.
  for (int v = 0; v < n; ++v) {
    Rational got = 0;
    for (std::size_t i = 0; i < cert.sets.size(); ++i)
      if (cert.sets[i] & bit(v)) got += cert.cover_weights[i];
    if (got < 1) return "vertex " + std::to_string(v) + " is under-covered";
  }
  // Packing feasibility must hold against every maximal independent set of
  // the graph, not only the listed ones.
  for (int v = 0; v < n; ++v)
    if (cert.vertex_weights[v] < 0) return "negative vertex weight";
  Rational packed = 0;
  for (const auto& y : cert.vertex_weights) packed += y;
  for (uint64_t s : enumerate_mis(g)) {
    Rational tot = 0;
    for (uint64_t t = s; t;) {
      int v = std::countr_zero(t);
      t &= t - 1;
      tot += cert.vertex_weights[v];
    }
    if (tot > 1) return "vertex weights overload an independent set";
  }
  Rational covered = 0;
  for (const auto& x : cert.cover_weights) covered += x;
  if (covered != cert.value) return "cover total differs from claimed value";
  if (packed != cert.value) return "packing total differs from claimed value";
  return std::nullopt;
}

bool bfold_colorable(const RBGraph& g, int a, int b) {
  if (a < 1 || b < 1 || b > a) fail(Errc::bad_params, "need 1 <= b <= a");
  if (a > 62) fail(Errc::too_large, "more than 62 colours");
  const int n = g.vertex_count();
  if (n == 0) return true;

  // All b-subsets of {0..a-1} as masks, ascending.
  std::vector<uint64_t> palettes;
  uint64_t start = (uint64_t(1) << b) - 1;
  uint64_t limit = uint64_t(1) << a;
  for (uint64_t s = start; s < limit;) {
    palettes.push_back(s);
    if (palettes.size() > 100000) fail(Errc::too_large, "too many colour sets");
    uint64_t c = s & -s, r = s + c;
    s = r | (((s ^ r) >> 2) / c);
  }

  std::vector<uint64_t> chosen(n, 0);
  std::vector<std::vector<int>> earlier(n);
  for (int v = 0; v < n; ++v)
    for (const auto& [u, _] : g.neighbors(v))
      if (u < v) earlier[v].push_back(u);

  std::vector<std::size_t> idx(n, 0);
  int v = 0;
  while (v >= 0 && v < n) {
    bool placed = false;
    // Colour symmetry: the first vertex may take the first palette only.
    std::size_t stop = (v == 0) ? 1 : palettes.size();
    for (std::size_t& i = idx[v]; i < stop; ++i) {
      uint64_t p = palettes[i];
      bool ok = true;
      for (int u : earlier[v])
        if (chosen[u] & p) {
          ok = false;
          break;
        }
      if (ok) {
        chosen[v] = p;
        ++i;
        placed = true;
        break;
      }
    }
    if (placed) {
      ++v;
      if (v < n) idx[v] = 0;
    } else {
      --v;
    }
  }
  return v == n;
}

std::string certificate_to_json(const ChifCertificate& cert) {
  nlohmann::json j;
  j["n"] = cert.n;
  j["value"] = rat_str(cert.value);
  nlohmann::json sets = nlohmann::json::array();
  for (uint64_t s : cert.sets) {
    nlohmann::json one = nlohmann::json::array();
    for (uint64_t t = s; t;) {
      int v = std::countr_zero(t);
      t &= t - 1;
      one.push_back(v + 1);
    }
    sets.push_back(one);
  }
  j["sets"] = sets;
  nlohmann::json cw = nlohmann::json::array();
  for (const auto& x : cert.cover_weights) cw.push_back(rat_str(x));
  j["cover_weights"] = cw;
  nlohmann::json vw = nlohmann::json::array();
  for (const auto& y : cert.vertex_weights) vw.push_back(rat_str(y));
  j["vertex_weights"] = vw;
  return j.dump(2);
}

ChifCertificate certificate_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::parse_error, std::string("certificate json: ") + e.what());
  }
  try {
    ChifCertificate cert;
    cert.n = j.at("n").get<int>();
    cert.value = rat_parse(j.at("value").get<std::string>());
    for (const auto& one : j.at("sets")) {
      uint64_t s = 0;
      for (int v : one) {
        if (v < 1 || v > cert.n) fail(Errc::parse_error, "certificate vertex out of range");
        s |= bit(v - 1);
      }
      cert.sets.push_back(s);
    }
    for (const auto& x : j.at("cover_weights"))
      cert.cover_weights.push_back(rat_parse(x.get<std::string>()));
    for (const auto& y : j.at("vertex_weights"))
      cert.vertex_weights.push_back(rat_parse(y.get<std::string>()));
    return cert;
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::parse_error, std::string("certificate json: ") + e.what());
  }
}

}  // namespace fractw
