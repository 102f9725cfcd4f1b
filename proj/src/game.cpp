#include "fractw/game.hpp"

#include <algorithm>
#include <set>

#include "fractw/clique.hpp"
#include "fractw/error.hpp"

namespace fractw {

void GameConfig::validate() const {
  if (t < 1) fail(Errc::bad_params, "t must be at least 1");
  if (omega < 2) fail(Errc::bad_params, "omega must be at least 2");
  if (omega > std::max(t, 2))
    fail(Errc::bad_params, "omega must not exceed t (omega 2 is allowed for trees)");
}

Rational GameConfig::greedy_window() const { return rat(t) + rat(omega - 1, t); }

GameState::GameState(GameConfig cfg) : cfg_(cfg) {
  cfg_.validate();
  for (int i = 0; i < cfg_.t; ++i) g_.add_vertex();
  for (int i = 0; i < cfg_.t; ++i)
    for (int j = i + 1; j < cfg_.t; ++j) g_.add_edge(i, j, EdgeColor::Red);
  w_.width = cfg_.t;
  for (int i = 0; i < cfg_.t; ++i) {
    w_.order.push_back(i);
    w_.back.emplace_back();
  }
  phi_.assign(cfg_.t, std::nullopt);
  pending_ = 0;  // Alice colours the starting clique first
}

void GameState::advance_pending() {
  pending_ = -1;
  for (int i = 0; i < cfg_.t; ++i)
    if (!phi_[i]) {
      pending_ = i;
      return;
    }
}

namespace {

// Depth-first search for a t-clique containing `base` in a graph known to be
// a t-tree; exists by the small-clique extension lemma. Lowest candidate
// first for determinism.
bool extend_to_clique(const RBGraph& g, std::vector<int>& cur, int want) {
  if (static_cast<int>(cur.size()) == want) return true;
  std::vector<int> cands;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (std::find(cur.begin(), cur.end(), v) != cur.end()) continue;
    bool ok = true;
    for (int u : cur)
      if (!g.has_edge(u, v)) {
        ok = false;
        break;
      }
    if (ok) cands.push_back(v);
  }
  for (int v : cands) {
    cur.push_back(v);
    if (extend_to_clique(g, cur, want)) return true;
    cur.pop_back();
  }
  return false;
}

}  // namespace

bool closes_blue_clique(const RBGraph& g, const std::vector<int>& blues, int omega) {
  if (static_cast<int>(blues.size()) < omega) return false;
  // Exhaustive search for a blue omega-clique among the blue endpoints; there
  // are at most t of them.
  std::vector<int> sub;
  auto search = [&](auto&& self, std::size_t from) -> bool {
    if (static_cast<int>(sub.size()) == omega) return true;
    for (std::size_t i = from; i < blues.size(); ++i) {
      bool ok = true;
      for (int u : sub) {
        auto c = g.edge_color(u, blues[i]);
        if (!c || *c != EdgeColor::Blue) {
          ok = false;
          break;
        }
      }
      if (ok) {
        sub.push_back(blues[i]);
        if (self(self, i + 1)) return true;
        sub.pop_back();
      }
    }
    return false;
  };
  return search(search, 0);
}

int GameState::bob_move(const BobMove& m) {
  if (alice_to_move())
    fail(Errc::game_over, "Alice has not responded to vertex " + std::to_string(pending_));
  if (m.back.size() != m.colors.size())
    fail(Errc::bad_params, "attachment set and colour list differ in length");
  if (static_cast<int>(m.back.size()) > cfg_.t)
    fail(Errc::bad_params, "more than t back-neighbors");
  std::set<int> seen;
  for (int u : m.back) {
    if (u < 0 || u >= g_.vertex_count())
      fail(Errc::bad_params, "unknown vertex " + std::to_string(u));
    if (!seen.insert(u).second) fail(Errc::bad_params, "repeated back-neighbor");
  }
  if (!g_.is_clique(m.back)) fail(Errc::not_a_clique, "attachment set is not a clique");

  // Extend to a full t-clique; the extra edges will be red.
  std::vector<int> full = m.back;
  std::sort(full.begin(), full.end());
  if (!extend_to_clique(g_, full, cfg_.t))
    fail(Errc::no_extension, "attachment set extends to no t-clique");

  // The blue endpoints must not already span a blue clique of size omega.
  std::vector<int> blues;
  for (std::size_t i = 0; i < m.back.size(); ++i)
    if (m.colors[i] == EdgeColor::Blue) blues.push_back(m.back[i]);
  if (closes_blue_clique(g_, blues, cfg_.omega))
    fail(Errc::blue_clique_violation,
         "move would complete an all-blue clique on " + std::to_string(cfg_.omega + 1) +
             " vertices");

  int v = g_.add_vertex();
  for (std::size_t i = 0; i < m.back.size(); ++i) g_.add_edge(v, m.back[i], m.colors[i]);
  for (int u : full)
    if (std::find(m.back.begin(), m.back.end(), u) == m.back.end())
      g_.add_edge(v, u, EdgeColor::Red);
  w_.order.push_back(v);
  w_.back.push_back(full);
  phi_.emplace_back(std::nullopt);
  pending_ = v;
  ++turns_;
  return v;
}

void GameState::alice_move(const ColorSet& phi) {
  if (!alice_to_move()) fail(Errc::game_over, "no vertex awaits a colour set");
  if (phi.measure() != 1)
    fail(Errc::wrong_measure, "colour set has measure " + rat_str(phi.measure()));
  for (int u : g_.blue_neighbors(pending_))
    if (phi_[u] && !phi.disjoint_with(*phi_[u]))
      fail(Errc::blue_conflict,
           "colour set meets blue neighbor " + std::to_string(u) + "'s set");
  phi_[pending_] = phi;
  advance_pending();
}

ColorSet GameState::union_phi() const {
  ColorSet all;
  for (const auto& p : phi_)
    if (p) all = all.unite(*p);
  return all;
}

ColorSet GameState::union_phi(const std::vector<int>& verts) const {
  ColorSet all;
  for (int v : verts) {
    if (v < 0 || v >= static_cast<int>(phi_.size()))
      fail(Errc::bad_params, "unknown vertex " + std::to_string(v));
    if (phi_[v]) all = all.unite(*phi_[v]);
  }
  return all;
}

std::optional<std::string> GameState::audit() const {
  if (auto err = verify_witness(g_, w_)) return "witness: " + *err;
  if (w_.width > cfg_.t) return "witness width exceeds t";
  for (int v = 0; v < g_.vertex_count(); ++v) {
    if (!phi_[v]) {
      if (v != pending_ && v >= cfg_.t) return "uncoloured non-pending vertex";
      continue;
    }
    if (phi_[v]->measure() != 1) return "vertex " + std::to_string(v) + " has wrong measure";
  }
  std::optional<std::string> bad;
  g_.for_each_edge([&](int u, int v, EdgeColor c) {
    if (bad || c != EdgeColor::Blue) return;
    if (phi_[u] && phi_[v] && !phi_[u]->disjoint_with(*phi_[v]))
      bad = "blue edge " + std::to_string(u) + "-" + std::to_string(v) +
            " with overlapping sets";
  });
  if (bad) return bad;
  if (g_.vertex_count() <= 64) {
    if (clique_number(g_, CliqueScope::BlueOnly) > cfg_.omega)
      return "blue clique exceeds omega";
  }
  return std::nullopt;
}

namespace {

void respond_and_check(GameState& state, AliceStrategy& alice, int v, ColorSet& out) {
  out = alice.respond(state, v);
  state.alice_move(out);
}

}  // namespace

GameRecord run_game(const GameConfig& cfg, AliceStrategy& alice, BobStrategy& bob,
                    bool audit_each) {
  cfg.validate();
  GameState state(cfg);
  alice.reset(cfg);
  bob.reset(cfg);
  GameRecord rec;
  rec.cfg = cfg;
  while (state.alice_to_move()) {
    ColorSet s;
    respond_and_check(state, alice, state.pending_vertex(), s);
    rec.initial.push_back(s);
  }
  if (audit_each)
    if (auto err = state.audit()) fail(Errc::illegal_coloring, *err);
  while (auto m = bob.next_move(state)) {
    GameRecord::Move mv;
    mv.move = *m;
    mv.vertex = state.bob_move(*m);
    respond_and_check(state, alice, mv.vertex, mv.phi);
    rec.moves.push_back(std::move(mv));
    if (audit_each)
      if (auto err = state.audit()) fail(Errc::illegal_coloring, *err);
  }
  rec.total = state.total_measure();
  rec.graph = state.graph();
  rec.witness = state.witness();
  for (const auto& p : state.coloring()) rec.phi.push_back(p.value_or(ColorSet()));
  return rec;
}

namespace {

class ScriptedBob : public BobStrategy {
 public:
  explicit ScriptedBob(const std::vector<BobMove>& moves) : moves_(moves) {}
  std::optional<BobMove> next_move(const GameState&) override {
    if (at_ >= moves_.size()) return std::nullopt;
    return moves_[at_++];
  }

 private:
  const std::vector<BobMove>& moves_;
  std::size_t at_ = 0;
};

}  // namespace

GameRecord replay_moves(const GameConfig& cfg, const std::vector<BobMove>& moves,
                        AliceStrategy& alice, bool audit_each) {
  ScriptedBob bob(moves);
  return run_game(cfg, alice, bob, audit_each);
}

}  // namespace fractw
