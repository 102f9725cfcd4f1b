#include "fractw/bob.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "fractw/error.hpp"

namespace fractw {

void RandomBob::reset(const GameConfig&) {
  rng_.seed(seed_);
  made_ = 0;
}

std::optional<BobMove> RandomBob::next_move(const GameState& state) {
  if (made_ >= moves_) return std::nullopt;
  ++made_;
  const RBGraph& g = state.graph();
  const GameConfig& cfg = state.config();

  // Grow a random clique of a random target size.
  int want = std::uniform_int_distribution<int>(1, cfg.t)(rng_);
  std::vector<int> clique{
      std::uniform_int_distribution<int>(0, g.vertex_count() - 1)(rng_)};
  while (static_cast<int>(clique.size()) < want) {
    std::vector<int> cands;
    for (const auto& [u, c] : g.neighbors(clique[0])) {
      (void)c;
      bool ok = true;
      for (std::size_t i = 1; i < clique.size() && ok; ++i) ok = g.has_edge(u, clique[i]);
      if (ok) cands.push_back(u);
    }
    if (cands.empty()) break;
    clique.push_back(cands[std::uniform_int_distribution<std::size_t>(0, cands.size() - 1)(rng_)]);
  }

  BobMove m;
  m.back = clique;
  for (std::size_t i = 0; i < clique.size(); ++i)
    m.colors.push_back(rng_() & 1 ? EdgeColor::Blue : EdgeColor::Red);

  // Re-colour random blue edges red until the move is legal; all-red always is.
  for (;;) {
    std::vector<std::size_t> blue_at;
    std::vector<int> blues;
    for (std::size_t i = 0; i < m.back.size(); ++i)
      if (m.colors[i] == EdgeColor::Blue) {
        blue_at.push_back(i);
        blues.push_back(m.back[i]);
      }
    if (!closes_blue_clique(g, blues, cfg.omega)) break;
    std::size_t pick =
        blue_at[std::uniform_int_distribution<std::size_t>(0, blue_at.size() - 1)(rng_)];
    m.colors[pick] = EdgeColor::Red;
  }
  return m;
}

Rational AdversaryPlan::guaranteed() const {
  Rational g = cfg.t + 1;
  for (const auto& st : stages) g -= Rational(1) / st.gadget.q();
  return g;
}

void AdversaryPlan::validate() const {
  cfg.validate();
  if (cfg.omega > cfg.t || 2 * cfg.omega < cfg.t + 1)
    fail(Errc::bad_range, "construction needs (t+1)/2 <= omega <= t");
  if (static_cast<int>(stages.size()) != cfg.t - cfg.omega + 1)
    fail(Errc::bad_params, "expected " + std::to_string(cfg.t - cfg.omega + 1) + " stages");
  if (tail != 2 * cfg.omega - cfg.t - 1)
    fail(Errc::bad_params, "expected " + std::to_string(2 * cfg.omega - cfg.t - 1) +
                               " closing vertices");
  for (std::size_t k = 0; k < stages.size(); ++k) {
    int i = static_cast<int>(k) + 1;
    const Gadget& gd = stages[k].gadget;
    if (gd.graph.vertex_count() < 1) fail(Errc::bad_params, "empty gadget in stage " + std::to_string(i));
    if (gd.width() > cfg.t - 2 * i + 1)
      fail(Errc::bad_params, "stage " + std::to_string(i) + " gadget width " +
                                 std::to_string(gd.width()) + " exceeds " +
                                 std::to_string(cfg.t - 2 * i + 1));
    if (gd.clique_no > cfg.omega - i + 1)
      fail(Errc::bad_params, "stage " + std::to_string(i) + " gadget clique number " +
                                 std::to_string(gd.clique_no) + " exceeds " +
                                 std::to_string(cfg.omega - i + 1));
  }
}

namespace {

void check_range(int t, int omega) {
  GameConfig cfg{t, omega};
  cfg.validate();
  if (omega > t || 2 * omega < t + 1)
    fail(Errc::bad_range, "construction needs (t+1)/2 <= omega <= t, got t=" +
                              std::to_string(t) + " omega=" + std::to_string(omega));
}

}  // namespace

AdversaryPlan plan_corollary1(int t, int omega) {
  check_range(t, omega);
  AdversaryPlan plan;
  plan.cfg = GameConfig{t, omega};
  for (int i = 1; i <= t - omega + 1; ++i)
    plan.stages.push_back({gadget_clique(omega - i + 1)});
  plan.tail = 2 * omega - t - 1;
  plan.validate();
  return plan;
}

AdversaryPlan plan_theorem3(int t, int omega) {
  check_range(t, omega);
  AdversaryPlan plan;
  plan.cfg = GameConfig{t, omega};
  for (int i = 1; i <= t - omega + 1; ++i) {
    int wcap = t - 2 * i + 1;
    int ccap = omega - i + 1;
    Gadget best = gadget_clique(std::min(ccap, wcap + 1));
    for (const Gadget& g : gadget_registry())
      if (g.width() <= wcap && g.clique_no <= ccap && g.q() > best.q()) best = g;
    plan.stages.push_back({std::move(best)});
  }
  plan.tail = 2 * omega - t - 1;
  plan.validate();
  return plan;
}

namespace {

// Plays an AdversaryPlan move by move, choosing each stage's matched vertex
// from Alice's responses once the stage gadget is fully coloured.
class PlanBob : public BobStrategy {
 public:
  explicit PlanBob(const AdversaryPlan& plan) : plan_(plan) {}

  void reset(const GameConfig&) override {
    stage_ = 0;
    phase_ = 0;
    tail_done_ = 0;
    vs_.clear();
    us_.clear();
    ws_.clear();
    gids_.clear();
    overlaps_.clear();
  }

  std::optional<BobMove> next_move(const GameState& state) override {
    if (stage_ < nstages() && phase_ == gadget().graph.vertex_count() + 1) {
      choose_u(state);
      ++stage_;
      phase_ = 0;
    }
    if (stage_ < nstages()) {
      if (phase_ == 0) {
        ++phase_;
        return pivot_move(state);
      }
      int pos = phase_ - 1;
      ++phase_;
      return gadget_move(state, pos);
    }
    if (tail_done_ < plan_.tail) {
      ++tail_done_;
      return tail_move(state);
    }
    return std::nullopt;
  }

  const std::vector<int>& pivots() const { return vs_; }
  const std::vector<int>& matched() const { return us_; }
  const std::vector<int>& closers() const { return ws_; }
  const std::vector<Rational>& overlaps() const { return overlaps_; }

 private:
  int nstages() const { return static_cast<int>(plan_.stages.size()); }
  const Gadget& gadget() const { return plan_.stages[stage_].gadget; }

  // Everything placed in earlier stages, pivots and matched vertices alike;
  // these are pairwise adjacent with red exactly on the matching.
  std::vector<int> core() const {
    std::vector<int> c;
    for (std::size_t i = 0; i < vs_.size(); ++i) {
      c.push_back(vs_[i]);
      if (i < us_.size()) c.push_back(us_[i]);
    }
    return c;
  }

  BobMove pivot_move(const GameState& state) {
    BobMove m;
    m.back = core();
    m.colors.assign(m.back.size(), EdgeColor::Blue);
    vs_.push_back(state.graph().vertex_count());
    gids_.emplace_back();
    return m;
  }

  BobMove gadget_move(const GameState& state, int pos) {
    const Gadget& gd = gadget();
    int x = gd.witness.order[pos];
    std::vector<int> pred = completion_predecessors(gd.witness, pos);
    BobMove m;
    for (int b : pred) {
      m.back.push_back(gids_[stage_].at(b));
      m.colors.push_back(gd.graph.has_edge(x, b) ? EdgeColor::Blue : EdgeColor::Red);
    }
    m.back.push_back(vs_[stage_]);
    m.colors.push_back(EdgeColor::Red);
    for (int c : core())
      if (c != vs_[stage_]) {
        m.back.push_back(c);
        m.colors.push_back(EdgeColor::Blue);
      }
    gids_[stage_][x] = state.graph().vertex_count();
    return m;
  }

  BobMove tail_move(const GameState& state) {
    BobMove m;
    m.back = core();
    for (int w : ws_) m.back.push_back(w);
    m.colors.assign(m.back.size(), EdgeColor::Blue);
    ws_.push_back(state.graph().vertex_count());
    return m;
  }

  void choose_u(const GameState& state) {
    const auto& phi = state.coloring();
    const ColorSet& pivot_phi = *phi[vs_[stage_]];
    int best = -1;
    Rational best_overlap;
    std::vector<std::pair<int, int>> ids(gids_[stage_].begin(), gids_[stage_].end());
    std::sort(ids.begin(), ids.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    for (const auto& [x, id] : ids) {
      (void)x;
      Rational ov = phi[id]->intersect(pivot_phi).measure();
      if (best < 0 || ov < best_overlap) {
        best = id;
        best_overlap = ov;
      }
    }
    Rational cap = Rational(1) / gadget().q();
    if (best_overlap > cap)
      fail(Errc::claim_violated,
           "stage " + std::to_string(stage_ + 1) + ": best overlap " + rat_str(best_overlap) +
               " exceeds 1/q = " + rat_str(cap));
    us_.push_back(best);
    overlaps_.push_back(best_overlap);
  }

  const AdversaryPlan& plan_;
  int stage_ = 0;
  int phase_ = 0;
  int tail_done_ = 0;
  std::vector<int> vs_, us_, ws_;
  std::vector<std::map<int, int>> gids_;  // per stage: gadget vertex -> board id
  std::vector<Rational> overlaps_;
};

}  // namespace

ForcedBoundReport execute_adversary(const AdversaryPlan& plan, AliceStrategy& alice,
                                    bool audit_each) {
  plan.validate();
  PlanBob bob(plan);
  ForcedBoundReport rep;
  rep.plan = plan;
  rep.record = run_game(plan.cfg, alice, bob, audit_each);

  rep.kprime = bob.pivots();
  rep.kprime.insert(rep.kprime.end(), bob.matched().begin(), bob.matched().end());
  rep.kprime.insert(rep.kprime.end(), bob.closers().begin(), bob.closers().end());
  for (std::size_t i = 0; i < plan.stages.size(); ++i)
    rep.pairs.push_back({bob.pivots()[i], bob.matched()[i], bob.overlaps()[i],
                         Rational(1) / plan.stages[i].gadget.q()});
  rep.guaranteed = plan.guaranteed();

  // The forced set really is a clique on t+1 vertices whose red edges are
  // exactly the matching.
  if (static_cast<int>(rep.kprime.size()) != plan.cfg.t + 1)
    fail(Errc::illegal_coloring, "forced clique has wrong size");
  const RBGraph& g = rep.record.graph;
  for (std::size_t i = 0; i < rep.kprime.size(); ++i)
    for (std::size_t j = i + 1; j < rep.kprime.size(); ++j) {
      auto c = g.edge_color(rep.kprime[i], rep.kprime[j]);
      if (!c) fail(Errc::illegal_coloring, "forced set is not a clique");
      bool matched = false;
      for (const auto& p : rep.pairs)
        matched |= (p.v == rep.kprime[i] && p.u == rep.kprime[j]) ||
                   (p.v == rep.kprime[j] && p.u == rep.kprime[i]);
      if ((*c == EdgeColor::Red) != matched)
        fail(Errc::illegal_coloring, "forced clique red edges are not the matching");
    }

  ColorSet all;
  for (int v : rep.kprime) all = all.unite(rep.record.phi[v]);
  rep.union_measure = all.measure();

  // Only matched pairs may share colour, and never three sets at once, so
  // inclusion-exclusion closes exactly.
  Rational expect = plan.cfg.t + 1;
  for (const auto& p : rep.pairs) expect -= p.overlap;
  if (rep.union_measure != expect)
    fail(Errc::illegal_coloring, "inclusion-exclusion mismatch on the forced clique");
  if (rep.union_measure < rep.guaranteed)
    fail(Errc::claim_violated, "forced measure " + rat_str(rep.union_measure) +
                                   " below guarantee " + rat_str(rep.guaranteed));
  return rep;
}

}  // namespace fractw
