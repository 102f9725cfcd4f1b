#include "fractw/bounds.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "fractw/error.hpp"
#include "fractw/game.hpp"
#include "fractw/generators.hpp"

namespace fractw {

namespace {

void check_range(int t, int omega) {
  GameConfig cfg{t, omega};
  cfg.validate();
  if (omega > t || 2 * omega < t + 1)
    fail(Errc::bad_range, "bound needs (t+1)/2 <= omega <= t, got t=" + std::to_string(t) +
                              " omega=" + std::to_string(omega));
}

}  // namespace

Rational ub_theorem1(int t, int omega) {
  GameConfig cfg{t, omega};
  cfg.validate();
  return cfg.greedy_window();
}

Rational lb_corollary1(int t, int omega) {
  check_range(t, omega);
  Rational b = t + 1;
  for (int i = 1; i <= t - omega + 1; ++i) b -= rat(1, omega - i + 1);
  return b;
}

Rational trivial_base(int tcap, int omegacap) {
  if (tcap < 0 || omegacap < 1) fail(Errc::bad_params, "empty cap");
  return std::min(omegacap, tcap + 1);
}

Rational registry_base(int tcap, int omegacap) {
  Rational best = trivial_base(tcap, omegacap);
  for (const Gadget& g : gadget_registry())
    if (g.width() <= tcap && g.clique_no <= omegacap && g.q() > best) best = g.q();
  return best;
}

Rational lb_theorem3(int t, int omega, const BaseFn& base) {
  check_range(t, omega);
  Rational b = t + 1;
  for (int i = 1; i <= t - omega + 1; ++i) {
    Rational q = base(t - 2 * i + 1, omega - i + 1);
    if (q < 1) fail(Errc::bad_params, "stage base below 1");
    b -= Rational(1) / q;
  }
  return b;
}

double eq1_main(int t) {
  if (t < 1) fail(Errc::bad_params, "t must be positive");
  return t - std::log(static_cast<double>(t));
}

double cor2_main(int t, const Rational& c) {
  if (c <= 0 || 2 * c >= 1) fail(Errc::bad_range, "need 0 < c < 1/2");
  return t + 1 + std::log(rat_approx(1 - 2 * c)) / 2;
}

int cor2_omega(int t, const Rational& c) {
  if (c <= 0 || 2 * c >= 1) fail(Errc::bad_range, "need 0 < c < 1/2");
  Rational w = (1 - c) * t;
  Int fl;
  mpz_fdiv_q(fl.get_mpz_t(), w.get_num_mpz_t(), w.get_den_mpz_t());
  if (!fits_long(fl)) fail(Errc::too_large, "omega out of range");
  return static_cast<int>(fl.get_si());
}

Rational cor2_exact(int t, const Rational& c) { return lb_corollary1(t, cor2_omega(t, c)); }

std::vector<BoundRow> bound_table(int tmax) {
  if (tmax < 2) fail(Errc::bad_params, "tmax must be at least 2");
  std::vector<BoundRow> rows;
  for (int t = 2; t <= tmax; ++t)
    for (int omega = (t + 2) / 2; omega <= t; ++omega) {
      BoundRow r;
      r.t = t;
      r.omega = omega;
      r.lb_closed = lb_corollary1(t, omega);
      r.lb_gadget = lb_theorem3(t, omega, registry_base);
      r.ub = ub_theorem1(t, omega);
      rows.push_back(std::move(r));
    }
  return rows;
}

std::string bound_table_csv(const std::vector<BoundRow>& rows) {
  std::ostringstream out;
  out << "t,omega,lb_closed,lb_gadget,ub,lb_closed_approx,lb_gadget_approx,ub_approx\n";
  for (const BoundRow& r : rows) {
    out << r.t << ',' << r.omega << ',' << rat_str(r.lb_closed) << ',' << rat_str(r.lb_gadget)
        << ',' << rat_str(r.ub) << ',' << rat_approx(r.lb_closed) << ','
        << rat_approx(r.lb_gadget) << ',' << rat_approx(r.ub) << '\n';
  }
  return out.str();
}

std::string bound_table_json(const std::vector<BoundRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const BoundRow& r : rows) {
    nlohmann::json row;
    row["t"] = r.t;
    row["omega"] = r.omega;
    row["lb_closed"] = rat_str(r.lb_closed);
    row["lb_gadget"] = rat_str(r.lb_gadget);
    row["ub"] = rat_str(r.ub);
    row["lb_closed_approx"] = rat_approx(r.lb_closed);
    row["lb_gadget_approx"] = rat_approx(r.lb_gadget);
    row["ub_approx"] = rat_approx(r.ub);
    arr.push_back(std::move(row));
  }
  return arr.dump(2) + "\n";
}

}  // namespace fractw
