#pragma once

#include <functional>
#include <string>
#include <vector>

#include "fractw/rational.hpp"

namespace fractw {

// Upper bound achieved by the greedy strategy: t + (omega - 1)/t.
Rational ub_theorem1(int t, int omega);

// Closed-form floor forced by the clique-gadget adversary:
// t + 1 - sum_{i=1..t-omega+1} 1/(omega - i + 1). Needs (t+1)/2 <= omega <= t.
Rational lb_corollary1(int t, int omega);

// Value plugged in for a stage with width cap t' and clique cap omega'.
using BaseFn = std::function<Rational(int, int)>;
// Best complete-graph value under the caps: min(omega', t' + 1).
Rational trivial_base(int tcap, int omegacap);
// Best certified gadget value under the caps (registry plus clique fallback).
Rational registry_base(int tcap, int omegacap);

// Recursive floor t + 1 - sum_i 1/base(t - 2i + 1, omega - i + 1).
Rational lb_theorem3(int t, int omega, const BaseFn& base = registry_base);

// Asymptotic reference terms.
double eq1_main(int t);               // t - ln t
double cor2_main(int t, const Rational& c);  // t + 1 + ln(1 - 2c)/2
int cor2_omega(int t, const Rational& c);    // floor((1 - c) t)
Rational cor2_exact(int t, const Rational& c);  // lb_corollary1 at that omega

struct BoundRow {
  int t = 0;
  int omega = 0;
  Rational lb_closed;   // lb_corollary1
  Rational lb_gadget;   // lb_theorem3 with the registry base
  Rational ub;          // ub_theorem1
};

// Rows for 2 <= t <= tmax, ceil((t+1)/2) <= omega <= t.
std::vector<BoundRow> bound_table(int tmax);
std::string bound_table_csv(const std::vector<BoundRow>& rows);
std::string bound_table_json(const std::vector<BoundRow>& rows);

}  // namespace fractw
