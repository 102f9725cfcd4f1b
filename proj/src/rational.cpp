#include "fractw/rational.hpp"

#include "fractw/error.hpp"

namespace fractw {

Rational rat(long num, long den) {
  if (den == 0) fail(Errc::bad_params, "rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational rat(const Int& num, const Int& den) {
  if (den == 0) fail(Errc::bad_params, "rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational rat_parse(const std::string& text) {
  Rational r;
  if (r.set_str(text, 10) != 0) fail(Errc::parse_error, "bad rational '" + text + "'");
  if (r.get_den() == 0) fail(Errc::parse_error, "zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

std::string rat_str(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

double rat_approx(const Rational& r) { return r.get_d(); }

bool fits_long(const Int& z) { return z.fits_slong_p(); }

}  // namespace fractw
