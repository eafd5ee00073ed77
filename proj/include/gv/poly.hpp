#ifndef GV_POLY_HPP
#define GV_POLY_HPP

#include <map>
#include <string>
#include <vector>

#include "gv/rational.hpp"

namespace gv {

// Multivariate polynomial over the rationals. Terms map an exponent
// multi-index (length nvars) to a nonzero coefficient; the std::map
// ordering makes iteration, printing and serialization canonical.
struct Poly {
  int nvars = 0;
  std::map<std::vector<int>, Rational> terms;

  static Poly zero(int nvars);
  static Poly constant(int nvars, const Rational& c);
  static Poly variable(int nvars, int i);

  bool is_zero() const { return terms.empty(); }
  int total_degree() const;  // 0 for the zero polynomial

  bool operator==(const Poly& o) const = default;
};

Poly poly_add(const Poly& p, const Poly& q);
Poly poly_sub(const Poly& p, const Poly& q);
Poly poly_neg(const Poly& p);
Poly poly_mul(const Poly& p, const Poly& q);
Poly poly_scale(const Rational& c, const Poly& p);
Poly poly_diff(const Poly& p, int var);
Poly poly_truncate(const Poly& p, int cap);
Rational poly_eval(const Poly& p, const std::vector<Rational>& point);
std::string to_string(const Poly& p, const std::vector<std::string>& var_names = {});

// Polynomial truncated at a total-degree cap: every operation drops
// terms above cap, so a TruncSeries models the degree-cap jet of a germ.
struct TruncSeries {
  Poly poly;
  int cap = 0;

  static TruncSeries zero(int nvars, int cap);
  static TruncSeries one(int nvars, int cap);
  static TruncSeries constant(int nvars, int cap, const Rational& c);
  static TruncSeries variable(int nvars, int cap, int i);
  static TruncSeries from_poly(const Poly& p, int cap);

  int nvars() const { return poly.nvars; }
  bool is_zero() const { return poly.is_zero(); }
  Rational constant_term() const;

  bool operator==(const TruncSeries& o) const = default;
};

TruncSeries ts_add(const TruncSeries& s, const TruncSeries& t);
TruncSeries ts_sub(const TruncSeries& s, const TruncSeries& t);
TruncSeries ts_neg(const TruncSeries& s);
TruncSeries ts_mul(const TruncSeries& s, const TruncSeries& t);
TruncSeries ts_scale(const Rational& c, const TruncSeries& s);
TruncSeries ts_diff(const TruncSeries& s, int var);

// Multiplicative inverse up to cap. Requires a nonzero constant term.
TruncSeries series_inverse(const TruncSeries& s);

std::string to_string(const TruncSeries& s, const std::vector<std::string>& var_names = {});

}  // namespace gv

#endif
