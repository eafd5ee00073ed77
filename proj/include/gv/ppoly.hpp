#ifndef GV_PPOLY_HPP
#define GV_PPOLY_HPP

#include <string>

#include "gv/poly.hpp"

namespace gv {

// Polynomial function on a cotangent patch: coordinates u_1..u_n on the
// base and fiber coordinates p_1..p_n, stored as a Poly in 2n variables
// (u block first, then p block).
struct PPoly {
  int n = 0;
  Poly poly;  // 2n variables

  static PPoly zero(int n);
  static PPoly constant(int n, const Rational& c);
  static PPoly u(int n, int i);
  static PPoly p(int n, int i);
  static PPoly from_base_poly(int n, const Poly& base);  // poly in u only

  bool is_zero() const { return poly.is_zero(); }
  int p_degree() const;
  int u_degree() const;

  bool operator==(const PPoly& o) const = default;
};

PPoly pp_add(const PPoly& a, const PPoly& b);
PPoly pp_sub(const PPoly& a, const PPoly& b);
PPoly pp_mul(const PPoly& a, const PPoly& b);
PPoly pp_scale(const Rational& c, const PPoly& a);
PPoly pp_diff_u(const PPoly& a, int i);
PPoly pp_diff_p(const PPoly& a, int i);

// Canonical Poisson bracket {a,b} = Σ_k (∂a/∂p_k ∂b/∂u_k − ∂a/∂u_k ∂b/∂p_k).
PPoly canonical_poisson(const PPoly& a, const PPoly& b);

std::string to_string(const PPoly& a);

}  // namespace gv

#endif
