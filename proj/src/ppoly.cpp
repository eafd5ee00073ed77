#include "gv/ppoly.hpp"

#include <stdexcept>

namespace gv {

PPoly PPoly::zero(int n) { return {n, Poly::zero(2 * n)}; }

PPoly PPoly::constant(int n, const Rational& c) { return {n, Poly::constant(2 * n, c)}; }

PPoly PPoly::u(int n, int i) {
  if (i < 0 || i >= n) throw std::invalid_argument("u index out of range");
  return {n, Poly::variable(2 * n, i)};
}

PPoly PPoly::p(int n, int i) {
  if (i < 0 || i >= n) throw std::invalid_argument("p index out of range");
  return {n, Poly::variable(2 * n, n + i)};
}

PPoly PPoly::from_base_poly(int n, const Poly& base) {
  if (base.nvars != n) throw std::invalid_argument("base polynomial has wrong arity");
  PPoly r = zero(n);
  for (const auto& [e, c] : base.terms) {
    std::vector<int> ext(2 * n, 0);
    for (int i = 0; i < n; ++i) ext[i] = e[i];
    r.poly.terms.emplace(std::move(ext), c);
  }
  return r;
}

int PPoly::p_degree() const {
  int d = 0;
  for (const auto& [e, c] : poly.terms) {
    int s = 0;
    for (int i = n; i < 2 * n; ++i) s += e[i];
    d = std::max(d, s);
  }
  return d;
}

int PPoly::u_degree() const {
  int d = 0;
  for (const auto& [e, c] : poly.terms) {
    int s = 0;
    for (int i = 0; i < n; ++i) s += e[i];
    d = std::max(d, s);
  }
  return d;
}

namespace {
void require_same_patch(const PPoly& a, const PPoly& b) {
  if (a.n != b.n) throw std::invalid_argument("cotangent patch dimensions differ");
}
}  // namespace

PPoly pp_add(const PPoly& a, const PPoly& b) {
  require_same_patch(a, b);
  return {a.n, poly_add(a.poly, b.poly)};
}

PPoly pp_sub(const PPoly& a, const PPoly& b) {
  require_same_patch(a, b);
  return {a.n, poly_sub(a.poly, b.poly)};
}

PPoly pp_mul(const PPoly& a, const PPoly& b) {
  require_same_patch(a, b);
  return {a.n, poly_mul(a.poly, b.poly)};
}

PPoly pp_scale(const Rational& c, const PPoly& a) { return {a.n, poly_scale(c, a.poly)}; }

PPoly pp_diff_u(const PPoly& a, int i) { return {a.n, poly_diff(a.poly, i)}; }

PPoly pp_diff_p(const PPoly& a, int i) { return {a.n, poly_diff(a.poly, a.n + i)}; }

PPoly canonical_poisson(const PPoly& a, const PPoly& b) {
  require_same_patch(a, b);
  PPoly r = PPoly::zero(a.n);
  for (int k = 0; k < a.n; ++k) {
    r = pp_add(r, pp_mul(pp_diff_p(a, k), pp_diff_u(b, k)));
    r = pp_sub(r, pp_mul(pp_diff_u(a, k), pp_diff_p(b, k)));
  }
  return r;
}

std::string to_string(const PPoly& a) {
  std::vector<std::string> names;
  for (int i = 0; i < a.n; ++i) names.push_back("u" + std::to_string(i + 1));
  for (int i = 0; i < a.n; ++i) names.push_back("p" + std::to_string(i + 1));
  return to_string(a.poly, names);
}

}  // namespace gv
