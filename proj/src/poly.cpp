#include "gv/poly.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gv {

namespace {

int degree_of(const std::vector<int>& exps) {
  return std::accumulate(exps.begin(), exps.end(), 0);
}

void require_same_vars(const Poly& p, const Poly& q) {
  if (p.nvars != q.nvars)
    throw std::invalid_argument("polynomial variable counts differ");
}

void add_term(Poly& p, const std::vector<int>& exps, const Rational& c) {
  if (c == 0) return;
  auto it = p.terms.find(exps);
  if (it == p.terms.end()) {
    p.terms.emplace(exps, c);
  } else {
    it->second += c;
    if (it->second == 0) p.terms.erase(it);
  }
}

}  // namespace

Poly Poly::zero(int nvars) {
  Poly p;
  p.nvars = nvars;
  return p;
}

Poly Poly::constant(int nvars, const Rational& c) {
  Poly p = zero(nvars);
  if (c != 0) p.terms.emplace(std::vector<int>(nvars, 0), c);
  return p;
}

Poly Poly::variable(int nvars, int i) {
  if (i < 0 || i >= nvars) throw std::invalid_argument("variable index out of range");
  Poly p = zero(nvars);
  std::vector<int> e(nvars, 0);
  e[i] = 1;
  p.terms.emplace(std::move(e), Rational(1));
  return p;
}

int Poly::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms) d = std::max(d, degree_of(e));
  return d;
}

Poly poly_add(const Poly& p, const Poly& q) {
  require_same_vars(p, q);
  Poly r = p;
  for (const auto& [e, c] : q.terms) add_term(r, e, c);
  return r;
}

Poly poly_sub(const Poly& p, const Poly& q) {
  require_same_vars(p, q);
  Poly r = p;
  for (const auto& [e, c] : q.terms) add_term(r, e, -c);
  return r;
}

Poly poly_neg(const Poly& p) {
  Poly r = p;
  for (auto& [e, c] : r.terms) c = -c;
  return r;
}

Poly poly_mul(const Poly& p, const Poly& q) {
  require_same_vars(p, q);
  Poly r = Poly::zero(p.nvars);
  std::vector<int> e(p.nvars);
  for (const auto& [ep, cp] : p.terms)
    for (const auto& [eq, cq] : q.terms) {
      for (int i = 0; i < p.nvars; ++i) e[i] = ep[i] + eq[i];
      add_term(r, e, cp * cq);
    }
  return r;
}

Poly poly_scale(const Rational& c, const Poly& p) {
  if (c == 0) return Poly::zero(p.nvars);
  Poly r = p;
  for (auto& [e, v] : r.terms) v *= c;
  return r;
}

Poly poly_diff(const Poly& p, int var) {
  if (var < 0 || var >= p.nvars) throw std::invalid_argument("variable index out of range");
  Poly r = Poly::zero(p.nvars);
  for (const auto& [e, c] : p.terms) {
    if (e[var] == 0) continue;
    std::vector<int> d = e;
    d[var] -= 1;
    add_term(r, d, c * e[var]);
  }
  return r;
}

Poly poly_truncate(const Poly& p, int cap) {
  Poly r = Poly::zero(p.nvars);
  for (const auto& [e, c] : p.terms)
    if (degree_of(e) <= cap) r.terms.emplace(e, c);
  return r;
}

Rational poly_eval(const Poly& p, const std::vector<Rational>& point) {
  if (static_cast<int>(point.size()) != p.nvars)
    throw std::invalid_argument("evaluation point has wrong length");
  Rational acc = 0;
  for (const auto& [e, c] : p.terms) {
    Rational t = c;
    for (int i = 0; i < p.nvars; ++i)
      for (int k = 0; k < e[i]; ++k) t *= point[i];
    acc += t;
  }
  return acc;
}

std::string to_string(const Poly& p, const std::vector<std::string>& var_names) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms) {
    if (!first) os << " + ";
    first = false;
    os << rat_str(c);
    for (int i = 0; i < p.nvars; ++i) {
      if (e[i] == 0) continue;
      if (i < static_cast<int>(var_names.size()))
        os << "*" << var_names[i];
      else
        os << "*u" << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

TruncSeries TruncSeries::zero(int nvars, int cap) { return {Poly::zero(nvars), cap}; }

TruncSeries TruncSeries::one(int nvars, int cap) {
  return {Poly::constant(nvars, 1), cap};
}

TruncSeries TruncSeries::constant(int nvars, int cap, const Rational& c) {
  return {Poly::constant(nvars, c), cap};
}

TruncSeries TruncSeries::variable(int nvars, int cap, int i) {
  if (cap < 1) return zero(nvars, cap);
  return {Poly::variable(nvars, i), cap};
}

TruncSeries TruncSeries::from_poly(const Poly& p, int cap) {
  return {poly_truncate(p, cap), cap};
}

Rational TruncSeries::constant_term() const {
  auto it = poly.terms.find(std::vector<int>(poly.nvars, 0));
  return it == poly.terms.end() ? Rational(0) : it->second;
}

namespace {

void require_compatible(const TruncSeries& s, const TruncSeries& t) {
  if (s.poly.nvars != t.poly.nvars || s.cap != t.cap)
    throw std::invalid_argument("series variable counts or caps differ");
}

}  // namespace

TruncSeries ts_add(const TruncSeries& s, const TruncSeries& t) {
  require_compatible(s, t);
  return {poly_add(s.poly, t.poly), s.cap};
}

TruncSeries ts_sub(const TruncSeries& s, const TruncSeries& t) {
  require_compatible(s, t);
  return {poly_sub(s.poly, t.poly), s.cap};
}

TruncSeries ts_neg(const TruncSeries& s) { return {poly_neg(s.poly), s.cap}; }

TruncSeries ts_mul(const TruncSeries& s, const TruncSeries& t) {
  require_compatible(s, t);
  // Skip term pairs above the cap instead of truncating after the fact.
  Poly r = Poly::zero(s.poly.nvars);
  std::vector<int> e(s.poly.nvars);
  for (const auto& [ep, cp] : s.poly.terms) {
    const int dp = [&] {
      int d = 0;
      for (int x : ep) d += x;
      return d;
    }();
    for (const auto& [eq, cq] : t.poly.terms) {
      int d = dp;
      for (int x : eq) d += x;
      if (d > s.cap) continue;
      for (int i = 0; i < s.poly.nvars; ++i) e[i] = ep[i] + eq[i];
      auto it = r.terms.find(e);
      if (it == r.terms.end()) {
        Rational c = cp * cq;
        if (c != 0) r.terms.emplace(e, std::move(c));
      } else {
        it->second += cp * cq;
        if (it->second == 0) r.terms.erase(it);
      }
    }
  }
  return {std::move(r), s.cap};
}

TruncSeries ts_scale(const Rational& c, const TruncSeries& s) {
  return {poly_scale(c, s.poly), s.cap};
}

TruncSeries ts_diff(const TruncSeries& s, int var) {
  return {poly_diff(s.poly, var), s.cap};
}

TruncSeries series_inverse(const TruncSeries& s) {
  const Rational c = s.constant_term();
  if (c == 0)
    throw std::domain_error("series_inverse: zero constant term (not a unit)");
  // s = c (1 - r) with r of positive valuation, so s^{-1} = c^{-1} Σ r^k.
  const TruncSeries r =
      ts_sub(TruncSeries::one(s.nvars(), s.cap), ts_scale(1 / c, s));
  TruncSeries acc = TruncSeries::one(s.nvars(), s.cap);
  TruncSeries pow = TruncSeries::one(s.nvars(), s.cap);
  for (int k = 1; k <= s.cap; ++k) {
    pow = ts_mul(pow, r);
    if (pow.is_zero()) break;
    acc = ts_add(acc, pow);
  }
  return ts_scale(1 / c, acc);
}

std::string to_string(const TruncSeries& s, const std::vector<std::string>& var_names) {
  return to_string(s.poly, var_names) + " + O(deg " + std::to_string(s.cap + 1) + ")";
}

}  // namespace gv
