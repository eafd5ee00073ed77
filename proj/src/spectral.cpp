#include <stdexcept>

#include "gv/f_structure.hpp"
#include "gv/matrix.hpp"

namespace gv {

std::vector<PPoly> spectral_ideal_generators(const FStructure& f) {
  const int n = f.n;
  std::vector<PPoly> gens;
  PPoly g0 = PPoly::constant(n, 1);
  for (int k = 0; k < n; ++k)
    g0 = pp_sub(g0, pp_mul(PPoly::from_base_poly(n, f.e.coeffs[k].poly), PPoly::p(n, k)));
  gens.push_back(std::move(g0));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      PPoly g = pp_mul(PPoly::p(n, i), PPoly::p(n, j));
      for (int k = 0; k < n; ++k)
        g = pp_sub(g, pp_mul(PPoly::from_base_poly(n, f.c_at(i, j, k).poly),
                             PPoly::p(n, k)));
      gens.push_back(std::move(g));
    }
  return gens;
}

VField eval_hom(const FStructure& f, const PPoly& h) {
  if (h.n != f.n) throw std::invalid_argument("cotangent patch dimension mismatch");
  if (h.u_degree() > f.cap)
    throw std::domain_error("eval_hom: base degree overflows the series cap");
  VField out = VField::zero(f.n, f.cap);
  for (const auto& [e, coeff] : h.poly.terms) {
    Poly base = Poly::zero(f.n);
    std::vector<int> ue(e.begin(), e.begin() + f.n);
    base.terms.emplace(std::move(ue), coeff);
    const TruncSeries scalar = TruncSeries::from_poly(base, f.cap);
    // Fiber part: fold the • product over p-exponents in index order.
    VField field;
    bool have_field = false;
    for (int i = 0; i < f.n; ++i)
      for (int k = 0; k < e[f.n + i]; ++k) {
        const VField di = VField::coordinate(f.n, f.cap, i);
        field = have_field ? vf_mul(f, field, di) : di;
        have_field = true;
      }
    if (!have_field) field = f.e;
    out = vf_add(out, vf_scale(scalar, field));
  }
  return out;
}

namespace {

// Rank at the origin of the degree-≤2 part of the ideal, in coordinates
// {1, p_i, p_i p_j (i≤j)}; spanning rows are the generators together with
// the p_k-multiples of the affine generator.
bool kernel_rank_at_origin_ok(const FStructure& f, const std::vector<PPoly>& gens) {
  const int n = f.n;
  std::vector<std::vector<int>> coords;  // p-exponent patterns
  coords.push_back(std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    coords.push_back(e);
  }
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      std::vector<int> e(n, 0);
      e[i] += 1;
      e[j] += 1;
      coords.push_back(e);
    }
  const int ncols = static_cast<int>(coords.size());

  std::vector<PPoly> rows = gens;
  for (int k = 0; k < n; ++k) rows.push_back(pp_mul(gens[0], PPoly::p(n, k)));

  Matrix m(static_cast<int>(rows.size()), ncols);
  const std::vector<Rational> origin(n, Rational(0));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const auto& [e, c] : rows[r].poly.terms) {
      // Base part evaluated at u = 0: only u-free monomial survives... the
      // residue of the coefficient; collate per p-pattern.
      bool u_free = true;
      for (int i = 0; i < n; ++i)
        if (e[i] != 0) u_free = false;
      if (!u_free) continue;
      const std::vector<int> pe(e.begin() + n, e.end());
      for (int col = 0; col < ncols; ++col)
        if (coords[col] == pe) {
          m.at(static_cast<int>(r), col) += c;
          break;
        }
    }
  }
  return rank(m) == ncols - n;
}

}  // namespace

CoisotropyReport check_coisotropy(const FStructure& f) {
  CoisotropyReport rep;
  const std::vector<PPoly> gens = spectral_ideal_generators(f);
  rep.brackets_ok = true;
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a; b < gens.size(); ++b) {
      const VField v = eval_hom(f, canonical_poisson(gens[a], gens[b]));
      if (!v.is_zero()) {
        rep.brackets_ok = false;
        rep.failures.push_back("bracket of generators #" + std::to_string(a) + ", #" +
                               std::to_string(b) + " evaluates to " + to_string(v));
      }
    }
  rep.kernel_rank_ok = kernel_rank_at_origin_ok(f, gens);
  if (!rep.kernel_rank_ok)
    rep.failures.push_back("degree-2 quotient rank at the origin is not n");
  rep.pass = rep.brackets_ok && rep.kernel_rank_ok;
  return rep;
}

FiberAlgebra fiber_algebra(const FStructure& f, const std::vector<Rational>& u0) {
  if (static_cast<int>(u0.size()) != f.n)
    throw std::invalid_argument("point has wrong dimension");
  FiberAlgebra alg;
  alg.n = f.n;
  alg.c.reserve(f.c.size());
  for (const auto& s : f.c) alg.c.push_back(poly_eval(s.poly, u0));
  for (const auto& s : f.e.coeffs) alg.e.push_back(poly_eval(s.poly, u0));
  return alg;
}

bool is_semisimple_fiber(const FiberAlgebra& alg) {
  const int n = alg.n;
  // Left-multiplication matrices of the coordinate idempotent candidates.
  std::vector<Matrix> mult;
  mult.reserve(n);
  for (int i = 0; i < n; ++i) {
    Matrix l(n, n);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        l.at(k, j) = alg.c[(static_cast<std::size_t>(i) * n + j) * n + k];
    mult.push_back(std::move(l));
  }
  Matrix trace_form(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Matrix prod = mult[i] * mult[j];
      Rational tr = 0;
      for (int k = 0; k < n; ++k) tr += prod.at(k, k);
      trace_form.at(i, j) = tr;
    }
  return rank(trace_form) == n;
}

}  // namespace gv
