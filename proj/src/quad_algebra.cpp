#include "gv/quad_algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace gv {

bool qa_eq(const QuadAlgebra& a, const QuadAlgebra& b) {
  return a.n == b.n && a.rel == b.rel;
}

QuadAlgebra qa_unit() {
  QuadAlgebra a;
  a.n = 1;
  a.rel = Subspace::full(1);
  return a;
}

QuadAlgebra qa_dualizing() {
  QuadAlgebra a;
  a.n = 1;
  a.rel = Subspace::zero(1);
  return a;
}

QuadAlgebra qa_dual(const QuadAlgebra& a) {
  QuadAlgebra d;
  d.n = a.n;
  d.rel = orthogonal_complement(a.rel);
  return d;
}

Matrix s23_perm(int na, int nb) {
  const int dim = na * na * nb * nb;
  Matrix p(dim, dim);
  for (int i1 = 0; i1 < na; ++i1)
    for (int i2 = 0; i2 < na; ++i2)
      for (int j1 = 0; j1 < nb; ++j1)
        for (int j2 = 0; j2 < nb; ++j2) {
          const int src = ((i1 * na + i2) * nb + j1) * nb + j2;
          const int dst = ((i1 * nb + j1) * na + i2) * nb + j2;
          p.at(dst, src) = 1;
        }
  return p;
}

Matrix flip_perm(int na, int nb) {
  Matrix p(na * nb, na * nb);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) p.at(j * na + i, i * nb + j) = 1;
  return p;
}

QuadAlgebra qa_black(const QuadAlgebra& a, const QuadAlgebra& b) {
  QuadAlgebra r;
  r.n = a.n * b.n;
  r.rel = apply_linear(s23_perm(a.n, b.n), kron_subspace(a.rel, b.rel));
  return r;
}

QuadAlgebra qa_white(const QuadAlgebra& a, const QuadAlgebra& b) {
  QuadAlgebra r;
  r.n = a.n * b.n;
  const Subspace sum =
      subspace_sum(kron_subspace(a.rel, Subspace::full(b.n * b.n)),
                   kron_subspace(Subspace::full(a.n * a.n), b.rel));
  r.rel = apply_linear(s23_perm(a.n, b.n), sum);
  return r;
}

bool is_morphism(const LinMap1& f, const QuadAlgebra& a, const QuadAlgebra& b) {
  if (f.m.cols != a.n || f.m.rows != b.n)
    throw std::invalid_argument("degree-1 map shape does not match presentations");
  return b.rel.contains(apply_linear(kron(f.m, f.m), a.rel));
}

LinMap1 curry(const LinMap1& g, int na, int nb) {
  if (g.m.rows != 1 || g.m.cols != na * nb)
    throw std::invalid_argument("curry expects a 1 x (nA*nB) map");
  Matrix h(nb, na);
  for (int j = 0; j < na; ++j)
    for (int k = 0; k < nb; ++k) h.at(k, j) = g.m.at(0, j * nb + k);
  return {h};
}

LinMap1 uncurry(const LinMap1& g_hat, int na, int nb) {
  if (g_hat.m.rows != nb || g_hat.m.cols != na)
    throw std::invalid_argument("uncurry expects an nB x nA map");
  Matrix g(1, na * nb);
  for (int j = 0; j < na; ++j)
    for (int k = 0; k < nb; ++k) g.at(0, j * nb + k) = g_hat.m.at(k, j);
  return {g};
}

std::pair<bool, bool> adjunction_witness(const QuadAlgebra& a, const QuadAlgebra& b,
                                         const LinMap1& g) {
  const bool left = is_morphism(g, qa_black(a, b), qa_dualizing());
  const bool right = is_morphism(curry(g, a.n, b.n), a, qa_dual(b));
  return {left, right};
}

std::vector<long> hilbert_dims(const QuadAlgebra& a, int maxdeg, long coord_budget) {
  if (maxdeg < 0) throw std::invalid_argument("maxdeg must be nonnegative");
  long coords = 1;
  for (int d = 0; d < maxdeg; ++d) {
    coords *= a.n;
    if (coords > coord_budget)
      throw std::length_error("hilbert_dims: n^maxdeg exceeds coordinate budget");
  }
  std::vector<long> h;
  h.push_back(1);
  if (maxdeg >= 1) h.push_back(a.n);
  long ndim = a.n;
  for (int d = 2; d <= maxdeg; ++d) {
    ndim *= a.n;
    if (h.back() == 0) {  // graded components never revive
      h.push_back(0);
      continue;
    }
    // Relation space in degree d: Σ_i full^i ⊗ rel ⊗ full^(d-2-i).
    RrefBasis basis(static_cast<int>(ndim));
    const long n2 = static_cast<long>(a.n) * a.n;
    for (int i = 0; i + 2 <= d; ++i) {
      long left = 1, right = 1;
      for (int k = 0; k < i; ++k) left *= a.n;
      for (int k = 0; k < d - 2 - i; ++k) right *= a.n;
      for (int r = 0; r < a.rel.dim(); ++r) {
        for (long u = 0; u < left; ++u)
          for (long v = 0; v < right; ++v) {
            std::vector<Rational> row(static_cast<std::size_t>(ndim));
            for (long c = 0; c < n2; ++c) {
              const Rational& x = a.rel.basis.at(r, static_cast<int>(c));
              if (x != 0) row[static_cast<std::size_t>((u * n2 + c) * right + v)] = x;
            }
            basis.insert(std::move(row));
          }
      }
      if (basis.dim() == ndim) break;
    }
    h.push_back(ndim - basis.dim());
  }
  return h;
}

QuadAlgebra qa_polynomial(int n) {
  QuadAlgebra a;
  a.n = n;
  Matrix rows((n * (n - 1)) / 2, n * n);
  int r = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      rows.at(r, i * n + j) = 1;
      rows.at(r, j * n + i) = -1;
      ++r;
    }
  a.rel = Subspace::from_rows(n * n, rows);
  return a;
}

QuadAlgebra qa_exterior(int n) { return qa_dual(qa_polynomial(n)); }

QuadAlgebra qa_free(int n) {
  QuadAlgebra a;
  a.n = n;
  a.rel = Subspace::zero(n * n);
  return a;
}

QuadAlgebra qa_random(Rng& rng, int max_n) {
  QuadAlgebra a;
  a.n = rng.range(1, max_n);
  const int amb = a.n * a.n;
  const int want = rng.range(0, amb);
  Matrix rows(want, amb);
  for (int r = 0; r < want; ++r)
    for (int c = 0; c < amb; ++c)
      if (rng.range(0, 2) == 0) rows.at(r, c) = rng.rational(2, 2);
  a.rel = Subspace::from_rows(amb, rows);
  return a;
}

std::string to_string(const QuadAlgebra& a) {
  std::ostringstream os;
  os << "{n=" << a.n << ", rel=" << to_string(a.rel.basis) << "}";
  return os.str();
}

}  // namespace gv
