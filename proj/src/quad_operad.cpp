#include "gv/quad_operad.hpp"

#include <sstream>
#include <stdexcept>

namespace gv {

Perm3 perm3_identity() { return {0, 1, 2}; }

std::vector<Perm3> perm3_all() {
  return {{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
}

Perm3 perm3_compose(const Perm3& p, const Perm3& q) {
  return {p[q[0]], p[q[1]], p[q[2]]};
}

int perm3_sign(const Perm3& p) {
  int inv = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (p[i] > p[j]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

int tree_sign(int t) {
  static const int signs[3] = {1, -1, 1};
  return signs[t];
}

bool op_eq(const QuadOperad& p, const QuadOperad& q) {
  return p.e.d == q.e.d && p.e.sigma == q.e.sigma && p.rel == q.rel;
}

int tree_index(int t, int a, int b, int d) { return (t * d + a) * d + b; }

namespace {

// The two leaves combined by the inner vertex, in increasing order.
std::pair<int, int> inner_pair(int t) {
  switch (t) {
    case 0: return {1, 2};
    case 1: return {0, 2};
    default: return {0, 1};
  }
}

}  // namespace

Matrix s3_action(const S2Module& e, const Perm3& pi) {
  const int d = e.d;
  Matrix m(3 * d * d, 3 * d * d);
  for (int t = 0; t < 3; ++t) {
    const auto [i, j] = inner_pair(t);
    const int tp = pi[t];
    const bool reversed = pi[i] > pi[j];
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        const int src = tree_index(t, a, b, d);
        if (!reversed) {
          m.at(tree_index(tp, a, b, d), src) = 1;
        } else {
          for (int b2 = 0; b2 < d; ++b2)
            if (e.sigma.at(b2, b) != 0)
              m.at(tree_index(tp, a, b2, d), src) = e.sigma.at(b2, b);
        }
      }
  }
  return m;
}

bool is_s3_stable(const S2Module& e, const Subspace& rel) {
  for (const Perm3& pi : perm3_all())
    if (!(apply_linear(s3_action(e, pi), rel) == rel)) return false;
  return true;
}

QuadOperad op_lie() {
  QuadOperad p;
  p.e.d = 1;
  p.e.sigma = Matrix::from_rows({{-1}});
  p.rel = Subspace::from_rows(3, Matrix::from_rows({{1, -1, 1}}));  // Jacobi
  return p;
}

QuadOperad op_comm() {
  QuadOperad p;
  p.e.d = 1;
  p.e.sigma = Matrix::from_rows({{1}});
  p.rel = Subspace::from_rows(3, Matrix::from_rows({{1, -1, 0}, {0, 1, -1}}));
  return p;
}

QuadOperad op_assoc() {
  QuadOperad p;
  p.e.d = 2;
  p.e.sigma = Matrix::from_rows({{0, 1}, {1, 0}});
  // The six relators (x_i x_j) x_k - x_i (x_j x_k) written in tree
  // coordinates; basis e₀ = product, e₁ = opposite product.
  Matrix rows(6, 12);
  int r = 0;
  for (const Perm3& ijk : perm3_all()) {
    const int i = ijk[0], j = ijk[1], k = ijk[2];
    rows.at(r, tree_index(k, 0, i < j ? 0 : 1, 2)) = 1;
    rows.at(r, tree_index(i, 1, j < k ? 0 : 1, 2)) = -1;
    ++r;
  }
  p.rel = Subspace::from_rows(12, rows);
  return p;
}

QuadOperad op_dual(const QuadOperad& p) {
  const int d = p.d();
  QuadOperad q;
  q.e.d = d;
  q.e.sigma = -p.e.sigma.transpose();
  // Orthogonal complement for the tree-signed pairing: scale each basis
  // row blockwise by s_t, then take the dot-pairing kernel.
  Matrix scaled = p.rel.basis;
  for (int r = 0; r < scaled.rows; ++r)
    for (int t = 0; t < 3; ++t) {
      if (tree_sign(t) == 1) continue;
      for (int c = 0; c < d * d; ++c) scaled.at(r, t * d * d + c) *= -1;
    }
  q.rel = orthogonal_complement(Subspace::from_rows(3 * d * d, scaled));
  return q;
}

Matrix phi3(const S2Module& e1, const S2Module& e2) {
  const int d1 = e1.d, d2 = e2.d, dd = d1 * d2;
  Matrix m(9 * d1 * d1 * d2 * d2, 3 * dd * dd);
  for (int t = 0; t < 3; ++t)
    for (int a = 0; a < d1; ++a)
      for (int b = 0; b < d1; ++b)
        for (int c = 0; c < d2; ++c)
          for (int d = 0; d < d2; ++d) {
            const int src = tree_index(t, a * d2 + c, b * d2 + d, dd);
            const int dst = tree_index(t, a, b, d1) * (3 * d2 * d2) +
                            tree_index(t, c, d, d2);
            m.at(dst, src) = 1;
          }
  return m;
}

Matrix psi3(const S2Module& e1, const S2Module& e2) {
  const int d1 = e1.d, d2 = e2.d, dd = d1 * d2;
  Matrix m(3 * dd * dd, 9 * d1 * d1 * d2 * d2);
  for (int t = 0; t < 3; ++t)
    for (int a = 0; a < d1; ++a)
      for (int b = 0; b < d1; ++b)
        for (int c = 0; c < d2; ++c)
          for (int d = 0; d < d2; ++d) {
            const int dst = tree_index(t, a * d2 + c, b * d2 + d, dd);
            const int src = tree_index(t, a, b, d1) * (3 * d2 * d2) +
                            tree_index(t, c, d, d2);
            m.at(dst, src) = tree_sign(t);
          }
  return m;
}

QuadOperad op_black(const QuadOperad& p, const QuadOperad& q) {
  QuadOperad r;
  r.e.d = p.d() * q.d();
  r.e.sigma = -kron(p.e.sigma, q.e.sigma);
  // (R₁ ⊗ full) ∩ (full ⊗ R₂) = R₁ ⊗ R₂ for the product coordinates.
  r.rel = apply_linear(psi3(p.e, q.e), kron_subspace(p.rel, q.rel));
  return r;
}

QuadOperad op_white(const QuadOperad& p, const QuadOperad& q) {
  QuadOperad r;
  r.e.d = p.d() * q.d();
  r.e.sigma = kron(p.e.sigma, q.e.sigma);
  const int f1 = 3 * p.d() * p.d(), f2 = 3 * q.d() * q.d();
  const Subspace sum = subspace_sum(kron_subspace(p.rel, Subspace::full(f2)),
                                    kron_subspace(Subspace::full(f1), q.rel));
  r.rel = preimage(phi3(p.e, q.e), sum);
  return r;
}

Matrix f3_map(const Matrix& f) {
  const Matrix ff = kron(f, f);
  Matrix m(3 * ff.rows, 3 * ff.cols);
  for (int t = 0; t < 3; ++t)
    for (int i = 0; i < ff.rows; ++i)
      for (int j = 0; j < ff.cols; ++j)
        if (ff.at(i, j) != 0) m.at(t * ff.rows + i, t * ff.cols + j) = ff.at(i, j);
  return m;
}

bool op_morphism_check(const Matrix& f, const QuadOperad& p, const QuadOperad& q) {
  if (f.cols != p.d() || f.rows != q.d())
    throw std::invalid_argument("operation-space map shape mismatch");
  if (!(f * p.e.sigma == q.e.sigma * f))
    throw std::invalid_argument("operation-space map is not S2-equivariant");
  return q.rel.contains(apply_linear(f3_map(f), p.rel));
}

Matrix op_curry(const Matrix& g, int d1, int d2, int d3) {
  if (g.rows != d3 || g.cols != d1 * d2)
    throw std::invalid_argument("curry expects a d3 x (d1*d2) map");
  Matrix h(d2 * d3, d1);
  for (int a = 0; a < d1; ++a)
    for (int c = 0; c < d2; ++c)
      for (int k = 0; k < d3; ++k) h.at(c * d3 + k, a) = g.at(k, a * d2 + c);
  return h;
}

std::pair<bool, bool> op_adjunction_witness(const QuadOperad& p, const QuadOperad& q,
                                            const QuadOperad& r, const Matrix& g) {
  const bool left = op_morphism_check(g, op_black(p, q), r);
  const Matrix g_hat = op_curry(g, p.d(), q.d(), r.d());
  const bool right = op_morphism_check(g_hat, p, op_white(op_dual(q), r));
  return {left, right};
}

Matrix assoc_self_duality_map() { return Matrix::from_rows({{0, 1}, {-1, 0}}); }

QuadOperad op_random_stable(Rng& rng, int max_d) {
  QuadOperad p;
  p.e.d = rng.range(1, max_d);
  if (p.e.d == 1) {
    p.e.sigma = Matrix(1, 1);
    p.e.sigma.at(0, 0) = rng.coin() ? 1 : -1;
  } else {
    switch (rng.range(0, 3)) {
      case 0: p.e.sigma = Matrix::identity(2); break;
      case 1: p.e.sigma = -Matrix::identity(2); break;
      case 2: p.e.sigma = Matrix::from_rows({{0, 1}, {1, 0}}); break;
      default: {
        // Random involution conjugate to diag(1,-1).
        Matrix m(2, 2);
        Rational det = 0;
        while (det == 0) {
          for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) m.at(i, j) = rng.range(-2, 2);
          det = m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
        }
        Matrix inv(2, 2);
        inv.at(0, 0) = m.at(1, 1) / det;
        inv.at(0, 1) = -m.at(0, 1) / det;
        inv.at(1, 0) = -m.at(1, 0) / det;
        inv.at(1, 1) = m.at(0, 0) / det;
        Matrix base = Matrix::from_rows({{1, 0}, {0, -1}});
        p.e.sigma = m * base * inv;
        break;
      }
    }
  }
  const int amb = 3 * p.e.d * p.e.d;
  const int seed_rows = rng.range(0, amb / 2);
  Matrix rows(seed_rows, amb);
  for (int r = 0; r < seed_rows; ++r)
    for (int c = 0; c < amb; ++c)
      if (rng.range(0, 2) == 0) rows.at(r, c) = rng.rational(2, 2);
  Subspace raw = Subspace::from_rows(amb, rows);
  Subspace stable = Subspace::zero(amb);
  for (const Perm3& pi : perm3_all())
    stable = subspace_sum(stable, apply_linear(s3_action(p.e, pi), raw));
  p.rel = stable;
  return p;
}

Matrix equivariant_projection(const Matrix& g, const Matrix& sigma_src,
                              const Matrix& sigma_dst) {
  return scale(rat(1, 2), g + sigma_dst * g * sigma_src);
}

std::string to_string(const QuadOperad& p) {
  std::ostringstream os;
  os << "{d=" << p.d() << ", sigma=" << to_string(p.e.sigma)
     << ", rel=" << to_string(p.rel.basis) << "}";
  return os.str();
}

}  // namespace gv
