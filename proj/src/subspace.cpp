#include "gv/subspace.hpp"

#include <sstream>
#include <stdexcept>

namespace gv {

namespace {

void require_same_ambient(const Subspace& u, const Subspace& w) {
  if (u.ambient != w.ambient)
    throw std::invalid_argument("subspace ambient dimensions differ");
}

}  // namespace

Subspace Subspace::zero(int ambient) {
  Subspace s;
  s.ambient = ambient;
  s.basis = Matrix(0, ambient);
  return s;
}

Subspace Subspace::full(int ambient) {
  Subspace s;
  s.ambient = ambient;
  s.basis = Matrix::identity(ambient);
  return s;
}

Subspace Subspace::from_rows(int ambient, const Matrix& rows) {
  if (rows.rows > 0 && rows.cols != ambient)
    throw std::invalid_argument("row length does not match ambient dimension");
  Subspace s;
  s.ambient = ambient;
  Matrix padded = rows;
  if (rows.rows == 0) padded = Matrix(0, ambient);
  s.basis = rref(padded);
  return s;
}

bool Subspace::contains(const std::vector<Rational>& v) const {
  if (static_cast<int>(v.size()) != ambient)
    throw std::invalid_argument("vector length does not match ambient dimension");
  std::vector<Rational> w = v;
  for (int i = 0; i < basis.rows; ++i) {
    int piv = 0;
    while (basis.at(i, piv) == 0) ++piv;
    if (w[piv] == 0) continue;
    const Rational c = w[piv];
    for (int j = piv; j < ambient; ++j)
      if (basis.at(i, j) != 0) w[j] -= c * basis.at(i, j);
  }
  for (const auto& x : w)
    if (x != 0) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  require_same_ambient(*this, other);
  for (int r = 0; r < other.basis.rows; ++r)
    if (!contains(other.basis.row(r))) return false;
  return true;
}

Subspace subspace_sum(const Subspace& u, const Subspace& w) {
  require_same_ambient(u, w);
  return Subspace::from_rows(u.ambient, vstack(u.basis, w.basis));
}

Subspace subspace_intersect(const Subspace& u, const Subspace& w) {
  require_same_ambient(u, w);
  if (u.dim() == 0 || w.dim() == 0) return Subspace::zero(u.ambient);
  // Pairs (alpha, beta) with alpha·U = beta·W are the kernel of the
  // transposed stack [U; -W]; the alpha part then spans the intersection.
  const Matrix stacked = vstack(u.basis, -w.basis);
  const Matrix pairs = kernel(stacked.transpose());
  Matrix rows(pairs.rows, u.ambient);
  for (int r = 0; r < pairs.rows; ++r)
    for (int i = 0; i < u.basis.rows; ++i) {
      const Rational& c = pairs.at(r, i);
      if (c == 0) continue;
      for (int j = 0; j < u.ambient; ++j)
        if (u.basis.at(i, j) != 0) rows.at(r, j) += c * u.basis.at(i, j);
    }
  return Subspace::from_rows(u.ambient, rows);
}

Subspace orthogonal_complement(const Subspace& u) {
  Subspace s;
  s.ambient = u.ambient;
  s.basis = u.dim() == 0 ? Matrix::identity(u.ambient) : kernel(u.basis);
  return s;
}

Subspace apply_linear(const Matrix& f, const Subspace& u) {
  if (f.cols != u.ambient)
    throw std::invalid_argument("linear map source dimension mismatch");
  Matrix rows(u.basis.rows, f.rows);
  for (int r = 0; r < u.basis.rows; ++r)
    for (int j = 0; j < u.ambient; ++j) {
      const Rational& c = u.basis.at(r, j);
      if (c == 0) continue;
      for (int i = 0; i < f.rows; ++i)
        if (f.at(i, j) != 0) rows.at(r, i) += c * f.at(i, j);
    }
  return Subspace::from_rows(f.rows, rows);
}

Subspace preimage(const Matrix& f, const Subspace& u) {
  if (f.rows != u.ambient)
    throw std::invalid_argument("linear map target dimension mismatch");
  if (u.dim() == u.ambient) return Subspace::full(f.cols);
  const Matrix constraints = orthogonal_complement(u).basis;
  Subspace s;
  s.ambient = f.cols;
  s.basis = kernel(constraints * f);
  return s;
}

Subspace kron_subspace(const Subspace& u, const Subspace& w) {
  // Kronecker products of RREF rows, taken in lexicographic row order,
  // are again an RREF basis, so no re-reduction is needed.
  Subspace s;
  s.ambient = u.ambient * w.ambient;
  Matrix rows(u.dim() * w.dim(), s.ambient);
  for (int i = 0; i < u.dim(); ++i)
    for (int j = 0; j < w.dim(); ++j) {
      const int r = i * w.dim() + j;
      for (int p = 0; p < u.ambient; ++p) {
        const Rational& x = u.basis.at(i, p);
        if (x == 0) continue;
        for (int q = 0; q < w.ambient; ++q) {
          const Rational& y = w.basis.at(j, q);
          if (y != 0) rows.at(r, p * w.ambient + q) = x * y;
        }
      }
    }
  s.basis = rows;
  return s;
}

std::string to_string(const Subspace& s) {
  std::ostringstream os;
  os << "span" << to_string(s.basis) << " in dim " << s.ambient;
  return os.str();
}

}  // namespace gv
