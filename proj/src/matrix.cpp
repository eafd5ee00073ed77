#include "gv/matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace gv {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  Matrix m(static_cast<int>(rows.size()),
           rows.size() ? static_cast<int>(rows.begin()->size()) : 0);
  int r = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != m.cols)
      throw std::invalid_argument("ragged rows in matrix literal");
    int c = 0;
    for (long v : row) m.at(r, c++) = v;
    ++r;
  }
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols, rows);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
  return t;
}

std::vector<Rational> Matrix::row(int r) const {
  return std::vector<Rational>(a.begin() + static_cast<std::size_t>(r) * cols,
                               a.begin() + static_cast<std::size_t>(r + 1) * cols);
}

Matrix operator*(const Matrix& x, const Matrix& y) {
  if (x.cols != y.rows) throw std::invalid_argument("matrix product shape mismatch");
  Matrix z(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const Rational& f = x.at(i, k);
      if (f == 0) continue;
      for (int j = 0; j < y.cols; ++j) {
        const Rational& g = y.at(k, j);
        if (g != 0) z.at(i, j) += f * g;
      }
    }
  return z;
}

Matrix operator+(const Matrix& x, const Matrix& y) {
  if (x.rows != y.rows || x.cols != y.cols)
    throw std::invalid_argument("matrix sum shape mismatch");
  Matrix z = x;
  for (std::size_t i = 0; i < z.a.size(); ++i) z.a[i] += y.a[i];
  return z;
}

Matrix operator-(const Matrix& x, const Matrix& y) {
  if (x.rows != y.rows || x.cols != y.cols)
    throw std::invalid_argument("matrix difference shape mismatch");
  Matrix z = x;
  for (std::size_t i = 0; i < z.a.size(); ++i) z.a[i] -= y.a[i];
  return z;
}

Matrix operator-(const Matrix& x) {
  Matrix z = x;
  for (auto& v : z.a) v = -v;
  return z;
}

Matrix scale(const Rational& c, const Matrix& x) {
  Matrix z = x;
  for (auto& v : z.a) v *= c;
  return z;
}

Matrix kron(const Matrix& x, const Matrix& y) {
  Matrix z(x.rows * y.rows, x.cols * y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) {
      const Rational& f = x.at(i, j);
      if (f == 0) continue;
      for (int k = 0; k < y.rows; ++k)
        for (int l = 0; l < y.cols; ++l) {
          const Rational& g = y.at(k, l);
          if (g != 0) z.at(i * y.rows + k, j * y.cols + l) = f * g;
        }
    }
  return z;
}

Matrix vstack(const Matrix& top, const Matrix& bottom) {
  if (top.rows == 0) return bottom;
  if (bottom.rows == 0) return top;
  if (top.cols != bottom.cols) throw std::invalid_argument("vstack width mismatch");
  Matrix z(top.rows + bottom.rows, top.cols);
  z.a.assign(top.a.begin(), top.a.end());
  z.a.insert(z.a.end(), bottom.a.begin(), bottom.a.end());
  return z;
}

bool RrefBasis::insert(std::vector<Rational> v) {
  if (static_cast<int>(v.size()) != ambient_)
    throw std::invalid_argument("row length does not match ambient dimension");
  // Reduce against existing pivots.
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Rational& f = v[pivots_[k]];
    if (f == 0) continue;
    const Rational c = f;  // copy: v mutates below
    const auto& rk = rows_[k];
    for (int j = pivots_[k]; j < ambient_; ++j)
      if (rk[j] != 0) v[j] -= c * rk[j];
  }
  int piv = -1;
  for (int j = 0; j < ambient_; ++j)
    if (v[j] != 0) {
      piv = j;
      break;
    }
  if (piv < 0) return false;
  const Rational lead = v[piv];
  for (int j = piv; j < ambient_; ++j)
    if (v[j] != 0) v[j] /= lead;
  // Back-eliminate the new pivot column from existing rows.
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    Rational& f = rows_[k][piv];
    if (f == 0) continue;
    const Rational c = f;
    for (int j = piv; j < ambient_; ++j)
      if (v[j] != 0) rows_[k][j] -= c * v[j];
  }
  std::size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(v));
  pivots_.insert(pivots_.begin() + pos, piv);
  return true;
}

Matrix RrefBasis::to_matrix() const {
  Matrix m(static_cast<int>(rows_.size()), ambient_);
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (int c = 0; c < ambient_; ++c) m.at(static_cast<int>(r), c) = rows_[r][c];
  return m;
}

Matrix rref(const Matrix& m) {
  RrefBasis basis(m.cols);
  for (int r = 0; r < m.rows; ++r) basis.insert(m.row(r));
  return basis.to_matrix();
}

int rank(const Matrix& m) { return rref(m).rows; }

Matrix kernel(const Matrix& m) {
  const Matrix r = rref(m);
  std::vector<int> pivot_col(r.rows);
  std::vector<bool> is_pivot(m.cols, false);
  for (int i = 0; i < r.rows; ++i) {
    int j = 0;
    while (r.at(i, j) == 0) ++j;
    pivot_col[i] = j;
    is_pivot[j] = true;
  }
  Matrix out(m.cols - r.rows, m.cols);
  int k = 0;
  for (int f = 0; f < m.cols; ++f) {
    if (is_pivot[f]) continue;
    out.at(k, f) = 1;
    for (int i = 0; i < r.rows; ++i) out.at(k, pivot_col[i]) = -r.at(i, f);
    ++k;
  }
  return rref(out);
}

std::string to_string(const Matrix& m) {
  std::ostringstream os;
  os << "[";
  for (int r = 0; r < m.rows; ++r) {
    os << (r ? "; " : "");
    for (int c = 0; c < m.cols; ++c) os << (c ? " " : "") << rat_str(m.at(r, c));
  }
  os << "]";
  return os.str();
}

}  // namespace gv
