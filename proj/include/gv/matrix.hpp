#ifndef GV_MATRIX_HPP
#define GV_MATRIX_HPP

#include <initializer_list>
#include <vector>

#include "gv/rational.hpp"

namespace gv {

// Dense row-major matrix over the rationals.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<Rational> a;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

  Rational& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  const Rational& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

  static Matrix zero(int r, int c) { return Matrix(r, c); }
  static Matrix identity(int n);
  // Convenience for literals in tests and stock constructions.
  static Matrix from_rows(std::initializer_list<std::initializer_list<long>> rows);

  Matrix transpose() const;
  std::vector<Rational> row(int r) const;

  bool operator==(const Matrix& o) const = default;
};

Matrix operator*(const Matrix& x, const Matrix& y);
Matrix operator+(const Matrix& x, const Matrix& y);
Matrix operator-(const Matrix& x, const Matrix& y);
Matrix operator-(const Matrix& x);
Matrix scale(const Rational& c, const Matrix& x);

// Kronecker product with lexicographic index convention:
// (a ⊗ b)[i*p + k][j*q + l] = a[i][j] * b[k][l].
Matrix kron(const Matrix& x, const Matrix& y);

Matrix vstack(const Matrix& top, const Matrix& bottom);

// Reduced row-echelon form with zero rows dropped; row space unchanged.
Matrix rref(const Matrix& m);

int rank(const Matrix& m);

// Basis of { x : m x = 0 } as matrix rows, in reduced row-echelon form.
Matrix kernel(const Matrix& m);

// Incremental RREF accumulator: rows stay reduced after every insert.
class RrefBasis {
 public:
  explicit RrefBasis(int ambient) : ambient_(ambient) {}

  // Returns true if the row enlarged the span.
  bool insert(std::vector<Rational> v);
  int dim() const { return static_cast<int>(rows_.size()); }
  int ambient() const { return ambient_; }
  Matrix to_matrix() const;

 private:
  int ambient_;
  std::vector<std::vector<Rational>> rows_;  // sorted by pivot column
  std::vector<int> pivots_;
};

std::string to_string(const Matrix& m);

}  // namespace gv

#endif
