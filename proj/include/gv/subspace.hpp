#ifndef GV_SUBSPACE_HPP
#define GV_SUBSPACE_HPP

#include <string>

#include "gv/matrix.hpp"

namespace gv {

// Linear subspace of an ambient coordinate space, stored as its reduced
// row-echelon basis. The basis is canonical: two subspaces are equal iff
// their stored bases are identical, so operator== decides equality of
// row spaces.
struct Subspace {
  int ambient = 0;
  Matrix basis;  // RREF, rows independent, row length == ambient

  static Subspace zero(int ambient);
  static Subspace full(int ambient);
  static Subspace from_rows(int ambient, const Matrix& rows);

  int dim() const { return basis.rows; }
  bool contains(const std::vector<Rational>& v) const;
  bool contains(const Subspace& other) const;

  bool operator==(const Subspace& o) const = default;
};

Subspace subspace_sum(const Subspace& u, const Subspace& w);

// Computed via the kernel of the stacked bases.
Subspace subspace_intersect(const Subspace& u, const Subspace& w);

// Complement with respect to the standard dot pairing on coordinates.
Subspace orthogonal_complement(const Subspace& u);

// Image of u under the linear map with matrix f (target dim = f.rows,
// source dim = f.cols; vectors are rows, so rows map through fᵀ).
Subspace apply_linear(const Matrix& f, const Subspace& u);

// Full preimage { x : f x ∈ u }.
Subspace preimage(const Matrix& f, const Subspace& u);

// Subspace spanned by pairwise Kronecker products of basis rows; the
// result basis is RREF by construction.
Subspace kron_subspace(const Subspace& u, const Subspace& w);

std::string to_string(const Subspace& s);

}  // namespace gv

#endif
