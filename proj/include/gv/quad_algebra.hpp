#ifndef GV_QUAD_ALGEBRA_HPP
#define GV_QUAD_ALGEBRA_HPP

#include <string>
#include <utility>
#include <vector>

#include "gv/rng.hpp"
#include "gv/subspace.hpp"

namespace gv {

// Quadratic algebra presented by its degree-1 space (dimension n) and a
// relation subspace rel ⊆ A₁⊗A₁. Coordinates on A₁⊗A₁ are lexicographic:
// basis vector e_i⊗e_j sits at index i*n + j (zero-based). Presentations
// are compared literally; tensor factors of dimension 1 flatten to
// identical indices, so unit laws below hold as exact equality.
struct QuadAlgebra {
  int n = 0;
  std::vector<std::string> names;  // optional generator labels
  Subspace rel;                    // ambient n²

  bool valid() const { return rel.ambient == n * n; }
};

// Degree-1 linear map between presentations: matrix of shape
// (target n) × (source n).
struct LinMap1 {
  Matrix m;
};

// Equality of presentations (labels ignored).
bool qa_eq(const QuadAlgebra& a, const QuadAlgebra& b);

// Unit for the black product: one generator τ with relation τ⊗τ.
QuadAlgebra qa_unit();

// Dualizing object: one generator, no relations (polynomial ring k[t]).
QuadAlgebra qa_dualizing();

// Koszul dual {A₁*, rel⊥}, dual basis identified with the standard one.
QuadAlgebra qa_dual(const QuadAlgebra& a);

// Permutation matrix on dimension nA²·nB² sending the lexicographic index
// (i₁,i₂,j₁,j₂) of A₁⊗A₁⊗B₁⊗B₁ to (i₁,j₁,i₂,j₂) of (A₁⊗B₁)⊗(A₁⊗B₁).
Matrix s23_perm(int na, int nb);

// Index permutation A₁⊗B₁ → B₁⊗A₁, (i,j) ↦ (j,i); used for the flip
// symmetry of the two products.
Matrix flip_perm(int na, int nb);

QuadAlgebra qa_black(const QuadAlgebra& a, const QuadAlgebra& b);
QuadAlgebra qa_white(const QuadAlgebra& a, const QuadAlgebra& b);

// True iff (f⊗f)(rel(a)) ⊆ rel(b).
bool is_morphism(const LinMap1& f, const QuadAlgebra& a, const QuadAlgebra& b);

// For g : A₁⊗B₁ → k (a 1 × nA·nB matrix), the curried map ĝ : A₁ → B₁*
// with ĝ(x)(y) = g(x⊗y); a linear bijection of map spaces.
LinMap1 curry(const LinMap1& g, int na, int nb);
LinMap1 uncurry(const LinMap1& g_hat, int na, int nb);

// Pair (g is a morphism (a•b) → K, curry(g) is a morphism a → b^!).
std::pair<bool, bool> adjunction_witness(const QuadAlgebra& a, const QuadAlgebra& b,
                                         const LinMap1& g);

// Dimensions of graded components 0..maxdeg. Throws std::length_error when
// n^maxdeg exceeds coord_budget (dense exact linear algebra guard).
std::vector<long> hilbert_dims(const QuadAlgebra& a, int maxdeg,
                               long coord_budget = 1000000);

// Stock presentations.
QuadAlgebra qa_polynomial(int n);  // commutative polynomial ring
QuadAlgebra qa_exterior(int n);
QuadAlgebra qa_free(int n);  // no relations

// Deterministic random presentation with 1 ≤ n ≤ max_n.
QuadAlgebra qa_random(Rng& rng, int max_n = 3);

std::string to_string(const QuadAlgebra& a);

}  // namespace gv

#endif
