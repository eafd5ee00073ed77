#ifndef GV_QUAD_OPERAD_HPP
#define GV_QUAD_OPERAD_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "gv/rng.hpp"
#include "gv/subspace.hpp"

namespace gv {

// ---------------------------------------------------------------------------
// Arity-3 tree coordinates.
//
// A binary quadratic operad is presented by an S₂-module E of binary
// operations (dimension d, involution sigma) together with a relation
// subspace inside the arity-3 component of the free operad on E. That
// component has a canonical basis of decorated trees (t, a, b):
//
//   t ∈ {1,2,3}  the lone leaf attached directly to the root vertex,
//   a            basis index of the root operation,
//   b            basis index of the inner operation.
//
// The inner vertex combines the remaining pair of leaves (i, j), i < j,
// and the root takes its inputs in the order (inner output, lone leaf).
// Flat index: (t-1)·d² + a·d + b. Dimension: 3d².
//
// Leaf relabelling by a permutation π moves the lone leaf to π(t) and
// applies sigma to the inner slot exactly when π reverses the order of
// (i, j). Each tree also carries the sign of its leaf-reading order
// (i, j, t), namely (+1, −1, +1) for t = (1, 2, 3); those signs enter the
// duality pairing and the transfer map psi3 below, and they are what make
// the unit, duality and exchange laws hold on the nose.
// ---------------------------------------------------------------------------

// Permutation of {1,2,3}; perm[i] is the 0-based image of leaf i+1.
using Perm3 = std::array<int, 3>;

Perm3 perm3_identity();
std::vector<Perm3> perm3_all();
Perm3 perm3_compose(const Perm3& p, const Perm3& q);  // apply q, then p
int perm3_sign(const Perm3& p);

// Tree signs s_t, t = 0,1,2 (0-based lone leaf).
int tree_sign(int t);

// S₂-module of binary operations: dimension and the involution matrix.
struct S2Module {
  int d = 0;
  Matrix sigma;

  bool involutive() const { return sigma * sigma == Matrix::identity(d); }
};

struct QuadOperad {
  S2Module e;
  Subspace rel;  // ambient 3d²

  int d() const { return e.d; }
  bool valid() const { return rel.ambient == 3 * e.d * e.d; }
};

bool op_eq(const QuadOperad& p, const QuadOperad& q);

int tree_index(int t, int a, int b, int d);

// Matrix of the leaf-relabelling action of pi on the arity-3 component.
Matrix s3_action(const S2Module& e, const Perm3& pi);

// True iff apply_linear(s3_action(e, pi), rel) == rel for all pi.
bool is_s3_stable(const S2Module& e, const Subspace& rel);

// Stock operads.
QuadOperad op_lie();
QuadOperad op_comm();
QuadOperad op_assoc();

// Dual presentation: sigma ↦ -sigmaᵀ, relations ↦ orthogonal complement
// with respect to the tree-signed pairing
//   <(t,a,b), (t',a',b')> = δ_tt' s_t δ_aa' δ_bb'.
QuadOperad op_dual(const QuadOperad& p);

// Transfer maps between F(E₁⊗E₂)(3) and F(E₁)(3)⊗F(E₂)(3):
//   phi3:  (t, a⊗c, b⊗d) ↦ (t,a,b)⊗(t,c,d)
//   psi3:  (s,a,b)⊗(t,c,d) ↦ δ_st s_t (t, a⊗c, b⊗d)
// psi3∘phi3 = diag(s_t) per tree block; phi3∘psi3 kills mismatched pairs.
Matrix phi3(const S2Module& e1, const S2Module& e2);
Matrix psi3(const S2Module& e1, const S2Module& e2);

// Black product: E₁⊗E₂ with the sign-twisted involution -sigma₁⊗sigma₂,
// relations psi3((R₁ ⊗ full) ∩ (full ⊗ R₂)).
QuadOperad op_black(const QuadOperad& p, const QuadOperad& q);

// White product: E₁⊗E₂ with involution sigma₁⊗sigma₂, relations
// phi3⁻¹((R₁ ⊗ full) + (full ⊗ R₂)).
QuadOperad op_white(const QuadOperad& p, const QuadOperad& q);

// Arity-3 component of the free-operad functor on an E-map:
// (t,a,b) ↦ (t, f(a), f(b)).
Matrix f3_map(const Matrix& f);

// True iff f is S₂-equivariant and F(f)(3)(rel_p) ⊆ rel_q. Throws on a
// non-equivariant map.
bool op_morphism_check(const Matrix& f, const QuadOperad& p, const QuadOperad& q);

// For g : E₁⊗E₂ → E₃, the curried map E₁ → E₂*⊗E₃.
Matrix op_curry(const Matrix& g, int d1, int d2, int d3);

// Pair (g is a morphism p•q → r, curried g is a morphism p → q^!∘r).
std::pair<bool, bool> op_adjunction_witness(const QuadOperad& p, const QuadOperad& q,
                                            const QuadOperad& r, const Matrix& g);

// Frozen identification E* ≅ E realizing the self-duality of op_assoc.
Matrix assoc_self_duality_map();

// Deterministic random presentation: d ≤ max_d, involutive sigma, and an
// S₃-stable relation subspace (stabilized by summing over the orbit).
QuadOperad op_random_stable(Rng& rng, int max_d = 2);

// Projects a raw map onto the S₂-equivariant maps (source twisted by the
// black-product involution); used when sampling adjunction witnesses.
Matrix equivariant_projection(const Matrix& g, const Matrix& sigma_src,
                              const Matrix& sigma_dst);

std::string to_string(const QuadOperad& p);

}  // namespace gv

#endif
