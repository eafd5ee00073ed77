#ifndef GV_F_STRUCTURE_HPP
#define GV_F_STRUCTURE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gv/poly.hpp"
#include "gv/ppoly.hpp"
#include "gv/rng.hpp"

namespace gv {

// Vector field on a coordinate patch u_1..u_n with truncated-series
// coefficients: coeffs[i] multiplies ∂_i.
struct VField {
  int n = 0;
  int cap = 0;
  std::vector<TruncSeries> coeffs;

  static VField zero(int n, int cap);
  static VField coordinate(int n, int cap, int i);  // ∂_i

  bool is_zero() const;
  bool operator==(const VField& o) const = default;
};

VField vf_add(const VField& x, const VField& y);
VField vf_sub(const VField& x, const VField& y);
VField vf_scale(const TruncSeries& g, const VField& x);
VField vf_scale(const Rational& c, const VField& x);

// Equality of the coefficient jets up to total degree `deg`. Identities
// that involve the Lie bracket are decided at deg = cap - 1: the top
// coefficient of a differentiated degree-cap jet depends on dropped
// information, so it carries no meaning. Polynomial structure functions
// make every computation exact, and the stock structures are asserted at
// full cap in the tests.
bool vf_eq_mod(const VField& x, const VField& y, int deg);
bool vf_zero_mod(const VField& x, int deg);

// Lie bracket [X,Y]^k = Σ_i (X^i ∂_i Y^k − Y^i ∂_i X^k), truncated at cap.
VField vf_bracket(const VField& x, const VField& y);

// Multiplication on vector fields with identity field e: structure
// functions c[(i·n+j)·n+k] give ∂_i • ∂_j = Σ_k c_ij^k ∂_k, extended
// bilinearly over series coefficients.
struct FStructure {
  int n = 0;
  int cap = 0;
  std::vector<TruncSeries> c;
  VField e;

  const TruncSeries& c_at(int i, int j, int k) const { return c[(i * n + j) * n + k]; }
  TruncSeries& c_at(int i, int j, int k) { return c[(i * n + j) * n + k]; }
};

FStructure make_f_structure(int n, int cap, std::vector<TruncSeries> c, VField e);

VField vf_mul(const FStructure& f, const VField& x, const VField& y);

// P_a(b,c) = [a, b•c] − [a,b]•c − b•[a,c].
VField poisson_tensor(const FStructure& f, const VField& a, const VField& b,
                      const VField& c);

// Nine-term arity-four expansion; zero for every quadruple exactly when
// the multiplication satisfies the compatibility identity with the
// bracket. Equals P_{X•Y}(Z,W) − X•P_Y(Z,W) − Y•P_X(Z,W).
VField f_identity_defect(const FStructure& f, const VField& x, const VField& y,
                         const VField& z, const VField& w);

struct CheckReport {
  bool pass = true;
  std::vector<std::string> failures;
};

// Commutativity, associativity, the identity axiom for e, and vanishing
// defect on all coordinate quadruples plus `samples` series-multiplied
// quadruples.
CheckReport check_f_structure(const FStructure& f, int samples = 100,
                              std::uint64_t seed = 1);

struct EventualReport {
  bool ok = false;
  bool invertible = false;
  bool criterion_ok = false;
  std::vector<std::string> failures;
};

// eps is an eventual identity iff P_eps(X,Y) = [e,eps]•X•Y for all fields
// and the multiplication-by-eps matrix is invertible over the series ring
// (unit determinant constant term).
EventualReport is_eventual_identity(const FStructure& f, const VField& eps,
                                    int samples = 10, std::uint64_t seed = 2);

// n×n multiplication matrix of eps over the series ring, row-major:
// entry (k, j) is the ∂_k coefficient of eps • ∂_j.
std::vector<TruncSeries> mult_matrix(const FStructure& f, const VField& eps);

TruncSeries series_det(const std::vector<TruncSeries>& m, int n);

// •-inverse field: solves eps • x = e by Cramer's rule over the series
// ring. Throws std::domain_error when the determinant is not a unit.
VField bullet_inverse(const FStructure& f, const VField& eps);

// eps^{•k}; k = 0 gives e, negative k powers the •-inverse.
VField bullet_pow(const FStructure& f, const VField& eps, int k);

// Twisted structure X∘Y = X•Y•eps⁻¹ with identity eps.
FStructure dubrovin_dual(const FStructure& f, const VField& eps);

// [eps^{•a}, eps^{•b}] = (b−a) eps^{•(a+b−1)} • [e,eps], up to cap.
bool commutator_identity_3_8(const FStructure& f, const VField& eps, int a, int b);

struct GroupCheckReport {
  bool pass = false;
  bool product_ok = false;
  bool commutator_invertible = false;
  bool commutator_ok = false;  // meaningful only when invertible
  std::vector<std::string> failures;
};

// eps1•eps2 must be an eventual identity; when [eps1,eps2] is invertible
// it must be one too.
GroupCheckReport eventual_group_check(const FStructure& f, const VField& eps1,
                                      const VField& eps2);

// Stock structures.
FStructure semisimple_structure(int n, int cap);  // ∂_i•∂_j = δ_ij ∂_i
FStructure i2_3_structure(int cap);               // n=2, ∂₂•∂₂ = u₂∂₁, e=∂₁
FStructure nonf_control_structure(int cap);       // n=2, ∂₂•∂₂ = u₁∂₁ (defect ≠ 0)

// Deterministic random series (low degree, small coefficients).
TruncSeries random_series(Rng& rng, int nvars, int cap, int max_deg = 2);

std::string to_string(const VField& x);

// --- Spectral cover -------------------------------------------------------

// Generators of the ideal cutting out the spectral cover inside the
// cotangent patch: {1 − Σ_k e^k p_k} ∪ {p_i p_j − Σ_k c_ij^k p_k, i ≤ j}.
std::vector<PPoly> spectral_ideal_generators(const FStructure& f);

// Evaluation homomorphism onto vector fields: p_i ↦ ∂_i with • products,
// base scalars g ↦ g·e. Throws std::domain_error when the u-degree of h
// overflows the series cap.
VField eval_hom(const FStructure& f, const PPoly& h);

struct CoisotropyReport {
  bool pass = false;
  bool brackets_ok = false;
  bool kernel_rank_ok = false;
  std::vector<std::string> failures;
};

// The ideal is stable under the canonical Poisson bracket iff the
// evaluation of every pairwise bracket of generators vanishes. Also
// validates that the degree-≤2 quotient has rank n at the origin.
CoisotropyReport check_coisotropy(const FStructure& f);

// Finite-dimensional fiber algebra at a rational point: structure
// constants and identity evaluated at u0 (structure functions are read
// as exact polynomials).
struct FiberAlgebra {
  int n = 0;
  std::vector<Rational> c;  // (i·n+j)·n+k
  std::vector<Rational> e;
};

FiberAlgebra fiber_algebra(const FStructure& f, const std::vector<Rational>& u0);

// Semisimplicity in characteristic zero: the trace form of the regular
// representation is nondegenerate.
bool is_semisimple_fiber(const FiberAlgebra& alg);

}  // namespace gv

#endif
