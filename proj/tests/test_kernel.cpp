#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gv/matrix.hpp"
#include "gv/poly.hpp"
#include "gv/rng.hpp"
#include "gv/subspace.hpp"

using namespace gv;

namespace {

Subspace random_subspace(Rng& rng, int ambient, int max_rows) {
  const int rows = rng.range(0, max_rows);
  Matrix m(rows, ambient);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < ambient; ++c)
      if (rng.range(0, 2) == 0) m.at(r, c) = rng.rational(3, 2);
  return Subspace::from_rows(ambient, m);
}

}  // namespace

TEST_CASE("rational helpers canonicalize") {
  CHECK(rat(2, 4) == rat(1, 2));
  CHECK(rat(-2, 4) == rat(-1, 2));
  CHECK(rat_parse("6/4") == rat(3, 2));
  CHECK(rat_str(rat(-6, 4)) == "-3/2");
  CHECK(rat_parse("-7") == rat(-7));
  CHECK_THROWS_AS(rat_parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(rat_parse("a/2"), std::invalid_argument);
  CHECK_THROWS_AS(rat(1, 0), std::invalid_argument);
}

TEST_CASE("rref drops dependent and zero rows") {
  CHECK(rref(Matrix::from_rows({{2, 4}, {1, 2}})) == Matrix::from_rows({{1, 2}}));
  CHECK(rref(Matrix::identity(4)) == Matrix::identity(4));
  CHECK(rref(Matrix::from_rows({{0, 1}, {1, 0}})) == Matrix::identity(2));
}

TEST_CASE("rref is idempotent and preserves the row space") {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const int ambient = rng.range(1, 8);
    const Subspace u = random_subspace(rng, ambient, ambient + 2);
    CHECK(rref(u.basis) == u.basis);
    // Every original row reduces to zero against the basis.
    CHECK(u.contains(u));
  }
}

TEST_CASE("kron of identities") {
  CHECK(kron(Matrix::identity(2), Matrix::identity(3)) == Matrix::identity(6));
}

TEST_CASE("subspace sum examples") {
  const Subspace ex = Subspace::from_rows(2, Matrix::from_rows({{1, 0}}));
  const Subspace ey = Subspace::from_rows(2, Matrix::from_rows({{0, 1}}));
  CHECK(subspace_sum(ex, ey) == Subspace::full(2));

  const Subspace u = Subspace::from_rows(3, Matrix::from_rows({{1, 1, 0}}));
  CHECK(subspace_sum(u, u) == u);

  const Subspace w = Subspace::from_rows(3, Matrix::from_rows({{0, 1, 1}}));
  const Subspace s = subspace_sum(u, w);
  CHECK(s.dim() == 2);
  CHECK(s.basis == rref(Matrix::from_rows({{1, 1, 0}, {0, 1, 1}})));
}

TEST_CASE("subspace intersection examples") {
  const Subspace diag = Subspace::from_rows(2, Matrix::from_rows({{1, 1}}));
  CHECK(subspace_intersect(Subspace::full(2), diag) == diag);
  CHECK(subspace_intersect(diag, Subspace::zero(2)) == Subspace::zero(2));
  CHECK_THROWS_AS(subspace_intersect(diag, Subspace::full(3)), std::invalid_argument);
}

TEST_CASE("dimension count dim U + dim W = dim(U+W) + dim(U∩W)") {
  Rng rng(7);
  for (int trial = 0; trial < 120; ++trial) {
    const int ambient = rng.range(1, 12);
    const Subspace u = random_subspace(rng, ambient, ambient);
    const Subspace w = random_subspace(rng, ambient, ambient);
    const Subspace sum = subspace_sum(u, w);
    const Subspace inter = subspace_intersect(u, w);
    CHECK(u.dim() + w.dim() == sum.dim() + inter.dim());
    CHECK(u.contains(inter));
    CHECK(w.contains(inter));
    CHECK(sum.contains(u));
    CHECK(sum.contains(w));
  }
}

TEST_CASE("orthogonal complement examples") {
  CHECK(orthogonal_complement(Subspace::zero(5)) == Subspace::full(5));
  const Subspace diag = Subspace::from_rows(2, Matrix::from_rows({{1, 1}}));
  CHECK(orthogonal_complement(diag) ==
        Subspace::from_rows(2, Matrix::from_rows({{1, -1}})));
}

TEST_CASE("orthogonal complement is an order-reversing involution") {
  Rng rng(13);
  for (int trial = 0; trial < 80; ++trial) {
    const int ambient = rng.range(1, 10);
    const Subspace u = random_subspace(rng, ambient, ambient);
    CHECK(orthogonal_complement(orthogonal_complement(u)) == u);
    CHECK(u.dim() + orthogonal_complement(u).dim() == ambient);

    const Subspace w = subspace_sum(u, random_subspace(rng, ambient, ambient));
    // u ⊆ w, so w⊥ ⊆ u⊥.
    CHECK(orthogonal_complement(u).contains(orthogonal_complement(w)));
  }
}

TEST_CASE("apply_linear, preimage and kron_subspace") {
  Rng rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const int src = rng.range(1, 5);
    const int dst = rng.range(1, 5);
    Matrix f(dst, src);
    for (int i = 0; i < dst; ++i)
      for (int j = 0; j < src; ++j) f.at(i, j) = rng.rational(2, 1);
    const Subspace u = random_subspace(rng, src, src);

    CHECK(apply_linear(Matrix::identity(src), u) == u);
    const Subspace img = apply_linear(f, u);
    CHECK(preimage(f, img).contains(u));

    const Subspace w = random_subspace(rng, dst, dst);
    const Subspace kw = kron_subspace(u, w);
    CHECK(kw.dim() == u.dim() * w.dim());
    CHECK(rref(kw.basis) == kw.basis);  // RREF by construction
  }
}

TEST_CASE("incremental rref accumulator matches batch rref") {
  Rng rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const int ambient = rng.range(1, 9);
    const int rows = rng.range(0, 12);
    Matrix m(rows, ambient);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < ambient; ++c)
        if (rng.coin()) m.at(r, c) = rng.rational(3, 2);
    RrefBasis acc(ambient);
    for (int r = 0; r < rows; ++r) acc.insert(m.row(r));
    CHECK(acc.to_matrix() == rref(m));
  }
}

TEST_CASE("polynomial arithmetic basics") {
  const Poly u1 = Poly::variable(2, 0);
  const Poly u2 = Poly::variable(2, 1);
  const Poly prod = poly_mul(poly_mul(u1, u1), u2);  // u1²u2
  CHECK(poly_diff(prod, 0) == poly_scale(2, poly_mul(u1, u2)));
  CHECK(poly_diff(prod, 1) == poly_mul(u1, u1));
  CHECK(poly_eval(prod, {rat(2), rat(3)}) == rat(12));
  CHECK(poly_sub(prod, prod).is_zero());
  CHECK(prod.total_degree() == 3);
  CHECK(poly_truncate(prod, 2).is_zero());
}

TEST_CASE("geometric series inverse") {
  const TruncSeries one = TruncSeries::one(1, 4);
  const TruncSeries t = TruncSeries::variable(1, 4, 0);
  const TruncSeries inv = series_inverse(ts_sub(one, t));
  TruncSeries expected = TruncSeries::zero(1, 4);
  TruncSeries pow = one;
  for (int k = 0; k <= 4; ++k) {
    expected = ts_add(expected, pow);
    pow = ts_mul(pow, t);
  }
  CHECK(inv == expected);
}

TEST_CASE("series inverse multiplies back to one") {
  Rng rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const int nvars = rng.range(1, 3);
    const int cap = rng.range(2, 6);
    TruncSeries s = TruncSeries::zero(nvars, cap);
    for (int t = 0; t < 4; ++t) {
      std::vector<int> e(nvars, 0);
      const int deg = rng.range(0, 3);
      for (int k = 0; k < deg; ++k) e[rng.range(0, nvars - 1)] += 1;
      Rational coef = rng.rational(3, 2);
      if (coef == 0) coef = 1;
      Poly term = Poly::zero(nvars);
      term.terms.emplace(std::move(e), coef);
      s = ts_add(s, TruncSeries::from_poly(term, cap));
    }
    if (s.constant_term() == 0) s = ts_add(s, TruncSeries::one(nvars, cap));
    CHECK(ts_mul(s, series_inverse(s)) == TruncSeries::one(nvars, cap));
  }
}

TEST_CASE("series inverse rejects non-units") {
  CHECK_THROWS_AS(series_inverse(TruncSeries::variable(2, 4, 0)), std::domain_error);
}
