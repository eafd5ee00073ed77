#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gv/poly.hpp"
#include "gv/quad_algebra.hpp"

using namespace gv;

namespace {

LinMap1 random_functional(Rng& rng, int dim) {
  Matrix g(1, dim);
  for (int c = 0; c < dim; ++c) g.at(0, c) = rng.rational(3, 2);
  return {g};
}

}  // namespace

TEST_CASE("unit and dualizing presentations") {
  CHECK(qa_unit().n == 1);
  CHECK(qa_unit().rel.dim() == 1);
  CHECK(qa_dualizing().n == 1);
  CHECK(qa_dualizing().rel.dim() == 0);
  CHECK(qa_eq(qa_dual(qa_unit()), qa_dualizing()));
  CHECK(qa_eq(qa_dual(qa_dualizing()), qa_unit()));
}

TEST_CASE("dual of the commutative plane is the exterior presentation") {
  const QuadAlgebra p = qa_polynomial(2);
  CHECK(p.rel.basis == Matrix::from_rows({{0, 1, -1, 0}}));
  const QuadAlgebra d = qa_dual(p);
  // span{e00, e01+e10, e11} in canonical form.
  CHECK(d.rel.basis == Matrix::from_rows({{1, 0, 0, 0}, {0, 1, 1, 0}, {0, 0, 0, 1}}));
  CHECK(qa_eq(d, qa_exterior(2)));
  CHECK(qa_eq(qa_dual(qa_free(2)), QuadAlgebra{2, {}, Subspace::full(4)}));
}

TEST_CASE("dual is an involution on random presentations") {
  Rng rng(101);
  for (int trial = 0; trial < 60; ++trial) {
    const QuadAlgebra a = qa_random(rng);
    CHECK(qa_eq(qa_dual(qa_dual(a)), a));
  }
}

TEST_CASE("s23 permutation indices") {
  CHECK(s23_perm(1, 1) == Matrix::identity(1));

  Rng rng(202);
  for (int trial = 0; trial < 10; ++trial) {
    const int na = rng.range(1, 3), nb = rng.range(1, 3);
    const Matrix p = s23_perm(na, nb);
    // One entry per row and per column, all ones.
    for (int r = 0; r < p.rows; ++r) {
      int count = 0;
      for (int c = 0; c < p.cols; ++c)
        if (p.at(r, c) != 0) {
          CHECK(p.at(r, c) == 1);
          ++count;
        }
      CHECK(count == 1);
    }
    CHECK(p.transpose() * p == Matrix::identity(p.rows));
  }

  // (i1,i2,j1,j2) = (0,1,0,1) ↦ (i1,j1,i2,j2) = (0,0,1,1) for nA = nB = 2.
  const Matrix p22 = s23_perm(2, 2);
  const int src = ((0 * 2 + 1) * 2 + 0) * 2 + 1;
  const int dst = ((0 * 2 + 0) * 2 + 1) * 2 + 1;
  CHECK(p22.at(dst, src) == 1);
}

TEST_CASE("black product dimensions and units") {
  Rng rng(303);
  for (int trial = 0; trial < 30; ++trial) {
    const QuadAlgebra a = qa_random(rng);
    const QuadAlgebra b = qa_random(rng);
    CHECK(qa_black(a, b).rel.dim() == a.rel.dim() * b.rel.dim());
  }
  const QuadAlgebra p = qa_polynomial(2);
  CHECK(qa_eq(qa_black(qa_unit(), p), p));
  CHECK(qa_eq(qa_black(p, qa_unit()), p));
  // Free inputs on one generator stay free.
  CHECK(qa_black(qa_free(1), qa_free(1)).rel.dim() == 0);
}

TEST_CASE("white product units and the remark about the wrong unit") {
  const QuadAlgebra p = qa_polynomial(2);
  CHECK(qa_eq(qa_white(qa_dualizing(), p), p));
  CHECK(qa_eq(qa_white(p, qa_dualizing()), p));
  // B^! ∘ 1 has full relation space, so 1 cannot represent the duality.
  const QuadAlgebra b_dual = qa_dual(p);
  CHECK(qa_white(b_dual, qa_unit()).rel.dim() == 4);
  CHECK(qa_white(qa_unit(), b_dual).rel.dim() == 4);
}

TEST_CASE("comparison inclusion and exchange law") {
  Rng rng(404);
  for (int trial = 0; trial < 40; ++trial) {
    const QuadAlgebra a = qa_random(rng);
    const QuadAlgebra b = qa_random(rng);
    const QuadAlgebra black = qa_black(a, b);
    const QuadAlgebra white = qa_white(a, b);
    CHECK(white.rel.contains(black.rel));
    CHECK(qa_eq(qa_dual(black), qa_white(qa_dual(a), qa_dual(b))));
    CHECK(qa_eq(qa_dual(white), qa_black(qa_dual(a), qa_dual(b))));
  }
}

TEST_CASE("flip symmetry of both products") {
  Rng rng(505);
  for (int trial = 0; trial < 20; ++trial) {
    const QuadAlgebra a = qa_random(rng);
    const QuadAlgebra b = qa_random(rng);
    const Matrix flip2 = kron(flip_perm(a.n, b.n), flip_perm(a.n, b.n));
    CHECK(apply_linear(flip2, qa_black(a, b).rel) == qa_black(b, a).rel);
    CHECK(apply_linear(flip2, qa_white(a, b).rel) == qa_white(b, a).rel);
  }
}

TEST_CASE("strict associativity of both products") {
  Rng rng(606);
  for (int trial = 0; trial < 8; ++trial) {
    const QuadAlgebra a = qa_random(rng, 2);
    const QuadAlgebra b = qa_random(rng, 2);
    const QuadAlgebra c = qa_random(rng, 2);
    CHECK(qa_eq(qa_black(qa_black(a, b), c), qa_black(a, qa_black(b, c))));
    CHECK(qa_eq(qa_white(qa_white(a, b), c), qa_white(a, qa_white(b, c))));
  }
  // One full-size triple.
  const QuadAlgebra x = qa_polynomial(3);
  const QuadAlgebra y = qa_exterior(2);
  const QuadAlgebra z = qa_free(2);
  CHECK(qa_eq(qa_black(qa_black(x, y), z), qa_black(x, qa_black(y, z))));
  CHECK(qa_eq(qa_white(qa_white(x, y), z), qa_white(x, qa_white(y, z))));
}

TEST_CASE("morphism checks") {
  const QuadAlgebra p = qa_polynomial(2);
  CHECK(is_morphism({Matrix::identity(2)}, p, p));
  CHECK(is_morphism({Matrix::zero(2, 2)}, p, p));
  // Swap x ↦ y, y ↦ x preserves the commutativity relation up to sign.
  CHECK(is_morphism({Matrix::from_rows({{0, 1}, {1, 0}})}, p, p));
  // x ↦ x, y ↦ x is a morphism onto the subalgebra.
  CHECK(is_morphism({Matrix::from_rows({{1, 1}, {0, 0}})}, p, p));
  // The swap is not a morphism of the one-sided presentation with rel x⊗y.
  QuadAlgebra q;
  q.n = 2;
  q.rel = Subspace::from_rows(4, Matrix::from_rows({{0, 1, 0, 0}}));
  CHECK_FALSE(is_morphism({Matrix::from_rows({{0, 1}, {1, 0}})}, q, q));
  CHECK_THROWS_AS(is_morphism({Matrix::identity(3)}, p, p), std::invalid_argument);
}

TEST_CASE("curry is a bijection with explicit small cases") {
  CHECK(curry({Matrix::zero(1, 6)}, 2, 3).m == Matrix::zero(3, 2));
  Matrix c(1, 1);
  c.at(0, 0) = rat(5, 3);
  CHECK(curry({c}, 1, 1).m == c);

  Rng rng(707);
  for (int trial = 0; trial < 50; ++trial) {
    const int na = rng.range(1, 3), nb = rng.range(1, 3);
    const LinMap1 g = random_functional(rng, na * nb);
    CHECK(uncurry(curry(g, na, nb), na, nb).m == g.m);
  }
}

TEST_CASE("adjunction witness components always agree") {
  Rng rng(808);
  int seen_true = 0, seen_false = 0;
  for (int trial = 0; trial < 250; ++trial) {
    const QuadAlgebra a = qa_random(rng);
    const QuadAlgebra b = qa_random(rng);
    const LinMap1 g = random_functional(rng, a.n * b.n);
    const auto [left, right] = adjunction_witness(a, b, g);
    CHECK(left == right);
    (left ? seen_true : seen_false) += 1;
  }
  CHECK(seen_true > 0);
  CHECK(seen_false > 0);
}

TEST_CASE("adjunction witness on constructed maps") {
  // Any curried 2x2 matrix gives a morphism from the commutative plane to
  // exterior(2)^!, hence a map with both components true.
  const QuadAlgebra a = qa_polynomial(2);
  const QuadAlgebra b = qa_exterior(2);
  Rng rng(909);
  for (int trial = 0; trial < 12; ++trial) {
    Matrix h(2, 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) h.at(i, j) = rng.rational(3, 1);
    const LinMap1 g = uncurry({h}, a.n, b.n);
    const auto [left, right] = adjunction_witness(a, b, g);
    CHECK(left);
    CHECK(right);
  }
  // Nonzero functionals on the unit pair violate the relation condition on
  // both sides at once.
  for (int c = 1; c <= 12; ++c) {
    Matrix g(1, 1);
    g.at(0, 0) = c;
    const auto [left, right] = adjunction_witness(qa_unit(), qa_unit(), {g});
    CHECK_FALSE(left);
    CHECK_FALSE(right);
  }
}

TEST_CASE("hilbert dimensions") {
  CHECK(hilbert_dims(qa_polynomial(2), 4) == std::vector<long>{1, 2, 3, 4, 5});
  CHECK(hilbert_dims(qa_exterior(2), 4) == std::vector<long>{1, 2, 1, 0, 0});
  CHECK(hilbert_dims(qa_free(2), 4) == std::vector<long>{1, 2, 4, 8, 16});
  CHECK(hilbert_dims(qa_polynomial(1), 5) == std::vector<long>{1, 1, 1, 1, 1, 1});
  CHECK(hilbert_dims(qa_polynomial(3), 4) == std::vector<long>{1, 3, 6, 10, 15});
  CHECK_THROWS_AS(hilbert_dims(qa_free(10), 7), std::length_error);
}

TEST_CASE("graded dimensions of an algebra and its dual multiply to one") {
  for (int m = 1; m <= 3; ++m) {
    const int maxdeg = 6;
    const QuadAlgebra a = qa_polynomial(m);
    const std::vector<long> ha = hilbert_dims(a, maxdeg);
    const std::vector<long> hd = hilbert_dims(qa_dual(a), maxdeg);
    TruncSeries sa = TruncSeries::zero(1, maxdeg);
    TruncSeries sd = TruncSeries::zero(1, maxdeg);
    const TruncSeries t = TruncSeries::variable(1, maxdeg, 0);
    TruncSeries pow = TruncSeries::one(1, maxdeg);
    for (int d = 0; d <= maxdeg; ++d) {
      sa = ts_add(sa, ts_scale(rat(ha[d]), pow));
      sd = ts_add(sd, ts_scale(rat(d % 2 == 0 ? hd[d] : -hd[d]), pow));
      pow = ts_mul(pow, t);
    }
    CHECK(ts_mul(sa, sd) == TruncSeries::one(1, maxdeg));
  }
}
