#include "gv/f_structure.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gv {

VField VField::zero(int n, int cap) {
  VField v;
  v.n = n;
  v.cap = cap;
  v.coeffs.assign(n, TruncSeries::zero(n, cap));
  return v;
}

VField VField::coordinate(int n, int cap, int i) {
  VField v = zero(n, cap);
  v.coeffs[i] = TruncSeries::one(n, cap);
  return v;
}

bool VField::is_zero() const {
  for (const auto& s : coeffs)
    if (!s.is_zero()) return false;
  return true;
}

namespace {

void require_compatible(const VField& x, const VField& y) {
  if (x.n != y.n || x.cap != y.cap)
    throw std::invalid_argument("vector fields live on different patches");
}

}  // namespace

VField vf_add(const VField& x, const VField& y) {
  require_compatible(x, y);
  VField r = x;
  for (int i = 0; i < x.n; ++i) r.coeffs[i] = ts_add(x.coeffs[i], y.coeffs[i]);
  return r;
}

VField vf_sub(const VField& x, const VField& y) {
  require_compatible(x, y);
  VField r = x;
  for (int i = 0; i < x.n; ++i) r.coeffs[i] = ts_sub(x.coeffs[i], y.coeffs[i]);
  return r;
}

VField vf_scale(const TruncSeries& g, const VField& x) {
  VField r = x;
  for (auto& s : r.coeffs) s = ts_mul(g, s);
  return r;
}

VField vf_scale(const Rational& c, const VField& x) {
  VField r = x;
  for (auto& s : r.coeffs) s = ts_scale(c, s);
  return r;
}

bool vf_eq_mod(const VField& x, const VField& y, int deg) {
  require_compatible(x, y);
  for (int i = 0; i < x.n; ++i)
    if (!(poly_truncate(x.coeffs[i].poly, deg) == poly_truncate(y.coeffs[i].poly, deg)))
      return false;
  return true;
}

bool vf_zero_mod(const VField& x, int deg) {
  for (const auto& s : x.coeffs)
    if (!poly_truncate(s.poly, deg).is_zero()) return false;
  return true;
}

VField vf_bracket(const VField& x, const VField& y) {
  require_compatible(x, y);
  VField r = VField::zero(x.n, x.cap);
  for (int k = 0; k < x.n; ++k) {
    TruncSeries acc = TruncSeries::zero(x.n, x.cap);
    for (int i = 0; i < x.n; ++i) {
      acc = ts_add(acc, ts_mul(x.coeffs[i], ts_diff(y.coeffs[k], i)));
      acc = ts_sub(acc, ts_mul(y.coeffs[i], ts_diff(x.coeffs[k], i)));
    }
    r.coeffs[k] = acc;
  }
  return r;
}

FStructure make_f_structure(int n, int cap, std::vector<TruncSeries> c, VField e) {
  if (static_cast<int>(c.size()) != n * n * n)
    throw std::invalid_argument("structure function table has wrong size");
  if (e.n != n || e.cap != cap)
    throw std::invalid_argument("identity field does not match the patch");
  FStructure f;
  f.n = n;
  f.cap = cap;
  f.c = std::move(c);
  f.e = std::move(e);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (!(f.c_at(i, j, k) == f.c_at(j, i, k)))
          throw std::invalid_argument("structure functions are not symmetric");
  return f;
}

VField vf_mul(const FStructure& f, const VField& x, const VField& y) {
  require_compatible(x, y);
  if (x.n != f.n || x.cap != f.cap)
    throw std::invalid_argument("vector field does not match the structure");
  VField r = VField::zero(f.n, f.cap);
  for (int i = 0; i < f.n; ++i) {
    if (x.coeffs[i].is_zero()) continue;
    for (int j = 0; j < f.n; ++j) {
      if (y.coeffs[j].is_zero()) continue;
      const TruncSeries prod = ts_mul(x.coeffs[i], y.coeffs[j]);
      for (int k = 0; k < f.n; ++k) {
        const TruncSeries& ck = f.c_at(i, j, k);
        if (ck.is_zero()) continue;
        r.coeffs[k] = ts_add(r.coeffs[k], ts_mul(prod, ck));
      }
    }
  }
  return r;
}

VField poisson_tensor(const FStructure& f, const VField& a, const VField& b,
                      const VField& c) {
  VField r = vf_bracket(a, vf_mul(f, b, c));
  r = vf_sub(r, vf_mul(f, vf_bracket(a, b), c));
  r = vf_sub(r, vf_mul(f, b, vf_bracket(a, c)));
  return r;
}

VField f_identity_defect(const FStructure& f, const VField& x, const VField& y,
                         const VField& z, const VField& w) {
  const VField xy = vf_mul(f, x, y);
  const VField zw = vf_mul(f, z, w);
  VField r = vf_bracket(xy, zw);
  r = vf_sub(r, vf_mul(f, vf_bracket(xy, z), w));
  r = vf_sub(r, vf_mul(f, z, vf_bracket(xy, w)));
  r = vf_sub(r, vf_mul(f, x, vf_bracket(y, zw)));
  r = vf_add(r, vf_mul(f, x, vf_mul(f, vf_bracket(y, z), w)));
  r = vf_add(r, vf_mul(f, x, vf_mul(f, z, vf_bracket(y, w))));
  r = vf_sub(r, vf_mul(f, y, vf_bracket(x, zw)));
  r = vf_add(r, vf_mul(f, y, vf_mul(f, vf_bracket(x, z), w)));
  r = vf_add(r, vf_mul(f, y, vf_mul(f, z, vf_bracket(x, w))));
  return r;
}

TruncSeries random_series(Rng& rng, int nvars, int cap, int max_deg) {
  TruncSeries s = TruncSeries::zero(nvars, cap);
  const int terms = rng.range(1, 3);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> e(nvars, 0);
    const int deg = rng.range(0, max_deg);
    for (int k = 0; k < deg; ++k) e[rng.range(0, nvars - 1)] += 1;
    Poly term = Poly::zero(nvars);
    Rational c = rng.rational(2, 2);
    if (c == 0) c = 1;
    term.terms.emplace(std::move(e), c);
    s = ts_add(s, TruncSeries::from_poly(term, cap));
  }
  return s;
}

namespace {

VField random_field(Rng& rng, const FStructure& f) {
  // Series multiple of a coordinate field, g·∂_i.
  VField v = VField::zero(f.n, f.cap);
  v.coeffs[rng.range(0, f.n - 1)] = random_series(rng, f.n, f.cap);
  return v;
}

std::string field_text(const VField& v) { return to_string(v); }

}  // namespace

CheckReport check_f_structure(const FStructure& f, int samples, std::uint64_t seed) {
  CheckReport rep;
  auto fail = [&rep](const std::string& msg) {
    rep.pass = false;
    rep.failures.push_back(msg);
  };

  std::vector<VField> basis;
  for (int i = 0; i < f.n; ++i) basis.push_back(VField::coordinate(f.n, f.cap, i));

  for (int i = 0; i < f.n; ++i)
    for (int j = 0; j < f.n; ++j) {
      if (!(vf_mul(f, basis[i], basis[j]) == vf_mul(f, basis[j], basis[i])))
        fail("commutativity fails on coordinate pair (" + std::to_string(i + 1) + "," +
             std::to_string(j + 1) + ")");
      for (int k = 0; k < f.n; ++k) {
        const VField lhs = vf_mul(f, vf_mul(f, basis[i], basis[j]), basis[k]);
        const VField rhs = vf_mul(f, basis[i], vf_mul(f, basis[j], basis[k]));
        if (!(lhs == rhs))
          fail("associativity fails on coordinate triple (" + std::to_string(i + 1) +
               "," + std::to_string(j + 1) + "," + std::to_string(k + 1) + ")");
      }
    }
  for (int i = 0; i < f.n; ++i)
    if (!(vf_mul(f, f.e, basis[i]) == basis[i]))
      fail("identity axiom fails on coordinate field " + std::to_string(i + 1));

  // F-identity on all coordinate quadruples; bracket results are reliable
  // up to cap - 1 only.
  const int defect_deg = f.cap - 1;
  for (int i = 0; i < f.n; ++i)
    for (int j = 0; j < f.n; ++j)
      for (int k = 0; k < f.n; ++k)
        for (int l = 0; l < f.n; ++l) {
          const VField d = f_identity_defect(f, basis[i], basis[j], basis[k], basis[l]);
          if (!vf_zero_mod(d, defect_deg)) {
            fail("defect nonzero on coordinate quadruple (" + std::to_string(i + 1) +
                 "," + std::to_string(j + 1) + "," + std::to_string(k + 1) + "," +
                 std::to_string(l + 1) + "): " + field_text(d));
            if (static_cast<int>(rep.failures.size()) > 8) return rep;
          }
        }

  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    const VField a = random_field(rng, f);
    const VField b = random_field(rng, f);
    const VField c = random_field(rng, f);
    const VField d = random_field(rng, f);
    if (!(vf_mul(f, a, b) == vf_mul(f, b, a)))
      fail("commutativity fails on sampled pair #" + std::to_string(s));
    if (!(vf_mul(f, vf_mul(f, a, b), c) == vf_mul(f, a, vf_mul(f, b, c))))
      fail("associativity fails on sampled triple #" + std::to_string(s));
    if (!(vf_mul(f, f.e, a) == a))
      fail("identity axiom fails on sampled field #" + std::to_string(s));
    if (!vf_zero_mod(f_identity_defect(f, a, b, c, d), defect_deg)) {
      fail("defect nonzero on sampled quadruple #" + std::to_string(s));
      if (static_cast<int>(rep.failures.size()) > 16) return rep;
    }
  }
  return rep;
}

std::vector<TruncSeries> mult_matrix(const FStructure& f, const VField& eps) {
  std::vector<TruncSeries> m(static_cast<std::size_t>(f.n) * f.n,
                             TruncSeries::zero(f.n, f.cap));
  for (int j = 0; j < f.n; ++j) {
    const VField col = vf_mul(f, eps, VField::coordinate(f.n, f.cap, j));
    for (int k = 0; k < f.n; ++k) m[static_cast<std::size_t>(k) * f.n + j] = col.coeffs[k];
  }
  return m;
}

TruncSeries series_det(const std::vector<TruncSeries>& m, int n) {
  if (n == 0) throw std::invalid_argument("empty matrix");
  const int nvars = m[0].nvars();
  const int cap = m[0].cap;
  // Leibniz expansion; n stays small here.
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  TruncSeries det = TruncSeries::zero(nvars, cap);
  do {
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inv;
    TruncSeries prod = TruncSeries::one(nvars, cap);
    for (int i = 0; i < n && !prod.is_zero(); ++i)
      prod = ts_mul(prod, m[static_cast<std::size_t>(i) * n + perm[i]]);
    det = inv % 2 == 0 ? ts_add(det, prod) : ts_sub(det, prod);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

EventualReport is_eventual_identity(const FStructure& f, const VField& eps, int samples,
                                    std::uint64_t seed) {
  EventualReport rep;
  const TruncSeries det = series_det(mult_matrix(f, eps), f.n);
  rep.invertible = det.constant_term() != 0;
  if (!rep.invertible)
    rep.failures.push_back("multiplication-by-eps determinant is not a unit");

  const VField le = vf_bracket(f.e, eps);
  rep.criterion_ok = true;
  auto check_pair = [&](const VField& x, const VField& y, const std::string& label) {
    const VField lhs = poisson_tensor(f, eps, x, y);
    const VField rhs = vf_mul(f, le, vf_mul(f, x, y));
    if (!vf_eq_mod(lhs, rhs, f.cap - 1)) {
      rep.criterion_ok = false;
      rep.failures.push_back("criterion fails on " + label);
    }
  };
  for (int i = 0; i < f.n; ++i)
    for (int j = i; j < f.n; ++j)
      check_pair(VField::coordinate(f.n, f.cap, i), VField::coordinate(f.n, f.cap, j),
                 "coordinate pair (" + std::to_string(i + 1) + "," +
                     std::to_string(j + 1) + ")");
  Rng rng(seed);
  for (int s = 0; s < samples; ++s)
    check_pair(random_field(rng, f), random_field(rng, f),
               "sampled pair #" + std::to_string(s));

  rep.ok = rep.invertible && rep.criterion_ok;
  return rep;
}

VField bullet_inverse(const FStructure& f, const VField& eps) {
  const std::vector<TruncSeries> m = mult_matrix(f, eps);
  const TruncSeries det = series_det(m, f.n);
  if (det.constant_term() == 0)
    throw std::domain_error("bullet_inverse: field is not invertible");
  const TruncSeries det_inv = series_inverse(det);
  VField x = VField::zero(f.n, f.cap);
  for (int j = 0; j < f.n; ++j) {
    // Cramer: replace column j by the identity field's coefficients.
    std::vector<TruncSeries> mj = m;
    for (int k = 0; k < f.n; ++k) mj[static_cast<std::size_t>(k) * f.n + j] = f.e.coeffs[k];
    x.coeffs[j] = ts_mul(series_det(mj, f.n), det_inv);
  }
  return x;
}

VField bullet_pow(const FStructure& f, const VField& eps, int k) {
  if (k == 0) return f.e;
  const VField base = k > 0 ? eps : bullet_inverse(f, eps);
  VField acc = base;
  for (int i = 1; i < (k > 0 ? k : -k); ++i) acc = vf_mul(f, acc, base);
  return acc;
}

FStructure dubrovin_dual(const FStructure& f, const VField& eps) {
  const VField inv = bullet_inverse(f, eps);  // throws on a non-unit
  std::vector<TruncSeries> c(static_cast<std::size_t>(f.n) * f.n * f.n,
                             TruncSeries::zero(f.n, f.cap));
  FStructure g;
  g.n = f.n;
  g.cap = f.cap;
  for (int i = 0; i < f.n; ++i)
    for (int j = i; j < f.n; ++j) {
      const VField prod = vf_mul(
          f, vf_mul(f, VField::coordinate(f.n, f.cap, i), VField::coordinate(f.n, f.cap, j)),
          inv);
      for (int k = 0; k < f.n; ++k) {
        c[(static_cast<std::size_t>(i) * f.n + j) * f.n + k] = prod.coeffs[k];
        c[(static_cast<std::size_t>(j) * f.n + i) * f.n + k] = prod.coeffs[k];
      }
    }
  g.c = std::move(c);
  g.e = eps;
  return g;
}

bool commutator_identity_3_8(const FStructure& f, const VField& eps, int a, int b) {
  const VField lhs = vf_bracket(bullet_pow(f, eps, a), bullet_pow(f, eps, b));
  VField rhs = vf_mul(f, bullet_pow(f, eps, a + b - 1), vf_bracket(f.e, eps));
  rhs = vf_scale(rat(b - a), rhs);
  return vf_eq_mod(lhs, rhs, f.cap - 1);
}

GroupCheckReport eventual_group_check(const FStructure& f, const VField& eps1,
                                      const VField& eps2) {
  GroupCheckReport rep;
  const EventualReport prod = is_eventual_identity(f, vf_mul(f, eps1, eps2));
  rep.product_ok = prod.ok;
  if (!prod.ok) rep.failures.push_back("product eps1•eps2 is not an eventual identity");

  const VField comm = vf_bracket(eps1, eps2);
  rep.commutator_invertible =
      series_det(mult_matrix(f, comm), f.n).constant_term() != 0;
  if (rep.commutator_invertible) {
    const EventualReport cr = is_eventual_identity(f, comm);
    rep.commutator_ok = cr.ok;
    if (!cr.ok)
      rep.failures.push_back("invertible commutator [eps1,eps2] fails the criterion");
  }
  rep.pass = rep.product_ok && (!rep.commutator_invertible || rep.commutator_ok);
  return rep;
}

FStructure semisimple_structure(int n, int cap) {
  std::vector<TruncSeries> c(static_cast<std::size_t>(n) * n * n,
                             TruncSeries::zero(n, cap));
  for (int i = 0; i < n; ++i) c[(static_cast<std::size_t>(i) * n + i) * n + i] =
      TruncSeries::one(n, cap);
  VField e = VField::zero(n, cap);
  for (int i = 0; i < n; ++i) e.coeffs[i] = TruncSeries::one(n, cap);
  return make_f_structure(n, cap, std::move(c), std::move(e));
}

namespace {

FStructure two_dim_structure(int cap, const TruncSeries& c221) {
  // n = 2 with identity ∂₁ and ∂₂•∂₂ = c221·∂₁.
  const int n = 2;
  std::vector<TruncSeries> c(8, TruncSeries::zero(n, cap));
  auto set = [&](int i, int j, int k, const TruncSeries& v) {
    c[(static_cast<std::size_t>(i) * n + j) * n + k] = v;
  };
  const TruncSeries one = TruncSeries::one(n, cap);
  set(0, 0, 0, one);
  set(0, 1, 1, one);
  set(1, 0, 1, one);
  set(1, 1, 0, c221);
  VField e = VField::zero(n, cap);
  e.coeffs[0] = one;
  return make_f_structure(n, cap, std::move(c), std::move(e));
}

}  // namespace

FStructure i2_3_structure(int cap) {
  return two_dim_structure(cap, TruncSeries::variable(2, cap, 1));
}

FStructure nonf_control_structure(int cap) {
  return two_dim_structure(cap, TruncSeries::variable(2, cap, 0));
}

std::string to_string(const VField& x) {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < x.n; ++i) {
    if (x.coeffs[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << to_string(x.coeffs[i].poly) << ")*d" << (i + 1);
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace gv
