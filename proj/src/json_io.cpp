#include "gv/json_io.hpp"

#include <stdexcept>

namespace gv {

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows; ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols; ++c) row.push_back(rat_str(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("matrix: expected an array of rows");
  const int rows = static_cast<int>(j.size());
  const int cols = rows ? static_cast<int>(j.at(0).size()) : 0;
  Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    if (static_cast<int>(j.at(r).size()) != cols)
      throw std::invalid_argument("matrix: ragged rows");
    for (int c = 0; c < cols; ++c)
      m.at(r, c) = rat_parse(j.at(r).at(c).get<std::string>());
  }
  return m;
}

Json series_to_json(const TruncSeries& s) {
  Json terms = Json::array();
  for (const auto& [e, c] : s.poly.terms) {
    Json t;
    t["e"] = e;
    t["q"] = rat_str(c);
    terms.push_back(std::move(t));
  }
  return terms;
}

TruncSeries series_from_json(const Json& j, int nvars, int cap) {
  Poly p = Poly::zero(nvars);
  for (const auto& t : j) {
    const std::vector<int> e = t.at("e").get<std::vector<int>>();
    if (static_cast<int>(e.size()) != nvars)
      throw std::invalid_argument("series term exponent length mismatch");
    for (int x : e)
      if (x < 0) throw std::invalid_argument("negative exponent in series term");
    const Rational c = rat_parse(t.at("q").get<std::string>());
    if (c != 0) p = poly_add(p, Poly{nvars, {{e, c}}});
  }
  return TruncSeries::from_poly(p, cap);
}

Json qa_to_json(const QuadAlgebra& a) {
  Json j;
  j["n"] = a.n;
  j["names"] = a.names;
  j["rel"] = matrix_to_json(a.rel.basis);
  return j;
}

QuadAlgebra qa_from_json(const Json& j) {
  QuadAlgebra a;
  a.n = j.at("n").get<int>();
  if (a.n <= 0) throw std::invalid_argument("algebra: n must be positive");
  if (j.contains("names")) a.names = j.at("names").get<std::vector<std::string>>();
  if (!a.names.empty() && static_cast<int>(a.names.size()) != a.n)
    throw std::invalid_argument("algebra: names length differs from n");
  Matrix rows = matrix_from_json(j.at("rel"));
  if (rows.rows == 0) rows = Matrix(0, a.n * a.n);
  a.rel = Subspace::from_rows(a.n * a.n, rows);
  return a;
}

Json op_to_json(const QuadOperad& p) {
  Json j;
  j["d"] = p.d();
  j["sigma"] = matrix_to_json(p.e.sigma);
  j["rel"] = matrix_to_json(p.rel.basis);
  return j;
}

QuadOperad op_from_json(const Json& j) {
  QuadOperad p;
  p.e.d = j.at("d").get<int>();
  if (p.e.d <= 0) throw std::invalid_argument("operad: d must be positive");
  p.e.sigma = matrix_from_json(j.at("sigma"));
  if (p.e.sigma.rows != p.e.d || p.e.sigma.cols != p.e.d)
    throw std::invalid_argument("operad: sigma has wrong shape");
  if (!p.e.involutive())
    throw std::invalid_argument("operad: sigma is not an involution");
  const int amb = 3 * p.e.d * p.e.d;
  Matrix rows = matrix_from_json(j.at("rel"));
  if (rows.rows == 0) rows = Matrix(0, amb);
  p.rel = Subspace::from_rows(amb, rows);
  if (!is_s3_stable(p.e, p.rel))
    throw std::invalid_argument("operad: relation space is not S3-stable");
  return p;
}

Json vf_to_json(const VField& v) {
  Json j;
  j["n"] = v.n;
  j["cap"] = v.cap;
  Json coeffs = Json::array();
  for (const auto& s : v.coeffs) coeffs.push_back(series_to_json(s));
  j["coeffs"] = std::move(coeffs);
  return j;
}

VField vf_from_json(const Json& j) {
  VField v;
  v.n = j.at("n").get<int>();
  v.cap = j.at("cap").get<int>();
  if (v.n <= 0 || v.cap < 0) throw std::invalid_argument("field: bad n or cap");
  const Json& coeffs = j.at("coeffs");
  if (static_cast<int>(coeffs.size()) != v.n)
    throw std::invalid_argument("field: coefficient count differs from n");
  for (const auto& s : coeffs) v.coeffs.push_back(series_from_json(s, v.n, v.cap));
  return v;
}

Json fs_to_json(const FStructure& f) {
  Json j;
  j["n"] = f.n;
  j["cap"] = f.cap;
  Json table = Json::array();
  for (int i = 0; i < f.n; ++i)
    for (int k = i; k < f.n; ++k)
      for (int l = 0; l < f.n; ++l) {
        if (f.c_at(i, k, l).is_zero()) continue;
        Json entry;
        entry["i"] = i;
        entry["j"] = k;
        entry["k"] = l;
        entry["s"] = series_to_json(f.c_at(i, k, l));
        table.push_back(std::move(entry));
      }
  j["c"] = std::move(table);
  Json e = Json::array();
  for (const auto& s : f.e.coeffs) e.push_back(series_to_json(s));
  j["e"] = std::move(e);
  return j;
}

FStructure fs_from_json(const Json& j) {
  const int n = j.at("n").get<int>();
  const int cap = j.at("cap").get<int>();
  if (n <= 0 || cap < 0) throw std::invalid_argument("structure: bad n or cap");
  std::vector<TruncSeries> c(static_cast<std::size_t>(n) * n * n,
                             TruncSeries::zero(n, cap));
  for (const auto& entry : j.at("c")) {
    const int i = entry.at("i").get<int>();
    const int k = entry.at("j").get<int>();
    const int l = entry.at("k").get<int>();
    if (i < 0 || i >= n || k < 0 || k >= n || l < 0 || l >= n)
      throw std::invalid_argument("structure: index out of range in c");
    const TruncSeries s = series_from_json(entry.at("s"), n, cap);
    c[(static_cast<std::size_t>(i) * n + k) * n + l] = s;
    c[(static_cast<std::size_t>(k) * n + i) * n + l] = s;
  }
  VField e;
  e.n = n;
  e.cap = cap;
  const Json& ej = j.at("e");
  if (static_cast<int>(ej.size()) != n)
    throw std::invalid_argument("structure: identity field has wrong length");
  for (const auto& s : ej) e.coeffs.push_back(series_from_json(s, n, cap));
  return make_f_structure(n, cap, std::move(c), std::move(e));
}

Json gv_report_to_json(const GVReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json x;
    x["axiom"] = e.axiom;
    x["pass"] = e.pass;
    x["counterexample"] = e.pass ? Json(nullptr) : Json(e.counterexample);
    entries.push_back(std::move(x));
  }
  Json j;
  j["results"] = std::move(entries);
  j["all_pass"] = r.all_pass();
  return j;
}

Json check_report_to_json(const CheckReport& r) {
  Json j;
  j["pass"] = r.pass;
  j["failures"] = r.failures;
  return j;
}

Json eventual_report_to_json(const EventualReport& r) {
  Json j;
  j["eventual_identity"] = r.ok;
  j["invertible"] = r.invertible;
  j["criterion"] = r.criterion_ok;
  j["failures"] = r.failures;
  return j;
}

Json group_report_to_json(const GroupCheckReport& r) {
  Json j;
  j["pass"] = r.pass;
  j["product_ok"] = r.product_ok;
  j["commutator_invertible"] = r.commutator_invertible;
  j["commutator_ok"] = r.commutator_ok;
  j["failures"] = r.failures;
  return j;
}

Json coisotropy_report_to_json(const CoisotropyReport& r) {
  Json j;
  j["pass"] = r.pass;
  j["brackets_ok"] = r.brackets_ok;
  j["kernel_rank_ok"] = r.kernel_rank_ok;
  j["failures"] = r.failures;
  return j;
}

}  // namespace gv
