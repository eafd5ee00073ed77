#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gv/gv_instances.hpp"

using namespace gv;

namespace {

GVCheckResult find_entry(const GVReport& rep, const std::string& axiom) {
  for (const auto& e : rep.entries)
    if (e.axiom == axiom) return e;
  FAIL("axiom entry not found: " << axiom);
  return {};
}

}  // namespace

TEST_CASE("algebra instance passes the whole suite") {
  const GVReport rep = run_gv_suite(qa_gv_instance(), 7, 30);
  for (const auto& e : rep.entries) {
    CAPTURE(e.axiom);
    CAPTURE(e.counterexample);
    CHECK(e.pass);
  }
  CHECK(rep.all_pass());
}

TEST_CASE("operad instance: every axiom except the comparison inclusion") {
  const GVReport rep = run_gv_suite(qo_gv_instance(), 7, 16);
  CHECK(find_entry(rep, "dual_involution").pass);
  CHECK(find_entry(rep, "dual_of_dualizing_is_unit").pass);
  CHECK(find_entry(rep, "white_units").pass);
  CHECK(find_entry(rep, "exchange_law").pass);
  CHECK(find_entry(rep, "associativity").pass);
  // The presentation-level inclusion of black relations in white relations
  // is an algebra phenomenon; it fails for operads, and the report carries
  // a concrete counterexample.
  const GVCheckResult cmp = find_entry(rep, "comparison_inclusion");
  CHECK_FALSE(cmp.pass);
  CHECK_FALSE(cmp.counterexample.empty());
}

TEST_CASE("instance equality predicates behave like equivalences") {
  const auto inst = qa_gv_instance();
  const auto objects = inst.sample_objects(99, 12);
  for (const auto& x : objects) {
    CHECK(inst.eq(x, x));
    for (const auto& y : objects) {
      CHECK(inst.eq(x, y) == inst.eq(y, x));
      for (const auto& z : objects)
        if (inst.eq(x, y) && inst.eq(y, z)) CHECK(inst.eq(x, z));
    }
  }
}

TEST_CASE("negative control: broken duality fails with a counterexample") {
  // Conjugating the complement by a coordinate shift destroys the
  // involution property.
  auto inst = qa_gv_instance();
  inst.dual = [](const QuadAlgebra& a) {
    QuadAlgebra d = qa_dual(a);
    Matrix shift(d.rel.ambient, d.rel.ambient);
    for (int i = 0; i < d.rel.ambient; ++i)
      shift.at((i + 1) % d.rel.ambient, i) = 1;
    d.rel = apply_linear(shift, d.rel);
    return d;
  };
  const auto objects = inst.sample_objects(5, 20);
  const GVCheckResult res = check_dual_involution(inst, objects);
  CHECK_FALSE(res.pass);
  CHECK_FALSE(res.counterexample.empty());
}

TEST_CASE("negative control: dropping the sign twist on operad duals") {
  auto inst = qo_gv_instance();
  inst.dual = [](const QuadOperad& p) {
    QuadOperad d = op_dual(p);
    d.e.sigma = p.e.sigma.transpose();  // forget the sign twist
    return d;
  };
  const GVCheckResult res = check_dk_of_k(inst);
  CHECK_FALSE(res.pass);
  CHECK_FALSE(res.counterexample.empty());
}

TEST_CASE("negative control: the black unit is not a dualizing object") {
  // Substituting the black unit for the dualizing object breaks the white
  // unit law (the products with it have full relation spaces).
  auto inst = qa_gv_instance();
  inst.dualizing = inst.unit;
  const auto objects = inst.sample_objects(11, 20);
  const GVCheckResult res = check_white_units(inst, objects);
  CHECK_FALSE(res.pass);
  CHECK_FALSE(res.counterexample.empty());
}

TEST_CASE("negative control: a wrong tensor shuffle breaks the exchange law") {
  auto inst = qa_gv_instance();
  inst.black = [](const QuadAlgebra& a, const QuadAlgebra& b) {
    QuadAlgebra r;
    r.n = a.n * b.n;
    r.rel = kron_subspace(a.rel, b.rel);  // missing the index shuffle
    return r;
  };
  const auto objects = inst.sample_objects(13, 24);
  std::vector<std::pair<QuadAlgebra, QuadAlgebra>> pairs;
  for (std::size_t i = 0; i + 1 < objects.size(); i += 2)
    pairs.emplace_back(objects[i], objects[i + 1]);
  const GVCheckResult res = check_exchange(inst, pairs);
  CHECK_FALSE(res.pass);
  CHECK_FALSE(res.counterexample.empty());
}

TEST_CASE("negative control: swapped products break the comparison inclusion") {
  auto inst = qa_gv_instance();
  std::swap(inst.black, inst.white);
  const auto objects = inst.sample_objects(17, 24);
  std::vector<std::pair<QuadAlgebra, QuadAlgebra>> pairs;
  for (std::size_t i = 0; i + 1 < objects.size(); i += 2)
    pairs.emplace_back(objects[i], objects[i + 1]);
  const GVCheckResult res = check_comparison(inst, pairs);
  CHECK_FALSE(res.pass);
  CHECK_FALSE(res.counterexample.empty());
}

TEST_CASE("reports aggregate entries") {
  GVReport rep;
  rep.entries.push_back({"a", true, ""});
  CHECK(rep.all_pass());
  rep.entries.push_back({"b", false, "oops"});
  CHECK_FALSE(rep.all_pass());
}
