#ifndef GV_GV_HARNESS_HPP
#define GV_GV_HARNESS_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace gv {

// One axiom outcome; a failure always carries a concrete counterexample.
struct GVCheckResult {
  std::string axiom;
  bool pass = false;
  std::string counterexample;  // empty on pass
};

struct GVReport {
  std::vector<GVCheckResult> entries;

  bool all_pass() const {
    for (const auto& e : entries)
      if (!e.pass) return false;
    return true;
  }
};

// Instance description for the duality axiom suite. The harness knows
// nothing about the concrete category: objects are opaque, and equality
// "up to canonical identification" is whatever predicate the instance
// supplies. Negative controls are built by copying an instance and
// swapping out one of the function members.
template <typename Obj>
struct GVInstance {
  std::string name;
  std::function<std::vector<Obj>(std::uint64_t seed, int count)> sample_objects;
  std::function<Obj(const Obj&, const Obj&)> black;
  std::function<Obj(const Obj&, const Obj&)> white;
  std::function<Obj(const Obj&)> dual;
  Obj unit;
  Obj dualizing;
  std::function<bool(const Obj&, const Obj&)> eq;
  std::function<bool(const Obj&, const Obj&)> rel_included;
  std::function<std::string(const Obj&)> describe;
};

namespace harness_detail {

template <typename Obj>
std::string pair_text(const GVInstance<Obj>& inst, const Obj& x, const Obj& y) {
  return "X=" + inst.describe(x) + " Y=" + inst.describe(y);
}

}  // namespace harness_detail

template <typename Obj>
GVCheckResult check_dual_involution(const GVInstance<Obj>& inst,
                                    const std::vector<Obj>& objects) {
  for (const Obj& x : objects)
    if (!inst.eq(inst.dual(inst.dual(x)), x))
      return {"dual_involution", false, "X=" + inst.describe(x)};
  return {"dual_involution", true, ""};
}

template <typename Obj>
GVCheckResult check_dk_of_k(const GVInstance<Obj>& inst) {
  if (!inst.eq(inst.dual(inst.dualizing), inst.unit))
    return {"dual_of_dualizing_is_unit", false,
            "dual(K)=" + inst.describe(inst.dual(inst.dualizing))};
  if (!inst.eq(inst.dual(inst.unit), inst.dualizing))
    return {"dual_of_dualizing_is_unit", false,
            "dual(1)=" + inst.describe(inst.dual(inst.unit))};
  return {"dual_of_dualizing_is_unit", true, ""};
}

template <typename Obj>
GVCheckResult check_white_units(const GVInstance<Obj>& inst,
                                const std::vector<Obj>& objects) {
  for (const Obj& x : objects) {
    if (!inst.eq(inst.white(inst.dualizing, x), x))
      return {"white_units", false,
              "K∘X ≠ X for X=" + inst.describe(x) + ", got " +
                  inst.describe(inst.white(inst.dualizing, x))};
    if (!inst.eq(inst.white(x, inst.dualizing), x))
      return {"white_units", false,
              "X∘K ≠ X for X=" + inst.describe(x) + ", got " +
                  inst.describe(inst.white(x, inst.dualizing))};
  }
  return {"white_units", true, ""};
}

template <typename Obj>
GVCheckResult check_exchange(const GVInstance<Obj>& inst,
                             const std::vector<std::pair<Obj, Obj>>& pairs) {
  for (const auto& [x, y] : pairs)
    if (!inst.eq(inst.dual(inst.black(x, y)), inst.white(inst.dual(x), inst.dual(y))))
      return {"exchange_law", false, harness_detail::pair_text(inst, x, y)};
  return {"exchange_law", true, ""};
}

template <typename Obj>
GVCheckResult check_comparison(const GVInstance<Obj>& inst,
                               const std::vector<std::pair<Obj, Obj>>& pairs) {
  for (const auto& [x, y] : pairs)
    if (!inst.rel_included(inst.black(x, y), inst.white(x, y)))
      return {"comparison_inclusion", false, harness_detail::pair_text(inst, x, y)};
  return {"comparison_inclusion", true, ""};
}

template <typename Obj>
GVCheckResult check_associativity(const GVInstance<Obj>& inst,
                                  const std::vector<std::array<Obj, 3>>& triples) {
  for (const auto& t : triples) {
    const Obj& x = t[0];
    const Obj& y = t[1];
    const Obj& z = t[2];
    if (!inst.eq(inst.black(inst.black(x, y), z), inst.black(x, inst.black(y, z))))
      return {"associativity", false,
              "black: " + harness_detail::pair_text(inst, x, y) +
                  " Z=" + inst.describe(z)};
    if (!inst.eq(inst.white(inst.white(x, y), z), inst.white(x, inst.white(y, z))))
      return {"associativity", false,
              "white: " + harness_detail::pair_text(inst, x, y) +
                  " Z=" + inst.describe(z)};
  }
  return {"associativity", true, ""};
}

// Full suite. Pairs and triples are drawn by rotating the sampled object
// list, so a fixed seed fixes the whole run.
template <typename Obj>
GVReport run_gv_suite(const GVInstance<Obj>& inst, std::uint64_t seed, int samples) {
  const std::vector<Obj> objects = inst.sample_objects(seed, samples);
  std::vector<std::pair<Obj, Obj>> pairs;
  std::vector<std::array<Obj, 3>> triples;
  const std::size_t n = objects.size();
  for (std::size_t i = 0; i < n; ++i) {
    pairs.emplace_back(objects[i], objects[(i + 1) % n]);
    if (i % 3 == 0)
      triples.push_back({objects[i], objects[(i + 1) % n], objects[(i + 2) % n]});
  }
  GVReport report;
  report.entries.push_back(check_dual_involution(inst, objects));
  report.entries.push_back(check_dk_of_k(inst));
  report.entries.push_back(check_white_units(inst, objects));
  report.entries.push_back(check_exchange(inst, pairs));
  report.entries.push_back(check_comparison(inst, pairs));
  report.entries.push_back(check_associativity(inst, triples));
  return report;
}

}  // namespace gv

#endif
