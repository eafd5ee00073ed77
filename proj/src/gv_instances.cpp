#include "gv/gv_instances.hpp"

namespace gv {

GVInstance<QuadAlgebra> qa_gv_instance(int max_n) {
  GVInstance<QuadAlgebra> inst;
  inst.name = "quadratic_algebras";
  inst.sample_objects = [max_n](std::uint64_t seed, int count) {
    Rng rng(seed);
    std::vector<QuadAlgebra> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) out.push_back(qa_random(rng, max_n));
    return out;
  };
  inst.black = [](const QuadAlgebra& a, const QuadAlgebra& b) { return qa_black(a, b); };
  inst.white = [](const QuadAlgebra& a, const QuadAlgebra& b) { return qa_white(a, b); };
  inst.dual = [](const QuadAlgebra& a) { return qa_dual(a); };
  inst.unit = qa_unit();
  inst.dualizing = qa_dualizing();
  inst.eq = [](const QuadAlgebra& a, const QuadAlgebra& b) { return qa_eq(a, b); };
  inst.rel_included = [](const QuadAlgebra& a, const QuadAlgebra& b) {
    return a.n == b.n && b.rel.contains(a.rel);
  };
  inst.describe = [](const QuadAlgebra& a) { return to_string(a); };
  return inst;
}

GVInstance<QuadOperad> qo_gv_instance(int max_d) {
  GVInstance<QuadOperad> inst;
  inst.name = "binary_quadratic_operads";
  inst.sample_objects = [max_d](std::uint64_t seed, int count) {
    std::vector<QuadOperad> out;
    out.push_back(op_lie());
    out.push_back(op_comm());
    out.push_back(op_assoc());
    Rng rng(seed);
    while (static_cast<int>(out.size()) < count)
      out.push_back(op_random_stable(rng, max_d));
    return out;
  };
  inst.black = [](const QuadOperad& p, const QuadOperad& q) { return op_black(p, q); };
  inst.white = [](const QuadOperad& p, const QuadOperad& q) { return op_white(p, q); };
  inst.dual = [](const QuadOperad& p) { return op_dual(p); };
  inst.unit = op_lie();
  inst.dualizing = op_comm();
  inst.eq = [](const QuadOperad& p, const QuadOperad& q) { return op_eq(p, q); };
  inst.rel_included = [](const QuadOperad& p, const QuadOperad& q) {
    return p.d() == q.d() && q.rel.contains(p.rel);
  };
  inst.describe = [](const QuadOperad& p) { return to_string(p); };
  return inst;
}

}  // namespace gv
