#ifndef GV_GV_INSTANCES_HPP
#define GV_GV_INSTANCES_HPP

#include "gv/gv_harness.hpp"
#include "gv/quad_algebra.hpp"
#include "gv/quad_operad.hpp"

namespace gv {

// Quadratic-algebra instance: random presentations with n ≤ max_n.
GVInstance<QuadAlgebra> qa_gv_instance(int max_n = 3);

// Quadratic-operad instance: the stock operads plus random S₃-stable
// presentations with d ≤ max_d.
GVInstance<QuadOperad> qo_gv_instance(int max_d = 2);

}  // namespace gv

#endif
