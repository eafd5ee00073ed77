#ifndef GV_JSON_IO_HPP
#define GV_JSON_IO_HPP

#include <json.hpp>

#include "gv/f_structure.hpp"
#include "gv/gv_harness.hpp"
#include "gv/quad_algebra.hpp"
#include "gv/quad_operad.hpp"

namespace gv {

using Json = nlohmann::ordered_json;

// Rationals travel as exact strings "p/q"; series as arrays of
// {"e": [exponents], "q": "coefficient"} terms.

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json series_to_json(const TruncSeries& s);
TruncSeries series_from_json(const Json& j, int nvars, int cap);

// {n, names, rel: coefficient rows}
Json qa_to_json(const QuadAlgebra& a);
QuadAlgebra qa_from_json(const Json& j);

// {d, sigma: matrix, rel: coefficient rows}; validates the involution
// and S₃-stability on load.
Json op_to_json(const QuadOperad& p);
QuadOperad op_from_json(const Json& j);

// {n, cap, coeffs: [series...]}
Json vf_to_json(const VField& v);
VField vf_from_json(const Json& j);

// {n, cap, c: [{i,j,k,s: series}...] (i ≤ j, mirrored on load), e: [series...]}
Json fs_to_json(const FStructure& f);
FStructure fs_from_json(const Json& j);

Json gv_report_to_json(const GVReport& r);
Json check_report_to_json(const CheckReport& r);
Json eventual_report_to_json(const EventualReport& r);
Json group_report_to_json(const GroupCheckReport& r);
Json coisotropy_report_to_json(const CoisotropyReport& r);

}  // namespace gv

#endif
