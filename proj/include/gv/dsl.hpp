#ifndef GV_DSL_HPP
#define GV_DSL_HPP

#include <stdexcept>
#include <string>

#include "gv/quad_algebra.hpp"

namespace gv {

// Parse error with 1-based source position.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int col, const std::string& msg)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) + ": " + msg),
        line(line),
        col(col) {}

  int line;
  int col;
};

// Presentation language:
//
//   algebra NAME { gens ID (, ID)* ; rels EXPR (, EXPR)* ; }
//
// EXPR is a rational-linear combination of degree-2 words `ID*ID` built
// with `+ - *` and rational literals `p/q`. Relation rows come out in
// lexicographic word order. A bare literal `0` is accepted as the zero
// relation.
QuadAlgebra parse_algebra(const std::string& src);

// Canonical text form; parse(serialize(a)) reproduces a exactly.
std::string serialize_algebra(const QuadAlgebra& a, const std::string& name = "A");

}  // namespace gv

#endif
