#ifndef GV_RATIONAL_HPP
#define GV_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace gv {

// Exact rational scalar. GMP keeps values canonical (lowest terms,
// positive denominator) for every arithmetic result; the factory
// functions below canonicalize the raw constructions that do not.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "p", "-p", "p/q" with an optional sign on p.
inline Rational rat_parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  std::string s(text);
  std::size_t slash = s.find('/');
  auto digits_ok = [](std::string_view v, bool allow_sign) {
    if (v.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (v[0] == '-' || v[0] == '+')) i = 1;
    if (i == v.size()) return false;
    for (; i < v.size(); ++i)
      if (v[i] < '0' || v[i] > '9') return false;
    return true;
  };
  if (slash == std::string::npos) {
    if (!digits_ok(s, true)) throw std::invalid_argument("bad rational literal: " + s);
  } else {
    if (!digits_ok(std::string_view(s).substr(0, slash), true) ||
        !digits_ok(std::string_view(s).substr(slash + 1), false))
      throw std::invalid_argument("bad rational literal: " + s);
  }
  Rational r(s);
  if (r.get_den() == 0) throw std::invalid_argument("rational with zero denominator");
  r.canonicalize();
  return r;
}

inline std::string rat_str(const Rational& r) { return r.get_str(); }

}  // namespace gv

#endif
