#pragma once

#include <gmpxx.h>

#include <string>

#include "parastab/error.hpp"

namespace parastab {

// Exact rational scalar. All arithmetic in the library is exact; floating
// point appears nowhere in results.
using Rat = mpq_class;

// Renders canonically: "p" when the denominator is 1, else "p/q" with q > 0.
inline std::string rat_str(const Rat &x) {
  Rat c = x;
  c.canonicalize();
  if (c.get_den() == 1)
    return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

// Parses "p" or "p/q" with optional leading '-'. Rejects empty parts,
// stray characters and zero denominators.
inline Rat rat_parse(const std::string &s, const std::string &location) {
  auto fail = [&]() -> Rat {
    throw ValidationError(location, "not a rational: '" + s + "'");
  };
  if (s.empty())
    return fail();
  std::string num = s, den = "1";
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
    if (num.empty() || den.empty() || den.find('/') != std::string::npos)
      return fail();
  }
  auto digits = [](const std::string &t) {
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size())
      return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9')
        return false;
    return true;
  };
  if (!digits(num) || !digits(den))
    return fail();
  mpz_class n(num), d(den);
  if (d == 0)
    throw ValidationError(location, "zero denominator in '" + s + "'");
  Rat r(n, d);
  r.canonicalize();
  return r;
}

inline int rat_sign(const Rat &x) { return sgn(x); }

} // namespace parastab
