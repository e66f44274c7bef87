#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace detline {

// Exact rationals, always in lowest terms with positive denominator.
using Rational = mpq_class;

inline Rational rat(long n, long d = 1) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

// Serialized form is "p/q", with "/q" dropped when q == 1.
inline std::string rat_str(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rational rat_parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rational q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

inline Rational rat_pow(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  if (base == 0) {
    if (e < 0) throw std::domain_error("0^negative");
    return Rational(0);
  }
  Rational b = e < 0 ? Rational(1) / base : base;
  Rational out(1);
  for (long k = e < 0 ? -e : e; k > 0; --k) out *= b;
  return out;
}

inline int parity_sign(long e) { return (e % 2 + 2) % 2 == 0 ? 1 : -1; }

}  // namespace detline
