#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>

// Under C++20 rewritten comparisons, boost::rational's mixed operator==
// (before 1.75) resolves to itself; exact non-template overloads win.
namespace boost {
inline bool operator==(const rational<std::int64_t>& a, std::int64_t b) {
  return a.denominator() == 1 && a.numerator() == b;
}
inline bool operator==(const rational<std::int64_t>& a, int b) {
  return a == static_cast<std::int64_t>(b);
}
inline bool operator==(std::int64_t b, const rational<std::int64_t>& a) { return a == b; }
inline bool operator==(int b, const rational<std::int64_t>& a) { return a == static_cast<std::int64_t>(b); }
}  // namespace boost

namespace iwahori {

using Rational = boost::rational<std::int64_t>;
using RationalVector = std::vector<Rational>;
using IntVector = std::vector<std::int64_t>;

// "p/q", or "p" when the denominator is 1.
std::string format_rational(const Rational& r);
Rational parse_rational(const std::string& s);

RationalVector to_rational(const IntVector& v);
bool is_integral(const RationalVector& v);
IntVector to_integral(const RationalVector& v);

inline Rational dot(const RationalVector& a, const IntVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline std::int64_t dot(const IntVector& a, const IntVector& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVector operator+(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a);
IntVector operator*(std::int64_t k, const IntVector& a);
RationalVector operator+(const RationalVector& a, const RationalVector& b);
RationalVector operator-(const RationalVector& a, const RationalVector& b);

}  // namespace iwahori
