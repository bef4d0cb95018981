#include "iwahori/rational.hpp"

#include <charconv>

#include "iwahori/error.hpp"

namespace iwahori {

std::string format_rational(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace {

std::int64_t parse_int(std::string_view s) {
  std::int64_t v = 0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    fail(ErrorCode::Parse, "not an integer: '" + std::string(s) + "'");
  return v;
}

}  // namespace

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_int(s));
  std::int64_t num = parse_int(std::string_view(s).substr(0, slash));
  std::int64_t den = parse_int(std::string_view(s).substr(slash + 1));
  if (den == 0) fail(ErrorCode::Parse, "zero denominator in '" + s + "'");
  return Rational(num, den);
}

RationalVector to_rational(const IntVector& v) {
  RationalVector out;
  out.reserve(v.size());
  for (auto x : v) out.emplace_back(x);
  return out;
}

bool is_integral(const RationalVector& v) {
  for (const auto& x : v)
    if (x.denominator() != 1) return false;
  return true;
}

IntVector to_integral(const RationalVector& v) {
  IntVector out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (x.denominator() != 1) fail(ErrorCode::Precondition, "vector is not integral");
    out.push_back(x.numerator());
  }
  return out;
}

IntVector operator+(const IntVector& a, const IntVector& b) {
  IntVector r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

IntVector operator-(const IntVector& a, const IntVector& b) {
  IntVector r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

IntVector operator-(const IntVector& a) {
  IntVector r(a);
  for (auto& x : r) x = -x;
  return r;
}

IntVector operator*(std::int64_t k, const IntVector& a) {
  IntVector r(a);
  for (auto& x : r) x *= k;
  return r;
}

RationalVector operator+(const RationalVector& a, const RationalVector& b) {
  RationalVector r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

RationalVector operator-(const RationalVector& a, const RationalVector& b) {
  RationalVector r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

}  // namespace iwahori
