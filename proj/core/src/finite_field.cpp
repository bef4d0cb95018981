#include "iwahori/finite_field.hpp"

#include <string>
#include <utility>

#include "iwahori/error.hpp"

namespace iwahori {

namespace {

constexpr std::int64_t kMaxFieldOrder = 1 << 20;

using Poly = std::vector<int>;  // low degree first, length m

Poly digits(std::int64_t x, int p, int m) {
  Poly d(m);
  for (int i = 0; i < m; ++i) {
    d[i] = static_cast<int>(x % p);
    x /= p;
  }
  return d;
}

std::int64_t encode(const Poly& d, int p) {
  std::int64_t x = 0;
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) x = x * p + d[i];
  return x;
}

// x * a mod f, where f = x^m + sum f_i x^i (f given by its low coefficients).
Poly times_x(const Poly& a, const Poly& f, int p) {
  const int m = static_cast<int>(a.size());
  int top = a[m - 1];
  Poly r(m, 0);
  for (int i = m - 1; i > 0; --i) r[i] = a[i - 1];
  for (int i = 0; i < m; ++i) r[i] = ((r[i] - top * f[i]) % p + p) % p;
  return r;
}

}  // namespace

std::pair<int, int> prime_power_decompose(std::int64_t q) {
  if (q < 2) return {0, 0};
  std::int64_t p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) p = q;
  int m = 0;
  while (q % p == 0) {
    q /= p;
    ++m;
  }
  if (q != 1) return {0, 0};
  return {static_cast<int>(p), m};
}

FiniteField FiniteField::of_order(std::int64_t q) {
  auto [p, m] = prime_power_decompose(q);
  require(p != 0, ErrorCode::Precondition, std::to_string(q) + " is not a prime power");
  return FiniteField(p, m);
}

FiniteField::FiniteField(int p, int m) : p_(p), m_(m), q_(1) {
  require(p >= 2 && m >= 1, ErrorCode::Precondition, "invalid field parameters");
  auto [pp, pm] = prime_power_decompose(p);
  require(pm == 1 && pp == p, ErrorCode::Precondition, "characteristic must be prime");
  for (int i = 0; i < m; ++i) q_ *= p;
  require(q_ <= kMaxFieldOrder, ErrorCode::Precondition, "field is too large");

  // Search monic f of degree m for which x has multiplicative order q - 1.
  const std::int64_t n = q_ - 1;
  for (std::int64_t code = 0; code < q_; ++code) {
    Poly f = digits(code, p, m);
    if (m > 1 && f[0] == 0) continue;
    std::vector<Elem> powers;
    powers.reserve(n);
    Poly cur(m, 0);
    cur[0] = 1;
    std::vector<char> seen(q_, 0);
    bool ok = true;
    for (std::int64_t k = 0; k < n; ++k) {
      std::int64_t e = encode(cur, p);
      if (e == 0 || seen[e]) {
        ok = false;
        break;
      }
      seen[e] = 1;
      powers.push_back(static_cast<Elem>(e));
      if (m == 1) {
        cur[0] = static_cast<int>((static_cast<std::int64_t>(cur[0]) * ((p - f[0]) % p)) % p);
      } else {
        cur = times_x(cur, f, p);
      }
    }
    if (!ok || encode(cur, p) != 1) continue;
    exp_ = std::move(powers);
    log_.assign(q_, -1);
    for (std::int64_t k = 0; k < n; ++k) log_[exp_[k]] = k;
    return;
  }
  fail(ErrorCode::Internal, "no primitive polynomial found");
}

FiniteField::Elem FiniteField::from_int(std::int64_t k) const {
  k %= p_;
  if (k < 0) k += p_;
  return static_cast<Elem>(k);
}

FiniteField::Elem FiniteField::add(Elem a, Elem b) const {
  Elem r = 0, base = 1;
  for (int i = 0; i < m_; ++i) {
    r += static_cast<Elem>(((a % p_) + (b % p_)) % p_) * base;
    a /= p_;
    b /= p_;
    base *= p_;
  }
  return r;
}

FiniteField::Elem FiniteField::neg(Elem a) const {
  Elem r = 0, base = 1;
  for (int i = 0; i < m_; ++i) {
    r += static_cast<Elem>((p_ - a % p_) % p_) * base;
    a /= p_;
    base *= p_;
  }
  return r;
}

FiniteField::Elem FiniteField::sub(Elem a, Elem b) const { return add(a, neg(b)); }

FiniteField::Elem FiniteField::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[(log_[a] + log_[b]) % (q_ - 1)];
}

FiniteField::Elem FiniteField::inv(Elem a) const {
  require(a != 0, ErrorCode::ZeroDenominator, "inverse of zero in a finite field");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

FiniteField::Elem FiniteField::pow(Elem a, std::int64_t e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  std::int64_t n = q_ - 1;
  std::int64_t k = ((log_[a] * (e % n)) % n + n) % n;
  return exp_[k];
}

FiniteField::Elem FiniteField::frobenius(Elem a, int k) const {
  std::int64_t e = 1;
  for (int i = 0; i < k; ++i) e *= p_;
  return pow(a, e);
}

std::vector<FiniteField::Elem> FiniteField::subfield_units(std::int64_t sub_order) const {
  require((q_ - 1) % (sub_order - 1) == 0, ErrorCode::Precondition, "not a subfield order");
  std::vector<Elem> out;
  for (std::int64_t x = 1; x < q_; ++x)
    if (pow(static_cast<Elem>(x), sub_order) == static_cast<Elem>(x)) out.push_back(static_cast<Elem>(x));
  return out;
}

}  // namespace iwahori
