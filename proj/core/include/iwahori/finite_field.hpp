#pragma once

#include <cstdint>
#include <vector>

namespace iwahori {

// GF(p^m). Elements are integers in [0, p^m) whose base-p digits are the
// coefficients of a polynomial in a fixed primitive root.
class FiniteField {
 public:
  using Elem = std::uint32_t;

  FiniteField(int p, int m);
  static FiniteField of_order(std::int64_t q);  // q must be a prime power

  int characteristic() const { return p_; }
  int degree() const { return m_; }
  std::int64_t order() const { return q_; }

  static constexpr Elem zero() { return 0; }
  static constexpr Elem one() { return 1; }
  Elem from_int(std::int64_t k) const;
  Elem generator() const { return exp_[1]; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;  // a != 0
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::int64_t e) const;
  Elem frobenius(Elem a, int k = 1) const;  // a^{p^k}

  // Nonzero elements fixed by x -> x^{sub_order}; sub_order must divide into this field.
  std::vector<Elem> subfield_units(std::int64_t sub_order) const;

 private:
  int p_;
  int m_;
  std::int64_t q_;
  std::vector<Elem> exp_;  // exp_[k] = g^k, k in [0, q-1)
  std::vector<std::int64_t> log_;
};

// (p, m) with q = p^m, or (0, 0) if q is not a prime power.
std::pair<int, int> prime_power_decompose(std::int64_t q);

}  // namespace iwahori
