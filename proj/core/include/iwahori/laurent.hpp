#pragma once

#include <climits>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "iwahori/finite_field.hpp"

namespace iwahori {

// Split:      F((t)), no involution used.
// Ramified:   K' = F_q((v)), v^2 = t, tau(c v^k) = (-1)^k c v^k.
// Unramified: K' = F_{q^2}((t)), tau = q-power Frobenius on coefficients.
enum class LaurentKind { Split, Ramified, Unramified };

class LaurentRing {
 public:
  using Elem = FiniteField::Elem;

  // Coefficients are F_q, or F_{q^2} when quadratic (always for Unramified).
  LaurentRing(LaurentKind kind, std::int64_t q, bool quadratic_coefficients = false);

  LaurentKind kind() const { return kind_; }
  std::int64_t q() const { return q_; }
  const FiniteField& field() const { return *field_; }
  // Exponent of the stored uniformizer equal to t (2 when ramified).
  int t_exponent() const { return kind_ == LaurentKind::Ramified ? 2 : 1; }
  Elem tau_coefficient(Elem c, int exponent) const;
  // Nonzero elements of the base field F_q.
  std::vector<Elem> base_units() const;
  bool in_base_field(Elem c) const;

 private:
  LaurentKind kind_;
  std::int64_t q_;
  std::shared_ptr<const FiniteField> field_;
};

class LaurentPoly {
 public:
  using Elem = FiniteField::Elem;
  static constexpr int kInfinity = INT_MAX;

  explicit LaurentPoly(const LaurentRing& ring) : ring_(&ring) {}
  static LaurentPoly constant(const LaurentRing& ring, Elem c);
  static LaurentPoly monomial(const LaurentRing& ring, Elem c, int exponent);
  static LaurentPoly t_power(const LaurentRing& ring, int k, Elem c = 1);

  const LaurentRing& ring() const { return *ring_; }
  const std::map<int, Elem>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int valuation() const { return is_zero() ? kInfinity : terms_.begin()->first; }
  Elem coefficient(int exponent) const;

  LaurentPoly tau() const;
  std::optional<LaurentPoly> monomial_inverse() const;

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

 private:
  void set(int exponent, Elem c);

  const LaurentRing* ring_;
  std::map<int, Elem> terms_;
};

class LoopMatrix {
 public:
  LoopMatrix(const LaurentRing& ring, std::size_t n);
  static LoopMatrix identity(const LaurentRing& ring, std::size_t n);
  static LoopMatrix diagonal(const std::vector<LaurentPoly>& entries);

  const LaurentRing& ring() const { return *ring_; }
  std::size_t size() const { return n_; }
  LaurentPoly& operator()(std::size_t r, std::size_t c) { return entries_[r * n_ + c]; }
  const LaurentPoly& operator()(std::size_t r, std::size_t c) const { return entries_[r * n_ + c]; }

  LaurentPoly determinant() const;
  LoopMatrix adjugate() const;
  // Requires a monomial determinant; throws NotInLoopGroup otherwise.
  LoopMatrix inverse() const;
  LoopMatrix conjugate_transpose() const;  // tau applied entrywise, transposed
  int min_valuation() const;
  bool is_identity() const;

  friend LoopMatrix operator*(const LoopMatrix& a, const LoopMatrix& b);
  friend bool operator==(const LoopMatrix& a, const LoopMatrix& b);

 private:
  const LaurentRing* ring_;
  std::size_t n_;
  std::vector<LaurentPoly> entries_;
};

}  // namespace iwahori
