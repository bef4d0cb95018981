#include "iwahori/laurent.hpp"

#include "iwahori/error.hpp"

namespace iwahori {

LaurentRing::LaurentRing(LaurentKind kind, std::int64_t q, bool quadratic_coefficients)
    : kind_(kind), q_(q) {
  auto [p, m] = prime_power_decompose(q);
  require(p != 0, ErrorCode::Precondition, std::to_string(q) + " is not a prime power");
  require(p != 2, ErrorCode::Precondition, "residue characteristic must be odd");
  bool quadratic = quadratic_coefficients || kind == LaurentKind::Unramified;
  field_ = std::make_shared<const FiniteField>(p, quadratic ? 2 * m : m);
}

LaurentRing::Elem LaurentRing::tau_coefficient(Elem c, int exponent) const {
  switch (kind_) {
    case LaurentKind::Split: return c;
    case LaurentKind::Ramified: return (exponent % 2 != 0) ? field_->neg(c) : c;
    case LaurentKind::Unramified: return field_->pow(c, q_);
  }
  return c;
}

std::vector<LaurentRing::Elem> LaurentRing::base_units() const { return field_->subfield_units(q_); }

bool LaurentRing::in_base_field(Elem c) const { return field_->pow(c, q_) == c; }

LaurentPoly LaurentPoly::constant(const LaurentRing& ring, Elem c) { return monomial(ring, c, 0); }

LaurentPoly LaurentPoly::monomial(const LaurentRing& ring, Elem c, int exponent) {
  LaurentPoly p(ring);
  p.set(exponent, c);
  return p;
}

LaurentPoly LaurentPoly::t_power(const LaurentRing& ring, int k, Elem c) {
  return monomial(ring, c, k * ring.t_exponent());
}

void LaurentPoly::set(int exponent, Elem c) {
  if (c == 0)
    terms_.erase(exponent);
  else
    terms_[exponent] = c;
}

LaurentPoly::Elem LaurentPoly::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

LaurentPoly LaurentPoly::tau() const {
  LaurentPoly out(*ring_);
  for (const auto& [e, c] : terms_) out.set(e, ring_->tau_coefficient(c, e));
  return out;
}

std::optional<LaurentPoly> LaurentPoly::monomial_inverse() const {
  if (terms_.size() != 1) return std::nullopt;
  const auto& [e, c] = *terms_.begin();
  return monomial(*ring_, ring_->field().inv(c), -e);
}

namespace {

void same_ring(const LaurentPoly& a, const LaurentPoly& b) {
  require(&a.ring() == &b.ring(), ErrorCode::DatumMismatch, "Laurent polynomials over different rings");
}

}  // namespace

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  same_ring(a, b);
  const auto& F = a.ring().field();
  LaurentPoly out(a);
  for (const auto& [e, c] : b.terms_) out.set(e, F.add(out.coefficient(e), c));
  return out;
}

LaurentPoly operator-(const LaurentPoly& a) {
  const auto& F = a.ring().field();
  LaurentPoly out(a.ring());
  for (const auto& [e, c] : a.terms_) out.set(e, F.neg(c));
  return out;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  same_ring(a, b);
  const auto& F = a.ring().field();
  LaurentPoly out(a.ring());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.set(ea + eb, F.add(out.coefficient(ea + eb), F.mul(ca, cb)));
  return out;
}

LoopMatrix::LoopMatrix(const LaurentRing& ring, std::size_t n)
    : ring_(&ring), n_(n), entries_(n * n, LaurentPoly(ring)) {}

LoopMatrix LoopMatrix::identity(const LaurentRing& ring, std::size_t n) {
  LoopMatrix m(ring, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = LaurentPoly::constant(ring, 1);
  return m;
}

LoopMatrix LoopMatrix::diagonal(const std::vector<LaurentPoly>& entries) {
  require(!entries.empty(), ErrorCode::Precondition, "empty diagonal");
  LoopMatrix m(entries.front().ring(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

LoopMatrix operator*(const LoopMatrix& a, const LoopMatrix& b) {
  require(a.ring_ == b.ring_ && a.n_ == b.n_, ErrorCode::DatumMismatch, "loop matrix mismatch");
  LoopMatrix m(*a.ring_, a.n_);
  for (std::size_t i = 0; i < a.n_; ++i)
    for (std::size_t j = 0; j < a.n_; ++j)
      for (std::size_t k = 0; k < a.n_; ++k) {
        if (a(i, k).is_zero() || b(k, j).is_zero()) continue;
        m(i, j) = m(i, j) + a(i, k) * b(k, j);
      }
  return m;
}

bool operator==(const LoopMatrix& a, const LoopMatrix& b) {
  if (a.n_ != b.n_) return false;
  for (std::size_t i = 0; i < a.entries_.size(); ++i)
    if (!(a.entries_[i] == b.entries_[i])) return false;
  return true;
}

namespace {

LoopMatrix minor_of(const LoopMatrix& m, std::size_t row, std::size_t col) {
  LoopMatrix out(m.ring(), m.size() - 1);
  for (std::size_t i = 0, r = 0; i < m.size(); ++i) {
    if (i == row) continue;
    for (std::size_t j = 0, c = 0; j < m.size(); ++j) {
      if (j == col) continue;
      out(r, c++) = m(i, j);
    }
    ++r;
  }
  return out;
}

}  // namespace

LaurentPoly LoopMatrix::determinant() const {
  if (n_ == 1) return (*this)(0, 0);
  if (n_ == 2) return (*this)(0, 0) * (*this)(1, 1) - (*this)(0, 1) * (*this)(1, 0);
  LaurentPoly det(*ring_);
  for (std::size_t j = 0; j < n_; ++j) {
    if ((*this)(0, j).is_zero()) continue;
    LaurentPoly term = (*this)(0, j) * minor_of(*this, 0, j).determinant();
    det = (j % 2 == 0) ? det + term : det - term;
  }
  return det;
}

LoopMatrix LoopMatrix::adjugate() const {
  LoopMatrix adj(*ring_, n_);
  if (n_ == 1) {
    adj(0, 0) = LaurentPoly::constant(*ring_, 1);
    return adj;
  }
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      LaurentPoly c = minor_of(*this, i, j).determinant();
      adj(j, i) = ((i + j) % 2 == 0) ? c : -c;
    }
  return adj;
}

LoopMatrix LoopMatrix::inverse() const {
  auto dinv = determinant().monomial_inverse();
  require(dinv.has_value(), ErrorCode::NotInLoopGroup, "determinant is not a unit monomial");
  LoopMatrix adj = adjugate();
  for (auto& e : adj.entries_) e = e * *dinv;
  return adj;
}

LoopMatrix LoopMatrix::conjugate_transpose() const {
  LoopMatrix out(*ring_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out(j, i) = (*this)(i, j).tau();
  return out;
}

int LoopMatrix::min_valuation() const {
  int v = LaurentPoly::kInfinity;
  for (const auto& e : entries_) v = std::min(v, e.valuation());
  return v;
}

bool LoopMatrix::is_identity() const { return *this == identity(*ring_, n_); }

}  // namespace iwahori
