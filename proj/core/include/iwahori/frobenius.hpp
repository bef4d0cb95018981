#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "iwahori/affine_weyl.hpp"
#include "iwahori/lattice.hpp"

namespace iwahori {

// sigma(w) = tau * varsigma(w) * tau^{-1}, with varsigma acting linearly on
// the lattice and by conjugation on W0.
class FrobeniusTwist {
 public:
  FrobeniusTwist(std::shared_ptr<const AffineWeylGroup> group, IntMatrix linear_part,
                 std::optional<Element> omega_part = std::nullopt);

  static FrobeniusTwist split(std::shared_ptr<const AffineWeylGroup> group);

  const AffineWeylGroup& group() const { return *group_; }
  std::shared_ptr<const AffineWeylGroup> group_ptr() const { return group_; }
  const RootDatum& datum() const { return group_->datum(); }

  const IntMatrix& linear_part() const { return linear_; }
  const Element& omega_part() const { return omega_; }
  W0Index chamber_restorer() const { return w0_; }
  const IntMatrix& sigma0() const { return sigma0_; }
  int order_N() const { return order_N_; }
  // Order of sigma as an automorphism of W.
  int order() const { return order_; }
  bool is_split() const;

  Element apply(const Element& w) const;
  Element apply_power(const Element& w, int k) const;
  IntVector apply_sigma0(const IntVector& v) const { return sigma0_.apply(v); }
  RationalVector apply_sigma0(const RationalVector& v) const { return sigma0_.apply(v); }
  IntVector apply_linear(const IntVector& v) const { return linear_.apply(v); }
  RationalVector apply_linear(const RationalVector& v) const { return linear_.apply(v); }

  // sigma(s_i) = s_{simple_permutation()[i]}
  const std::vector<std::size_t>& simple_permutation() const { return simple_perm_; }

  const LatticeQuotient& pi1_I() const { return group_->pi1_I(); }
  const LatticeQuotient& pi1_Gamma() const { return pi1_Gamma_; }
  IntVector kottwitz_I(const Element& w) const { return group_->kappa_tilde(w); }
  IntVector kottwitz_Gamma(const Element& w) const;
  // Induced action of sigma on pi1_I classes.
  IntVector sigma_on_pi1_I(const IntVector& cls) const;

  RationalVector mu_diamond(const IntVector& mu) const;
  IntVector mu_natural(const IntVector& mu) const;

  // Smallest n >= 1 with sigma0^n(v) = v.
  int sigma0_orbit_size(const IntVector& v) const;

 private:
  std::shared_ptr<const AffineWeylGroup> group_;
  IntMatrix linear_;
  IntMatrix linear_inv_;
  Element omega_;
  Element omega_inv_;
  std::vector<W0Index> conj_;  // varsigma v varsigma^{-1}
  W0Index w0_ = 0;
  IntMatrix sigma0_;
  int order_N_ = 1;
  int order_ = 1;
  std::vector<std::size_t> simple_perm_;
  LatticeQuotient pi1_Gamma_;
};

}  // namespace iwahori
