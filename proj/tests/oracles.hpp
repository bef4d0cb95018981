#pragma once

// Brute-force reference implementations used only by the tests. They read
// the raw datum (roots, coroots, simple indices, twist matrices) and redo
// every computation from first principles: lengths from alcove geometry,
// Bruhat order from subwords, Newton points from powers in W x <sigma>.

#include <map>
#include <set>
#include <vector>

#include "iwahori/frobenius.hpp"

namespace oracle {

using iwahori::IntMatrix;
using iwahori::IntVector;
using iwahori::Rational;
using iwahori::RationalVector;

struct Elem {
  IntVector t;
  IntMatrix m;
  friend bool operator==(const Elem&, const Elem&) = default;
};

using Key = std::vector<std::int64_t>;
Key key(const Elem& e);

class Model {
 public:
  explicit Model(const iwahori::FrobeniusTwist& twist);

  std::size_t rank() const { return n_; }
  const std::vector<Elem>& generators() const { return gens_; }
  const std::vector<IntMatrix>& weyl() const { return w0_; }

  Elem identity() const;
  Elem translation(const IntVector& v) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem inv(const Elem& a) const;
  Elem sigma(const Elem& w) const;

  // Number of affine root hyperplanes between the base alcove and its image.
  std::int64_t length(const Elem& w) const;
  // Letters a_1..a_r and omega with w = s_{a_1} ... s_{a_r} omega.
  std::vector<std::size_t> reduced_word(const Elem& w, Elem* omega) const;
  std::map<Key, Elem> subword_products(const Elem& w) const;
  bool bruhat_leq(const Elem& v, const Elem& w) const;
  // Elements x * omega, x in W_a, l <= L.
  std::vector<Elem> enumerate(const Elem& omega, std::int64_t L) const;
  Elem omega_of(const Elem& w) const;

  std::vector<IntVector> orbit(const IntVector& v) const;
  std::map<Key, Elem> adm(const IntVector& mu) const;
  // Number of W0 x W0 double cosets meeting Adm(mu).
  std::size_t adm_double_cosets(const IntVector& mu) const;

  int sigma_order() const { return sigma_order_; }
  RationalVector newton(const Elem& w) const;
  RationalVector dominant(const RationalVector& v) const;
  bool straight_by_products(const Elem& w) const;
  Rational pair_two_rho(const RationalVector& v) const;
  RationalVector mu_diamond(const IntVector& mu) const;
  bool dominance_leq(const RationalVector& a, const RationalVector& b) const;
  // Distinct dominant Newton points over the Omega-component of t_mu with
  // length <= l(t_mu) and nu-bar <= mu-diamond.
  std::set<RationalVector> b_of_g_mu(const IntVector& mu) const;

 private:
  bool is_dominant(const RationalVector& v) const;

  std::size_t n_ = 0;
  std::vector<IntVector> roots_;
  std::vector<IntVector> coroots_;
  std::vector<std::size_t> simple_;
  std::vector<std::size_t> positive_;
  RationalVector alcove_point_;
  std::vector<Elem> gens_;
  std::vector<IntMatrix> w0_;
  IntMatrix lin_, lin_inv_;
  Elem tau_, tau_inv_;
  IntMatrix sigma0_;
  int sigma0_order_ = 1;
  int sigma_order_ = 1;
};

}  // namespace oracle
