#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "iwahori/lattice.hpp"
#include "iwahori/root_system.hpp"

namespace iwahori {

// w = t_translation * finite
struct Element {
  IntVector translation;
  W0Index finite = 0;

  friend bool operator==(const Element&, const Element&) = default;
  friend auto operator<=>(const Element& a, const Element& b) {
    if (auto c = a.translation <=> b.translation; c != 0) return c;
    return a.finite <=> b.finite;
  }
};

struct ElementHash {
  std::size_t operator()(const Element& e) const noexcept;
};

// A reduced expression s_{letters[0]} ... s_{letters[k-1]} * omega, letters
// indexing simple_reflections().
struct ReducedWord {
  std::vector<std::size_t> letters;
  Element omega;
};

class AffineWeylGroup {
 public:
  explicit AffineWeylGroup(std::shared_ptr<const RootDatum> datum);

  const RootDatum& datum() const { return *datum_; }
  std::shared_ptr<const RootDatum> datum_ptr() const { return datum_; }
  std::size_t rank() const { return datum_->rank(); }

  Element identity() const;
  Element translation(const IntVector& v) const;
  Element finite(W0Index v) const;
  void check(const Element& w) const;  // throws DatumMismatch

  Element multiply(const Element& a, const Element& b) const;
  Element inverse(const Element& w) const;
  Element conjugate(const Element& by, const Element& w) const;  // by w by^{-1}

  std::int64_t length(const Element& w) const;

  // Finite simple reflections first (in simple-index order), then one affine
  // reflection per irreducible component.
  const std::vector<Element>& simple_reflections() const;
  std::size_t num_simple_reflections() const { return simple_.size(); }
  // Component of each member of simple_reflections().
  const std::vector<std::size_t>& simple_component() const { return simple_component_; }
  std::vector<std::size_t> finite_simple_positions() const;

  bool is_left_descent(std::size_t s, const Element& w) const;
  bool is_right_descent(const Element& w, std::size_t s) const;

  Element omega_component(const Element& w) const;
  IntVector kappa_tilde(const Element& w) const;
  const LatticeQuotient& pi1_I() const { return pi1_I_; }

  ReducedWord reduced_word(const Element& w) const;
  bool bruhat_leq(const Element& v, const Element& w) const;

  bool is_finite_parahoric(const std::vector<std::size_t>& J) const;
  Element double_coset_rep(const Element& w, const std::vector<std::size_t>& J) const;
  std::vector<Element> parabolic_elements(const std::vector<std::size_t>& J) const;

  // Elements x * omega with x in W_a and l(x) <= L, for each omega given,
  // grouped by omega in the given order, then by length, then by
  // (translation, finite). The callback may return false to stop.
  void for_each_up_to_length(std::int64_t L, const std::vector<Element>& omegas,
                             const std::function<bool(const Element&)>& visit) const;
  std::vector<Element> enumerate_up_to_length(std::int64_t L,
                                              const std::vector<Element>& omegas) const;

  // The length-zero element in the class of t_v.
  Element omega_of_translation(const IntVector& v) const;

 private:
  std::shared_ptr<const RootDatum> datum_;
  std::vector<Element> simple_;
  std::vector<std::size_t> simple_component_;
  LatticeQuotient pi1_I_;
};

}  // namespace iwahori
