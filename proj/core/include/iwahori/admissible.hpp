#pragma once

#include <string>
#include <vector>

#include "iwahori/frobenius.hpp"

namespace iwahori {

struct AdmissibleSet {
  IntVector mu;
  std::vector<Element> elements;  // sorted by (length, translation, finite)
  Element tau_min;

  bool contains(const Element& w) const;
};

// Bruhat down-set of {t_{x mu} : x in W0}. mu may be any member of its orbit.
AdmissibleSet admissible_set(const FrobeniusTwist& twist, const IntVector& mu);

// Bruhat down-set of one element, via subword products of a reduced word.
std::vector<Element> bruhat_down_set(const AffineWeylGroup& group, const Element& w);

// Minimal double-coset representatives of Adm(mu) in W_J \ W / W_J.
std::vector<Element> admissible_set_J(const FrobeniusTwist& twist, const IntVector& mu,
                                      const std::vector<std::size_t>& J);

// The finite simple reflections: the parahoric whose double cosets are
// indexed by dominant lattice vectors.
std::vector<std::size_t> very_special_parahoric(const AffineWeylGroup& group);

struct StrataNode {
  IntVector lambda;
  int orbit_size = 1;  // smallest n with sigma0^n(lambda) = lambda
  bool is_top = false;
};

struct StrataPoset {
  IntVector mu;
  std::vector<StrataNode> nodes;                              // mu first
  std::vector<std::pair<std::size_t, std::size_t>> covers;   // (lower, upper) node indices

  std::string to_dot() const;
};

StrataPoset kr_poset_very_special(const FrobeniusTwist& twist, const IntVector& mu);

// Index of the first positive root alpha with lambda + alpha^vee dominant and <= mu.
std::size_t stembridge_step(const RootDatum& datum, const IntVector& lambda, const IntVector& mu);

IntVector frob_orbit_step(const FrobeniusTwist& twist_q, const IntVector& lambda, const IntVector& mu);

std::vector<IntVector> curve_chain(const FrobeniusTwist& twist_q, const IntVector& lambda,
                                   const IntVector& mu);

}  // namespace iwahori
