#pragma once

#include <optional>
#include <vector>

#include "iwahori/frobenius.hpp"

namespace iwahori {

struct NewtonPoint {
  RationalVector nu;      // non-dominant
  RationalVector nu_bar;  // dominant representative
  int n = 1;              // power used: w sigma(w) ... sigma^{n-1}(w) = t_{n nu}
};

NewtonPoint newton_point(const FrobeniusTwist& twist, const Element& w);

// w sigma(w) ... sigma^{n-1}(w)
Element twisted_power(const FrobeniusTwist& twist, const Element& w, int n);

bool is_sigma_straight(const FrobeniusTwist& twist, const Element& w);

struct BPoint {
  RationalVector newton;
  IntVector kappa;

  friend bool operator==(const BPoint&, const BPoint&) = default;
};

// Total order: coordinate sum of newton, then newton lexicographically, then kappa.
bool operator<(const BPoint& a, const BPoint& b);

BPoint b_point(const FrobeniusTwist& twist, const Element& w);

struct LeviSubsystem {
  RationalVector v;
  std::vector<std::size_t> roots;  // indices into the datum's roots
  bool defined_over_F = false;
};

LeviSubsystem levi_of(const RootDatum& datum, const RationalVector& v);
LeviSubsystem levi_of(const FrobeniusTwist& twist, const RationalVector& v);
bool is_central(const RootDatum& datum, const LeviSubsystem& levi, const IntVector& lambda);

struct StraightTranslation {
  IntVector mu_prime;
  BPoint point;
};

std::vector<StraightTranslation> straight_translations_in_orbit(const FrobeniusTwist& twist,
                                                                const IntVector& mu);

// Sorted by operator<.
std::vector<BPoint> b_of_g_mu(const FrobeniusTwist& twist, const IntVector& mu);
std::optional<BPoint> mu_ordinary(const FrobeniusTwist& twist, const IntVector& mu);

// Straight-element invariants over the given Omega-components up to a length
// cap; no completeness claim beyond what the cap reaches.
std::vector<BPoint> straight_points_up_to_length(const FrobeniusTwist& twist, std::int64_t L,
                                                 const std::vector<Element>& omegas);

// Transport of a datum and twist along a lattice map A : L -> L' carrying
// the roots bijectively (same root system on a quotient or isogenous lattice).
struct QuotientResult {
  std::shared_ptr<const RootDatum> datum;
  std::shared_ptr<const AffineWeylGroup> group;
  std::shared_ptr<const FrobeniusTwist> twist;
  IntMatrix map;

  IntVector image(const IntVector& v) const { return map.apply(v); }
};

QuotientResult quotient_datum(const FrobeniusTwist& twist, const IntMatrix& map,
                              const std::string& name = "");

}  // namespace iwahori
