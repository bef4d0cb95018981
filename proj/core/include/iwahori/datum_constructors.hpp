#pragma once

#include <memory>
#include <string>

#include "iwahori/frobenius.hpp"

namespace iwahori {

// Kinds: gl<n>, sl<n>, pgl<n> (n >= 2), gsp4, sp4. "gl(3)" is accepted as well as "gl3".
DatumSpec standard_datum_spec(const std::string& kind);
std::shared_ptr<const RootDatum> standard_datum(const std::string& kind);

std::shared_ptr<const AffineWeylGroup> make_group(std::shared_ptr<const RootDatum> datum);
std::shared_ptr<const FrobeniusTwist> split_twist(const std::string& kind);

// f-fold product with sigma'(l_0, ..., l_{f-1}) = (sigma l_{f-1}, l_0, ..., l_{f-2});
// the omega part of the input twist sits in factor 0.
std::shared_ptr<const FrobeniusTwist> restriction_of_scalars(const FrobeniusTwist& twist, int f);

// varsigma(l) = -reverse(l) on a gl(n)-shaped datum.
std::shared_ptr<const FrobeniusTwist> unitary_twist(std::shared_ptr<const AffineWeylGroup> group);

// varsigma = id, omega part = the length-zero element in the class of t_{e_1}.
std::shared_ptr<const FrobeniusTwist> inner_twist(std::shared_ptr<const AffineWeylGroup> group);

}  // namespace iwahori
