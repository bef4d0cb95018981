#pragma once

#include <memory>
#include <string>

#include <nlohmann/json.hpp>

#include "iwahori/admissible.hpp"
#include "iwahori/loop_check.hpp"
#include "iwahori/sigma_conjugacy.hpp"

namespace iwahori {

using Json = nlohmann::ordered_json;

struct LoadedDatum {
  std::shared_ptr<const RootDatum> datum;
  std::shared_ptr<const AffineWeylGroup> group;
  std::shared_ptr<const FrobeniusTwist> twist;
};

Json datum_to_json(const FrobeniusTwist& twist);
Json datum_spec_to_json(const DatumSpec& spec);
LoadedDatum datum_from_json(const Json& j);
LoadedDatum load_datum_file(const std::string& path);

Json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols);

Json element_to_json(const AffineWeylGroup& group, const Element& w);
Element element_from_json(const AffineWeylGroup& group, const Json& j);

// Reduced word in the letters s0 (or s0_c per component), s1, ..., with a
// trailing omega[kappa] for a nontrivial length-zero part.
std::string word_string(const AffineWeylGroup& group, const Element& w);

Json rational_vector_to_json(const RationalVector& v);
Json bpoint_to_json(const BPoint& p);
Json strata_to_json(const StrataPoset& poset);

Json laurent_to_json(const LaurentPoly& p);
Json loop_matrix_to_json(const LoopMatrix& m);
Json verify_report_to_json(const VerifyReport& r);

}  // namespace iwahori
