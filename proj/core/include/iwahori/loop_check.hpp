#pragma once

#include <optional>
#include <vector>

#include "iwahori/laurent.hpp"
#include "iwahori/rational.hpp"

namespace iwahori {

enum class ParahoricKind { Sl2Standard, Su3Standard, Su3Nonstandard };

// I_3 + g with g_{-i,0} = -tau(c), g_{0,i} = c, g_{-i,i} = d in the
// coordinates (x_{-1}, x_0, x_1); requires tau(c) c + d + tau(d) = 0.
LoopMatrix su3_unipotent(int i, const LaurentPoly& c, const LaurentPoly& d);

LoopMatrix sl2_upper(const LaurentPoly& a);
LoopMatrix sl2_lower(const LaurentPoly& a);

// Anti-diagonal Gram matrix of the hermitian form.
LoopMatrix hermitian_gram(const LaurentRing& ring);

bool in_loop_group(const LoopMatrix& m, ParahoricKind kind);
bool parahoric_member(const LoopMatrix& m, ParahoricKind kind);

// Diagonal monomial matrices in the loop group whose translation image is
// +-alpha^vee, in a fixed search order.
std::vector<LoopMatrix> lift_candidates(const LaurentRing& ring, ParahoricKind kind);
// The lift fixed for each kind.
LoopMatrix translation_lift(const LaurentRing& ring, ParahoricKind kind);
// Translation image of a diagonal monomial lift, in units of the rank-one coroot.
IntVector lift_image(const LoopMatrix& m, ParahoricKind kind);

ParahoricKind case_parahoric(int case_no);
LaurentRing case_ring(int case_no, std::int64_t q, bool unramified);

// Left-hand element of the membership for the given x (x = 0 allowed).
LoopMatrix case_lhs(int case_no, const LaurentRing& ring, FiniteField::Elem x);
// Unipotent prefix of the right-hand side; x must be nonzero.
LoopMatrix case_prefix(int case_no, const LaurentRing& ring, FiniteField::Elem x);
// Case 3 prefix with the coefficients exactly as displayed in the source
// identity, u_1(2/x, 2/x^2); violates the unipotent constraint.
LoopMatrix case3_displayed_prefix(const LaurentRing& ring, FiniteField::Elem x);

struct CaseResult {
  bool pass = false;
  LoopMatrix witness;  // k = (prefix * lift)^{-1} * lhs, or lhs at x = 0
};

CaseResult check_case(int case_no, const LaurentRing& ring, FiniteField::Elem x, const LoopMatrix& lift);
CaseResult check_case(int case_no, const LaurentRing& ring, FiniteField::Elem x);
CaseResult check_base_point(int case_no, const LaurentRing& ring);

struct VerifyReport {
  int case_no = 0;
  std::int64_t q = 0;
  bool unramified = false;
  std::size_t checked = 0;
  bool all_pass = true;
  bool base_point_pass = true;
  std::vector<std::pair<FiniteField::Elem, bool>> results;
  std::optional<std::pair<FiniteField::Elem, LoopMatrix>> first_failure;
};

// Exhaustive sweep over x in F_q^x. The ring must outlive the report's witness.
VerifyReport verify_case(int case_no, const LaurentRing& ring, const LoopMatrix& lift);

// First lift candidate for which the sweep passes.
std::optional<LoopMatrix> resolve_lift(int case_no, const LaurentRing& ring);

}  // namespace iwahori
