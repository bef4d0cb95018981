#include "iwahori/loop_check.hpp"

#include "iwahori/error.hpp"

namespace iwahori {

namespace {

using Elem = FiniteField::Elem;

std::size_t coord(int k) { return static_cast<std::size_t>(k + 1); }

LaurentPoly zero(const LaurentRing& ring) { return LaurentPoly(ring); }
LaurentPoly cst(const LaurentRing& ring, Elem c) { return LaurentPoly::constant(ring, c); }

// Uniformizer of K' (v when ramified, t otherwise) to the power k, times c.
LaurentPoly uni(const LaurentRing& ring, int k, Elem c = 1) { return LaurentPoly::monomial(ring, c, k); }

// epsilon in F_{q^2} with tau(epsilon) = -epsilon.
Elem trace_zero_unit(const LaurentRing& ring) {
  const auto& F = ring.field();
  Elem e = F.pow(F.generator(), (ring.q() + 1) / 2);
  if (ring.tau_coefficient(e, 0) != F.neg(e)) fail(ErrorCode::Internal, "no trace-zero unit found");
  return e;
}

void require_base(const LaurentRing& ring, Elem x) {
  require(x < ring.field().order() && ring.in_base_field(x), ErrorCode::Precondition,
          "x must lie in the residue field F_q");
}

}  // namespace

LoopMatrix su3_unipotent(int i, const LaurentPoly& c, const LaurentPoly& d) {
  require(i == 1 || i == -1, ErrorCode::Precondition, "index must be +1 or -1");
  require(&c.ring() == &d.ring(), ErrorCode::DatumMismatch, "c and d over different rings");
  const auto& ring = c.ring();
  require(ring.kind() != LaurentKind::Split, ErrorCode::UnsupportedKind,
          "unitary unipotents need a quadratic extension");
  LaurentPoly constraint = c.tau() * c + d + d.tau();
  require(constraint.is_zero(), ErrorCode::ConstraintViolated, "tau(c) c + d + tau(d) != 0");
  LoopMatrix m = LoopMatrix::identity(ring, 3);
  m(coord(-i), coord(0)) = -c.tau();
  m(coord(0), coord(i)) = c;
  m(coord(-i), coord(i)) = d;
  return m;
}

LoopMatrix sl2_upper(const LaurentPoly& a) {
  LoopMatrix m = LoopMatrix::identity(a.ring(), 2);
  m(0, 1) = a;
  return m;
}

LoopMatrix sl2_lower(const LaurentPoly& a) {
  LoopMatrix m = LoopMatrix::identity(a.ring(), 2);
  m(1, 0) = a;
  return m;
}

LoopMatrix hermitian_gram(const LaurentRing& ring) {
  LoopMatrix j(ring, 3);
  for (std::size_t r = 0; r < 3; ++r) j(r, 2 - r) = cst(ring, 1);
  return j;
}

bool in_loop_group(const LoopMatrix& m, ParahoricKind kind) {
  const auto& ring = m.ring();
  if (kind == ParahoricKind::Sl2Standard) {
    return m.size() == 2 && m.determinant() == cst(ring, 1);
  }
  if (ring.kind() == LaurentKind::Split) return false;
  if (m.size() != 3 || !(m.determinant() == cst(ring, 1))) return false;
  LoopMatrix j = hermitian_gram(ring);
  return m.conjugate_transpose() * j * m == j;
}

bool parahoric_member(const LoopMatrix& m, ParahoricKind kind) {
  if (kind == ParahoricKind::Su3Nonstandard)
    require(m.ring().kind() == LaurentKind::Ramified, ErrorCode::UnsupportedKind,
            "the non-standard parahoric is defined for the ramified extension only");
  require(in_loop_group(m, kind), ErrorCode::NotInLoopGroup, "matrix is not in the loop group");
  if (kind != ParahoricKind::Su3Nonstandard) return m.min_valuation() >= 0;
  const auto& ring = m.ring();
  LoopMatrix s = LoopMatrix::diagonal({cst(ring, 1), cst(ring, 1), uni(ring, 1)});
  LoopMatrix s_inv = LoopMatrix::diagonal({cst(ring, 1), cst(ring, 1), uni(ring, -1)});
  return (s_inv * m * s).min_valuation() >= 0;
}

std::vector<LoopMatrix> lift_candidates(const LaurentRing& ring, ParahoricKind kind) {
  const auto& F = ring.field();
  const Elem minus_one = F.neg(1);
  std::vector<LoopMatrix> out;
  auto keep = [&](LoopMatrix m) {
    if (in_loop_group(m, kind)) out.push_back(std::move(m));
  };
  if (kind == ParahoricKind::Sl2Standard) {
    for (int a : {1, -1})
      for (Elem e : {Elem{1}, minus_one})
        keep(LoopMatrix::diagonal({LaurentPoly::t_power(ring, a, e), LaurentPoly::t_power(ring, -a, F.inv(e))}));
    return out;
  }
  require(ring.kind() != LaurentKind::Split, ErrorCode::UnsupportedKind,
          "unitary lifts need a quadratic extension");
  if (kind == ParahoricKind::Su3Nonstandard)
    require(ring.kind() == LaurentKind::Ramified, ErrorCode::UnsupportedKind,
            "the non-standard parahoric is defined for the ramified extension only");
  if (ring.kind() == LaurentKind::Ramified) {
    for (int a : {1, -1})
      for (Elem e0 : {Elem{1}, minus_one})
        for (Elem e1 : {Elem{1}, minus_one})
          for (Elem e2 : {Elem{1}, minus_one})
            keep(LoopMatrix::diagonal({uni(ring, a, e0), cst(ring, e1), uni(ring, -a, e2)}));
    return out;
  }
  for (int a : {1, -1})
    for (Elem e0 = 1; e0 < F.order(); ++e0) {
      Elem e2 = F.inv(ring.tau_coefficient(e0, 0));
      Elem e1 = F.inv(F.mul(e0, e2));
      keep(LoopMatrix::diagonal({uni(ring, a, e0), cst(ring, e1), uni(ring, -a, e2)}));
    }
  return out;
}

LoopMatrix translation_lift(const LaurentRing& ring, ParahoricKind kind) {
  const auto& F = ring.field();
  std::optional<LoopMatrix> m;
  if (kind == ParahoricKind::Sl2Standard) {
    m = LoopMatrix::diagonal({LaurentPoly::t_power(ring, 1), LaurentPoly::t_power(ring, -1)});
  } else if (ring.kind() == LaurentKind::Ramified) {
    m = LoopMatrix::diagonal({uni(ring, 1), cst(ring, F.neg(1)), uni(ring, -1, F.neg(1))});
  } else if (ring.kind() == LaurentKind::Unramified && kind == ParahoricKind::Su3Standard) {
    m = LoopMatrix::diagonal({uni(ring, 1), cst(ring, 1), uni(ring, -1)});
  } else {
    fail(ErrorCode::UnsupportedKind, "no lift for this parahoric over this ring");
  }
  for (const auto& c : lift_candidates(ring, kind))
    if (c == *m) return *m;
  fail(ErrorCode::LiftNotFound, "fixed lift is not a valid monomial lift");
}

IntVector lift_image(const LoopMatrix& m, ParahoricKind kind) {
  int v = m(0, 0).valuation();
  require(v != LaurentPoly::kInfinity, ErrorCode::Precondition, "lift is not monomial");
  if (kind == ParahoricKind::Sl2Standard) v /= m.ring().t_exponent();
  return {v};
}

ParahoricKind case_parahoric(int case_no) {
  switch (case_no) {
    case 1: return ParahoricKind::Sl2Standard;
    case 2: return ParahoricKind::Su3Standard;
    case 3: return ParahoricKind::Su3Nonstandard;
  }
  fail(ErrorCode::Precondition, "case must be 1, 2 or 3");
}

LaurentRing case_ring(int case_no, std::int64_t q, bool unramified) {
  switch (case_no) {
    case 1: return LaurentRing(LaurentKind::Split, q, unramified);
    case 2: return LaurentRing(unramified ? LaurentKind::Unramified : LaurentKind::Ramified, q);
    case 3:
      require(!unramified, ErrorCode::UnsupportedKind,
              "case 3 uses the non-standard parahoric, which needs the ramified extension");
      return LaurentRing(LaurentKind::Ramified, q);
  }
  fail(ErrorCode::Precondition, "case must be 1, 2 or 3");
}

LoopMatrix case_lhs(int case_no, const LaurentRing& ring, Elem x) {
  require_base(ring, x);
  const auto& F = ring.field();
  switch (case_no) {
    case 1: return sl2_lower(LaurentPoly::t_power(ring, -1, x));
    case 2:
      if (ring.kind() == LaurentKind::Unramified)
        return su3_unipotent(-1, zero(ring), LaurentPoly::t_power(ring, -1, F.mul(trace_zero_unit(ring), x)));
      return su3_unipotent(-1, zero(ring), uni(ring, -1, x));
    case 3: {
      Elem half = F.inv(F.from_int(2));
      return su3_unipotent(-1, cst(ring, x), cst(ring, F.neg(F.mul(F.mul(x, x), half))));
    }
  }
  fail(ErrorCode::Precondition, "case must be 1, 2 or 3");
}

LoopMatrix case_prefix(int case_no, const LaurentRing& ring, Elem x) {
  require_base(ring, x);
  require(x != 0, ErrorCode::ZeroDenominator, "x must be nonzero");
  const auto& F = ring.field();
  Elem xi = F.inv(x);
  switch (case_no) {
    case 1: return sl2_upper(LaurentPoly::t_power(ring, 1, xi));
    case 2:
      if (ring.kind() == LaurentKind::Unramified)
        return su3_unipotent(1, zero(ring), LaurentPoly::t_power(ring, 1, F.inv(F.mul(trace_zero_unit(ring), x))));
      return su3_unipotent(1, zero(ring), uni(ring, 1, xi));
    case 3: {
      Elem m2 = F.neg(F.from_int(2));
      return su3_unipotent(1, cst(ring, F.mul(m2, xi)), cst(ring, F.mul(m2, F.mul(xi, xi))));
    }
  }
  fail(ErrorCode::Precondition, "case must be 1, 2 or 3");
}

LoopMatrix case3_displayed_prefix(const LaurentRing& ring, Elem x) {
  require_base(ring, x);
  require(x != 0, ErrorCode::ZeroDenominator, "x must be nonzero");
  const auto& F = ring.field();
  Elem xi = F.inv(x), two = F.from_int(2);
  return su3_unipotent(1, cst(ring, F.mul(two, xi)), cst(ring, F.mul(two, F.mul(xi, xi))));
}

CaseResult check_case(int case_no, const LaurentRing& ring, Elem x, const LoopMatrix& lift) {
  require(x != 0, ErrorCode::ZeroDenominator, "x = 0 is the base-point clause");
  ParahoricKind kind = case_parahoric(case_no);
  LoopMatrix lhs = case_lhs(case_no, ring, x);
  LoopMatrix k = (case_prefix(case_no, ring, x) * lift).inverse() * lhs;
  bool pass = parahoric_member(k, kind);
  return CaseResult{pass, std::move(k)};
}

CaseResult check_case(int case_no, const LaurentRing& ring, Elem x) {
  return check_case(case_no, ring, x, translation_lift(ring, case_parahoric(case_no)));
}

CaseResult check_base_point(int case_no, const LaurentRing& ring) {
  LoopMatrix lhs = case_lhs(case_no, ring, 0);
  bool pass = parahoric_member(lhs, case_parahoric(case_no));
  return CaseResult{pass, std::move(lhs)};
}

VerifyReport verify_case(int case_no, const LaurentRing& ring, const LoopMatrix& lift) {
  VerifyReport r;
  r.case_no = case_no;
  r.q = ring.q();
  r.unramified = ring.field().order() != ring.q();
  r.base_point_pass = check_base_point(case_no, ring).pass;
  for (Elem x : ring.base_units()) {
    CaseResult c = check_case(case_no, ring, x, lift);
    r.results.emplace_back(x, c.pass);
    ++r.checked;
    if (!c.pass) {
      r.all_pass = false;
      if (!r.first_failure) r.first_failure.emplace(x, std::move(c.witness));
    }
  }
  r.all_pass = r.all_pass && r.base_point_pass;
  return r;
}

std::optional<LoopMatrix> resolve_lift(int case_no, const LaurentRing& ring) {
  for (const auto& cand : lift_candidates(ring, case_parahoric(case_no)))
    if (verify_case(case_no, ring, cand).all_pass) return cand;
  return std::nullopt;
}

}  // namespace iwahori
