#include <random>

#include "iwahori/loop_check.hpp"
#include "test_util.hpp"

using namespace iwahori;
using Elem = FiniteField::Elem;

TEST(FiniteField, Axioms) {
  for (std::int64_t q : {2, 3, 4, 5, 7, 8, 9, 25, 27}) {
    auto F = FiniteField::of_order(q);
    EXPECT_EQ(F.order(), q);
    for (Elem a = 0; a < q; ++a) {
      EXPECT_EQ(F.add(a, F.neg(a)), 0u);
      EXPECT_EQ(F.frobenius(a, F.degree()), a);
      if (a) {
        EXPECT_EQ(F.mul(a, F.inv(a)), 1u);
        EXPECT_EQ(F.pow(a, q - 1), 1u);
      }
      for (Elem b = 0; b < q; ++b) {
        EXPECT_EQ(F.add(a, b), F.add(b, a));
        EXPECT_EQ(F.mul(a, b), F.mul(b, a));
        EXPECT_EQ(F.sub(F.add(a, b), b), a);
        EXPECT_EQ(F.frobenius(F.add(a, b)), F.add(F.frobenius(a), F.frobenius(b)));
        for (Elem c = 0; c < q; c += 3) EXPECT_EQ(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)));
      }
    }
  }
  EXPECT_EQ(FiniteField::of_order(9).subfield_units(3).size(), 2u);
  EXPECT_EQ(FiniteField::of_order(25).subfield_units(5).size(), 4u);
  EXPECT_EQ(FiniteField::of_order(7).from_int(-1), 6u);
  EXPECT_EQ(prime_power_decompose(9), (std::pair<int, int>{3, 2}));
  EXPECT_EQ(prime_power_decompose(12), (std::pair<int, int>{0, 0}));
}

TEST(Laurent, Arithmetic) {
  LaurentRing R(LaurentKind::Split, 5);
  auto one = LaurentPoly::constant(R, 1);
  auto t = LaurentPoly::t_power(R, 1);
  auto tinv = LaurentPoly::t_power(R, -1);
  EXPECT_EQ(t * tinv, one);
  EXPECT_EQ((one + t) * (one - t), one - t * t);
  EXPECT_EQ((t - t).valuation(), LaurentPoly::kInfinity);
  EXPECT_EQ((tinv + t).valuation(), -1);
  EXPECT_EQ((t * t).coefficient(2), 1u);
  EXPECT_EQ(LaurentPoly::t_power(R, 1, 3).monomial_inverse(), LaurentPoly::t_power(R, -1, 2));
  EXPECT_FALSE((one + t).monomial_inverse().has_value());
}

TEST(Laurent, Involutions) {
  LaurentRing ram(LaurentKind::Ramified, 5);
  auto v = LaurentPoly::monomial(ram, 1, 1);
  EXPECT_EQ(v.tau(), -v);
  EXPECT_EQ((v * v).tau(), v * v);
  EXPECT_EQ(LaurentPoly::t_power(ram, 1), v * v);

  LaurentRing un(LaurentKind::Unramified, 3);
  EXPECT_EQ(un.field().order(), 9);
  EXPECT_EQ(un.base_units().size(), 2u);
  for (Elem c = 1; c < 9; ++c) {
    auto p = LaurentPoly::t_power(un, 2, c);
    EXPECT_EQ(p.tau().tau(), p);
    EXPECT_EQ(p.tau() == p, un.in_base_field(c));
  }
}

TEST(LoopMatrix, InverseAndDeterminant) {
  LaurentRing R(LaurentKind::Split, 7);
  auto m = sl2_upper(LaurentPoly::t_power(R, -2, 3)) * sl2_lower(LaurentPoly::t_power(R, 1, 5));
  EXPECT_EQ(m.determinant(), LaurentPoly::constant(R, 1));
  EXPECT_TRUE((m * m.inverse()).is_identity());
  LoopMatrix bad = LoopMatrix::diagonal({LaurentPoly::constant(R, 1) + LaurentPoly::t_power(R, 1),
                                         LaurentPoly::constant(R, 1)});
  EXPECT_ERROR_CODE(bad.inverse(), ErrorCode::NotInLoopGroup);
}

TEST(Unipotent, Constraint) {
  LaurentRing R(LaurentKind::Ramified, 5);
  auto zero = LaurentPoly(R);
  auto v = LaurentPoly::monomial(R, 1, 1);
  auto m = su3_unipotent(1, zero, v);
  EXPECT_TRUE(in_loop_group(m, ParahoricKind::Su3Standard));
  EXPECT_ERROR_CODE(su3_unipotent(1, zero, LaurentPoly::constant(R, 1)), ErrorCode::ConstraintViolated);
  EXPECT_ERROR_CODE(su3_unipotent(2, zero, v), ErrorCode::Precondition);
  LaurentRing split(LaurentKind::Split, 5);
  EXPECT_ERROR_CODE(su3_unipotent(1, LaurentPoly(split), LaurentPoly(split)), ErrorCode::UnsupportedKind);
}

TEST(Unipotent, RandomValidPairs) {
  std::mt19937_64 rng(7);
  for (std::int64_t q : {3, 5, 7}) {
    LaurentRing R(LaurentKind::Ramified, q);
    const auto& F = R.field();
    Elem half = F.inv(F.from_int(2));
    for (int trial = 0; trial < 200 / 3 + 1; ++trial) {
      LaurentPoly c(R), e(R);
      for (int k = -3; k <= 3; ++k) {
        c = c + LaurentPoly::monomial(R, static_cast<Elem>(rng() % q), k);
        if (k % 2) e = e + LaurentPoly::monomial(R, static_cast<Elem>(rng() % q), k);
      }
      // d = -tau(c) c / 2 + e with tau(e) = -e
      LaurentPoly d = -(c.tau() * c * LaurentPoly::constant(R, half)) + e;
      for (int i : {1, -1}) {
        auto u = su3_unipotent(i, c, d);
        EXPECT_TRUE(in_loop_group(u, ParahoricKind::Su3Standard));
        EXPECT_TRUE((u * su3_unipotent(i, -c, d.tau())).is_identity());
        bool integral = c.valuation() >= 0 && d.valuation() >= 0;
        EXPECT_EQ(parahoric_member(u, ParahoricKind::Su3Standard), integral);
      }
    }
  }
}

TEST(Parahoric, Membership) {
  LaurentRing R(LaurentKind::Ramified, 3);
  auto zero = LaurentPoly(R);
  auto v = LaurentPoly::monomial(R, 1, 1);
  EXPECT_TRUE(parahoric_member(LoopMatrix::identity(R, 3), ParahoricKind::Su3Standard));
  EXPECT_TRUE(parahoric_member(su3_unipotent(1, zero, v), ParahoricKind::Su3Standard));
  EXPECT_FALSE(parahoric_member(su3_unipotent(1, zero, LaurentPoly::monomial(R, 1, -1)),
                                ParahoricKind::Su3Standard));
  // The non-standard parahoric allows v^{-1} in the (x_{-1}, x_1) corner.
  EXPECT_TRUE(parahoric_member(su3_unipotent(1, zero, LaurentPoly::monomial(R, 1, -1)),
                               ParahoricKind::Su3Nonstandard));
  EXPECT_FALSE(parahoric_member(su3_unipotent(-1, zero, LaurentPoly::monomial(R, 1, -1)),
                                ParahoricKind::Su3Nonstandard));
  LaurentRing S(LaurentKind::Split, 3);
  EXPECT_ERROR_CODE(parahoric_member(LoopMatrix::identity(S, 3), ParahoricKind::Su3Standard),
                    ErrorCode::NotInLoopGroup);
  EXPECT_ERROR_CODE(parahoric_member(LoopMatrix::identity(S, 3), ParahoricKind::Su3Nonstandard),
                    ErrorCode::UnsupportedKind);
}

TEST(Cases, SingleChecks) {
  auto r1 = case_ring(1, 5, false);
  auto res = check_case(1, r1, 2);
  EXPECT_TRUE(res.pass);
  EXPECT_GE(res.witness.min_valuation(), 0);
  // lhs = prefix * lift * witness
  EXPECT_EQ(case_prefix(1, r1, 2) * translation_lift(r1, ParahoricKind::Sl2Standard) * res.witness,
            case_lhs(1, r1, 2));
  EXPECT_TRUE(check_base_point(1, r1).pass);
  EXPECT_TRUE(case_lhs(1, r1, 0).is_identity());

  auto r3 = case_ring(3, 3, false);
  EXPECT_TRUE(check_case(3, r3, 1).pass);
  EXPECT_ERROR_CODE(check_case(3, r3, 0), ErrorCode::ZeroDenominator);
  EXPECT_ERROR_CODE(case_prefix(2, case_ring(2, 3, false), 0), ErrorCode::ZeroDenominator);
  EXPECT_ERROR_CODE(case_ring(3, 3, true), ErrorCode::UnsupportedKind);
  EXPECT_ERROR_CODE(case_parahoric(4), ErrorCode::Precondition);
}

TEST(Cases, DisplayedCase3PrefixViolatesConstraint) {
  for (std::int64_t q : {3, 5, 7}) {
    auto r = case_ring(3, q, false);
    for (Elem x : r.base_units()) EXPECT_ERROR_CODE(case3_displayed_prefix(r, x), ErrorCode::ConstraintViolated);
  }
}

TEST(Cases, Sweeps) {
  for (int c : {1, 2, 3})
    for (std::int64_t q : {3, 5, 7, 9}) {
      auto r = case_ring(c, q, false);
      auto rep = verify_case(c, r, translation_lift(r, case_parahoric(c)));
      EXPECT_TRUE(rep.all_pass) << "case " << c << " q " << q;
      EXPECT_TRUE(rep.base_point_pass);
      EXPECT_EQ(rep.checked, static_cast<std::size_t>(q - 1));
      EXPECT_FALSE(rep.first_failure.has_value());
    }
  for (int c : {1, 2})
    for (std::int64_t q : {3, 5, 9}) {
      auto r = case_ring(c, q, true);
      auto rep = verify_case(c, r, translation_lift(r, case_parahoric(c)));
      EXPECT_TRUE(rep.all_pass) << "unramified case " << c << " q " << q;
      EXPECT_TRUE(rep.unramified || c == 1);
    }
}

TEST(Cases, WrongLiftFails) {
  auto r = case_ring(1, 5, false);
  auto inverse_lift = translation_lift(r, ParahoricKind::Sl2Standard).inverse();
  auto rep = verify_case(1, r, inverse_lift);
  EXPECT_FALSE(rep.all_pass);
  ASSERT_TRUE(rep.first_failure.has_value());
}

TEST(Lifts, Consistency) {
  for (int c : {1, 2, 3}) {
    auto r = case_ring(c, 5, false);
    auto kind = case_parahoric(c);
    auto fixed = translation_lift(r, kind);
    auto resolved = resolve_lift(c, r);
    ASSERT_TRUE(resolved.has_value());
    EXPECT_TRUE(verify_case(c, r, *resolved).all_pass);
    EXPECT_EQ(lift_image(fixed, kind), (IntVector{1}));
    for (const auto& cand : lift_candidates(r, kind)) {
      EXPECT_TRUE(in_loop_group(cand, kind));
      auto img = lift_image(cand, kind);
      EXPECT_TRUE(img == IntVector{1} || img == IntVector{-1});
    }
  }
}
