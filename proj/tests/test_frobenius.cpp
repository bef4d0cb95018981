#include "iwahori/datum_constructors.hpp"
#include "iwahori/selftest.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace iwahori;

namespace {

std::vector<Element> omegas(const AffineWeylGroup& G) {
  IntVector e(G.rank(), 0);
  e[0] = 1;
  std::vector<Element> out{G.identity()};
  if (!(G.omega_of_translation(e) == G.identity())) out.push_back(G.omega_of_translation(e));
  return out;
}

}  // namespace

TEST(Frobenius, MuDiamond) {
  auto res = restriction_of_scalars(*split_twist("gl2"), 2);
  EXPECT_EQ(res->mu_diamond({1, 0, 0, 0}), qv({"1/2", "0", "1/2", "0"}));
  auto u3 = unitary_twist(make_group(standard_datum("gl3")));
  EXPECT_EQ(u3->mu_diamond({1, 0, 0}), qv({"1/2", "0", "-1/2"}));
  EXPECT_EQ(u3->apply_sigma0(IntVector{1, 0, 0}), (IntVector{0, 0, -1}));
  EXPECT_EQ(u3->order_N(), 2);
  EXPECT_ERROR_CODE(u3->mu_diamond({0, 0, 1}), ErrorCode::NonDominantInput);
}

TEST(Frobenius, MuNatural) {
  auto gl2 = split_twist("gl2");
  EXPECT_EQ(gl2->pi1_Gamma().free_rank(), 1u);
  EXPECT_EQ(gl2->mu_natural({0, 0}), gl2->pi1_Gamma().reduce({0, 0}));
  EXPECT_NE(gl2->mu_natural({1, 0}), gl2->mu_natural({0, 0}));
  EXPECT_EQ(gl2->mu_natural({1, 0}), gl2->kottwitz_Gamma(gl2->group().translation({0, 1})));

  auto u3 = unitary_twist(make_group(standard_datum("gl3")));
  EXPECT_EQ(u3->pi1_Gamma().moduli(), (std::vector<std::int64_t>{2}));
  EXPECT_NE(u3->mu_natural({1, 0, 0}), u3->mu_natural({0, 0, 0}));
  EXPECT_EQ(u3->mu_natural({1, 1, 0}), u3->mu_natural({0, 0, 0}));
}

TEST(Frobenius, KottwitzVanishesOnAffineWeylGroup) {
  auto gl3 = split_twist("gl3");
  for (const auto& w : gl3->group().enumerate_up_to_length(3, {gl3->group().identity()}))
    EXPECT_EQ(gl3->kottwitz_I(w), gl3->kottwitz_I(gl3->group().identity()));
}

TEST(Frobenius, SplitTwistIsIdentity) {
  auto gl3 = split_twist("gl3");
  EXPECT_TRUE(gl3->is_split());
  for (const auto& w : gl3->group().enumerate_up_to_length(2, omegas(gl3->group()))) EXPECT_EQ(gl3->apply(w), w);
}

TEST(Frobenius, AgreesWithOracleSigma) {
  for (const auto& f : standard_fixtures()) {
    const auto& T = *f.twist;
    const auto& G = T.group();
    oracle::Model model(T);
    EXPECT_EQ(T.order(), model.sigma_order()) << f.name;
    for (const auto& w : G.enumerate_up_to_length(3, omegas(G))) {
      oracle::Elem ow{w.translation, G.datum().weyl().matrix(w.finite)};
      oracle::Elem got{T.apply(w).translation, G.datum().weyl().matrix(T.apply(w).finite)};
      ASSERT_EQ(oracle::key(got), oracle::key(model.sigma(ow))) << f.name;
      EXPECT_EQ(T.apply_power(w, T.order()), w);
    }
  }
}

TEST(Frobenius, AutomorphismPreservingLengthAndS) {
  for (const auto& f : standard_fixtures()) {
    const auto& T = *f.twist;
    const auto& G = T.group();
    const auto& S = G.simple_reflections();
    for (std::size_t i = 0; i < S.size(); ++i) EXPECT_EQ(T.apply(S[i]), S[T.simple_permutation()[i]]) << f.name;
    auto elems = G.enumerate_up_to_length(3, omegas(G));
    for (const auto& a : elems) {
      EXPECT_EQ(G.length(T.apply(a)), G.length(a));
      for (const auto& b : S) EXPECT_EQ(T.apply(G.multiply(a, b)), G.multiply(T.apply(a), T.apply(b)));
    }
  }
}

TEST(Frobenius, Sigma0FiniteOrderPreservesChamber) {
  for (const auto& f : standard_fixtures()) {
    const auto& T = *f.twist;
    IntMatrix p = IntMatrix::identity(T.datum().rank());
    for (int i = 0; i < T.order_N(); ++i) p = T.sigma0() * p;
    EXPECT_TRUE(p.is_identity()) << f.name;
    IntVector rho = T.datum().two_rho_check();
    EXPECT_TRUE(T.datum().is_dominant(T.apply_sigma0(rho))) << f.name;
  }
}

TEST(Frobenius, KottwitzEquivariance) {
  for (const auto& f : standard_fixtures()) {
    const auto& T = *f.twist;
    for (const auto& w : T.group().enumerate_up_to_length(3, omegas(T.group())))
      EXPECT_EQ(T.kottwitz_I(T.apply(w)), T.sigma_on_pi1_I(T.kottwitz_I(w))) << f.name;
  }
}

TEST(Frobenius, KottwitzGammaConstantOnClasses) {
  for (const auto& f : standard_fixtures()) {
    const auto& T = *f.twist;
    const auto& G = T.group();
    auto elems = G.enumerate_up_to_length(4, omegas(G));
    auto gens = G.simple_reflections();
    for (const auto& om : omegas(G)) gens.push_back(om);
    for (const auto& w : elems)
      for (const auto& u : gens)
        ASSERT_EQ(T.kottwitz_Gamma(G.multiply(G.multiply(G.inverse(u), w), T.apply(u))), T.kottwitz_Gamma(w))
            << f.name;
  }
}

TEST(Frobenius, RejectsIncompatibleTwists) {
  auto G = make_group(standard_datum("gl2"));
  EXPECT_ERROR_CODE(FrobeniusTwist(G, IntMatrix::from_rows({{2, 0}, {0, 2}}, 2)), ErrorCode::IncompatibleTwist);
  EXPECT_ERROR_CODE(FrobeniusTwist(G, IntMatrix::from_rows({{1, 1}, {0, 1}}, 2)), ErrorCode::IncompatibleTwist);
  EXPECT_ERROR_CODE(FrobeniusTwist(G, IntMatrix::identity(2), G->translation({1, 0})), ErrorCode::IncompatibleTwist);
  EXPECT_ERROR_CODE(FrobeniusTwist(G, IntMatrix::identity(3)), ErrorCode::IncompatibleTwist);
}

TEST(Frobenius, ResUnitaryOrder) {
  auto u3 = unitary_twist(make_group(standard_datum("gl3")));
  auto res = restriction_of_scalars(*u3, 2);
  EXPECT_EQ(res->order_N(), 2 * u3->order_N());
  EXPECT_EQ(res->apply_sigma0(IntVector{1, 0, 0, 0, 0, 0}), (IntVector{0, 0, 0, 1, 0, 0}));
}
