#include "iwahori/sigma_conjugacy.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "iwahori/admissible.hpp"
#include "iwahori/error.hpp"

namespace iwahori {

namespace {

Rational rational_sum(const RationalVector& v) {
  return std::accumulate(v.begin(), v.end(), Rational(0));
}

}  // namespace

Element twisted_power(const FrobeniusTwist& twist, const Element& w, int n) {
  const auto& G = twist.group();
  Element p = G.identity(), cur = w;
  for (int k = 0; k < n; ++k) {
    p = G.multiply(p, cur);
    cur = twist.apply(cur);
  }
  return p;
}

NewtonPoint newton_point(const FrobeniusTwist& twist, const Element& w) {
  const auto& G = twist.group();
  const int ord = twist.order();
  const long cap = 2L * ord * static_cast<long>(G.datum().weyl().size());
  Element p = G.identity(), cur = w;
  int n = 0;
  for (long k = 1; k <= cap; ++k) {
    p = G.multiply(p, cur);
    cur = twist.apply(cur);
    if (k % ord == 0 && p.finite == FiniteWeylGroup::identity()) {
      n = static_cast<int>(k);
      break;
    }
  }
  if (n == 0) fail(ErrorCode::Internal, "Newton iteration exceeded its bound");

  // Continue to 2n; the translation must double.
  Element p2 = p;
  for (int k = 0; k < n; ++k) {
    p2 = G.multiply(p2, cur);
    cur = twist.apply(cur);
  }
  if (!(p2 == G.translation(2 * p.translation)))
    fail(ErrorCode::Internal, "Newton point depends on the chosen power");

  NewtonPoint out;
  out.n = n;
  for (auto x : p.translation) out.nu.emplace_back(x, n);
  out.nu_bar = G.datum().dominant_rep(out.nu).first;
  return out;
}

bool is_sigma_straight(const FrobeniusTwist& twist, const Element& w) {
  const auto& G = twist.group();
  const std::int64_t len = G.length(w);
  NewtonPoint np = newton_point(twist, w);
  bool straight = dot(np.nu_bar, G.datum().two_rho()) == Rational(len);
  if (straight) {
    Element p = G.identity(), cur = w;
    for (int m = 1; m <= 2 * twist.order(); ++m) {
      p = G.multiply(p, cur);
      cur = twist.apply(cur);
      if (G.length(p) != m * len)
        fail(ErrorCode::Internal, "straightness criteria disagree");
    }
  }
  return straight;
}

bool operator<(const BPoint& a, const BPoint& b) {
  Rational sa = rational_sum(a.newton), sb = rational_sum(b.newton);
  if (sa != sb) return sa < sb;
  if (a.newton != b.newton)
    return std::lexicographical_compare(a.newton.begin(), a.newton.end(), b.newton.begin(),
                                        b.newton.end());
  return a.kappa < b.kappa;
}

BPoint b_point(const FrobeniusTwist& twist, const Element& w) {
  return BPoint{newton_point(twist, w).nu_bar, twist.kottwitz_Gamma(w)};
}

LeviSubsystem levi_of(const RootDatum& datum, const RationalVector& v) {
  require(v.size() == datum.rank(), ErrorCode::DatumMismatch, "vector has wrong rank");
  LeviSubsystem out;
  out.v = v;
  for (std::size_t a = 0; a < datum.num_roots(); ++a)
    if (datum.pairing(v, a) == 0) out.roots.push_back(a);
  return out;
}

LeviSubsystem levi_of(const FrobeniusTwist& twist, const RationalVector& v) {
  LeviSubsystem out = levi_of(twist.datum(), v);
  out.defined_over_F = twist.apply_linear(v) == v;
  return out;
}

bool is_central(const RootDatum& datum, const LeviSubsystem& levi, const IntVector& lambda) {
  for (auto a : levi.roots)
    if (datum.pairing(lambda, a) != 0) return false;
  return true;
}

std::vector<StraightTranslation> straight_translations_in_orbit(const FrobeniusTwist& twist,
                                                                const IntVector& mu) {
  const auto& G = twist.group();
  std::vector<StraightTranslation> out;
  for (const auto& m : G.datum().orbit(mu)) {
    Element t = G.translation(m);
    if (is_sigma_straight(twist, t)) out.push_back({m, b_point(twist, t)});
  }
  return out;
}

std::vector<BPoint> b_of_g_mu(const FrobeniusTwist& twist, const IntVector& mu) {
  std::set<BPoint> points;
  for (const auto& w : admissible_set(twist, mu).elements)
    if (is_sigma_straight(twist, w)) points.insert(b_point(twist, w));
  return {points.begin(), points.end()};
}

std::optional<BPoint> mu_ordinary(const FrobeniusTwist& twist, const IntVector& mu) {
  RationalVector target = twist.mu_diamond(mu);
  std::optional<BPoint> found;
  for (auto& p : b_of_g_mu(twist, mu)) {
    if (p.newton != target) continue;
    if (found) fail(ErrorCode::Internal, "more than one class attains mu-diamond");
    found = p;
  }
  return found;
}

std::vector<BPoint> straight_points_up_to_length(const FrobeniusTwist& twist, std::int64_t L,
                                                 const std::vector<Element>& omegas) {
  std::set<BPoint> points;
  twist.group().for_each_up_to_length(L, omegas, [&](const Element& w) {
    if (is_sigma_straight(twist, w)) points.insert(b_point(twist, w));
    return true;
  });
  return {points.begin(), points.end()};
}

QuotientResult quotient_datum(const FrobeniusTwist& twist, const IntMatrix& map,
                              const std::string& name) {
  const auto& d = twist.datum();
  require(map.cols() == d.rank(), ErrorCode::IncompatibleQuotient, "map has the wrong source rank");
  const std::size_t r2 = map.rows();
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < r2; ++i) rows.push_back(map.row(i));
  require(r2 > 0 && rank_of(rows) == r2, ErrorCode::IncompatibleQuotient,
          "map must have full row rank");

  DatumSpec spec;
  spec.name = name.empty() ? d.name() + "/quotient" : name;
  spec.lattice_rank = r2;
  spec.simple_indices = d.simple_indices();
  for (std::size_t a = 0; a < d.num_roots(); ++a) {
    auto x = solve_in_columns(rows, to_rational(d.root(a)));
    require(x && is_integral(*x), ErrorCode::IncompatibleQuotient,
            "a root does not factor through the map");
    IntVector root = to_integral(*x);
    require(map.apply_left(root) == d.root(a), ErrorCode::IncompatibleQuotient,
            "a root does not factor through the map");
    spec.roots.push_back(root);
    spec.coroots.push_back(map.apply(d.coroot(a)));
  }

  QuotientResult out;
  out.map = map;
  try {
    out.datum = std::make_shared<const RootDatum>(std::move(spec));
  } catch (const Error& e) {
    fail(ErrorCode::IncompatibleQuotient, std::string("image datum is invalid: ") + e.what());
  }
  out.group = std::make_shared<const AffineWeylGroup>(out.datum);

  std::vector<IntVector> cols;
  for (std::size_t c = 0; c < map.cols(); ++c) cols.push_back(map.column(c));
  IntMatrix lin(r2, r2);
  for (std::size_t j = 0; j < r2; ++j) {
    RationalVector e(r2, Rational(0));
    e[j] = 1;
    auto pre = solve_in_columns(cols, e);
    require(pre.has_value(), ErrorCode::IncompatibleQuotient, "map is not surjective over Q");
    RationalVector img = map.apply(twist.linear_part().apply(*pre));
    require(is_integral(img), ErrorCode::IncompatibleQuotient,
            "twist does not descend to the target lattice");
    IntVector col = to_integral(img);
    for (std::size_t i = 0; i < r2; ++i) lin(i, j) = col[i];
  }
  require(lin * map == map * twist.linear_part(), ErrorCode::IncompatibleQuotient,
          "twist does not commute with the map");

  const Element& tau = twist.omega_part();
  Element tau2{map.apply(tau.translation),
               out.datum->weyl().from_word(d.weyl().word(tau.finite))};
  try {
    out.twist = std::make_shared<const FrobeniusTwist>(out.group, lin, tau2);
  } catch (const Error& e) {
    fail(ErrorCode::IncompatibleQuotient, std::string("twist does not transport: ") + e.what());
  }
  return out;
}

}  // namespace iwahori
