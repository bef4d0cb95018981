#include "iwahori/selftest.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "iwahori/admissible.hpp"
#include "iwahori/datum_constructors.hpp"
#include "iwahori/error.hpp"
#include "iwahori/loop_check.hpp"
#include "iwahori/sigma_conjugacy.hpp"

namespace iwahori {

namespace {

using Failure = std::string;  // empty means pass

std::string str(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string str(const Element& e) { return "t" + str(e.translation) + "*w" + std::to_string(e.finite); }

std::vector<IntVector> box_vectors(std::size_t rank, std::int64_t lo, std::int64_t hi) {
  std::vector<IntVector> out;
  IntVector v(rank, lo);
  for (;;) {
    out.push_back(v);
    std::size_t i = 0;
    while (i < rank && v[i] == hi) v[i++] = lo;
    if (i == rank) break;
    ++v[i];
  }
  return out;
}

std::vector<IntVector> dominant_box(const RootDatum& d, std::int64_t lo, std::int64_t hi) {
  std::vector<IntVector> out;
  for (auto& v : box_vectors(d.rank(), lo, hi))
    if (d.is_dominant(v)) out.push_back(v);
  return out;
}

std::vector<Element> two_omegas(const AffineWeylGroup& G) {
  IntVector e(G.rank(), 0);
  std::vector<Element> out{G.identity()};
  e[0] = 1;
  Element w = G.omega_of_translation(e);
  if (!(w == G.identity())) out.push_back(w);
  return out;
}

std::unordered_set<Element, ElementHash> subword_products(const AffineWeylGroup& G, const Element& w) {
  ReducedWord rw = G.reduced_word(w);
  const auto& S = G.simple_reflections();
  const std::size_t k = rw.letters.size();
  std::unordered_set<Element, ElementHash> out;
  for (std::uint64_t mask = 0; mask < (1ull << k); ++mask) {
    Element p = rw.omega;
    for (std::size_t i = k; i-- > 0;)
      if (mask >> i & 1) p = G.multiply(S[rw.letters[i]], p);
    out.insert(p);
  }
  return out;
}

const FrobeniusTwist& find_fixture(const std::vector<NamedTwist>& fx, const std::string& name) {
  for (const auto& f : fx)
    if (f.name == name) return *f.twist;
  fail(ErrorCode::Internal, "unknown fixture " + name);
}

struct Suite {
  std::vector<std::tuple<std::string, std::string, std::function<Failure()>>> items;
  void add(std::string module, std::string name, std::function<Failure()> fn) {
    items.emplace_back(std::move(module), std::move(name), std::move(fn));
  }
};

SelftestCheck run_one(const std::string& module, const std::string& name, const std::function<Failure()>& fn) {
  SelftestCheck c{module, name, false, "", 0};
  auto t0 = std::chrono::steady_clock::now();
  try {
    c.detail = fn();
    c.pass = c.detail.empty();
  } catch (const std::exception& e) {
    c.detail = std::string("exception: ") + e.what();
  }
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return c;
}

// ---------------------------------------------------------------- root-system

void root_system_checks(Suite& s, const std::vector<NamedTwist>& fx, const SelftestOptions& opt) {
  s.add("root-system", "length_translation matches the general length on a box", [&fx, opt] {
    for (const char* name : {"gl2", "gl3", "sp4"}) {
      const auto& G = find_fixture(fx, name).group();
      for (const auto& v : box_vectors(G.rank(), -opt.box, opt.box))
        if (G.datum().length_translation(v) != G.length(G.translation(v)))
          return Failure(std::string(name) + " " + str(v));
    }
    return Failure();
  });
  s.add("root-system", "dominance orders are partial orders; integral implies rational", [&fx] {
    for (const char* name : {"gl2", "gl3", "sp4"}) {
      const auto& d = find_fixture(fx, name).datum();
      auto dom = dominant_box(d, -2, 2);
      const std::size_t n = dom.size();
      std::vector<char> rat(n * n), integ(n * n);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          rat[a * n + b] = d.dominance_leq(to_rational(dom[a]), to_rational(dom[b]));
          integ[a * n + b] = d.integral_dominance_leq(dom[a], dom[b]);
          if (integ[a * n + b] && !rat[a * n + b]) return Failure("integral without rational");
        }
      for (const auto* rel : {&rat, &integ}) {
        const auto& r = *rel;
        for (std::size_t a = 0; a < n; ++a) {
          if (!r[a * n + a]) return Failure("not reflexive");
          for (std::size_t b = 0; b < n; ++b) {
            if (a != b && r[a * n + b] && r[b * n + a]) return Failure("not antisymmetric");
            if (!r[a * n + b]) continue;
            for (std::size_t c = 0; c < n; ++c)
              if (r[b * n + c] && !r[a * n + c]) return Failure("not transitive");
          }
        }
      }
    }
    return Failure();
  });
  s.add("root-system", "dominant_rep is idempotent and W0-invariant", [&fx] {
    for (const char* name : {"gl2", "gl3", "sp4", "gsp4"}) {
      std::shared_ptr<const RootDatum> owned;
      const RootDatum* d = nullptr;
      if (std::string(name) == "gsp4") {
        owned = standard_datum("gsp4");
        d = owned.get();
      } else {
        d = &find_fixture(fx, name).datum();
      }
      for (const auto& v : box_vectors(d->rank(), -2, 2)) {
        auto [dom, w] = d->dominant_rep(v);
        if (d->weyl().matrix(w).apply(v) != dom) return Failure("witness does not map to representative");
        if (d->dominant_rep(dom).first != dom || d->dominant_rep(dom).second != 0)
          return Failure("not idempotent at " + str(v));
        for (std::size_t u = 0; u < d->weyl().size(); ++u)
          if (d->dominant_rep(d->weyl().matrix(static_cast<W0Index>(u)).apply(v)).first != dom)
            return Failure("not W0-invariant at " + str(v));
      }
    }
    return Failure();
  });
}

// ---------------------------------------------------------------- affine-weyl

void affine_checks(Suite& s, const std::vector<NamedTwist>& fx) {
  s.add("affine-weyl", "l(sw) = l(w) +- 1 and l(omega w) = l(w)", [&fx] {
    for (const char* name : {"gl2", "gl3", "sp4"}) {
      const auto& G = find_fixture(fx, name).group();
      auto omegas = two_omegas(G);
      for (const auto& w : G.enumerate_up_to_length(4, omegas)) {
        auto l = G.length(w);
        for (const auto& sr : G.simple_reflections())
          if (std::abs(G.length(G.multiply(sr, w)) - l) != 1) return Failure(std::string(name) + " " + str(w));
        for (const auto& om : omegas)
          if (G.length(G.multiply(om, w)) != l) return Failure("omega changes length");
      }
    }
    return Failure();
  });
  s.add("affine-weyl", "recursive Bruhat order agrees with subwords", [&fx] {
    for (const char* name : {"gl2", "gl3", "sp4"}) {
      const auto& G = find_fixture(fx, name).group();
      auto elems = G.enumerate_up_to_length(6, two_omegas(G));
      for (const auto& w : elems) {
        auto down = subword_products(G, w);
        for (const auto& v : elems)
          if (G.bruhat_leq(v, w) != (down.count(v) > 0))
            return Failure(std::string(name) + " " + str(v) + " <= " + str(w));
      }
    }
    return Failure();
  });
  s.add("affine-weyl", "omega_component is a surjective homomorphism with kernel W_a", [&fx, opt_seed = 7u] {
    std::mt19937_64 rng(opt_seed);
    for (const char* name : {"gl2", "gl3", "sp4", "res2_gl2"}) {
      const auto& G = find_fixture(fx, name).group();
      auto elems = G.enumerate_up_to_length(3, two_omegas(G));
      std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
      for (int i = 0; i < 200; ++i) {
        const auto& a = elems[pick(rng)];
        const auto& b = elems[pick(rng)];
        if (!(G.omega_component(G.multiply(a, b)) ==
              G.multiply(G.omega_component(a), G.omega_component(b))))
          return Failure("not multiplicative");
      }
      for (const auto& w : elems) {
        bool trivial = G.pi1_I().contains(w.translation);
        if (trivial != (G.omega_component(w) == G.identity())) return Failure("kernel is not W_a");
      }
      for (const auto& v : box_vectors(G.rank(), -2, 2)) {
        Element om = G.omega_of_translation(v);
        if (G.length(om) != 0 || G.kappa_tilde(om) != G.pi1_I().reduce(v)) return Failure("not surjective");
      }
    }
    return Failure();
  });
  s.add("affine-weyl", "double_coset_rep is the minimum of its double coset", [&fx] {
    for (const char* name : {"gl2", "gl3"}) {
      const auto& G = find_fixture(fx, name).group();
      std::vector<std::size_t> J = G.finite_simple_positions();
      auto WJ = G.parabolic_elements(J);
      for (const auto& w : G.enumerate_up_to_length(3, two_omegas(G))) {
        Element rep = G.double_coset_rep(w, J);
        if (!(G.double_coset_rep(rep, J) == rep)) return Failure("not idempotent");
        std::int64_t best = G.length(rep);
        bool found = false;
        for (const auto& a : WJ)
          for (const auto& b : WJ) {
            Element x = G.multiply(G.multiply(a, w), b);
            if (G.length(x) < best) return Failure("shorter element in coset of " + str(w));
            found = found || x == rep;
          }
        if (!found) return Failure("rep outside its double coset");
      }
    }
    return Failure();
  });
}

// ---------------------------------------------------------------- frobenius

void frobenius_checks(Suite& s, const std::vector<NamedTwist>& fx) {
  s.add("frobenius", "sigma is a length-preserving automorphism permuting S", [&fx] {
    for (const auto& f : fx) {
      const auto& T = *f.twist;
      const auto& G = T.group();
      auto elems = G.enumerate_up_to_length(3, two_omegas(G));
      for (const auto& a : elems) {
        if (G.length(T.apply(a)) != G.length(a)) return Failure(f.name + ": length changes");
        for (const auto& sr : G.simple_reflections())
          if (!(T.apply(G.multiply(a, sr)) == G.multiply(T.apply(a), T.apply(sr))))
            return Failure(f.name + ": not multiplicative");
      }
      std::set<std::size_t> img(T.simple_permutation().begin(), T.simple_permutation().end());
      if (img.size() != G.num_simple_reflections()) return Failure(f.name + ": not a permutation of S");
    }
    return Failure();
  });
  s.add("frobenius", "sigma0 has finite order and preserves the dominant chamber", [&fx] {
    for (const auto& f : fx) {
      const auto& T = *f.twist;
      IntMatrix p = IntMatrix::identity(T.datum().rank());
      for (int i = 0; i < T.order_N(); ++i) p = T.sigma0() * p;
      if (!p.is_identity()) return Failure(f.name + ": sigma0^N != 1");
      for (const auto& v : dominant_box(T.datum(), -2, 2))
        if (!T.datum().is_dominant(T.apply_sigma0(v))) return Failure(f.name + ": " + str(v));
    }
    return Failure();
  });
  s.add("frobenius", "kappa_I o sigma = sigma o kappa_I", [&fx] {
    for (const auto& f : fx) {
      const auto& T = *f.twist;
      const auto& G = T.group();
      for (const auto& w : G.enumerate_up_to_length(2, two_omegas(G)))
        if (T.kottwitz_I(T.apply(w)) != T.sigma_on_pi1_I(T.kottwitz_I(w))) return Failure(f.name);
    }
    return Failure();
  });
  s.add("frobenius", "kappa_Gamma is a sigma-conjugacy invariant", [&fx] {
    for (const auto& f : fx) {
      const auto& T = *f.twist;
      const auto& G = T.group();
      auto elems = G.enumerate_up_to_length(4, two_omegas(G));
      auto us = G.enumerate_up_to_length(1, two_omegas(G));
      for (const auto& w : elems)
        for (const auto& u : us) {
          Element c = G.multiply(G.multiply(G.inverse(u), w), T.apply(u));
          if (T.kottwitz_Gamma(c) != T.kottwitz_Gamma(w)) return Failure(f.name + ": " + str(w));
        }
    }
    return Failure();
  });
}

// ---------------------------------------------------------------- sigma-conjugacy

void sigma_checks(Suite& s, const std::vector<NamedTwist>& fx, const SelftestOptions& opt) {
  s.add("sigma-conjugacy", "Newton point and kappa are sigma-conjugacy invariants", [&fx] {
    for (const auto& f : fx) {
      const auto& T = *f.twist;
      const auto& G = T.group();
      auto us = G.enumerate_up_to_length(1, two_omegas(G));
      for (const auto& w : G.enumerate_up_to_length(4, two_omegas(G))) {
        BPoint p = b_point(T, w);
        for (const auto& u : us)
          if (!(b_point(T, G.multiply(G.multiply(G.inverse(u), w), T.apply(u))) == p))
            return Failure(f.name + ": " + str(w));
      }
    }
    return Failure();
  });
  s.add("sigma-conjugacy", "nu(sigma w) = tau varsigma(nu(w)) and nu-bar is sigma0-fixed", [&fx] {
    for (const auto& f : fx) {
      const auto& T = *f.twist;
      const IntMatrix& tau = T.datum().weyl().matrix(T.omega_part().finite);
      for (const auto& w : T.group().enumerate_up_to_length(3, two_omegas(T.group()))) {
        NewtonPoint a = newton_point(T, w), b = newton_point(T, T.apply(w));
        if (b.nu != tau.apply(T.apply_linear(a.nu))) return Failure(f.name + ": " + str(w));
        if (T.apply_sigma0(a.nu_bar) != a.nu_bar) return Failure(f.name + ": nu-bar not fixed");
      }
    }
    return Failure();
  });
  s.add("sigma-conjugacy", "straightness criteria agree", [&fx] {
    for (const auto& f : fx) {
      const auto& T = *f.twist;
      const auto& G = T.group();
      const int cap = 2 * T.order() * static_cast<int>(G.datum().weyl().size());
      for (const auto& w : G.enumerate_up_to_length(3, two_omegas(G))) {
        bool by_products = true;
        Element p = G.identity(), cur = w;
        for (int n = 1; n <= cap && by_products; ++n) {
          p = G.multiply(p, cur);
          cur = T.apply(cur);
          by_products = G.length(p) == n * G.length(w);
        }
        if (by_products != is_sigma_straight(T, w)) return Failure(f.name + ": " + str(w));
      }
    }
    return Failure();
  });
  s.add("sigma-conjugacy", "straight translations are central in their Levi", [&fx, opt] {
    for (const auto& f : fx) {
      const auto& T = *f.twist;
      for (const auto& mu : dominant_box(T.datum(), 0, std::min(opt.box, 2)))
        for (const auto& st : straight_translations_in_orbit(T, mu)) {
          auto levi = levi_of(T, newton_point(T, T.group().translation(st.mu_prime)).nu);
          if (!is_central(T.datum(), levi, st.mu_prime)) return Failure(f.name + ": " + str(st.mu_prime));
        }
    }
    return Failure();
  });
  s.add("sigma-conjugacy", "straight elements of Adm at mu-diamond are translations", [&fx] {
    for (const auto& f : fx) {
      const auto& T = *f.twist;
      const auto& G = T.group();
      if (!(T.omega_part() == G.identity())) continue;
      for (const auto& mu : dominant_box(T.datum(), 0, 2)) {
        if (G.length(G.translation(mu)) > 8) continue;
        RationalVector target = T.mu_diamond(mu);
        auto orbit = T.datum().orbit(mu);
        for (const auto& w : admissible_set(T, mu).elements) {
          if (w.finite != 0 || !std::binary_search(orbit.begin(), orbit.end(), w.translation)) {
            if (is_sigma_straight(T, w) && newton_point(T, w).nu_bar == target)
              return Failure(f.name + ": " + str(w));
          }
        }
      }
    }
    return Failure();
  });
  s.add("sigma-conjugacy", "B(G,mu) members satisfy kappa = mu-natural and nu <= mu-diamond", [&fx] {
    for (const auto& f : fx) {
      const auto& T = *f.twist;
      for (const auto& mu : dominant_box(T.datum(), 0, 2)) {
        if (T.group().length(T.group().translation(mu)) > 8) continue;
        RationalVector target = T.mu_diamond(mu);
        int top = 0;
        for (const auto& p : b_of_g_mu(T, mu)) {
          if (p.kappa != T.mu_natural(mu)) return Failure(f.name + ": kappa");
          if (!T.datum().dominance_leq(p.newton, target)) return Failure(f.name + ": newton");
          top += p.newton == target;
        }
        if (top > 1) return Failure(f.name + ": several classes at mu-diamond");
      }
    }
    return Failure();
  });
  s.add("sigma-conjugacy", "quotient_datum preserves mu-ordinary existence", [] {
    auto gl2 = split_twist("gl2");
    IntMatrix to_pgl(1, 2);
    to_pgl(0, 0) = 1;
    to_pgl(0, 1) = -1;
    auto q1 = quotient_datum(*gl2, to_pgl);
    for (const auto& mu : {IntVector{1, 0}, IntVector{2, 0}, IntVector{1, 1}})
      if (mu_ordinary(*gl2, mu).has_value() != mu_ordinary(*q1.twist, q1.image(mu)).has_value())
        return Failure("gl2 -> pgl2");
    auto sl2 = split_twist("sl2");
    IntMatrix two(1, 1);
    two(0, 0) = 2;
    auto q2 = quotient_datum(*sl2, two);
    for (const auto& mu : {IntVector{1}, IntVector{2}})
      if (mu_ordinary(*sl2, mu).has_value() != mu_ordinary(*q2.twist, q2.image(mu)).has_value())
        return Failure("sl2 -> pgl2");
    auto inner = inner_twist(make_group(standard_datum("gl2")));
    auto q3 = quotient_datum(*inner, to_pgl);
    if (mu_ordinary(*inner, {1, 0}).has_value() != mu_ordinary(*q3.twist, q3.image({1, 0})).has_value())
      return Failure("inner gl2 -> pgl2");
    return Failure();
  });
}

// ---------------------------------------------------------------- admissible

void admissible_checks(Suite& s, const std::vector<NamedTwist>& fx, const SelftestOptions& opt) {
  s.add("admissible", "tau_min, shared kappa and downward closure", [&fx] {
    for (const auto& f : fx) {
      const auto& T = *f.twist;
      const auto& G = T.group();
      for (const auto& mu : dominant_box(T.datum(), 0, 2)) {
        Element tmu = G.translation(mu);
        std::int64_t L = G.length(tmu);
        if (L > 6) continue;
        AdmissibleSet adm = admissible_set(T, mu);
        if (G.length(adm.tau_min) != 0 || G.kappa_tilde(adm.tau_min) != G.kappa_tilde(tmu))
          return Failure(f.name + ": tau_min");
        std::unordered_set<Element, ElementHash> in(adm.elements.begin(), adm.elements.end());
        for (const auto& w : adm.elements)
          if (G.kappa_tilde(w) != G.kappa_tilde(tmu) || !G.bruhat_leq(adm.tau_min, w))
            return Failure(f.name + ": component");
        auto tops = T.datum().orbit(mu);
        for (const auto& v : G.enumerate_up_to_length(L, {adm.tau_min})) {
          bool below = false;
          for (const auto& x : tops) below = below || G.bruhat_leq(v, G.translation(x));
          if (below != (in.count(v) > 0)) return Failure(f.name + ": closure at " + str(v));
        }
      }
    }
    return Failure();
  });
  s.add("admissible", "very special parahoric: strata poset is order-isomorphic to Adm_J", [&fx, opt] {
    for (const char* name : {"gl2", "gl3", "sp4"}) {
      const auto& T = find_fixture(fx, name);
      const auto& G = T.group();
      auto J = very_special_parahoric(G);
      for (const auto& mu : dominant_box(T.datum(), 0, opt.box)) {
        StrataPoset P = kr_poset_very_special(T, mu);
        auto reps = admissible_set_J(T, mu, J);
        if (reps.size() != P.nodes.size()) return Failure(std::string(name) + ": size at " + str(mu));
        std::vector<Element> img;
        for (const auto& n : P.nodes) img.push_back(G.double_coset_rep(G.translation(n.lambda), J));
        std::set<Element> a(img.begin(), img.end()), b(reps.begin(), reps.end());
        if (a != b) return Failure(std::string(name) + ": image at " + str(mu));
        for (std::size_t i = 0; i < img.size(); ++i)
          for (std::size_t j = 0; j < img.size(); ++j)
            if (T.datum().integral_dominance_leq(P.nodes[i].lambda, P.nodes[j].lambda) !=
                G.bruhat_leq(img[i], img[j]))
              return Failure(std::string(name) + ": order at " + str(mu));
      }
    }
    return Failure();
  });
  s.add("admissible", "|Adm| depends only on the orbit; straight elements appear in B(G,mu)", [&fx] {
    for (const auto& f : fx) {
      const auto& T = *f.twist;
      for (const auto& mu : dominant_box(T.datum(), 0, 2)) {
        if (T.group().length(T.group().translation(mu)) > 6) continue;
        auto adm = admissible_set(T, mu);
        for (const auto& x : T.datum().orbit(mu))
          if (admissible_set(T, x).elements.size() != adm.elements.size()) return Failure(f.name + ": size");
        auto bg = b_of_g_mu(T, mu);
        std::set<BPoint> pts(bg.begin(), bg.end());
        for (const auto& w : adm.elements)
          if (is_sigma_straight(T, w) && !pts.count(b_point(T, w))) return Failure(f.name + ": missing point");
      }
    }
    return Failure();
  });
  s.add("admissible", "curve chains climb to mu by valid steps", [&fx] {
    for (const char* name : {"gl2", "gl3", "sp4", "res2_gl2"}) {
      const auto& T = find_fixture(fx, name);
      const auto& d = T.datum();
      for (const auto& mu : dominant_box(d, 0, 2)) {
        if (T.apply_sigma0(mu) != mu) continue;
        for (const auto& node : kr_poset_very_special(T, mu).nodes) {
          if (T.apply_sigma0(node.lambda) != node.lambda) continue;
          auto chain = curve_chain(T, node.lambda, mu);
          if (chain.back() != mu) return Failure(std::string(name) + ": does not reach mu");
          for (std::size_t i = 0; i + 1 < chain.size(); ++i)
            if (!d.integral_dominance_less(chain[i], chain[i + 1]) || !d.integral_dominance_leq(chain[i + 1], mu))
              return Failure(std::string(name) + ": bad step");
        }
      }
    }
    return Failure();
  });
}

// ---------------------------------------------------------------- loop-check

LaurentPoly random_poly(const LaurentRing& ring, std::mt19937_64& rng, int lo, int hi) {
  std::uniform_int_distribution<std::int64_t> coef(0, ring.field().order() - 1);
  LaurentPoly p(ring);
  for (int e = lo; e <= hi; ++e) p = p + LaurentPoly::monomial(ring, static_cast<FiniteField::Elem>(coef(rng)), e);
  return p;
}

// Some h with h + tau(h) = 0.
LaurentPoly random_trace_zero(const LaurentRing& ring, std::mt19937_64& rng) {
  LaurentPoly h = random_poly(ring, rng, -2, 2);
  return h - h.tau();
}

void loop_checks(Suite& s, const SelftestOptions& opt) {
  s.add("loop-check", "unitary unipotents preserve the form and have determinant 1", [seed = opt.seed] {
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < 200; ++trial) {
      LaurentRing ring(trial % 2 ? LaurentKind::Ramified : LaurentKind::Unramified, trial % 4 < 2 ? 3 : 5);
      const auto& F = ring.field();
      LaurentPoly c = random_poly(ring, rng, -1, 1);
      LaurentPoly d = LaurentPoly::constant(ring, F.neg(F.inv(F.from_int(2)))) * c.tau() * c +
                      random_trace_zero(ring, rng);
      for (int i : {1, -1}) {
        LoopMatrix m = su3_unipotent(i, c, d);
        if (!in_loop_group(m, ParahoricKind::Su3Standard)) return Failure("trial " + std::to_string(trial));
      }
    }
    return Failure();
  });
  s.add("loop-check", "u_i(0,d) u_i(0,d') = u_i(0,d+d')", [seed = opt.seed] {
    std::mt19937_64 rng(seed + 1);
    for (auto kind : {LaurentKind::Ramified, LaurentKind::Unramified}) {
      LaurentRing ring(kind, 3);
      LaurentPoly z(ring);
      for (int trial = 0; trial < 50; ++trial) {
        LaurentPoly d1 = random_trace_zero(ring, rng), d2 = random_trace_zero(ring, rng);
        for (int i : {1, -1})
          if (!(su3_unipotent(i, z, d1) * su3_unipotent(i, z, d2) == su3_unipotent(i, z, d1 + d2)))
            return Failure("group law");
      }
    }
    return Failure();
  });
  s.add("loop-check", "membership identities hold for every x in F_q^x", [] {
    struct Run {
      int case_no;
      std::int64_t q;
      bool unramified;
    };
    std::vector<Run> runs;
    for (int c : {1, 2, 3})
      for (std::int64_t q : {3, 5, 7, 9}) runs.push_back({c, q, false});
    for (int c : {1, 2})
      for (std::int64_t q : {3, 9}) runs.push_back({c, q, true});
    for (const auto& r : runs) {
      LaurentRing ring = case_ring(r.case_no, r.q, r.unramified);
      auto rep = verify_case(r.case_no, ring, translation_lift(ring, case_parahoric(r.case_no)));
      if (!rep.all_pass || rep.checked != static_cast<std::size_t>(r.q - 1))
        return Failure("case " + std::to_string(r.case_no) + " q=" + std::to_string(r.q) +
                       (r.unramified ? " unramified" : ""));
    }
    return Failure();
  });
  s.add("loop-check", "fixed lifts project to the coroot and are the first passing candidates", [] {
    for (auto [c, unram] : {std::pair{1, false}, std::pair{2, false}, std::pair{3, false}, std::pair{1, true},
                            std::pair{2, true}}) {
      LaurentRing ring = case_ring(c, 3, unram);
      LoopMatrix lift = translation_lift(ring, case_parahoric(c));
      if (lift_image(lift, case_parahoric(c)) != standard_datum("sl2")->coroot(0))
        return Failure("image of case " + std::to_string(c));
      auto resolved = resolve_lift(c, ring);
      if (!resolved || !(*resolved == lift)) return Failure("resolution of case " + std::to_string(c));
    }
    return Failure();
  });
}

// ---------------------------------------------------------------- datum-constructors

void constructor_checks(Suite& s) {
  s.add("datum-constructors", "standard data validate; restriction keeps Adm sizes", [] {
    for (const char* k : {"gl2", "gl3", "gl4", "sl2", "sl3", "pgl2", "pgl3", "gsp4", "sp4"}) standard_datum(k);
    auto gl2 = split_twist("gl2");
    for (int f : {1, 2, 3}) {
      auto res = restriction_of_scalars(*gl2, f);
      for (const auto& mu : {IntVector{1, 0}, IntVector{2, 0}, IntVector{1, 1}}) {
        IntVector big(2 * f, 0);
        big[0] = mu[0];
        big[1] = mu[1];
        if (admissible_set(*res, big).elements.size() != admissible_set(*gl2, mu).elements.size())
          return Failure("f=" + std::to_string(f));
      }
    }
    auto u3 = unitary_twist(make_group(standard_datum("gl3")));
    auto res_u3 = restriction_of_scalars(*u3, 2);
    if (res_u3->order_N() != 2 * u3->order_N()) return Failure("order of restricted unitary twist");
    return Failure();
  });
}

}  // namespace

std::vector<NamedTwist> standard_fixtures() {
  std::vector<NamedTwist> fx;
  fx.push_back({"gl2", split_twist("gl2")});
  fx.push_back({"gl3", split_twist("gl3")});
  fx.push_back({"sp4", split_twist("sp4")});
  fx.push_back({"res2_gl2", restriction_of_scalars(*fx[0].twist, 2)});
  fx.push_back({"unitary_gl3", unitary_twist(make_group(standard_datum("gl3")))});
  fx.push_back({"inner_gl2", inner_twist(make_group(standard_datum("gl2")))});
  return fx;
}

bool SelftestReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

SelftestReport run_selftest(const SelftestOptions& options) {
  auto fx = standard_fixtures();
  Suite s;
  root_system_checks(s, fx, options);
  affine_checks(s, fx);
  frobenius_checks(s, fx);
  sigma_checks(s, fx, options);
  admissible_checks(s, fx, options);
  loop_checks(s, options);
  constructor_checks(s);

  SelftestReport report;
  report.checks.resize(s.items.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < s.items.size(); i = next++) {
      const auto& [module, name, fn] = s.items[i];
      report.checks[i] = run_one(module, name, fn);
    }
  };
  const int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return report;
}

}  // namespace iwahori
