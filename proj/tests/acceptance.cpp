#include <sys/resource.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "iwahori/admissible.hpp"
#include "iwahori/datum_constructors.hpp"
#include "iwahori/loop_check.hpp"
#include "iwahori/selftest.hpp"
#include "iwahori/sigma_conjugacy.hpp"
#include "oracles.hpp"

using namespace iwahori;

namespace {

// Wall-clock limits in seconds.
constexpr double kLimitAC1 = 5;
constexpr double kLimitAC2 = 30;
constexpr double kLimitAC3 = 10;
constexpr double kLimitAC4 = 60;
constexpr double kLimitAC6 = 60;
constexpr double kLimitAC7 = 120;
constexpr double kLimitAC9 = 10;
constexpr double kLimitSelftest = 300;
constexpr long kMemoryLimitKiB = 2L * 1024 * 1024;

struct Outcome {
  bool pass = true;
  std::string detail;
};

Outcome failure(const std::string& what) { return {false, what}; }

std::string str(const IntVector& v) {
  std::ostringstream s;
  s << "(";
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
  s << ")";
  return s.str();
}

oracle::Elem to_oracle(const AffineWeylGroup& G, const Element& w) {
  return {w.translation, G.datum().weyl().matrix(w.finite)};
}

// Distinct dominant vectors with coordinates in [lo, hi].
std::vector<IntVector> dominant_box(const RootDatum& d, int lo, int hi) {
  std::set<IntVector> out;
  IntVector v(d.rank(), lo);
  while (true) {
    if (d.is_dominant(v)) out.insert(v);
    std::size_t i = 0;
    while (i < v.size() && v[i] == hi) v[i++] = lo;
    if (i == v.size()) break;
    ++v[i];
  }
  return {out.begin(), out.end()};
}

std::vector<IntVector> full_box(std::size_t n, int lo, int hi) {
  std::vector<IntVector> out;
  IntVector v(n, lo);
  while (true) {
    out.push_back(v);
    std::size_t i = 0;
    while (i < n && v[i] == hi) v[i++] = lo;
    if (i == n) break;
    ++v[i];
  }
  return out;
}

// Length-zero elements of kappa e_i, kappa in [-1, 1].
std::vector<Element> sample_omegas(const AffineWeylGroup& G) {
  std::vector<Element> out{G.identity()};
  for (std::size_t i = 0; i < G.rank(); ++i)
    for (int k : {1, -1}) {
      IntVector e(G.rank(), 0);
      e[i] = k;
      Element om = G.omega_of_translation(e);
      if (std::find(out.begin(), out.end(), om) == out.end()) out.push_back(om);
    }
  return out;
}

std::vector<NamedTwist> gl_fixtures() {
  std::vector<NamedTwist> out;
  for (const char* kind : {"gl2", "gl3"}) {
    auto split = split_twist(kind);
    auto group = split->group_ptr();
    std::string k(kind);
    out.push_back({k, split});
    out.push_back({"res2_" + k, restriction_of_scalars(*split, 2)});
    out.push_back({"unitary_" + k, unitary_twist(group)});
    out.push_back({"inner_" + k, inner_twist(group)});
  }
  return out;
}

Outcome ac1() {
  for (const char* kind : {"gl2", "gl3", "sp4"}) {
    auto tw = split_twist(kind);
    const auto& G = tw->group();
    const auto& d = tw->datum();
    oracle::Model model(*tw);
    const IntVector two_rho = d.two_rho();
    for (const auto& v : full_box(d.rank(), -3, 3)) {
      Element t = G.translation(v);
      const std::int64_t expected = dot(d.dominant_rep(v).first, two_rho);
      if (G.length(t) != expected) return failure(std::string(kind) + " " + str(v));
      if (model.length(to_oracle(G, t)) != expected) return failure(std::string(kind) + " oracle " + str(v));
    }
  }
  return {};
}

Outcome ac2() {
  struct Row {
    const char* kind;
    std::int64_t L;
  };
  std::size_t pairs = 0;
  for (const auto& r : {Row{"gl2", 6}, Row{"gl3", 4}}) {
    auto tw = split_twist(r.kind);
    const auto& G = tw->group();
    oracle::Model model(*tw);
    auto elems = G.enumerate_up_to_length(r.L, sample_omegas(G));
    for (const auto& w : elems) {
      std::set<oracle::Key> below;
      for (const auto& [k, x] : model.subword_products(to_oracle(G, w))) below.insert(k);
      for (const auto& v : elems) {
        ++pairs;
        if (G.bruhat_leq(v, w) != (below.count(oracle::key(to_oracle(G, v))) > 0))
          return failure(std::string(r.kind) + " pair disagrees");
      }
    }
  }
  return {true, std::to_string(pairs) + " pairs"};
}

Outcome ac3() {
  struct Row {
    const char* kind;
    IntVector mu;
    std::size_t count;
  };
  for (const auto& r : {Row{"gl2", {1, 0}, 3}, Row{"gl3", {1, 0, 0}, 7}}) {
    auto tw = split_twist(r.kind);
    oracle::Model model(*tw);
    const auto theirs = model.adm(r.mu);
    if (theirs.size() != r.count) return failure(std::string(r.kind) + " oracle " + std::to_string(theirs.size()));
    const auto ours = admissible_set(*tw, r.mu);
    if (ours.elements.size() != r.count) return failure(std::string(r.kind) + " " + std::to_string(ours.elements.size()));
    for (const auto& w : ours.elements)
      if (!theirs.count(oracle::key(to_oracle(tw->group(), w)))) return failure(std::string(r.kind) + " element mismatch");
  }
  return {};
}

Outcome ac4() {
  std::size_t checked = 0;
  for (const auto& f : gl_fixtures()) {
    const auto& T = *f.twist;
    const auto& G = T.group();
    oracle::Model model(T);
    for (const auto& w : G.enumerate_up_to_length(4, sample_omegas(G))) {
      const oracle::Elem o = to_oracle(G, w);
      const bool by_products = model.straight_by_products(o);
      const bool by_newton = Rational(model.length(o)) == model.pair_two_rho(model.dominant(model.newton(o)));
      if (by_products != by_newton) return failure(f.name + ": oracle definitions disagree");
      if (is_sigma_straight(T, w) != by_products) return failure(f.name + ": production disagrees");
      ++checked;
    }
  }
  return {true, std::to_string(checked) + " elements"};
}

Outcome ac5() {
  std::size_t found = 0;
  for (const auto& f : standard_fixtures()) {
    const auto& T = *f.twist;
    for (const auto& mu : dominant_box(T.datum(), 0, 3))
      for (const auto& st : straight_translations_in_orbit(T, mu)) {
        ++found;
        auto levi = levi_of(T, newton_point(T, T.group().translation(st.mu_prime)).nu);
        if (!is_central(T.datum(), levi, st.mu_prime)) return failure(f.name + " " + str(st.mu_prime));
      }
  }
  return {true, std::to_string(found) + " straight translations"};
}

Outcome ac6() {
  auto gl2 = split_twist("gl2");
  auto inner = inner_twist(gl2->group_ptr());
  auto unitary = unitary_twist(split_twist("gl3")->group_ptr());
  struct Row {
    std::string name;
    std::shared_ptr<const FrobeniusTwist> twist;
    IntVector mu;
    std::size_t count;  // 0: not pinned
    bool has_ordinary;
  };
  for (const auto& r : {Row{"gl2", gl2, {1, 0}, 2, true}, Row{"inner_gl2", inner, {1, 0}, 1, false},
                        Row{"unitary_gl3", unitary, {1, 0, 0}, 0, true}}) {
    oracle::Model model(*r.twist);
    const auto theirs = model.b_of_g_mu(r.mu);
    const auto target = model.mu_diamond(r.mu);
    if (r.count && theirs.size() != r.count) return failure(r.name + " oracle count");
    if (theirs.count(target) != (r.has_ordinary ? 1u : 0u)) return failure(r.name + " oracle ordinary");
    const auto ours = b_of_g_mu(*r.twist, r.mu);
    std::set<RationalVector> newtons;
    for (const auto& p : ours) newtons.insert(p.newton);
    if (newtons != theirs || newtons.size() != ours.size()) return failure(r.name + " B(G,mu) differs from oracle");
    const auto ord = mu_ordinary(*r.twist, r.mu);
    if (ord.has_value() != r.has_ordinary) return failure(r.name + " mu-ordinary presence");
    if (ord && ord->newton != target) return failure(r.name + " mu-ordinary Newton point");
  }
  const auto ord = mu_ordinary(*unitary, {1, 0, 0});
  const RationalVector expected{Rational(1, 2), Rational(0), Rational(-1, 2)};
  if (!ord || ord->newton != expected) return failure("unitary_gl3 mu-ordinary is not (1/2,0,-1/2)");
  return {};
}

Outcome ac7() {
  std::size_t instances = 0;
  for (const char* kind : {"gl2", "gl3", "sp4"}) {
    auto tw = split_twist(kind);
    const auto& G = tw->group();
    const auto& d = tw->datum();
    const auto J = very_special_parahoric(G);
    for (const auto& mu : dominant_box(d, 0, 3)) {
      ++instances;
      const auto poset = kr_poset_very_special(*tw, mu);
      const auto reps = admissible_set_J(*tw, mu, J);
      if (poset.nodes.size() != reps.size()) return failure(std::string(kind) + " " + str(mu) + " sizes");
      std::vector<Element> image;
      for (const auto& n : poset.nodes) {
        Element r = G.double_coset_rep(G.translation(n.lambda), J);
        if (std::find(reps.begin(), reps.end(), r) == reps.end())
          return failure(std::string(kind) + " " + str(n.lambda) + " not a coset of Adm_J");
        image.push_back(r);
      }
      const std::size_t m = poset.nodes.size();
      std::set<std::pair<std::size_t, std::size_t>> covers(poset.covers.begin(), poset.covers.end());
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
          const bool le = d.integral_dominance_leq(poset.nodes[a].lambda, poset.nodes[b].lambda);
          if (le != G.bruhat_leq(image[a], image[b])) return failure(std::string(kind) + " " + str(mu) + " order");
          bool cover = le && a != b;
          for (std::size_t c = 0; cover && c < m; ++c)
            if (c != a && c != b && d.integral_dominance_leq(poset.nodes[a].lambda, poset.nodes[c].lambda) &&
                d.integral_dominance_leq(poset.nodes[c].lambda, poset.nodes[b].lambda))
              cover = false;
          if (cover != (covers.count({a, b}) > 0)) return failure(std::string(kind) + " " + str(mu) + " covers");
        }
    }
  }
  return {true, std::to_string(instances) + " instances"};
}

Outcome ac8() {
  std::size_t hits = 0;
  for (const auto& f : standard_fixtures()) {
    const auto& T = *f.twist;
    const auto& G = T.group();
    const int hi = T.datum().rank() > 3 ? 2 : 3;
    for (const auto& mu : dominant_box(T.datum(), 0, hi)) {
      const RationalVector target = T.mu_diamond(mu);
      for (const auto& w : admissible_set(T, mu).elements) {
        if (!is_sigma_straight(T, w)) continue;
        if (newton_point(T, w).nu_bar != target) continue;
        ++hits;
        if (w.finite != FiniteWeylGroup::identity()) return failure(f.name + " " + str(mu) + " non-translation");
      }
    }
  }
  return {true, std::to_string(hits) + " classes at mu-diamond"};
}

Outcome ac9() {
  struct Row {
    int case_no;
    std::int64_t q;
    bool unramified;
  };
  std::vector<Row> rows;
  for (int c : {1, 2, 3})
    for (std::int64_t q : {3, 5, 7}) rows.push_back({c, q, false});
  for (int c : {1, 2})
    for (std::int64_t q : {3, 9}) rows.push_back({c, q, true});
  for (const auto& r : rows) {
    LaurentRing ring = case_ring(r.case_no, r.q, r.unramified);
    const LoopMatrix lift = translation_lift(ring, case_parahoric(r.case_no));
    for (auto x : ring.base_units())
      if (!check_case(r.case_no, ring, x, lift).pass)
        return failure("case " + std::to_string(r.case_no) + " q " + std::to_string(r.q) +
                       (r.unramified ? " unramified" : "") + " x " + std::to_string(x));
    if (!check_base_point(r.case_no, ring).pass) return failure("base point, case " + std::to_string(r.case_no));
  }
  return {true, std::to_string(rows.size()) + " sweeps"};
}

Outcome ac10() {
  std::vector<NamedTwist> twists;
  for (const char* kind : {"gl2", "gl3", "sp4"}) twists.push_back({kind, split_twist(kind)});
  twists.push_back({"res2_gl2", restriction_of_scalars(*split_twist("gl2"), 2)});
  twists.push_back({"res2_gl3", restriction_of_scalars(*split_twist("gl3"), 2)});
  std::size_t chains = 0;
  for (const auto& f : twists) {
    const auto& T = *f.twist;
    const auto& d = T.datum();
    const IntVector two_rho = d.two_rho();
    for (const auto& mu : dominant_box(d, 0, d.rank() > 3 ? 2 : 3)) {
      if (T.apply_sigma0(mu) != mu) continue;
      for (const auto& node : kr_poset_very_special(T, mu).nodes) {
        const IntVector& lambda = node.lambda;
        if (T.apply_sigma0(lambda) != lambda) continue;
        const auto chain = curve_chain(T, lambda, mu);
        ++chains;
        const std::int64_t bound = dot(mu - lambda, two_rho) / 2;
        if (static_cast<std::int64_t>(chain.size()) - 1 > bound)
          return failure(f.name + " " + str(lambda) + " -> " + str(mu) + " too long");
        if (chain.front() != lambda || chain.back() != mu) return failure(f.name + " endpoints");
        for (std::size_t i = 0; i + 1 < chain.size(); ++i)
          if (!d.integral_dominance_less(chain[i], chain[i + 1]) || !d.integral_dominance_leq(chain[i + 1], mu) ||
              !d.is_dominant(chain[i + 1]))
            return failure(f.name + " invalid step " + str(chain[i]) + " -> " + str(chain[i + 1]));
      }
    }
  }
  return {true, std::to_string(chains) + " chains"};
}

Outcome ac11() {
  auto t0 = std::chrono::steady_clock::now();
  SelftestReport report = run_selftest();
  const double selftest_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!report.all_pass()) {
    for (const auto& c : report.checks)
      if (!c.pass) return failure("selftest " + c.module + "/" + c.name + ": " + c.detail);
  }
  if (selftest_seconds > kLimitSelftest) return failure("selftest took " + std::to_string(selftest_seconds) + " s");

  auto gl4 = split_twist("gl4");
  std::size_t count = 0;
  gl4->group().for_each_up_to_length(6, {gl4->group().identity()}, [&](const Element&) {
    ++count;
    return true;
  });
  rusage usage{};
  getrusage(RUSAGE_SELF, &usage);
  if (usage.ru_maxrss > kMemoryLimitKiB) return failure("peak RSS " + std::to_string(usage.ru_maxrss) + " KiB");
  std::ostringstream s;
  s.precision(3);
  s << "selftest " << selftest_seconds << " s, GL4 L<=6 streamed " << count << " elements, peak RSS "
    << usage.ru_maxrss / 1024 << " MiB";
  return {true, s.str()};
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* title;
    std::function<Outcome()> run;
    double limit;  // seconds; 0 means unbounded
  };
  const std::vector<Criterion> criteria{
      {"AC1", "translation length equals <lambda-bar, 2rho>", ac1, kLimitAC1},
      {"AC2", "Bruhat order equals subword oracle", ac2, kLimitAC2},
      {"AC3", "admissible-set counts 3 and 7", ac3, kLimitAC3},
      {"AC4", "straightness definitions agree", ac4, kLimitAC4},
      {"AC5", "straight translations are central", ac5, 0},
      {"AC6", "B(G,mu) and mu-ordinary", ac6, kLimitAC6},
      {"AC7", "very-special order isomorphism", ac7, kLimitAC7},
      {"AC8", "straight classes at mu-diamond are translations", ac8, 0},
      {"AC9", "loop-group identities", ac9, kLimitAC9},
      {"AC10", "chain termination", ac10, 0},
      {"AC11", "selftest time and GL4 streaming memory", ac11, 0},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = failure(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.pass && c.limit > 0 && secs > c.limit)
      o = failure("exceeded " + std::to_string(static_cast<int>(c.limit)) + " s");
    if (!o.pass) ++failures;
    std::printf("%s %s %s [%.2f s]%s%s\n", c.id, o.pass ? "PASS" : "FAIL", c.title, secs,
                o.detail.empty() ? "" : ": ", o.detail.c_str());
    std::fflush(stdout);
  }
  return failures ? 1 : 0;
}
