#include "iwahori/admissible.hpp"

#include <algorithm>
#include <unordered_set>

#include "iwahori/error.hpp"

namespace iwahori {

namespace {

std::vector<Element> sort_by_length(const AffineWeylGroup& G, std::vector<Element> xs) {
  std::vector<std::pair<std::int64_t, Element>> keyed;
  keyed.reserve(xs.size());
  for (auto& x : xs) keyed.emplace_back(G.length(x), std::move(x));
  std::sort(keyed.begin(), keyed.end());
  std::vector<Element> out;
  out.reserve(keyed.size());
  for (auto& [len, x] : keyed) out.push_back(std::move(x));
  return out;
}

std::string vec_label(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

}  // namespace

bool AdmissibleSet::contains(const Element& w) const {
  return std::find(elements.begin(), elements.end(), w) != elements.end();
}

std::vector<Element> bruhat_down_set(const AffineWeylGroup& G, const Element& w) {
  ReducedWord rw = G.reduced_word(w);
  const auto& S = G.num_simple_reflections() ? G.simple_reflections() : std::vector<Element>{};
  std::unordered_set<Element, ElementHash> down{rw.omega};
  for (auto it = rw.letters.rbegin(); it != rw.letters.rend(); ++it) {
    std::vector<Element> add;
    add.reserve(down.size());
    for (const auto& x : down) add.push_back(G.multiply(S[*it], x));
    down.insert(add.begin(), add.end());
  }
  return {down.begin(), down.end()};
}

AdmissibleSet admissible_set(const FrobeniusTwist& twist, const IntVector& mu) {
  const auto& G = twist.group();
  const auto& d = G.datum();
  require(mu.size() == d.rank(), ErrorCode::DatumMismatch, "mu has wrong rank");
  std::unordered_set<Element, ElementHash> all;
  for (const auto& x : d.orbit(mu))
    for (auto& e : bruhat_down_set(G, G.translation(x))) all.insert(std::move(e));

  AdmissibleSet out;
  out.mu = d.dominant_rep(mu).first;
  out.elements = sort_by_length(G, {all.begin(), all.end()});
  if (out.elements.empty() || G.length(out.elements.front()) != 0)
    fail(ErrorCode::Internal, "admissible set has no length-zero element");
  if (out.elements.size() > 1 && G.length(out.elements[1]) == 0)
    fail(ErrorCode::Internal, "admissible set has two length-zero elements");
  out.tau_min = out.elements.front();
  return out;
}

std::vector<Element> admissible_set_J(const FrobeniusTwist& twist, const IntVector& mu,
                                      const std::vector<std::size_t>& J) {
  const auto& G = twist.group();
  require(G.is_finite_parahoric(J), ErrorCode::InfiniteWJ, "W_J is infinite");
  const auto& perm = twist.simple_permutation();
  for (auto s : J)
    require(std::find(J.begin(), J.end(), perm[s]) != J.end(), ErrorCode::NonSigmaStableJ,
            "J is not stable under sigma");
  std::unordered_set<Element, ElementHash> reps;
  for (const auto& w : admissible_set(twist, mu).elements) reps.insert(G.double_coset_rep(w, J));
  return sort_by_length(G, {reps.begin(), reps.end()});
}

std::vector<std::size_t> very_special_parahoric(const AffineWeylGroup& group) {
  return group.finite_simple_positions();
}

StrataPoset kr_poset_very_special(const FrobeniusTwist& twist, const IntVector& mu) {
  const auto& d = twist.datum();
  require(mu.size() == d.rank(), ErrorCode::DatumMismatch, "mu has wrong rank");
  require(d.is_dominant(mu), ErrorCode::NonDominantInput, "mu must be dominant");
  const std::size_t r = d.num_simple();

  std::vector<std::int64_t> bound(r, 0);
  for (const auto& x : d.orbit(mu)) {
    auto c = d.simple_coroot_coordinates(to_rational(mu - x));
    if (!c || !is_integral(*c)) fail(ErrorCode::Internal, "orbit difference outside the coroot lattice");
    for (std::size_t i = 0; i < r; ++i) bound[i] = std::max(bound[i], (*c)[i].numerator());
  }

  struct Candidate {
    std::int64_t height;
    IntVector lambda;
    IntVector coeffs;
  };
  std::vector<Candidate> found;
  std::vector<std::int64_t> c(r, 0);
  for (;;) {
    IntVector lambda = mu;
    for (std::size_t i = 0; i < r; ++i) lambda = lambda - c[i] * d.simple_coroot(i);
    if (d.is_dominant(lambda)) {
      std::int64_t h = 0;
      for (auto x : c) h += x;
      found.push_back({h, lambda, c});
    }
    std::size_t i = 0;
    while (i < r && c[i] == bound[i]) c[i++] = 0;
    if (i == r) break;
    ++c[i];
  }
  std::sort(found.begin(), found.end(), [](const Candidate& a, const Candidate& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.lambda > b.lambda;
  });

  StrataPoset out;
  out.mu = mu;
  for (const auto& f : found)
    out.nodes.push_back({f.lambda, twist.sigma0_orbit_size(f.lambda), f.lambda == mu});

  const std::size_t n = found.size();
  auto below = [&](std::size_t a, std::size_t b) {  // node a strictly below node b
    if (a == b) return false;
    for (std::size_t i = 0; i < r; ++i)
      if (found[a].coeffs[i] < found[b].coeffs[i]) return false;
    return true;
  };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (!below(a, b)) continue;
      bool cover = true;
      for (std::size_t m = 0; m < n && cover; ++m)
        if (below(a, m) && below(m, b)) cover = false;
      if (cover) out.covers.emplace_back(a, b);
    }
  std::sort(out.covers.begin(), out.covers.end());
  return out;
}

std::string StrataPoset::to_dot() const {
  std::string s = "digraph kr_poset {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    s += "  n" + std::to_string(i) + " [label=\"" + vec_label(nodes[i].lambda) + "\", xlabel=\"n=" +
         std::to_string(nodes[i].orbit_size) + "\"";
    if (nodes[i].is_top) s += ", peripheries=2";
    s += "];\n";
  }
  for (const auto& [a, b] : covers)
    s += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + ";\n";
  return s + "}\n";
}

std::size_t stembridge_step(const RootDatum& d, const IntVector& lambda, const IntVector& mu) {
  require(lambda.size() == d.rank() && mu.size() == d.rank(), ErrorCode::DatumMismatch,
          "vector has wrong rank");
  require(d.is_dominant(lambda) && d.is_dominant(mu), ErrorCode::NonDominantInput,
          "lambda and mu must be dominant");
  require(d.integral_dominance_less(lambda, mu), ErrorCode::NoStep,
          "lambda must lie strictly below mu");
  for (auto a : d.positive_roots()) {
    IntVector next = lambda + d.coroot(a);
    if (d.is_dominant(next) && d.integral_dominance_leq(next, mu)) return a;
  }
  fail(ErrorCode::NoStep, "no positive root raises lambda towards mu");
}

IntVector frob_orbit_step(const FrobeniusTwist& twist_q, const IntVector& lambda, const IntVector& mu) {
  const auto& d = twist_q.datum();
  require(lambda.size() == d.rank() && mu.size() == d.rank(), ErrorCode::DatumMismatch,
          "vector has wrong rank");
  require(twist_q.apply_sigma0(lambda) == lambda && twist_q.apply_sigma0(mu) == mu,
          ErrorCode::Precondition, "lambda and mu must be fixed by sigma0");
  std::size_t alpha = stembridge_step(d, lambda, mu);
  IntVector sum(d.rank(), 0), v = d.coroot(alpha);
  do {
    sum = sum + v;
    v = twist_q.apply_sigma0(v);
  } while (v != d.coroot(alpha));
  IntVector next = lambda + sum;
  require(d.is_dominant(next), ErrorCode::NonDominantResult,
          "orbit sum " + vec_label(next) + " is not dominant");
  require(d.integral_dominance_leq(next, mu), ErrorCode::NoStep,
          "orbit sum " + vec_label(next) + " is not below mu");
  if (twist_q.apply_sigma0(next) != next) fail(ErrorCode::Internal, "orbit sum is not sigma0-fixed");
  return next;
}

std::vector<IntVector> curve_chain(const FrobeniusTwist& twist_q, const IntVector& lambda,
                                   const IntVector& mu) {
  std::vector<IntVector> chain{lambda};
  while (chain.back() != mu) {
    chain.push_back(frob_orbit_step(twist_q, chain.back(), mu));
    if (chain.size() > 100000) fail(ErrorCode::Internal, "chain does not terminate");
  }
  return chain;
}

}  // namespace iwahori
