#include "iwahori/affine_weyl.hpp"

#include <algorithm>
#include <unordered_set>

#include "iwahori/error.hpp"

namespace iwahori {

std::size_t ElementHash::operator()(const Element& e) const noexcept {
  return IntVectorHash{}(e.translation) * 31u + e.finite;
}

AffineWeylGroup::AffineWeylGroup(std::shared_ptr<const RootDatum> datum)
    : datum_(std::move(datum)) {
  require(datum_ != nullptr, ErrorCode::Precondition, "null datum");
  const auto& d = *datum_;
  std::vector<IntVector> coroots(d.spec().coroots);
  pi1_I_ = LatticeQuotient(d.rank(), coroots);

  for (std::size_t k = 0; k < d.num_simple(); ++k) {
    simple_.push_back(finite(d.weyl().simple(k)));
    std::size_t comp = 0;
    for (std::size_t c = 0; c < d.components().size(); ++c)
      if (std::count(d.components()[c].begin(), d.components()[c].end(), k)) comp = c;
    simple_component_.push_back(comp);
  }
  for (std::size_t c = 0; c < d.components().size(); ++c) {
    std::size_t theta = d.highest_root(c);
    auto s_theta = d.weyl().find(d.reflection_matrix(theta));
    require(s_theta.has_value(), ErrorCode::InvalidDatum, "highest-root reflection not in W0");
    simple_.push_back(Element{d.coroot(theta), *s_theta});
    simple_component_.push_back(c);
  }
}

Element AffineWeylGroup::identity() const {
  return Element{IntVector(rank(), 0), FiniteWeylGroup::identity()};
}

Element AffineWeylGroup::translation(const IntVector& v) const {
  require(v.size() == rank(), ErrorCode::DatumMismatch, "translation has wrong rank");
  return Element{v, FiniteWeylGroup::identity()};
}

Element AffineWeylGroup::finite(W0Index v) const {
  return Element{IntVector(rank(), 0), v};
}

void AffineWeylGroup::check(const Element& w) const {
  require(w.translation.size() == rank() && w.finite < datum_->weyl().size(),
          ErrorCode::DatumMismatch, "element does not belong to this group");
}

Element AffineWeylGroup::multiply(const Element& a, const Element& b) const {
  check(a);
  check(b);
  const auto& W0 = datum_->weyl();
  return Element{a.translation + W0.matrix(a.finite).apply(b.translation),
                 W0.multiply(a.finite, b.finite)};
}

Element AffineWeylGroup::inverse(const Element& w) const {
  check(w);
  const auto& W0 = datum_->weyl();
  W0Index vi = W0.inverse(w.finite);
  return Element{-W0.matrix(vi).apply(w.translation), vi};
}

Element AffineWeylGroup::conjugate(const Element& by, const Element& w) const {
  return multiply(multiply(by, w), inverse(by));
}

std::int64_t AffineWeylGroup::length(const Element& w) const {
  check(w);
  const auto& d = *datum_;
  const auto& W0 = d.weyl();
  W0Index vi = W0.inverse(w.finite);
  std::int64_t len = 0;
  for (auto a : d.positive_roots()) {
    std::int64_t p = d.pairing(w.translation, a);
    // v^{-1} alpha = alpha o v
    bool pos = d.is_positive(W0.act_on_root(vi, a));
    len += pos ? std::abs(p) : std::abs(p - 1);
  }
  return len;
}

const std::vector<Element>& AffineWeylGroup::simple_reflections() const {
  require(!simple_.empty(), ErrorCode::EmptyRootSystem, "root system is empty");
  return simple_;
}

std::vector<std::size_t> AffineWeylGroup::finite_simple_positions() const {
  std::vector<std::size_t> out(datum_->num_simple());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = i;
  return out;
}

bool AffineWeylGroup::is_left_descent(std::size_t s, const Element& w) const {
  return length(multiply(simple_.at(s), w)) < length(w);
}

bool AffineWeylGroup::is_right_descent(const Element& w, std::size_t s) const {
  return length(multiply(w, simple_.at(s))) < length(w);
}

ReducedWord AffineWeylGroup::reduced_word(const Element& w) const {
  ReducedWord out;
  Element cur = w;
  std::int64_t len = length(cur);
  while (len > 0) {
    bool moved = false;
    for (std::size_t s = 0; s < simple_.size(); ++s) {
      Element next = multiply(simple_[s], cur);
      std::int64_t nl = length(next);
      if (nl < len) {
        out.letters.push_back(s);
        cur = std::move(next);
        len = nl;
        moved = true;
        break;
      }
    }
    if (!moved) fail(ErrorCode::Internal, "positive-length element without a left descent");
  }
  out.omega = cur;
  return out;
}

Element AffineWeylGroup::omega_component(const Element& w) const {
  return reduced_word(w).omega;
}

IntVector AffineWeylGroup::kappa_tilde(const Element& w) const {
  check(w);
  return pi1_I_.reduce(w.translation);
}

Element AffineWeylGroup::omega_of_translation(const IntVector& v) const {
  return omega_component(translation(v));
}

bool AffineWeylGroup::bruhat_leq(const Element& v_in, const Element& w_in) const {
  if (kappa_tilde(v_in) != kappa_tilde(w_in)) return false;
  Element v = v_in, w = w_in;
  std::int64_t lv = length(v), lw = length(w);
  for (;;) {
    if (lv > lw) return false;
    if (lw == 0) return v == w;
    std::size_t s = 0;
    Element sw;
    for (; s < simple_.size(); ++s) {
      sw = multiply(simple_[s], w);
      if (length(sw) < lw) break;
    }
    if (s == simple_.size()) fail(ErrorCode::Internal, "positive-length element without a left descent");
    Element sv = multiply(simple_[s], v);
    std::int64_t lsv = length(sv);
    if (lsv < lv) {
      v = std::move(sv);
      lv = lsv;
    }
    w = std::move(sw);
    --lw;
  }
}

bool AffineWeylGroup::is_finite_parahoric(const std::vector<std::size_t>& J) const {
  for (auto s : J)
    require(s < simple_.size(), ErrorCode::Precondition, "simple reflection index out of range");
  const auto& comps = datum_->components();
  for (std::size_t c = 0; c < comps.size(); ++c) {
    bool all = true;
    for (std::size_t s = 0; s < simple_.size() && all; ++s)
      if (simple_component_[s] == c && std::find(J.begin(), J.end(), s) == J.end()) all = false;
    if (all) return false;
  }
  return true;
}

Element AffineWeylGroup::double_coset_rep(const Element& w, const std::vector<std::size_t>& J) const {
  require(is_finite_parahoric(J), ErrorCode::InfiniteWJ, "W_J is infinite");
  Element cur = w;
  std::int64_t len = length(cur);
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto s : J) {
      Element l = multiply(simple_[s], cur);
      if (auto ll = length(l); ll < len) {
        cur = std::move(l);
        len = ll;
        changed = true;
      }
      Element r = multiply(cur, simple_[s]);
      if (auto rl = length(r); rl < len) {
        cur = std::move(r);
        len = rl;
        changed = true;
      }
    }
  }
  return cur;
}

std::vector<Element> AffineWeylGroup::parabolic_elements(const std::vector<std::size_t>& J) const {
  require(is_finite_parahoric(J), ErrorCode::InfiniteWJ, "W_J is infinite");
  std::unordered_set<Element, ElementHash> seen{identity()};
  std::vector<Element> frontier{identity()};
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (const auto& x : frontier)
      for (auto s : J) {
        Element y = multiply(simple_[s], x);
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  std::vector<Element> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

void AffineWeylGroup::for_each_up_to_length(std::int64_t L, const std::vector<Element>& omegas,
                                            const std::function<bool(const Element&)>& visit) const {
  require(L >= 0, ErrorCode::Precondition, "length bound must be non-negative");
  for (const auto& omega : omegas) {
    check(omega);
    require(length(omega) == 0, ErrorCode::Precondition, "Omega component must have length 0");
  }
  for (const auto& omega : omegas) {
    std::vector<Element> layer{identity()};
    for (std::int64_t k = 0; k <= L && !layer.empty(); ++k) {
      std::vector<Element> shown;
      shown.reserve(layer.size());
      for (const auto& x : layer) shown.push_back(multiply(x, omega));
      std::sort(shown.begin(), shown.end());
      for (const auto& e : shown)
        if (!visit(e)) return;
      if (k == L) break;
      std::unordered_set<Element, ElementHash> next;
      for (const auto& x : layer)
        for (const auto& s : simple_) {
          Element y = multiply(s, x);
          if (length(y) == k + 1) next.insert(std::move(y));
        }
      layer.assign(next.begin(), next.end());
    }
  }
}

std::vector<Element> AffineWeylGroup::enumerate_up_to_length(std::int64_t L,
                                                             const std::vector<Element>& omegas) const {
  std::vector<Element> out;
  for_each_up_to_length(L, omegas, [&](const Element& e) {
    out.push_back(e);
    return true;
  });
  return out;
}

}  // namespace iwahori
