#include "iwahori/frobenius.hpp"

#include "iwahori/error.hpp"

namespace iwahori {

namespace {

constexpr int kMaxOrder = 10000;

}  // namespace

FrobeniusTwist::FrobeniusTwist(std::shared_ptr<const AffineWeylGroup> group, IntMatrix linear_part,
                               std::optional<Element> omega_part)
    : group_(std::move(group)), linear_(std::move(linear_part)) {
  require(group_ != nullptr, ErrorCode::Precondition, "null group");
  const auto& d = group_->datum();
  const auto& W0 = d.weyl();
  const std::size_t n = d.rank();
  require(linear_.rows() == n && linear_.cols() == n, ErrorCode::IncompatibleTwist,
          "linear part has the wrong shape");
  auto inv = unimodular_inverse(linear_);
  require(inv.has_value(), ErrorCode::IncompatibleTwist, "linear part is not invertible over Z");
  linear_inv_ = *inv;

  for (std::size_t a = 0; a < d.num_roots(); ++a) {
    auto img = d.root_index(linear_inv_.apply_left(d.root(a)));
    require(img.has_value(), ErrorCode::IncompatibleTwist, "linear part does not permute the roots");
    require(linear_.apply(d.coroot(a)) == d.coroot(*img), ErrorCode::IncompatibleTwist,
            "linear part does not permute the coroots compatibly");
  }

  conj_.resize(W0.size());
  for (std::size_t v = 0; v < W0.size(); ++v) {
    auto img = W0.find(linear_ * W0.matrix(static_cast<W0Index>(v)) * linear_inv_);
    require(img.has_value(), ErrorCode::IncompatibleTwist, "linear part does not normalize W0");
    conj_[v] = *img;
  }

  omega_ = omega_part.value_or(group_->identity());
  require(omega_.translation.size() == n && omega_.finite < W0.size(), ErrorCode::IncompatibleTwist,
          "omega part does not belong to the group");
  require(group_->length(omega_) == 0, ErrorCode::IncompatibleTwist, "omega part must have length 0");
  omega_inv_ = group_->inverse(omega_);

  w0_ = d.dominant_rep(linear_.apply(d.two_rho_check())).second;
  sigma0_ = W0.matrix(w0_) * linear_;
  for (auto s : d.simple_indices()) {
    auto img = d.root_index(sigma0_.apply_left(d.root(s)));
    require(img.has_value() && d.is_positive(*img), ErrorCode::IncompatibleTwist,
            "sigma0 does not preserve the dominant chamber");
  }

  IntMatrix p = sigma0_;
  order_N_ = 1;
  while (!p.is_identity()) {
    require(++order_N_ <= kMaxOrder, ErrorCode::IncompatibleTwist, "sigma0 has no finite order");
    p = sigma0_ * p;
  }

  if (!d.empty()) {
    const auto& S = group_->simple_reflections();
    for (const auto& s : S) {
      Element img = apply(s);
      std::size_t j = 0;
      while (j < S.size() && !(S[j] == img)) ++j;
      require(j < S.size(), ErrorCode::IncompatibleTwist, "sigma does not permute the simple reflections");
      simple_perm_.push_back(j);
    }
  }

  std::vector<Element> gens;
  if (!d.empty()) gens = group_->simple_reflections();
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n, 0);
    e[i] = 1;
    gens.push_back(group_->translation(e));
  }
  std::vector<Element> cur = gens;
  order_ = 1;
  for (;;) {
    for (auto& g : cur) g = apply(g);
    if (cur == gens) break;
    require(++order_ <= kMaxOrder, ErrorCode::IncompatibleTwist, "sigma has no finite order on W");
  }

  std::vector<IntVector> relations(d.spec().coroots);
  IntMatrix diff = linear_ - IntMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) relations.push_back(diff.column(c));
  pi1_Gamma_ = LatticeQuotient(n, relations);
}

FrobeniusTwist FrobeniusTwist::split(std::shared_ptr<const AffineWeylGroup> group) {
  std::size_t n = group->rank();
  return FrobeniusTwist(std::move(group), IntMatrix::identity(n));
}

bool FrobeniusTwist::is_split() const {
  return linear_.is_identity() && omega_ == group_->identity();
}

Element FrobeniusTwist::apply(const Element& w) const {
  group_->check(w);
  Element x{linear_.apply(w.translation), conj_[w.finite]};
  return group_->multiply(group_->multiply(omega_, x), omega_inv_);
}

Element FrobeniusTwist::apply_power(const Element& w, int k) const {
  Element x = w;
  for (int i = 0; i < k; ++i) x = apply(x);
  return x;
}

IntVector FrobeniusTwist::kottwitz_Gamma(const Element& w) const {
  group_->check(w);
  return pi1_Gamma_.reduce(w.translation);
}

IntVector FrobeniusTwist::sigma_on_pi1_I(const IntVector& cls) const {
  return pi1_I().reduce(linear_.apply(pi1_I().lift(cls)));
}

RationalVector FrobeniusTwist::mu_diamond(const IntVector& mu) const {
  const auto& d = datum();
  require(mu.size() == d.rank(), ErrorCode::DatumMismatch, "mu has wrong rank");
  require(d.is_dominant(mu), ErrorCode::NonDominantInput, "mu must be dominant");
  IntVector sum(mu.size(), 0), cur = mu;
  for (int i = 0; i < order_N_; ++i) {
    cur = sigma0_.apply(cur);
    sum = sum + cur;
  }
  RationalVector out;
  for (auto x : sum) out.emplace_back(x, order_N_);
  return out;
}

IntVector FrobeniusTwist::mu_natural(const IntVector& mu) const {
  require(mu.size() == datum().rank(), ErrorCode::DatumMismatch, "mu has wrong rank");
  return pi1_Gamma_.reduce(mu);
}

int FrobeniusTwist::sigma0_orbit_size(const IntVector& v) const {
  IntVector cur = sigma0_.apply(v);
  int n = 1;
  while (cur != v) {
    cur = sigma0_.apply(cur);
    ++n;
  }
  return n;
}

}  // namespace iwahori
