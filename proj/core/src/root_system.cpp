#include "iwahori/root_system.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "iwahori/error.hpp"

namespace iwahori {

namespace {

constexpr std::size_t kMaxWeylOrder = 1u << 16;
constexpr std::size_t kMaxTableOrder = 2048;

std::string vec_str(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

}  // namespace

std::size_t IntVectorHash::operator()(const IntVector& v) const noexcept {
  std::size_t h = v.size();
  for (auto x : v) h = h * 1000003u ^ static_cast<std::size_t>(x + 0x9e3779b9);
  return h;
}

W0Index FiniteWeylGroup::multiply(W0Index a, W0Index b) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(a) * size() + b];
  const auto& w = words_[a];
  for (auto it = w.rbegin(); it != w.rend(); ++it) b = left_[*it][b];
  return b;
}

std::optional<W0Index> FiniteWeylGroup::find(const IntMatrix& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

W0Index FiniteWeylGroup::from_word(const std::vector<std::size_t>& word) const {
  W0Index v = identity();
  for (auto it = word.rbegin(); it != word.rend(); ++it) v = left_[*it][v];
  return v;
}

void FiniteWeylGroup::build(const RootDatum& datum) {
  const std::size_t r = datum.num_simple();
  std::vector<IntMatrix> gens;
  for (std::size_t i = 0; i < r; ++i) gens.push_back(datum.reflection_matrix(datum.simple_indices()[i]));

  matrices_.push_back(IntMatrix::identity(datum.rank()));
  words_.push_back({});
  index_.emplace(matrices_[0], 0);
  std::deque<W0Index> queue{0};
  while (!queue.empty()) {
    W0Index v = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < r; ++i) {
      IntMatrix m = gens[i] * matrices_[v];
      if (index_.count(m)) continue;
      require(matrices_.size() < kMaxWeylOrder, ErrorCode::InvalidDatum,
              "finite Weyl group is too large");
      W0Index id = static_cast<W0Index>(matrices_.size());
      std::vector<std::size_t> word{i};
      word.insert(word.end(), words_[v].begin(), words_[v].end());
      matrices_.push_back(std::move(m));
      words_.push_back(std::move(word));
      index_.emplace(matrices_.back(), id);
      queue.push_back(id);
    }
  }

  const std::size_t n = size();
  left_.assign(r, std::vector<W0Index>(n));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t v = 0; v < n; ++v) left_[i][v] = index_.at(gens[i] * matrices_[v]);

  inverse_.assign(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    const auto& w = words_[v];
    inverse_[v] = from_word(std::vector<std::size_t>(w.rbegin(), w.rend()));
  }

  if (n <= kMaxTableOrder) {
    std::vector<W0Index> table(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) table[a * n + b] = multiply(static_cast<W0Index>(a), static_cast<W0Index>(b));
    table_ = std::move(table);
  }

  num_roots_ = datum.num_roots();
  root_action_.assign(n * num_roots_, 0);
  for (std::size_t v = 0; v < n; ++v) {
    const IntMatrix& minv = matrices_[inverse_[v]];
    for (std::size_t a = 0; a < num_roots_; ++a) {
      auto idx = datum.root_index(minv.apply_left(datum.root(a)));
      require(idx.has_value(), ErrorCode::InvalidDatum, "Weyl group does not permute the roots");
      root_action_[v * num_roots_ + a] = *idx;
    }
  }
}

RootDatum::RootDatum(DatumSpec spec) : spec_(std::move(spec)) {
  validate();
  classify_roots();
  find_components();
  weyl_.build(*this);
}

std::optional<std::size_t> RootDatum::root_index(const IntVector& covector) const {
  auto it = root_lookup_.find(covector);
  if (it == root_lookup_.end()) return std::nullopt;
  return it->second;
}

IntMatrix RootDatum::reflection_matrix(std::size_t root) const {
  const auto& a = spec_.roots[root];
  const auto& c = spec_.coroots[root];
  IntMatrix m = IntMatrix::identity(rank());
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j) m(i, j) -= c[i] * a[j];
  return m;
}

void RootDatum::validate() {
  const std::size_t n = spec_.lattice_rank;
  const std::size_t m = spec_.roots.size();
  require(n > 0, ErrorCode::InvalidDatum, "lattice_rank must be positive");
  require(spec_.coroots.size() == m, ErrorCode::InvalidDatum, "roots and coroots differ in count");
  for (std::size_t i = 0; i < m; ++i) {
    require(spec_.roots[i].size() == n && spec_.coroots[i].size() == n, ErrorCode::InvalidDatum,
            "root or coroot has wrong length");
    require(dot(spec_.roots[i], spec_.coroots[i]) == 2, ErrorCode::InvalidDatum,
            "<coroot, root> != 2 for root " + vec_str(spec_.roots[i]));
    require(root_lookup_.emplace(spec_.roots[i], i).second, ErrorCode::InvalidDatum,
            "duplicate root " + vec_str(spec_.roots[i]));
  }
  // Reflections permute roots and coroots compatibly.
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      std::int64_t k = dot(spec_.coroots[a], spec_.roots[b]);
      IntVector img = spec_.roots[b] - k * spec_.roots[a];
      auto it = root_lookup_.find(img);
      require(it != root_lookup_.end(), ErrorCode::InvalidDatum,
              "reflection does not preserve the roots");
      std::int64_t kc = dot(spec_.coroots[b], spec_.roots[a]);
      require(spec_.coroots[it->second] == spec_.coroots[b] - kc * spec_.coroots[a],
              ErrorCode::InvalidDatum, "reflection does not preserve the coroots");
    }
  }
  // Reduced: no root is a positive multiple (other than 1) of another.
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      if (a == b) continue;
      const auto& x = spec_.roots[a];
      const auto& y = spec_.roots[b];
      if (x == 2 * y || y == 2 * x)
        fail(ErrorCode::InvalidDatum, "root system is not reduced");
    }
  std::set<std::size_t> seen;
  for (auto s : spec_.simple_indices) {
    require(s < m, ErrorCode::InvalidDatum, "simple index out of range");
    require(seen.insert(s).second, ErrorCode::InvalidDatum, "repeated simple index");
  }
  std::vector<IntVector> simple;
  for (auto s : spec_.simple_indices) simple.push_back(spec_.roots[s]);
  require(rank_of(simple) == simple.size(), ErrorCode::InvalidDatum,
          "simple roots are linearly dependent");
  require(m == 0 || !simple.empty(), ErrorCode::InvalidDatum, "no simple roots given");
}

void RootDatum::classify_roots() {
  const std::size_t m = num_roots();
  std::vector<IntVector> simple;
  for (auto s : spec_.simple_indices) simple.push_back(spec_.roots[s]);
  coefficients_.resize(m);
  positive_flag_.assign(m, false);
  negative_.assign(m, 0);
  for (std::size_t a = 0; a < m; ++a) {
    auto x = solve_in_columns(simple, to_rational(spec_.roots[a]));
    require(x.has_value() && is_integral(*x), ErrorCode::InvalidDatum,
            "root " + vec_str(spec_.roots[a]) + " is not an integer combination of simple roots");
    IntVector c = to_integral(*x);
    bool nonneg = std::all_of(c.begin(), c.end(), [](auto v) { return v >= 0; });
    bool nonpos = std::all_of(c.begin(), c.end(), [](auto v) { return v <= 0; });
    require(nonneg || nonpos, ErrorCode::InvalidDatum,
            "root " + vec_str(spec_.roots[a]) + " has mixed-sign simple coefficients");
    coefficients_[a] = c;
    positive_flag_[a] = nonneg;
    if (nonneg) positive_.push_back(a);
    negative_[a] = root_lookup_.at(-spec_.roots[a]);
  }
}

void RootDatum::find_components() {
  const std::size_t r = num_simple();
  std::vector<std::size_t> parent(r);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (i != j && dot(simple_coroot(i), simple_root(j)) != 0) parent[find(i)] = find(j);
  std::vector<std::vector<std::size_t>> groups;
  std::vector<std::size_t> which(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    std::size_t p = find(i);
    if (which[p] == r) {
      which[p] = groups.size();
      groups.emplace_back();
    }
    groups[which[p]].push_back(i);
  }
  components_ = groups;
  for (const auto& comp : components_) {
    std::size_t best = num_roots();
    std::int64_t best_height = -1;
    for (auto a : positive_) {
      bool inside = true;
      for (std::size_t k = 0; k < r; ++k)
        if (coefficients_[a][k] != 0 && std::find(comp.begin(), comp.end(), k) == comp.end())
          inside = false;
      if (inside && height(a) > best_height) {
        best_height = height(a);
        best = a;
      }
    }
    highest_.push_back(best);
  }
}

std::int64_t RootDatum::height(std::size_t root) const {
  const auto& c = coefficients_[root];
  return std::accumulate(c.begin(), c.end(), std::int64_t{0});
}

IntVector RootDatum::two_rho() const {
  IntVector s(rank(), 0);
  for (auto a : positive_) s = s + spec_.roots[a];
  return s;
}

IntVector RootDatum::two_rho_check() const {
  IntVector s(rank(), 0);
  for (auto a : positive_) s = s + spec_.coroots[a];
  return s;
}

bool RootDatum::is_dominant(const IntVector& v) const {
  for (auto s : spec_.simple_indices)
    if (dot(v, spec_.roots[s]) < 0) return false;
  return true;
}

bool RootDatum::is_dominant(const RationalVector& v) const {
  for (auto s : spec_.simple_indices)
    if (dot(v, spec_.roots[s]) < 0) return false;
  return true;
}

namespace {

template <typename Vec>
std::pair<Vec, W0Index> dominant_rep_impl(const RootDatum& d, Vec v) {
  require(v.size() == d.rank(), ErrorCode::DatumMismatch, "vector rank does not match datum");
  W0Index w = FiniteWeylGroup::identity();
  for (;;) {
    std::size_t k = 0;
    for (; k < d.num_simple(); ++k)
      if (d.pairing(v, d.simple_indices()[k]) < 0) break;
    if (k == d.num_simple()) return {v, w};
    auto c = d.pairing(v, d.simple_indices()[k]);
    const auto& cr = d.simple_coroot(k);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c * cr[i];
    w = d.weyl().left_simple(k, w);
  }
}

}  // namespace

std::pair<IntVector, W0Index> RootDatum::dominant_rep(const IntVector& v) const {
  return dominant_rep_impl(*this, v);
}

std::pair<RationalVector, W0Index> RootDatum::dominant_rep(const RationalVector& v) const {
  return dominant_rep_impl(*this, v);
}

std::int64_t RootDatum::length_translation(const IntVector& v) const {
  return dot(dominant_rep(v).first, two_rho());
}

std::optional<RationalVector> RootDatum::simple_coroot_coordinates(const RationalVector& v) const {
  std::vector<IntVector> cols;
  for (std::size_t k = 0; k < num_simple(); ++k) cols.push_back(simple_coroot(k));
  if (cols.empty()) {
    for (const auto& x : v)
      if (x != 0) return std::nullopt;
    return RationalVector{};
  }
  return solve_in_columns(cols, v);
}

bool RootDatum::dominance_leq(const RationalVector& a, const RationalVector& b) const {
  require(is_dominant(a) && is_dominant(b), ErrorCode::NonDominantInput,
          "dominance order is only defined on dominant vectors");
  auto x = simple_coroot_coordinates(b - a);
  if (!x) return false;
  return std::all_of(x->begin(), x->end(), [](const Rational& c) { return c >= 0; });
}

bool RootDatum::integral_dominance_leq(const IntVector& a, const IntVector& b) const {
  require(is_dominant(a) && is_dominant(b), ErrorCode::NonDominantInput,
          "dominance order is only defined on dominant vectors");
  auto x = simple_coroot_coordinates(to_rational(b - a));
  if (!x || !is_integral(*x)) return false;
  return std::all_of(x->begin(), x->end(), [](const Rational& c) { return c >= 0; });
}

bool RootDatum::integral_dominance_less(const IntVector& a, const IntVector& b) const {
  return a != b && integral_dominance_leq(a, b);
}

std::vector<IntVector> RootDatum::orbit(const IntVector& v) const {
  std::set<IntVector> out;
  for (std::size_t w = 0; w < weyl_.size(); ++w) out.insert(weyl_.matrix(static_cast<W0Index>(w)).apply(v));
  return {out.begin(), out.end()};
}

}  // namespace iwahori
