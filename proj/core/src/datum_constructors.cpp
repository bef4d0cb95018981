#include "iwahori/datum_constructors.hpp"

#include <cctype>
#include <functional>
#include <regex>

#include "iwahori/error.hpp"

namespace iwahori {

namespace {

IntVector unit(std::size_t n, std::size_t i) {
  IntVector e(n, 0);
  e[i] = 1;
  return e;
}

// Positive roots e_i - e_j (i < j) in lexicographic order, then their negatives.
DatumSpec type_a(const std::string& name, std::size_t n) {
  DatumSpec s;
  s.name = name;
  s.lattice_rank = n;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  for (int sign : {1, -1})
    for (auto [i, j] : pairs) {
      IntVector r = sign * (unit(n, i) - unit(n, j));
      s.roots.push_back(r);
      s.coroots.push_back(r);
    }
  for (std::size_t k = 0; k < pairs.size(); ++k)
    if (pairs[k].second == pairs[k].first + 1) s.simple_indices.push_back(k);
  return s;
}

// Re-express a type-A datum through a linear change of lattice.
DatumSpec transform(DatumSpec s, const std::string& name, std::size_t rank,
                    const std::function<IntVector(const IntVector&)>& root_map,
                    const std::function<IntVector(const IntVector&)>& coroot_map) {
  s.name = name;
  s.lattice_rank = rank;
  for (auto& r : s.roots) r = root_map(r);
  for (auto& c : s.coroots) c = coroot_map(c);
  return s;
}

DatumSpec type_c(const std::string& name, bool similitude) {
  DatumSpec s;
  s.name = name;
  if (similitude) {
    s.lattice_rank = 3;
    s.roots = {{1, -1, 0}, {0, 2, -1}, {1, 1, -1}, {2, 0, -1}};
    s.coroots = {{1, -1, 0}, {0, 1, 0}, {1, 1, 0}, {1, 0, 0}};
  } else {
    s.lattice_rank = 2;
    s.roots = {{1, -1}, {0, 2}, {1, 1}, {2, 0}};
    s.coroots = {{1, -1}, {0, 1}, {1, 1}, {1, 0}};
  }
  for (std::size_t k = 0; k < 4; ++k) {
    s.roots.push_back(-s.roots[k]);
    s.coroots.push_back(-s.coroots[k]);
  }
  s.simple_indices = {0, 1};
  return s;
}

}  // namespace

DatumSpec standard_datum_spec(const std::string& kind) {
  static const std::regex pattern(R"(^(gl|sl|pgl|gsp|sp)\(?(\d+)\)?$)");
  std::smatch m;
  std::string k;
  for (char c : kind) k += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (!std::regex_match(k, m, pattern)) fail(ErrorCode::UnsupportedKind, "unknown datum kind '" + kind + "'");
  const std::string family = m[1];
  const std::size_t n = std::stoul(m[2]);
  if (family == "gsp" || family == "sp") {
    require(n == 4, ErrorCode::UnsupportedKind, "only rank-two symplectic data are provided");
    return type_c(family + "4", family == "gsp");
  }
  require(n >= 2, ErrorCode::UnsupportedKind, "n must be at least 2");
  require(n <= 8, ErrorCode::UnsupportedKind, "n is capped at 8");
  const std::string name = family + std::to_string(n);
  DatumSpec a = type_a(name, n);
  if (family == "gl") return a;
  if (family == "sl") {
    // Lattice = coroot lattice with basis the simple coroots e_k - e_{k+1}.
    auto root_map = [n](const IntVector& r) {
      IntVector out(n - 1);
      for (std::size_t k = 0; k + 1 < n; ++k) out[k] = r[k] - r[k + 1];
      return out;
    };
    auto coroot_map = [n](const IntVector& c) {
      IntVector out(n - 1, 0);
      std::int64_t run = 0;
      for (std::size_t k = 0; k + 1 < n; ++k) {
        run += c[k];
        out[k] = run;
      }
      return out;
    };
    return transform(a, name, n - 1, root_map, coroot_map);
  }
  // pgl: Z^n / Z(1,...,1) with basis the images of e_1, ..., e_{n-1}.
  auto root_map = [n](const IntVector& r) { return IntVector(r.begin(), r.begin() + (n - 1)); };
  auto coroot_map = [n](const IntVector& c) {
    IntVector out(n - 1);
    for (std::size_t k = 0; k + 1 < n; ++k) out[k] = c[k] - c[n - 1];
    return out;
  };
  return transform(a, name, n - 1, root_map, coroot_map);
}

std::shared_ptr<const RootDatum> standard_datum(const std::string& kind) {
  return std::make_shared<const RootDatum>(standard_datum_spec(kind));
}

std::shared_ptr<const AffineWeylGroup> make_group(std::shared_ptr<const RootDatum> datum) {
  return std::make_shared<const AffineWeylGroup>(std::move(datum));
}

std::shared_ptr<const FrobeniusTwist> split_twist(const std::string& kind) {
  return std::make_shared<const FrobeniusTwist>(FrobeniusTwist::split(make_group(standard_datum(kind))));
}

std::shared_ptr<const FrobeniusTwist> restriction_of_scalars(const FrobeniusTwist& twist, int f) {
  require(f >= 1, ErrorCode::Precondition, "f must be positive");
  const auto& d = twist.datum();
  const std::size_t n = d.rank(), m = d.num_roots();
  const std::size_t N = n * static_cast<std::size_t>(f);
  DatumSpec s;
  s.name = f == 1 ? d.name() : "Res" + std::to_string(f) + "(" + d.name() + ")";
  s.lattice_rank = N;
  for (int b = 0; b < f; ++b) {
    for (std::size_t a = 0; a < m; ++a) {
      IntVector r(N, 0), c(N, 0);
      for (std::size_t i = 0; i < n; ++i) {
        r[b * n + i] = d.root(a)[i];
        c[b * n + i] = d.coroot(a)[i];
      }
      s.roots.push_back(r);
      s.coroots.push_back(c);
    }
    for (auto k : d.simple_indices()) s.simple_indices.push_back(b * m + k);
  }
  auto datum = std::make_shared<const RootDatum>(std::move(s));
  auto group = make_group(datum);

  // Block (0, f-1) carries varsigma; blocks (b+1, b) are identities.
  IntMatrix lin(N, N);
  const IntMatrix& base = twist.linear_part();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) lin(i, (f - 1) * n + j) = base(i, j);
  for (int b = 0; b + 1 < f; ++b)
    for (std::size_t i = 0; i < n; ++i) lin((b + 1) * n + i, b * n + i) = 1;

  const Element& tau = twist.omega_part();
  IntVector t(N, 0);
  for (std::size_t i = 0; i < n; ++i) t[i] = tau.translation[i];
  std::vector<std::size_t> word;
  for (auto k : d.weyl().word(tau.finite)) word.push_back(k);  // factor 0 simple positions
  Element tau_big{t, datum->weyl().from_word(word)};
  return std::make_shared<const FrobeniusTwist>(group, lin, tau_big);
}

std::shared_ptr<const FrobeniusTwist> unitary_twist(std::shared_ptr<const AffineWeylGroup> group) {
  const std::size_t n = group->rank();
  require(n >= 2, ErrorCode::Precondition, "n must be at least 2");
  IntMatrix lin(n, n);
  for (std::size_t i = 0; i < n; ++i) lin(i, n - 1 - i) = -1;
  return std::make_shared<const FrobeniusTwist>(std::move(group), lin);
}

std::shared_ptr<const FrobeniusTwist> inner_twist(std::shared_ptr<const AffineWeylGroup> group) {
  const std::size_t n = group->rank();
  Element tau = group->omega_of_translation(unit(n, 0));
  return std::make_shared<const FrobeniusTwist>(group, IntMatrix::identity(n), tau);
}

}  // namespace iwahori
