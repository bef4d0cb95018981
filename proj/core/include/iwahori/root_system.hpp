#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "iwahori/lattice.hpp"
#include "iwahori/rational.hpp"

namespace iwahori {

using W0Index = std::uint32_t;

struct DatumSpec {
  std::string name;
  std::size_t lattice_rank = 0;
  std::vector<IntVector> roots;    // covectors on the lattice
  std::vector<IntVector> coroots;  // vectors in the lattice, aligned with roots
  std::vector<std::size_t> simple_indices;
};

struct IntVectorHash {
  std::size_t operator()(const IntVector& v) const noexcept;
};

class RootDatum;

// W0 as an explicit finite group of integer matrices on the lattice.
// Element 0 is the identity; words are in simple positions 0..r-1, read
// left to right (w = s_{word[0]} s_{word[1]} ...).
class FiniteWeylGroup {
 public:
  std::size_t size() const { return matrices_.size(); }
  static constexpr W0Index identity() { return 0; }
  std::size_t num_simple() const { return left_.size(); }

  const IntMatrix& matrix(W0Index v) const { return matrices_[v]; }
  W0Index multiply(W0Index a, W0Index b) const;
  W0Index inverse(W0Index v) const { return inverse_[v]; }
  int length(W0Index v) const { return static_cast<int>(words_[v].size()); }
  const std::vector<std::size_t>& word(W0Index v) const { return words_[v]; }
  W0Index simple(std::size_t i) const { return left_[i][0]; }
  W0Index left_simple(std::size_t i, W0Index v) const { return left_[i][v]; }
  W0Index right_simple(W0Index v, std::size_t i) const { return multiply(v, simple(i)); }
  std::optional<W0Index> find(const IntMatrix& m) const;
  W0Index from_word(const std::vector<std::size_t>& word) const;

  // Index of the root v.alpha, i.e. the covector alpha o v^{-1}.
  std::size_t act_on_root(W0Index v, std::size_t root) const {
    return root_action_[static_cast<std::size_t>(v) * num_roots_ + root];
  }

 private:
  friend class RootDatum;
  void build(const RootDatum& datum);

  std::vector<IntMatrix> matrices_;
  std::vector<std::vector<std::size_t>> words_;
  std::vector<W0Index> inverse_;
  std::vector<std::vector<W0Index>> left_;  // left_[i][v] = s_i v
  std::vector<W0Index> table_;              // full product table when small
  std::unordered_map<IntMatrix, W0Index, IntMatrixHash> index_;
  std::vector<std::size_t> root_action_;
  std::size_t num_roots_ = 0;
};

class RootDatum {
 public:
  explicit RootDatum(DatumSpec spec);

  const DatumSpec& spec() const { return spec_; }
  const std::string& name() const { return spec_.name; }
  std::size_t rank() const { return spec_.lattice_rank; }
  std::size_t num_roots() const { return spec_.roots.size(); }
  std::size_t num_simple() const { return spec_.simple_indices.size(); }
  bool empty() const { return spec_.roots.empty(); }

  const IntVector& root(std::size_t i) const { return spec_.roots[i]; }
  const IntVector& coroot(std::size_t i) const { return spec_.coroots[i]; }
  const IntVector& simple_root(std::size_t k) const { return root(spec_.simple_indices[k]); }
  const IntVector& simple_coroot(std::size_t k) const { return coroot(spec_.simple_indices[k]); }
  const std::vector<std::size_t>& simple_indices() const { return spec_.simple_indices; }

  const std::vector<std::size_t>& positive_roots() const { return positive_; }
  bool is_positive(std::size_t root) const { return positive_flag_[root]; }
  const IntVector& simple_coefficients(std::size_t root) const { return coefficients_[root]; }
  std::optional<std::size_t> root_index(const IntVector& covector) const;
  std::size_t negative_of(std::size_t root) const { return negative_[root]; }
  std::int64_t height(std::size_t root) const;

  const FiniteWeylGroup& weyl() const { return weyl_; }

  std::int64_t pairing(const IntVector& v, std::size_t root) const { return dot(v, spec_.roots[root]); }
  Rational pairing(const RationalVector& v, std::size_t root) const { return dot(v, spec_.roots[root]); }

  IntVector two_rho() const;        // sum of positive roots, a covector
  IntVector two_rho_check() const;  // sum of positive coroots

  bool is_dominant(const IntVector& v) const;
  bool is_dominant(const RationalVector& v) const;

  // Dominant representative and the minimal-length w with w.v dominant.
  std::pair<IntVector, W0Index> dominant_rep(const IntVector& v) const;
  std::pair<RationalVector, W0Index> dominant_rep(const RationalVector& v) const;

  std::int64_t length_translation(const IntVector& v) const;

  // Coordinates in the simple coroots, or nullopt outside their span.
  std::optional<RationalVector> simple_coroot_coordinates(const RationalVector& v) const;

  bool dominance_leq(const RationalVector& a, const RationalVector& b) const;
  bool integral_dominance_leq(const IntVector& a, const IntVector& b) const;
  bool integral_dominance_less(const IntVector& a, const IntVector& b) const;

  // Distinct members of W0.v in lexicographic order.
  std::vector<IntVector> orbit(const IntVector& v) const;

  // Irreducible components as sets of simple positions; ordered by first member.
  const std::vector<std::vector<std::size_t>>& components() const { return components_; }
  std::size_t highest_root(std::size_t component) const { return highest_[component]; }

  // Reflection matrix I - coroot * root^T.
  IntMatrix reflection_matrix(std::size_t root) const;

 private:
  void validate();
  void classify_roots();
  void find_components();

  DatumSpec spec_;
  std::unordered_map<IntVector, std::size_t, IntVectorHash> root_lookup_;
  std::vector<std::size_t> positive_;
  std::vector<bool> positive_flag_;
  std::vector<IntVector> coefficients_;
  std::vector<std::size_t> negative_;
  std::vector<std::vector<std::size_t>> components_;
  std::vector<std::size_t> highest_;
  FiniteWeylGroup weyl_;
};

}  // namespace iwahori
