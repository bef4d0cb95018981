#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "iwahori/rational.hpp"

namespace iwahori {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols, std::int64_t fill = 0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
  static IntMatrix from_columns(const std::vector<IntVector>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector row(std::size_t r) const;
  IntVector column(std::size_t c) const;
  IntMatrix transpose() const;

  IntVector apply(const IntVector& v) const;             // M v
  IntVector apply_left(const IntVector& covector) const; // a M
  RationalVector apply(const RationalVector& v) const;

  bool is_identity() const;
  const std::vector<std::int64_t>& data() const { return data_; }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

struct IntMatrixHash {
  std::size_t operator()(const IntMatrix& m) const noexcept;
};

std::int64_t determinant(const IntMatrix& m);

// Inverse over the integers; nullopt when |det| != 1.
std::optional<IntMatrix> unimodular_inverse(const IntMatrix& m);

// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... .
struct SmithForm {
  IntMatrix U;
  IntMatrix U_inv;
  IntMatrix V;
  IntMatrix D;
  std::vector<std::int64_t> diagonal;  // length rows(A), zero past the rank
};

SmithForm smith_normal_form(const IntMatrix& a);

// Z^n modulo the span of the columns of a generator matrix.
// Coordinates of a class are its image under U restricted to the
// non-trivial invariant factors; modulus 0 marks a free coordinate.
class LatticeQuotient {
 public:
  LatticeQuotient() = default;
  LatticeQuotient(std::size_t ambient_rank, const std::vector<IntVector>& generators);

  std::size_t ambient_rank() const { return ambient_; }
  const std::vector<std::int64_t>& moduli() const { return moduli_; }
  std::size_t free_rank() const;
  bool is_trivial() const { return moduli_.empty(); }

  IntVector reduce(const IntVector& v) const;
  IntVector lift(const IntVector& cls) const;
  IntVector add(const IntVector& a, const IntVector& b) const;
  bool contains(const IntVector& v) const;  // v in the sublattice

 private:
  IntVector normalize(IntVector cls) const;

  std::size_t ambient_ = 0;
  IntMatrix U_;
  IntMatrix U_inv_;
  std::vector<std::size_t> kept_;
  std::vector<std::int64_t> moduli_;
};

// Some x with A x = b over Q (A given by its columns), or nullopt.
// When the columns are independent the solution is unique.
std::optional<RationalVector> solve_in_columns(const std::vector<IntVector>& columns,
                                               const RationalVector& b);

// Rank of a rational matrix given by rows.
std::size_t rank_of(const std::vector<IntVector>& rows);

}  // namespace iwahori
