#include "iwahori/lattice.hpp"

#include <cstdlib>
#include <numeric>

#include "iwahori/error.hpp"

namespace iwahori {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require(rows[r].size() == cols, ErrorCode::Precondition, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& cols, std::size_t rows) {
  IntMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    require(cols[c].size() == rows, ErrorCode::Precondition, "ragged matrix columns");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntVector IntMatrix::apply(const IntVector& v) const {
  IntVector out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::int64_t s = 0;
    for (std::size_t c = 0; c < cols_; ++c) s += (*this)(r, c) * v[c];
    out[r] = s;
  }
  return out;
}

IntVector IntMatrix::apply_left(const IntVector& a) const {
  IntVector out(cols_, 0);
  for (std::size_t c = 0; c < cols_; ++c) {
    std::int64_t s = 0;
    for (std::size_t r = 0; r < rows_; ++r) s += a[r] * (*this)(r, c);
    out[c] = s;
  }
  return out;
}

RationalVector IntMatrix::apply(const RationalVector& v) const {
  RationalVector out(rows_, Rational(0));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r] += v[c] * (*this)(r, c);
  return out;
}

bool IntMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  require(a.cols_ == b.rows_, ErrorCode::Precondition, "matrix shape mismatch");
  IntMatrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      std::int64_t x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += x * b(k, j);
    }
  return m;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  require(a.rows_ == b.rows_ && a.cols_ == b.cols_, ErrorCode::Precondition,
          "matrix shape mismatch");
  IntMatrix m(a);
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] -= b.data_[i];
  return m;
}

std::size_t IntMatrixHash::operator()(const IntMatrix& m) const noexcept {
  std::size_t h = m.rows() * 31 + m.cols();
  for (auto x : m.data()) h = h * 1000003u ^ static_cast<std::size_t>(x + 0x9e3779b9);
  return h;
}

std::int64_t determinant(const IntMatrix& m) {
  require(m.rows() == m.cols(), ErrorCode::Precondition, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntMatrix a(m);
  std::int64_t sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(p, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::optional<IntMatrix> unimodular_inverse(const IntMatrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  auto d = determinant(m);
  if (d != 1 && d != -1) return std::nullopt;
  SmithForm s = smith_normal_form(m);
  // U m V = D with D = diag(+-1); m^{-1} = V D^{-1} U.
  IntMatrix dinv = IntMatrix::identity(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) dinv(i, i) = s.D(i, i);
  return s.V * dinv * s.U;
}

namespace {

struct SmithWork {
  IntMatrix D, U, U_inv, V;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < D.cols(); ++c) std::swap(D(i, c), D(j, c));
    for (std::size_t c = 0; c < U.cols(); ++c) std::swap(U(i, c), U(j, c));
    for (std::size_t r = 0; r < U_inv.rows(); ++r) std::swap(U_inv(r, i), U_inv(r, j));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < D.rows(); ++r) std::swap(D(r, i), D(r, j));
    for (std::size_t r = 0; r < V.rows(); ++r) std::swap(V(r, i), V(r, j));
  }
  // row i += k * row j
  void add_row(std::size_t i, std::size_t j, std::int64_t k) {
    if (k == 0) return;
    for (std::size_t c = 0; c < D.cols(); ++c) D(i, c) += k * D(j, c);
    for (std::size_t c = 0; c < U.cols(); ++c) U(i, c) += k * U(j, c);
    for (std::size_t r = 0; r < U_inv.rows(); ++r) U_inv(r, j) -= k * U_inv(r, i);
  }
  // col i += k * col j
  void add_col(std::size_t i, std::size_t j, std::int64_t k) {
    if (k == 0) return;
    for (std::size_t r = 0; r < D.rows(); ++r) D(r, i) += k * D(r, j);
    for (std::size_t r = 0; r < V.rows(); ++r) V(r, i) += k * V(r, j);
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < D.cols(); ++c) D(i, c) = -D(i, c);
    for (std::size_t c = 0; c < U.cols(); ++c) U(i, c) = -U(i, c);
    for (std::size_t r = 0; r < U_inv.rows(); ++r) U_inv(r, i) = -U_inv(r, i);
  }
};

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  SmithWork w{a, IntMatrix::identity(m), IntMatrix::identity(m), IntMatrix::identity(n)};
  const std::size_t steps = std::min(m, n);
  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pr = m, pc = n;
      std::int64_t best = 0;
      for (std::size_t r = t; r < m; ++r)
        for (std::size_t c = t; c < n; ++c) {
          auto v = std::llabs(w.D(r, c));
          if (v != 0 && (best == 0 || v < best)) { best = v; pr = r; pc = c; }
        }
      if (best == 0) goto done;
      w.swap_rows(t, pr);
      w.swap_cols(t, pc);

      bool clean = true;
      for (std::size_t r = t + 1; r < m; ++r) {
        w.add_row(r, t, -floor_div(w.D(r, t), w.D(t, t)));
        if (w.D(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < n; ++c) {
        w.add_col(c, t, -floor_div(w.D(t, c), w.D(t, t)));
        if (w.D(t, c) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into the pivot row and retry.
      std::size_t bad = m;
      for (std::size_t r = t + 1; r < m && bad == m; ++r)
        for (std::size_t c = t + 1; c < n; ++c)
          if (w.D(r, c) % w.D(t, t) != 0) { bad = r; break; }
      if (bad == m) break;
      w.add_row(t, bad, 1);
    }
    if (w.D(t, t) < 0) w.negate_row(t);
  }
done:
  SmithForm s{w.U, w.U_inv, w.V, w.D, std::vector<std::int64_t>(m, 0)};
  for (std::size_t i = 0; i < steps; ++i) s.diagonal[i] = w.D(i, i);
  if (!(s.U * a * s.V == s.D) || !(s.U * s.U_inv).is_identity())
    fail(ErrorCode::Internal, "Smith normal form failed re-multiplication check");
  return s;
}

LatticeQuotient::LatticeQuotient(std::size_t ambient_rank,
                                 const std::vector<IntVector>& generators)
    : ambient_(ambient_rank) {
  IntMatrix a = generators.empty() ? IntMatrix(ambient_rank, 0)
                                   : IntMatrix::from_columns(generators, ambient_rank);
  SmithForm s = smith_normal_form(a);
  U_ = s.U;
  U_inv_ = s.U_inv;
  for (std::size_t i = 0; i < ambient_rank; ++i) {
    if (s.diagonal[i] == 1) continue;
    kept_.push_back(i);
    moduli_.push_back(s.diagonal[i]);
  }
}

std::size_t LatticeQuotient::free_rank() const {
  std::size_t k = 0;
  for (auto m : moduli_) k += (m == 0);
  return k;
}

IntVector LatticeQuotient::normalize(IntVector cls) const {
  for (std::size_t i = 0; i < cls.size(); ++i)
    if (moduli_[i] != 0) {
      cls[i] %= moduli_[i];
      if (cls[i] < 0) cls[i] += moduli_[i];
    }
  return cls;
}

IntVector LatticeQuotient::reduce(const IntVector& v) const {
  require(v.size() == ambient_, ErrorCode::DatumMismatch, "vector rank does not match lattice");
  IntVector full = U_.apply(v);
  IntVector cls(kept_.size());
  for (std::size_t i = 0; i < kept_.size(); ++i) cls[i] = full[kept_[i]];
  return normalize(std::move(cls));
}

IntVector LatticeQuotient::lift(const IntVector& cls) const {
  require(cls.size() == kept_.size(), ErrorCode::Precondition, "class has wrong length");
  IntVector full(ambient_, 0);
  for (std::size_t i = 0; i < kept_.size(); ++i) full[kept_[i]] = cls[i];
  return U_inv_.apply(full);
}

IntVector LatticeQuotient::add(const IntVector& a, const IntVector& b) const {
  return normalize(a + b);
}

bool LatticeQuotient::contains(const IntVector& v) const {
  for (auto x : reduce(v))
    if (x != 0) return false;
  return true;
}

namespace {

// Row-reduce an augmented rational system in place; returns pivot columns.
std::vector<std::size_t> row_reduce(std::vector<RationalVector>& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = 0; j < m[i].size(); ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::optional<RationalVector> solve_in_columns(const std::vector<IntVector>& columns,
                                               const RationalVector& b) {
  const std::size_t n = b.size(), k = columns.size();
  std::vector<RationalVector> m(n, RationalVector(k + 1, Rational(0)));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < k; ++c) m[r][c] = columns[c][r];
    m[r][k] = b[r];
  }
  auto pivots = row_reduce(m, k);
  for (std::size_t r = pivots.size(); r < n; ++r)
    if (m[r][k] != 0) return std::nullopt;
  RationalVector x(k, Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = m[i][k];
  return x;
}

std::size_t rank_of(const std::vector<IntVector>& rows) {
  if (rows.empty()) return 0;
  std::vector<RationalVector> m;
  for (const auto& r : rows) m.push_back(to_rational(r));
  return row_reduce(m, rows.front().size()).size();
}

}  // namespace iwahori
