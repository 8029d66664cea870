#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include "su2hom/abelian_group.hpp"

namespace su2hom {

/// Dense row-major matrix over a commutative ring whose zero is `T{}`.
template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) throw std::invalid_argument("entry count does not match shape");
  }

  static DenseMatrix from_rows(std::initializer_list<std::initializer_list<T>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    std::vector<T> entries;
    entries.reserve(r * c);
    for (const auto& row : rows) {
      if (row.size() != c) throw std::invalid_argument("ragged matrix literal");
      entries.insert(entries.end(), row.begin(), row.end());
    }
    return DenseMatrix(r, c, std::move(entries));
  }

  static DenseMatrix identity(std::size_t n, const T& one) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return entries_.empty(); }

  T& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  const std::vector<T>& entries() const { return entries_; }

  bool is_zero() const {
    const T zero{};
    for (const auto& x : entries_) {
      if (!(x == zero)) return false;
    }
    return true;
  }

  DenseMatrix transpose() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
  }

  /// Skips zero entries of the left factor; boundary matrices are sparse.
  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shapes do not compose");
    DenseMatrix c(a.rows_, b.cols_);
    const T zero{};
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == zero) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const T& bkj = b(k, j);
          if (bkj == zero) continue;
          c(i, j) += aik * bkj;
        }
      }
    }
    return c;
  }

  bool operator==(const DenseMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> entries_;
};

using IntegerMatrix = DenseMatrix<mpz_class>;

/// A = U · S · V with U, V unimodular and S diagonal with d_1 | d_2 | ...
struct SmithDecomposition {
  IntegerMatrix U;
  IntegerMatrix S;
  IntegerMatrix V;

  /// Nonzero diagonal entries of S, in order.
  std::vector<mpz_class> nonzero_diagonal() const;
};

/// What the Smith form determines without its transforms: the rank and the
/// torsion ⊕ Z/d_i over the diagonal entries d_i > 1.
struct SmithInvariants {
  std::size_t rank = 0;
  AbelianGroup torsion;
};

/// Full Smith normal form with unimodular transforms. Pivots on an entry of
/// least absolute value and reduces its row and column completely.
SmithDecomposition smith_normal_form(const IntegerMatrix& a);

/// Rank and invariant factors only. Splits `a` into blocks along the
/// connected components of its nonzero pattern and reduces each block
/// separately, which keeps block-diagonal boundary matrices cheap.
SmithInvariants smith_invariants(const IntegerMatrix& a);

/// Z^rows / image(a) for a viewed as a map Z^cols -> Z^rows.
AbelianGroup cokernel_structure(const IntegerMatrix& a);

/// Rank over F_p for prime p, or over Q for p = 0. Throws
/// std::invalid_argument for p = 1 or composite p.
std::size_t rank_over_field(const IntegerMatrix& a, std::uint64_t p);

bool is_prime(std::uint64_t p);

}  // namespace su2hom
