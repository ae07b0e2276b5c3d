#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gridrig/rational.hpp"

namespace gridrig {

using RationalVector = std::vector<Rational>;

/// Dense exact matrix with optional row and column labels.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<std::string>& row_labels() { return row_labels_; }
  const std::vector<std::string>& row_labels() const { return row_labels_; }
  std::vector<std::string>& col_labels() { return col_labels_; }
  const std::vector<std::string>& col_labels() const { return col_labels_; }

  RationalVector multiply(const RationalVector& x) const;
  RationalVector row(std::size_t r) const;

  bool operator==(const RationalMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
};

/// Row echelon data from fraction-free elimination. Pivots are taken in
/// column order, each from the smallest remaining row index.
struct Echelon {
  std::vector<std::vector<Integer>> rows;  // nonzero echelon rows only
  std::vector<std::size_t> pivot_cols;
};

Echelon echelon(const RationalMatrix& m);
std::size_t rank(const RationalMatrix& m);
std::size_t nullity(const RationalMatrix& m);

/// Basis of the kernel, one vector per free column, each scaled to a
/// primitive integer vector whose free coordinate is positive.
std::vector<RationalVector> nullspace(const RationalMatrix& m);

/// Rank of a list of vectors of equal length.
std::size_t rank_of_vectors(const std::vector<RationalVector>& vectors);

bool is_zero(const RationalVector& v);

}  // namespace gridrig
