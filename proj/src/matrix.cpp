#include "gridrig/matrix.hpp"

#include <utility>

#include "gridrig/errors.hpp"

namespace gridrig {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalVector RationalMatrix::multiply(const RationalVector& x) const {
  if (x.size() != cols_) throw InvalidInput("vector length does not match matrix columns");
  RationalVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational s = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      if (at(r, c) != 0) s += at(r, c) * x[c];
    }
    out[r] = s;
  }
  return out;
}

RationalVector RationalMatrix::row(std::size_t r) const {
  return RationalVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                        data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

namespace {

// Clears denominators row by row so Bareiss can run over the integers.
std::vector<std::vector<Integer>> integer_rows(const RationalMatrix& m) {
  std::vector<std::vector<Integer>> out(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rational scaled = m.at(r, c) * Rational(l);
      out[r][c] = scaled.get_num();
    }
  }
  return out;
}

}  // namespace

Echelon echelon(const RationalMatrix& m) {
  auto a = integer_rows(m);
  const std::size_t rows = a.size();
  const std::size_t cols = m.cols();
  Echelon result;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      // keep the remaining rows in index order so pivot choice stays "smallest index"
      auto row = std::move(a[p]);
      a.erase(a.begin() + static_cast<std::ptrdiff_t>(p));
      a.insert(a.begin() + static_cast<std::ptrdiff_t>(r), std::move(row));
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]);
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    result.pivot_cols.push_back(c);
    ++r;
  }
  a.resize(r);
  result.rows = std::move(a);
  return result;
}

std::size_t rank(const RationalMatrix& m) { return echelon(m).pivot_cols.size(); }

std::size_t nullity(const RationalMatrix& m) { return m.cols() - rank(m); }

std::vector<RationalVector> nullspace(const RationalMatrix& m) {
  const Echelon e = echelon(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<RationalVector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RationalVector x(cols);
    x[f] = 1;
    for (std::size_t k = e.pivot_cols.size(); k-- > 0;) {
      const std::size_t pc = e.pivot_cols[k];
      Rational s = 0;
      for (std::size_t j = pc + 1; j < cols; ++j) {
        if (e.rows[k][j] != 0 && x[j] != 0) s += Rational(e.rows[k][j]) * x[j];
      }
      x[pc] = -s / Rational(e.rows[k][pc]);
    }
    Integer l = 1;
    for (const auto& v : x) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    Integer g = 0;
    for (auto& v : x) {
      v *= Rational(l);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_num_mpz_t());
    }
    if (g > 1) {
      for (auto& v : x) v /= Rational(g);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

std::size_t rank_of_vectors(const std::vector<RationalVector>& vectors) {
  if (vectors.empty()) return 0;
  RationalMatrix m(vectors.size(), vectors.front().size());
  for (std::size_t r = 0; r < vectors.size(); ++r) {
    if (vectors[r].size() != m.cols()) throw InvalidInput("vectors differ in length");
    for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = vectors[r][c];
  }
  return rank(m);
}

bool is_zero(const RationalVector& v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

}  // namespace gridrig
