#ifndef DMV_EXACT_LINALG_HPP
#define DMV_EXACT_LINALG_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "dmv/rational.hpp"

namespace dmv {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void append_row(const std::vector<Rational>& row) {
    if (rows_ == 0 && cols_ == 0) cols_ = row.size();
    data_.insert(data_.end(), row.begin(), row.end());
    ++rows_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row-echelon form. `pivots[i]` is the pivot column of row i; rows
/// beyond pivots.size() are zero.
struct Echelon {
  RationalMatrix matrix;
  std::vector<std::size_t> pivots;
};

[[nodiscard]] inline Echelon reduced_echelon(RationalMatrix m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
    }
    const Rational inv = 1 / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Rational factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (m(row, c) != 0) m(r, c) -= factor * m(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return Echelon{std::move(m), std::move(pivots)};
}

[[nodiscard]] inline std::size_t rank(const RationalMatrix& m) { return reduced_echelon(m).pivots.size(); }

/// Solution set {particular + span(kernel)} of A x = b.
struct AffineSolution {
  std::vector<Rational> particular;
  std::vector<std::vector<Rational>> kernel;
};

[[nodiscard]] inline std::optional<AffineSolution> solve_affine(const RationalMatrix& a, const std::vector<Rational>& b) {
  const std::size_t n = a.cols();
  RationalMatrix aug(a.rows(), n + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n) = b[r];
  }
  const Echelon e = reduced_echelon(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == n) return std::nullopt;

  AffineSolution sol;
  sol.particular.assign(n, Rational(0));
  std::vector<bool> is_pivot(n, false);
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    is_pivot[e.pivots[i]] = true;
    sol.particular[e.pivots[i]] = e.matrix(i, n);
  }
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(n, Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.matrix(i, free);
    sol.kernel.push_back(std::move(v));
  }
  return sol;
}

}  // namespace dmv

#endif  // DMV_EXACT_LINALG_HPP
