#ifndef DMV_F2_HPP
#define DMV_F2_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dmv/error.hpp"
#include "dmv/set_system.hpp"

namespace dmv {

using Row = std::uint64_t;

/// Dense matrix over the two-element field, one machine word per row.
class MatrixF2 {
 public:
  MatrixF2() = default;
  MatrixF2(int rows, int cols) : rows_(rows), cols_(cols), bits_(rows, 0) {
    if (rows < 0 || cols < 0 || cols > 64) {
      throw Error(ErrorKind::IndexOutOfRange, "matrix shape " + std::to_string(rows) + "x" + std::to_string(cols));
    }
  }
  MatrixF2(int cols, std::vector<Row> rows) : rows_(static_cast<int>(rows.size())), cols_(cols), bits_(std::move(rows)) {
    if (cols < 0 || cols > 64) throw Error(ErrorKind::IndexOutOfRange, "matrix width " + std::to_string(cols));
    const Row keep = cols == 64 ? ~Row{0} : ((Row{1} << cols) - 1);
    for (Row r : bits_) {
      if ((r & ~keep) != 0) throw Error(ErrorKind::MaskOutOfRange, "row wider than " + std::to_string(cols));
    }
  }

  /// Square matrix from explicit 0/1 entries.
  static MatrixF2 from_entries(const std::vector<std::vector<int>>& entries) {
    const int n = static_cast<int>(entries.size());
    MatrixF2 m(n, n);
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(entries[i].size()) != n) throw Error(ErrorKind::IndexOutOfRange, "ragged matrix");
      for (int j = 0; j < n; ++j) m.set(i, j, entries[i][j] != 0);
    }
    return m;
  }

  [[nodiscard]] int rows() const noexcept { return rows_; }
  [[nodiscard]] int cols() const noexcept { return cols_; }
  [[nodiscard]] Row row(int i) const { return bits_[i]; }
  [[nodiscard]] const std::vector<Row>& row_bits() const noexcept { return bits_; }
  [[nodiscard]] bool get(int i, int j) const { return ((bits_[i] >> j) & 1U) != 0; }
  void set(int i, int j, bool v) {
    if (v) {
      bits_[i] |= Row{1} << j;
    } else {
      bits_[i] &= ~(Row{1} << j);
    }
  }
  void flip(int i, int j) { bits_[i] ^= Row{1} << j; }

  friend bool operator==(const MatrixF2&, const MatrixF2&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Row> bits_;
};

/// Rank of a list of bit rows, by elimination on the lowest set bit.
[[nodiscard]] inline int rank_of_rows(std::vector<Row> rows) {
  int rank = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] == 0) continue;
    ++rank;
    const Row pivot = rows[i] & (~rows[i] + 1);
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      if ((rows[j] & pivot) != 0) rows[j] ^= rows[i];
    }
  }
  return rank;
}

[[nodiscard]] inline int rank_f2(const MatrixF2& m) { return rank_of_rows(m.row_bits()); }

[[nodiscard]] inline bool is_symmetric(const MatrixF2& m) {
  if (m.rows() != m.cols()) return false;
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = i + 1; j < m.cols(); ++j) {
      if (m.get(i, j) != m.get(j, i)) return false;
    }
  }
  return true;
}

inline void require_symmetric(const MatrixF2& m) {
  if (!is_symmetric(m)) throw Error(ErrorKind::NotSymmetric, "matrix is not symmetric");
}

/// Rows and columns indexed by the bits of `subset`, packed in order.
[[nodiscard]] inline MatrixF2 principal_submatrix(const MatrixF2& a, Mask subset) {
  const int k = std::popcount(subset);
  std::vector<Row> rows;
  rows.reserve(k);
  for (Mask r = subset; r != 0; r &= r - 1) {
    const Row full = a.row(std::countr_zero(r));
    Row packed = 0;
    int pos = 0;
    for (Mask c = subset; c != 0; c &= c - 1, ++pos) {
      if (((full >> std::countr_zero(c)) & 1U) != 0) packed |= Row{1} << pos;
    }
    rows.push_back(packed);
  }
  return MatrixF2(k, std::move(rows));
}

/// Whether the principal submatrix on `subset` is invertible. The empty
/// submatrix counts as invertible.
[[nodiscard]] inline bool principal_nondegenerate(const MatrixF2& a, Mask subset) {
  require_symmetric(a);
  if ((subset & ~full_mask(a.rows())) != 0) throw Error(ErrorKind::MaskOutOfRange, "subset exceeds matrix");
  // Elimination restricted to the selected rows and columns.
  std::vector<Row> rows;
  rows.reserve(std::popcount(subset));
  for (Mask r = subset; r != 0; r &= r - 1) rows.push_back(a.row(std::countr_zero(r)) & subset);
  return rank_of_rows(std::move(rows)) == std::popcount(subset);
}

}  // namespace dmv

#endif  // DMV_F2_HPP
