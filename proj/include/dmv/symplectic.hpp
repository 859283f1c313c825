#ifndef DMV_SYMPLECTIC_HPP
#define DMV_SYMPLECTIC_HPP

#include <algorithm>
#include <bit>
#include <string>
#include <utility>
#include <vector>

#include "dmv/f2.hpp"
#include "dmv/set_system.hpp"

namespace dmv {

/// The 2n-dimensional symplectic space over F2 spanned by e_0..e_{n-1}
/// (bits 0..n-1) and their duals e*_0..e*_{n-1} (bits n..2n-1).
struct SymplecticSpace {
  int n = 0;

  [[nodiscard]] Row primal(int i) const { return Row{1} << i; }
  [[nodiscard]] Row dual(int i) const { return Row{1} << (n + i); }
  [[nodiscard]] Row primal_part(Row v) const { return v & ((Row{1} << n) - 1); }
  [[nodiscard]] Row dual_part(Row v) const { return v >> n; }

  /// (e_i, e*_i) = (e*_i, e_i) = 1, every other basis pairing 0.
  [[nodiscard]] int pairing(Row u, Row w) const {
    const Row cross = (primal_part(u) & dual_part(w)) ^ (dual_part(u) & primal_part(w));
    return std::popcount(cross) & 1;
  }

  friend bool operator==(const SymplecticSpace&, const SymplecticSpace&) = default;
};

/// Reduced row-echelon form with pivots on the lowest set bit; rows come
/// out sorted by pivot so equal spans have equal representations.
[[nodiscard]] inline std::vector<Row> reduced_echelon(std::vector<Row> rows, int width) {
  std::vector<Row> out;
  for (int c = 0; c < width; ++c) {
    const Row bit = Row{1} << c;
    auto it = std::find_if(rows.begin(), rows.end(), [bit](Row r) { return (r & bit) != 0; });
    if (it == rows.end()) continue;
    const Row pivot = *it;
    rows.erase(it);
    for (Row& r : rows) {
      if ((r & bit) != 0) r ^= pivot;
    }
    for (Row& r : out) {
      if ((r & bit) != 0) r ^= pivot;
    }
    out.push_back(pivot);
  }
  return out;
}

class Lagrangian {
 public:
  Lagrangian(SymplecticSpace space, std::vector<Row> spanning) : space_(space) {
    if (space.n < 0 || space.n > 32) {
      throw Error(ErrorKind::GroundSetTooLarge, "symplectic space of rank " + std::to_string(space.n));
    }
    basis_ = reduced_echelon(std::move(spanning), 2 * space.n);
    if (static_cast<int>(basis_.size()) != space.n) {
      throw Error(ErrorKind::NotLagrangian, "span has dimension " + std::to_string(basis_.size()) +
                                                ", expected " + std::to_string(space.n));
    }
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      for (std::size_t j = i + 1; j < basis_.size(); ++j) {
        if (space_.pairing(basis_[i], basis_[j]) != 0) throw Error(ErrorKind::NotLagrangian, "span is not isotropic");
      }
    }
  }

  [[nodiscard]] const SymplecticSpace& space() const noexcept { return space_; }
  [[nodiscard]] const std::vector<Row>& basis() const noexcept { return basis_; }

  friend bool operator==(const Lagrangian&, const Lagrangian&) = default;

 private:
  SymplecticSpace space_;
  std::vector<Row> basis_;
};

/// Span of e_i for i in `subset` and e*_j for j outside it.
[[nodiscard]] inline Lagrangian coordinate_lagrangian(const SymplecticSpace& space, Mask subset) {
  if ((subset & ~full_mask(space.n)) != 0) throw Error(ErrorKind::MaskOutOfRange, "subset exceeds space");
  std::vector<Row> rows;
  rows.reserve(space.n);
  for (int i = 0; i < space.n; ++i) rows.push_back(has_bit(subset, i) ? space.primal(i) : space.dual(i));
  return Lagrangian(space, std::move(rows));
}

/// Graph of the symmetric form: span of e_i + sum_j A_ij e*_j.
[[nodiscard]] inline Lagrangian graph_lagrangian(const MatrixF2& a) {
  require_symmetric(a);
  const SymplecticSpace space{a.rows()};
  std::vector<Row> rows;
  rows.reserve(a.rows());
  for (int i = 0; i < a.rows(); ++i) rows.push_back(space.primal(i) | (a.row(i) << space.n));
  return Lagrangian(space, std::move(rows));
}

[[nodiscard]] inline int intersection_dim(const Lagrangian& l1, const Lagrangian& l2) {
  if (!(l1.space() == l2.space())) throw Error(ErrorKind::SpaceMismatch, "Lagrangians live in different spaces");
  std::vector<Row> stacked = l1.basis();
  stacked.insert(stacked.end(), l2.basis().begin(), l2.basis().end());
  return 2 * l1.space().n - rank_of_rows(std::move(stacked));
}

/// Feasible sets are the coordinate Lagrangians transverse to `l`.
[[nodiscard]] inline SetSystem lagrangian_delta_matroid(const Lagrangian& l) {
  const int n = l.space().n;
  if (n > kMaxGroundSet) throw Error(ErrorKind::GroundSetTooLarge, "too many elements for a set system");
  std::vector<Mask> feasible;
  for (Mask u = 0; u <= full_mask(n); ++u) {
    if (intersection_dim(l, coordinate_lagrangian(l.space(), u)) == 0) feasible.push_back(u);
    if (u == full_mask(n)) break;
  }
  return SetSystem(n, std::move(feasible));
}

enum class MoveKind { T1, T2 };

/// Image of a vector under the basis substitution of the move:
///   T1: a* -> a* + b, b* -> b* + a
///   T2: a -> a + b,   b* -> a* + b*
/// with every other basis vector fixed.
[[nodiscard]] inline Row move_vector(const SymplecticSpace& space, Row v, MoveKind kind, int a, int b) {
  Row out = v;
  if (kind == MoveKind::T1) {
    if ((v & space.dual(a)) != 0) out ^= space.primal(b);
    if ((v & space.dual(b)) != 0) out ^= space.primal(a);
  } else {
    if ((v & space.primal(a)) != 0) out ^= space.primal(b);
    if ((v & space.dual(b)) != 0) out ^= space.dual(a);
  }
  return out;
}

[[nodiscard]] inline Lagrangian apply_move(const Lagrangian& l, MoveKind kind, int a, int b) {
  const int n = l.space().n;
  if (a < 0 || b < 0 || a >= n || b >= n) throw Error(ErrorKind::IndexOutOfRange, "move element outside space");
  if (a == b) throw Error(ErrorKind::SameElement, "move needs two distinct elements");
  std::vector<Row> rows;
  rows.reserve(l.basis().size());
  for (Row v : l.basis()) rows.push_back(move_vector(l.space(), v, kind, a, b));
  return Lagrangian(l.space(), std::move(rows));
}

}  // namespace dmv

#endif  // DMV_SYMPLECTIC_HPP
