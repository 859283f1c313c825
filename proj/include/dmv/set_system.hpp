#ifndef DMV_SET_SYSTEM_HPP
#define DMV_SET_SYSTEM_HPP

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dmv/error.hpp"

namespace dmv {

using Mask = std::uint32_t;

/// Largest ground set a SetSystem may carry. Membership bitmaps are kept
/// up to kBitmapLimit elements; larger systems fall back to binary search.
inline constexpr int kMaxGroundSet = 20;
inline constexpr int kBitmapLimit = 16;

[[nodiscard]] constexpr Mask full_mask(int n) noexcept {
  return n >= 32 ? ~Mask{0} : ((Mask{1} << n) - 1);
}

[[nodiscard]] constexpr bool has_bit(Mask m, int e) noexcept { return ((m >> e) & 1U) != 0; }

/// Removes bit `e` from `m`, shifting the bits above it down by one.
[[nodiscard]] constexpr Mask squeeze_bit(Mask m, int e) noexcept {
  const Mask low = m & ((Mask{1} << e) - 1);
  return low | ((m >> (e + 1)) << e);
}

/// Inverse of squeeze_bit: opens a zero at position `e`.
[[nodiscard]] constexpr Mask spread_bit(Mask m, int e) noexcept {
  const Mask low = m & ((Mask{1} << e) - 1);
  return low | ((m >> e) << (e + 1));
}

/// A proper set system on the ground set {0, ..., n-1}. The family is
/// stored as a strictly increasing list of masks.
class SetSystem {
 public:
  /// The unit system (empty ground set, family {empty set}).
  SetSystem() : n_(0), phi_{0} { build_bitmap(); }

  SetSystem(int n, std::vector<Mask> subsets) : n_(n), phi_(std::move(subsets)) {
    if (n_ < 0 || n_ > kMaxGroundSet) {
      throw Error(ErrorKind::GroundSetTooLarge,
                  "ground set size " + std::to_string(n_) + " outside [0, " +
                      std::to_string(kMaxGroundSet) + "]");
    }
    if (phi_.empty()) throw Error(ErrorKind::EmptyFamily, "set system has no feasible sets");
    const Mask full = full_mask(n_);
    for (Mask m : phi_) {
      if ((m & ~full) != 0) {
        throw Error(ErrorKind::MaskOutOfRange,
                    "mask " + std::to_string(m) + " exceeds ground set of size " + std::to_string(n_));
      }
    }
    std::sort(phi_.begin(), phi_.end());
    phi_.erase(std::unique(phi_.begin(), phi_.end()), phi_.end());
    build_bitmap();
  }

  [[nodiscard]] int size() const noexcept { return n_; }
  [[nodiscard]] const std::vector<Mask>& feasible() const noexcept { return phi_; }
  [[nodiscard]] std::size_t count() const noexcept { return phi_.size(); }
  [[nodiscard]] Mask ground() const noexcept { return full_mask(n_); }

  [[nodiscard]] bool contains(Mask m) const noexcept {
    if ((m & ~ground()) != 0) return false;
    if (!bitmap_.empty()) return ((bitmap_[m >> 6] >> (m & 63U)) & 1U) != 0;
    return std::binary_search(phi_.begin(), phi_.end(), m);
  }

  friend bool operator==(const SetSystem& a, const SetSystem& b) {
    return a.n_ == b.n_ && a.phi_ == b.phi_;
  }
  friend std::strong_ordering operator<=>(const SetSystem& a, const SetSystem& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.phi_ <=> b.phi_;
  }

 private:
  void build_bitmap() {
    bitmap_.clear();
    if (n_ > kBitmapLimit) return;
    bitmap_.assign(((std::size_t{1} << n_) + 63) / 64, 0);
    for (Mask m : phi_) bitmap_[m >> 6] |= std::uint64_t{1} << (m & 63U);
  }

  int n_;
  std::vector<Mask> phi_;
  std::vector<std::uint64_t> bitmap_;
};

[[nodiscard]] inline SetSystem make_set_system(int n, std::vector<Mask> subsets) {
  return SetSystem(n, std::move(subsets));
}

[[nodiscard]] inline SetSystem unit_system() { return SetSystem(); }

inline void check_element(const SetSystem& s, int e) {
  if (e < 0 || e >= s.size()) {
    throw Error(ErrorKind::IndexOutOfRange,
                "element " + std::to_string(e) + " outside ground set of size " + std::to_string(s.size()));
  }
}

inline void check_mask(const SetSystem& s, Mask m) {
  if ((m & ~s.ground()) != 0) {
    throw Error(ErrorKind::MaskOutOfRange,
                "mask " + std::to_string(m) + " exceeds ground set of size " + std::to_string(s.size()));
  }
}

/// A failing instance of the symmetric exchange axiom.
struct ExchangeViolation {
  Mask first;
  Mask second;
  int element;
};

/// Returns the first (phi1, phi2, e) in increasing order for which no e' in
/// phi1 Δ phi2 makes phi1 Δ {e, e'} feasible. With e' = e the step is the
/// single-element flip phi1 Δ {e}.
[[nodiscard]] inline std::optional<ExchangeViolation> find_exchange_violation(const SetSystem& s) {
  for (Mask p1 : s.feasible()) {
    for (Mask p2 : s.feasible()) {
      const Mask diff = p1 ^ p2;
      for (Mask rest = diff; rest != 0; rest &= rest - 1) {
        const Mask e_bit = rest & (~rest + 1);
        bool repaired = false;
        for (Mask cand = diff; cand != 0 && !repaired; cand &= cand - 1) {
          const Mask f_bit = cand & (~cand + 1);
          repaired = s.contains(p1 ^ (e_bit | f_bit));
        }
        if (!repaired) return ExchangeViolation{p1, p2, std::countr_zero(e_bit)};
      }
    }
  }
  return std::nullopt;
}

[[nodiscard]] inline bool is_delta_matroid(const SetSystem& s) {
  return !find_exchange_violation(s).has_value();
}

[[nodiscard]] inline bool is_even(const SetSystem& s) {
  const int parity = std::popcount(s.feasible().front()) & 1;
  return std::all_of(s.feasible().begin(), s.feasible().end(),
                     [parity](Mask m) { return (std::popcount(m) & 1) == parity; });
}

[[nodiscard]] inline bool has_empty_feasible(const SetSystem& s) { return s.contains(0); }

[[nodiscard]] inline SetSystem twist(const SetSystem& s, Mask a) {
  check_mask(s, a);
  std::vector<Mask> out;
  out.reserve(s.count());
  for (Mask m : s.feasible()) out.push_back(m ^ a);
  return SetSystem(s.size(), std::move(out));
}

enum class ElementRole { Loop, Coloop, Ordinary };

[[nodiscard]] inline ElementRole element_role(const SetSystem& s, int e) {
  check_element(s, e);
  bool seen_in = false;
  bool seen_out = false;
  for (Mask m : s.feasible()) {
    (has_bit(m, e) ? seen_in : seen_out) = true;
  }
  if (!seen_out) return ElementRole::Coloop;
  if (!seen_in) return ElementRole::Loop;
  return ElementRole::Ordinary;
}

namespace detail {

inline SetSystem keep_without(const SetSystem& s, int e) {
  std::vector<Mask> out;
  for (Mask m : s.feasible()) {
    if (!has_bit(m, e)) out.push_back(squeeze_bit(m, e));
  }
  return SetSystem(s.size() - 1, std::move(out));
}

inline SetSystem keep_with(const SetSystem& s, int e) {
  std::vector<Mask> out;
  for (Mask m : s.feasible()) {
    if (has_bit(m, e)) out.push_back(squeeze_bit(m, e));
  }
  return SetSystem(s.size() - 1, std::move(out));
}

}  // namespace detail

/// Deletion of element e. Elements above e are renumbered down by one;
/// deleting a coloop contracts it instead.
[[nodiscard]] inline SetSystem delete_element(const SetSystem& s, int e) {
  if (element_role(s, e) == ElementRole::Coloop) return detail::keep_with(s, e);
  return detail::keep_without(s, e);
}

/// Contraction of element e; contracting a loop deletes it instead.
[[nodiscard]] inline SetSystem contract_element(const SetSystem& s, int e) {
  if (element_role(s, e) == ElementRole::Loop) return detail::keep_without(s, e);
  return detail::keep_with(s, e);
}

/// Restriction to the elements of `keep`, relabeled contiguously in
/// increasing order.
[[nodiscard]] inline SetSystem restrict_to(const SetSystem& s, Mask keep) {
  check_mask(s, keep);
  SetSystem out = s;
  for (int e = s.size() - 1; e >= 0; --e) {
    if (!has_bit(keep, e)) out = delete_element(out, e);
  }
  return out;
}

/// Direct sum: the ground set of `b` is placed after that of `a`.
[[nodiscard]] inline SetSystem product(const SetSystem& a, const SetSystem& b) {
  std::vector<Mask> out;
  out.reserve(a.count() * b.count());
  for (Mask x : a.feasible()) {
    for (Mask y : b.feasible()) out.push_back(x | (y << a.size()));
  }
  return SetSystem(a.size() + b.size(), std::move(out));
}

/// Applies the relabeling element i -> perm[i].
[[nodiscard]] inline Mask permute_mask(Mask m, const std::vector<int>& perm) {
  Mask out = 0;
  for (Mask rest = m; rest != 0; rest &= rest - 1) out |= Mask{1} << perm[std::countr_zero(rest)];
  return out;
}

[[nodiscard]] inline SetSystem relabel(const SetSystem& s, const std::vector<int>& perm) {
  std::vector<Mask> out;
  out.reserve(s.count());
  for (Mask m : s.feasible()) out.push_back(permute_mask(m, perm));
  return SetSystem(s.size(), std::move(out));
}

}  // namespace dmv

#endif  // DMV_SET_SYSTEM_HPP
