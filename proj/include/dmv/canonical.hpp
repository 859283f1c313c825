#ifndef DMV_CANONICAL_HPP
#define DMV_CANONICAL_HPP

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "dmv/set_system.hpp"

namespace dmv {

inline constexpr int kDefaultCanonicalBound = 8;

/// Isomorphism-invariant key of a set system: the lexicographically least
/// sorted family over all relabelings of the ground set.
struct CanonicalCode {
  int n = 0;
  std::vector<Mask> code{0};

  [[nodiscard]] SetSystem to_system() const { return SetSystem(n, code); }

  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
  friend std::strong_ordering operator<=>(const CanonicalCode& a, const CanonicalCode& b) {
    if (auto c = a.n <=> b.n; c != 0) return c;
    return a.code <=> b.code;
  }
};

struct CanonicalCodeHash {
  std::size_t operator()(const CanonicalCode& c) const noexcept {
    std::size_t h = std::hash<int>{}(c.n);
    for (Mask m : c.code) h = h * 1000003U ^ std::hash<Mask>{}(m);
    return h;
  }
};

namespace detail {

// Per-element signature: number of feasible sets of each cardinality that
// contain the element. Relabelings only need to respect the order of these.
inline std::vector<std::vector<std::size_t>> element_signatures(const SetSystem& s) {
  const int n = s.size();
  std::vector<std::vector<std::size_t>> sig(n, std::vector<std::size_t>(n + 1, 0));
  for (Mask m : s.feasible()) {
    const int k = std::popcount(m);
    for (Mask rest = m; rest != 0; rest &= rest - 1) ++sig[std::countr_zero(rest)][k];
  }
  return sig;
}

}  // namespace detail

/// Canonical relabeling search. Elements are grouped by signature and only
/// bijections preserving the group order are tried.
[[nodiscard]] inline CanonicalCode canonical_form(const SetSystem& s, int bound = kDefaultCanonicalBound) {
  const int n = s.size();
  if (n > bound) {
    throw Error(ErrorKind::GroundSetTooLarge,
                "canonical form requested for " + std::to_string(n) + " elements (bound " +
                    std::to_string(bound) + ")");
  }
  if (n == 0) return CanonicalCode{0, s.feasible()};

  const auto sig = detail::element_signatures(s);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return sig[a] < sig[b]; });

  // Blocks of equal signature as [begin, end) ranges of `order`.
  std::vector<std::pair<int, int>> blocks;
  for (int i = 0; i < n;) {
    int j = i + 1;
    while (j < n && sig[order[j]] == sig[order[i]]) ++j;
    blocks.emplace_back(i, j);
    std::sort(order.begin() + i, order.begin() + j);
    i = j;
  }

  std::vector<Mask> best;
  std::vector<Mask> candidate(s.count());
  std::vector<int> perm(n);
  while (true) {
    for (int label = 0; label < n; ++label) perm[order[label]] = label;
    std::transform(s.feasible().begin(), s.feasible().end(), candidate.begin(),
                   [&](Mask m) { return permute_mask(m, perm); });
    std::sort(candidate.begin(), candidate.end());
    if (best.empty() || candidate < best) best = candidate;

    // Odometer over the permutations of each block.
    std::size_t b = 0;
    for (; b < blocks.size(); ++b) {
      auto [lo, hi] = blocks[b];
      if (std::next_permutation(order.begin() + lo, order.begin() + hi)) break;
    }
    if (b == blocks.size()) break;
  }
  return CanonicalCode{n, std::move(best)};
}

[[nodiscard]] inline bool isomorphic(const SetSystem& a, const SetSystem& b,
                                     int bound = kDefaultCanonicalBound) {
  if (a.size() != b.size() || a.count() != b.count()) return false;
  return canonical_form(a, bound) == canonical_form(b, bound);
}

/// Splits a set system into its indecomposable direct factors. Each factor
/// is returned together with the mask of original elements it lives on.
struct Factor {
  Mask support;
  SetSystem system;
};

[[nodiscard]] inline std::vector<Factor> factorize(const SetSystem& s) {
  std::vector<Factor> out;
  Mask remaining = s.ground();
  SetSystem rest = s;
  // `rest` lives on the elements of `remaining`, relabeled contiguously.
  while (remaining != 0) {
    const int k = rest.size();
    const Mask rest_full = full_mask(k);
    Mask component = rest_full;
    // Smallest separator containing the lowest element.
    for (Mask cand = 1; cand <= rest_full; ++cand) {
      if ((cand & 1U) == 0 || std::popcount(cand) >= std::popcount(component)) continue;
      std::vector<Mask> left;
      std::vector<Mask> right;
      for (Mask m : rest.feasible()) {
        left.push_back(m & cand);
        right.push_back(m & ~cand);
      }
      std::sort(left.begin(), left.end());
      left.erase(std::unique(left.begin(), left.end()), left.end());
      std::sort(right.begin(), right.end());
      right.erase(std::unique(right.begin(), right.end()), right.end());
      if (left.size() * right.size() == rest.count()) component = cand;
    }
    Mask support = 0;
    int idx = 0;
    for (Mask r = remaining; r != 0; r &= r - 1, ++idx) {
      if (has_bit(component, idx)) support |= r & (~r + 1);
    }
    Mask complement = rest_full & ~component;
    SetSystem factor = SetSystem(std::popcount(component), [&] {
      std::vector<Mask> f;
      for (Mask m : rest.feasible()) {
        Mask packed = 0;
        int pos = 0;
        for (int e = 0; e < k; ++e) {
          if (!has_bit(component, e)) continue;
          if (has_bit(m, e)) packed |= Mask{1} << pos;
          ++pos;
        }
        f.push_back(packed);
      }
      return f;
    }());
    out.push_back(Factor{support, std::move(factor)});
    std::vector<Mask> tail;
    for (Mask m : rest.feasible()) {
      Mask packed = 0;
      int pos = 0;
      for (int e = 0; e < k; ++e) {
        if (!has_bit(complement, e)) continue;
        if (has_bit(m, e)) packed |= Mask{1} << pos;
        ++pos;
      }
      tail.push_back(packed);
    }
    rest = SetSystem(std::popcount(complement), std::move(tail));
    remaining &= ~support;
  }
  return out;
}

}  // namespace dmv

#endif  // DMV_CANONICAL_HPP
