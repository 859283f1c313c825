#ifndef DMV_MOVES_HPP
#define DMV_MOVES_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "dmv/framed_graph.hpp"
#include "dmv/set_system.hpp"

namespace dmv {

enum class Enforcement { Off, RequireBinary };

namespace detail {

inline void check_pair(const SetSystem& s, int a, int b) {
  check_element(s, a);
  check_element(s, b);
  if (a == b) throw Error(ErrorKind::SameElement, "move needs two distinct elements");
}

inline void enforce_binary(const SetSystem& s, Enforcement mode) {
  if (mode == Enforcement::RequireBinary && !is_binary(s)) {
    throw Error(ErrorKind::NotBinary, "set system is not a binary delta-matroid");
  }
}

}  // namespace detail

/// Handle slide of a over b: toggles phi + a for every phi avoiding a and b
/// with phi + b feasible.
[[nodiscard]] inline SetSystem slide(const SetSystem& s, int a, int b,
                                     Enforcement mode = Enforcement::Off) {
  detail::check_pair(s, a, b);
  detail::enforce_binary(s, mode);
  const Mask abit = Mask{1} << a;
  const Mask bbit = Mask{1} << b;
  std::vector<Mask> out;
  out.reserve(2 * s.count());
  for (Mask m : s.feasible()) {
    // phi + b feasible with phi avoiding a: its partner phi + a toggles.
    const bool trigger = (m & abit) == 0 && (m & bbit) != 0;
    const bool toggled = (m & abit) != 0 && (m & bbit) == 0 && s.contains(m ^ abit ^ bbit);
    if (!toggled) out.push_back(m);
    if (trigger && !s.contains(m ^ abit ^ bbit)) out.push_back(m ^ abit ^ bbit);
  }
  // A trigger set always survives, so the result is never empty.
  return SetSystem(s.size(), std::move(out));
}

/// Exchange of neighbouring ends: twist by b, slide a over b, twist back.
[[nodiscard]] inline SetSystem exchange(const SetSystem& s, int a, int b,
                                        Enforcement mode = Enforcement::Off) {
  detail::check_pair(s, a, b);
  detail::enforce_binary(s, mode);
  const Mask bbit = Mask{1} << b;
  return twist(slide(twist(s, bbit), a, b), bbit);
}

struct SignedTerm {
  int coefficient;
  SetSystem system;
};

/// D - D'_{ab} - D~_{ab} + D~'_{ab}, in that order.
struct FourTermCombination {
  std::array<SignedTerm, 4> terms;
};

[[nodiscard]] inline FourTermCombination four_term(const SetSystem& s, int a, int b,
                                                   Enforcement mode = Enforcement::Off) {
  detail::check_pair(s, a, b);
  detail::enforce_binary(s, mode);
  SetSystem slid = slide(s, a, b);
  SetSystem exchanged = exchange(s, a, b);
  SetSystem both = exchange(slid, a, b);
  return FourTermCombination{{SignedTerm{+1, s}, SignedTerm{-1, std::move(exchanged)},
                              SignedTerm{-1, std::move(slid)}, SignedTerm{+1, std::move(both)}}};
}

}  // namespace dmv

#endif  // DMV_MOVES_HPP
