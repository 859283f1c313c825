#ifndef DMV_CATALOG_HPP
#define DMV_CATALOG_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dmv/set_system.hpp"

namespace dmv {

struct NamedSystem {
  std::string name;
  SetSystem system;
};

/// The named set systems on one and two elements, with element 1 of the
/// usual notation at bit 0 and element 2 at bit 1.
[[nodiscard]] inline const std::vector<NamedSystem>& named_catalog() {
  static const std::vector<NamedSystem> catalog = {
      {"s11", SetSystem(1, {0b0})},
      {"s12", SetSystem(1, {0b0, 0b1})},
      {"s13", SetSystem(1, {0b1})},
      {"s11^2", SetSystem(2, {0b00})},
      {"s12^2", SetSystem(2, {0b00, 0b01, 0b10, 0b11})},
      {"s13^2", SetSystem(2, {0b11})},
      {"s11s12", SetSystem(2, {0b00, 0b01})},
      {"s11s13", SetSystem(2, {0b01})},
      {"s12s13", SetSystem(2, {0b01, 0b11})},
      {"s21", SetSystem(2, {0b00, 0b11})},
      {"s22", SetSystem(2, {0b00, 0b01, 0b11})},
      {"s23", SetSystem(2, {0b00, 0b01, 0b10})},
      {"s24", SetSystem(2, {0b01, 0b10})},
      {"s25", SetSystem(2, {0b01, 0b10, 0b11})},
  };
  return catalog;
}

[[nodiscard]] inline std::optional<SetSystem> lookup(std::string_view name) {
  for (const auto& entry : named_catalog()) {
    if (entry.name == name) return entry.system;
  }
  return std::nullopt;
}

/// Convenience accessor for code that knows the name exists.
[[nodiscard]] inline SetSystem named(std::string_view name) {
  if (auto s = lookup(name)) return *s;
  throw Error(ErrorKind::IndexOutOfRange, "no catalog entry named " + std::string(name));
}

}  // namespace dmv

#endif  // DMV_CATALOG_HPP
