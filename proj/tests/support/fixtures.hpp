// Conversions between oracle containers and library types, plus exhaustive
// input families shared by the unit and acceptance suites.
#pragma once

#include <set>
#include <vector>

#include "dmv/dmv.hpp"
#include "oracles.hpp"

namespace fixtures {

inline oracle::Family family(const dmv::SetSystem& s) { return oracle::family_of(s.feasible()); }

inline dmv::FramedGraph framed_graph(const oracle::Matrix& m) {
  return dmv::FramedGraph(dmv::MatrixF2::from_entries(m));
}

inline oracle::Matrix entries(const dmv::MatrixF2& m) {
  oracle::Matrix out(m.rows(), std::vector<int>(m.cols()));
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) out[i][j] = m.get(i, j) ? 1 : 0;
  }
  return out;
}

/// Every labeled binary delta-matroid on n elements, built as twists of
/// nondegeneracy systems of framed graphs.
inline std::vector<dmv::SetSystem> binary_systems(int n) {
  std::set<dmv::SetSystem> seen;
  for (std::uint32_t code = 0; code < oracle::framed_matrix_count(n); ++code) {
    const auto base = dmv::nondeg_delta_matroid(framed_graph(oracle::framed_matrix(n, code)));
    for (dmv::Mask t = 0; t <= dmv::full_mask(n); ++t) seen.insert(dmv::twist(base, t));
  }
  return {seen.begin(), seen.end()};
}

/// Every signed chord diagram with n chords.
inline std::vector<dmv::ChordDiagram> chord_diagrams(int n) {
  std::vector<dmv::ChordDiagram> out;
  for (const auto& word : oracle::chord_words(n)) {
    for (std::uint32_t s = 0; s < (1U << n); ++s) {
      std::vector<dmv::Sign> signs(n);
      for (int i = 0; i < n; ++i) signs[i] = ((s >> i) & 1U) ? dmv::Sign::Minus : dmv::Sign::Plus;
      out.emplace_back(word, signs);
    }
  }
  return out;
}

}  // namespace fixtures
