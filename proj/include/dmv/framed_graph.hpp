#ifndef DMV_FRAMED_GRAPH_HPP
#define DMV_FRAMED_GRAPH_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dmv/f2.hpp"
#include "dmv/set_system.hpp"

namespace dmv {

/// A graph with a 0/1 framing per vertex, held as its symmetric adjacency
/// matrix over F2 with the framing on the diagonal.
class FramedGraph {
 public:
  FramedGraph() = default;
  explicit FramedGraph(MatrixF2 adjacency) : adj_(std::move(adjacency)) { require_symmetric(adj_); }

  /// Edgeless graph on n vertices with framing 0 everywhere.
  static FramedGraph empty(int n) { return FramedGraph(MatrixF2(n, n)); }

  [[nodiscard]] int size() const noexcept { return adj_.rows(); }
  [[nodiscard]] const MatrixF2& adjacency() const noexcept { return adj_; }
  [[nodiscard]] bool framing(int v) const { return adj_.get(v, v); }
  [[nodiscard]] bool adjacent(int u, int v) const { return adj_.get(u, v); }

  void set_framing(int v, bool f) { adj_.set(v, v, f); }
  void set_edge(int u, int v, bool present) {
    adj_.set(u, v, present);
    adj_.set(v, u, present);
  }

  friend bool operator==(const FramedGraph&, const FramedGraph&) = default;

 private:
  MatrixF2 adj_;
};

[[nodiscard]] inline SetSystem nondeg_delta_matroid(const FramedGraph& g) {
  const int n = g.size();
  if (n > kMaxGroundSet) throw Error(ErrorKind::GroundSetTooLarge, "graph too large");
  std::vector<Mask> feasible;
  const Mask full = full_mask(n);
  for (Mask u = 0;; ++u) {
    if (principal_nondegenerate(g.adjacency(), u)) feasible.push_back(u);
    if (u == full) break;
  }
  return SetSystem(n, std::move(feasible));
}

/// Second Vassiliev move on framed graphs: row and column a receive row
/// and column b, i.e. the basis change a -> a + b of the symmetric form.
[[nodiscard]] inline FramedGraph graph_slide(const FramedGraph& g, int a, int b) {
  const int n = g.size();
  if (a < 0 || b < 0 || a >= n || b >= n) throw Error(ErrorKind::IndexOutOfRange, "vertex outside graph");
  if (a == b) throw Error(ErrorKind::SameVertex, "slide needs two distinct vertices");
  MatrixF2 m = g.adjacency();
  const bool frame_b = g.framing(b);
  for (int c = 0; c < n; ++c) {
    if (c == a) continue;
    if (g.adjacent(b, c)) {
      m.flip(a, c);
      m.flip(c, a);
    }
  }
  // Diagonal: a_aa + a_ab + a_ba + a_bb = a_aa + a_bb over F2. The loop above
  // already toggled (a, b) when b is framed.
  if (frame_b) m.flip(a, a);
  return FramedGraph(std::move(m));
}

struct BinaryWitness {
  Mask twist_set;
  FramedGraph matrix;
};

/// Recognizes twists of nondegeneracy delta-matroids. The only candidate
/// matrix is read off the singleton and pair feasibility of the twist that
/// makes the lowest feasible set empty; the candidate is then verified on
/// the whole family.
[[nodiscard]] inline std::optional<BinaryWitness> recognize_binary(const SetSystem& s, Mask twist_set) {
  const int n = s.size();
  if (!s.contains(twist_set)) return std::nullopt;
  std::vector<Mask> shifted;
  shifted.reserve(s.count());
  for (Mask m : s.feasible()) shifted.push_back(m ^ twist_set);
  const SetSystem t(n, std::move(shifted));

  FramedGraph candidate = FramedGraph::empty(n);
  for (int e = 0; e < n; ++e) candidate.set_framing(e, t.contains(Mask{1} << e));
  for (int e = 0; e < n; ++e) {
    for (int f = e + 1; f < n; ++f) {
      const bool pair = t.contains((Mask{1} << e) | (Mask{1} << f));
      candidate.set_edge(e, f, pair != (candidate.framing(e) && candidate.framing(f)));
    }
  }
  if (nondeg_delta_matroid(candidate) != t) return std::nullopt;
  return BinaryWitness{twist_set, std::move(candidate)};
}

[[nodiscard]] inline std::optional<BinaryWitness> recognize_binary(const SetSystem& s) {
  return recognize_binary(s, s.feasible().front());
}

[[nodiscard]] inline bool is_binary(const SetSystem& s) { return recognize_binary(s).has_value(); }

}  // namespace dmv

#endif  // DMV_FRAMED_GRAPH_HPP
