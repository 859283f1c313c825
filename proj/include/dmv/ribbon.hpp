#ifndef DMV_RIBBON_HPP
#define DMV_RIBBON_HPP

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "dmv/framed_graph.hpp"
#include "dmv/set_system.hpp"

namespace dmv {

enum class Sign { Plus, Minus };

[[nodiscard]] constexpr Sign operator*(Sign a, Sign b) noexcept { return a == b ? Sign::Plus : Sign::Minus; }

struct RibbonEdge {
  int first;
  int second;
  Sign sign = Sign::Plus;

  friend bool operator==(const RibbonEdge&, const RibbonEdge&) = default;
};

namespace detail {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
  std::vector<int> parent;
};

}  // namespace detail

/// Signed rotation system. Half-edges are numbered 0..2e-1; each appears
/// once in some vertex rotation and once in some edge. A Minus edge
/// carries a half-twist.
class RibbonGraph {
 public:
  RibbonGraph() = default;
  RibbonGraph(std::vector<std::vector<int>> rotations, std::vector<RibbonEdge> edges)
      : rotations_(std::move(rotations)), edges_(std::move(edges)) {
    const int halves = 2 * static_cast<int>(edges_.size());
    vertex_of_.assign(halves, -1);
    edge_of_.assign(halves, -1);
    for (int v = 0; v < static_cast<int>(rotations_.size()); ++v) {
      for (int h : rotations_[v]) {
        if (h < 0 || h >= halves) throw Error(ErrorKind::InvalidRibbon, "half-edge " + std::to_string(h) + " out of range");
        if (vertex_of_[h] != -1) throw Error(ErrorKind::InvalidRibbon, "half-edge " + std::to_string(h) + " used twice in rotations");
        vertex_of_[h] = v;
      }
    }
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
      for (int h : {edges_[e].first, edges_[e].second}) {
        if (h < 0 || h >= halves) throw Error(ErrorKind::InvalidRibbon, "half-edge " + std::to_string(h) + " out of range");
        if (edge_of_[h] != -1) throw Error(ErrorKind::InvalidRibbon, "half-edge " + std::to_string(h) + " used twice in edges");
        edge_of_[h] = e;
      }
    }
    if (std::find(vertex_of_.begin(), vertex_of_.end(), -1) != vertex_of_.end()) {
      throw Error(ErrorKind::InvalidRibbon, "half-edge missing from every rotation");
    }
  }

  [[nodiscard]] int vertex_count() const noexcept { return static_cast<int>(rotations_.size()); }
  [[nodiscard]] int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  [[nodiscard]] const std::vector<std::vector<int>>& rotations() const noexcept { return rotations_; }
  [[nodiscard]] const std::vector<int>& rotation(int v) const { return rotations_.at(v); }
  [[nodiscard]] const std::vector<RibbonEdge>& edges() const noexcept { return edges_; }
  [[nodiscard]] const RibbonEdge& edge(int e) const { return edges_.at(e); }
  [[nodiscard]] int edge_of(int half) const { return edge_of_.at(half); }
  [[nodiscard]] int vertex_of(int half) const { return vertex_of_.at(half); }

  friend bool operator==(const RibbonGraph& a, const RibbonGraph& b) {
    return a.rotations_ == b.rotations_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::vector<int>> rotations_;
  std::vector<RibbonEdge> edges_;
  std::vector<int> vertex_of_;
  std::vector<int> edge_of_;
};

inline void check_edge_mask(const RibbonGraph& r, Mask edges) {
  if (r.edge_count() > kMaxGroundSet || (edges & ~full_mask(r.edge_count())) != 0) {
    throw Error(ErrorKind::MaskOutOfRange, "edge subset exceeds the ribbon graph");
  }
}

/// Number of boundary circles of the spanning subgraph on all vertices and
/// the edges in `edges`. Each half-edge h has two sides, 2h ("before" in
/// the rotation) and 2h+1 ("after"); rotation arcs join the after-side of
/// a visible half-edge to the before-side of the next visible one, and a
/// ribbon joins the sides of its two half-edges crosswise (Plus) or
/// straight (Minus).
[[nodiscard]] inline int boundary_components(const RibbonGraph& r, Mask edges) {
  check_edge_mask(r, edges);
  const int halves = 2 * r.edge_count();
  detail::UnionFind uf(2 * static_cast<std::size_t>(halves));
  auto visible = [&](int h) { return has_bit(edges, r.edge_of(h)); };
  auto before = [](int h) { return 2 * h; };
  auto after = [](int h) { return 2 * h + 1; };

  int circles = 0;
  std::vector<int> seen;
  for (const auto& rot : r.rotations()) {
    seen.clear();
    for (int h : rot) {
      if (visible(h)) seen.push_back(h);
    }
    if (seen.empty()) {
      ++circles;
      continue;
    }
    for (std::size_t i = 0; i < seen.size(); ++i) uf.unite(after(seen[i]), before(seen[(i + 1) % seen.size()]));
  }
  for (int e = 0; e < r.edge_count(); ++e) {
    if (!has_bit(edges, e)) continue;
    const auto& [h, k, sign] = r.edge(e);
    if (sign == Sign::Plus) {
      uf.unite(before(h), after(k));
      uf.unite(before(k), after(h));
    } else {
      uf.unite(before(h), before(k));
      uf.unite(after(h), after(k));
    }
  }
  // Every side has degree two, so each component is one circle.
  int boundary_circles = 0;
  for (int h = 0; h < halves; ++h) {
    if (!visible(h)) continue;
    for (int side : {before(h), after(h)}) {
      if (uf.find(side) == side) ++boundary_circles;
    }
  }
  return circles + boundary_circles;
}

[[nodiscard]] inline bool is_connected(const RibbonGraph& r) {
  if (r.vertex_count() <= 1) return true;
  detail::UnionFind uf(r.vertex_count());
  int merges = 0;
  for (const auto& e : r.edges()) merges += uf.unite(r.vertex_of(e.first), r.vertex_of(e.second)) ? 1 : 0;
  return merges == r.vertex_count() - 1;
}

/// Feasible sets are the quasi-trees: edge subsets with one boundary circle.
[[nodiscard]] inline SetSystem ribbon_delta_matroid(const RibbonGraph& r) {
  if (!is_connected(r)) throw Error(ErrorKind::Disconnected, "ribbon graph is not connected");
  const int n = r.edge_count();
  if (n > kMaxGroundSet) throw Error(ErrorKind::GroundSetTooLarge, "too many ribbons");
  std::vector<Mask> feasible;
  for (Mask m = 0;; ++m) {
    if (boundary_components(r, m) == 1) feasible.push_back(m);
    if (m == full_mask(n)) break;
  }
  return SetSystem(n, std::move(feasible));
}

/// The spanning subgraph on all vertices and the selected edges. Kept
/// edges retain their relative order; half-edges are renumbered.
[[nodiscard]] inline RibbonGraph spanning_subgraph(const RibbonGraph& r, Mask edges) {
  check_edge_mask(r, edges);
  std::vector<int> new_edge(r.edge_count(), -1);
  int next = 0;
  for (int e = 0; e < r.edge_count(); ++e) {
    if (has_bit(edges, e)) new_edge[e] = next++;
  }
  auto rename = [&](int h) {
    const int e = r.edge_of(h);
    return 2 * new_edge[e] + (r.edge(e).first == h ? 0 : 1);
  };
  std::vector<std::vector<int>> rotations;
  for (const auto& rot : r.rotations()) {
    std::vector<int> kept;
    for (int h : rot) {
      if (has_bit(edges, r.edge_of(h))) kept.push_back(rename(h));
    }
    rotations.push_back(std::move(kept));
  }
  std::vector<RibbonEdge> kept_edges;
  for (int e = 0; e < r.edge_count(); ++e) {
    if (has_bit(edges, e)) kept_edges.push_back({2 * new_edge[e], 2 * new_edge[e] + 1, r.edge(e).sign});
  }
  return RibbonGraph(std::move(rotations), std::move(kept_edges));
}

/// A connected component together with the original edges it carries.
struct RibbonComponent {
  Mask edges;
  RibbonGraph graph;
};

/// Components ordered by their lowest vertex.
[[nodiscard]] inline std::vector<RibbonComponent> connected_components(const RibbonGraph& r) {
  detail::UnionFind uf(r.vertex_count());
  for (const auto& e : r.edges()) uf.unite(r.vertex_of(e.first), r.vertex_of(e.second));
  std::vector<RibbonComponent> out;
  std::vector<int> done;
  for (int v = 0; v < r.vertex_count(); ++v) {
    const int root = uf.find(v);
    if (std::find(done.begin(), done.end(), root) != done.end()) continue;
    done.push_back(root);
    std::vector<int> vertex_ids;
    for (int w = 0; w < r.vertex_count(); ++w) {
      if (uf.find(w) == root) vertex_ids.push_back(w);
    }
    Mask edge_mask = 0;
    for (int e = 0; e < r.edge_count(); ++e) {
      if (uf.find(r.vertex_of(r.edge(e).first)) == root) edge_mask |= Mask{1} << e;
    }
    const RibbonGraph sub = spanning_subgraph(r, edge_mask);
    std::vector<std::vector<int>> rotations;
    for (int w : vertex_ids) rotations.push_back(sub.rotation(w));
    out.push_back({edge_mask, RibbonGraph(std::move(rotations), sub.edges())});
  }
  return out;
}

/// One-vertex ribbon graph given by its word of chord labels around the
/// vertex. Labels are 0..n-1, each appearing exactly twice; chord i is
/// ribbon i.
class ChordDiagram {
 public:
  ChordDiagram() = default;
  ChordDiagram(std::vector<int> word, std::vector<Sign> signs) : word_(std::move(word)), signs_(std::move(signs)) {
    const int n = static_cast<int>(signs_.size());
    if (static_cast<int>(word_.size()) != 2 * n) {
      throw Error(ErrorKind::InvalidRibbon, "chord word length must be twice the number of chords");
    }
    std::vector<int> seen(n, 0);
    for (int c : word_) {
      if (c < 0 || c >= n) throw Error(ErrorKind::InvalidRibbon, "chord label " + std::to_string(c) + " out of range");
      ++seen[c];
    }
    if (std::any_of(seen.begin(), seen.end(), [](int k) { return k != 2; })) {
      throw Error(ErrorKind::InvalidRibbon, "every chord must appear exactly twice");
    }
  }

  [[nodiscard]] int chord_count() const noexcept { return static_cast<int>(signs_.size()); }
  [[nodiscard]] const std::vector<int>& word() const noexcept { return word_; }
  [[nodiscard]] const std::vector<Sign>& signs() const noexcept { return signs_; }
  [[nodiscard]] Sign sign(int chord) const { return signs_.at(chord); }

  /// Positions of the two ends of `chord`, in increasing order.
  [[nodiscard]] std::pair<int, int> ends(int chord) const {
    int first = -1;
    for (int i = 0; i < static_cast<int>(word_.size()); ++i) {
      if (word_[i] != chord) continue;
      if (first < 0) {
        first = i;
      } else {
        return {first, i};
      }
    }
    throw Error(ErrorKind::IndexOutOfRange, "no chord " + std::to_string(chord));
  }

  /// Half-edge i is position i of the word; ribbon c joins the two ends of
  /// chord c.
  [[nodiscard]] RibbonGraph to_ribbon() const {
    std::vector<int> rotation(word_.size());
    std::iota(rotation.begin(), rotation.end(), 0);
    std::vector<RibbonEdge> edges;
    for (int c = 0; c < chord_count(); ++c) {
      auto [p, q] = ends(c);
      edges.push_back({p, q, signs_[c]});
    }
    return RibbonGraph({std::move(rotation)}, std::move(edges));
  }

  friend bool operator==(const ChordDiagram&, const ChordDiagram&) = default;

 private:
  std::vector<int> word_;
  std::vector<Sign> signs_;
};

/// Framed intersection graph: chords are vertices, twisted chords are
/// framed, interleaved chords are adjacent.
[[nodiscard]] inline FramedGraph intersection_graph(const ChordDiagram& c) {
  const int n = c.chord_count();
  FramedGraph g = FramedGraph::empty(n);
  std::vector<std::pair<int, int>> ends(n);
  for (int i = 0; i < n; ++i) ends[i] = c.ends(i);
  for (int i = 0; i < n; ++i) {
    g.set_framing(i, c.sign(i) == Sign::Minus);
    for (int j = i + 1; j < n; ++j) {
      auto inside = [&](int p) { return ends[i].first < p && p < ends[i].second; };
      g.set_edge(i, j, inside(ends[j].first) != inside(ends[j].second));
    }
  }
  return g;
}

[[nodiscard]] inline SetSystem ribbon_delta_matroid(const ChordDiagram& c) {
  return ribbon_delta_matroid(c.to_ribbon());
}

/// Glues vertex v1 of r1 to vertex v2 of r2. The merged rotation is r1's
/// rotation at v1 read from position p1, followed by r2's rotation at v2
/// read from position p2. The merged vertex keeps index v1; the other
/// vertices of r2 follow those of r1, and r2's ribbons follow r1's.
[[nodiscard]] inline RibbonGraph vertex_gluing(const RibbonGraph& r1, int v1, int p1, const RibbonGraph& r2, int v2,
                                               int p2) {
  auto check = [](const RibbonGraph& r, int v, int p) {
    if (v < 0 || v >= r.vertex_count()) throw Error(ErrorKind::IndexOutOfRange, "gluing vertex out of range");
    const int deg = static_cast<int>(r.rotation(v).size());
    if (p < 0 || p >= std::max(deg, 1)) throw Error(ErrorKind::IndexOutOfRange, "gluing position out of range");
  };
  check(r1, v1, p1);
  check(r2, v2, p2);
  const int shift = 2 * r1.edge_count();
  auto opened = [](const std::vector<int>& rot, int p, int offset) {
    std::vector<int> out;
    for (std::size_t i = 0; i < rot.size(); ++i) out.push_back(rot[(p + i) % rot.size()] + offset);
    return out;
  };
  std::vector<std::vector<int>> rotations = r1.rotations();
  std::vector<int> merged = opened(r1.rotation(v1), p1, 0);
  const std::vector<int> tail = opened(r2.rotation(v2), p2, shift);
  merged.insert(merged.end(), tail.begin(), tail.end());
  rotations[v1] = std::move(merged);
  for (int w = 0; w < r2.vertex_count(); ++w) {
    if (w == v2) continue;
    std::vector<int> rot = r2.rotation(w);
    for (int& h : rot) h += shift;
    rotations.push_back(std::move(rot));
  }
  std::vector<RibbonEdge> edges = r1.edges();
  for (const auto& e : r2.edges()) edges.push_back({e.first + shift, e.second + shift, e.sign});
  return RibbonGraph(std::move(rotations), std::move(edges));
}

/// First Vassiliev move: transposes the half-edges at positions p and p+1
/// (cyclically) of vertex v. They must belong to different ribbons.
[[nodiscard]] inline RibbonGraph ribbon_end_exchange(const RibbonGraph& r, int v, int p) {
  if (v < 0 || v >= r.vertex_count()) throw Error(ErrorKind::IndexOutOfRange, "vertex out of range");
  const int deg = static_cast<int>(r.rotation(v).size());
  if (deg < 2 || p < 0 || p >= deg) throw Error(ErrorKind::IndexOutOfRange, "no adjacent ends at that position");
  const int q = (p + 1) % deg;
  if (r.edge_of(r.rotation(v)[p]) == r.edge_of(r.rotation(v)[q])) {
    throw Error(ErrorKind::SameEdge, "both ends belong to one ribbon");
  }
  auto rotations = r.rotations();
  std::swap(rotations[v][p], rotations[v][q]);
  return RibbonGraph(std::move(rotations), r.edges());
}

/// Position-level exchange on a chord diagram (word positions p, p+1).
[[nodiscard]] inline ChordDiagram chord_end_exchange(const ChordDiagram& c, int p) {
  const int len = static_cast<int>(c.word().size());
  if (len < 2 || p < 0 || p >= len) throw Error(ErrorKind::IndexOutOfRange, "no adjacent ends at that position");
  const int q = (p + 1) % len;
  if (c.word()[p] == c.word()[q]) throw Error(ErrorKind::SameEdge, "both ends belong to one chord");
  std::vector<int> word = c.word();
  std::swap(word[p], word[q]);
  return ChordDiagram(std::move(word), c.signs());
}

/// Handle slide of end `which_end` (0 = earlier in the word, 1 = later) of
/// chord a over chord b. That end must sit next to an end h of b; it travels
/// along b and re-attaches next to b's other end h'. Leaving from just
/// before h it arrives just after h' when b is untwisted and just before h'
/// when twisted (mirror image when leaving from just after h). The sign of
/// a is multiplied by the sign of b.
[[nodiscard]] inline ChordDiagram chord_slide(const ChordDiagram& c, int a, int b, int which_end) {
  const int n = c.chord_count();
  if (a < 0 || b < 0 || a >= n || b >= n) throw Error(ErrorKind::IndexOutOfRange, "chord out of range");
  if (a == b) throw Error(ErrorKind::SameElement, "slide needs two distinct chords");
  if (which_end != 0 && which_end != 1) throw Error(ErrorKind::IndexOutOfRange, "end selector must be 0 or 1");
  const int len = 2 * n;
  const auto [a0, a1] = c.ends(a);
  const int pos = which_end == 0 ? a0 : a1;
  const auto [b0, b1] = c.ends(b);
  const int next = (pos + 1) % len;
  const int prev = (pos + len - 1) % len;

  int far_end;       // position of h'
  bool insert_after;  // re-attach after h' (true) or before it
  if (c.word()[next] == b) {
    far_end = next == b0 ? b1 : b0;
    insert_after = c.sign(b) == Sign::Plus;
  } else if (c.word()[prev] == b) {
    far_end = prev == b0 ? b1 : b0;
    insert_after = c.sign(b) == Sign::Minus;
  } else {
    throw Error(ErrorKind::NotAdjacent, "the selected end of a is not next to an end of b");
  }

  std::vector<int> word = c.word();
  word.erase(word.begin() + pos);
  if (far_end > pos) --far_end;
  word.insert(word.begin() + far_end + (insert_after ? 1 : 0), a);
  std::vector<Sign> signs = c.signs();
  signs[a] = signs[a] * signs[b];
  return ChordDiagram(std::move(word), std::move(signs));
}

}  // namespace dmv

#endif  // DMV_RIBBON_HPP
