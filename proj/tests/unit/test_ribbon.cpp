#include <random>

#include "catch_amalgamated.hpp"
#include "dmv/catalog.hpp"
#include "dmv/framed_graph.hpp"
#include "dmv/moves.hpp"
#include "dmv/ribbon.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace dmv;

namespace {

RibbonGraph loop(Sign sign) { return RibbonGraph({{0, 1}}, {{0, 1, sign}}); }
RibbonGraph bridge() { return RibbonGraph({{0}, {1}}, {{0, 1, Sign::Plus}}); }

ChordDiagram diagram(std::vector<int> word, std::vector<Sign> signs) { return {std::move(word), std::move(signs)}; }

oracle::Matrix oracle_intersection(const ChordDiagram& c) {
  const int n = c.chord_count();
  oracle::Matrix m(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    m[i][i] = c.sign(i) == Sign::Minus ? 1 : 0;
    for (int j = 0; j < n; ++j) {
      if (i != j) m[i][j] = oracle::interleaved(c.word(), i, j) ? 1 : 0;
    }
  }
  return m;
}

// Small ribbon graphs used as gluing inputs.
std::vector<RibbonGraph> gluing_inputs() {
  return {loop(Sign::Plus),
          loop(Sign::Minus),
          bridge(),
          diagram({0, 1, 0, 1}, {Sign::Plus, Sign::Minus}).to_ribbon(),
          RibbonGraph({{0, 2}, {1, 3}}, {{0, 1, Sign::Plus}, {2, 3, Sign::Minus}}),
          RibbonGraph({{0}, {1, 2}, {3}}, {{0, 1, Sign::Plus}, {3, 2, Sign::Plus}})};
}

// Random connected ribbon graph: a random tree plus extra ribbons, with the
// half-edges at each vertex shuffled.
RibbonGraph random_ribbon(std::mt19937& rng, int vertices, int edges) {
  std::vector<std::vector<int>> rotations(vertices);
  std::vector<RibbonEdge> list;
  std::bernoulli_distribution coin(0.5);
  auto add = [&](int u, int v) {
    const int h = 2 * static_cast<int>(list.size());
    rotations[u].push_back(h);
    rotations[v].push_back(h + 1);
    list.push_back({h, h + 1, coin(rng) ? Sign::Plus : Sign::Minus});
  };
  for (int v = 1; v < vertices; ++v) add(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
  std::uniform_int_distribution<int> any(0, vertices - 1);
  while (static_cast<int>(list.size()) < edges) add(any(rng), any(rng));
  for (auto& rot : rotations) std::shuffle(rot.begin(), rot.end(), rng);
  return RibbonGraph(std::move(rotations), std::move(list));
}

}  // namespace

TEST_CASE("boundary component examples") {
  CHECK(boundary_components(loop(Sign::Plus), 0x1) == 2);
  CHECK(boundary_components(loop(Sign::Minus), 0x1) == 1);
  CHECK(boundary_components(loop(Sign::Plus), 0x0) == 1);
  CHECK(boundary_components(bridge(), 0x0) == 2);
  CHECK(boundary_components(bridge(), 0x1) == 1);
  CHECK_THROWS_AS(boundary_components(bridge(), 0x2), Error);
}

TEST_CASE("delta-matroids of the one-element ribbon graphs") {
  CHECK(ribbon_delta_matroid(loop(Sign::Plus)) == named("s11"));
  CHECK(ribbon_delta_matroid(loop(Sign::Minus)) == named("s12"));
  CHECK(ribbon_delta_matroid(bridge()) == named("s13"));
  CHECK(ribbon_delta_matroid(diagram({0, 1, 0, 1}, {Sign::Plus, Sign::Plus})) == named("s21"));
  try {
    (void)ribbon_delta_matroid(RibbonGraph({{}, {}}, {}));
    FAIL("disconnected graph accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Disconnected);
  }
}

TEST_CASE("ribbon graph validation") {
  CHECK_THROWS_AS(RibbonGraph({{0, 0}}, {{0, 1, Sign::Plus}}), Error);
  CHECK_THROWS_AS(RibbonGraph({{0}}, {{0, 1, Sign::Plus}}), Error);
  CHECK_THROWS_AS(ChordDiagram({0, 1, 0}, {Sign::Plus, Sign::Plus}), Error);
}

TEST_CASE("intersection graph examples") {
  const auto crossing = diagram({0, 1, 0, 1}, {Sign::Plus, Sign::Plus});
  CHECK(intersection_graph(crossing) == fixtures::framed_graph({{0, 1}, {1, 0}}));
  CHECK(intersection_graph(diagram({0, 0, 1, 1}, {Sign::Plus, Sign::Plus})) == FramedGraph::empty(2));
  CHECK(intersection_graph(diagram({0, 0}, {Sign::Minus})) == fixtures::framed_graph({{1}}));
}

TEST_CASE("chord diagrams: boundary count, delta-matroid and intersection graph") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& c : fixtures::chord_diagrams(n)) {
      const oracle::Matrix m = oracle_intersection(c);
      CHECK(fixtures::entries(intersection_graph(c).adjacency()) == m);
      CHECK(boundary_components(c.to_ribbon(), full_mask(n)) == n - oracle::rank_f2(m) + 1);
      const SetSystem d = ribbon_delta_matroid(c);
      CHECK(fixtures::family(d) == oracle::nondegenerate_subsets(m));
      CHECK(is_binary(d));
    }
  }
}

TEST_CASE("ribbon delta-matroids are binary delta-matroids") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const int vertices = std::uniform_int_distribution<int>(1, 4)(rng);
    const int edges = std::uniform_int_distribution<int>(vertices - 1, 5)(rng);
    const RibbonGraph r = random_ribbon(rng, vertices, edges);
    const SetSystem d = ribbon_delta_matroid(r);
    CHECK(is_delta_matroid(d));
    CHECK(is_binary(d));
  }
}

TEST_CASE("spanning subgraphs restrict the delta-matroid") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    const int vertices = std::uniform_int_distribution<int>(1, 4)(rng);
    const int edges = std::uniform_int_distribution<int>(std::max(vertices - 1, 1), 5)(rng);
    const RibbonGraph r = random_ribbon(rng, vertices, edges);
    const SetSystem d = ribbon_delta_matroid(r);
    for (Mask keep = 0; keep <= full_mask(edges); ++keep) {
      const RibbonGraph sub = spanning_subgraph(r, keep);
      REQUIRE(sub.edge_count() == std::popcount(keep));
      const SetSystem restricted = restrict_to(d, keep);
      if (is_connected(sub)) {
        CHECK(ribbon_delta_matroid(sub) == restricted);
        continue;
      }
      // Disconnected: feasible sets are unions of one quasi-tree per
      // component, with component edges mapped back to the subgraph's labels.
      oracle::Family expected{{}};
      for (const auto& comp : connected_components(sub)) {
        std::vector<int> local_to_sub;
        for (int e = 0; e < sub.edge_count(); ++e) {
          if (has_bit(comp.edges, e)) local_to_sub.push_back(e);
        }
        const SetSystem local_system = ribbon_delta_matroid(comp.graph);
        oracle::Family next;
        for (Mask local : local_system.feasible()) {
          for (const auto& partial : expected) {
            oracle::Subset merged = partial;
            for (int i = 0; i < comp.graph.edge_count(); ++i) {
              if (has_bit(local, i)) merged.insert(local_to_sub[i]);
            }
            next.insert(merged);
          }
        }
        expected = next;
      }
      CHECK(fixtures::family(restricted) == expected);
    }
  }
}

TEST_CASE("vertex gluing examples") {
  const RibbonGraph two_loops = vertex_gluing(loop(Sign::Plus), 0, 0, loop(Sign::Plus), 0, 0);
  CHECK(two_loops.vertex_count() == 1);
  CHECK(ribbon_delta_matroid(two_loops) == product(named("s11"), named("s11")));

  const RibbonGraph path = vertex_gluing(bridge(), 1, 0, bridge(), 0, 0);
  CHECK(path.vertex_count() == 3);
  CHECK(path.edge_count() == 2);
  CHECK(ribbon_delta_matroid(path) == product(named("s13"), named("s13")));
  CHECK_THROWS_AS(vertex_gluing(bridge(), 2, 0, bridge(), 0, 0), Error);
}

TEST_CASE("gluing multiplies delta-matroids for every choice of vertices and positions") {
  const auto inputs = gluing_inputs();
  for (const auto& r1 : inputs) {
    for (const auto& r2 : inputs) {
      const SetSystem expected = product(ribbon_delta_matroid(r1), ribbon_delta_matroid(r2));
      for (int v1 = 0; v1 < r1.vertex_count(); ++v1) {
        for (int p1 = 0; p1 < static_cast<int>(r1.rotation(v1).size()); ++p1) {
          for (int v2 = 0; v2 < r2.vertex_count(); ++v2) {
            for (int p2 = 0; p2 < static_cast<int>(r2.rotation(v2).size()); ++p2) {
              const RibbonGraph glued = vertex_gluing(r1, v1, p1, r2, v2, p2);
              CHECK(glued.vertex_count() == r1.vertex_count() + r2.vertex_count() - 1);
              CHECK(ribbon_delta_matroid(glued) == expected);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("end exchange") {
  const auto crossing = diagram({0, 1, 0, 1}, {Sign::Plus, Sign::Plus});
  const auto swapped = chord_end_exchange(crossing, 2);
  CHECK(swapped.word() == std::vector<int>{0, 1, 1, 0});
  CHECK(ribbon_delta_matroid(swapped) == product(named("s11"), named("s11")));
  CHECK(exchange(named("s21"), 0, 1) == product(named("s11"), named("s11")));
  CHECK(chord_end_exchange(swapped, 2) == crossing);

  const RibbonGraph r = crossing.to_ribbon();
  CHECK(ribbon_end_exchange(ribbon_end_exchange(r, 0, 3), 0, 3) == r);
  try {
    (void)ribbon_end_exchange(loop(Sign::Plus), 0, 0);
    FAIL("degenerate exchange accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SameEdge);
  }
  CHECK_THROWS_AS(chord_end_exchange(diagram({0, 0, 1, 1}, {Sign::Plus, Sign::Plus}), 0), Error);
}

TEST_CASE("end exchange realizes the set-system exchange") {
  for (int n = 2; n <= 4; ++n) {
    for (const auto& c : fixtures::chord_diagrams(n)) {
      const RibbonGraph r = c.to_ribbon();
      const SetSystem d = ribbon_delta_matroid(r);
      for (int p = 0; p < 2 * n; ++p) {
        const int a = c.word()[p];
        const int b = c.word()[(p + 1) % (2 * n)];
        if (a == b) continue;
        CHECK(ribbon_delta_matroid(ribbon_end_exchange(r, 0, p)) == exchange(d, a, b));
      }
    }
  }
  // Multi-vertex graphs from gluing.
  const auto inputs = gluing_inputs();
  for (const auto& r1 : inputs) {
    for (const auto& r2 : inputs) {
      const RibbonGraph g = vertex_gluing(r1, 0, 0, r2, 0, 0);
      const SetSystem d = ribbon_delta_matroid(g);
      for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& rot = g.rotation(v);
        for (int p = 0; p < static_cast<int>(rot.size()); ++p) {
          const int a = g.edge_of(rot[p]);
          const int b = g.edge_of(rot[(p + 1) % rot.size()]);
          if (a == b) continue;
          CHECK(ribbon_delta_matroid(ribbon_end_exchange(g, v, p)) == exchange(d, a, b));
        }
      }
    }
  }
}

TEST_CASE("chord slide examples") {
  const auto crossing = diagram({0, 1, 0, 1}, {Sign::Plus, Sign::Plus});
  const auto slid = chord_slide(crossing, 0, 1, 0);
  CHECK(slid.word() == std::vector<int>{1, 0, 1, 0});
  CHECK(ribbon_delta_matroid(slid) == named("s21"));

  // Three chords: a crosses b, b crosses c, a and c apart.
  const auto chain = diagram({0, 1, 0, 2, 1, 2}, {Sign::Plus, Sign::Plus, Sign::Plus});
  const SetSystem d = ribbon_delta_matroid(chain);
  CHECK(d == make_set_system(3, {0x0, 0x3, 0x6}));
  const auto chain_slid = chord_slide(chain, 0, 1, 1);
  CHECK(ribbon_delta_matroid(chain_slid) == slide(d, 0, 1));
  CHECK(slide(d, 0, 1) != d);
  // Sliding back, from whichever end of a now sits next to b.
  int back = 0;
  for (int end = 0; end < 2; ++end) {
    try {
      CHECK(ribbon_delta_matroid(chord_slide(chain_slid, 0, 1, end)) == d);
      ++back;
    } catch (const Error&) {
    }
  }
  CHECK(back > 0);

  const auto twisted = diagram({0, 1, 0, 1}, {Sign::Plus, Sign::Minus});
  CHECK(chord_slide(twisted, 0, 1, 0).sign(0) == Sign::Minus);
  CHECK(chord_slide(crossing, 0, 1, 0).sign(0) == Sign::Plus);

  try {
    (void)chord_slide(diagram({0, 0, 1, 1, 2, 2}, {Sign::Plus, Sign::Plus, Sign::Plus}), 0, 2, 1);
    FAIL("non-adjacent slide accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAdjacent);
  }
}

TEST_CASE("chord slide realizes the set-system slide") {
  for (int n = 2; n <= 4; ++n) {
    for (const auto& c : fixtures::chord_diagrams(n)) {
      const SetSystem d = ribbon_delta_matroid(c);
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          if (a == b) continue;
          for (int end = 0; end < 2; ++end) {
            try {
              const ChordDiagram slid = chord_slide(c, a, b, end);
              CHECK(ribbon_delta_matroid(slid) == slide(d, a, b));
              CHECK(intersection_graph(slid) == graph_slide(intersection_graph(c), a, b));
            } catch (const Error& e) {
              CHECK(e.kind() == ErrorKind::NotAdjacent);
            }
          }
        }
      }
    }
  }
}
