#include "catch_amalgamated.hpp"
#include "dmv/catalog.hpp"
#include "dmv/framed_graph.hpp"
#include "dmv/moves.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace dmv;

namespace {

FramedGraph path3() { return fixtures::framed_graph({{0, 1, 0}, {1, 0, 1}, {0, 1, 0}}); }

}  // namespace

TEST_CASE("nondegeneracy delta-matroid examples") {
  CHECK(nondeg_delta_matroid(fixtures::framed_graph({{0}})) == named("s11"));
  CHECK(nondeg_delta_matroid(fixtures::framed_graph({{1}})) == named("s12"));
  CHECK(nondeg_delta_matroid(path3()) == make_set_system(3, {0x0, 0x3, 0x6}));
  CHECK(nondeg_delta_matroid(FramedGraph::empty(0)) == unit_system());
}

TEST_CASE("nondegeneracy delta-matroids match principal minors and are binary") {
  for (int n = 1; n <= 4; ++n) {
    for (std::uint32_t code = 0; code < oracle::framed_matrix_count(n); ++code) {
      const auto m = oracle::framed_matrix(n, code);
      const SetSystem d = nondeg_delta_matroid(fixtures::framed_graph(m));
      CHECK(fixtures::family(d) == oracle::nondegenerate_subsets(m));
      CHECK(is_delta_matroid(d));
      const auto w = recognize_binary(d);
      REQUIRE(w.has_value());
      CHECK(w->twist_set == 0);
      CHECK(w->matrix == fixtures::framed_graph(m));

      bool unframed = true;
      for (int v = 0; v < n; ++v) unframed = unframed && m[v][v] == 0;
      CHECK(is_even(d) == unframed);
    }
  }
}

TEST_CASE("graph slide examples") {
  const FramedGraph triangle = fixtures::framed_graph({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  CHECK(graph_slide(path3(), 0, 1) == triangle);
  CHECK(graph_slide(graph_slide(path3(), 0, 1), 0, 1) == path3());
  CHECK(graph_slide(FramedGraph::empty(2), 0, 1) == FramedGraph::empty(2));
  // A framed b toggles the edge (a, b) and the framing of a.
  CHECK(graph_slide(fixtures::framed_graph({{0, 0}, {0, 1}}), 0, 1) == fixtures::framed_graph({{1, 1}, {1, 1}}));
  CHECK_THROWS_AS(graph_slide(path3(), 1, 1), Error);
}

TEST_CASE("graph slide is the basis change a to a + b") {
  for (int n = 2; n <= 4; ++n) {
    for (std::uint32_t code = 0; code < oracle::framed_matrix_count(n); ++code) {
      const auto m = oracle::framed_matrix(n, code);
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          if (a == b) continue;
          // P^T M P, where column a of P is e_a + e_b.
          auto p = [&](int k, int i) { return (k == i || (i == a && k == b)) ? 1 : 0; };
          oracle::Matrix expected(n, std::vector<int>(n, 0));
          for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
              for (int k = 0; k < n; ++k) {
                for (int l = 0; l < n; ++l) expected[i][j] ^= p(k, i) & m[k][l] & p(l, j);
              }
            }
          }
          CHECK(graph_slide(fixtures::framed_graph(m), a, b) == fixtures::framed_graph(expected));
        }
      }
    }
  }
}

TEST_CASE("graph slide commutes with the set-system slide") {
  for (int n = 2; n <= 4; ++n) {
    for (std::uint32_t code = 0; code < oracle::framed_matrix_count(n); ++code) {
      const FramedGraph g = fixtures::framed_graph(oracle::framed_matrix(n, code));
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          if (a != b) CHECK(nondeg_delta_matroid(graph_slide(g, a, b)) == slide(nondeg_delta_matroid(g), a, b));
        }
      }
    }
  }
}

TEST_CASE("binary recognition examples") {
  const auto s23 = recognize_binary(named("s23"));
  REQUIRE(s23.has_value());
  CHECK(s23->twist_set == 0);
  CHECK(s23->matrix == fixtures::framed_graph({{1, 1}, {1, 1}}));

  const auto s25 = recognize_binary(named("s25"));
  REQUIRE(s25.has_value());
  CHECK(s25->twist_set == 0x1);
  CHECK(s25->matrix == fixtures::framed_graph({{0, 1}, {1, 1}}));

  // Regression value: the recognizer rejects the slide output of the
  // three-element example.
  CHECK_FALSE(is_binary(make_set_system(3, {0x0, 0x3, 0x6, 0x7})));
  CHECK_FALSE(is_binary(make_set_system(3, {0x0, 0x7})));

  for (const auto& entry : named_catalog()) CHECK(is_binary(entry.system));
}

TEST_CASE("binary recognition does not depend on the chosen feasible set") {
  // Every proper family on three elements, plus all binary systems on four.
  for (std::uint32_t fam = 1; fam < (1U << 8); ++fam) {
    std::vector<Mask> masks;
    for (Mask m = 0; m < 8; ++m) {
      if ((fam >> m) & 1U) masks.push_back(m);
    }
    const SetSystem s(3, masks);
    const bool verdict = is_binary(s);
    for (Mask t : s.feasible()) CHECK(recognize_binary(s, t).has_value() == verdict);
    if (verdict) CHECK(is_delta_matroid(s));
  }
  for (const auto& s : fixtures::binary_systems(4)) {
    for (Mask t : s.feasible()) {
      const auto w = recognize_binary(s, t);
      REQUIRE(w.has_value());
      CHECK(twist(nondeg_delta_matroid(w->matrix), w->twist_set) == s);
    }
  }
}
