#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "wheelrb/errors.hpp"
#include "wheelrb/graph.hpp"

using namespace wheelrb;

TEST_CASE("sizes of W_d(s)") {
  WheelGraph g(8, 3);
  CHECK(g.vertex_count() == 11);
  CHECK(g.edge_count() == 32);
  CHECK(g.spoke_count() == 24);
}

TEST_CASE("W_3 is K_4") {
  WheelGraph g(3, 1);
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      if (x != y) CHECK(g.edge_between(x, y) != 0);
}

TEST_CASE("degenerate parameters are rejected") {
  CHECK_THROWS_AS(WheelGraph(2, 1), ParameterError);
  CHECK_THROWS_AS(WheelGraph(5, 0), ParameterError);
  CHECK_THROWS_AS(build_wheel(-1, 2), ParameterError);
}

TEST_CASE("incident edges") {
  WheelGraph g(8, 3);
  auto hub = g.incident_edges(Vertex::hub(1));
  REQUIRE(hub.size() == 8);
  for (int i = 1; i <= 8; ++i) CHECK(hub[i - 1] == EdgeId::spoke(1, i));

  auto v1 = g.incident_edges(Vertex::boundary(1));
  std::set<EdgeId> got(v1.begin(), v1.end());
  std::set<EdgeId> want{EdgeId::rim(8), EdgeId::rim(1), EdgeId::spoke(1, 1), EdgeId::spoke(2, 1),
                        EdgeId::spoke(3, 1)};
  CHECK(got == want);

  CHECK(WheelGraph(5, 1).incident_edges(Vertex::boundary(3)).size() == 3);
}

TEST_CASE("linear ids follow spoke (a-1)d+i, rim sd+i") {
  WheelGraph g(7, 2);
  CHECK(g.linearize(EdgeId::spoke(1, 1)) == 1);
  CHECK(g.linearize(EdgeId::spoke(2, 3)) == 10);
  CHECK(g.linearize(EdgeId::rim(1)) == 15);
  CHECK(g.linearize(EdgeId::rim(7)) == 21);
  CHECK(g.unlinearize(21) == EdgeId::rim(7));
  CHECK_THROWS_AS(g.unlinearize(0), LookupError);
  CHECK_THROWS_AS(g.unlinearize(22), LookupError);
  CHECK_THROWS_AS(g.linearize(EdgeId::spoke(3, 1)), LookupError);
  CHECK_THROWS_AS(g.linearize(EdgeId::rim(8)), LookupError);
}

TEST_CASE("rim(d) closes the cycle") {
  WheelGraph g(6, 1);
  auto [x, y] = g.endpoints(g.linearize(EdgeId::rim(6)));
  CHECK(g.vertex_at(x) == Vertex::boundary(6));
  CHECK(g.vertex_at(y) == Vertex::boundary(1));
}

TEST_CASE("wrap reduces boundary indices mod d") {
  WheelGraph g(5, 1);
  CHECK(g.wrap(0) == 5);
  CHECK(g.wrap(6) == 1);
  CHECK(g.wrap(-4) == 1);
  CHECK(g.wrap(10) == 5);
}

TEST_CASE("property: structure over a grid of (d, s)") {
  for (int d = 3; d <= 14; ++d)
    for (int s = 1; s <= 4; ++s) {
      CAPTURE(d);
      CAPTURE(s);
      WheelGraph g(d, s);
      oracle::Host h(d, s);

      // round trip and bijection onto [1, (s+1)d]
      std::set<EdgeId> seen;
      for (int id = 1; id <= g.edge_count(); ++id) {
        EdgeId e = g.unlinearize(id);
        CHECK(g.linearize(e) == id);
        seen.insert(e);
      }
      CHECK(seen.size() == static_cast<size_t>(g.edge_count()));

      // adjacency agrees with an independent construction
      for (int x = 0; x < g.vertex_count(); ++x)
        for (int y = 0; y < g.vertex_count(); ++y) CHECK(g.edge_between(x, y) == h.id[x][y]);

      int degree_sum = 0;
      for (int v = 0; v < g.vertex_count(); ++v) {
        Vertex vx = g.vertex_at(v);
        CHECK(g.vertex_id(vx) == v);
        int deg = g.degree(vx);
        CHECK(deg == static_cast<int>(g.neighbors(v).size()));
        CHECK(deg == static_cast<int>(g.incident_edges(vx).size()));
        CHECK(deg == (vx.is_hub() ? d : s + 2));
        degree_sum += deg;
      }
      CHECK(degree_sum == 2 * (s + 1) * d);

      // hubs are pairwise non-adjacent
      for (int a = 0; a < s; ++a)
        for (int b = 0; b < s; ++b) CHECK(g.edge_between(a, b) == 0);
    }
}

TEST_CASE("names") {
  CHECK(to_string(EdgeId::spoke(2, 5)) == "spoke(2,5)");
  CHECK(to_string(EdgeId::rim(3)) == "rim(3)");
  CHECK(to_string(Vertex::hub(1)) == "u1");
}
