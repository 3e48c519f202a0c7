#include <doctest.h>

#include <set>

#include "dimer/diagonals.hpp"
#include "util.hpp"

using namespace dimer;

namespace {

CheckerboardPolygon polygon(const char* f) {
  Quiver q = load_quiver(f);
  return CheckerboardPolygon(q, dual_graph(q));
}

}  // namespace

TEST_SUITE("diagonals") {
TEST_CASE("count N(N-2)") {
  for (const char* f : {"hexagon.quiver", "square.quiver", "tri_quad.quiver", "dodecagon.quiver", "thirteen.quiver"}) {
    CheckerboardPolygon P = polygon(f);
    const int N = P.half();
    auto ds = enumerate_diagonals(P);
    CHECK_MESSAGE(int(ds.size()) == N * (N - 2), f);
    for (const auto& d : ds) {
      CHECK(P.sign(d.a) == -1);
      CHECK(P.sign(d.b) == 1);
      CHECK(is_two_diagonal(P, d.a, d.b));
    }
  }
}

TEST_CASE("rotation") {
  CheckerboardPolygon P = polygon("dodecagon.quiver");
  const int n = P.size();
  for (const auto& d : enumerate_diagonals(P)) {
    TwoDiagonal r = rotate(P, d);
    CHECK(rotate(P, r, -1) == d);
    CHECK(rotate(P, d, n) == d);
    // one step clockwise swaps the signs of the endpoints
    CHECK(r.a == (d.b + 1) % n);
    CHECK(r.b == (d.a + 1) % n);
    CHECK(is_diameter(P, d) == is_diameter(P, r));
  }
  // radical lines rotate to radical lines around the orbit of rad P(4)
  TwoDiagonal d = radical_diagonal(P, P.quiver().vertex_index("4"));
  CHECK(radical_diagonal(P, radical_vertex(P, d)) == d);
  CHECK(parse_diagonal(P, "5-8") == parse_diagonal(P, "8-5"));
  CHECK_THROWS(make_diagonal(P, 0, 2));
}

TEST_CASE("hexagon diagonals are diameters") {
  CheckerboardPolygon P = polygon("hexagon.quiver");
  auto ds = enumerate_diagonals(P);
  REQUIRE(ds.size() == 3);
  for (const auto& d : ds) {
    CHECK(is_diameter(P, d));
    CHECK(radical_vertex(P, d) >= 0);
    CHECK(pivots(P, d).empty());
  }
}

TEST_CASE("representatives cross the separating lines once") {
  CheckerboardPolygon P = polygon("thirteen.quiver");
  for (const auto& d : enumerate_diagonals(P)) {
    auto lines = crossed_lines(P, d);
    auto reps = all_representatives(P, d);
    REQUIRE_FALSE(reps.empty());
    for (const auto& r : reps) {
      std::multiset<int> a(r.order.begin(), r.order.end()), b(lines.begin(), lines.end());
      CHECK(a == b);
      int count = 0;
      for (const auto& e : r.sequence.entries) count += e.is_pair() ? 2 : 1;
      CHECK(count == int(lines.size()));
    }
    CHECK(canonical_representative(P, d).faces == reps.front().faces);
  }
}

TEST_CASE("crossings of diagonals") {
  CheckerboardPolygon P = polygon("dodecagon.quiver");
  auto ds = enumerate_diagonals(P);
  for (const auto& d : ds) {
    CHECK(crossing_count(P, d, d) == 0);
    for (const auto& e : ds) CHECK(crossing_count(P, d, e) == crossing_count(P, e, d));
  }
}

TEST_CASE("translation quiver") {
  for (const char* f : {"square.quiver", "dodecagon.quiver", "thirteen.quiver"}) {
    CheckerboardPolygon P = polygon(f);
    TranslationQuiver t = build_translation_quiver(P);
    CHECK(int(t.vertices.size()) == P.half() * (P.half() - 2));
    CHECK(t.mesh_condition());
    for (size_t v = 0; v < t.vertices.size(); ++v) CHECK(t.vertices[t.translation[v]] == rotate(P, t.vertices[v], -2));
    for (auto [a, b] : t.arrows) {
      bool pivot = false;
      for (const auto& p : pivots(P, t.vertices[a])) pivot = pivot || p.target == t.vertices[b];
      CHECK(pivot);
    }
  }
  CHECK(build_translation_quiver(polygon("hexagon.quiver")).arrows.empty());
}
}
