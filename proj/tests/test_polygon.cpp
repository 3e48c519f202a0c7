#include <doctest.h>

#include <map>
#include <set>

#include "dimer/polygon.hpp"
#include "util.hpp"

using namespace dimer;

TEST_SUITE("polygon") {
TEST_CASE("sizes") {
  const std::vector<std::pair<const char*, int>> want = {
      {"hexagon.quiver", 6}, {"square.quiver", 6}, {"tri_quad.quiver", 8}, {"dodecagon.quiver", 12}, {"thirteen.quiver", 24}};
  for (auto [file, size] : want) {
    Quiver q = load_quiver(file);
    DualGraph g = dual_graph(q);
    CheckerboardPolygon P(q, g);
    CHECK_MESSAGE(P.size() == size, file);
    CHECK(boundary_size_by_weights(q, g) == size);
    CHECK(int(P.lines().size()) == q.num_vertices());
  }
}

TEST_CASE("weights in the 12-gon example") {
  Quiver q = load_quiver("dodecagon.quiver");
  DualGraph g = dual_graph(q);
  std::map<std::string, int> w;
  for (const auto& r : all_white_region_paths(q, g)) w[q.arrow(r.arrow).id] = r.weight;
  std::map<std::string, int> want = {{"1", 1}, {"2", 1}, {"3", 2}, {"4", 2}, {"5", 2}, {"6", 1}, {"7", 1}, {"8", 2}};
  CHECK(w == want);
}

TEST_CASE("radical lines of the 12-gon example") {
  Quiver q = load_quiver("dodecagon.quiver");
  CheckerboardPolygon P(q, dual_graph(q));
  const std::map<std::string, std::pair<int, int>> want = {
      {"1", {0, 3}}, {"2", {10, 1}}, {"3", {6, 11}}, {"4", {8, 5}},
      {"5", {4, 1}}, {"6", {2, 11}}, {"7", {0, 9}}, {"8", {10, 7}}};
  for (const auto& L : P.lines()) {
    auto [m, p] = want.at(q.vertex(L.vertex));
    CHECK(L.minus == m);
    CHECK(L.plus == p);
    CHECK(P.sign(L.minus) == -1);
    CHECK(P.sign(L.plus) == 1);
  }
}

TEST_CASE("lines cross exactly at arrows") {
  for (const char* f : {"tri_quad.quiver", "dodecagon.quiver", "thirteen.quiver"}) {
    Quiver q = load_quiver(f);
    CheckerboardPolygon P(q, dual_graph(q));
    std::set<std::pair<int, int>> seen;
    for (const auto& L : P.lines())
      for (const auto& c : L.crossings) {
        const Arrow& a = q.arrow(c.arrow);
        bool ends = (a.src == L.vertex && a.tgt == c.other_line) || (a.tgt == L.vertex && a.src == c.other_line);
        CHECK(ends);
        seen.insert({std::min(L.vertex, c.other_line), std::max(L.vertex, c.other_line)});
      }
    CHECK(int(seen.size()) == q.num_arrows());
  }
}

TEST_CASE("every boundary vertex ends one or two lines") {
  Quiver q = load_quiver("thirteen.quiver");
  CheckerboardPolygon P(q, dual_graph(q));
  std::vector<int> ends(P.size(), 0);
  for (const auto& L : P.lines()) {
    ends[L.minus]++;
    ends[L.plus]++;
  }
  int ones = 0, twos = 0;
  for (int e : ends) (e == 1 ? ones : twos)++;
  CHECK(ones + twos == P.size());
  for (int e : ends) CHECK((e == 1 || e == 2));
  for (int k = 0; k < P.size(); ++k) CHECK(P.sign(k) == (k % 2 == 0 ? -1 : 1));
}

TEST_CASE("faces") {
  Quiver q = load_quiver("dodecagon.quiver");
  DualGraph g = dual_graph(q);
  CheckerboardPolygon P(q, g);
  int white = 0;
  for (const auto& f : P.faces()) white += f.kind == CheckerboardPolygon::FaceKind::white;
  CHECK(white == int(g.boundary_arrows.size()));
  for (int a : g.boundary_arrows) CHECK(P.arrow_of_white_face(P.white_face_of_arrow(a)) == a);
}
}
