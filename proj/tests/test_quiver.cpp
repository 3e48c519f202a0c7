#include <doctest.h>

#include <algorithm>

#include "dimer/quiver.hpp"
#include "util.hpp"

using namespace dimer;

namespace {

bool has_rule(const ValidationReport& r, const std::string& rule) {
  return std::any_of(r.violations.begin(), r.violations.end(), [&](const Violation& v) { return v.rule == rule; });
}

}  // namespace

TEST_SUITE("quiver") {
TEST_CASE("natural order") {
  CHECK(natural_less("2", "10"));
  CHECK_FALSE(natural_less("10", "2"));
  CHECK(natural_less("9", "a"));
  CHECK(natural_less("a", "b"));
  Quiver q = parse_quiver("vertex 10\nvertex 2\nvertex x\narrow a 10 2\n");
  CHECK(q.vertices() == std::vector<std::string>{"2", "10", "x"});
  CHECK(q.vertex(q.arrow(0).src) == "10");
  CHECK(q.vertex(q.arrow(0).tgt) == "2");
}

TEST_CASE("line and JSON formats agree") {
  Quiver a = load_quiver("tri_quad.quiver");
  Quiver b = parse_quiver(quiver_to_json(a));
  CHECK(format_quiver(a) == format_quiver(b));
  Quiver c = parse_quiver(R"({"vertices":[1,2,3],"arrows":[{"id":"x","from":1,"to":2,"label":"alpha"}]})");
  CHECK(c.num_arrows() == 1);
  CHECK(c.arrow_name(0) == "alpha");
}

TEST_CASE("parse errors carry the line") {
  try {
    parse_quiver("vertex 1\narrow a 1 2\n");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
  CHECK_THROWS_AS(parse_quiver("vertex 1\nvertex 1\n"), ParseError);
  CHECK_THROWS_AS(parse_quiver("edge 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_quiver("{\"vertices\": [1]"), ParseError);
}

TEST_CASE("chordless cycles of the 5-vertex example") {
  Quiver q = load_quiver("tri_quad.quiver");
  auto cs = chordless_cycles(q);
  REQUIRE(cs.size() == 2);
  std::vector<int> lengths = {cs[0].length(), cs[1].length()};
  std::sort(lengths.begin(), lengths.end());
  CHECK(lengths == std::vector<int>{3, 4});
  auto kinds = classify_arrows(q, cs);
  int interior = int(std::count(kinds.begin(), kinds.end(), ArrowKind::interior));
  CHECK(interior == 1);
  CHECK(kinds[q.arrow_index("b")] == ArrowKind::interior);
}

TEST_CASE("dual graph is a tree") {
  for (const char* f : {"hexagon.quiver", "square.quiver", "tri_quad.quiver", "dodecagon.quiver", "thirteen.quiver"}) {
    Quiver q = load_quiver(f);
    DualGraph g = dual_graph(q);
    CHECK(g.is_tree);
    CHECK(int(g.trunk.size()) == int(g.cycles.size()) - 1);
    CHECK(g.order[0] == g.root);
  }
}

TEST_CASE("validation") {
  ValidationReport ok = validate_dimer_tree(load_quiver("thirteen.quiver"));
  CHECK(ok.ok);
  CHECK(ok.theorem_scope);
  ValidationReport sq = validate_dimer_tree(load_quiver("square.quiver"));
  CHECK(sq.ok);
  CHECK(sq.theorem_scope);
  ValidationReport four = validate_dimer_tree(load_quiver("tri_quad.quiver"));
  CHECK(four.ok);
  CHECK_FALSE(four.theorem_scope);

  CHECK(has_rule(validate_dimer_tree(load_quiver("loop.quiver")), "loop"));
  Quiver stray = parse_quiver("vertex 1\nvertex 2\nvertex 3\nvertex 4\narrow a 1 2\narrow b 2 3\narrow c 3 1\narrow d 3 4\n");
  CHECK(has_rule(validate_dimer_tree(stray), "Q1"));
  Quiver par = parse_quiver("vertex 1\nvertex 2\nvertex 3\narrow a 1 2\narrow b 1 2\narrow c 2 3\narrow d 3 1\n");
  CHECK(has_rule(validate_dimer_tree(par), "parallel"));
  CHECK_THROWS_AS(validated_dual_graph(load_quiver("loop.quiver")), DomainError);
}
}
