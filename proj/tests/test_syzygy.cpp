#include <doctest.h>

#include "dimer/syzygy.hpp"
#include "util.hpp"

using namespace dimer;

TEST_SUITE("syzygy") {
TEST_CASE("step words") {
  auto w = parse_step_word("T0T0T0R0T1R1R0R1");
  REQUIRE(w.size() == 8);
  CHECK(step_word(w) == "T0T0T0R0T1R1R0R1");
  CHECK(staircase_from_steps(w).t == std::vector<int>{1, 5, 6, 8, 9});
  CHECK_THROWS(parse_step_word("T2"));
}

TEST_CASE("staircase pattern") {
  StaircaseProfile p = staircase_from_steps(parse_step_word("T0T0T0R0T1R1R0R1"));
  auto pat = staircase_pattern(p, 9);
  REQUIRE(pat.size() == 9);
  for (int s = 0; s < 9; ++s) CHECK(pat[s][s]);
  CHECK_FALSE(pat[8][0]);
}

TEST_CASE("presentations are exact against the rotation") {
  for (const char* f : {"hexagon.quiver", "square.quiver", "thirteen.quiver"}) {
    DimerModel m(load_quiver(f));
    const Algebra& B = m.algebra();
    for (const auto& d : m.diagonals()) {
      CompatiblePair c = choose_compatible(m, d);
      CHECK_MESSAGE(c.exact.ok(), f, " ", diagonal_name(d), " ", c.exact.witness);
      PathMatrix fx = build_f(m, c.x);
      PathMatrix fy = build_f(m, c.y);
      CHECK(path_matrix_equal(bar(bar(fx)), fx));
      CHECK(is_iso(m.quiver(), m.module(rotate(m.polygon(), d)), syzygy(B, m.module(d))));
    }
  }
}

TEST_CASE("syzygies are indecomposable and non-projective") {
  DimerModel m(load_quiver("thirteen.quiver"));
  for (const auto& d : m.diagonals()) {
    const ModuleRep& M = m.module(d);
    CHECK(is_indecomposable(m.quiver(), M));
    CHECK_FALSE(is_projective(m.algebra(), M));
    CHECK(is_cmp(m.algebra(), M));
  }
  DimerModel s(load_quiver("square.quiver"));
  for (size_t i = 0; i < s.diagonals().size(); ++i)
    for (size_t j = i + 1; j < s.diagonals().size(); ++j)
      CHECK_FALSE(is_iso(s.quiver(), s.module(s.diagonals()[i]), s.module(s.diagonals()[j])));
}

TEST_CASE("radical lines give radicals of projectives") {
  for (const char* f : {"hexagon.quiver", "square.quiver", "thirteen.quiver"}) {
    DimerModel m(load_quiver(f));
    for (int i = 0; i < m.quiver().num_vertices(); ++i) CHECK(radical_correspondence(m, i));
  }
}

TEST_CASE("resolution of rad P(3) in the 13-vertex example") {
  DimerModel m(load_quiver("thirteen.quiver"));
  const int three = m.quiver().vertex_index("3");
  TwoDiagonal d = radical_diagonal(m.polygon(), three);
  ProjectiveResolution r = resolution(m, d, 24);
  CHECK(r.ok());
  CHECK(rotate(m.polygon(), d, 24) == d);
  CHECK(is_iso(m.quiver(), r.syzygies.front(), radical(m.algebra(), three)));
  CHECK(is_iso(m.quiver(), r.syzygies.back(), r.syzygies.front()));
}

TEST_CASE("entry labels") {
  DimerModel m(load_quiver("thirteen.quiver"));
  TwoDiagonal d = radical_diagonal(m.polygon(), m.quiver().vertex_index("3"));
  PathMatrix f = build_f(m, m.representatives(d).front());
  int arrows = 0;
  for (size_t s = 0; s < f.rows.size(); ++s)
    for (size_t t = 0; t < f.cols.size(); ++t)
      if (f.entry_nonzero(int(s), int(t))) arrows += entry_label(m.algebra(), f, int(s), int(t)).find("->") != std::string::npos;
  CHECK(arrows > 0);
}

TEST_CASE("outside theorem scope") {
  DimerModel m(load_quiver("tri_quad.quiver"));
  CHECK_FALSE(m.theorem_scope());
  CHECK_THROWS_AS(build_f(m, m.representatives(m.diagonals().front()).front()), ConjectureModeError);
}

TEST_CASE("AR structure") {
  for (const char* f : {"square.quiver", "thirteen.quiver"}) {
    DimerModel m(load_quiver(f));
    ArQuiverCheck a = build_ar_quiver(m);
    CHECK(a.pairwise_distinct);
    CHECK(a.ext_dimension_one);
    CHECK(a.middle_terms_match);
    CHECK(a.translation_matches);
    CHECK(a.isomorphic);
  }
}
}
