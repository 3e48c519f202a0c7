#pragma once

#include <string>
#include <vector>

#include "dimer/polygon.hpp"

namespace dimer {

// Endpoints are stored with the (-) vertex first, so a diagonal is oriented a -> b.
struct TwoDiagonal {
  int a = -1, b = -1;
  bool operator==(const TwoDiagonal& o) const { return a == o.a && b == o.b; }
  bool operator<(const TwoDiagonal& o) const { return a != o.a ? a < o.a : b < o.b; }
};

std::string diagonal_name(const TwoDiagonal& d);  // "a-b"
// Parses "a-b" in either order; throws ParseError.
TwoDiagonal parse_diagonal(const CheckerboardPolygon& P, const std::string& s);
// Orders the endpoints; throws DomainError if they do not form a 2-diagonal.
TwoDiagonal make_diagonal(const CheckerboardPolygon& P, int x, int y);
bool is_two_diagonal(const CheckerboardPolygon& P, int x, int y);

std::vector<TwoDiagonal> enumerate_diagonals(const CheckerboardPolygon& P);
TwoDiagonal rotate(const CheckerboardPolygon& P, const TwoDiagonal& d, int k = 1);  // R^k, clockwise
bool is_diameter(const CheckerboardPolygon& P, const TwoDiagonal& d);
bool is_short(const CheckerboardPolygon& P, const TwoDiagonal& d);
TwoDiagonal radical_diagonal(const CheckerboardPolygon& P, int vertex);
int radical_vertex(const CheckerboardPolygon& P, const TwoDiagonal& d);  // -1 if none

struct Pivot {
  TwoDiagonal target;
  int fixed = -1;  // the endpoint kept in place
};
std::vector<Pivot> pivots(const CheckerboardPolygon& P, const TwoDiagonal& d);

// 1 if the chords cross in the interior, 0 otherwise (and for d == e).
int crossing_count(const CheckerboardPolygon& P, const TwoDiagonal& d, const TwoDiagonal& e);
// Radical lines separating the endpoints of d, i.e. the lines every
// representative must cross.
std::vector<int> crossed_lines(const CheckerboardPolygon& P, const TwoDiagonal& d);
// 0 if rho(i) crosses d from right to left, 1 otherwise.
int crossing_degree(const CheckerboardPolygon& P, int vertex, const TwoDiagonal& d);

// One entry of a crossing sequence: a pair (i, j), or a lone i or j at an end.
struct CrossingEntry {
  int i = -1, j = -1;  // degree 0 and degree 1 vertices
  int arrow = -1;      // arrow joining i and j (pairs only)
  int cycle = -1;      // chordless cycle traversed by the pair
  int third = -1;      // the remaining vertex of that cycle if it is a triangle
  int face = -1;       // shaded face of the pair
  bool is_pair() const { return i >= 0 && j >= 0; }
};

struct CrossingSequence {
  std::vector<CrossingEntry> entries;  // ordered from the (-) end
  std::vector<int> p0() const;  // i vertices in order
  std::vector<int> p1() const;  // j vertices in order
  std::string str(const Quiver& q) const;  // "(2,1),(3,4)" with lone entries as "(i)"
};

struct DiagRepresentative {
  TwoDiagonal diagonal;
  std::vector<int> faces;  // from a face at a to a face at b
  std::vector<int> order;  // radical lines in the order crossed
  CrossingSequence sequence;
};

// All face paths from a to b crossing exactly the separating lines, each once,
// sorted lexicographically by face ids.
std::vector<DiagRepresentative> all_representatives(const CheckerboardPolygon& P, const TwoDiagonal& d);
DiagRepresentative canonical_representative(const CheckerboardPolygon& P, const TwoDiagonal& d);
// Representatives of the same diagonal whose crossing sequences differ from
// r by one exchange of neighbouring entries.
std::vector<DiagRepresentative> elementary_homotopies(const CheckerboardPolygon& P,
                                                      const DiagRepresentative& r);

// Clause (a) of compatibility, or (b) when y is the rotation of x and both
// are radical lines.
bool compatible(const CheckerboardPolygon& P, const DiagRepresentative& x, const DiagRepresentative& y);

struct TranslationQuiver {
  std::vector<TwoDiagonal> vertices;
  std::vector<std::pair<int, int>> arrows;  // 2-pivots
  std::vector<int> translation;             // tau = R^-2, as vertex indices
  int index(const TwoDiagonal& d) const;
  // Every arrow into x corresponds to an arrow out of tau(x).
  bool mesh_condition() const;
};

TranslationQuiver build_translation_quiver(const CheckerboardPolygon& P);

}  // namespace dimer
