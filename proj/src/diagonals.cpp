#include "dimer/diagonals.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace dimer {

std::string diagonal_name(const TwoDiagonal& d) { return std::to_string(d.a) + "-" + std::to_string(d.b); }

bool is_two_diagonal(const CheckerboardPolygon& P, int x, int y) {
  const int n = P.size();
  if (x < 0 || y < 0 || x >= n || y >= n) return false;
  int d = cw_distance(x, y, n);
  return d % 2 == 1 && d >= 3 && d <= n - 3;
}

TwoDiagonal make_diagonal(const CheckerboardPolygon& P, int x, int y) {
  if (!is_two_diagonal(P, x, y))
    throw DomainError(std::to_string(x) + "-" + std::to_string(y) + " is not a 2-diagonal");
  return P.sign(x) < 0 ? TwoDiagonal{x, y} : TwoDiagonal{y, x};
}

TwoDiagonal parse_diagonal(const CheckerboardPolygon& P, const std::string& s) {
  auto dash = s.find('-');
  if (dash == std::string::npos || dash == 0 || dash + 1 == s.size())
    throw ParseError("diagonal must be written a-b", 0);
  int x, y;
  try {
    size_t u, v;
    x = std::stoi(s.substr(0, dash), &u);
    y = std::stoi(s.substr(dash + 1), &v);
    if (u != dash || v != s.size() - dash - 1) throw std::invalid_argument(s);
  } catch (const std::exception&) {
    throw ParseError("diagonal must be written a-b", 0);
  }
  return make_diagonal(P, x, y);
}

std::vector<TwoDiagonal> enumerate_diagonals(const CheckerboardPolygon& P) {
  std::vector<TwoDiagonal> out;
  const int n = P.size();
  for (int a = 0; a < n; ++a) {
    if (P.sign(a) > 0) continue;
    for (int d = 3; d <= n - 3; d += 2) out.push_back({a, (a + d) % n});
  }
  std::sort(out.begin(), out.end());
  return out;
}

TwoDiagonal rotate(const CheckerboardPolygon& P, const TwoDiagonal& d, int k) {
  const int n = P.size();
  int x = ((d.a + k) % n + n) % n, y = ((d.b + k) % n + n) % n;
  return make_diagonal(P, x, y);
}

bool is_diameter(const CheckerboardPolygon& P, const TwoDiagonal& d) {
  return cw_distance(d.a, d.b, P.size()) == P.half();
}

bool is_short(const CheckerboardPolygon& P, const TwoDiagonal& d) {
  int k = cw_distance(d.a, d.b, P.size());
  return k == 3 || k == P.size() - 3;
}

TwoDiagonal radical_diagonal(const CheckerboardPolygon& P, int vertex) {
  const auto& L = P.line(vertex);
  return make_diagonal(P, L.minus, L.plus);
}

int radical_vertex(const CheckerboardPolygon& P, const TwoDiagonal& d) {
  for (const auto& L : P.lines())
    if (L.minus == d.a && L.plus == d.b) return L.vertex;
  return -1;
}

std::vector<Pivot> pivots(const CheckerboardPolygon& P, const TwoDiagonal& d) {
  // Each endpoint in turn stays fixed while the other moves two steps clockwise.
  std::vector<Pivot> out;
  for (auto [fixed, moving] : {std::pair{d.a, d.b}, std::pair{d.b, d.a}}) {
    int z = (moving + 2) % P.size();
    if (is_two_diagonal(P, fixed, z)) out.push_back({make_diagonal(P, fixed, z), fixed});
  }
  return out;
}

namespace {

bool separates(int p, int q, const TwoDiagonal& d, int n) {
  if (p == d.a || p == d.b || q == d.a || q == d.b) return false;
  return in_open_cw_arc(p, d.a, d.b, n) != in_open_cw_arc(q, d.a, d.b, n);
}

bool is_shaded(const CheckerboardPolygon& P, int f) {
  auto k = P.faces()[f].kind;
  return k == CheckerboardPolygon::FaceKind::shaded_cycle || k == CheckerboardPolygon::FaceKind::shaded_arrow;
}

CrossingSequence build_sequence(const CheckerboardPolygon& P, const TwoDiagonal& d,
                                const std::vector<int>& faces, const std::vector<int>& order) {
  const Quiver& q = P.quiver();
  const DualGraph& g = P.dual();
  CrossingSequence cs;
  const int m = int(order.size());
  auto single = [&](int line, int face) {
    CrossingEntry e;
    (crossing_degree(P, line, d) == 0 ? e.i : e.j) = line;
    e.face = face;
    return e;
  };
  if (m > 0 && is_shaded(P, faces[0])) cs.entries.push_back(single(order[0], faces[0]));
  for (int k = 1; k < m; ++k) {
    if (!is_shaded(P, faces[k])) continue;
    int x = order[k - 1], y = order[k];
    int dx = crossing_degree(P, x, d), dy = crossing_degree(P, y, d);
    if (dx == dy) throw DomainError("a shaded region is crossed twice in the same degree");
    CrossingEntry e;
    e.i = dx == 0 ? x : y;
    e.j = dx == 0 ? y : x;
    e.face = faces[k];
    const auto& F = P.faces()[faces[k]];
    if (F.kind == CheckerboardPolygon::FaceKind::shaded_cycle) {
      e.cycle = F.ref;
      for (int a : g.cycles[F.ref].arrows) {
        const Arrow& A = q.arrow(a);
        if ((A.src == e.i && A.tgt == e.j) || (A.src == e.j && A.tgt == e.i)) e.arrow = a;
      }
    } else {
      e.arrow = F.ref;
      e.cycle = g.arrow_cycles[F.ref][0];
    }
    // opposite sides of a longer cycle are not joined by an arrow
    if (e.arrow < 0 && g.cycles[e.cycle].length() == 3)
      throw DomainError("crossing pair without a connecting arrow");
    if (g.cycles[e.cycle].length() == 3)
      for (int v : g.cycles[e.cycle].vertices(q))
        if (v != e.i && v != e.j) e.third = v;
    cs.entries.push_back(e);
  }
  if (m > 0 && is_shaded(P, faces[m])) cs.entries.push_back(single(order[m - 1], faces[m]));
  return cs;
}

}  // namespace

int crossing_count(const CheckerboardPolygon& P, const TwoDiagonal& d, const TwoDiagonal& e) {
  if (d == e) return 0;
  return separates(e.a, e.b, d, P.size()) ? 1 : 0;
}

std::vector<int> crossed_lines(const CheckerboardPolygon& P, const TwoDiagonal& d) {
  std::vector<int> out;
  for (const auto& L : P.lines())
    if (separates(L.minus, L.plus, d, P.size())) out.push_back(L.vertex);
  return out;
}

int crossing_degree(const CheckerboardPolygon& P, int vertex, const TwoDiagonal& d) {
  const auto& L = P.line(vertex);
  if (!separates(L.minus, L.plus, d, P.size()))
    throw DomainError("radical line " + P.quiver().vertex(vertex) + " does not cross " + diagonal_name(d));
  // walking from a to b the clockwise arc (a,b) lies on the left
  return in_open_cw_arc(L.plus, d.a, d.b, P.size()) ? 0 : 1;
}

std::vector<int> CrossingSequence::p0() const {
  std::vector<int> v;
  for (const auto& e : entries)
    if (e.i >= 0) v.push_back(e.i);
  return v;
}

std::vector<int> CrossingSequence::p1() const {
  std::vector<int> v;
  for (const auto& e : entries)
    if (e.j >= 0) v.push_back(e.j);
  return v;
}

std::string CrossingSequence::str(const Quiver& q) const {
  std::ostringstream os;
  for (size_t k = 0; k < entries.size(); ++k) {
    if (k) os << ",";
    const auto& e = entries[k];
    if (e.is_pair())
      os << "(" << q.vertex(e.i) << "," << q.vertex(e.j) << ")";
    else
      os << "(" << q.vertex(e.i >= 0 ? e.i : e.j) << ")";
  }
  return os.str();
}

std::vector<DiagRepresentative> all_representatives(const CheckerboardPolygon& P, const TwoDiagonal& d) {
  auto lines = crossed_lines(P, d);
  std::vector<int> bit(P.quiver().num_vertices(), -1);
  for (size_t k = 0; k < lines.size(); ++k) bit[lines[k]] = int(k);
  const unsigned full = (1u << lines.size()) - 1;
  auto end_faces = P.faces_at(d.b);
  std::set<int> ends(end_faces.begin(), end_faces.end());

  std::vector<DiagRepresentative> out;
  std::vector<int> faces, order;
  std::function<void(int, unsigned)> dfs = [&](int f, unsigned mask) {
    if (mask == full) {
      if (ends.count(f)) {
        DiagRepresentative r;
        r.diagonal = d;
        r.faces = faces;
        r.order = order;
        out.push_back(r);
      }
      return;
    }
    for (int m : P.faces()[f].edges) {
      const auto& e = P.edges()[m];
      if (e.label < 0 || bit[e.label] < 0 || (mask >> bit[e.label] & 1u)) continue;
      int h = e.face_left == f ? e.face_right : e.face_left;
      if (P.faces()[h].kind == CheckerboardPolygon::FaceKind::outer) continue;
      faces.push_back(h);
      order.push_back(e.label);
      dfs(h, mask | 1u << bit[e.label]);
      faces.pop_back();
      order.pop_back();
    }
  };
  for (int f : P.faces_at(d.a)) {
    faces = {f};
    order.clear();
    dfs(f, 0);
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.faces < y.faces; });
  out.erase(std::unique(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.faces == y.faces; }),
            out.end());
  for (auto& r : out) r.sequence = build_sequence(P, d, r.faces, r.order);
  // Face paths differing only inside a region give the same sequence; keep the least.
  std::set<std::vector<std::pair<int, int>>> seen;
  std::vector<DiagRepresentative> kept;
  for (auto& r : out) {
    std::vector<std::pair<int, int>> key;
    for (const auto& e : r.sequence.entries) key.push_back({e.i, e.j});
    if (seen.insert(key).second) kept.push_back(std::move(r));
  }
  out = std::move(kept);
  if (out.empty()) throw DomainError("no representative found for " + diagonal_name(d));
  return out;
}

DiagRepresentative canonical_representative(const CheckerboardPolygon& P, const TwoDiagonal& d) {
  return all_representatives(P, d).front();
}

namespace {

std::vector<std::pair<int, int>> entry_keys(const CrossingSequence& s) {
  std::vector<std::pair<int, int>> v;
  for (const auto& e : s.entries) v.push_back({e.i, e.j});
  return v;
}

}  // namespace

std::vector<DiagRepresentative> elementary_homotopies(const CheckerboardPolygon& P, const DiagRepresentative& r) {
  std::vector<DiagRepresentative> out;
  auto base = entry_keys(r.sequence);
  for (const auto& s : all_representatives(P, r.diagonal)) {
    auto k = entry_keys(s.sequence);
    if (k.size() != base.size() || k == base) continue;
    std::vector<size_t> diff;
    for (size_t t = 0; t < k.size(); ++t)
      if (k[t] != base[t]) diff.push_back(t);
    if (diff.size() == 2 && diff[1] == diff[0] + 1 && k[diff[0]] == base[diff[1]] && k[diff[1]] == base[diff[0]])
      out.push_back(s);
  }
  return out;
}

bool compatible(const CheckerboardPolygon& P, const DiagRepresentative& x, const DiagRepresentative& y) {
  int rx = radical_vertex(P, x.diagonal), ry = radical_vertex(P, y.diagonal);
  if (rx >= 0 && ry >= 0 && rotate(P, x.diagonal) == y.diagonal) return true;
  std::set<int> ycross(y.order.begin(), y.order.end());
  std::set<std::pair<int, int>> ypairs;
  for (const auto& e : y.sequence.entries)
    if (e.is_pair()) {
      ypairs.insert({e.i, e.j});
      ypairs.insert({e.j, e.i});
    }
  for (const auto& e : x.sequence.entries) {
    if (!e.is_pair() || !ycross.count(e.i) || !ycross.count(e.j)) continue;
    if (!ypairs.count({e.i, e.j})) return false;
  }
  return true;
}

int TranslationQuiver::index(const TwoDiagonal& d) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), d);
  return it != vertices.end() && *it == d ? int(it - vertices.begin()) : -1;
}

bool TranslationQuiver::mesh_condition() const {
  const int n = int(vertices.size());
  std::vector<std::multiset<int>> in(n), out(n);
  for (auto [s, t] : arrows) {
    out[s].insert(t);
    in[t].insert(s);
  }
  for (int x = 0; x < n; ++x)
    if (in[x] != out[translation[x]]) return false;
  return true;
}

TranslationQuiver build_translation_quiver(const CheckerboardPolygon& P) {
  TranslationQuiver T;
  T.vertices = enumerate_diagonals(P);
  for (int k = 0; k < int(T.vertices.size()); ++k) {
    for (const auto& p : pivots(P, T.vertices[k])) T.arrows.push_back({k, T.index(p.target)});
    T.translation.push_back(T.index(rotate(P, T.vertices[k], -2)));
  }
  std::sort(T.arrows.begin(), T.arrows.end());
  if (std::adjacent_find(T.arrows.begin(), T.arrows.end()) != T.arrows.end())
    throw DomainError("translation quiver has a multiple arrow");
  return T;
}

}  // namespace dimer
