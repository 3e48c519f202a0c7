#include "dimer/polygon.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace dimer {

using NK = TwistedDualGraph::NodeKind;
using EK = TwistedDualGraph::EdgeKind;

int TwistedDualGraph::next(int h) const {
  int v = head(h);
  int e = h >> 1;
  const auto& rot = rotation[v];
  const int n = int(rot.size());
  int p = int(std::find(rot.begin(), rot.end(), e) - rot.begin());
  int f = rot[(p - 1 + n) % n];
  return edges[f].u == v ? 2 * f : 2 * f + 1;
}

int TwistedDualGraph::num_completion_vertices() const {
  return int(std::count_if(nodes.begin(), nodes.end(),
                           [](const Node& n) { return n.kind == NK::completion; }));
}

int TwistedDualGraph::num_completion_edges() const {
  return int(std::count_if(edges.begin(), edges.end(),
                           [](const Edge& e) { return e.kind == EK::completion; }));
}

namespace {

int out_half(const TwistedDualGraph& t, int e, int v) { return t.edges[e].u == v ? 2 * e : 2 * e + 1; }

}  // namespace

TwistedDualGraph twist_complete(const Quiver& q, const DualGraph& g) {
  if (!g.is_tree) throw DomainError("twist_complete needs a tree");
  TwistedDualGraph t;
  const int nc = int(g.cycles.size());
  t.cycle_node.resize(nc);
  for (int c = 0; c < nc; ++c) {
    t.cycle_node[c] = int(t.nodes.size());
    t.nodes.push_back({NK::cycle, c});
  }
  t.leaf_node.assign(q.num_arrows(), -1);
  for (int a : g.boundary_arrows) {
    t.leaf_node[a] = int(t.nodes.size());
    t.nodes.push_back({NK::leaf, a});
  }
  t.rotation.assign(t.nodes.size(), {});
  std::vector<int> arrow_edge(q.num_arrows(), -1);
  for (int a = 0; a < q.num_arrows(); ++a) {
    const auto& cs = g.arrow_cycles[a];
    TwistedDualGraph::Edge e;
    e.arrow = a;
    if (g.kinds[a] == ArrowKind::interior) {
      e.kind = EK::trunk;
      e.u = t.cycle_node[cs[0]];
      e.v = t.cycle_node[cs[1]];
    } else {
      e.kind = EK::leaf;
      e.u = t.cycle_node[cs[0]];
      e.v = t.leaf_node[a];
      t.rotation[e.v].push_back(int(t.edges.size()));
    }
    arrow_edge[a] = int(t.edges.size());
    t.edges.push_back(e);
  }
  // the embedding inherited from Q: faces sharing an arrow have opposite
  // orientations, so odd-distance cycles start clockwise
  for (int c = 0; c < nc; ++c) {
    auto& rot = t.rotation[t.cycle_node[c]];
    for (int a : g.cycles[c].arrows) rot.push_back(arrow_edge[a]);
    if (g.dist[c] % 2 == 1) std::reverse(rot.begin(), rot.end());
  }
  // twist at every trunk edge in the d-ordering: reflect the far side
  std::vector<int> trunk;
  for (int e = 0; e < int(t.edges.size()); ++e)
    if (t.edges[e].kind == EK::trunk) trunk.push_back(e);
  auto child_of = [&](int e) {
    int a = t.nodes[t.edges[e].u].ref, b = t.nodes[t.edges[e].v].ref;
    return g.dist[a] > g.dist[b] ? a : b;
  };
  std::sort(trunk.begin(), trunk.end(), [&](int x, int y) {
    int cx = child_of(x), cy = child_of(y);
    if (g.dist[cx] != g.dist[cy]) return g.dist[cx] < g.dist[cy];
    return g.label[cx] < g.label[cy];
  });
  for (int e : trunk) {
    int child = child_of(e);
    std::vector<char> seen(t.nodes.size(), 0);
    std::deque<int> bfs{t.cycle_node[child]};
    seen[t.cycle_node[child]] = 1;
    while (!bfs.empty()) {
      int v = bfs.front();
      bfs.pop_front();
      std::reverse(t.rotation[v].begin(), t.rotation[v].end());
      for (int f : t.rotation[v]) {
        if (f == e) continue;
        int w = t.edges[f].u == v ? t.edges[f].v : t.edges[f].u;
        if (!seen[w]) {
          seen[w] = 1;
          bfs.push_back(w);
        }
      }
    }
    t.twist_order.push_back(e);
  }
  for (int c = 0; c < nc; ++c) {
    std::vector<int> want;
    for (int a : g.cycles[c].arrows) want.push_back(arrow_edge[a]);
    if (t.rotation[t.cycle_node[c]] != want)
      throw DomainError("twisting did not orient every cycle counterclockwise");
  }

  // leaves in clockwise order along the outer face of the tree
  const int l0 = t.leaf_node[g.boundary_arrows.front()];
  {
    int h0 = out_half(t, t.rotation[l0][0], l0), h = h0;
    do {
      int v = t.head(h);
      if (t.nodes[v].kind == NK::leaf) t.leaf_order.push_back(v);
      h = t.next(h);
    } while (h != h0);
    // the walk ends by arriving back at l0
    std::rotate(t.leaf_order.begin(), t.leaf_order.end() - 1, t.leaf_order.end());
  }

  // tree distances between leaves
  auto tree_dist = [&](int a, int b) {
    std::vector<int> d(t.nodes.size(), -1);
    std::deque<int> bfs{a};
    d[a] = 0;
    while (!bfs.empty()) {
      int v = bfs.front();
      bfs.pop_front();
      for (int f : t.rotation[v]) {
        int w = t.edges[f].u == v ? t.edges[f].v : t.edges[f].u;
        if (d[w] < 0) {
          d[w] = d[v] + 1;
          bfs.push_back(w);
        }
      }
    }
    return d[b];
  };
  const int L = int(t.leaf_order.size());
  std::vector<int> fwd(t.nodes.size(), -1), back(t.nodes.size(), -1);
  for (int k = 0; k < L; ++k) {
    int a = t.leaf_order[k], b = t.leaf_order[(k + 1) % L];
    int len = tree_dist(a, b);
    if ((len + 1) % 2 == 0) {
      int e = int(t.edges.size());
      t.edges.push_back({EK::completion, a, b, -1});
      fwd[a] = e;
      back[b] = e;
    } else {
      int w = int(t.nodes.size());
      t.nodes.push_back({NK::completion, -1});
      t.rotation.push_back({});
      int e1 = int(t.edges.size());
      t.edges.push_back({EK::completion, a, w, -1});
      int e2 = int(t.edges.size());
      t.edges.push_back({EK::completion, w, b, -1});
      t.rotation[w] = {e1, e2};
      fwd[a] = e1;
      back[b] = e2;
    }
  }
  for (int v : t.leaf_order) t.rotation[v] = {t.rotation[v][0], fwd[v], back[v]};

  // faces
  std::vector<char> used(2 * t.edges.size(), 0);
  for (int h0 = 0; h0 < int(2 * t.edges.size()); ++h0) {
    if (used[h0]) continue;
    TwistedDualGraph::Face f;
    int h = h0;
    do {
      used[h] = 1;
      f.half_edges.push_back(h);
      if (t.edges[h >> 1].kind == EK::completion) ++f.completion_edges;
      h = t.next(h);
    } while (h != h0);
    t.faces.push_back(f);
  }
  int outer_h = out_half(t, fwd[l0], l0);
  for (int k = 0; k < int(t.faces.size()); ++k) {
    auto& hs = t.faces[k].half_edges;
    if (std::find(hs.begin(), hs.end(), outer_h) != hs.end()) {
      t.faces[k].outer = true;
      t.outer_face = k;
    }
  }
  for (auto& f : t.faces) {
    if (f.outer) continue;
    int sz = int(f.half_edges.size());
    if (sz % 2 != 0 || sz < 4 || f.completion_edges < 1 || f.completion_edges > 2)
      throw DomainError("completed dual graph has a malformed bounded face");
  }
  return t;
}

// ------------------------------------------------------------ polygon

CheckerboardPolygon::CheckerboardPolygon(const Quiver& q, const DualGraph& g)
    : q_(q), g_(g), tg_(twist_complete(q, g)) {
  build_medial();
  build_boundary();
  build_lines();
  check_invariants();
}

int CheckerboardPolygon::sign(int k) const { return (((k % size()) + size()) % size()) % 2 == 0 ? -1 : 1; }

void CheckerboardPolygon::build_medial() {
  const auto& t = tg_;
  // medial vertices are the edges of G~
  mv_.resize(t.edges.size());
  for (int e = 0; e < int(t.edges.size()); ++e) {
    mv_[e].gedge = e;
    mv_[e].boundary = t.edges[e].kind == EK::completion;
    mv_[e].arrow = t.edges[e].arrow;
  }
  // S faces: shaded per tree node, white per bounded face, one outer face
  std::vector<int> node_face(t.nodes.size(), -1), gface_face(t.faces.size(), -1);
  cycle_face_.assign(q_.num_vertices() ? t.cycle_node.size() : 0, -1);
  arrow_face_.assign(q_.num_arrows(), -1);
  for (int c = 0; c < int(t.cycle_node.size()); ++c) {
    node_face[t.cycle_node[c]] = int(faces_.size());
    cycle_face_[c] = int(faces_.size());
    faces_.push_back({FaceKind::shaded_cycle, c, {}, {}});
  }
  for (int a = 0; a < q_.num_arrows(); ++a)
    if (t.leaf_node[a] >= 0) {
      node_face[t.leaf_node[a]] = int(faces_.size());
      arrow_face_[a] = int(faces_.size());
      faces_.push_back({FaceKind::shaded_arrow, a, {}, {}});
    }
  for (int k = 0; k < int(t.faces.size()); ++k)
    if (!t.faces[k].outer) {
      gface_face[k] = int(faces_.size());
      faces_.push_back({FaceKind::white, k, {}, {}});
    }
  const int outer = int(faces_.size());
  faces_.push_back({FaceKind::outer, -1, {}, {}});

  // medial edges are corners (h, next(h)); the outer corner at a completion
  // vertex is not an edge of S
  std::vector<int> face_of_half(2 * t.edges.size(), -1);
  for (int k = 0; k < int(t.faces.size()); ++k)
    for (int h : t.faces[k].half_edges) face_of_half[h] = k;
  std::vector<int> corner(2 * t.edges.size(), -1);
  for (int h = 0; h < int(2 * t.edges.size()); ++h) {
    int v = t.head(h), h2 = t.next(h);
    int gf = face_of_half[h];
    const auto& node = t.nodes[v];
    if (t.faces[gf].outer && node.kind == NK::completion) continue;
    MedialEdge m;
    m.a = h >> 1;
    m.b = h2 >> 1;
    m.node = v;
    m.gface = gf;
    int ein = h >> 1, eout = h2 >> 1;
    if (node.kind == NK::cycle) {
      const Arrow& x = q_.arrow(t.edges[ein].arrow);
      const Arrow& y = q_.arrow(t.edges[eout].arrow);
      if (x.tgt == y.src)
        m.label = x.tgt;
      else if (y.tgt == x.src)
        m.label = y.tgt;
      else
        throw DomainError("corner between arrows without a common vertex");
    } else if (node.kind == NK::leaf) {
      const Arrow& x = q_.arrow(node.ref);
      bool in_leaf = t.edges[ein].kind == EK::leaf, out_leaf = t.edges[eout].kind == EK::leaf;
      if (in_leaf) m.label = x.src;        // leaf edge then back edge
      else if (out_leaf) m.label = x.tgt;  // forward edge then leaf edge
    }
    m.face_left = node.kind == NK::completion ? outer : node_face[v];
    m.face_right = t.faces[gf].outer ? outer : gface_face[gf];
    corner[h] = int(me_.size());
    me_.push_back(m);
  }
  // cyclic order of medial edges around each medial vertex
  std::vector<int> prev(2 * t.edges.size(), -1);
  for (int h = 0; h < int(2 * t.edges.size()); ++h) prev[t.next(h)] = h;
  for (int e = 0; e < int(t.edges.size()); ++e) {
    int h = 2 * e, r = 2 * e + 1;
    for (int c : {corner[h], corner[prev[h]], corner[r], corner[prev[r]]})
      if (c >= 0) mv_[e].edges.push_back(c);
  }
  for (int k = 0; k < int(me_.size()); ++k) {
    faces_[me_[k].face_left].edges.push_back(k);
    faces_[me_[k].face_right].edges.push_back(k);
  }
}

void CheckerboardPolygon::build_boundary() {
  const auto& t = tg_;
  std::vector<int> order;
  for (int h : t.faces[t.outer_face].half_edges) order.push_back(h >> 1);
  const int n = int(order.size());
  // index 0: an endpoint of the radical line of the smallest vertex, chosen
  // so that its other endpoint is at most N steps clockwise
  root_line_ = 0;
  std::vector<int> ends;
  for (int k = 0; k < n; ++k)
    for (int m : mv_[order[k]].edges)
      if (me_[m].label == root_line_) ends.push_back(k);
  if (ends.size() != 2) throw DomainError("radical line does not have two boundary endpoints");
  int start = ends[0];
  if (cw_distance(ends[0], ends[1], n) > n / 2) start = ends[1];
  boundary_.resize(n);
  for (int k = 0; k < n; ++k) {
    boundary_[k] = order[(start + k) % n];
    mv_[boundary_[k]].index = k;
    mv_[boundary_[k]].sign = k % 2 == 0 ? -1 : 1;
  }
  for (auto& f : faces_) {
    std::set<int> b;
    for (int m : f.edges)
      for (int v : {me_[m].a, me_[m].b})
        if (mv_[v].boundary) b.insert(mv_[v].index);
    f.boundary.assign(b.begin(), b.end());
  }
  // white regions <-> boundary arrows
  white_arrow_.assign(faces_.size(), -1);
  arrow_white_.assign(q_.num_arrows(), -1);
  for (int f = 0; f < int(faces_.size()); ++f) {
    if (faces_[f].kind != FaceKind::white) continue;
    auto labels = white_labels_clockwise(f);
    if (labels.size() < 2) throw DomainError("white region with fewer than two labeled edges");
    int a = q_.arrow_between(labels[0], labels[1]);
    if (a < 0) throw DomainError("white region labels do not start with an arrow");
    white_arrow_[f] = a;
    arrow_white_[a] = f;
  }
}

std::vector<int> CheckerboardPolygon::white_labels_clockwise(int f) const {
  const auto& t = tg_;
  const auto& hs = t.faces[faces_[f].ref].half_edges;
  const int m = int(hs.size());
  // corner(h) is the medial edge entered along h; the trace runs
  // counterclockwise, so walk it backwards starting next to the boundary
  std::map<int, int> corner_of;
  for (int k = 0; k < int(me_.size()); ++k)
    if (me_[k].gface == faces_[f].ref) corner_of[me_[k].a * 100003 + me_[k].b] = k;
  int k0 = -1;
  for (int k = 0; k < m; ++k) {
    bool c = t.edges[hs[k] >> 1].kind == EK::completion;
    bool pc = t.edges[hs[(k - 1 + m) % m] >> 1].kind == EK::completion;
    if (c && !pc) k0 = k;
  }
  std::vector<int> out;
  for (int s = 1; s <= m; ++s) {
    int h = hs[((k0 - s) % m + m) % m];
    int h2 = hs[((k0 - s + 1) % m + m) % m];
    auto it = corner_of.find((h >> 1) * 100003 + (h2 >> 1));
    if (it == corner_of.end()) continue;
    if (me_[it->second].label >= 0) out.push_back(me_[it->second].label);
  }
  return out;
}

void CheckerboardPolygon::build_lines() {
  const int n = q_.num_vertices();
  lines_.assign(n, {});
  for (int i = 0; i < n; ++i) {
    RadicalLine& L = lines_[i];
    L.vertex = i;
    std::vector<int> ends;
    std::map<int, std::vector<int>> inc;
    for (int k = 0; k < int(me_.size()); ++k)
      if (me_[k].label == i) {
        inc[me_[k].a].push_back(k);
        inc[me_[k].b].push_back(k);
      }
    for (auto& [v, es] : inc)
      if (mv_[v].boundary) {
        if (es.size() != 1) throw DomainError("radical line touches the boundary twice at one vertex");
        ends.push_back(v);
      } else if (es.size() != 2) {
        throw DomainError("radical line branches at an interior vertex");
      }
    if (ends.size() != 2) throw DomainError("radical line " + q_.vertex(i) + " needs two endpoints");
    int a = mv_[ends[0]].index, b = mv_[ends[1]].index;
    int start = sign(a) < 0 ? ends[0] : ends[1];
    L.minus = sign(a) < 0 ? a : b;
    L.plus = sign(a) < 0 ? b : a;
    if (sign(L.minus) == sign(L.plus)) throw DomainError("radical line endpoints have equal signs");
    int v = start, prev_e = -1;
    size_t total = 0;
    for (auto& [x, es] : inc) total += es.size();
    while (true) {
      int e = -1;
      for (int c : inc[v])
        if (c != prev_e) e = c;
      if (e < 0) break;
      L.segments.push_back(e);
      int w = me_[e].a == v ? me_[e].b : me_[e].a;
      if (mv_[w].boundary) break;
      // the crossing line uses the other two edges at w
      int other = -1;
      for (int c : mv_[w].edges)
        if (me_[c].label != i) other = me_[c].label;
      L.crossings.push_back({mv_[w].arrow, other});
      prev_e = e;
      v = w;
    }
    if (2 * L.segments.size() != total) throw DomainError("radical line is not connected");
  }
}

void CheckerboardPolygon::check_invariants() const {
  for (const auto& v : mv_) {
    if (v.boundary) continue;
    if (v.edges.size() != 4) throw DomainError("interior vertex of S without degree 4");
    int l[4];
    for (int k = 0; k < 4; ++k) l[k] = me_[v.edges[k]].label;
    if (l[0] != l[2] || l[1] != l[3] || l[0] == l[1] || l[0] < 0 || l[1] < 0)
      throw DomainError("labels around interior vertex " + q_.arrow_name(v.arrow) + " are inconsistent");
    const Arrow& a = q_.arrow(v.arrow);
    if (!((l[0] == a.src && l[1] == a.tgt) || (l[0] == a.tgt && l[1] == a.src)))
      throw DomainError("interior vertex labels differ from its arrow endpoints");
  }
  if (size() < 6 || size() % 2 != 0) throw DomainError("polygon size must be even and at least 6");
  for (const auto& f : faces_) {
    if (f.kind != FaceKind::white) continue;
    std::set<int> labels;
    int lab = 0;
    for (int m : f.edges)
      if (me_[m].label >= 0) {
        labels.insert(me_[m].label);
        ++lab;
      }
    if (int(labels.size()) != lab) throw DomainError("white region with repeated labels");
    if (f.edges.size() % 2 != 0) throw DomainError("white region with an odd number of edges");
    if (f.boundary.size() != 1 && f.boundary.size() != 2)
      throw DomainError("white region must meet the boundary in one vertex or one edge");
  }
  for (int k = 0; k < size(); ++k) {
    int white = 0, lines = 0;
    for (int m : mv_[boundary_[k]].edges) {
      if (me_[m].label >= 0) ++lines;
    }
    for (int f : faces_at(k))
      if (faces_[f].kind == FaceKind::white) ++white;
    if (white != 1 || lines < 1 || lines > 2)
      throw DomainError("boundary vertex " + std::to_string(k) + " has an unexpected neighbourhood");
  }
}

std::vector<int> CheckerboardPolygon::faces_at(int k) const {
  std::set<int> fs;
  for (int m : mv_[boundary_vertex(k)].edges)
    for (int f : {me_[m].face_left, me_[m].face_right})
      if (faces_[f].kind != FaceKind::outer) fs.insert(f);
  return {fs.begin(), fs.end()};
}

int CheckerboardPolygon::white_face_of_arrow(int a) const { return arrow_white_[a]; }
int CheckerboardPolygon::arrow_of_white_face(int f) const { return white_arrow_[f]; }

// ------------------------------------------------------------ white paths

WhiteRegionPaths white_region_paths(const Quiver& q, const DualGraph& g, int alpha) {
  if (g.kinds[alpha] != ArrowKind::boundary) throw DomainError("cycle paths start at boundary arrows");
  WhiteRegionPaths w;
  w.arrow = alpha;
  w.cycle_path.push_back(alpha);
  int c = g.arrow_cycles[alpha][0];
  int a = alpha;
  while (true) {
    const auto& ar = g.cycles[c].arrows;
    int k = g.position(c, a);
    int b = ar[(k + 1) % ar.size()];
    w.cycles.push_back(c);
    w.cycle_path.push_back(b);
    if (g.kinds[b] == ArrowKind::boundary) break;
    c = g.across(c, b);
    a = b;
  }
  w.weight = w.cycle_path.size() % 2 == 1 ? 1 : 2;
  // C_j = a_j a_{j+1} C'_j; the maximal valid paths chain every other C'
  const int t = int(w.cycle_path.size()) + 1;
  auto rest = [&](int j) {  // C'_j, 1-based
    int cyc = w.cycles[j - 1];
    const auto& ar = g.cycles[cyc].arrows;
    int k = g.position(cyc, w.cycle_path[j]);  // a_{j+1}
    std::vector<int> p;
    for (size_t s = 1; s + 1 < ar.size(); ++s) p.push_back(ar[(k + s) % ar.size()]);
    return p;
  };
  for (int j = t - 2; j >= 1; j -= 2) {
    auto p = rest(j);
    w.valid1.insert(w.valid1.end(), p.begin(), p.end());
  }
  for (int j = t - 3; j >= 1; j -= 2) {
    auto p = rest(j);
    w.valid2.insert(w.valid2.end(), p.begin(), p.end());
  }
  (void)q;
  return w;
}

std::vector<WhiteRegionPaths> all_white_region_paths(const Quiver& q, const DualGraph& g) {
  std::vector<WhiteRegionPaths> out;
  for (int a : g.boundary_arrows) out.push_back(white_region_paths(q, g, a));
  return out;
}

int boundary_size_by_weights(const Quiver& q, const DualGraph& g) {
  int s = 0;
  for (auto& w : all_white_region_paths(q, g)) s += w.weight;
  return s;
}

}  // namespace dimer
