#include "dimer/quiver.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <set>
#include <sstream>

#include "json.hpp"

namespace dimer {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty() || s.size() > 18) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

bool natural_less(const std::string& a, const std::string& b) {
  bool na = all_digits(a), nb = all_digits(b);
  if (na && nb) {
    long long x = std::stoll(a), y = std::stoll(b);
    if (x != y) return x < y;
    return a < b;
  }
  if (na != nb) return na;
  return a < b;
}

Quiver::Quiver(std::vector<std::string> vertex_ids, std::vector<Arrow> arrows) {
  std::vector<std::string> old = vertex_ids;
  std::sort(vertex_ids.begin(), vertex_ids.end(), natural_less);
  vertices_ = vertex_ids;
  for (int i = 0; i < int(vertices_.size()); ++i) vindex_[vertices_[i]] = i;
  // arrows arrive indexed against the caller's vertex order
  std::vector<int> remap(old.size());
  for (size_t i = 0; i < old.size(); ++i) remap[i] = vindex_[old[i]];
  arrows_ = std::move(arrows);
  out_.assign(vertices_.size(), {});
  in_.assign(vertices_.size(), {});
  for (int a = 0; a < int(arrows_.size()); ++a) {
    arrows_[a].src = remap[arrows_[a].src];
    arrows_[a].tgt = remap[arrows_[a].tgt];
    aindex_[arrows_[a].id] = a;
    out_[arrows_[a].src].push_back(a);
    in_[arrows_[a].tgt].push_back(a);
  }
}

int Quiver::vertex_index(const std::string& id) const {
  auto it = vindex_.find(id);
  return it == vindex_.end() ? -1 : it->second;
}

int Quiver::arrow_index(const std::string& id) const {
  auto it = aindex_.find(id);
  return it == aindex_.end() ? -1 : it->second;
}

int Quiver::arrow_between(int x, int y) const {
  for (int a : out_[x])
    if (arrows_[a].tgt == y) return a;
  return -1;
}

std::string Quiver::arrow_name(int a) const {
  return arrows_[a].label.empty() ? arrows_[a].id : arrows_[a].label;
}

Quiver Quiver::opposite() const {
  std::vector<Arrow> rev = arrows_;
  for (auto& a : rev) std::swap(a.src, a.tgt);
  return Quiver(vertices_, rev);
}

namespace {

Quiver parse_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), 0);
  }
  auto id_of = [](const nlohmann::json& v) -> std::string {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw ParseError("ids must be strings or integers", 0);
  };
  if (!j.is_object() || !j.contains("vertices") || !j.contains("arrows"))
    throw ParseError("JSON quiver needs 'vertices' and 'arrows'", 0);
  std::vector<std::string> vs;
  std::map<std::string, int> vi;
  for (auto& v : j["vertices"]) {
    std::string id = id_of(v);
    if (vi.count(id)) throw ParseError("duplicate vertex " + id, 0);
    vi[id] = int(vs.size());
    vs.push_back(id);
  }
  std::vector<Arrow> as;
  std::set<std::string> seen;
  for (auto& a : j["arrows"]) {
    if (!a.contains("id") || !a.contains("from") || !a.contains("to"))
      throw ParseError("arrow needs id, from, to", 0);
    Arrow ar;
    ar.id = id_of(a["id"]);
    std::string f = id_of(a["from"]), t = id_of(a["to"]);
    if (!seen.insert(ar.id).second) throw ParseError("duplicate arrow id " + ar.id, 0);
    if (!vi.count(f) || !vi.count(t))
      throw ParseError("arrow " + ar.id + " has a dangling endpoint", 0);
    ar.src = vi[f];
    ar.tgt = vi[t];
    if (a.contains("label") && !a["label"].is_null()) ar.label = a["label"].get<std::string>();
    as.push_back(ar);
  }
  return Quiver(vs, as);
}

}  // namespace

Quiver parse_quiver(const std::string& text) {
  size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_json(text);

  std::vector<std::string> vs;
  std::map<std::string, int> vi;
  std::vector<Arrow> as;
  std::set<std::string> seen;
  std::istringstream in(text);
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok[0] == "vertex") {
      if (tok.size() != 2) throw ParseError("expected 'vertex <id>'", no);
      if (vi.count(tok[1])) throw ParseError("duplicate vertex " + tok[1], no);
      vi[tok[1]] = int(vs.size());
      vs.push_back(tok[1]);
    } else if (tok[0] == "arrow") {
      if (tok.size() != 4 && tok.size() != 5)
        throw ParseError("expected 'arrow <id> <source> <target> [label]'", no);
      if (!seen.insert(tok[1]).second) throw ParseError("duplicate arrow id " + tok[1], no);
      if (!vi.count(tok[2]) || !vi.count(tok[3]))
        throw ParseError("arrow " + tok[1] + " has a dangling endpoint", no);
      Arrow a;
      a.id = tok[1];
      a.src = vi[tok[2]];
      a.tgt = vi[tok[3]];
      if (tok.size() == 5) a.label = tok[4];
      as.push_back(a);
    } else {
      throw ParseError("unknown record '" + tok[0] + "'", no);
    }
  }
  return Quiver(vs, as);
}

std::string format_quiver(const Quiver& q) {
  std::ostringstream os;
  for (auto& v : q.vertices()) os << "vertex " << v << "\n";
  for (auto& a : q.arrows()) {
    os << "arrow " << a.id << " " << q.vertex(a.src) << " " << q.vertex(a.tgt);
    if (!a.label.empty()) os << " " << a.label;
    os << "\n";
  }
  return os.str();
}

std::string quiver_to_json(const Quiver& q) {
  nlohmann::ordered_json j;
  j["vertices"] = q.vertices();
  j["arrows"] = nlohmann::ordered_json::array();
  for (auto& a : q.arrows()) {
    nlohmann::ordered_json x;
    x["id"] = a.id;
    x["from"] = q.vertex(a.src);
    x["to"] = q.vertex(a.tgt);
    if (!a.label.empty()) x["label"] = a.label;
    j["arrows"].push_back(x);
  }
  return j.dump(2);
}

std::vector<int> ChordlessCycle::vertices(const Quiver& q) const {
  std::vector<int> vs;
  for (int a : arrows) vs.push_back(q.arrow(a).src);
  return vs;
}

std::vector<ChordlessCycle> chordless_cycles(const Quiver& q) {
  const int n = q.num_vertices();
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (auto& a : q.arrows())
    if (a.src != a.tgt) adj[a.src][a.tgt] = 1;

  std::vector<ChordlessCycle> out;
  std::vector<int> path, parr;
  std::vector<char> on(n, 0);
  // The start vertex is the smallest vertex of the cycle, so each cycle is
  // found exactly once.
  std::function<void(int)> dfs = [&](int s) {
    int v = path.back();
    for (int a : q.out_arrows(v)) {
      int w = q.arrow(a).tgt;
      if (w == s) {
        if (path.size() >= 3) {
          ChordlessCycle c;
          c.arrows = parr;
          c.arrows.push_back(a);
          out.push_back(c);
        }
        continue;
      }
      if (w < s || on[w]) continue;
      // chord test against every earlier path vertex except v itself
      bool chord = false;
      for (size_t k = 0; k + 1 < path.size() && !chord; ++k) {
        int u = path[k];
        if (adj[w][u] && k != 0) chord = true;
        if (adj[u][w]) chord = true;
      }
      if (chord) continue;
      path.push_back(w);
      parr.push_back(a);
      on[w] = 1;
      // a cycle closing back to s must do so from w only; if w->s exists we
      // record it on the next level and stop extending to avoid chords
      if (adj[w][s]) {
        int back = q.arrow_between(w, s);
        if (path.size() >= 3) {
          ChordlessCycle c;
          c.arrows = parr;
          c.arrows.push_back(back);
          out.push_back(c);
        }
      } else {
        dfs(s);
      }
      on[w] = 0;
      path.pop_back();
      parr.pop_back();
    }
  };
  for (int s = 0; s < n; ++s) {
    path = {s};
    parr.clear();
    on.assign(n, 0);
    on[s] = 1;
    for (int a : q.out_arrows(s)) {
      int w = q.arrow(a).tgt;
      if (w <= s) continue;
      path = {s, w};
      parr = {a};
      on[w] = 1;
      if (!adj[w][s]) dfs(s);
      on[w] = 0;
    }
  }
  // drop duplicates that arise when the closing arrow was seen twice
  std::sort(out.begin(), out.end(), [&](const ChordlessCycle& x, const ChordlessCycle& y) {
    auto vx = x.vertices(q), vy = y.vertices(q);
    std::sort(vx.begin(), vx.end());
    std::sort(vy.begin(), vy.end());
    if (vx != vy) return vx < vy;
    return x.arrows < y.arrows;
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const ChordlessCycle& x, const ChordlessCycle& y) {
                          return x.arrows == y.arrows;
                        }),
            out.end());
  for (int i = 0; i < int(out.size()); ++i) out[i].index = i;
  return out;
}

std::vector<ArrowKind> classify_arrows(const Quiver& q, const std::vector<ChordlessCycle>& cycles) {
  std::vector<int> count(q.num_arrows(), 0);
  for (auto& c : cycles)
    for (int a : c.arrows) ++count[a];
  std::vector<ArrowKind> kinds(q.num_arrows());
  for (int a = 0; a < q.num_arrows(); ++a) {
    if (count[a] == 0)
      throw DomainError("arrow " + q.arrow_name(a) + " lies in no chordless cycle");
    if (count[a] > 2)
      throw DomainError("arrow " + q.arrow_name(a) + " lies in " + std::to_string(count[a]) +
                        " chordless cycles");
    kinds[a] = count[a] == 1 ? ArrowKind::boundary : ArrowKind::interior;
  }
  return kinds;
}

std::vector<ArrowKind> classify_arrows(const Quiver& q) {
  return classify_arrows(q, chordless_cycles(q));
}

int DualGraph::position(int c, int a) const {
  auto& ar = cycles[c].arrows;
  for (int k = 0; k < int(ar.size()); ++k)
    if (ar[k] == a) return k;
  return -1;
}

int DualGraph::across(int c, int a) const {
  for (int d : arrow_cycles[a])
    if (d != c) return d;
  return -1;
}

DualGraph dual_graph(const Quiver& q) {
  DualGraph g;
  g.cycles = chordless_cycles(q);
  g.kinds = classify_arrows(q, g.cycles);
  const int nc = int(g.cycles.size());
  g.arrow_cycles.assign(q.num_arrows(), {});
  for (int c = 0; c < nc; ++c)
    for (int a : g.cycles[c].arrows) g.arrow_cycles[a].push_back(c);
  g.adj.assign(nc, {});
  for (int a = 0; a < q.num_arrows(); ++a) {
    if (g.kinds[a] == ArrowKind::boundary) {
      g.boundary_arrows.push_back(a);
      continue;
    }
    TrunkEdge e{g.arrow_cycles[a][0], g.arrow_cycles[a][1], a};
    g.trunk.push_back(e);
    g.adj[e.a].push_back({e.b, a});
    g.adj[e.b].push_back({e.a, a});
  }
  // tree: connected, |trunk| = |cycles| - 1, no two cycles sharing two arrows
  std::set<std::pair<int, int>> pairs;
  bool simple = true;
  for (auto& e : g.trunk)
    if (!pairs.insert({std::min(e.a, e.b), std::max(e.a, e.b)}).second) simple = false;

  // root: lexicographically smallest vertex set among cycles adjacent to at
  // most one other cycle (cycles are already sorted that way)
  for (int c = 0; c < nc; ++c) {
    std::set<int> nb;
    for (auto& [d, a] : g.adj[c]) nb.insert(d);
    if (nb.size() <= 1) {
      g.root = c;
      break;
    }
  }
  if (g.root < 0 && nc > 0) g.root = 0;
  g.dist.assign(nc, -1);
  if (nc > 0) {
    std::deque<int> bfs{g.root};
    g.dist[g.root] = 0;
    while (!bfs.empty()) {
      int c = bfs.front();
      bfs.pop_front();
      for (auto& [d, a] : g.adj[c])
        if (g.dist[d] < 0) {
          g.dist[d] = g.dist[c] + 1;
          bfs.push_back(d);
        }
    }
  }
  bool connected = std::all_of(g.dist.begin(), g.dist.end(), [](int d) { return d >= 0; });
  g.is_tree = connected && simple && int(g.trunk.size()) == nc - 1;
  g.order.resize(nc);
  for (int c = 0; c < nc; ++c) g.order[c] = c;
  std::stable_sort(g.order.begin(), g.order.end(),
                   [&](int x, int y) { return g.dist[x] < g.dist[y]; });
  g.label.assign(nc, 0);
  for (int k = 0; k < nc; ++k) g.label[g.order[k]] = k;
  return g;
}

ValidationReport validate_dimer_tree(const Quiver& q) {
  ValidationReport r;
  auto add = [&](const std::string& rule, const std::string& detail) {
    r.violations.push_back({rule, detail});
  };
  const int n = q.num_vertices();
  std::set<std::pair<int, int>> seen;
  for (int a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrow(a);
    if (ar.src == ar.tgt) add("loop", "arrow " + q.arrow_name(a) + " at vertex " + q.vertex(ar.src));
    if (!seen.insert({ar.src, ar.tgt}).second)
      add("parallel", "parallel arrows " + q.vertex(ar.src) + "->" + q.vertex(ar.tgt));
  }
  for (auto [x, y] : seen)
    if (x < y && seen.count({y, x})) add("two-cycle", "2-cycle between " + q.vertex(x) + " and " + q.vertex(y));
  if (n == 0) add("empty", "quiver has no vertices");
  // connectivity of the underlying graph
  if (n > 0) {
    std::vector<char> vis(n, 0);
    std::deque<int> bfs{0};
    vis[0] = 1;
    while (!bfs.empty()) {
      int v = bfs.front();
      bfs.pop_front();
      auto visit = [&](int w) {
        if (!vis[w]) {
          vis[w] = 1;
          bfs.push_back(w);
        }
      };
      for (int a : q.out_arrows(v)) visit(q.arrow(a).tgt);
      for (int a : q.in_arrows(v)) visit(q.arrow(a).src);
    }
    for (int v = 0; v < n; ++v)
      if (!vis[v]) {
        add("disconnected", "vertex " + q.vertex(v) + " not reachable");
        break;
      }
  }
  if (!r.violations.empty()) {
    r.ok = false;
    return r;
  }

  auto cycles = chordless_cycles(q);
  std::vector<int> count(q.num_arrows(), 0);
  for (auto& c : cycles)
    for (int a : c.arrows) ++count[a];
  for (int a = 0; a < q.num_arrows(); ++a) {
    if (count[a] == 0) add("Q1", "arrow " + q.arrow_name(a) + " lies in no chordless cycle");
    if (count[a] > 2)
      add("arrow-multiplicity", "arrow " + q.arrow_name(a) + " lies in " +
                                    std::to_string(count[a]) + " chordless cycles");
  }
  for (size_t i = 0; i < cycles.size(); ++i)
    for (size_t j = i + 1; j < cycles.size(); ++j) {
      int shared = 0;
      for (int a : cycles[i].arrows)
        for (int b : cycles[j].arrows)
          if (a == b) ++shared;
      if (shared > 1) add("Q2", "two chordless cycles share " + std::to_string(shared) + " arrows");
    }
  if (!r.violations.empty()) {
    r.ok = false;
    return r;
  }

  DualGraph g = dual_graph(q);
  if (!g.is_tree) add("Q2", "dual graph is not a tree");
  // every vertex must lie on the outer face: around each vertex the cycles,
  // linked through interior arrows at that vertex, form paths ending in
  // boundary arrows rather than closing up
  for (int v = 0; v < n && g.is_tree; ++v) {
    int interior = 0, boundary = 0;
    std::set<int> cyc;
    for (int a = 0; a < q.num_arrows(); ++a) {
      const Arrow& ar = q.arrow(a);
      if (ar.src != v && ar.tgt != v) continue;
      (g.kinds[a] == ArrowKind::interior ? interior : boundary)++;
      for (int c : g.arrow_cycles[a]) cyc.insert(c);
    }
    int comps = int(cyc.size()) - interior;
    if (boundary != 2 * comps)
      add("interior-vertex", "vertex " + q.vertex(v) + " is not on the boundary of the embedding");
  }
  r.ok = r.violations.empty();
  r.theorem_scope = std::all_of(cycles.begin(), cycles.end(),
                                [](const ChordlessCycle& c) { return c.length() == 3; });
  if (g.root >= 0) {
    r.root_cycle = g.root;
    std::string s;
    auto vs = g.cycles[g.root].vertices(q);
    for (int v : vs) s += (s.empty() ? "" : ",") + q.vertex(v);
    r.root_vertices = s;
  }
  return r;
}

DualGraph validated_dual_graph(const Quiver& q) {
  auto r = validate_dimer_tree(q);
  if (!r.ok) {
    std::string msg = "not a dimer tree quiver:";
    for (auto& v : r.violations) msg += " [" + v.rule + "] " + v.detail + ";";
    throw DomainError(msg);
  }
  return dual_graph(q);
}

}  // namespace dimer
