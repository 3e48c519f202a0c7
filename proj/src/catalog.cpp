#include "dimer/catalog.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "dimer/syzygy.hpp"

namespace dimer {

namespace {

using Adj = std::vector<std::vector<char>>;

Adj adjacency(int n, const std::vector<std::pair<int, int>>& arcs) {
  Adj a(n, std::vector<char>(n, 0));
  for (auto [s, t] : arcs) a[s][t] = 1;
  return a;
}

// Colour refinement until stable; colours are ranks of invariant signatures.
void refine(const Adj& a, std::vector<int>& col) {
  const int n = int(col.size());
  int classes = int(std::set<int>(col.begin(), col.end()).size());
  for (;;) {
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].push_back(col[v]);
      std::vector<int> nb;
      for (int w = 0; w < n; ++w) {
        if (a[v][w]) nb.push_back(2 * col[w]);
        if (a[w][v]) nb.push_back(2 * col[w] + 1);
      }
      std::sort(nb.begin(), nb.end());
      sig[v].insert(sig[v].end(), nb.begin(), nb.end());
    }
    std::vector<std::vector<int>> uniq = sig;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    for (int v = 0; v < n; ++v)
      col[v] = int(std::lower_bound(uniq.begin(), uniq.end(), sig[v]) - uniq.begin());
    if (int(uniq.size()) == classes) return;
    classes = int(uniq.size());
  }
}

void search(const Adj& a, std::vector<int> col, CanonicalForm& best, bool& have) {
  refine(a, col);
  const int n = int(col.size());
  std::map<int, std::vector<int>> cells;
  for (int v = 0; v < n; ++v) cells[col[v]].push_back(v);
  for (auto& [c, vs] : cells) {
    if (vs.size() < 2) continue;
    for (int v : vs) {
      std::vector<int> c2(n);
      for (int w = 0; w < n; ++w) c2[w] = 2 * col[w] + (w == v ? 0 : 1);
      search(a, c2, best, have);
    }
    return;
  }
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[col[v]] = v;
  std::string code(n * n, '0');
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (a[order[x]][order[y]]) code[x * n + y] = '1';
  if (!have || code < best.code) {
    best = {code, order};
    have = true;
  }
}

std::vector<std::pair<int, int>> arcs_of(const Quiver& q) {
  std::vector<std::pair<int, int>> arcs;
  for (const auto& a : q.arrows()) arcs.push_back({a.src, a.tgt});
  return arcs;
}

std::vector<std::pair<int, int>> reversed(std::vector<std::pair<int, int>> arcs) {
  for (auto& [s, t] : arcs) std::swap(s, t);
  return arcs;
}

// A quiver under construction: arrows with the number of cycles using each.
struct Draft {
  int n = 0;
  std::vector<std::pair<int, int>> arcs;
  std::vector<int> uses;
};

Draft single_cycle(int k) {
  Draft d;
  d.n = k;
  for (int v = 0; v < k; ++v) d.arcs.push_back({v, (v + 1) % k});
  d.uses.assign(k, 1);
  return d;
}

// New cycle a -> b -> x_1 -> ... -> x_{k-2} -> a on the boundary arrow a -> b.
Draft glue(const Draft& d, int arrow, int k) {
  Draft e = d;
  auto [a, b] = d.arcs[arrow];
  e.uses[arrow] = 2;
  int prev = b;
  for (int s = 0; s < k - 2; ++s) {
    e.arcs.push_back({prev, e.n});
    e.uses.push_back(1);
    prev = e.n++;
  }
  e.arcs.push_back({prev, a});
  e.uses.push_back(1);
  return e;
}

Quiver from_arcs(int n, std::vector<std::pair<int, int>> arcs) {
  std::sort(arcs.begin(), arcs.end());
  std::vector<std::string> ids;
  for (int v = 0; v < n; ++v) ids.push_back(std::to_string(v + 1));
  std::vector<Arrow> arrows;
  for (auto [s, t] : arcs)
    arrows.push_back({"a" + std::to_string(arrows.size() + 1), s, t, ""});
  return Quiver(ids, arrows);
}

// Relabels by the canonical order of whichever orientation gives the smaller code.
Quiver canonical_quiver(int n, const std::vector<std::pair<int, int>>& arcs) {
  CanonicalForm f = canonical_form(n, arcs);
  std::vector<std::pair<int, int>> rev = reversed(arcs);
  CanonicalForm g = canonical_form(n, rev);
  const bool use_rev = g.code < f.code;
  const CanonicalForm& c = use_rev ? g : f;
  std::vector<int> pos(n);
  for (int k = 0; k < n; ++k) pos[c.order[k]] = k;
  std::vector<std::pair<int, int>> out;
  for (auto [s, t] : use_rev ? rev : arcs) out.push_back({pos[s], pos[t]});
  return from_arcs(n, out);
}

std::string draft_key(const Draft& d) {
  return std::min(canonical_form(d.n, d.arcs).code, canonical_form(d.n, reversed(d.arcs)).code) + "/" +
         std::to_string(d.n);
}

SuiteCheck make_check(const std::string& name) { return SuiteCheck{name, true, false, ""}; }

void fail(SuiteCheck& c, const std::string& why) {
  if (c.passed) c.witness = why;
  c.passed = false;
}

void skip(SuiteCheck& c, const std::string& why) {
  c.passed = false;
  c.skipped = true;
  c.witness = why;
}

void polygon_checks(const Quiver& q, SuiteReport& r) {
  DualGraph g = validated_dual_graph(q);
  CheckerboardPolygon P(q, g);
  SuiteCheck size = make_check("boundary-size");
  int w = boundary_size_by_weights(q, g);
  if (w != P.size()) fail(size, "weights give " + std::to_string(w) + ", medial graph " + std::to_string(P.size()));
  r.checks.push_back(size);

  SuiteCheck lines = make_check("line-crossings");
  for (int i = 0; i < q.num_vertices(); ++i)
    for (int j = i + 1; j < q.num_vertices(); ++j) {
      int c = 0;
      for (const auto& x : P.line(i).crossings)
        if (x.other_line == j) ++c;
      int arrows = (q.arrow_between(i, j) >= 0) + (q.arrow_between(j, i) >= 0);
      if (c != arrows || c > 1)
        fail(lines, "rho(" + q.vertex(i) + ") and rho(" + q.vertex(j) + ") cross " + std::to_string(c) + " times");
    }
  r.checks.push_back(lines);

  SuiteCheck count = make_check("diagonal-count");
  const int N = P.half();
  int nd = int(enumerate_diagonals(P).size());
  if (nd != N * (N - 2)) fail(count, std::to_string(nd) + " diagonals, expected " + std::to_string(N * (N - 2)));
  r.checks.push_back(count);

  SuiteCheck mesh = make_check("translation-mesh");
  if (!build_translation_quiver(P).mesh_condition()) fail(mesh, "mesh condition fails");
  r.checks.push_back(mesh);
}

void algebra_checks(const Algebra& B, SuiteReport& r) {
  SuiteCheck sch = make_check("schurian");
  if (!B.schurian()) fail(sch, "dim e_x B e_y reaches " + std::to_string(B.max_pair_dimension()));
  r.checks.push_back(sch);
  SuiteCheck cyc = make_check("cyclic-zero");
  for (const auto& c : B.cyclic_zero_checks()) {
    if (!c.determined) fail(cyc, "undetermined: " + path_name(B.quiver(), c.cycle));
    else if (!c.zero) fail(cyc, "nonzero: " + path_name(B.quiver(), c.cycle));
  }
  r.checks.push_back(cyc);
}

const char* const kSyzygyChecks[] = {"indecomposable", "stable-end",  "omega-rotation", "omega-period",
                                     "radical-lines",  "ext-crossing", "staircase",      "cosyzygy"};
const char* const kArChecks[] = {"pivot-squares", "mesh", "ar-sequences", "ar-quiver"};

void syzygy_checks(const DimerModel& m, SuiteReport& r) {
  const Quiver& q = m.quiver();
  const auto& P = m.polygon();
  std::map<std::string, SuiteCheck> c;
  for (const char* n : kSyzygyChecks) c[n] = make_check(n);
  for (const auto& d : m.diagonals()) {
    const std::string name = diagonal_name(d);
    const ModuleRep& M = m.module(d);
    if (!is_indecomposable(q, M)) fail(c["indecomposable"], name);
    StableRecord st = stable_checks(m, d);
    if (st.stable_end != 1) fail(c["stable-end"], name + ": " + std::to_string(st.stable_end));
    for (auto& [e, good] : st.ext_vs_crossing)
      if (!good) fail(c["ext-crossing"], name + " with " + diagonal_name(e));
    if (st.self_ext != 0) fail(c["ext-crossing"], name + " has self extensions");

    ProjectiveResolution res = resolution(m, d, P.size());
    for (size_t k = 0; k < res.exact.size(); ++k)
      if (!res.exact[k] || !res.matches_oracle[k] || !res.matches_rotation[k + 1])
        fail(c["omega-rotation"], name + " at step " + std::to_string(k + 1));
    if (!is_iso(q, res.syzygies[P.size()], M)) fail(c["omega-period"], name + ": Omega^2N differs");
    const bool fixed = is_iso(q, res.syzygies[P.half()], M);
    if (fixed != is_diameter(P, d))
      fail(c["omega-period"], name + (fixed ? ": fixed by Omega^N but no diameter" : ": diameter not fixed"));

    for (const auto& rep : m.representatives(d)) {
      StaircaseReport s = validate_staircase(m, rep);
      if (!s.ok()) fail(c["staircase"], name + ": " + s.failures.front());
    }
    if (!cosyzygy_check(m, d).ok()) fail(c["cosyzygy"], name);
  }
  for (int i = 0; i < q.num_vertices(); ++i)
    if (!radical_correspondence(m, i)) fail(c["radical-lines"], "vertex " + q.vertex(i));
  for (const char* n : kSyzygyChecks) r.checks.push_back(c[n]);
}

void ar_checks(const DimerModel& m, SuiteReport& r) {
  std::map<std::string, SuiteCheck> c;
  for (const char* n : kArChecks) c[n] = make_check(n);
  for (const auto& d : m.diagonals()) {
    const std::string name = diagonal_name(d);
    MeshRecord rec = ar_structure(m, d);
    for (const auto& e : rec.middle)
      if (!find_pivot_morphism(m, d, e).commutes) fail(c["pivot-squares"], name + " to " + diagonal_name(e));
    if (rec.applicable && !rec.mesh_holds) fail(c["mesh"], name + ": " + rec.detail);
    if (rec.ses_applicable && !rec.ses_exact) fail(c["ar-sequences"], name + ": " + rec.detail);
  }
  ArQuiverCheck aq = build_ar_quiver(m);
  if (!aq.isomorphic) fail(c["ar-quiver"], aq.failures.empty() ? "not isomorphic" : aq.failures.front());
  for (const char* n : kArChecks) r.checks.push_back(c[n]);
}

}  // namespace

CanonicalForm canonical_form(int n, const std::vector<std::pair<int, int>>& arcs) {
  Adj a = adjacency(n, arcs);
  CanonicalForm best;
  bool have = false;
  search(a, std::vector<int>(n, 0), best, have);
  return best;
}

std::string quiver_key(const Quiver& q) {
  Draft d;
  d.n = q.num_vertices();
  d.arcs = arcs_of(q);
  return draft_key(d);
}

std::string pattern_key(const CheckerboardPolygon& P) {
  const int n = P.size();
  std::string best;
  for (int refl = 0; refl < 2; ++refl)
    for (int r = 0; r < n; ++r) {
      std::vector<std::pair<int, int>> chords;
      for (const auto& L : P.lines()) {
        int x = refl ? ((r - L.minus) % n + n) % n : (L.minus + r) % n;
        int y = refl ? ((r - L.plus) % n + n) % n : (L.plus + r) % n;
        chords.push_back({std::min(x, y), std::max(x, y)});
      }
      std::sort(chords.begin(), chords.end());
      std::ostringstream s;
      s << n << ":";
      for (auto [x, y] : chords) s << x << "-" << y << ",";
      if (best.empty() || s.str() < best) best = s.str();
    }
  return best;
}

Quiver canonical_relabel(const Quiver& q) { return canonical_quiver(q.num_vertices(), arcs_of(q)); }

std::vector<Quiver> dimer_tree_quivers(int max_vertices) {
  std::vector<Draft> all;
  std::set<std::string> seen;
  std::vector<Draft> frontier;
  for (int k = 3; k <= max_vertices; ++k) {
    Draft d = single_cycle(k);
    if (seen.insert(draft_key(d)).second) frontier.push_back(d);
  }
  while (!frontier.empty()) {
    std::vector<Draft> next;
    for (const Draft& d : frontier) {
      all.push_back(d);
      for (int a = 0; a < int(d.arcs.size()); ++a) {
        if (d.uses[a] != 1) continue;
        for (int k = 3; d.n + k - 2 <= max_vertices; ++k) {
          Draft e = glue(d, a, k);
          if (seen.insert(draft_key(e)).second) next.push_back(e);
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<Quiver> out;
  for (const Draft& d : all) out.push_back(canonical_quiver(d.n, d.arcs));
  return out;
}

std::vector<CatalogEntry> enumerate_catalog(int max_boundary) {
  // Each vertex sends a radical line to two boundary vertices and each
  // boundary vertex meets at most two lines, so |Q_0| <= 2N.
  std::map<std::string, CatalogEntry> by_key;
  for (const Quiver& q : dimer_tree_quivers(max_boundary)) {
    ValidationReport v = validate_dimer_tree(q);
    if (!v.ok) continue;
    DualGraph g = dual_graph(q);
    CheckerboardPolygon P(q, g);
    if (P.size() > max_boundary) continue;
    std::string key = pattern_key(P);
    auto it = by_key.find(key);
    if (it != by_key.end()) {
      it->second.quiver_classes++;
      continue;
    }
    CatalogEntry e;
    e.quiver = q;
    e.size = P.size();
    e.theorem_scope = v.theorem_scope;
    e.key = key;
    by_key.emplace(key, std::move(e));
  }
  std::vector<CatalogEntry> out;
  for (auto& [k, e] : by_key) out.push_back(std::move(e));
  std::sort(out.begin(), out.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
    if (a.size != b.size) return a.size < b.size;
    if (a.quiver.num_vertices() != b.quiver.num_vertices()) return a.quiver.num_vertices() < b.quiver.num_vertices();
    return a.key < b.key;
  });
  std::map<int, int> counter;
  for (auto& e : out) e.name = "n" + std::to_string(e.size) + "-" + std::to_string(++counter[e.size]);
  return out;
}

int SuiteReport::passed() const {
  return int(std::count_if(checks.begin(), checks.end(), [](const SuiteCheck& c) { return c.passed; }));
}
int SuiteReport::failed() const {
  return int(std::count_if(checks.begin(), checks.end(), [](const SuiteCheck& c) { return !c.passed && !c.skipped; }));
}
int SuiteReport::skipped() const {
  return int(std::count_if(checks.begin(), checks.end(), [](const SuiteCheck& c) { return c.skipped; }));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"polygon", "algebra", "syzygy", "ar", "full"};
  return names;
}

SuiteReport run_suite(const Quiver& q, const std::string& suite) {
  if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
    throw std::invalid_argument("unknown suite '" + suite + "'");
  SuiteReport r;
  r.suite = suite;
  const bool full = suite == "full";
  if (full || suite == "polygon") polygon_checks(q, r);
  if (full || suite == "algebra" || suite == "syzygy" || suite == "ar") {
    DimerModel m(q);
    if (full || suite == "algebra") algebra_checks(m.algebra(), r);
    const bool want_syz = full || suite == "syzygy";
    const bool want_ar = full || suite == "ar";
    if (!m.theorem_scope()) {
      const std::string why = "chordless cycle longer than 3";
      if (want_syz)
        for (const char* n : kSyzygyChecks) {
          SuiteCheck c = make_check(n);
          skip(c, why);
          r.checks.push_back(c);
        }
      if (want_ar)
        for (const char* n : kArChecks) {
          SuiteCheck c = make_check(n);
          skip(c, why);
          r.checks.push_back(c);
        }
    } else {
      if (want_syz) syzygy_checks(m, r);
      if (want_ar) ar_checks(m, r);
    }
  }
  return r;
}

SuiteReport run_suite(const CatalogEntry& e, const std::string& suite) { return run_suite(e.quiver, suite); }

}  // namespace dimer
