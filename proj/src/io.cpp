#include "dimer/io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace dimer {

namespace {

Json vertex_list(const Quiver& q, const std::vector<int>& vs) {
  Json j = Json::array();
  for (int v : vs) j.push_back(q.vertex(v));
  return j;
}

Json matrix_to_json(const MatQ& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c).get_str());
    rows.push_back(row);
  }
  return rows;
}

std::string fixed(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", std::abs(x) < 5e-4 ? 0.0 : x);
  return buf;
}

}  // namespace

Json validation_to_json(const Quiver& q, const ValidationReport& r) {
  Json j;
  j["ok"] = r.ok;
  j["theorem_scope"] = r.theorem_scope;
  j["vertices"] = q.num_vertices();
  j["arrows"] = q.num_arrows();
  j["root_cycle"] = r.root_vertices;
  j["violations"] = Json::array();
  for (const auto& v : r.violations) j["violations"].push_back({{"rule", v.rule}, {"detail", v.detail}});
  return j;
}

Json module_to_json(const Quiver& q, const ModuleRep& M) {
  Json j;
  Json dims;
  for (int v = 0; v < q.num_vertices(); ++v) dims[q.vertex(v)] = M.dims[v];
  j["dimension"] = M.total_dim();
  j["dims"] = dims;
  j["loewy"] = loewy_string(q, M);
  Json act;
  for (int a = 0; a < q.num_arrows(); ++a)
    if (M.action[a].size() > 0) act[q.arrow(a).id] = matrix_to_json(M.action[a]);
  j["action"] = act;
  return j;
}

Json path_matrix_to_json(const Algebra& B, const PathMatrix& f) {
  const Quiver& q = B.quiver();
  Json j;
  j["rows"] = vertex_list(q, f.rows);
  j["cols"] = vertex_list(q, f.cols);
  Json m = Json::array();
  for (size_t s = 0; s < f.rows.size(); ++s) {
    Json row = Json::array();
    for (size_t t = 0; t < f.cols.size(); ++t) {
      const Rational& c = f.coef(Eigen::Index(s), Eigen::Index(t));
      if (c == 0) {
        row.push_back(nullptr);
        continue;
      }
      row.push_back({{"scalar", c.get_str()}, {"path", path_name(q, B.rep(f.rows[s], f.cols[t]))}});
    }
    m.push_back(row);
  }
  j["entries"] = m;
  return j;
}

Json polygon_to_json(const CheckerboardPolygon& P) {
  const Quiver& q = P.quiver();
  Json j;
  j["size"] = P.size();
  Json signs = Json::array();
  for (int k = 0; k < P.size(); ++k) signs.push_back(P.sign(k) < 0 ? "-" : "+");
  j["signs"] = signs;
  j["root_line"] = P.root_vertex() >= 0 ? Json(q.vertex(P.root_vertex())) : Json(nullptr);
  Json lines = Json::array();
  for (const auto& L : P.lines()) {
    Json x;
    x["vertex"] = q.vertex(L.vertex);
    x["minus"] = L.minus;
    x["plus"] = L.plus;
    Json cr = Json::array();
    for (const auto& c : L.crossings) cr.push_back({{"arrow", q.arrow(c.arrow).id}, {"line", q.vertex(c.other_line)}});
    x["crossings"] = cr;
    lines.push_back(x);
  }
  j["radical_lines"] = lines;
  Json weights;
  for (const auto& w : all_white_region_paths(q, P.dual())) weights[q.arrow(w.arrow).id] = w.weight;
  j["weights"] = weights;
  j["boundary_size_by_weights"] = boundary_size_by_weights(q, P.dual());
  int shaded = 0, white = 0;
  for (const auto& f : P.faces()) {
    if (f.kind == CheckerboardPolygon::FaceKind::white) ++white;
    if (f.kind == CheckerboardPolygon::FaceKind::shaded_cycle || f.kind == CheckerboardPolygon::FaceKind::shaded_arrow)
      ++shaded;
  }
  j["faces"] = {{"shaded", shaded}, {"white", white}};
  return j;
}

Json diagonals_to_json(const DimerModel& m) {
  const auto& P = m.polygon();
  const Quiver& q = m.quiver();
  Json out = Json::array();
  for (const auto& d : m.diagonals()) {
    Json x;
    x["diagonal"] = diagonal_name(d);
    x["diameter"] = is_diameter(P, d);
    x["short"] = is_short(P, d);
    int r = radical_vertex(P, d);
    x["radical_line"] = r >= 0 ? Json(q.vertex(r)) : Json(nullptr);
    x["rotation"] = diagonal_name(rotate(P, d));
    Json reps = Json::array();
    for (const auto& rep : all_representatives(P, d)) reps.push_back(rep.sequence.str(q));
    x["crossing_sequences"] = reps;
    Json pv = Json::array();
    for (const auto& p : pivots(P, d)) pv.push_back(diagonal_name(p.target));
    x["pivots"] = pv;
    out.push_back(x);
  }
  return out;
}

Json resolution_to_json(const DimerModel& m, const ProjectiveResolution& r) {
  const Quiver& q = m.quiver();
  const Algebra& B = m.algebra();
  Json j;
  j["diagonal"] = diagonal_name(r.diagonals.front());
  j["mode"] = "theorem";
  j["ok"] = r.ok();
  j["literal_compatibility"] = r.literal_compatibility;
  Json steps = Json::array();
  for (size_t k = 0; k < r.differentials.size(); ++k) {
    Json s;
    s["k"] = k;
    s["diagonal"] = diagonal_name(r.diagonals[k]);
    s["P0"] = vertex_list(q, r.differentials[k].rows);
    s["P1"] = vertex_list(q, r.differentials[k].cols);
    s["differential"] = path_matrix_to_json(B, r.differentials[k]);
    s["syzygy"] = loewy_string(q, r.syzygies[k]);
    s["matches_rotation"] = bool(r.matches_rotation[k]);
    if (k > 0) {
      s["exact"] = bool(r.exact[k - 1]);
      s["matches_oracle"] = bool(r.matches_oracle[k - 1]);
      s["automorphism"] = bool(r.automorphisms[k]);
    }
    steps.push_back(s);
  }
  j["steps"] = steps;
  return j;
}

Json suite_to_json(const SuiteReport& r) {
  Json j;
  j["suite"] = r.suite;
  j["ok"] = r.ok();
  j["passed"] = r.passed();
  j["failed"] = r.failed();
  j["skipped"] = r.skipped();
  Json cs = Json::array();
  for (const auto& c : r.checks) {
    Json x{{"name", c.name}, {"status", c.skipped ? "skipped" : c.passed ? "pass" : "fail"}};
    if (!c.witness.empty()) x["witness"] = c.witness;
    cs.push_back(x);
  }
  j["checks"] = cs;
  return j;
}

Json catalog_entry_to_json(const CatalogEntry& e) {
  Json j;
  j["name"] = e.name;
  j["size"] = e.size;
  j["theorem_scope"] = e.theorem_scope;
  j["key"] = e.key;
  j["quiver_classes"] = e.quiver_classes;
  j["quiver"] = Json::parse(quiver_to_json(e.quiver));
  if (e.summary) j["summary"] = suite_to_json(*e.summary);
  return j;
}

std::string polygon_to_dot(const CheckerboardPolygon& P) {
  const Quiver& q = P.quiver();
  std::ostringstream s;
  s << "graph polygon {\n  node [shape=point];\n";
  auto name = [&](int v) {
    const auto& mv = P.vertices()[v];
    return mv.boundary ? "b" + std::to_string(mv.index) : "x_" + q.arrow(mv.arrow).id;
  };
  for (int k = 0; k < P.size(); ++k)
    s << "  b" << k << " [shape=circle, label=\"" << k << (P.sign(k) < 0 ? "-" : "+") << "\"];\n";
  for (int k = 0; k < P.size(); ++k) s << "  b" << k << " -- b" << (k + 1) % P.size() << " [style=bold];\n";
  for (const auto& e : P.edges()) {
    s << "  \"" << name(e.a) << "\" -- \"" << name(e.b) << "\"";
    if (e.label >= 0) s << " [label=\"" << q.vertex(e.label) << "\"]";
    s << ";\n";
  }
  s << "}\n";
  return s.str();
}

std::string polygon_to_tikz(const CheckerboardPolygon& P) {
  const Quiver& q = P.quiver();
  const int n = P.size();
  const double pi = std::acos(-1.0);
  auto x = [&](int k) { return 3.0 * std::cos(pi / 2 - 2 * pi * k / n); };
  auto y = [&](int k) { return 3.0 * std::sin(pi / 2 - 2 * pi * k / n); };
  std::ostringstream s;
  s << "\\begin{tikzpicture}\n";
  s << "  \\draw[thick] ";
  for (int k = 0; k < n; ++k) s << "(" << fixed(x(k)) << "," << fixed(y(k)) << ") -- ";
  s << "cycle;\n";
  for (int k = 0; k < n; ++k)
    s << "  \\node at (" << fixed(1.12 * x(k)) << "," << fixed(1.12 * y(k)) << ") {$" << k
      << "^{" << (P.sign(k) < 0 ? "-" : "+") << "}$};\n";
  // Straight chords have the same crossings as the radical lines: two lines
  // cross iff their endpoints interleave, and never twice.
  for (const auto& L : P.lines()) {
    s << "  \\draw[red] (" << fixed(x(L.minus)) << "," << fixed(y(L.minus)) << ") -- node[fill=white,inner sep=1pt] {"
      << q.vertex(L.vertex) << "} (" << fixed(x(L.plus)) << "," << fixed(y(L.plus)) << ");\n";
  }
  s << "\\end{tikzpicture}\n";
  return s.str();
}

std::string translation_quiver_to_dot(const CheckerboardPolygon& P, const TranslationQuiver& t) {
  (void)P;
  std::ostringstream s;
  s << "digraph ar {\n  rankdir=LR;\n";
  for (const auto& v : t.vertices) s << "  \"" << diagonal_name(v) << "\";\n";
  for (auto [a, b] : t.arrows)
    s << "  \"" << diagonal_name(t.vertices[a]) << "\" -> \"" << diagonal_name(t.vertices[b]) << "\";\n";
  for (size_t v = 0; v < t.vertices.size(); ++v)
    s << "  \"" << diagonal_name(t.vertices[v]) << "\" -> \"" << diagonal_name(t.vertices[t.translation[v]])
      << "\" [style=dashed, constraint=false];\n";
  s << "}\n";
  return s.str();
}

OracleResolution oracle_resolution(const Algebra& B, const ModuleRep& M, int steps) {
  const Quiver& q = B.quiver();
  OracleResolution r;
  r.syzygies.push_back(M);
  for (int k = 0; k < steps; ++k) {
    const ModuleRep& X = r.syzygies.back();
    if (X.is_zero()) break;
    r.presentations.push_back(minimal_presentation(B, X));
    r.syzygies.push_back(syzygy(B, X));
    if (r.period < 0 && is_iso(q, r.syzygies.back(), M)) r.period = k + 1;
  }
  return r;
}

Json oracle_resolution_to_json(const Algebra& B, const OracleResolution& r) {
  const Quiver& q = B.quiver();
  Json j;
  j["mode"] = "experimental";
  j["period"] = r.period > 0 ? Json(r.period) : Json(nullptr);
  Json steps = Json::array();
  for (size_t k = 0; k < r.presentations.size(); ++k) {
    Json s;
    s["k"] = k;
    s["syzygy"] = loewy_string(q, r.syzygies[k]);
    s["P0"] = vertex_list(q, r.presentations[k].rows);
    s["P1"] = vertex_list(q, r.presentations[k].cols);
    s["differential"] = path_matrix_to_json(B, r.presentations[k]);
    steps.push_back(s);
  }
  j["steps"] = steps;
  return j;
}

}  // namespace dimer
