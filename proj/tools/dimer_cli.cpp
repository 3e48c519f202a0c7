// Command-line front end. Exit codes: 0 success, 1 domain failure, 2 usage
// or input error.
#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "dimer/io.hpp"

using namespace dimer;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Failure of a check, reported with exit code 1 after the output is written.
struct CheckFailed {};

Quiver load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream s;
  s << in.rdbuf();
  return parse_quiver(s.str());
}

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_validate(const std::string& file, bool json) {
  Quiver q = load(file);
  ValidationReport r = validate_dimer_tree(q);
  if (json) {
    print(validation_to_json(q, r));
  } else {
    std::cout << (r.ok ? "valid" : "invalid") << " dimer tree quiver: " << q.num_vertices() << " vertices, "
              << q.num_arrows() << " arrows\n";
    if (r.ok) {
      std::cout << "theorem scope: " << (r.theorem_scope ? "yes" : "no (conjecture mode)") << "\n";
      std::cout << "root cycle: " << r.root_vertices << "\n";
    }
    for (const auto& v : r.violations) std::cout << "violation " << v.rule << ": " << v.detail << "\n";
  }
  return r.ok ? 0 : 1;
}

int cmd_polygon(const std::string& file, const std::string& format) {
  Quiver q = load(file);
  DualGraph g = validated_dual_graph(q);
  CheckerboardPolygon P(q, g);
  if (format == "json") {
    print(polygon_to_json(P));
  } else if (format == "dot") {
    std::cout << polygon_to_dot(P);
  } else if (format == "tikz") {
    std::cout << polygon_to_tikz(P);
  } else {
    std::cout << "2N = " << P.size() << " (weights give " << boundary_size_by_weights(q, g) << ")\n";
    for (const auto& L : P.lines())
      std::cout << "rho(" << q.vertex(L.vertex) << "): " << L.minus << " -> " << L.plus << ", "
                << L.crossings.size() << " crossings\n";
  }
  return 0;
}

int cmd_diagonals(const std::string& file, bool json) {
  DimerModel m(load(file));
  Json d = diagonals_to_json(m);
  if (json) {
    print(d);
    return 0;
  }
  std::cout << m.diagonals().size() << " two-diagonals in a " << m.polygon().size() << "-gon\n";
  for (const auto& x : d) {
    std::cout << x["diagonal"].get<std::string>();
    if (!x["radical_line"].is_null()) std::cout << " rho(" << x["radical_line"].get<std::string>() << ")";
    if (x["diameter"].get<bool>()) std::cout << " diameter";
    std::cout << ": " << x["crossing_sequences"][0].get<std::string>() << "\n";
  }
  return 0;
}

int cmd_resolve(const std::string& file, const std::string& diag, int steps, bool json) {
  DimerModel m(load(file));
  const Quiver& q = m.quiver();
  TwoDiagonal d = parse_diagonal(m.polygon(), diag);
  if (!m.theorem_scope()) {
    int i = radical_vertex(m.polygon(), d);
    if (i < 0)
      throw DomainError("outside theorem scope only radical lines can be resolved (via rad P(i)); " + diag +
                        " is not one");
    OracleResolution r = oracle_resolution(m.algebra(), radical(m.algebra(), i), steps);
    Json j = oracle_resolution_to_json(m.algebra(), r);
    j["diagonal"] = diagonal_name(d);
    j["start"] = "rad P(" + q.vertex(i) + ")";
    if (json) {
      print(j);
    } else {
      std::cout << "experimental: oracle resolution of rad P(" << q.vertex(i) << ")\n";
      for (const auto& s : j["steps"])
        std::cout << "Omega^" << s["k"].get<int>() << " = " << s["syzygy"].get<std::string>() << "\n";
      std::cout << "period: " << (r.period > 0 ? std::to_string(r.period) : "not reached") << "\n";
    }
    return 0;
  }
  ProjectiveResolution r = resolution(m, d, steps);
  if (json) {
    print(resolution_to_json(m, r));
  } else {
    for (size_t k = 0; k < r.differentials.size(); ++k) {
      std::cout << "k=" << k << " " << diagonal_name(r.diagonals[k]) << ": P1 =";
      for (int v : r.differentials[k].cols) std::cout << " P(" << q.vertex(v) << ")";
      std::cout << " -> P0 =";
      for (int v : r.differentials[k].rows) std::cout << " P(" << q.vertex(v) << ")";
      std::cout << ", coker " << loewy_string(q, r.syzygies[k]) << "\n";
    }
    std::cout << (r.ok() ? "exact" : "NOT exact") << "\n";
  }
  if (!r.ok()) throw CheckFailed{};
  return 0;
}

int cmd_ar_quiver(const std::string& file, bool dot) {
  DimerModel m(load(file));
  TranslationQuiver t = build_translation_quiver(m.polygon());
  if (dot) {
    std::cout << translation_quiver_to_dot(m.polygon(), t);
    return 0;
  }
  std::cout << t.vertices.size() << " vertices, " << t.arrows.size() << " arrows, mesh condition "
            << (t.mesh_condition() ? "holds" : "fails") << "\n";
  if (!m.theorem_scope()) {
    std::cout << "module side skipped: outside theorem scope\n";
    return 0;
  }
  ArQuiverCheck a = build_ar_quiver(m);
  std::cout << "module AR quiver isomorphic: " << (a.isomorphic ? "yes" : "no") << "\n";
  for (const auto& f : a.failures) std::cout << "  " << f << "\n";
  if (!a.isomorphic) throw CheckFailed{};
  return 0;
}

int cmd_check(const std::string& file, const std::string& suite, bool json) {
  SuiteReport r = run_suite(load(file), suite);
  if (json) {
    print(suite_to_json(r));
  } else {
    for (const auto& c : r.checks) {
      std::cout << (c.skipped ? "SKIP " : c.passed ? "PASS " : "FAIL ") << c.name;
      if (!c.witness.empty()) std::cout << " (" << c.witness << ")";
      std::cout << "\n";
    }
    std::cout << r.passed() << " passed, " << r.failed() << " failed, " << r.skipped() << " skipped\n";
  }
  if (!r.ok()) throw CheckFailed{};
  return 0;
}

int cmd_catalog(int max_size, const std::string& suite, const std::string& out) {
  if (max_size < 6 || max_size % 2) throw UsageError("--max-size must be even and at least 6");
  std::vector<CatalogEntry> entries = enumerate_catalog(max_size);
  bool ok = true;
  if (!suite.empty())
    for (auto& e : entries) {
      e.summary = run_suite(e, suite);
      ok = ok && e.summary->ok();
    }
  Json index;
  index["max_size"] = max_size;
  index["total"] = entries.size();
  Json counts;
  for (const auto& e : entries) {
    std::string k = std::to_string(e.size);
    counts[k] = counts.contains(k) ? counts[k].get<int>() + 1 : 1;
  }
  index["counts"] = counts;
  Json list = Json::array();
  for (const auto& e : entries) {
    Json x{{"name", e.name}, {"size", e.size}, {"vertices", e.quiver.num_vertices()},
           {"theorem_scope", e.theorem_scope}, {"key", e.key}};
    if (e.summary) x["suite_ok"] = e.summary->ok();
    list.push_back(x);
  }
  index["entries"] = list;
  if (!out.empty()) {
    std::filesystem::create_directories(out);
    for (const auto& e : entries) std::ofstream(out + "/" + e.name + ".json") << catalog_entry_to_json(e).dump(2) << "\n";
    std::ofstream(out + "/index.json") << index.dump(2) << "\n";
  }
  print(index);
  if (!ok) throw CheckFailed{};
  return 0;
}

int cmd_export(const std::string& file, const std::string& what, const std::string& format,
               const std::string& out) {
  Quiver q = load(file);
  std::string text;
  if (what == "quiver") {
    if (format != "json") throw UsageError("quiver export supports --format json");
    text = quiver_to_json(q) + "\n";
  } else if (what == "polygon") {
    DualGraph g = validated_dual_graph(q);
    CheckerboardPolygon P(q, g);
    text = format == "json" ? polygon_to_json(P).dump(2) + "\n" : format == "dot" ? polygon_to_dot(P) : polygon_to_tikz(P);
  } else if (what == "diagonals") {
    if (format != "json") throw UsageError("diagonals export supports --format json");
    text = diagonals_to_json(DimerModel(q)).dump(2) + "\n";
  } else {
    if (format != "dot") throw UsageError("translation export supports --format dot");
    DualGraph g = validated_dual_graph(q);
    CheckerboardPolygon P(q, g);
    text = translation_quiver_to_dot(P, build_translation_quiver(P));
  }
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream o(out);
    if (!o) throw UsageError("cannot write " + out);
    o << text;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Syzygies of dimer tree algebras via checkerboard polygons"};
  app.require_subcommand(1);
  std::string file, diag, suite = "full", format, out, what;
  bool json = false, dot = false, tikz = false;
  int steps = 4, max_size = 10;

  auto* validate = app.add_subcommand("validate", "check the dimer tree conditions");
  validate->add_option("file", file)->required();
  validate->add_flag("--json", json);

  auto* polygon = app.add_subcommand("polygon", "build the checkerboard polygon");
  polygon->add_option("file", file)->required();
  auto* pj = polygon->add_flag("--json", json);
  auto* pd = polygon->add_flag("--dot", dot);
  auto* pt = polygon->add_flag("--tikz", tikz);
  pj->excludes(pd)->excludes(pt);
  pd->excludes(pt);

  auto* diagonals = app.add_subcommand("diagonals", "list 2-diagonals with crossing sequences");
  diagonals->add_option("file", file)->required();
  diagonals->add_flag("--json", json);

  auto* resolve = app.add_subcommand("resolve", "projective resolution along the rotation orbit");
  resolve->add_option("file", file)->required();
  resolve->add_option("--diagonal", diag, "endpoints a-b")->required();
  resolve->add_option("--steps", steps)->check(CLI::Range(0, 1000));
  resolve->add_flag("--json", json);

  auto* ar = app.add_subcommand("ar-quiver", "translation quiver and module AR quiver check");
  ar->add_option("file", file)->required();
  ar->add_flag("--dot", dot);

  auto* check = app.add_subcommand("check", "run an invariant suite");
  check->add_option("file", file)->required();
  check->add_option("--suite", suite)->check(CLI::IsMember(suite_names()));
  check->add_flag("--json", json);

  auto* catalog = app.add_subcommand("catalog", "enumerate patterns up to a polygon size");
  std::string cat_suite;
  catalog->add_option("--max-size", max_size)->required();
  catalog->add_option("--suite", cat_suite)->check(CLI::IsMember(suite_names()));
  catalog->add_option("--out", out);

  auto* exp = app.add_subcommand("export", "write quiver, polygon, diagonal or translation data");
  exp->add_option("file", file)->required();
  exp->add_option("--what", what)->required()->check(CLI::IsMember({"quiver", "polygon", "diagonals", "translation"}));
  exp->add_option("--format", format)->required()->check(CLI::IsMember({"json", "dot", "tikz"}));
  exp->add_option("--out", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*validate) return cmd_validate(file, json);
    if (*polygon) return cmd_polygon(file, json ? "json" : dot ? "dot" : tikz ? "tikz" : "text");
    if (*diagonals) return cmd_diagonals(file, json);
    if (*resolve) return cmd_resolve(file, diag, steps, json);
    if (*ar) return cmd_ar_quiver(file, dot);
    if (*check) return cmd_check(file, suite, json);
    if (*catalog) return cmd_catalog(max_size, cat_suite, out);
    if (*exp) return cmd_export(file, what, format, out);
  } catch (const CheckFailed&) {
    return 1;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
