#include <doctest.h>

#include <filesystem>
#include <map>
#include <set>

#include "dimer/catalog.hpp"
#include "dimer/io.hpp"
#include "util.hpp"

using namespace dimer;

namespace {

std::string read(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_SUITE("catalog") {
TEST_CASE("quiver key ignores labels") {
  Quiver q = load_quiver("dodecagon.quiver");
  // relabel every vertex and reverse the arrow list
  std::vector<std::string> vs;
  for (int v = 0; v < q.num_vertices(); ++v) vs.push_back("v" + std::to_string(q.num_vertices() - v));
  std::vector<Arrow> as(q.arrows().rbegin(), q.arrows().rend());
  Quiver r(vs, as);
  CHECK(quiver_key(q) == quiver_key(r));
  CHECK(quiver_key(canonical_relabel(r)) == quiver_key(q));
  // this one is isomorphic to its opposite, the 5-vertex example is not
  CHECK(quiver_key(q) == quiver_key(q.opposite()));
  Quiver i = load_quiver("tri_quad.quiver");
  CHECK(quiver_key(i) != quiver_key(q));
}

TEST_CASE("pattern key is dihedral invariant") {
  auto a = canonical_form(6, {{0, 3}, {1, 4}, {2, 5}});
  auto b = canonical_form(6, {{1, 4}, {2, 5}, {3, 0}});
  CHECK(a.code == b.code);
}

TEST_CASE("catalog counts") {
  auto all = enumerate_catalog(10);
  std::map<int, int> n;
  std::set<std::string> keys;
  for (const auto& e : all) {
    n[e.size]++;
    keys.insert(e.key);
    CHECK(e.quiver_classes >= 1);
  }
  CHECK(n[6] == 2);
  CHECK(n[8] == 5);
  CHECK(n[10] == 17);
  CHECK(keys.size() == all.size());
  int scoped = 0;
  for (const auto& e : all) scoped += e.theorem_scope;
  CHECK(scoped == 9);
}

TEST_CASE("reference quivers are all in the catalog") {
  auto all = enumerate_catalog(10);
  std::map<std::string, std::string> by_key;
  for (const auto& e : all) by_key[e.key] = e.name;
  std::set<std::string> hit;
  int files = 0;
  for (const auto& p : std::filesystem::directory_iterator(data_path("catalog/reference"))) {
    Quiver q = parse_quiver(read(p.path().string()));
    REQUIRE(validate_dimer_tree(q).ok);
    std::string key = pattern_key(CheckerboardPolygon(q, dual_graph(q)));
    CHECK_MESSAGE(by_key.count(key), p.path().filename().string());
    hit.insert(key);
    ++files;
  }
  CHECK(files == 24);
  CHECK(hit.size() == 24);
}

TEST_CASE("golden index files") {
  for (int size : {6, 8, 10}) {
    Json want = Json::parse(read(data_path("catalog/index-" + std::to_string(size) + ".json")));
    auto all = enumerate_catalog(size);
    REQUIRE(want["total"] == all.size());
    for (size_t k = 0; k < all.size(); ++k) {
      CHECK(want["entries"][k]["name"] == all[k].name);
      CHECK(want["entries"][k]["key"] == all[k].key);
    }
  }
}

TEST_CASE("suites") {
  SuiteReport r = run_suite(load_quiver("hexagon.quiver"), "full");
  CHECK(r.ok());
  CHECK(r.skipped() == 0);
  SuiteReport s = run_suite(load_quiver("tri_quad.quiver"), "full");
  CHECK(s.ok());
  CHECK(s.skipped() > 0);
  CHECK_THROWS_AS(run_suite(load_quiver("hexagon.quiver"), "nonsense"), std::invalid_argument);
  CHECK(suite_names().size() == 5);
}

TEST_CASE("plane trees") {
  auto qs = dimer_tree_quivers(6);
  CHECK_FALSE(qs.empty());
  std::set<std::string> keys;
  for (const auto& q : qs) {
    CHECK(validate_dimer_tree(q).ok);
    keys.insert(quiver_key(q));
  }
  CHECK(keys.size() == qs.size());
}
}
