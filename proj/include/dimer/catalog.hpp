#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dimer/polygon.hpp"
#include "dimer/quiver.hpp"

namespace dimer {

// Canonical code of a simple digraph on n vertices under relabeling.
// order[k] is the vertex placed at position k.
struct CanonicalForm {
  std::string code;
  std::vector<int> order;
};
CanonicalForm canonical_form(int n, const std::vector<std::pair<int, int>>& arcs);

// Invariant under isomorphism and under passing to the opposite quiver.
std::string quiver_key(const Quiver& q);
// Radical line endpoints as unordered chords, minimised over the dihedral
// group of the boundary. Vertex labels do not enter.
std::string pattern_key(const CheckerboardPolygon& P);
// Vertices renamed 1..n in canonical order, arrows a1.. sorted by endpoints.
Quiver canonical_relabel(const Quiver& q);

// Every dimer tree quiver with at most max_vertices vertices, one per class
// of quiver_key, built by gluing oriented cycles along boundary arrows.
std::vector<Quiver> dimer_tree_quivers(int max_vertices);

struct SuiteCheck {
  std::string name;
  bool passed = false;
  bool skipped = false;
  std::string witness;  // first failure, or the reason for skipping
};

struct SuiteReport {
  std::string suite;
  std::vector<SuiteCheck> checks;
  int passed() const;
  int failed() const;
  int skipped() const;
  bool ok() const { return failed() == 0; }
};

struct CatalogEntry {
  std::string name;  // "n8-3": third pattern with 8 boundary vertices
  Quiver quiver;
  int size = 0;      // 2N
  bool theorem_scope = false;
  std::string key;   // pattern_key
  int quiver_classes = 1;  // quivers (up to isomorphism and opposite) with this pattern
  std::optional<SuiteReport> summary;
};

// Sorted by size, then number of vertices, then key.
std::vector<CatalogEntry> enumerate_catalog(int max_boundary);

// polygon, algebra, syzygy, ar, or full.
const std::vector<std::string>& suite_names();
SuiteReport run_suite(const Quiver& q, const std::string& suite);
SuiteReport run_suite(const CatalogEntry& e, const std::string& suite);

}  // namespace dimer
