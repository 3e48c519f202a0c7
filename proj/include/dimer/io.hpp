#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "dimer/catalog.hpp"
#include "dimer/syzygy.hpp"

namespace dimer {

using Json = nlohmann::ordered_json;

Json validation_to_json(const Quiver& q, const ValidationReport& r);
Json module_to_json(const Quiver& q, const ModuleRep& M);
// Entries are {"scalar": "1", "path": "3->1->2"}, or null for zero.
Json path_matrix_to_json(const Algebra& B, const PathMatrix& f);
Json polygon_to_json(const CheckerboardPolygon& P);
Json diagonals_to_json(const DimerModel& m);
Json resolution_to_json(const DimerModel& m, const ProjectiveResolution& r);
Json suite_to_json(const SuiteReport& r);
Json catalog_entry_to_json(const CatalogEntry& e);

// Boundary, radical lines and crossings; node names are stable across runs.
std::string polygon_to_dot(const CheckerboardPolygon& P);
std::string polygon_to_tikz(const CheckerboardPolygon& P);
// Diagonal translation quiver with tau drawn dashed.
std::string translation_quiver_to_dot(const CheckerboardPolygon& P, const TranslationQuiver& t);

// Outside theorem scope: minimal presentations of Omega^k M read off the
// oracle. presentations[k] : P_{k+1} -> P_k.
struct OracleResolution {
  std::vector<ModuleRep> syzygies;
  std::vector<PathMatrix> presentations;
  int period = -1;  // smallest k > 0 with Omega^k M = M, if seen
};
OracleResolution oracle_resolution(const Algebra& B, const ModuleRep& M, int steps);
Json oracle_resolution_to_json(const Algebra& B, const OracleResolution& r);

}  // namespace dimer
