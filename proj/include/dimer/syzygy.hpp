#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dimer/algebra.hpp"
#include "dimer/diagonals.hpp"
#include "dimer/polygon.hpp"

namespace dimer {

// Everything derived from one validated quiver. Representatives and syzygy
// modules are cached per diagonal; the object is not thread safe.
class DimerModel {
 public:
  explicit DimerModel(const Quiver& q);

  const Quiver& quiver() const { return B_.quiver(); }
  const Algebra& algebra() const { return B_; }
  const CheckerboardPolygon& polygon() const { return P_; }
  // Every chordless cycle is a triangle; outside this the engine refuses to
  // build f and only oracle data is reported.
  bool theorem_scope() const { return scope_; }
  const std::vector<TwoDiagonal>& diagonals() const { return diags_; }

  const std::vector<DiagRepresentative>& representatives(const TwoDiagonal& d) const;
  // coker f of the first representative
  const ModuleRep& module(const TwoDiagonal& d) const;

 private:
  Algebra B_;
  CheckerboardPolygon P_;
  bool scope_;
  std::vector<TwoDiagonal> diags_;
  mutable std::map<TwoDiagonal, std::vector<DiagRepresentative>> reps_;
  mutable std::map<TwoDiagonal, ModuleRep> modules_;
};

struct ConjectureModeError : DomainError {
  using DomainError::DomainError;
};

// A path with no two arrows in a common triangle, if one exists.
std::optional<Path> valid_path(const Algebra& B, int x, int y);

// Forward test for the step between neighbouring entries s and t.
bool step_forward(const Algebra& B, const CrossingSequence& seq, int s, int t);
bool run_forward(const Algebra& B, const CrossingSequence& seq, int s, int t);

PathMatrix build_f(const DimerModel& m, const DiagRepresentative& r);
// J f J with J = diag(1, -1, 1, ...)
PathMatrix bar(const PathMatrix& f);
// Same map with the summands listed in the given orders.
PathMatrix reorder(const PathMatrix& f, const std::vector<int>& rows, const std::vector<int>& cols);
// Text of entry (s,t): "3->1" for an arrow, "2~>1" for a longer path, "-" prefix for sign.
std::string entry_label(const Algebra& B, const PathMatrix& f, int s, int t);
ModuleRep syzygy_module(const DimerModel& m, const DiagRepresentative& r);

struct ExactnessReport {
  bool terms_match = false;
  bool composes_to_zero = false;
  bool ranks_match = false;
  std::string witness;
  bool ok() const { return terms_match && composes_to_zero && ranks_match; }
};

// ker f_x = im bar(f_y) for a representative y of the rotation of x.
ExactnessReport check_exact(const DimerModel& m, const DiagRepresentative& x, const DiagRepresentative& y);
// Generic form: ker a = im b, with b's rows matched to a's columns by vertex.
ExactnessReport check_exact(const Algebra& B, const PathMatrix& a, const PathMatrix& b);

struct CompatiblePair {
  DiagRepresentative x, y;
  bool literal = false;  // satisfies the compatibility clauses as stated
  ExactnessReport exact;
};

// Representatives of d and R d, preferring literally compatible exact pairs;
// if `first` is given only representatives of d equal to it are tried.
CompatiblePair choose_compatible(const DimerModel& m, const TwoDiagonal& d,
                                 const DiagRepresentative* first = nullptr);

// Automorphisms (psi1, psi0) with psi0 f = g psi1, for two presentations with
// the same terms.
std::optional<std::pair<PathMatrix, PathMatrix>> homotopy_automorphism(const Algebra& B, const PathMatrix& f,
                                                                       const PathMatrix& g);

struct ProjectiveResolution {
  std::vector<TwoDiagonal> diagonals;        // R^k gamma
  std::vector<std::vector<int>> terms;       // P_k as vertex lists
  std::vector<PathMatrix> differentials;     // d_k : P_{k+1} -> P_k
  // The automorphism pair used to conjugate d_k, when the chosen
  // representatives of R^k gamma differ.
  std::vector<std::optional<std::pair<PathMatrix, PathMatrix>>> automorphisms;
  std::vector<ModuleRep> syzygies;           // coker d_k
  std::vector<bool> exact;                   // exact at P_{k+1}
  std::vector<bool> matches_rotation;        // coker d_k = M of R^k gamma
  std::vector<bool> matches_oracle;          // coker d_k = Omega coker d_{k-1}
  bool literal_compatibility = true;
  bool ok() const;
};

ProjectiveResolution resolution(const DimerModel& m, const TwoDiagonal& d, int steps);

bool radical_correspondence(const DimerModel& m, int vertex);

struct PivotMorphism {
  TwoDiagonal source, target;
  DiagRepresentative from, to;
  PathMatrix g1, g0;          // after sign fixes
  MorphismRep induced;        // on cokernels
  bool commutes = false;
  std::string convention;     // "row/column" unless another sign rule was needed
  int arrows = 0;             // arrow entries in g0 and g1 together
};

// The pivot morphism for fixed representatives; the square is tested, not assumed.
PivotMorphism pivot_morphism(const DimerModel& m, const DiagRepresentative& x, const DiagRepresentative& y);
// Searches representative pairs for a commuting square.
PivotMorphism find_pivot_morphism(const DimerModel& m, const TwoDiagonal& d, const TwoDiagonal& e);

struct MeshRecord {
  TwoDiagonal diagonal;
  std::vector<TwoDiagonal> middle;  // the 2-pivots of gamma
  TwoDiagonal end;                  // R^2 gamma
  bool applicable = false;          // R gamma is not a radical line
  bool mesh_holds = false;          // stable mesh relation
  bool ses_applicable = false;      // covered by the short exact sequence statement
  int projective_insert = -1;       // i when gamma = rho(i)
  bool ses_exact = false;
  // Scalars: h'g' + mesh_scalar h''g'' is stably zero, and the sequence uses
  // [h', epsilon h'', v]. Both are -1 and +1 up to sign conventions unless the
  // maps had to be moved between representatives.
  Rational mesh_scalar = -1;
  Rational epsilon = 0;
  bool transported = false;         // outer representatives differ between the squares
  std::string detail;
};

MeshRecord ar_structure(const DimerModel& m, const TwoDiagonal& d);

struct ArQuiverCheck {
  bool pairwise_distinct = false;
  bool ext_dimension_one = false;   // Ext^1(Omega^2 M, M) = 1 for all gamma
  bool middle_terms_match = false;  // AR middle terms = pivots plus projectives
  bool translation_matches = false; // Omega^2 M_gamma = M_{R^2 gamma}
  bool isomorphic = false;
  std::vector<std::string> failures;
  // Module side: arrows between diagonal indices read off the AR middle terms.
  std::vector<std::pair<int, int>> arrows;
};

ArQuiverCheck build_ar_quiver(const DimerModel& m);

// Step data along the crossing sequence of a representative.
struct GammaQuiver {
  std::vector<int> vertices;  // Q(gamma)_0
  struct Step {
    int from = -1, to = -1;   // entry indices, oriented so the step is forward when one direction is
    bool forward = false;
    bool rectangular = false;
    int degree = -1;          // inside the maximal forward run, -1 outside one
    int k = -1;               // third vertex of the triangle at pair `from` inside the run's Q(gamma)
  };
  std::vector<Step> steps;    // one per neighbouring pair of entries, in order
};

GammaQuiver gamma_quiver(const DimerModel& m, const DiagRepresentative& r);

enum class StepType { R0, R1, T0, T1 };
std::string step_word(const std::vector<StepType>& w);
std::vector<StepType> parse_step_word(const std::string& s);

struct StaircaseProfile {
  std::vector<int> t;  // 1 = t_0 < ... < t_p = n, 1-based as in the matrix
};

// t_l from the step types Sigma_1 .. Sigma_{n-1}.
StaircaseProfile staircase_from_steps(const std::vector<StepType>& steps);
// Nonzero pattern predicted by the profile for an n x n run.
std::vector<std::vector<bool>> staircase_pattern(const StaircaseProfile& p, int n);

struct StaircaseReport {
  struct Run {
    int first = -1, last = -1;  // entry indices
    bool reversed = false;
    std::vector<StepType> steps;
    StaircaseProfile profile;
    bool shape_ok = false, entry_rules_ok = false, degree_rules_ok = false, dots_ok = false,
         blocks_ok = false;
  };
  std::vector<Run> runs;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

StaircaseReport validate_staircase(const DimerModel& m, const DiagRepresentative& r);

struct StableRecord {
  int stable_end = 0;
  int self_ext = 0;
  std::vector<std::pair<TwoDiagonal, bool>> ext_vs_crossing;  // per other diagonal
  bool ok() const;
};

StableRecord stable_checks(const DimerModel& m, const TwoDiagonal& d);

struct CosyzygyRecord {
  bool minimal = false;        // f is a minimal presentation of its cokernel
  bool matches_tau = false;    // ker nu f = tau M
  bool ok() const { return minimal && matches_tau; }
};

CosyzygyRecord cosyzygy_check(const DimerModel& m, const TwoDiagonal& d);

// Outside theorem scope: compares Omega orbits of rad P(i) with the rotation
// orbits of radical lines. Purely empirical.
struct ConjectureReport {
  struct Line {
    int vertex = -1;
    int omega_period = -1;  // -1 if no repetition within the bound
    int rotation_period = -1;
    std::vector<std::pair<int, int>> coincidences;  // (k, i') with R^k rho(i) = rho(i') and Omega^k rad P(i) = rad P(i')
    std::vector<std::pair<int, int>> mismatches;     // (k, i') where the rotation hits rho(i') but Omega does not
  };
  std::vector<Line> lines;
};

ConjectureReport conjecture_report(const DimerModel& m);

}  // namespace dimer
