#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dimer/linalg.hpp"
#include "dimer/quiver.hpp"

namespace dimer {

struct Path {
  int source = -1;
  int target = -1;
  std::vector<int> arrows;  // composed left to right
  int length() const { return int(arrows.size()); }
};

Path make_path(const Quiver& q, std::vector<int> arrows);  // throws if not composable
std::string path_name(const Quiver& q, const Path& p);

struct Relation {
  int arrow = -1;          // the arrow whose cyclic derivative this is
  bool zero = true;        // lhs = 0, otherwise lhs = rhs
  std::vector<int> lhs, rhs;
  int source = -1, target = -1;
};

// Cyclic derivatives of the tree potential. Signs cancel, so the relations
// are a zero relation per boundary arrow and a commutativity per interior one.
std::vector<Relation> relations(const Quiver& q, const DualGraph& g);

struct CycleCheck {
  Path cycle;
  bool zero = false;        // certified to lie in the ideal
  bool determined = true;   // false if the truncated search was inconclusive
};

// B = Jac(Q,W) for a dimer tree quiver, built from the brute-force oracle:
// each e_x B e_y is the quotient of the span of vertex-simple paths x ~> y by
// all relation consequences u r v.
class Algebra {
 public:
  explicit Algebra(Quiver q);

  const Quiver& quiver() const { return q_; }
  const DualGraph& dual() const { return g_; }
  const std::vector<Relation>& rels() const { return rels_; }
  int num_vertices() const { return q_.num_vertices(); }

  bool nonzero(int x, int y) const { return rep_[x][y].has_value(); }
  // Canonical representative of the class e_x B e_y; requires nonzero(x,y).
  const Path& rep(int x, int y) const { return *rep_[x][y]; }
  // The scalar c with [arrows] = c * rep(s,t); 0 for zero paths.
  Rational coeff(int source, const std::vector<int>& arrows) const;
  Rational coeff(const Path& p) const { return coeff(p.source, p.arrows); }
  bool is_zero(const Path& p) const { return coeff(p) == 0; }
  // rep(x,y) rep(y,z) = mult(x,y,z) rep(x,z)
  Rational mult(int x, int y, int z) const;
  int dimension() const;
  // Largest dim e_x B e_y seen while building (<= 1 for schurian algebras).
  int max_pair_dimension() const { return max_pair_dim_; }
  bool schurian() const { return max_pair_dim_ <= 1; }

  // Independent certificate that every vertex-simple cyclic path is zero.
  std::vector<CycleCheck> cyclic_zero_checks() const;

  // The algebra of the opposite quiver (built lazily, shared).
  const Algebra& opposite() const;

 private:
  struct PairData {
    std::vector<std::vector<int>> paths;  // vertex-simple paths
    std::vector<Rational> phi;            // coefficient per path
  };
  Quiver q_;
  DualGraph g_;
  std::vector<Relation> rels_;
  std::vector<std::vector<std::optional<Path>>> rep_;
  std::vector<std::vector<PairData>> data_;
  int max_pair_dim_ = 0;
  mutable std::shared_ptr<Algebra> op_;

  int find_path(int x, int y, const std::vector<int>& arrows) const;
};

// Finite-dimensional right module: a representation of Q satisfying the
// relations. action[a] maps M_{s(a)} to M_{t(a)}.
struct ModuleRep {
  std::vector<int> dims;
  std::vector<MatQ> action;
  int total_dim() const;
  bool is_zero() const { return total_dim() == 0; }
};

struct MorphismRep {
  std::vector<MatQ> blocks;  // blocks[v]: target dims x source dims
};

ModuleRep zero_module(const Quiver& q);
bool satisfies_relations(const Algebra& B, const ModuleRep& M);
bool is_morphism(const Quiver& q, const ModuleRep& M, const ModuleRep& N, const MorphismRep& f);

// Action matrix of a path on M (identity for the trivial path).
MatQ path_action(const Quiver& q, const ModuleRep& M, const Path& p);

ModuleRep projective(const Algebra& B, int i);
ModuleRep injective(const Algebra& B, int i);
ModuleRep simple(const Algebra& B, int i);
ModuleRep radical(const Algebra& B, int i);

// Direct sum of indecomposable projectives with a labeled basis: at vertex y
// the basis vectors are rep(tops[s], y) for the summands s listed in basis[y].
struct ProjectiveSum {
  std::vector<int> tops;
  ModuleRep module;
  std::vector<std::vector<int>> basis;
  int index(int y, int s) const;  // position of summand s in basis[y], or -1
};
ProjectiveSum projective_sum(const Algebra& B, const std::vector<int>& tops);

MorphismRep identity_morphism(const ModuleRep& M);
MorphismRep zero_morphism(const ModuleRep& M, const ModuleRep& N);
MorphismRep compose(const MorphismRep& f, const MorphismRep& g);  // f after g
MorphismRep add(const MorphismRep& f, const MorphismRep& g, const Rational& c = 1);
bool is_zero(const MorphismRep& f);
int rank(const MorphismRep& f);

std::vector<MorphismRep> hom_space(const Quiver& q, const ModuleRep& M, const ModuleRep& N);

struct SubModule {
  ModuleRep module;
  MorphismRep inclusion;
};
struct QuotientModule {
  ModuleRep module;
  MorphismRep projection;
};

SubModule kernel(const Quiver& q, const ModuleRep& M, const ModuleRep& N, const MorphismRep& f);
QuotientModule cokernel(const Quiver& q, const ModuleRep& M, const ModuleRep& N, const MorphismRep& f);
SubModule image(const Quiver& q, const ModuleRep& M, const ModuleRep& N, const MorphismRep& f);
ModuleRep direct_sum(const Quiver& q, const std::vector<ModuleRep>& ms);
ModuleRep dual(const Quiver& q, const ModuleRep& M);  // a module over the opposite quiver

// Radical layers (top first) as vertex multiplicity vectors.
std::vector<std::vector<int>> loewy_layers(const Quiver& q, const ModuleRep& M);
std::vector<int> top_dims(const Quiver& q, const ModuleRep& M);
// e.g. "2 5/3 6/7/8"
std::string loewy_string(const Quiver& q, const ModuleRep& M);

struct ProjectiveCover {
  ProjectiveSum cover;
  MorphismRep surjection;
};
ProjectiveCover projective_cover(const Algebra& B, const ModuleRep& M);
SubModule syzygy_inclusion(const Algebra& B, const ModuleRep& M);
ModuleRep syzygy(const Algebra& B, const ModuleRep& M);
ModuleRep cosyzygy(const Algebra& B, const ModuleRep& M);

// Matrix of path classes between direct sums of projectives:
// entry (s,t) is coef(s,t) * rep(rows[s], cols[t]), a map P(cols[t]) -> P(rows[s])
// given by left multiplication.
struct PathMatrix {
  std::vector<int> rows;  // P0 summands
  std::vector<int> cols;  // P1 summands
  MatQ coef;
  bool entry_nonzero(int s, int t) const { return coef(s, t) != 0; }
};

PathMatrix compose(const Algebra& B, const PathMatrix& a, const PathMatrix& b);  // a after b
bool path_matrix_equal(const PathMatrix& a, const PathMatrix& b);
// The module map between projective sums induced by a path matrix.
MorphismRep to_morphism(const Algebra& B, const PathMatrix& f, const ProjectiveSum& P1,
                        const ProjectiveSum& P0);
// Minimal presentation P1 -> P0 -> M.
PathMatrix minimal_presentation(const Algebra& B, const ModuleRep& M);
QuotientModule path_matrix_cokernel(const Algebra& B, const PathMatrix& f);

// Injective sums and the Nakayama image of a path matrix.
struct InjectiveSum {
  std::vector<int> socles;
  ModuleRep module;
  std::vector<std::vector<int>> basis;
};
InjectiveSum injective_sum(const Algebra& B, const std::vector<int>& socles);
// nu(f): I(cols) -> I(rows)
MorphismRep nakayama(const Algebra& B, const PathMatrix& f, const InjectiveSum& I1,
                     const InjectiveSum& I0);

ModuleRep tau(const Algebra& B, const ModuleRep& M);
ModuleRep tau_inv(const Algebra& B, const ModuleRep& M);

int ext1(const Algebra& B, const ModuleRep& M, const ModuleRep& N);
// Middle term of a non-split extension 0 -> N -> E -> M -> 0, if Ext^1(M,N) != 0.
std::optional<ModuleRep> nonsplit_extension(const Algebra& B, const ModuleRep& M, const ModuleRep& N);
int hom_dim(const Quiver& q, const ModuleRep& M, const ModuleRep& N);
int stable_hom_dim(const Algebra& B, const ModuleRep& M, const ModuleRep& N);
// Whether f - g factors through a projective.
bool stably_equal(const Algebra& B, const ModuleRep& M, const ModuleRep& N, const MorphismRep& f,
                  const MorphismRep& g);

bool is_iso(const Quiver& q, const ModuleRep& M, const ModuleRep& N);
// dim End/rad End == 1
bool is_indecomposable(const Quiver& q, const ModuleRep& M);
bool is_projective(const Algebra& B, const ModuleRep& M);
bool is_cmp(const Algebra& B, const ModuleRep& M);

}  // namespace dimer
