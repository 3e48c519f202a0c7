#include "dimer/syzygy.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace dimer {

DimerModel::DimerModel(const Quiver& q) : B_(q), P_(B_.quiver(), B_.dual()) {
  scope_ = true;
  for (const auto& c : B_.dual().cycles)
    if (c.length() != 3) scope_ = false;
  diags_ = enumerate_diagonals(P_);
}

const std::vector<DiagRepresentative>& DimerModel::representatives(const TwoDiagonal& d) const {
  auto it = reps_.find(d);
  if (it == reps_.end()) it = reps_.emplace(d, all_representatives(P_, d)).first;
  return it->second;
}

const ModuleRep& DimerModel::module(const TwoDiagonal& d) const {
  auto it = modules_.find(d);
  if (it == modules_.end()) it = modules_.emplace(d, syzygy_module(*this, representatives(d).front())).first;
  return it->second;
}

namespace {

std::vector<int> triangles_of(const DualGraph& g, int a) {
  std::vector<int> out;
  for (int c : g.arrow_cycles[a])
    if (g.cycles[c].length() == 3) out.push_back(c);
  return out;
}

VecQ flat(const MorphismRep& f) {
  int len = 0;
  for (auto& b : f.blocks) len += int(b.size());
  VecQ v(len);
  int k = 0;
  for (auto& b : f.blocks)
    for (int j = 0; j < b.cols(); ++j)
      for (int i = 0; i < b.rows(); ++i) v(k++) = b(i, j);
  return v;
}

int total_rank(const MorphismRep& f) {
  int r = 0;
  for (auto& b : f.blocks) r += b.size() ? rank(b) : 0;
  return r;
}

// Some R with p R = I for a surjective p.
MatQ right_inverse(const MatQ& p) {
  MatQ r = p;
  auto piv = rref_inplace(r);
  MatQ sel = MatQ::Zero(p.cols(), Eigen::Index(piv.size()));
  MatQ sub(p.rows(), Eigen::Index(piv.size()));
  for (size_t k = 0; k < piv.size(); ++k) {
    sel(piv[k], k) = 1;
    sub.col(k) = p.col(piv[k]);
  }
  auto inv = inverse(sub);
  if (!inv) throw DomainError("projection is not surjective");
  return sel * *inv;
}

MorphismRep induced_on_cokernels(const QuotientModule& from, const QuotientModule& to, const MorphismRep& g0) {
  MorphismRep g;
  for (size_t v = 0; v < g0.blocks.size(); ++v) {
    const MatQ& p = from.projection.blocks[v];
    if (p.rows() == 0) {
      g.blocks.push_back(MatQ::Zero(to.module.dims[v], 0));
      continue;
    }
    g.blocks.push_back(to.projection.blocks[v] * g0.blocks[v] * right_inverse(p));
  }
  return g;
}

MorphismRep stack_rows(const std::vector<MorphismRep>& fs) {
  MorphismRep out;
  const size_t n = fs.front().blocks.size();
  for (size_t v = 0; v < n; ++v) {
    int rows = 0;
    const int cols = int(fs.front().blocks[v].cols());
    for (auto& f : fs) rows += int(f.blocks[v].rows());
    MatQ b(rows, cols);
    int r = 0;
    for (auto& f : fs) {
      b.block(r, 0, f.blocks[v].rows(), cols) = f.blocks[v];
      r += int(f.blocks[v].rows());
    }
    out.blocks.push_back(b);
  }
  return out;
}

MorphismRep stack_cols(const std::vector<MorphismRep>& fs) {
  MorphismRep out;
  const size_t n = fs.front().blocks.size();
  for (size_t v = 0; v < n; ++v) {
    int cols = 0;
    const int rows = int(fs.front().blocks[v].rows());
    for (auto& f : fs) cols += int(f.blocks[v].cols());
    MatQ b(rows, cols);
    int c = 0;
    for (auto& f : fs) {
      b.block(0, c, rows, f.blocks[v].cols()) = f.blocks[v];
      c += int(f.blocks[v].cols());
    }
    out.blocks.push_back(b);
  }
  return out;
}

MorphismRep scaled(const MorphismRep& f, const Rational& c) {
  MorphismRep g = f;
  for (auto& b : g.blocks) b *= c;
  return g;
}

}  // namespace

std::optional<Path> valid_path(const Algebra& B, int x, int y) {
  const Quiver& q = B.quiver();
  const DualGraph& g = B.dual();
  if (x == y) return Path{x, x, {}};
  std::vector<char> seen(q.num_vertices(), 0), used(g.cycles.size(), 0);
  std::vector<int> arrows;
  std::function<bool(int)> dfs = [&](int v) {
    if (v == y) return true;
    for (int a : q.out_arrows(v)) {
      int t = q.arrow(a).tgt;
      if (seen[t]) continue;
      auto tri = triangles_of(g, a);
      bool clash = false;
      for (int c : tri) clash = clash || used[c];
      if (clash) continue;
      seen[t] = 1;
      for (int c : tri) used[c] = 1;
      arrows.push_back(a);
      if (dfs(t)) return true;
      arrows.pop_back();
      for (int c : tri) used[c] = 0;
      seen[t] = 0;
    }
    return false;
  };
  seen[x] = 1;
  if (!dfs(x)) return std::nullopt;
  return Path{x, y, arrows};
}

bool step_forward(const Algebra& B, const CrossingSequence& seq, int s, int t) {
  const auto& a = seq.entries[s];
  const auto& b = seq.entries[t];
  if (a.i >= 0 && b.j >= 0 && valid_path(B, a.i, b.j)) return true;
  if (a.j >= 0 && b.i >= 0 && valid_path(B, a.j, b.i)) return true;
  return false;
}

bool run_forward(const Algebra& B, const CrossingSequence& seq, int s, int t) {
  const int dir = t > s ? 1 : -1;
  for (int u = s; u != t; u += dir)
    if (!step_forward(B, seq, u, u + dir)) return false;
  return true;
}

PathMatrix build_f(const DimerModel& m, const DiagRepresentative& r) {
  if (!m.theorem_scope())
    throw ConjectureModeError("f is only defined when every chordless cycle is a triangle");
  const Algebra& B = m.algebra();
  const auto& E = r.sequence.entries;
  std::vector<int> rs, cs;
  for (int s = 0; s < int(E.size()); ++s) {
    if (E[s].i >= 0) rs.push_back(s);
    if (E[s].j >= 0) cs.push_back(s);
  }
  PathMatrix f;
  f.rows = r.sequence.p0();
  f.cols = r.sequence.p1();
  f.coef = MatQ::Zero(Eigen::Index(rs.size()), Eigen::Index(cs.size()));
  for (size_t a = 0; a < rs.size(); ++a)
    for (size_t b = 0; b < cs.size(); ++b) {
      int s = rs[a], t = cs[b];
      int x = E[s].i, y = E[t].j;
      std::vector<int> arrows;
      if (s == t) {
        // the path class i ~> j, if there is one
        if (!B.nonzero(x, y)) continue;
        f.coef(a, b) = 1;
        continue;
      } else {
        if (!run_forward(B, r.sequence, s, t)) continue;
        auto w = valid_path(B, x, y);
        if (!w) continue;
        arrows = w->arrows;
      }
      Rational c = B.coeff(x, arrows);
      if (c == 0) throw DomainError("entry of f vanishes in the algebra");
      f.coef(a, b) = c;
    }
  return f;
}

PathMatrix bar(const PathMatrix& f) {
  PathMatrix g = f;
  for (int s = 0; s < g.coef.rows(); ++s)
    for (int t = 0; t < g.coef.cols(); ++t)
      if ((s + t) % 2) g.coef(s, t) = -g.coef(s, t);
  return g;
}

namespace {

std::vector<int> match_order(const std::vector<int>& from, const std::vector<int>& to) {
  // position in `from` of each entry of `to`, matching repeated vertices in order
  std::vector<int> idx;
  std::vector<char> used(from.size(), 0);
  for (int v : to) {
    int k = -1;
    for (size_t s = 0; s < from.size(); ++s)
      if (!used[s] && from[s] == v) {
        k = int(s);
        break;
      }
    if (k < 0) throw DomainError("summands do not match");
    used[k] = 1;
    idx.push_back(k);
  }
  if (to.size() != from.size()) throw DomainError("summands do not match");
  return idx;
}

}  // namespace

PathMatrix reorder(const PathMatrix& f, const std::vector<int>& rows, const std::vector<int>& cols) {
  auto ri = match_order(f.rows, rows), ci = match_order(f.cols, cols);
  PathMatrix g;
  g.rows = rows;
  g.cols = cols;
  g.coef = MatQ(Eigen::Index(rows.size()), Eigen::Index(cols.size()));
  for (size_t s = 0; s < rows.size(); ++s)
    for (size_t t = 0; t < cols.size(); ++t) g.coef(s, t) = f.coef(ri[s], ci[t]);
  return g;
}

std::string entry_label(const Algebra& B, const PathMatrix& f, int s, int t) {
  const Rational& c = f.coef(s, t);
  if (c == 0) return "0";
  const Quiver& q = B.quiver();
  const Path& p = B.rep(f.rows[s], f.cols[t]);
  std::string out;
  if (c == -1)
    out = "-";
  else if (c != 1)
    out = c.get_str() + "*";
  out += q.vertex(f.rows[s]);
  out += p.length() == 1 ? "->" : p.length() == 0 ? "=" : "~>";
  out += q.vertex(f.cols[t]);
  return out;
}

ModuleRep syzygy_module(const DimerModel& m, const DiagRepresentative& r) {
  PathMatrix f = build_f(m, r);
  ModuleRep M = path_matrix_cokernel(m.algebra(), f).module;
  if (M.is_zero()) throw DomainError("zero cokernel for " + diagonal_name(r.diagonal));
  return M;
}

ExactnessReport check_exact(const Algebra& B, const PathMatrix& a, const PathMatrix& b) {
  ExactnessReport rep;
  std::vector<int> x = a.cols, y = b.rows;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  if (x != y) {
    rep.witness = "middle terms differ";
    return rep;
  }
  rep.terms_match = true;
  PathMatrix b2 = reorder(b, a.cols, b.cols);
  PathMatrix c = compose(B, a, b2);
  rep.composes_to_zero = is_zero(c.coef);
  if (!rep.composes_to_zero) {
    for (int s = 0; s < c.coef.rows() && rep.witness.empty(); ++s)
      for (int u = 0; u < c.coef.cols(); ++u)
        if (c.coef(s, u) != 0) {
          rep.witness = "composition nonzero at (" + B.quiver().vertex(c.rows[s]) + "," +
                        B.quiver().vertex(c.cols[u]) + ")";
          break;
        }
  }
  ProjectiveSum P2 = projective_sum(B, b2.cols), P1 = projective_sum(B, a.cols), P0 = projective_sum(B, a.rows);
  MorphismRep ma = to_morphism(B, a, P1, P0), mb = to_morphism(B, b2, P2, P1);
  rep.ranks_match = true;
  for (int v = 0; v < B.num_vertices(); ++v) {
    int ra = ma.blocks[v].size() ? rank(ma.blocks[v]) : 0;
    int rb = mb.blocks[v].size() ? rank(mb.blocks[v]) : 0;
    if (ra + rb != P1.module.dims[v]) {
      rep.ranks_match = false;
      if (rep.witness.empty()) rep.witness = "rank defect at vertex " + B.quiver().vertex(v);
    }
  }
  return rep;
}

ExactnessReport check_exact(const DimerModel& m, const DiagRepresentative& x, const DiagRepresentative& y) {
  return check_exact(m.algebra(), build_f(m, x), bar(build_f(m, y)));
}

CompatiblePair choose_compatible(const DimerModel& m, const TwoDiagonal& d, const DiagRepresentative* first) {
  const auto& P = m.polygon();
  TwoDiagonal e = rotate(P, d, 1);
  std::optional<CompatiblePair> best;
  auto score = [](const CompatiblePair& c) { return (c.exact.ok() ? 2 : 0) + (c.literal ? 1 : 0); };
  for (const auto& x : m.representatives(d)) {
    if (first && x.faces != first->faces) continue;
    for (const auto& y : m.representatives(e)) {
      CompatiblePair c{x, y, compatible(P, x, y), check_exact(m, x, y)};
      if (!best || score(c) > score(*best)) best = c;
      if (score(*best) == 3) return *best;
    }
  }
  if (!best) throw DomainError("no representative pair for " + diagonal_name(d));
  return *best;
}

std::optional<std::pair<PathMatrix, PathMatrix>> homotopy_automorphism(const Algebra& B, const PathMatrix& f0,
                                                                       const PathMatrix& g) {
  PathMatrix f = reorder(f0, g.rows, g.cols);
  const auto& r0 = g.rows;
  const auto& r1 = g.cols;
  const int n0 = int(r0.size()), n1 = int(r1.size());
  // unknown layout: psi0 entries, then psi1 entries
  std::vector<std::pair<int, int>> u0, u1;
  for (int s = 0; s < n0; ++s)
    for (int t = 0; t < n0; ++t)
      if (B.nonzero(r0[s], r0[t])) u0.push_back({s, t});
  for (int s = 0; s < n1; ++s)
    for (int t = 0; t < n1; ++t)
      if (B.nonzero(r1[s], r1[t])) u1.push_back({s, t});
  const int nu = int(u0.size() + u1.size());
  MatQ A = MatQ::Zero(n0 * n1, nu);
  // (psi0 f - g psi1)(s,u)
  for (size_t k = 0; k < u0.size(); ++k) {
    auto [s, t] = u0[k];
    for (int u = 0; u < n1; ++u)
      if (f.coef(t, u) != 0) A(s * n1 + u, k) += f.coef(t, u) * B.mult(r0[s], r0[t], r1[u]);
  }
  for (size_t k = 0; k < u1.size(); ++k) {
    auto [t, u] = u1[k];
    for (int s = 0; s < n0; ++s)
      if (g.coef(s, t) != 0) A(s * n1 + u, u0.size() + k) -= g.coef(s, t) * B.mult(r0[s], r1[t], r1[u]);
  }
  MatQ K = nullspace(A);
  if (K.cols() == 0) return std::nullopt;
  for (int attempt = 0; attempt < 8; ++attempt) {
    VecQ w = VecQ::Zero(nu);
    for (int c = 0; c < K.cols(); ++c) {
      Rational coef = attempt == 0 ? Rational(1) : Rational((c + 2) * (attempt + 1) + c * c * attempt);
      w += coef * K.col(c);
    }
    PathMatrix p0{r0, r0, MatQ::Zero(n0, n0)}, p1{r1, r1, MatQ::Zero(n1, n1)};
    for (size_t k = 0; k < u0.size(); ++k) p0.coef(u0[k].first, u0[k].second) = w(k);
    for (size_t k = 0; k < u1.size(); ++k) p1.coef(u1[k].first, u1[k].second) = w(u0.size() + k);
    bool inv = true;
    for (int s = 0; s < n0; ++s) inv = inv && p0.coef(s, s) != 0;
    for (int s = 0; s < n1; ++s) inv = inv && p1.coef(s, s) != 0;
    if (inv) return std::make_pair(p1, p0);
  }
  return std::nullopt;
}

bool ProjectiveResolution::ok() const {
  for (bool b : exact)
    if (!b) return false;
  for (bool b : matches_rotation)
    if (!b) return false;
  for (bool b : matches_oracle)
    if (!b) return false;
  return true;
}

ProjectiveResolution resolution(const DimerModel& m, const TwoDiagonal& d, int steps) {
  const Algebra& B = m.algebra();
  const Quiver& q = B.quiver();
  const auto& P = m.polygon();
  ProjectiveResolution res;
  for (int k = 0; k <= steps; ++k) res.diagonals.push_back(rotate(P, d, k));
  DiagRepresentative cur = choose_compatible(m, d).x;
  int parity = 0;  // d_k kills what f or bar f of cur kills
  res.differentials.push_back(build_f(m, cur));
  res.automorphisms.push_back(std::nullopt);
  for (int k = 0; k < steps; ++k) {
    CompatiblePair cp = choose_compatible(m, res.diagonals[k], &cur);
    std::optional<std::pair<PathMatrix, PathMatrix>> psi;
    if (!cp.exact.ok()) {
      CompatiblePair other = choose_compatible(m, res.diagonals[k]);
      if (other.exact.ok()) {
        PathMatrix fx = build_f(m, other.x), fc = build_f(m, cur);
        if (parity) {
          fx = bar(fx);
          fc = bar(fc);
        }
        psi = homotopy_automorphism(B, fx, fc);
        if (psi) cp = other;
      }
    }
    res.literal_compatibility = res.literal_compatibility && cp.literal;
    PathMatrix fy = build_f(m, cp.y);
    if (parity == 0) fy = bar(fy);
    PathMatrix next;
    if (psi) {
      next = compose(B, psi->first, reorder(fy, psi->first.cols, fy.cols));
    } else {
      next = fy;
    }
    next = reorder(next, res.differentials.back().cols, next.cols);
    res.differentials.push_back(next);
    res.automorphisms.push_back(psi);
    cur = cp.y;
    parity = 1 - parity;
  }
  res.terms.push_back(res.differentials.front().rows);
  for (auto& dk : res.differentials) res.terms.push_back(dk.cols);
  for (int k = 0; k <= steps; ++k) {
    res.syzygies.push_back(path_matrix_cokernel(B, res.differentials[k]).module);
    res.matches_rotation.push_back(is_iso(q, res.syzygies[k], m.module(res.diagonals[k])));
    if (k > 0) {
      res.exact.push_back(check_exact(B, res.differentials[k - 1], res.differentials[k]).ok());
      res.matches_oracle.push_back(is_iso(q, res.syzygies[k], syzygy(B, res.syzygies[k - 1])));
    }
  }
  return res;
}

bool radical_correspondence(const DimerModel& m, int vertex) {
  TwoDiagonal d = radical_diagonal(m.polygon(), vertex);
  return is_iso(m.quiver(), m.module(d), radical(m.algebra(), vertex));
}

namespace {

struct PivotMaps {
  PathMatrix g0, g1;
  std::vector<std::pair<int, int>> arrows0, arrows1;  // arrow entry positions
};

PathMatrix pivot_component(const Algebra& B, const std::vector<int>& from, const std::vector<int>& to,
                           std::vector<std::pair<int, int>>& arrows) {
  const Quiver& q = B.quiver();
  PathMatrix g{to, from, MatQ::Zero(Eigen::Index(to.size()), Eigen::Index(from.size()))};
  std::set<int> fs(from.begin(), from.end()), ts(to.begin(), to.end());
  for (size_t t = 0; t < from.size(); ++t) {
    int v = from[t];
    if (ts.count(v)) {
      g.coef(std::find(to.begin(), to.end(), v) - to.begin(), t) = 1;
      continue;
    }
    for (size_t s = 0; s < to.size(); ++s) {
      int w = to[s];
      if (fs.count(w)) continue;
      int a = q.arrow_between(w, v);
      if (a < 0) continue;
      g.coef(s, t) = B.coeff(w, {a});
      arrows.push_back({int(s), int(t)});
    }
  }
  return g;
}

// Negates the later of two arrows sharing a row (by_row) or a column; with
// last = false the earlier one, which is the same rule read along the
// reversed crossing sequences.
PathMatrix sign_fix(PathMatrix g, const std::vector<std::pair<int, int>>& arrows, bool by_row, bool last = true) {
  for (size_t a = 0; a < arrows.size(); ++a)
    for (size_t b = 0; b < arrows.size(); ++b) {
      if (a == b) continue;
      auto [s1, t1] = arrows[a];
      auto [s2, t2] = arrows[b];
      if (by_row && s1 == s2 && (last ? t2 > t1 : t2 < t1)) g.coef(s2, t2) = -g.coef(s2, t2);
      if (!by_row && t1 == t2 && (last ? s2 > s1 : s2 < s1)) g.coef(s2, t2) = -g.coef(s2, t2);
    }
  return g;
}

}  // namespace

PivotMorphism pivot_morphism(const DimerModel& m, const DiagRepresentative& x, const DiagRepresentative& y) {
  const Algebra& B = m.algebra();
  PivotMorphism pm;
  pm.source = x.diagonal;
  pm.target = y.diagonal;
  pm.from = x;
  pm.to = y;
  PathMatrix fx = build_f(m, x), fy = build_f(m, y);
  std::vector<std::pair<int, int>> a0, a1;
  PathMatrix g0 = pivot_component(B, fx.rows, fy.rows, a0);
  PathMatrix g1 = pivot_component(B, fx.cols, fy.cols, a1);
  pm.arrows = int(a0.size() + a1.size());
  struct Conv {
    const char* name;
    int r0, r1;  // 0 none, 1 row fix, 2 column fix, 3 and 4 the same on reversed sequences
  };
  const Conv convs[] = {{"row/column", 1, 2}, {"row/column reversed", 3, 4}, {"none", 0, 0},
                        {"column/row", 2, 1},  {"row/row", 1, 1},             {"column/column", 2, 2}};
  auto fixed = [&](const PathMatrix& g, const std::vector<std::pair<int, int>>& a, int mode) {
    return mode == 0 ? g : sign_fix(g, a, mode % 2 == 1, mode <= 2);
  };
  for (const auto& c : convs) {
    PathMatrix h0 = fixed(g0, a0, c.r0), h1 = fixed(g1, a1, c.r1);
    if (compose(B, h0, fx).coef == compose(B, fy, h1).coef) {
      pm.g0 = h0;
      pm.g1 = h1;
      pm.commutes = true;
      pm.convention = c.name;
      break;
    }
  }
  if (!pm.commutes) {
    pm.g0 = sign_fix(g0, a0, true);
    pm.g1 = sign_fix(g1, a1, false);
    pm.convention = "row/column";
    return pm;
  }
  QuotientModule qx = path_matrix_cokernel(B, fx), qy = path_matrix_cokernel(B, fy);
  MorphismRep G0 = to_morphism(B, pm.g0, projective_sum(B, fx.rows), projective_sum(B, fy.rows));
  pm.induced = induced_on_cokernels(qx, qy, G0);
  return pm;
}

PivotMorphism find_pivot_morphism(const DimerModel& m, const TwoDiagonal& d, const TwoDiagonal& e) {
  std::optional<PivotMorphism> best;
  int best_score = -1;
  for (const auto& x : m.representatives(d))
    for (const auto& y : m.representatives(e)) {
      PivotMorphism pm = pivot_morphism(m, x, y);
      int score = (pm.commutes ? 4 : 0) + (pm.convention.rfind("row/column", 0) == 0 ? 2 : 0) +
                  (compatible(m.polygon(), x, y) ? 1 : 0);
      if (score > best_score) {
        best = pm;
        best_score = score;
      }
      if (best_score == 7) return *best;
    }
  return *best;
}

namespace {

bool orbit_has_radical(const DimerModel& m, const TwoDiagonal& d) {
  const auto& P = m.polygon();
  for (int k = 0; k < P.size(); ++k)
    if (radical_vertex(P, rotate(P, d, k)) >= 0) return true;
  return false;
}

// Finds a monomorphism M -> N from a Hom basis.
std::optional<MorphismRep> some_mono(const Quiver& q, const ModuleRep& M, const ModuleRep& N) {
  auto basis = hom_space(q, M, N);
  const int dm = M.total_dim();
  for (auto& f : basis)
    if (total_rank(f) == dm) return f;
  for (int attempt = 1; attempt <= 6 && !basis.empty(); ++attempt) {
    MorphismRep f = zero_morphism(M, N);
    for (size_t k = 0; k < basis.size(); ++k) f = add(f, basis[k], Rational(int(k * attempt + 1)));
    if (total_rank(f) == dm) return f;
  }
  return std::nullopt;
}

}  // namespace

namespace {

// Chain isomorphism between presentations of one diagonal, on cokernels.
std::optional<MorphismRep> transport(const Algebra& B, const PathMatrix& from, const PathMatrix& to) {
  auto psi = homotopy_automorphism(B, from, to);
  if (!psi) return std::nullopt;
  PathMatrix p0 = reorder(psi->second, to.rows, from.rows);
  MorphismRep P0 = to_morphism(B, p0, projective_sum(B, from.rows), projective_sum(B, to.rows));
  return induced_on_cokernels(path_matrix_cokernel(B, from), path_matrix_cokernel(B, to), P0);
}

// Solves sum_k c_k fs[k] + g = 0 (or stably zero when `stable`), returning c
// with c_0 != 0.
std::optional<std::vector<Rational>> leading_solution(const Algebra& B, const ModuleRep& M, const ModuleRep& N,
                                                      const std::vector<MorphismRep>& fs, const MorphismRep& g,
                                                      bool stable) {
  std::vector<VecQ> cols;
  for (auto& f : fs) cols.push_back(flat(f));
  if (stable) {
    ProjectiveCover pc = projective_cover(B, N);
    for (auto& phi : hom_space(B.quiver(), M, pc.cover.module)) cols.push_back(flat(compose(pc.surjection, phi)));
  }
  VecQ rhs = -flat(g);
  MatQ A(rhs.size(), Eigen::Index(cols.size()));
  for (size_t c = 0; c < cols.size(); ++c) A.col(c) = cols[c];
  auto sol = solve(A, MatQ(rhs));
  if (!sol) return std::nullopt;
  VecQ x = sol->col(0);
  if (x(0) == 0) {
    MatQ K = nullspace(A);
    for (int c = 0; c < K.cols() && x(0) == 0; ++c)
      if (K(0, c) != 0) x += K.col(c);
  }
  if (x(0) == 0) return std::nullopt;
  return std::vector<Rational>(x.data(), x.data() + fs.size());
}

struct MeshChoice {
  std::vector<PivotMorphism> g, h;  // per middle term
  std::vector<MorphismRep> gm, hm;  // induced maps, moved to common ends
  bool transported = false;
};

}  // namespace

MeshRecord ar_structure(const DimerModel& m, const TwoDiagonal& d) {
  const Algebra& B = m.algebra();
  const Quiver& q = B.quiver();
  const auto& P = m.polygon();
  MeshRecord rec;
  rec.diagonal = d;
  for (auto& pv : pivots(P, d)) rec.middle.push_back(pv.target);
  rec.end = rotate(P, d, 2);
  rec.applicable = radical_vertex(P, rotate(P, d, 1)) < 0;
  int rv = radical_vertex(P, d);
  rec.ses_applicable = rec.applicable && (rv >= 0 || !orbit_has_radical(m, d));
  if (rv >= 0) rec.projective_insert = rv;
  if (!rec.applicable) return rec;

  const size_t k = rec.middle.size();
  const auto& rg = m.representatives(d);
  const auto& re = m.representatives(rec.end);
  // Per middle term, the commuting pairs of squares through it, keyed by the
  // outer representatives.
  std::vector<std::vector<std::pair<PivotMorphism, PivotMorphism>>> squares(k);
  for (size_t u = 0; u < k; ++u)
    for (const auto& y : m.representatives(rec.middle[u])) {
      std::vector<PivotMorphism> gs, hs;
      for (const auto& x : rg) {
        PivotMorphism g = pivot_morphism(m, x, y);
        if (g.commutes) gs.push_back(g);
      }
      for (const auto& z : re) {
        PivotMorphism h = pivot_morphism(m, y, z);
        if (h.commutes) hs.push_back(h);
      }
      for (auto& g : gs)
        for (auto& h : hs) squares[u].push_back({g, h});
    }
  for (size_t u = 0; u < k; ++u)
    if (squares[u].empty()) {
      rec.detail = "no commuting pivot squares through " + diagonal_name(rec.middle[u]);
      return rec;
    }
  // Prefer one representative of gamma and of R^2 gamma for all middle terms.
  std::optional<MeshChoice> choice;
  auto same = [](const DiagRepresentative& a, const DiagRepresentative& b) { return a.faces == b.faces; };
  for (auto& s0 : squares[0]) {
    if (k == 1) {
      choice = MeshChoice{{s0.first}, {s0.second}, {}, {}, false};
      break;
    }
    for (auto& s1 : squares[1])
      if (same(s0.first.from, s1.first.from) && same(s0.second.to, s1.second.to)) {
        choice = MeshChoice{{s0.first, s1.first}, {s0.second, s1.second}, {}, {}, false};
        break;
      }
    if (choice) break;
  }
  if (!choice) choice = MeshChoice{{squares[0][0].first, squares[1][0].first},
                                   {squares[0][0].second, squares[1][0].second}, {}, {}, true};
  rec.transported = choice->transported;
  const PathMatrix fx = build_f(m, choice->g[0].from), fz = build_f(m, choice->h[0].to);
  const ModuleRep Mx = path_matrix_cokernel(B, fx).module;
  const ModuleRep Mz = path_matrix_cokernel(B, fz).module;
  std::vector<ModuleRep> mids;
  for (size_t u = 0; u < k; ++u) {
    MorphismRep g = choice->g[u].induced, h = choice->h[u].induced;
    if (!same(choice->g[u].from, choice->g[0].from)) {
      auto t = transport(B, fx, build_f(m, choice->g[u].from));
      if (!t) {
        rec.detail = "no chain isomorphism between representatives";
        return rec;
      }
      g = compose(g, *t);
    }
    if (!same(choice->h[u].to, choice->h[0].to)) {
      auto t = transport(B, build_f(m, choice->h[u].to), fz);
      if (!t) {
        rec.detail = "no chain isomorphism between representatives";
        return rec;
      }
      h = compose(*t, h);
    }
    choice->gm.push_back(g);
    choice->hm.push_back(h);
    mids.push_back(path_matrix_cokernel(B, build_f(m, choice->g[u].to)).module);
  }
  MorphismRep hg1 = compose(choice->hm[0], choice->gm[0]);
  if (k == 2) {
    MorphismRep hg2 = compose(choice->hm[1], choice->gm[1]);
    if (stably_equal(B, Mx, Mz, hg1, hg2)) {
      rec.mesh_holds = true;
    } else if (auto c = leading_solution(B, Mx, Mz, {hg2}, hg1, true)) {
      // h'g' + c h''g'' stably zero
      rec.mesh_holds = true;
      rec.mesh_scalar = (*c)[0];
    }
  } else {
    rec.mesh_holds = stably_equal(B, Mx, Mz, hg1, zero_morphism(Mx, Mz));
  }
  if (!rec.ses_applicable) return rec;

  // beta = [h', eps h'', v], alpha = [g'; g''; u], with eps and v solved from beta alpha = 0
  std::vector<MorphismRep> alpha_parts = choice->gm;
  std::vector<ModuleRep> terms = mids;
  std::vector<MorphismRep> unknowns;  // maps into M_z to be scaled
  if (k == 2) unknowns.push_back(compose(choice->hm[1], choice->gm[1]));
  std::optional<MorphismRep> u;
  std::vector<MorphismRep> vb;
  if (rv >= 0) {
    ModuleRep Pi = projective(B, rv);
    u = some_mono(q, Mx, Pi);
    if (!u) {
      rec.detail = "no monomorphism into the projective";
      return rec;
    }
    vb = hom_space(q, Pi, Mz);
    for (auto& v : vb) unknowns.push_back(compose(v, *u));
    alpha_parts.push_back(*u);
    terms.push_back(Pi);
  }
  std::vector<Rational> coeffs;
  if (unknowns.empty()) {
    if (!is_zero(hg1)) {
      rec.detail = "composition does not vanish";
      return rec;
    }
  } else {
    std::vector<VecQ> cols;
    for (auto& f : unknowns) cols.push_back(flat(f));
    VecQ rhs = -flat(hg1);
    MatQ A(rhs.size(), Eigen::Index(cols.size()));
    for (size_t c = 0; c < cols.size(); ++c) A.col(c) = cols[c];
    auto sol = solve(A, MatQ(rhs));
    if (!sol) {
      rec.detail = "no correction term makes the sequence a complex";
      return rec;
    }
    VecQ x = sol->col(0);
    if (k == 2 && x(0) == 0) {
      MatQ K = nullspace(A);
      for (int c = 0; c < K.cols() && x(0) == 0; ++c)
        if (K(0, c) != 0) x += K.col(c);
    }
    coeffs.assign(x.data(), x.data() + x.size());
  }
  std::vector<MorphismRep> beta_parts{choice->hm[0]};
  size_t next = 0;
  if (k == 2) {
    rec.epsilon = coeffs[0];
    beta_parts.push_back(scaled(choice->hm[1], coeffs[0]));
    next = 1;
  }
  if (rv >= 0) {
    MorphismRep v = zero_morphism(terms.back(), Mz);
    for (size_t c = 0; c < vb.size(); ++c) v = add(v, vb[c], coeffs[next + c]);
    beta_parts.push_back(v);
  }
  MorphismRep alpha = stack_rows(alpha_parts), beta = stack_cols(beta_parts);
  ModuleRep Emid = direct_sum(q, terms);
  rec.ses_exact = (k == 1 || rec.epsilon != 0) && is_zero(compose(beta, alpha)) &&
                  total_rank(alpha) == Mx.total_dim() && total_rank(beta) == Mz.total_dim() &&
                  Emid.total_dim() == Mx.total_dim() + Mz.total_dim() && is_morphism(q, Mx, Emid, alpha) &&
                  is_morphism(q, Emid, Mz, beta);
  if (!rec.ses_exact) rec.detail = "sequence is not exact";
  return rec;
}

namespace {

// Projective tops Q with E = direct_sum(parts + Q), if any.
std::optional<std::vector<int>> projective_complement(const Algebra& B, const ModuleRep& E,
                                                      const std::vector<ModuleRep>& parts) {
  const Quiver& q = B.quiver();
  const int n = q.num_vertices();
  std::vector<int> rest = E.dims;
  for (auto& p : parts)
    for (int v = 0; v < n; ++v) rest[v] -= p.dims[v];
  for (int v = 0; v < n; ++v)
    if (rest[v] < 0) return std::nullopt;
  std::vector<std::vector<int>> pd;
  for (int i = 0; i < n; ++i) pd.push_back(projective(B, i).dims);
  std::vector<int> tops;
  std::optional<std::vector<int>> found;
  std::function<void(int)> go = [&](int i) {
    if (found) return;
    if (i == n) {
      for (int v = 0; v < n; ++v)
        if (rest[v]) return;
      std::vector<ModuleRep> all = parts;
      for (int t : tops) all.push_back(projective(B, t));
      if (is_iso(q, E, direct_sum(q, all))) found = tops;
      return;
    }
    int c = 0;
    while (true) {
      bool fits = true;
      for (int v = 0; v < n; ++v) fits = fits && pd[i][v] * (c + 1) <= rest[v] + pd[i][v] * c;
      if (!fits) break;
      ++c;
      for (int v = 0; v < n; ++v) rest[v] -= pd[i][v];
      tops.push_back(i);
    }
    for (; c >= 0; --c) {
      go(i + 1);
      if (c == 0 || found) break;
      for (int v = 0; v < n; ++v) rest[v] += pd[i][v];
      tops.pop_back();
    }
    // restore what is still taken
    while (!tops.empty() && tops.back() == i) {
      for (int v = 0; v < n; ++v) rest[v] += pd[i][v];
      tops.pop_back();
    }
  };
  go(0);
  return found;
}

}  // namespace

ArQuiverCheck build_ar_quiver(const DimerModel& m) {
  const Algebra& B = m.algebra();
  const Quiver& q = B.quiver();
  const auto& P = m.polygon();
  const auto& D = m.diagonals();
  ArQuiverCheck out;
  TranslationQuiver T = build_translation_quiver(P);
  std::vector<ModuleRep> Ms;
  for (auto& d : D) Ms.push_back(m.module(d));
  out.pairwise_distinct = true;
  for (size_t a = 0; a < D.size(); ++a)
    for (size_t b = a + 1; b < D.size(); ++b)
      if (is_iso(q, Ms[a], Ms[b])) {
        out.pairwise_distinct = false;
        out.failures.push_back("M isomorphic for " + diagonal_name(D[a]) + " and " + diagonal_name(D[b]));
      }
  out.ext_dimension_one = out.middle_terms_match = out.translation_matches = true;
  for (size_t a = 0; a < D.size(); ++a) {
    const TwoDiagonal e = rotate(P, D[a], 2);
    const ModuleRep& Me = Ms[T.index(e)];
    if (!is_iso(q, syzygy(B, syzygy(B, Ms[a])), Me)) {
      out.translation_matches = false;
      out.failures.push_back("Omega^2 mismatch at " + diagonal_name(D[a]));
    }
    int x = ext1(B, Me, Ms[a]);
    if (x != 1) {
      out.ext_dimension_one = false;
      out.failures.push_back("Ext^1 dimension " + std::to_string(x) + " at " + diagonal_name(D[a]));
      continue;
    }
    auto E = nonsplit_extension(B, Me, Ms[a]);
    std::vector<ModuleRep> parts;
    std::vector<int> targets;
    for (auto& pv : pivots(P, D[a])) {
      targets.push_back(T.index(pv.target));
      parts.push_back(Ms[targets.back()]);
    }
    if (!E || !projective_complement(B, *E, parts)) {
      out.middle_terms_match = false;
      out.failures.push_back("AR middle term mismatch at " + diagonal_name(D[a]));
      continue;
    }
    for (int t : targets) out.arrows.push_back({int(a), t});
  }
  std::sort(out.arrows.begin(), out.arrows.end());
  out.isomorphic = out.pairwise_distinct && out.ext_dimension_one && out.middle_terms_match &&
                   out.translation_matches && out.arrows == T.arrows && T.mesh_condition();
  return out;
}

namespace {

struct RegionData {
  std::vector<int> labels;  // clockwise labels of the white region
  int lo = -1, hi = -1;     // Q(W, gamma) = labels[lo..hi]
  bool rectangular = false;
};

int label_pos(const std::vector<int>& labels, int v) {
  auto it = std::find(labels.begin(), labels.end(), v);
  return it == labels.end() ? -1 : int(it - labels.begin());
}

// White region between entries l and l+1 and the piece of Q(gamma) it gives.
RegionData region_between(const CheckerboardPolygon& P, const DiagRepresentative& r, int l) {
  const auto& E = r.sequence.entries;
  RegionData rd;
  auto pos = std::find(r.faces.begin(), r.faces.end(), E[l].face) - r.faces.begin();
  if (pos + 2 >= int(r.faces.size()) || r.faces[pos + 2] != E[l + 1].face)
    throw DomainError("entries are not separated by one white region");
  rd.labels = P.white_labels_clockwise(r.faces[pos + 1]);
  const int mlen = int(rd.labels.size());
  auto pair_x = [&](const CrossingEntry& e) {
    int p = label_pos(rd.labels, e.i), q = label_pos(rd.labels, e.j);
    if (p < 0 || q < 0 || std::abs(p - q) != 1) throw DomainError("pair is not a corner of its white region");
    return std::min(p, q);
  };
  auto lone_p = [&](const CrossingEntry& e) {
    int p = label_pos(rd.labels, e.i >= 0 ? e.i : e.j);
    if (p < 0) throw DomainError("lone crossing is not on its white region");
    return p;
  };
  const auto &a = E[l], &b = E[l + 1];
  if (a.is_pair() && b.is_pair()) {
    int x = pair_x(a), y = pair_x(b);
    rd.lo = std::min(x, y);
    rd.hi = std::max(x, y) + 1;
  } else if (!a.is_pair() && !b.is_pair()) {
    rd.lo = 0;
    rd.hi = mlen - 1;
  } else {
    int p = a.is_pair() ? lone_p(b) : lone_p(a);
    int y = a.is_pair() ? pair_x(a) : pair_x(b);
    if (p == 0) {
      rd.lo = 0;
      rd.hi = y + 1;
    } else {
      rd.lo = y;
      rd.hi = mlen - 1;
    }
  }
  rd.rectangular = (rd.hi - rd.lo + 1) % 2 == 0;
  return rd;
}

struct GammaData {
  std::set<int> vertices;
  std::vector<RegionData> regions;  // per step
};

GammaData gamma_data(const DimerModel& m, const DiagRepresentative& r) {
  const auto& E = r.sequence.entries;
  GammaData gd;
  for (int l = 0; l + 1 < int(E.size()); ++l) {
    gd.regions.push_back(region_between(m.polygon(), r, l));
    const auto& rd = gd.regions.back();
    for (int u = rd.lo; u <= rd.hi; ++u) gd.vertices.insert(rd.labels[u]);
  }
  for (const auto& e : E) gd.vertices.insert(e.i >= 0 ? e.i : e.j);
  return gd;
}

// Q(gamma) for a forward run of pairs, with k_l and the step degrees.
struct RunQuiver {
  std::vector<int> idx;
  std::set<int> vertices;
  std::vector<int> k;       // per pair of the run, -1 if not unique
  std::vector<int> degree;  // per step of the run, -1 if undetermined
  std::vector<bool> rectangular;
};

RunQuiver run_quiver(const DimerModel& m, const DiagRepresentative& r, const GammaData& gd,
                     const std::vector<int>& idx) {
  const auto& E = r.sequence.entries;
  const auto& g = m.algebra().dual();
  const Quiver& q = m.quiver();
  RunQuiver rq;
  rq.idx = idx;
  const int n = int(idx.size());
  for (int a = 0; a + 1 < n; ++a) {
    const auto& rd = gd.regions[std::min(idx[a], idx[a + 1])];
    for (int u = rd.lo; u <= rd.hi; ++u) rq.vertices.insert(rd.labels[u]);
    rq.rectangular.push_back(rd.rectangular);
  }
  for (int l : idx) {
    int kk = -1, found = 0;
    for (int c : g.arrow_cycles[E[l].arrow]) {
      if (g.cycles[c].length() != 3) continue;
      auto vs = g.cycles[c].vertices(q);
      if (!std::all_of(vs.begin(), vs.end(), [&](int v) { return rq.vertices.count(v) > 0; })) continue;
      ++found;
      for (int v : vs)
        if (v != E[l].i && v != E[l].j) kk = v;
    }
    rq.k.push_back(found == 1 ? kk : -1);
  }
  // 0 if i_l shares a component with the pair ref after deleting k_l and alpha_l
  auto side = [&](int a, int ref) {
    const int l = idx[a];
    if (rq.k[a] < 0) return -1;
    std::set<int> comp{E[l].i};
    std::vector<int> stack{E[l].i};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int b = 0; b < q.num_arrows(); ++b) {
        if (b == E[l].arrow) continue;
        int s = q.arrow(b).src, t = q.arrow(b).tgt;
        int w = s == v ? t : t == v ? s : -1;
        if (w < 0 || w == rq.k[a] || !rq.vertices.count(w) || comp.count(w)) continue;
        comp.insert(w);
        stack.push_back(w);
      }
    }
    if (comp.count(E[l].j)) return -1;
    int near = 0, far = 0;
    for (int v : {E[ref].i, E[ref].j}) {
      if (v < 0 || v == rq.k[a]) continue;
      (comp.count(v) ? near : far)++;
    }
    if ((near > 0) == (far > 0)) return -1;
    return near ? 0 : 1;
  };
  for (int a = 0; a + 1 < n; ++a) {
    if (a > 0) {
      rq.degree.push_back(side(a, idx[a - 1]));
    } else {
      // no previous pair inside the run: the entry is the side away from the next pair
      int d = side(0, idx[1]);
      rq.degree.push_back(d < 0 ? -1 : 1 - d);
    }
  }
  return rq;
}

// Maximal forward runs of pairs, increasing runs first.
std::vector<std::vector<int>> forward_runs(const Algebra& B, const DiagRepresentative& r) {
  const auto& E = r.sequence.entries;
  std::vector<int> pairs;
  for (int s = 0; s < int(E.size()); ++s)
    if (E[s].is_pair()) pairs.push_back(s);
  std::vector<std::vector<int>> runs;
  for (int dir : {1, -1}) {
    std::vector<int> order = pairs;
    if (dir < 0) std::reverse(order.begin(), order.end());
    size_t u = 0;
    while (u < order.size()) {
      size_t v = u;
      while (v + 1 < order.size() && step_forward(B, r.sequence, order[v], order[v + 1])) ++v;
      if (v > u) runs.emplace_back(order.begin() + u, order.begin() + v + 1);
      u = v + 1;
    }
  }
  return runs;
}

}  // namespace

GammaQuiver gamma_quiver(const DimerModel& m, const DiagRepresentative& r) {
  const auto& E = r.sequence.entries;
  const Algebra& B = m.algebra();
  GammaData gd = gamma_data(m, r);
  GammaQuiver gq;
  gq.vertices.assign(gd.vertices.begin(), gd.vertices.end());
  for (int l = 0; l + 1 < int(E.size()); ++l) {
    GammaQuiver::Step st;
    st.from = l;
    st.to = l + 1;
    if (!step_forward(B, r.sequence, l, l + 1) && step_forward(B, r.sequence, l + 1, l)) std::swap(st.from, st.to);
    st.forward = step_forward(B, r.sequence, st.from, st.to);
    st.rectangular = gd.regions[l].rectangular;
    gq.steps.push_back(st);
  }
  for (const auto& idx : forward_runs(B, r)) {
    RunQuiver rq = run_quiver(m, r, gd, idx);
    for (size_t a = 0; a + 1 < idx.size(); ++a) {
      auto& st = gq.steps[std::min(idx[a], idx[a + 1])];
      st.degree = rq.degree[a];
      st.k = rq.k[a];
    }
  }
  return gq;
}

std::string step_word(const std::vector<StepType>& w) {
  std::string s;
  for (auto t : w) s += t == StepType::R0 ? "R0" : t == StepType::R1 ? "R1" : t == StepType::T0 ? "T0" : "T1";
  return s;
}

std::vector<StepType> parse_step_word(const std::string& s) {
  std::vector<StepType> w;
  if (s.size() % 2) throw ParseError("step word has odd length", 0);
  for (size_t k = 0; k < s.size(); k += 2) {
    char a = s[k], b = s[k + 1];
    if ((a != 'R' && a != 'T') || (b != '0' && b != '1')) throw ParseError("bad step " + s.substr(k, 2), 0);
    w.push_back(a == 'R' ? (b == '0' ? StepType::R0 : StepType::R1) : (b == '0' ? StepType::T0 : StepType::T1));
  }
  return w;
}

StaircaseProfile staircase_from_steps(const std::vector<StepType>& steps) {
  // steps[k-1] is Sigma_k, from pair k to pair k+1
  const int n = int(steps.size()) + 1;
  StaircaseProfile p;
  p.t.push_back(1);
  auto first_after = [&](StepType ty, int after) {
    for (int k = after + 1; k <= n - 1; ++k)
      if (steps[k - 1] == ty) return k;
    return -1;
  };
  while (p.t.back() < n) {
    const int tl = p.t.back();
    // The recursive rule is used for t_1 as well, so an R0 or T1 in step 1
    // closes the first block; the computed matrices require this.
    const int a = tl - 1;
    const int b = tl;
    int best = n + 1;
    int k;
    if ((k = first_after(StepType::R0, a)) > 0) best = std::min(best, k + 1);
    if ((k = first_after(StepType::T1, a)) > 0) best = std::min(best, k + 1);
    if ((k = first_after(StepType::R1, b)) > 0) best = std::min(best, k);
    if (best > n || best <= tl) best = n;
    p.t.push_back(best);
  }
  return p;
}

std::vector<std::vector<bool>> staircase_pattern(const StaircaseProfile& p, int n) {
  std::vector<std::vector<bool>> z(n, std::vector<bool>(n, false));
  for (int s = 1; s <= n; ++s) z[s - 1][s - 1] = true;
  for (size_t l = 1; l < p.t.size(); ++l)
    for (int s = p.t[l - 1]; s <= p.t[l]; ++s)
      for (int t = s + 1; t <= p.t[l]; ++t) z[s - 1][t - 1] = true;
  return z;
}

StaircaseReport validate_staircase(const DimerModel& m, const DiagRepresentative& r) {
  const Algebra& B = m.algebra();
  const auto& E = r.sequence.entries;
  StaircaseReport rep;
  PathMatrix f = build_f(m, r);
  GammaData gd = gamma_data(m, r);
  std::vector<int> row_of(E.size(), -1), col_of(E.size(), -1);
  {
    int a = 0, b = 0;
    for (size_t s = 0; s < E.size(); ++s) {
      if (E[s].i >= 0) row_of[s] = a++;
      if (E[s].j >= 0) col_of[s] = b++;
    }
  }
  auto nz = [&](int s, int t) { return f.coef(row_of[s], col_of[t]) != 0; };
  auto is_arrow = [&](int s, int t) {
    return nz(s, t) && B.rep(f.rows[row_of[s]], f.cols[col_of[t]]).length() == 1;
  };
  std::vector<int> pairs;
  for (int s = 0; s < int(E.size()); ++s)
    if (E[s].is_pair()) pairs.push_back(s);
  // exactly one direction of each step between pairs is forward
  for (size_t u = 0; u + 1 < pairs.size(); ++u) {
    int s = pairs[u], t = pairs[u + 1];
    bool fw = step_forward(B, r.sequence, s, t), bw = step_forward(B, r.sequence, t, s);
    if (fw == bw) rep.failures.push_back("step " + std::to_string(s) + " is forward in " + (fw ? "both" : "neither") +
                                         " direction");
  }
  for (const auto& idx : forward_runs(B, r)) {
    StaircaseReport::Run run;
    run.first = idx.front();
    run.last = idx.back();
    run.reversed = idx.back() < idx.front();
    const int n = int(idx.size());
    RunQuiver rq = run_quiver(m, r, gd, idx);
    const std::vector<int>& degrees = rq.degree;
    bool known = true;
    for (int a = 0; a + 1 < n; ++a) {
      int d = degrees[a];
      if (d < 0) known = false;
      bool rect = rq.rectangular[a];
      run.steps.push_back(rect ? (d == 0 ? StepType::R0 : StepType::R1) : (d == 0 ? StepType::T0 : StepType::T1));
    }
    std::string tag = diagonal_name(r.diagonal) + " run " + std::to_string(run.first) + ".." +
                      std::to_string(run.last) + ": ";
    if (!known) {
      rep.failures.push_back(tag + "step degree undetermined");
      rep.runs.push_back(run);
      continue;
    }
    run.profile = staircase_from_steps(run.steps);
    auto F = [&](int a, int b) { return nz(idx[a], idx[b]); };
    auto A = [&](int a, int b) { return is_arrow(idx[a], idx[b]); };
    // shape
    auto pat = staircase_pattern(run.profile, n);
    run.shape_ok = true;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (a != b && F(a, b) != pat[a][b]) run.shape_ok = false;
    // entry rules: step Sigma_{l+1} constrains (l,l+2), (l,l+3), (l+1,l+3)
    run.entry_rules_ok = true;
    for (int l = 0; l + 2 < n; ++l) {
      StepType ty = run.steps[l + 1];
      auto chk = [&](int a, int b, bool want) {
        if (b < n && F(a, b) != want) run.entry_rules_ok = false;
      };
      switch (ty) {
        case StepType::R0: chk(l, l + 2, true); chk(l + 1, l + 3, false); break;
        case StepType::R1: chk(l, l + 2, false); chk(l + 1, l + 3, true); break;
        case StepType::T0: chk(l, l + 2, true); chk(l, l + 3, true); chk(l + 1, l + 3, true); break;
        case StepType::T1: chk(l, l + 2, false); chk(l, l + 3, false); chk(l + 1, l + 3, false); break;
      }
    }
    // rectangular steps flip the degree, trapezoidal ones keep it
    run.degree_rules_ok = true;
    for (int a = 0; a + 1 < int(run.steps.size()); ++a) {
      bool rect = run.steps[a] == StepType::R0 || run.steps[a] == StepType::R1;
      if (rect == (degrees[a] == degrees[a + 1])) run.degree_rules_ok = false;
    }
    for (int s = 0; s + 2 < n; ++s)
      if (A(s + 1, s + 1) == F(s, s + 2)) run.degree_rules_ok = false;
    // arrow runs
    run.dots_ok = true;
    for (int s = 0; s < n; ++s)
      for (int t = s + 2; t < n; ++t) {
        if (!A(s, t)) continue;
        bool i1 = true, i2 = true;
        for (int x = s; x <= t; ++x) i1 = i1 && A(x, t);
        for (int x = s; x <= t; ++x)
          for (int y = x; y < t; ++y)
            if (!(x == s && y == s) && A(x, y)) i1 = false;
        for (int y = s; y <= t; ++y) i2 = i2 && A(s, y);
        for (int x = s + 1; x <= t; ++x)
          for (int y = x; y <= t; ++y)
            if (!(x == t && y == t) && A(x, y)) i2 = false;
        if (i1 == i2) run.dots_ok = false;
      }
    // block words after the first block, where the threshold rule fired
    run.blocks_ok = true;
    const auto& t = run.profile.t;
    for (size_t l = 2; l < t.size(); ++l) {
      int lo = t[l - 1], hi = t[l];
      if (l + 1 == t.size() && hi == n) break;  // closing block, no rule fired
      std::vector<StepType> block(run.steps.begin() + (lo - 1), run.steps.begin() + (hi - 1));
      std::vector<StepType> want;
      if (hi - lo == 1) {
        want = {StepType::T1};
      } else {
        want.push_back(StepType::R1);
        for (int c = 0; c < hi - lo - 2; ++c) want.push_back(StepType::T0);
        want.push_back(StepType::R0);
      }
      if (block != want) run.blocks_ok = false;
    }
    if (!run.shape_ok) rep.failures.push_back(tag + "shape differs from staircase " + step_word(run.steps));
    if (!run.entry_rules_ok) rep.failures.push_back(tag + "entry rules fail for " + step_word(run.steps));
    if (!run.degree_rules_ok) rep.failures.push_back(tag + "degree rules fail for " + step_word(run.steps));
    if (!run.dots_ok) rep.failures.push_back(tag + "arrow runs fail");
    if (!run.blocks_ok) rep.failures.push_back(tag + "block words fail for " + step_word(run.steps));
    rep.runs.push_back(run);
  }
  return rep;
}

bool StableRecord::ok() const {
  if (stable_end != 1 || self_ext != 0) return false;
  for (auto& [d, good] : ext_vs_crossing)
    if (!good) return false;
  return true;
}

StableRecord stable_checks(const DimerModel& m, const TwoDiagonal& d) {
  const Algebra& B = m.algebra();
  StableRecord rec;
  const ModuleRep& M = m.module(d);
  rec.stable_end = stable_hom_dim(B, M, M);
  rec.self_ext = ext1(B, M, M);
  for (const auto& e : m.diagonals()) {
    if (e == d) continue;
    const ModuleRep& N = m.module(e);
    int s = ext1(B, M, N) + ext1(B, N, M);
    rec.ext_vs_crossing.push_back({e, s == crossing_count(m.polygon(), d, e)});
  }
  return rec;
}

CosyzygyRecord cosyzygy_check(const DimerModel& m, const TwoDiagonal& d) {
  const Algebra& B = m.algebra();
  CosyzygyRecord rec;
  PathMatrix f = build_f(m, m.representatives(d).front());
  const ModuleRep& M = m.module(d);
  PathMatrix g = minimal_presentation(B, M);
  auto sorted = [](std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  rec.minimal = sorted(f.rows) == sorted(g.rows) && sorted(f.cols) == sorted(g.cols);
  InjectiveSum I1 = injective_sum(B, f.cols), I0 = injective_sum(B, f.rows);
  MorphismRep nf = nakayama(B, f, I1, I0);
  ModuleRep K = kernel(B.quiver(), I1.module, I0.module, nf).module;
  rec.matches_tau = is_iso(B.quiver(), K, tau(B, M));
  return rec;
}

ConjectureReport conjecture_report(const DimerModel& m) {
  const Algebra& B = m.algebra();
  const Quiver& q = B.quiver();
  const auto& P = m.polygon();
  ConjectureReport rep;
  const int bound = 2 * P.size();
  std::vector<ModuleRep> rads;
  for (int i = 0; i < q.num_vertices(); ++i) rads.push_back(radical(B, i));
  for (int i = 0; i < q.num_vertices(); ++i) {
    ConjectureReport::Line L;
    L.vertex = i;
    TwoDiagonal rho = radical_diagonal(P, i);
    for (int k = 1; k <= P.size(); ++k)
      if (rotate(P, rho, k) == rho) {
        L.rotation_period = k;
        break;
      }
    ModuleRep X = rads[i];
    for (int k = 1; k <= bound && !X.is_zero(); ++k) {
      X = syzygy(B, X);
      if (L.omega_period < 0 && is_iso(q, X, rads[i])) L.omega_period = k;
      int hit = radical_vertex(P, rotate(P, rho, k));
      if (hit >= 0 && k <= P.size()) {
        if (is_iso(q, X, rads[hit]))
          L.coincidences.push_back({k, hit});
        else
          L.mismatches.push_back({k, hit});
      }
    }
    rep.lines.push_back(L);
  }
  return rep;
}

}  // namespace dimer
