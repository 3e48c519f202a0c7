#include "dimer/algebra.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace dimer {

Path make_path(const Quiver& q, std::vector<int> arrows) {
  if (arrows.empty()) throw DomainError("make_path: empty arrow list needs a vertex");
  for (size_t k = 1; k < arrows.size(); ++k)
    if (q.arrow(arrows[k - 1]).tgt != q.arrow(arrows[k]).src)
      throw DomainError("path is not composable");
  Path p;
  p.source = q.arrow(arrows.front()).src;
  p.target = q.arrow(arrows.back()).tgt;
  p.arrows = std::move(arrows);
  return p;
}

std::string path_name(const Quiver& q, const Path& p) {
  if (p.arrows.empty()) return "e" + q.vertex(p.source);
  std::string s = q.vertex(p.source);
  for (int a : p.arrows) s += "->" + q.vertex(q.arrow(a).tgt);
  return s;
}

std::vector<Relation> relations(const Quiver& q, const DualGraph& g) {
  std::vector<Relation> out;
  auto rest = [&](int c, int a) {
    const auto& ar = g.cycles[c].arrows;
    int k = g.position(c, a), n = int(ar.size());
    std::vector<int> p;
    for (int j = 1; j < n; ++j) p.push_back(ar[(k + j) % n]);
    return p;
  };
  for (int a = 0; a < q.num_arrows(); ++a) {
    Relation r;
    r.arrow = a;
    r.source = q.arrow(a).tgt;
    r.target = q.arrow(a).src;
    r.lhs = rest(g.arrow_cycles[a][0], a);
    if (g.kinds[a] == ArrowKind::interior) {
      r.zero = false;
      r.rhs = rest(g.arrow_cycles[a][1], a);
    }
    out.push_back(r);
  }
  return out;
}

namespace {

bool vertex_simple(const Quiver& q, int source, const std::vector<int>& arrows) {
  std::vector<int> seen{source};
  int v = source;
  for (int a : arrows) {
    if (q.arrow(a).src != v) return false;
    v = q.arrow(a).tgt;
    if (std::find(seen.begin(), seen.end(), v) != seen.end()) return false;
    seen.push_back(v);
  }
  return true;
}

int end_of(const Quiver& q, int source, const std::vector<int>& arrows) {
  return arrows.empty() ? source : q.arrow(arrows.back()).tgt;
}

std::vector<int> cat3(const std::vector<int>& a, const std::vector<int>& b, const std::vector<int>& c) {
  std::vector<int> r = a;
  r.insert(r.end(), b.begin(), b.end());
  r.insert(r.end(), c.begin(), c.end());
  return r;
}

bool path_order(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

Algebra::Algebra(Quiver q) : q_(std::move(q)) {
  g_ = validated_dual_graph(q_);
  rels_ = relations(q_, g_);
  const int n = q_.num_vertices();
  data_.assign(n, std::vector<PairData>(n));
  rep_.assign(n, std::vector<std::optional<Path>>(n));

  // all vertex-simple paths, grouped by endpoints
  for (int x = 0; x < n; ++x) {
    std::vector<int> cur;
    std::vector<char> on(n, 0);
    on[x] = 1;
    std::function<void(int)> dfs = [&](int v) {
      data_[x][v].paths.push_back(cur);
      for (int a : q_.out_arrows(v)) {
        int w = q_.arrow(a).tgt;
        if (on[w]) continue;
        on[w] = 1;
        cur.push_back(a);
        dfs(w);
        cur.pop_back();
        on[w] = 0;
      }
    };
    dfs(x);
    for (int y = 0; y < n; ++y)
      std::sort(data_[x][y].paths.begin(), data_[x][y].paths.end(), path_order);
  }

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      PairData& d = data_[x][y];
      const int m = int(d.paths.size());
      if (m == 0) continue;
      std::map<std::vector<int>, int> idx;
      for (int k = 0; k < m; ++k) idx[d.paths[k]] = k;
      std::vector<VecQ> cons;
      for (const Relation& r : rels_) {
        for (const auto& u : data_[x][r.source].paths)
          for (const auto& v : data_[r.target][y].paths) {
            VecQ c = VecQ::Zero(m);
            bool any = false;
            auto term = [&](const std::vector<int>& mid, int sign) {
              auto w = cat3(u, mid, v);
              if (!vertex_simple(q_, x, w)) return;
              c(idx.at(w)) += sign;
              any = true;
            };
            term(r.lhs, 1);
            if (!r.zero) term(r.rhs, -1);
            if (any) cons.push_back(c);
          }
      }
      MatQ R(Eigen::Index(cons.size()), m);
      for (size_t i = 0; i < cons.size(); ++i) R.row(i) = cons[i].transpose();
      MatQ ker = cons.empty() ? MatQ(MatQ::Identity(m, m)) : nullspace(R);
      max_pair_dim_ = std::max(max_pair_dim_, int(ker.cols()));
      if (ker.cols() > 1)
        throw DomainError("algebra is not schurian at (" + q_.vertex(x) + "," + q_.vertex(y) + ")");
      d.phi.assign(m, Rational(0));
      if (ker.cols() == 0) continue;
      int first = -1;
      for (int k = 0; k < m; ++k)
        if (ker(k, 0) != 0) {
          first = k;
          break;
        }
      Rational s = ker(first, 0);
      for (int k = 0; k < m; ++k) d.phi[k] = ker(k, 0) / s;
      Path p;
      p.source = x;
      p.target = y;
      p.arrows = d.paths[first];
      rep_[x][y] = p;
    }
}

int Algebra::find_path(int x, int y, const std::vector<int>& arrows) const {
  const auto& ps = data_[x][y].paths;
  auto it = std::lower_bound(ps.begin(), ps.end(), arrows, path_order);
  if (it == ps.end() || *it != arrows) return -1;
  return int(it - ps.begin());
}

Rational Algebra::coeff(int source, const std::vector<int>& arrows) const {
  if (!vertex_simple(q_, source, arrows)) return 0;
  int t = end_of(q_, source, arrows);
  int k = find_path(source, t, arrows);
  if (k < 0) return 0;
  return data_[source][t].phi[k];
}

Rational Algebra::mult(int x, int y, int z) const {
  if (!nonzero(x, y) || !nonzero(y, z)) return 0;
  std::vector<int> w = rep(x, y).arrows;
  const auto& b = rep(y, z).arrows;
  w.insert(w.end(), b.begin(), b.end());
  return coeff(x, w);
}

int Algebra::dimension() const {
  int d = 0;
  for (int x = 0; x < num_vertices(); ++x)
    for (int y = 0; y < num_vertices(); ++y) d += nonzero(x, y);
  return d;
}

const Algebra& Algebra::opposite() const {
  if (!op_) op_ = std::make_shared<Algebra>(q_.opposite());
  return *op_;
}

std::vector<CycleCheck> Algebra::cyclic_zero_checks() const {
  const int n = num_vertices();
  bool graded = true;
  for (auto& r : rels_)
    if (!r.zero && r.lhs.size() != r.rhs.size()) graded = false;
  // the relations are homogeneous for the path-length grading in the graded
  // case, so a cycle of length L lies in the ideal iff it lies in the span
  // of the degree-L generators u r v; otherwise only a positive certificate
  // from a truncated search is available
  std::vector<CycleCheck> out;
  for (int x = 0; x < n; ++x) {
    std::vector<std::vector<int>> cycles;
    std::vector<int> cur;
    std::vector<char> on(n, 0);
    on[x] = 1;
    std::function<void(int)> dfs = [&](int v) {
      for (int a : q_.out_arrows(v)) {
        int w = q_.arrow(a).tgt;
        if (w == x) {
          cur.push_back(a);
          cycles.push_back(cur);
          cur.pop_back();
          continue;
        }
        if (on[w]) continue;
        on[w] = 1;
        cur.push_back(a);
        dfs(w);
        cur.pop_back();
        on[w] = 0;
      }
    };
    dfs(x);
    std::sort(cycles.begin(), cycles.end(), path_order);
    for (auto& c : cycles) {
      const int L = int(c.size());
      const int T = graded ? L : L + 3;
      // walks from every vertex, by length, as needed
      std::map<std::vector<int>, int> idx;
      std::vector<std::vector<int>> walks_from_x;  // length <= T, ending at x
      // walks[v][len] = list of walks of exactly len arrows starting at v
      std::vector<std::vector<std::vector<std::vector<int>>>> walks(
          n, std::vector<std::vector<std::vector<int>>>(T + 1));
      for (int v = 0; v < n; ++v) {
        walks[v][0].push_back({});
        for (int len = 1; len <= T; ++len)
          for (auto& w : walks[v][len - 1]) {
            int e = end_of(q_, v, w);
            for (int a : q_.out_arrows(e)) {
              auto w2 = w;
              w2.push_back(a);
              walks[v][len].push_back(w2);
            }
          }
      }
      auto col = [&](const std::vector<int>& w) {
        auto it = idx.find(w);
        if (it != idx.end()) return it->second;
        int k = int(idx.size());
        idx[w] = k;
        return k;
      };
      std::vector<std::vector<std::pair<int, int>>> cons;
      for (const Relation& r : rels_) {
        int rl = int(std::max(r.lhs.size(), r.rhs.size()));
        for (int a = 0; a + rl <= T; ++a)
          for (auto& u : walks[x][a]) {
            if (end_of(q_, x, u) != r.source) continue;
            for (int b = 0; a + rl + b <= T; ++b) {
              if (graded && a + rl + b != L) continue;
              for (auto& v : walks[r.target][b]) {
                if (end_of(q_, r.target, v) != x) continue;
                std::vector<std::pair<int, int>> row{{col(cat3(u, r.lhs, v)), 1}};
                if (!r.zero) row.push_back({col(cat3(u, r.rhs, v)), -1});
                cons.push_back(row);
              }
            }
          }
      }
      int target = col(c);
      MatQ A = MatQ::Zero(Eigen::Index(idx.size()), Eigen::Index(cons.size()));
      for (size_t j = 0; j < cons.size(); ++j)
        for (auto [i, s] : cons[j]) A(i, j) += s;
      MatQ b = MatQ::Zero(Eigen::Index(idx.size()), 1);
      b(target, 0) = 1;
      CycleCheck ck;
      ck.cycle.source = x;
      ck.cycle.target = x;
      ck.cycle.arrows = c;
      ck.zero = cons.empty() ? false : in_column_span(A, b);
      ck.determined = graded || ck.zero;
      out.push_back(ck);
    }
  }
  return out;
}

// ---------------------------------------------------------------- modules

int ModuleRep::total_dim() const {
  int d = 0;
  for (int x : dims) d += x;
  return d;
}

ModuleRep zero_module(const Quiver& q) {
  ModuleRep m;
  m.dims.assign(q.num_vertices(), 0);
  for (int a = 0; a < q.num_arrows(); ++a) m.action.push_back(MatQ(0, 0));
  return m;
}

MatQ path_action(const Quiver&, const ModuleRep& M, const Path& p) {
  MatQ r = MatQ::Identity(M.dims[p.source], M.dims[p.source]);
  for (int a : p.arrows) r = (M.action[a] * r).eval();
  return r;
}

bool satisfies_relations(const Algebra& B, const ModuleRep& M) {
  const Quiver& q = B.quiver();
  for (int a = 0; a < q.num_arrows(); ++a) {
    const auto& A = M.action[a];
    if (A.rows() != M.dims[q.arrow(a).tgt] || A.cols() != M.dims[q.arrow(a).src]) return false;
  }
  for (const Relation& r : B.rels()) {
    Path l{r.source, r.target, r.lhs};
    MatQ v = path_action(q, M, l);
    if (!r.zero) v -= path_action(q, M, Path{r.source, r.target, r.rhs});
    if (!is_zero(v)) return false;
  }
  return true;
}

bool is_morphism(const Quiver& q, const ModuleRep& M, const ModuleRep& N, const MorphismRep& f) {
  for (int v = 0; v < q.num_vertices(); ++v)
    if (f.blocks[v].rows() != N.dims[v] || f.blocks[v].cols() != M.dims[v]) return false;
  for (int a = 0; a < q.num_arrows(); ++a) {
    int s = q.arrow(a).src, t = q.arrow(a).tgt;
    if (!is_zero(MatQ(N.action[a] * f.blocks[s] - f.blocks[t] * M.action[a]))) return false;
  }
  return true;
}

int ProjectiveSum::index(int y, int s) const {
  const auto& b = basis[y];
  for (int k = 0; k < int(b.size()); ++k)
    if (b[k] == s) return k;
  return -1;
}

ProjectiveSum projective_sum(const Algebra& B, const std::vector<int>& tops) {
  const Quiver& q = B.quiver();
  ProjectiveSum P;
  P.tops = tops;
  P.basis.assign(q.num_vertices(), {});
  P.module.dims.assign(q.num_vertices(), 0);
  for (int y = 0; y < q.num_vertices(); ++y)
    for (int s = 0; s < int(tops.size()); ++s)
      if (B.nonzero(tops[s], y)) P.basis[y].push_back(s);
  for (int y = 0; y < q.num_vertices(); ++y) P.module.dims[y] = int(P.basis[y].size());
  for (int a = 0; a < q.num_arrows(); ++a) {
    int y = q.arrow(a).src, z = q.arrow(a).tgt;
    MatQ A = MatQ::Zero(P.module.dims[z], P.module.dims[y]);
    for (int k = 0; k < int(P.basis[y].size()); ++k) {
      int s = P.basis[y][k];
      int r = P.index(z, s);
      if (r < 0) continue;
      std::vector<int> w = B.rep(tops[s], y).arrows;
      w.push_back(a);
      A(r, k) = B.coeff(tops[s], w);
    }
    P.module.action.push_back(A);
  }
  return P;
}

ModuleRep projective(const Algebra& B, int i) { return projective_sum(B, {i}).module; }

InjectiveSum injective_sum(const Algebra& B, const std::vector<int>& socles) {
  const Quiver& q = B.quiver();
  InjectiveSum I;
  I.socles = socles;
  I.basis.assign(q.num_vertices(), {});
  I.module.dims.assign(q.num_vertices(), 0);
  for (int y = 0; y < q.num_vertices(); ++y) {
    for (int s = 0; s < int(socles.size()); ++s)
      if (B.nonzero(y, socles[s])) I.basis[y].push_back(s);
    I.module.dims[y] = int(I.basis[y].size());
  }
  auto index = [&](int y, int s) {
    const auto& b = I.basis[y];
    for (int k = 0; k < int(b.size()); ++k)
      if (b[k] == s) return k;
    return -1;
  };
  // (u* . a)(c) = u*(a c): dual basis vector at y maps to coeff(a + rep(z,x))
  for (int a = 0; a < q.num_arrows(); ++a) {
    int y = q.arrow(a).src, z = q.arrow(a).tgt;
    MatQ A = MatQ::Zero(I.module.dims[z], I.module.dims[y]);
    for (int k = 0; k < int(I.basis[y].size()); ++k) {
      int s = I.basis[y][k];
      int r = index(z, s);
      if (r < 0) continue;
      std::vector<int> w{a};
      const auto& rest = B.rep(z, socles[s]).arrows;
      w.insert(w.end(), rest.begin(), rest.end());
      A(r, k) = B.coeff(y, w) / 1;
    }
    I.module.action.push_back(A);
  }
  return I;
}

ModuleRep injective(const Algebra& B, int i) { return injective_sum(B, {i}).module; }

ModuleRep simple(const Algebra& B, int i) {
  const Quiver& q = B.quiver();
  ModuleRep m;
  m.dims.assign(q.num_vertices(), 0);
  m.dims[i] = 1;
  for (int a = 0; a < q.num_arrows(); ++a)
    m.action.push_back(MatQ::Zero(m.dims[q.arrow(a).tgt], m.dims[q.arrow(a).src]));
  return m;
}

ModuleRep radical(const Algebra& B, int i) {
  ModuleRep P = projective(B, i);
  ModuleRep S = simple(B, i);
  MorphismRep pi = zero_morphism(P, S);
  pi.blocks[i](0, 0) = 1;
  return kernel(B.quiver(), P, S, pi).module;
}

MorphismRep identity_morphism(const ModuleRep& M) {
  MorphismRep f;
  for (int d : M.dims) f.blocks.push_back(MatQ::Identity(d, d));
  return f;
}

MorphismRep zero_morphism(const ModuleRep& M, const ModuleRep& N) {
  MorphismRep f;
  for (size_t v = 0; v < M.dims.size(); ++v) f.blocks.push_back(MatQ::Zero(N.dims[v], M.dims[v]));
  return f;
}

MorphismRep compose(const MorphismRep& f, const MorphismRep& g) {
  MorphismRep h;
  for (size_t v = 0; v < f.blocks.size(); ++v) h.blocks.push_back(f.blocks[v] * g.blocks[v]);
  return h;
}

MorphismRep add(const MorphismRep& f, const MorphismRep& g, const Rational& c) {
  MorphismRep h;
  for (size_t v = 0; v < f.blocks.size(); ++v) h.blocks.push_back(f.blocks[v] + c * g.blocks[v]);
  return h;
}

bool is_zero(const MorphismRep& f) {
  for (auto& b : f.blocks)
    if (!is_zero(b)) return false;
  return true;
}

int rank(const MorphismRep& f) {
  int r = 0;
  for (auto& b : f.blocks) r += rank(b);
  return r;
}

std::vector<MorphismRep> hom_space(const Quiver& q, const ModuleRep& M, const ModuleRep& N) {
  const int n = q.num_vertices();
  std::vector<int> off(n + 1, 0);
  for (int v = 0; v < n; ++v) off[v + 1] = off[v] + N.dims[v] * M.dims[v];
  const int unknowns = off[n];
  // f_v stored column-major: entry (r,c) at off[v] + c*N_v + r
  auto var = [&](int v, int r, int c) { return off[v] + c * N.dims[v] + r; };
  std::vector<std::vector<std::pair<int, Rational>>> eqs;
  for (int a = 0; a < q.num_arrows(); ++a) {
    int s = q.arrow(a).src, t = q.arrow(a).tgt;
    const MatQ& Am = M.action[a];
    const MatQ& An = N.action[a];
    // (An f_s - f_t Am)(r,c) = 0 for r < N_t, c < M_s
    for (int r = 0; r < N.dims[t]; ++r)
      for (int c = 0; c < M.dims[s]; ++c) {
        std::vector<std::pair<int, Rational>> e;
        for (int k = 0; k < N.dims[s]; ++k)
          if (An(r, k) != 0) e.push_back({var(s, k, c), An(r, k)});
        for (int k = 0; k < M.dims[t]; ++k)
          if (Am(k, c) != 0) e.push_back({var(t, r, k), -Am(k, c)});
        if (!e.empty()) eqs.push_back(std::move(e));
      }
  }
  MatQ E = MatQ::Zero(Eigen::Index(eqs.size()), unknowns);
  for (size_t i = 0; i < eqs.size(); ++i)
    for (auto& [j, c] : eqs[i]) E(i, j) += c;
  MatQ K = eqs.empty() ? MatQ(MatQ::Identity(unknowns, unknowns)) : nullspace(E);
  std::vector<MorphismRep> out;
  for (int k = 0; k < K.cols(); ++k) {
    MorphismRep f;
    for (int v = 0; v < n; ++v) {
      MatQ b(N.dims[v], M.dims[v]);
      for (int r = 0; r < N.dims[v]; ++r)
        for (int c = 0; c < M.dims[v]; ++c) b(r, c) = K(var(v, r, c), k);
      f.blocks.push_back(b);
    }
    out.push_back(f);
  }
  return out;
}

int hom_dim(const Quiver& q, const ModuleRep& M, const ModuleRep& N) {
  return int(hom_space(q, M, N).size());
}

SubModule kernel(const Quiver& q, const ModuleRep& M, const ModuleRep& N, const MorphismRep& f) {
  (void)N;
  SubModule out;
  const int n = q.num_vertices();
  std::vector<MatQ> basis(n);
  for (int v = 0; v < n; ++v) {
    basis[v] = nullspace(f.blocks[v]);
    out.module.dims.push_back(int(basis[v].cols()));
  }
  for (int a = 0; a < q.num_arrows(); ++a) {
    int s = q.arrow(a).src, t = q.arrow(a).tgt;
    MatQ img = M.action[a] * basis[s];
    auto x = solve(basis[t], img);
    if (!x) throw DomainError("kernel is not a submodule (input is not a morphism)");
    out.module.action.push_back(*x);
  }
  out.inclusion.blocks = basis;
  return out;
}

SubModule image(const Quiver& q, const ModuleRep& M, const ModuleRep& N, const MorphismRep& f) {
  (void)M;
  SubModule out;
  const int n = q.num_vertices();
  std::vector<MatQ> basis(n);
  for (int v = 0; v < n; ++v) {
    basis[v] = column_basis(f.blocks[v]);
    out.module.dims.push_back(int(basis[v].cols()));
  }
  for (int a = 0; a < q.num_arrows(); ++a) {
    int s = q.arrow(a).src, t = q.arrow(a).tgt;
    MatQ img = N.action[a] * basis[s];
    auto x = solve(basis[t], img);
    if (!x) throw DomainError("image is not a submodule");
    out.module.action.push_back(*x);
  }
  out.inclusion.blocks = basis;
  return out;
}

namespace {

// Projection of the ambient space onto a complement of span(sub), together
// with the complement basis (a section of the projection).
std::pair<MatQ, MatQ> quotient_maps(const MatQ& sub_cols, int ambient) {
  MatQ sb = column_basis(sub_cols);
  MatQ comp = complement_basis(sb, ambient);
  MatQ full(ambient, sb.cols() + comp.cols());
  full << sb, comp;
  MatQ inv = *inverse(full);
  MatQ proj = inv.bottomRows(comp.cols());
  return {proj, comp};
}

}  // namespace

QuotientModule cokernel(const Quiver& q, const ModuleRep& M, const ModuleRep& N, const MorphismRep& f) {
  (void)M;
  QuotientModule out;
  const int n = q.num_vertices();
  std::vector<MatQ> proj(n), sect(n);
  for (int v = 0; v < n; ++v) {
    auto [p, s] = quotient_maps(f.blocks[v], N.dims[v]);
    proj[v] = p;
    sect[v] = s;
    out.module.dims.push_back(int(p.rows()));
  }
  for (int a = 0; a < q.num_arrows(); ++a) {
    int s = q.arrow(a).src, t = q.arrow(a).tgt;
    out.module.action.push_back(proj[t] * N.action[a] * sect[s]);
  }
  out.projection.blocks = proj;
  return out;
}

ModuleRep direct_sum(const Quiver& q, const std::vector<ModuleRep>& ms) {
  ModuleRep out;
  const int n = q.num_vertices();
  out.dims.assign(n, 0);
  for (auto& m : ms)
    for (int v = 0; v < n; ++v) out.dims[v] += m.dims[v];
  for (int a = 0; a < q.num_arrows(); ++a) {
    int s = q.arrow(a).src, t = q.arrow(a).tgt;
    MatQ A = MatQ::Zero(out.dims[t], out.dims[s]);
    int r = 0, c = 0;
    for (auto& m : ms) {
      A.block(r, c, m.dims[t], m.dims[s]) = m.action[a];
      r += m.dims[t];
      c += m.dims[s];
    }
    out.action.push_back(A);
  }
  return out;
}

ModuleRep dual(const Quiver& q, const ModuleRep& M) {
  ModuleRep D;
  D.dims = M.dims;
  for (int a = 0; a < q.num_arrows(); ++a) D.action.push_back(M.action[a].transpose());
  return D;
}

namespace {

// Basis of rad M at each vertex: the sum of the images of incoming arrows.
std::vector<MatQ> radical_basis(const Quiver& q, const ModuleRep& M) {
  const int n = q.num_vertices();
  std::vector<MatQ> out(n);
  for (int y = 0; y < n; ++y) {
    int cols = 0;
    for (int a : q.in_arrows(y)) cols += int(M.action[a].cols());
    MatQ all(M.dims[y], cols);
    int c = 0;
    for (int a : q.in_arrows(y)) {
      all.middleCols(c, M.action[a].cols()) = M.action[a];
      c += int(M.action[a].cols());
    }
    out[y] = column_basis(all);
  }
  return out;
}

}  // namespace

std::vector<int> top_dims(const Quiver& q, const ModuleRep& M) {
  auto rb = radical_basis(q, M);
  std::vector<int> t;
  for (int y = 0; y < q.num_vertices(); ++y) t.push_back(M.dims[y] - int(rb[y].cols()));
  return t;
}

std::vector<std::vector<int>> loewy_layers(const Quiver& q, const ModuleRep& M) {
  std::vector<std::vector<int>> layers;
  ModuleRep cur = M;
  while (cur.total_dim() > 0) {
    auto rb = radical_basis(q, cur);
    std::vector<int> layer;
    for (int y = 0; y < q.num_vertices(); ++y) layer.push_back(cur.dims[y] - int(rb[y].cols()));
    layers.push_back(layer);
    ModuleRep next;
    for (int y = 0; y < q.num_vertices(); ++y) next.dims.push_back(int(rb[y].cols()));
    for (int a = 0; a < q.num_arrows(); ++a) {
      int s = q.arrow(a).src, t = q.arrow(a).tgt;
      next.action.push_back(*solve(rb[t], MatQ(cur.action[a] * rb[s])));
    }
    cur = next;
  }
  return layers;
}

std::string loewy_string(const Quiver& q, const ModuleRep& M) {
  auto layers = loewy_layers(q, M);
  std::string s;
  for (size_t l = 0; l < layers.size(); ++l) {
    if (l) s += "/";
    std::string line;
    for (int y = 0; y < q.num_vertices(); ++y)
      for (int k = 0; k < layers[l][y]; ++k) line += (line.empty() ? "" : " ") + q.vertex(y);
    s += line;
  }
  return s.empty() ? "0" : s;
}

ProjectiveCover projective_cover(const Algebra& B, const ModuleRep& M) {
  const Quiver& q = B.quiver();
  const int n = q.num_vertices();
  auto rb = radical_basis(q, M);
  std::vector<int> tops;
  std::vector<VecQ> gens;
  for (int y = 0; y < n; ++y) {
    MatQ comp = complement_basis(rb[y], M.dims[y]);
    for (int k = 0; k < comp.cols(); ++k) {
      tops.push_back(y);
      gens.push_back(comp.col(k));
    }
  }
  ProjectiveCover pc;
  pc.cover = projective_sum(B, tops);
  const ProjectiveSum& P = pc.cover;
  pc.surjection.blocks.resize(n);
  for (int z = 0; z < n; ++z) {
    MatQ b = MatQ::Zero(M.dims[z], P.module.dims[z]);
    for (int k = 0; k < int(P.basis[z].size()); ++k) {
      int s = P.basis[z][k];
      b.col(k) = path_action(q, M, B.rep(tops[s], z)) * gens[s];
    }
    pc.surjection.blocks[z] = b;
  }
  return pc;
}

SubModule syzygy_inclusion(const Algebra& B, const ModuleRep& M) {
  auto pc = projective_cover(B, M);
  return kernel(B.quiver(), pc.cover.module, M, pc.surjection);
}

ModuleRep syzygy(const Algebra& B, const ModuleRep& M) { return syzygy_inclusion(B, M).module; }

ModuleRep cosyzygy(const Algebra& B, const ModuleRep& M) {
  const Algebra& op = B.opposite();
  ModuleRep DM = dual(B.quiver(), M);
  return dual(op.quiver(), syzygy(op, DM));
}

PathMatrix compose(const Algebra& B, const PathMatrix& a, const PathMatrix& b) {
  if (a.cols != b.rows) throw DomainError("path matrices do not compose");
  PathMatrix c;
  c.rows = a.rows;
  c.cols = b.cols;
  c.coef = MatQ::Zero(Eigen::Index(a.rows.size()), Eigen::Index(b.cols.size()));
  for (size_t s = 0; s < a.rows.size(); ++s)
    for (size_t u = 0; u < b.cols.size(); ++u) {
      Rational acc = 0;
      for (size_t t = 0; t < a.cols.size(); ++t) {
        if (a.coef(s, t) == 0 || b.coef(t, u) == 0) continue;
        acc += a.coef(s, t) * b.coef(t, u) * B.mult(a.rows[s], a.cols[t], b.cols[u]);
      }
      c.coef(s, u) = acc;
    }
  return c;
}

bool path_matrix_equal(const PathMatrix& a, const PathMatrix& b) {
  return a.rows == b.rows && a.cols == b.cols && a.coef == b.coef;
}

MorphismRep to_morphism(const Algebra& B, const PathMatrix& f, const ProjectiveSum& P1,
                        const ProjectiveSum& P0) {
  const int n = B.num_vertices();
  MorphismRep m;
  for (int y = 0; y < n; ++y) {
    MatQ b = MatQ::Zero(P0.module.dims[y], P1.module.dims[y]);
    for (int k = 0; k < int(P1.basis[y].size()); ++k) {
      int t = P1.basis[y][k];
      for (int r = 0; r < int(P0.basis[y].size()); ++r) {
        int s = P0.basis[y][r];
        if (f.coef(s, t) == 0) continue;
        b(r, k) = f.coef(s, t) * B.mult(f.rows[s], f.cols[t], y);
      }
    }
    m.blocks.push_back(b);
  }
  return m;
}

QuotientModule path_matrix_cokernel(const Algebra& B, const PathMatrix& f) {
  ProjectiveSum P1 = projective_sum(B, f.cols), P0 = projective_sum(B, f.rows);
  MorphismRep m = to_morphism(B, f, P1, P0);
  return cokernel(B.quiver(), P1.module, P0.module, m);
}

PathMatrix minimal_presentation(const Algebra& B, const ModuleRep& M) {
  const Quiver& q = B.quiver();
  auto pc = projective_cover(B, M);
  SubModule K = kernel(q, pc.cover.module, M, pc.surjection);
  auto kc = projective_cover(B, K.module);
  PathMatrix f;
  f.rows = pc.cover.tops;
  f.cols = kc.cover.tops;
  f.coef = MatQ::Zero(Eigen::Index(f.rows.size()), Eigen::Index(f.cols.size()));
  // the generator of the t-th summand of P1 sits at vertex cols[t]; read off its
  // image in P0 in the basis rep(rows[s], cols[t])
  for (int t = 0; t < int(f.cols.size()); ++t) {
    int y = f.cols[t];
    int k = kc.cover.index(y, t);
    VecQ inK = kc.surjection.blocks[y].col(k);
    VecQ inP0 = K.inclusion.blocks[y] * inK;
    for (int r = 0; r < int(pc.cover.basis[y].size()); ++r) f.coef(pc.cover.basis[y][r], t) = inP0(r);
  }
  return f;
}

MorphismRep nakayama(const Algebra& B, const PathMatrix& f, const InjectiveSum& I1,
                     const InjectiveSum& I0) {
  const int n = B.num_vertices();
  MorphismRep m;
  for (int y = 0; y < n; ++y) {
    MatQ b = MatQ::Zero(I0.module.dims[y], I1.module.dims[y]);
    for (int k = 0; k < int(I1.basis[y].size()); ++k) {
      int t = I1.basis[y][k];
      for (int r = 0; r < int(I0.basis[y].size()); ++r) {
        int s = I0.basis[y][r];
        if (f.coef(s, t) == 0) continue;
        b(r, k) = f.coef(s, t) * B.mult(y, f.rows[s], f.cols[t]);
      }
    }
    m.blocks.push_back(b);
  }
  return m;
}

ModuleRep tau(const Algebra& B, const ModuleRep& M) {
  PathMatrix f = minimal_presentation(B, M);
  InjectiveSum I1 = injective_sum(B, f.cols), I0 = injective_sum(B, f.rows);
  MorphismRep nf = nakayama(B, f, I1, I0);
  return kernel(B.quiver(), I1.module, I0.module, nf).module;
}

ModuleRep tau_inv(const Algebra& B, const ModuleRep& M) {
  const Algebra& op = B.opposite();
  return dual(op.quiver(), tau(op, dual(B.quiver(), M)));
}

namespace {

// Morphism P(x) -> N sending e_x to the vector n in N_x.
MorphismRep from_projective(const Algebra& B, const ProjectiveSum& P, int s, const VecQ& n,
                            const ModuleRep& N) {
  MorphismRep f = zero_morphism(P.module, N);
  for (int y = 0; y < B.num_vertices(); ++y) {
    int k = P.index(y, s);
    if (k < 0) continue;
    f.blocks[y].col(k) = path_action(B.quiver(), N, B.rep(P.tops[s], y)) * n;
  }
  return f;
}

VecQ flatten(const MorphismRep& f) {
  int len = 0;
  for (auto& b : f.blocks) len += int(b.size());
  VecQ v(len);
  int k = 0;
  for (auto& b : f.blocks)
    for (int j = 0; j < b.cols(); ++j)
      for (int i = 0; i < b.rows(); ++i) v(k++) = b(i, j);
  return v;
}

MatQ stack(const std::vector<VecQ>& vs, int len) {
  MatQ m(len, Eigen::Index(vs.size()));
  for (size_t j = 0; j < vs.size(); ++j) m.col(j) = vs[j];
  return m;
}

int flat_len(const ModuleRep& M, const ModuleRep& N) {
  int len = 0;
  for (size_t v = 0; v < M.dims.size(); ++v) len += M.dims[v] * N.dims[v];
  return len;
}

// Columns spanning the maps M -> N that factor through a projective.
MatQ projective_maps(const Algebra& B, const ModuleRep& M, const ModuleRep& N) {
  const Quiver& q = B.quiver();
  auto pc = projective_cover(B, N);
  std::vector<VecQ> vs;
  for (auto& g : hom_space(q, M, pc.cover.module)) vs.push_back(flatten(compose(pc.surjection, g)));
  return stack(vs, flat_len(M, N));
}

}  // namespace

int ext1(const Algebra& B, const ModuleRep& M, const ModuleRep& N) {
  const Quiver& q = B.quiver();
  auto pc = projective_cover(B, M);
  SubModule K = kernel(q, pc.cover.module, M, pc.surjection);
  int hk = hom_dim(q, K.module, N);
  std::vector<VecQ> vs;
  for (int s = 0; s < int(pc.cover.tops.size()); ++s) {
    int x = pc.cover.tops[s];
    for (int k = 0; k < N.dims[x]; ++k) {
      VecQ e = VecQ::Zero(N.dims[x]);
      e(k) = 1;
      auto f = from_projective(B, pc.cover, s, e, N);
      vs.push_back(flatten(compose(f, K.inclusion)));
    }
  }
  int r = vs.empty() ? 0 : rank(stack(vs, flat_len(K.module, N)));
  return hk - r;
}

std::optional<ModuleRep> nonsplit_extension(const Algebra& B, const ModuleRep& M, const ModuleRep& N) {
  const Quiver& q = B.quiver();
  auto pc = projective_cover(B, M);
  SubModule K = kernel(q, pc.cover.module, M, pc.surjection);
  const int len = flat_len(K.module, N);
  std::vector<VecQ> vs;
  for (int s = 0; s < int(pc.cover.tops.size()); ++s) {
    int x = pc.cover.tops[s];
    for (int k = 0; k < N.dims[x]; ++k) {
      VecQ e = VecQ::Zero(N.dims[x]);
      e(k) = 1;
      vs.push_back(flatten(compose(from_projective(B, pc.cover, s, e, N), K.inclusion)));
    }
  }
  MatQ inner = stack(vs, len);
  for (auto& phi : hom_space(q, K.module, N)) {
    VecQ v = flatten(phi);
    if (inner.cols() > 0 && in_column_span(inner, MatQ(v))) continue;
    // pushout of 0 -> K -> P -> M -> 0 along phi: E = (P + N) / {(w, -phi w)}
    ModuleRep PN = direct_sum(q, {pc.cover.module, N});
    MorphismRep m;
    for (int y = 0; y < q.num_vertices(); ++y) {
      MatQ b(PN.dims[y], K.module.dims[y]);
      b << K.inclusion.blocks[y], -phi.blocks[y];
      m.blocks.push_back(b);
    }
    return cokernel(q, K.module, PN, m).module;
  }
  return std::nullopt;
}

int stable_hom_dim(const Algebra& B, const ModuleRep& M, const ModuleRep& N) {
  int h = hom_dim(B.quiver(), M, N);
  MatQ p = projective_maps(B, M, N);
  return h - (p.cols() ? rank(p) : 0);
}

bool stably_equal(const Algebra& B, const ModuleRep& M, const ModuleRep& N, const MorphismRep& f,
                  const MorphismRep& g) {
  VecQ d = flatten(add(f, g, -1));
  if (is_zero(MatQ(d))) return true;
  MatQ p = projective_maps(B, M, N);
  if (p.cols() == 0) return false;
  return in_column_span(p, MatQ(d));
}

namespace {

bool blockwise_invertible(const MorphismRep& f) {
  for (auto& b : f.blocks)
    if (b.rows() != b.cols() || rank(b) != b.rows()) return false;
  return true;
}

}  // namespace

bool is_iso(const Quiver& q, const ModuleRep& M, const ModuleRep& N) {
  if (M.dims != N.dims) return false;
  if (M.total_dim() == 0) return true;
  auto basis = hom_space(q, M, N);
  if (basis.empty()) return false;
  for (auto& f : basis)
    if (blockwise_invertible(f)) return true;
  // a generic combination of a Hom basis is invertible whenever some element
  // is; fixed seed keeps results reproducible
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> dist(-1000, 1000);
  for (int attempt = 0; attempt < 4; ++attempt) {
    MorphismRep f = zero_morphism(M, N);
    for (auto& b : basis) f = add(f, b, Rational(dist(rng)));
    if (blockwise_invertible(f)) return true;
  }
  return false;
}

bool is_indecomposable(const Quiver& q, const ModuleRep& M) {
  if (M.total_dim() == 0) return false;
  auto E = hom_space(q, M, M);
  const int k = int(E.size());
  // rank of the trace form on End(M) = dim End/rad End (characteristic 0)
  MatQ G(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      Rational tr = 0;
      for (size_t v = 0; v < E[i].blocks.size(); ++v) tr += (E[i].blocks[v] * E[j].blocks[v]).trace();
      G(i, j) = tr;
    }
  return rank(G) == 1;
}

bool is_projective(const Algebra& B, const ModuleRep& M) {
  auto pc = projective_cover(B, M);
  return pc.cover.module.dims == M.dims;
}

bool is_cmp(const Algebra& B, const ModuleRep& M) {
  const Quiver& q = B.quiver();
  for (int i = 0; i < q.num_vertices(); ++i)
    if (ext1(B, M, projective(B, i)) != 0) return false;
  ModuleRep t = tau(B, M);
  ModuleRep w = syzygy(B, syzygy(B, t));
  return is_iso(q, w, M);
}

}  // namespace dimer
