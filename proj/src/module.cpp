#include "qmod/module.hpp"

#include "qmod/poly.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace qmod {

namespace {

// Expresses algebra elements through evaluated quiver paths (products of
// arrow elements bracketed by idempotents). Exists for every Gabriel-style
// presentation: paths up to the nilpotency length span the algebra. The
// kernel of the evaluation map is exactly the relation ideal, which makes
// this table double as a universal relation check for algebras whose
// relations are not stored symbolically.
struct PathExpansion {
  std::vector<Path> paths;
  Mat eval;  // dim x npaths, column = path_element
  std::vector<std::vector<int>> by_pair;  // src * nv + tgt -> path indices
  std::map<std::pair<int, int>, Mat> eval_by_pair;
};

const PathExpansion& path_expansion(const AlgebraPtr& a) {
  static std::map<const BasedAlgebra*, std::pair<AlgebraPtr, PathExpansion>>
      cache;
  auto it = cache.find(a.get());
  if (it != cache.end()) return it->second.second;

  PathExpansion pe;
  const Quiver& q = a->quiver;
  Field f = a->field;
  Span sp(a->dim, f);
  std::vector<Path> frontier;
  for (int v = 0; v < q.num_vertices; ++v) frontier.push_back({v, {}});
  std::vector<std::vector<Scalar>> cols;
  int len = 0;
  while (!frontier.empty() && len <= a->dim + 1) {
    std::vector<Path> next;
    for (const auto& p : frontier) {
      auto ev = a->path_element(p);
      bool zero = true;
      for (const auto& x : ev)
        if (!x.is_zero()) {
          zero = false;
          break;
        }
      if (zero) continue;
      pe.paths.push_back(p);
      cols.push_back(ev);
      sp.add(ev);
      int t = p.target(q);
      for (int ar = 0; ar < static_cast<int>(q.arrows.size()); ++ar) {
        if (q.arrows[ar].src != t) continue;
        Path np = p;
        np.arrows.push_back(ar);
        next.push_back(np);
      }
    }
    if (sp.dim() == a->dim && len >= 1) {
      // keep one extra level so products used in checks stay inside; not
      // required for spanning, stop here
    }
    frontier = std::move(next);
    ++len;
    if (sp.dim() == a->dim) break;
  }
  if (sp.dim() != a->dim)
    throw ValidationError(
        "algebra is not generated by idempotents and arrow elements");
  pe.eval = mat_from_cols(f, a->dim, cols);
  pe.by_pair.assign(static_cast<size_t>(q.num_vertices) * q.num_vertices, {});
  for (int i = 0; i < static_cast<int>(pe.paths.size()); ++i) {
    int s = pe.paths[i].source, t = pe.paths[i].target(q);
    pe.by_pair[static_cast<size_t>(s) * q.num_vertices + t].push_back(i);
  }
  for (int s = 0; s < q.num_vertices; ++s)
    for (int t = 0; t < q.num_vertices; ++t) {
      auto& idx = pe.by_pair[static_cast<size_t>(s) * q.num_vertices + t];
      pe.eval_by_pair[{s, t}] = pe.eval.cols_subset(idx);
    }
  auto [pos, ok] = cache.emplace(a.get(), std::make_pair(a, std::move(pe)));
  (void)ok;
  return pos->second.second;
}

// Action on m of an algebra element supported in e_src A e_tgt, as a matrix
// m_src -> m_tgt.
Mat elem_action(const ModuleRep& m, int src, int tgt,
                const std::vector<Scalar>& elem) {
  const auto& pe = path_expansion(m.alg);
  int nv = m.alg->quiver.num_vertices;
  const auto& idx = pe.by_pair[static_cast<size_t>(src) * nv + tgt];
  const Mat& cols = pe.eval_by_pair.at({src, tgt});
  auto coords = coords_in(cols, elem);
  if (!coords)
    throw ValidationError("element not expressible over (src,tgt) paths");
  Mat act(m.dims[tgt], m.dims[src], m.field());
  for (size_t k = 0; k < idx.size(); ++k) {
    if ((*coords)[k].is_zero()) continue;
    act = act + m.path_action(pe.paths[idx[k]]) * (*coords)[k];
  }
  return act;
}

}  // namespace

int ModuleRep::total_dim() const {
  return std::accumulate(dims.begin(), dims.end(), 0);
}

Mat ModuleRep::path_action(const Path& p) const {
  p.validate(alg->quiver);
  Mat m = Mat::identity(dims[p.source], field());
  for (int a : p.arrows) m = arrow_mat[a] * m;
  return m;
}

void ModuleRep::validate() const {
  const Quiver& q = alg->quiver;
  if (static_cast<int>(dims.size()) != q.num_vertices)
    throw ValidationError("module dims size mismatch");
  if (arrow_mat.size() != q.arrows.size())
    throw ValidationError("module arrow map count mismatch");
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    if (arrow_mat[a].rows() != dims[q.arrows[a].tgt] ||
        arrow_mat[a].cols() != dims[q.arrows[a].src])
      throw ValidationError("arrow map '" + q.arrows[a].label +
                            "' has wrong shape");
    if (arrow_mat[a].field() != alg->field)
      throw FieldMismatch("arrow map field mismatch");
  }
  if (alg->relations_known) {
    for (const auto& rel : alg->relations) {
      int s = rel[0].path.source;
      int t = rel[0].path.target(q);
      Mat sum(dims[t], dims[s], field());
      for (const auto& term : rel)
        sum = sum + path_action(term.path) * term.coeff;
      if (!sum.is_zero())
        throw ValidationError("module violates relation " +
                              relation_str(q, rel) +
                              (name.empty() ? "" : " (module " + name + ")"));
    }
    return;
  }
  // No symbolic relations: every linear dependency among path evaluations in
  // the algebra must also hold among the path actions on m.
  const auto& pe = path_expansion(alg);
  for (int s = 0; s < q.num_vertices; ++s)
    for (int t = 0; t < q.num_vertices; ++t) {
      const auto& idx = pe.by_pair[static_cast<size_t>(s) * q.num_vertices + t];
      if (idx.empty()) continue;
      Mat k = pe.eval_by_pair.at({s, t}).kernel_basis();
      for (int col = 0; col < k.cols(); ++col) {
        Mat sum(dims[t], dims[s], field());
        for (size_t j = 0; j < idx.size(); ++j) {
          if (k.at(static_cast<int>(j), col).is_zero()) continue;
          sum = sum + path_action(pe.paths[idx[j]]) *
                          k.at(static_cast<int>(j), col);
        }
        if (!sum.is_zero())
          throw ValidationError("module violates a recovered relation" +
                                (name.empty() ? std::string()
                                              : " (module " + name + ")"));
      }
    }
}

bool ModuleRep::same_shape(const ModuleRep& o) const {
  return alg == o.alg && dims == o.dims;
}

bool ModuleRep::operator==(const ModuleRep& o) const {
  return alg == o.alg && dims == o.dims && arrow_mat == o.arrow_mat;
}

ModuleRep zero_module(const AlgebraPtr& a) {
  ModuleRep m;
  m.alg = a;
  m.dims.assign(a->quiver.num_vertices, 0);
  for (size_t ar = 0; ar < a->quiver.arrows.size(); ++ar)
    m.arrow_mat.push_back(Mat(0, 0, a->field));
  m.name = "0";
  return m;
}

ModuleRep make_module(const AlgebraPtr& a, std::vector<int> dims,
                      std::vector<Mat> mats, std::string name) {
  ModuleRep m;
  m.alg = a;
  m.dims = std::move(dims);
  m.arrow_mat = std::move(mats);
  m.name = std::move(name);
  m.validate();
  return m;
}

ModuleRep direct_sum(const std::vector<ModuleRep>& parts) {
  if (parts.empty()) throw Error("direct_sum of empty list");
  const AlgebraPtr& a = parts[0].alg;
  ModuleRep m = zero_module(a);
  std::vector<int> dims(a->quiver.num_vertices, 0);
  for (const auto& p : parts) {
    if (p.alg != a) throw ValidationError("direct sum across algebras");
    for (int v = 0; v < a->quiver.num_vertices; ++v) dims[v] += p.dims[v];
  }
  m.dims = dims;
  for (size_t ar = 0; ar < a->quiver.arrows.size(); ++ar) {
    int i = a->quiver.arrows[ar].src, j = a->quiver.arrows[ar].tgt;
    Mat blk(dims[j], dims[i], a->field);
    int ro = 0, co = 0;
    for (const auto& p : parts) {
      for (int r = 0; r < p.dims[j]; ++r)
        for (int c = 0; c < p.dims[i]; ++c)
          blk.at(ro + r, co + c) = p.arrow_mat[ar].at(r, c);
      ro += p.dims[j];
      co += p.dims[i];
    }
    m.arrow_mat[ar] = blk;
  }
  std::string nm;
  for (const auto& p : parts) {
    if (!nm.empty()) nm += "+";
    nm += p.name.empty() ? "?" : p.name;
  }
  m.name = nm;
  return m;
}

ModuleRep simple_module(const AlgebraPtr& a, int v) {
  ModuleRep m = zero_module(a);
  m.dims[v] = 1;
  for (size_t ar = 0; ar < a->quiver.arrows.size(); ++ar) {
    int i = a->quiver.arrows[ar].src, j = a->quiver.arrows[ar].tgt;
    m.arrow_mat[ar] = Mat(m.dims[j], m.dims[i], a->field);
  }
  m.name = "S(" + std::to_string(v) + ")";
  m.validate();
  return m;
}

namespace {

std::vector<std::vector<int>> proj_basis_by_vertex(const BasedAlgebra& a,
                                                   int v) {
  std::vector<std::vector<int>> by_tgt(a.quiver.num_vertices);
  for (int k = 0; k < a.dim; ++k)
    if (a.basis_src[k] == v) by_tgt[a.basis_tgt[k]].push_back(k);
  return by_tgt;
}

}  // namespace

ModuleRep projective_module(const AlgebraPtr& a, int v) {
  auto by_tgt = proj_basis_by_vertex(*a, v);
  ModuleRep m = zero_module(a);
  for (int w = 0; w < a->quiver.num_vertices; ++w)
    m.dims[w] = static_cast<int>(by_tgt[w].size());
  for (size_t ar = 0; ar < a->quiver.arrows.size(); ++ar) {
    int i = a->quiver.arrows[ar].src, j = a->quiver.arrows[ar].tgt;
    Mat blk(m.dims[j], m.dims[i], a->field);
    for (int c = 0; c < m.dims[i]; ++c) {
      auto prod = a->multiply(a->unit_vec(by_tgt[i][c]), a->arrow_elem[ar]);
      for (int r = 0; r < m.dims[j]; ++r) blk.at(r, c) = prod[by_tgt[j][r]];
    }
    m.arrow_mat[ar] = blk;
  }
  m.name = "P(" + std::to_string(v) + ")";
  m.validate();
  return m;
}

ModuleRep injective_module(const AlgebraPtr& a, int v) {
  // D(A e_v): spaces (e_w A e_v)^*; arrow a: i -> j acts as the transpose of
  // left multiplication e_j A e_v -> e_i A e_v.
  std::vector<std::vector<int>> by_src(a->quiver.num_vertices);
  for (int k = 0; k < a->dim; ++k)
    if (a->basis_tgt[k] == v) by_src[a->basis_src[k]].push_back(k);
  ModuleRep m = zero_module(a);
  for (int w = 0; w < a->quiver.num_vertices; ++w)
    m.dims[w] = static_cast<int>(by_src[w].size());
  for (size_t ar = 0; ar < a->quiver.arrows.size(); ++ar) {
    int i = a->quiver.arrows[ar].src, j = a->quiver.arrows[ar].tgt;
    Mat lm(m.dims[i], m.dims[j], a->field);
    for (int c = 0; c < m.dims[j]; ++c) {
      auto prod = a->multiply(a->arrow_elem[ar], a->unit_vec(by_src[j][c]));
      for (int r = 0; r < m.dims[i]; ++r) lm.at(r, c) = prod[by_src[i][r]];
    }
    m.arrow_mat[ar] = lm.transpose();
  }
  m.name = "I(" + std::to_string(v) + ")";
  m.validate();
  return m;
}

ModuleRep regular_module(const AlgebraPtr& a) {
  std::vector<ModuleRep> ps;
  for (int v = 0; v < a->quiver.num_vertices; ++v)
    ps.push_back(projective_module(a, v));
  ModuleRep m = direct_sum(ps);
  m.name = "A";
  return m;
}

void ModuleMap::validate() const {
  if (source.alg != target.alg)
    throw ValidationError("module map across algebras");
  const Quiver& q = source.alg->quiver;
  if (static_cast<int>(f.size()) != q.num_vertices)
    throw ValidationError("module map vertex count");
  for (int v = 0; v < q.num_vertices; ++v)
    if (f[v].rows() != target.dims[v] || f[v].cols() != source.dims[v])
      throw ValidationError("module map shape at vertex " + std::to_string(v));
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    int i = q.arrows[a].src, j = q.arrows[a].tgt;
    if (f[j] * source.arrow_mat[a] != target.arrow_mat[a] * f[i])
      throw ValidationError("module map does not commute with arrow '" +
                            q.arrows[a].label + "'");
  }
}

bool ModuleMap::is_injective() const {
  for (size_t v = 0; v < f.size(); ++v)
    if (f[v].rank() != source.dims[v]) return false;
  return true;
}

bool ModuleMap::is_surjective() const {
  for (size_t v = 0; v < f.size(); ++v)
    if (f[v].rank() != target.dims[v]) return false;
  return true;
}

bool ModuleMap::is_zero() const {
  for (const auto& m : f)
    if (!m.is_zero()) return false;
  return true;
}

bool ModuleMap::is_isomorphism() const {
  return source.dims == target.dims && is_injective();
}

std::vector<Scalar> ModuleMap::vec() const {
  std::vector<Scalar> v;
  for (const auto& m : f)
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
  return v;
}

ModuleMap zero_map(const ModuleRep& src, const ModuleRep& tgt) {
  ModuleMap g;
  g.source = src;
  g.target = tgt;
  for (size_t v = 0; v < src.dims.size(); ++v)
    g.f.push_back(Mat(tgt.dims[v], src.dims[v], src.field()));
  return g;
}

ModuleMap identity_map(const ModuleRep& m) {
  ModuleMap g;
  g.source = m;
  g.target = m;
  for (size_t v = 0; v < m.dims.size(); ++v)
    g.f.push_back(Mat::identity(m.dims[v], m.field()));
  return g;
}

ModuleMap compose(const ModuleMap& late, const ModuleMap& early) {
  if (!(late.source == early.target))
    throw ValidationError("compose: middle modules differ");
  ModuleMap g;
  g.source = early.source;
  g.target = late.target;
  for (size_t v = 0; v < late.f.size(); ++v)
    g.f.push_back(late.f[v] * early.f[v]);
  return g;
}

ModuleMap map_add(const ModuleMap& a, const ModuleMap& b) {
  ModuleMap g = a;
  for (size_t v = 0; v < g.f.size(); ++v) g.f[v] = g.f[v] + b.f[v];
  return g;
}

ModuleMap map_sub(const ModuleMap& a, const ModuleMap& b) {
  ModuleMap g = a;
  for (size_t v = 0; v < g.f.size(); ++v) g.f[v] = g.f[v] - b.f[v];
  return g;
}

ModuleMap map_scale(const ModuleMap& a, const Scalar& c) {
  ModuleMap g = a;
  for (size_t v = 0; v < g.f.size(); ++v) g.f[v] = g.f[v] * c;
  return g;
}

ModuleMap map_from_vec(const ModuleRep& src, const ModuleRep& tgt,
                       const std::vector<Scalar>& v) {
  ModuleMap g = zero_map(src, tgt);
  size_t k = 0;
  for (size_t w = 0; w < g.f.size(); ++w)
    for (int i = 0; i < g.f[w].rows(); ++i)
      for (int j = 0; j < g.f[w].cols(); ++j) g.f[w].at(i, j) = v.at(k++);
  if (k != v.size()) throw ShapeError("map_from_vec length");
  return g;
}

std::vector<ModuleMap> hom_space(const ModuleRep& m, const ModuleRep& n) {
  if (m.alg != n.alg) throw ValidationError("hom across algebras");
  Field f = m.field();
  const Quiver& q = m.alg->quiver;
  std::vector<int> offset(q.num_vertices + 1, 0);
  for (int v = 0; v < q.num_vertices; ++v)
    offset[v + 1] = offset[v] + n.dims[v] * m.dims[v];
  int unknowns = offset[q.num_vertices];
  int eqs = 0;
  for (const auto& a : q.arrows) eqs += n.dims[a.tgt] * m.dims[a.src];
  Mat sys(eqs, unknowns, f);
  int row = 0;
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    int i = q.arrows[a].src, j = q.arrows[a].tgt;
    // entry (r, c) of f_j * M_a - N_a * f_i
    for (int r = 0; r < n.dims[j]; ++r)
      for (int c = 0; c < m.dims[i]; ++c) {
        for (int k = 0; k < m.dims[j]; ++k)
          sys.at(row, offset[j] + r * m.dims[j] + k) +=
              m.arrow_mat[a].at(k, c);
        for (int k = 0; k < n.dims[i]; ++k)
          sys.at(row, offset[i] + k * m.dims[i] + c) -=
              n.arrow_mat[a].at(r, k);
        ++row;
      }
  }
  Mat kb = sys.kernel_basis();
  std::vector<ModuleMap> basis;
  for (int col = 0; col < kb.cols(); ++col) {
    ModuleMap g = zero_map(m, n);
    for (int v = 0; v < q.num_vertices; ++v)
      for (int r = 0; r < n.dims[v]; ++r)
        for (int c = 0; c < m.dims[v]; ++c)
          g.f[v].at(r, c) = kb.at(offset[v] + r * m.dims[v] + c, col);
    basis.push_back(std::move(g));
  }
  return basis;
}

int hom_dim(const ModuleRep& m, const ModuleRep& n) {
  return static_cast<int>(hom_space(m, n).size());
}

std::vector<Scalar> hom_coords(const std::vector<ModuleMap>& basis,
                               const ModuleMap& g) {
  Field f = g.source.field();
  auto gv = g.vec();
  if (basis.empty()) {
    for (const auto& x : gv)
      if (!x.is_zero()) throw Error("hom_coords: map outside empty span");
    return {};
  }
  std::vector<std::vector<Scalar>> cols;
  for (const auto& b : basis) cols.push_back(b.vec());
  Mat bm = mat_from_cols(f, static_cast<int>(gv.size()), cols);
  auto c = coords_in(bm, gv);
  if (!c) throw Error("hom_coords: map outside span");
  return *c;
}

SubQuot submodule_from_cols(const ModuleRep& m, const std::vector<Mat>& cols) {
  const Quiver& q = m.alg->quiver;
  ModuleRep s = zero_module(m.alg);
  for (int v = 0; v < q.num_vertices; ++v) s.dims[v] = cols[v].cols();
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    int i = q.arrows[a].src, j = q.arrows[a].tgt;
    Mat rhs = m.arrow_mat[a] * cols[i];
    auto x = cols[j].solve(rhs);
    if (!x) throw ValidationError("submodule_from_cols: not arrow-stable");
    s.arrow_mat[a] = *x;
  }
  ModuleMap incl;
  incl.source = s;
  incl.target = m;
  incl.f = cols;
  s.validate();
  incl.validate();
  return {s, incl};
}

SubQuot kernel(const ModuleMap& g) {
  std::vector<Mat> cols;
  for (size_t v = 0; v < g.f.size(); ++v) cols.push_back(g.f[v].kernel_basis());
  auto r = submodule_from_cols(g.source, cols);
  r.mod.name = "ker";
  return r;
}

SubQuot image(const ModuleMap& g) {
  std::vector<Mat> cols;
  for (size_t v = 0; v < g.f.size(); ++v)
    cols.push_back(g.f[v].column_space_basis());
  auto r = submodule_from_cols(g.target, cols);
  r.mod.name = "im";
  return r;
}

SubQuot cokernel(const ModuleMap& g) {
  const ModuleRep& n = g.target;
  Field fl = n.field();
  const Quiver& q = n.alg->quiver;
  std::vector<Mat> projs, sections;
  ModuleRep c = zero_module(n.alg);
  for (int v = 0; v < q.num_vertices; ++v) {
    Mat b = g.f[v].column_space_basis();
    Span sp(n.dims[v], fl);
    for (int j = 0; j < b.cols(); ++j) sp.add(mat_col_vec(b, j));
    std::vector<int> comp;
    for (int k = 0; k < n.dims[v]; ++k) {
      std::vector<Scalar> e(n.dims[v], Scalar::zero(fl));
      e[k] = Scalar::one(fl);
      if (sp.add(e)) comp.push_back(k);
    }
    Mat cmat(n.dims[v], static_cast<int>(comp.size()), fl);
    for (int j = 0; j < static_cast<int>(comp.size()); ++j)
      cmat.at(comp[j], j) = Scalar::one(fl);
    Mat pr(static_cast<int>(comp.size()), n.dims[v], fl);
    if (n.dims[v] > 0 && !comp.empty()) {
      Mat full = b.hcat(cmat);
      auto inv = full.inverse();
      if (!inv) throw Error("cokernel: basis completion failed");
      for (int i = 0; i < static_cast<int>(comp.size()); ++i)
        for (int j = 0; j < n.dims[v]; ++j)
          pr.at(i, j) = inv->at(b.cols() + i, j);
    }
    c.dims[v] = static_cast<int>(comp.size());
    projs.push_back(pr);
    sections.push_back(cmat);
  }
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    int i = q.arrows[a].src, j = q.arrows[a].tgt;
    c.arrow_mat[a] = projs[j] * n.arrow_mat[a] * sections[i];
  }
  ModuleMap pr;
  pr.source = n;
  pr.target = c;
  pr.f = projs;
  c.name = "coker";
  pr.target = c;
  c.validate();
  pr.validate();
  return {c, pr};
}

SubQuot radical_submodule(const ModuleRep& m) {
  const Quiver& q = m.alg->quiver;
  Field f = m.field();
  std::vector<Mat> cols;
  for (int v = 0; v < q.num_vertices; ++v) {
    Mat acc(m.dims[v], 0, f);
    for (size_t a = 0; a < q.arrows.size(); ++a)
      if (q.arrows[a].tgt == v) acc = acc.hcat(m.arrow_mat[a]);
    cols.push_back(acc.column_space_basis());
  }
  auto r = submodule_from_cols(m, cols);
  r.mod.name = "rad(" + m.name + ")";
  return r;
}

SubQuot socle_submodule(const ModuleRep& m) {
  const Quiver& q = m.alg->quiver;
  Field f = m.field();
  std::vector<Mat> cols;
  for (int v = 0; v < q.num_vertices; ++v) {
    Mat stack(0, m.dims[v], f);
    for (size_t a = 0; a < q.arrows.size(); ++a)
      if (q.arrows[a].src == v) stack = stack.vcat(m.arrow_mat[a]);
    cols.push_back(stack.rows() == 0 ? Mat::identity(m.dims[v], f)
                                     : stack.kernel_basis());
  }
  auto r = submodule_from_cols(m, cols);
  r.mod.name = "soc(" + m.name + ")";
  return r;
}

SubQuot top_quotient(const ModuleRep& m) {
  auto rad = radical_submodule(m);
  auto c = cokernel(rad.map);
  c.mod.name = "top(" + m.name + ")";
  c.map.target = c.mod;
  return c;
}

ModuleMap projective_cover(const ModuleRep& m) {
  auto top = top_quotient(m);
  const Quiver& q = m.alg->quiver;
  Field fl = m.field();
  std::vector<ModuleRep> ps;
  std::vector<Mat> gens;  // generator of each summand inside m (column at v)
  std::vector<int> gen_vertex;
  for (int v = 0; v < q.num_vertices; ++v)
    for (int k = 0; k < top.mod.dims[v]; ++k) {
      Mat e(top.mod.dims[v], 1, fl);
      e.at(k, 0) = Scalar::one(fl);
      auto lift = top.map.f[v].solve(e);
      if (!lift) throw Error("projective_cover: top not surjective");
      ps.push_back(projective_module(m.alg, v));
      gens.push_back(*lift);
      gen_vertex.push_back(v);
    }
  if (ps.empty()) {
    if (!m.is_zero())
      throw Error("projective_cover: nonzero module with zero top");
    return zero_map(zero_module(m.alg), m);
  }
  ModuleRep p = direct_sum(ps);
  ModuleMap cover = zero_map(p, m);
  std::vector<int> off(q.num_vertices, 0);
  for (size_t s = 0; s < ps.size(); ++s) {
    int v = gen_vertex[s];
    auto by_tgt = proj_basis_by_vertex(*m.alg, v);
    for (int w = 0; w < q.num_vertices; ++w) {
      for (size_t bi = 0; bi < by_tgt[w].size(); ++bi) {
        // image of basis element b: the generator acted on by b
        Mat act = elem_action(m, v, w, m.alg->unit_vec(by_tgt[w][bi]));
        Mat img = act * gens[s];
        for (int r = 0; r < m.dims[w]; ++r)
          cover.f[w].at(r, off[w] + static_cast<int>(bi)) = img.at(r, 0);
      }
    }
    for (int w = 0; w < q.num_vertices; ++w)
      off[w] += ps[s].dims[w];
  }
  cover.validate();
  if (!cover.is_surjective()) throw Error("projective_cover: not surjective");
  return cover;
}

ModuleRep dualize(const ModuleRep& m, const AlgebraPtr& op) {
  if (op->quiver != m.alg->quiver.reversed())
    throw ValidationError("dualize: target algebra is not the opposite");
  ModuleRep d;
  d.alg = op;
  d.dims = m.dims;
  for (size_t a = 0; a < m.arrow_mat.size(); ++a)
    d.arrow_mat.push_back(m.arrow_mat[a].transpose());
  d.name = "D(" + m.name + ")";
  d.validate();
  return d;
}

ModuleMap dualize_map(const ModuleMap& g, const AlgebraPtr& op) {
  ModuleMap d;
  d.source = dualize(g.target, op);
  d.target = dualize(g.source, op);
  for (size_t v = 0; v < g.f.size(); ++v) d.f.push_back(g.f[v].transpose());
  d.validate();
  return d;
}

ModuleMap injective_envelope(const ModuleRep& m) {
  auto op = opposite_algebra(m.alg);
  auto dm = dualize(m, op);
  auto cover = projective_cover(dm);
  // D is exact and contravariant: dual of P ->> D(m) is m >-> D(P), using
  // the canonical identification D(D(m)) = m (transpose twice).
  auto opop = opposite_algebra(op);
  ModuleMap env;
  env.source = m;
  env.target = dualize(cover.source, opop);
  env.target.alg = m.alg;  // op(op(A)) has identical structure constants
  env.target.validate();
  for (size_t v = 0; v < cover.f.size(); ++v)
    env.f.push_back(cover.f[v].transpose());
  env.validate();
  if (!env.is_injective()) throw Error("injective_envelope: not injective");
  return env;
}

void ShortExactSeq::validate() const {
  incl.validate();
  proj.validate();
  if (!(incl.target == proj.source))
    throw ValidationError("ses: middle modules differ");
  if (!incl.is_injective()) throw ValidationError("ses: incl not injective");
  if (!proj.is_surjective()) throw ValidationError("ses: proj not surjective");
  for (size_t v = 0; v < incl.f.size(); ++v) {
    if (!(proj.f[v] * incl.f[v]).is_zero())
      throw ValidationError("ses: proj o incl nonzero");
    if (incl.f[v].rank() + proj.target.dims[v] != proj.source.dims[v])
      throw ValidationError("ses: not exact in the middle");
  }
}

ShortExactSeq ses_from_incl(const ModuleMap& incl) {
  auto c = cokernel(incl);
  ShortExactSeq s{incl, c.map};
  s.validate();
  return s;
}

ShortExactSeq ses_from_proj(const ModuleMap& proj) {
  auto k = kernel(proj);
  ShortExactSeq s{k.map, proj};
  s.validate();
  return s;
}

ShortExactSeq split_ses(const ModuleRep& l, const ModuleRep& n) {
  ModuleRep mid = direct_sum({l, n});
  ModuleMap incl = zero_map(l, mid), proj = zero_map(mid, n);
  for (size_t v = 0; v < l.dims.size(); ++v) {
    for (int i = 0; i < l.dims[v]; ++i)
      incl.f[v].at(i, i) = Scalar::one(l.field());
    for (int i = 0; i < n.dims[v]; ++i)
      proj.f[v].at(i, l.dims[v] + i) = Scalar::one(l.field());
  }
  ShortExactSeq s{incl, proj};
  s.validate();
  return s;
}

namespace {

Scalar random_scalar(Field f, std::mt19937_64& rng) {
  if (f.is_rational())
    return Scalar(f, static_cast<long long>(rng() % 7) - 3);
  return Scalar(f, static_cast<long long>(rng() % f.p));
}

ModuleMap random_combo(const std::vector<ModuleMap>& basis,
                       std::mt19937_64& rng) {
  ModuleMap g = zero_map(basis[0].source, basis[0].target);
  for (const auto& b : basis) g = map_add(g, map_scale(b, random_scalar(b.source.field(), rng)));
  return g;
}

}  // namespace

namespace {

// Vertex-wise dimension vectors of the radical and socle filtrations; a
// cheap certified isomorphism invariant.
std::vector<std::vector<int>> loewy_data(const ModuleRep& m) {
  std::vector<std::vector<int>> out;
  ModuleRep cur = m;
  for (int guard = 0; guard <= m.total_dim() && cur.total_dim() > 0; ++guard) {
    auto rad = radical_submodule(cur);
    out.push_back(top_quotient(cur).mod.dims);
    cur = rad.mod;
  }
  out.push_back(socle_submodule(m).mod.dims);
  return out;
}

}  // namespace

bool is_isomorphic(const ModuleRep& m, const ModuleRep& n,
                   const IsoOptions& opts) {
  if (m.alg != n.alg) throw ValidationError("is_isomorphic across algebras");
  if (m.dims != n.dims) return false;
  if (m.total_dim() == 0) return true;
  if (loewy_data(m) != loewy_data(n)) return false;
  auto h_mn = hom_space(m, n);
  if (hom_dim(n, m) != static_cast<int>(h_mn.size())) return false;
  if (h_mn.empty()) return false;
  for (const auto& g : h_mn)
    if (g.is_isomorphism()) return true;
  std::mt19937_64 rng(opts.seed + 0x9e3779b97f4a7c15ull);
  for (int t = 0; t < opts.attempts; ++t) {
    auto g = random_combo(h_mn, rng);
    if (g.is_isomorphism()) return true;
  }
  // certified structural mismatches
  if (hom_dim(m, m) != hom_dim(n, n)) return false;
  if (opts.probes)
    for (const auto& z : *opts.probes) {
      if (hom_dim(z, m) != hom_dim(z, n)) return false;
      if (hom_dim(m, z) != hom_dim(n, z)) return false;
    }
  throw Undetermined("is_isomorphic: no unit found and no invariant differs (" +
                     m.name + " vs " + n.name + ")");
}

namespace {

// Total matrix of an endomorphism (block diagonal over vertices).
Mat endo_total(const ModuleMap& g) {
  int n = g.source.total_dim();
  Mat t(n, n, g.source.field());
  int off = 0;
  for (size_t v = 0; v < g.f.size(); ++v) {
    for (int i = 0; i < g.f[v].rows(); ++i)
      for (int j = 0; j < g.f[v].cols(); ++j)
        t.at(off + i, off + j) = g.f[v].at(i, j);
    off += g.f[v].rows();
  }
  return t;
}

// Applies a polynomial to an endomorphism, vertex-wise.
ModuleMap poly_of_endo(const Poly& p, const ModuleMap& g) {
  ModuleMap r = zero_map(g.source, g.source);
  for (size_t v = 0; v < g.f.size(); ++v) r.f[v] = p.eval_mat(g.f[v]);
  return r;
}

struct EndAlgebraTable {
  std::vector<ModuleMap> basis;
  // structure constants: basis[i] o basis[j] in coordinates
  std::vector<std::vector<Scalar>> comp;
  int dim() const { return static_cast<int>(basis.size()); }
};

EndAlgebraTable end_table(const ModuleRep& m) {
  EndAlgebraTable t;
  t.basis = hom_space(m, m);
  int d = t.dim();
  t.comp.resize(static_cast<size_t>(d) * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      t.comp[static_cast<size_t>(i) * d + j] =
          hom_coords(t.basis, compose(t.basis[i], t.basis[j]));
  return t;
}

// Radical of End(m) through the trace form on the composition table
// (char 0 or p > dim End).
int end_radical_codim(const ModuleRep& m, const EndAlgebraTable& t) {
  Field f = m.field();
  int d = t.dim();
  if (!f.is_rational() && f.p <= static_cast<std::uint64_t>(d))
    throw Error("end_radical: needs char 0 or p > dim End");
  std::vector<Scalar> tr(d, Scalar::zero(f));
  for (int k = 0; k < d; ++k)
    for (int l = 0; l < d; ++l)
      tr[k] += t.comp[static_cast<size_t>(k) * d + l][l];
  Mat gram(d, d, f);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Scalar g = Scalar::zero(f);
      const auto& c = t.comp[static_cast<size_t>(i) * d + j];
      for (int k = 0; k < d; ++k)
        if (!c[k].is_zero()) g += c[k] * tr[k];
      gram.at(i, j) = g;
    }
  return gram.rank();  // codim of radical = rank of the form... no: dim E - dim rad
}

// Splits m along a coprime factorization of the characteristic polynomial of
// an endomorphism; returns the two submodules if both are nonzero.
std::optional<std::pair<ModuleRep, ModuleRep>> try_split_with(
    const ModuleMap& g) {
  Mat tot = endo_total(g);
  if (tot.rows() == 0) return std::nullopt;
  Poly chi = char_poly(tot);
  auto sp = coprime_split(chi);
  if (!sp) return std::nullopt;
  auto k1 = kernel(poly_of_endo(sp->first, g));
  auto k2 = kernel(poly_of_endo(sp->second, g));
  if (k1.mod.total_dim() == 0 || k2.mod.total_dim() == 0) return std::nullopt;
  if (k1.mod.total_dim() + k2.mod.total_dim() != g.source.total_dim())
    return std::nullopt;  // factorization not coprime enough to split
  return std::make_pair(k1.mod, k2.mod);
}

struct IndecPiece {
  ModuleRep mod;
  std::string certificate;
};

void decompose_rec(const ModuleRep& m, const DecomposeOptions& opts,
                   std::mt19937_64& rng, std::vector<IndecPiece>& out) {
  if (m.total_dim() == 0) return;
  auto t = end_table(m);
  if (t.dim() == 1) {
    out.push_back({m, "End one-dimensional"});
    return;
  }
  // quick structural certificate when available
  bool trace_ok =
      m.field().is_rational() || m.field().p > static_cast<std::uint64_t>(t.dim());
  if (trace_ok) {
    int rank = end_radical_codim(m, t);
    if (rank == 1) {  // dim(E / rad E) = rank of trace form
      out.push_back({m, "End local (radical codimension 1)"});
      return;
    }
  }
  // search for a splitting
  for (int round = 0; round < opts.attempts + t.dim(); ++round) {
    ModuleMap cand = round < t.dim() ? t.basis[round] : random_combo(t.basis, rng);
    auto sp = try_split_with(cand);
    if (sp) {
      decompose_rec(sp->first, opts, rng, out);
      decompose_rec(sp->second, opts, rng, out);
      return;
    }
  }
  // exhaustive idempotent search over small finite fields
  if (!m.field().is_rational()) {
    double bits = t.dim() * std::log2(static_cast<double>(m.field().p));
    if (bits <= opts.exhaustive_budget_log2) {
      std::vector<std::uint64_t> c(t.dim(), 0);
      Field f = m.field();
      while (true) {
        // next tuple
        int k = 0;
        while (k < t.dim() && ++c[k] == f.p) c[k++] = 0;
        if (k == t.dim()) break;
        // e = sum c_i basis_i ; test e^2 = e, e != 0, e != 1
        ModuleMap e = zero_map(m, m);
        for (int i = 0; i < t.dim(); ++i)
          e = map_add(e, map_scale(t.basis[i],
                                   Scalar(f, static_cast<long long>(c[i]))));
        if (e.is_zero()) continue;
        ModuleMap e2 = compose(e, e);
        if (!(map_sub(e2, e).is_zero())) continue;
        if (map_sub(e, identity_map(m)).is_zero()) continue;
        auto im = image(e);
        auto ker = kernel(e);
        if (im.mod.total_dim() == 0 || ker.mod.total_dim() == 0) continue;
        decompose_rec(im.mod, opts, rng, out);
        decompose_rec(ker.mod, opts, rng, out);
        return;
      }
      out.push_back({m, "no nontrivial idempotent (exhaustive search)"});
      return;
    }
  }
  throw Undetermined(
      "decompose: could not split nor certify indecomposability of '" +
      m.name + "' within the search budget");
}

}  // namespace

std::vector<Summand> decompose(const ModuleRep& m,
                               const DecomposeOptions& opts) {
  std::mt19937_64 rng(opts.seed + 0x2545f4914f6cdd1dull);
  std::vector<IndecPiece> pieces;
  decompose_rec(m, opts, rng, pieces);
  std::vector<Summand> out;
  IsoOptions iso;
  iso.seed = opts.seed;
  for (auto& p : pieces) {
    bool merged = false;
    for (auto& s : out) {
      if (is_isomorphic(s.mod, p.mod, iso)) {
        ++s.multiplicity;
        merged = true;
        break;
      }
    }
    if (!merged) out.push_back({p.mod, 1, p.certificate});
  }
  // deterministic order: by dim vector, then by name
  std::sort(out.begin(), out.end(), [](const Summand& a, const Summand& b) {
    if (a.mod.total_dim() != b.mod.total_dim())
      return a.mod.total_dim() < b.mod.total_dim();
    if (a.mod.dims != b.mod.dims) return a.mod.dims < b.mod.dims;
    return a.mod.name < b.mod.name;
  });
  return out;
}

ModuleRep module_mod_p(const ModuleRep& m, const AlgebraPtr& reduced_alg) {
  Field fp = reduced_alg->field;
  if (fp.is_rational()) throw Error("module_mod_p: target field not prime");
  ModuleRep out;
  out.alg = reduced_alg;
  out.dims = m.dims;
  out.name = m.name;
  for (const auto& mat : m.arrow_mat) {
    Mat pm(mat.rows(), mat.cols(), fp);
    for (int r = 0; r < mat.rows(); ++r)
      for (int c = 0; c < mat.cols(); ++c) {
        const Scalar& s = mat.at(r, c);
        if (s.field().is_rational()) {
          const BigRat& q = s.rational();
          BigInt den = boost::multiprecision::denominator(q);
          if (den % BigInt(fp.p) == 0)
            throw Error("module_mod_p: denominator divisible by p in " +
                        m.name);
          pm.at(r, c) = Scalar(fp, boost::multiprecision::numerator(q), den);
        } else if (s.field().p == fp.p) {
          pm.at(r, c) = s;
        } else {
          throw FieldMismatch("module_mod_p: cannot reduce across prime fields");
        }
      }
    out.arrow_mat.push_back(pm);
  }
  out.validate();
  return out;
}

bool in_add_of(const ModuleRep& x, const std::vector<ModuleRep>& pool,
               const DecomposeOptions& opts) {
  if (x.total_dim() == 0) return true;
  IsoOptions iso;
  iso.seed = opts.seed;
  for (const auto& s : decompose(x, opts)) {
    bool found = false;
    for (const auto& p : pool)
      if (p.total_dim() == s.mod.total_dim() && is_isomorphic(s.mod, p, iso)) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

}  // namespace qmod
