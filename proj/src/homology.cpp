#include "qmod/homology.hpp"

#include <algorithm>
#include <sstream>

namespace qmod {

int Resolution::length() const {
  int l = -1;
  for (size_t k = 0; k < terms.size(); ++k)
    if (terms[k].total_dim() > 0) l = static_cast<int>(k);
  return l;
}

void Resolution::validate() const {
  augment.validate();
  for (const auto& d : maps) d.validate();
  if (projective) {
    if (!augment.is_surjective())
      throw ValidationError("resolution: augment not surjective");
    // exactness at P_k: ker(d_k) = im(d_{k+1}) by rank bookkeeping
    const ModuleMap* outgoing = &augment;
    for (size_t k = 0; k < maps.size(); ++k) {
      if (!compose(*outgoing, maps[k]).is_zero())
        throw ValidationError("resolution: composite not zero");
      for (size_t v = 0; v < maps[k].f.size(); ++v) {
        int ker = maps[k].source.dims[v] == 0
                      ? 0
                      : outgoing->f[v].kernel_basis().cols();
        (void)ker;
      }
      // vertex-wise: rank(d_{k+1}) = dim ker(d_k)
      for (size_t v = 0; v < maps[k].f.size(); ++v) {
        int dk_ker = outgoing->f[v].kernel_basis().cols();
        if (maps[k].f[v].rank() != dk_ker)
          throw ValidationError("resolution: not exact at an interior node");
      }
      outgoing = &maps[k];
    }
  } else {
    if (!augment.is_injective())
      throw ValidationError("coresolution: augment not injective");
    const ModuleMap* incoming = &augment;
    for (size_t k = 0; k < maps.size(); ++k) {
      if (!compose(maps[k], *incoming).is_zero())
        throw ValidationError("coresolution: composite not zero");
      for (size_t v = 0; v < maps[k].f.size(); ++v) {
        int im = incoming->f[v].rank();
        int ker = maps[k].f[v].kernel_basis().cols();
        if (im != ker)
          throw ValidationError("coresolution: not exact at an interior node");
      }
      incoming = &maps[k];
    }
  }
}

Resolution min_proj_resolution(const ModuleRep& m, int bound) {
  Resolution r;
  r.projective = true;
  ModuleRep cur = m;
  ModuleMap into_prev;  // kernel inclusion of the previous cover
  for (int k = 0; k <= bound; ++k) {
    ModuleMap cover = projective_cover(cur);
    r.terms.push_back(cover.source);
    if (k == 0) {
      r.augment = cover;
    } else {
      r.maps.push_back(compose(into_prev, cover));
    }
    auto syz = kernel(cover);
    if (syz.mod.total_dim() == 0) {
      r.terminated = true;
      break;
    }
    cur = syz.mod;
    into_prev = syz.map;
  }
  return r;
}

Resolution min_inj_resolution(const ModuleRep& m, int bound) {
  Resolution r;
  r.projective = false;
  ModuleRep cur = m;
  ModuleMap from_prev;  // cokernel projection of the previous envelope
  for (int k = 0; k <= bound; ++k) {
    ModuleMap env = injective_envelope(cur);
    r.terms.push_back(env.target);
    if (k == 0) {
      r.augment = env;
    } else {
      r.maps.push_back(compose(env, from_prev));
    }
    auto cosyz = cokernel(env);
    if (cosyz.mod.total_dim() == 0) {
      r.terminated = true;
      break;
    }
    cur = cosyz.mod;
    from_prev = cosyz.map;
  }
  return r;
}

namespace {

// Matrix of precomposition Hom(b, n) -> Hom(a, n) with d: a -> b, in the
// given hom bases.
Mat precompose_matrix(const std::vector<ModuleMap>& hom_b_n,
                      const std::vector<ModuleMap>& hom_a_n,
                      const ModuleMap& d) {
  Field f = d.source.field();
  Mat m(static_cast<int>(hom_a_n.size()), static_cast<int>(hom_b_n.size()), f);
  for (size_t j = 0; j < hom_b_n.size(); ++j) {
    auto coords = hom_coords(hom_a_n, compose(hom_b_n[j], d));
    for (size_t i = 0; i < coords.size(); ++i)
      m.at(static_cast<int>(i), static_cast<int>(j)) = coords[i];
  }
  return m;
}

Mat postcompose_matrix(const std::vector<ModuleMap>& hom_m_a,
                       const std::vector<ModuleMap>& hom_m_b,
                       const ModuleMap& d) {  // d: a -> b
  Field f = d.source.field();
  Mat m(static_cast<int>(hom_m_b.size()), static_cast<int>(hom_m_a.size()), f);
  for (size_t j = 0; j < hom_m_a.size(); ++j) {
    auto coords = hom_coords(hom_m_b, compose(d, hom_m_a[j]));
    for (size_t i = 0; i < coords.size(); ++i)
      m.at(static_cast<int>(i), static_cast<int>(j)) = coords[i];
  }
  return m;
}

}  // namespace

int ext_dim(const ModuleRep& m, const ModuleRep& n, int i, ExtRoute route) {
  if (i < 0) throw Error("ext_dim: negative degree");
  if (i == 0) return hom_dim(m, n);
  if (route == ExtRoute::ProjFirst) {
    Resolution r = min_proj_resolution(m, i + 1);
    auto term = [&](int k) {
      return k < static_cast<int>(r.terms.size()) ? r.terms[k]
                                                  : zero_module(m.alg);
    };
    auto hom_i = hom_space(term(i), n);
    auto hom_prev = hom_space(term(i - 1), n);
    auto hom_next = hom_space(term(i + 1), n);
    // D_i : Hom(P_{i-1}, n) -> Hom(P_i, n), D_{i+1}: Hom(P_i, n) -> Hom(P_{i+1}, n)
    Mat di = (i - 1 < static_cast<int>(r.maps.size()))
                 ? precompose_matrix(hom_prev, hom_i, r.maps[i - 1])
                 : Mat(static_cast<int>(hom_i.size()),
                       static_cast<int>(hom_prev.size()), m.field());
    Mat dnext = (i < static_cast<int>(r.maps.size()))
                    ? precompose_matrix(hom_i, hom_next, r.maps[i])
                    : Mat(static_cast<int>(hom_next.size()),
                          static_cast<int>(hom_i.size()), m.field());
    int ker = dnext.kernel_basis().cols();
    int im = di.rank();
    return ker - im;
  }
  Resolution r = min_inj_resolution(n, i + 1);
  auto term = [&](int k) {
    return k < static_cast<int>(r.terms.size()) ? r.terms[k]
                                                : zero_module(n.alg);
  };
  auto hom_i = hom_space(m, term(i));
  auto hom_prev = hom_space(m, term(i - 1));
  auto hom_next = hom_space(m, term(i + 1));
  Mat di = (i - 1 < static_cast<int>(r.maps.size()))
               ? postcompose_matrix(hom_prev, hom_i, r.maps[i - 1])
               : Mat(static_cast<int>(hom_i.size()),
                     static_cast<int>(hom_prev.size()), m.field());
  Mat dnext = (i < static_cast<int>(r.maps.size()))
                  ? postcompose_matrix(hom_i, hom_next, r.maps[i])
                  : Mat(static_cast<int>(hom_next.size()),
                        static_cast<int>(hom_i.size()), m.field());
  return dnext.kernel_basis().cols() - di.rank();
}

std::vector<ExtTableRow> ext_table(const std::vector<ModuleRep>& xs,
                                   const std::vector<ModuleRep>& ys,
                                   int bound) {
  std::vector<ExtTableRow> rows;
  for (const auto& x : xs)
    for (const auto& y : ys) {
      ExtTableRow r;
      r.from = x.name;
      r.to = y.name;
      for (int i = 0; i <= bound; ++i) r.dims.push_back(ext_dim(x, y, i));
      rows.push_back(std::move(r));
    }
  return rows;
}

ModuleRep hom_into_algebra(const ModuleRep& x, const AlgebraPtr& op) {
  const AlgebraPtr& a = x.alg;
  const Quiver& q = a->quiver;
  if (op->quiver != q.reversed())
    throw ValidationError("hom_into_algebra: not the opposite algebra");
  Field f = a->field;
  std::vector<std::vector<ModuleMap>> homs(q.num_vertices);
  std::vector<ModuleRep> projs;
  for (int v = 0; v < q.num_vertices; ++v) {
    projs.push_back(projective_module(a, v));
    homs[v] = hom_space(x, projs[v]);
  }
  ModuleRep d;
  d.alg = op;
  d.dims.assign(q.num_vertices, 0);
  for (int v = 0; v < q.num_vertices; ++v)
    d.dims[v] = static_cast<int>(homs[v].size());
  // op arrow a: j -> i (for a: i -> j in q): postcompose with left
  // multiplication L_a: e_j A -> e_i A.
  for (size_t ar = 0; ar < q.arrows.size(); ++ar) {
    int i = q.arrows[ar].src, j = q.arrows[ar].tgt;
    // L_a as a module map P(j) -> P(i): basis of e_j A at vertex w maps to
    // a * b in e_i A.
    std::vector<std::vector<int>> bj(q.num_vertices), bi(q.num_vertices);
    for (int k = 0; k < a->dim; ++k) {
      if (a->basis_src[k] == j) bj[a->basis_tgt[k]].push_back(k);
      if (a->basis_src[k] == i) bi[a->basis_tgt[k]].push_back(k);
    }
    ModuleMap la = zero_map(projs[j], projs[i]);
    for (int w = 0; w < q.num_vertices; ++w) {
      for (size_t c = 0; c < bj[w].size(); ++c) {
        auto prod = a->multiply(a->arrow_elem[ar], a->unit_vec(bj[w][c]));
        for (size_t r = 0; r < bi[w].size(); ++r)
          la.f[w].at(static_cast<int>(r), static_cast<int>(c)) =
              prod[bi[w][r]];
      }
    }
    la.validate();
    d.arrow_mat.push_back(postcompose_matrix(homs[j], homs[i], la));
  }
  d.name = "Hom(" + x.name + ",A)";
  d.validate();
  return d;
}

namespace {

// Induced map Hom(y, A) -> Hom(x, A) over op from f: x -> y.
ModuleMap hom_into_algebra_map(const ModuleMap& fmap, const ModuleRep& dx,
                               const ModuleRep& dy, const AlgebraPtr& op) {
  const AlgebraPtr& a = fmap.source.alg;
  const Quiver& q = a->quiver;
  ModuleMap g;
  g.source = dy;
  g.target = dx;
  for (int v = 0; v < q.num_vertices; ++v) {
    auto proj = projective_module(a, v);
    auto hom_y = hom_space(fmap.target, proj);
    auto hom_x = hom_space(fmap.source, proj);
    g.f.push_back(precompose_matrix(hom_y, hom_x, fmap));
  }
  g.validate();
  return g;
}

}  // namespace

ModuleRep transpose(const ModuleRep& m, const AlgebraPtr& op) {
  ModuleMap cover = projective_cover(m);
  auto syz = kernel(cover);
  ModuleMap cover1 = projective_cover(syz.mod);
  ModuleMap d = compose(syz.map, cover1);  // P_1 -> P_0
  ModuleRep d0 = hom_into_algebra(d.target, op);
  ModuleRep d1 = hom_into_algebra(d.source, op);
  ModuleMap dual_d = hom_into_algebra_map(d, d1, d0, op);
  // dual_d: Hom(P_0, A) -> Hom(P_1, A); wait: contravariance sends d: P1->P0
  // to Hom(P0,A) -> Hom(P1,A), i.e. source d0, target d1.
  auto c = cokernel(dual_d);
  c.mod.name = "Tr(" + m.name + ")";
  return c.mod;
}

ModuleRep tau(const ModuleRep& m, const AlgebraCtx& ctx) {
  ModuleRep tr = transpose(m, ctx.op);
  // D: mod(op) -> mod(op(op)); identify op(op) with the original algebra.
  auto opop = opposite_algebra(ctx.op);
  ModuleRep d = dualize(tr, opop);
  d.alg = ctx.alg;
  d.validate();
  d.name = "tau(" + m.name + ")";
  return d;
}

ModuleRep tau_minus(const ModuleRep& m, const AlgebraCtx& ctx) {
  ModuleRep d = dualize(m, ctx.op);
  ModuleRep tr = transpose(d, opposite_algebra(ctx.op));
  tr.alg = ctx.alg;
  tr.validate();
  tr.name = "tau-(" + m.name + ")";
  return tr;
}

namespace {

// Canonical maps into/out of a two-part direct sum.
struct SumLayout {
  ModuleRep sum;
  ModuleMap in1, in2;    // components -> sum
  ModuleMap pr1, pr2;    // sum -> components
};

SumLayout sum2(const ModuleRep& a, const ModuleRep& b) {
  SumLayout s;
  s.sum = direct_sum({a, b});
  Field f = a.field();
  s.in1 = zero_map(a, s.sum);
  s.in2 = zero_map(b, s.sum);
  s.pr1 = zero_map(s.sum, a);
  s.pr2 = zero_map(s.sum, b);
  for (size_t v = 0; v < a.dims.size(); ++v) {
    for (int i = 0; i < a.dims[v]; ++i) {
      s.in1.f[v].at(i, i) = Scalar::one(f);
      s.pr1.f[v].at(i, i) = Scalar::one(f);
    }
    for (int i = 0; i < b.dims[v]; ++i) {
      s.in2.f[v].at(a.dims[v] + i, i) = Scalar::one(f);
      s.pr2.f[v].at(i, a.dims[v] + i) = Scalar::one(f);
    }
  }
  return s;
}

// Factor h through a surjection q (h = hbar o q).
ModuleMap factor_through_surjection(const ModuleMap& h, const ModuleMap& qsur) {
  ModuleMap hbar;
  hbar.source = qsur.target;
  hbar.target = h.target;
  for (size_t v = 0; v < h.f.size(); ++v) {
    // solve X * q = h  <=>  q^T X^T = h^T
    auto xt = qsur.f[v].transpose().solve(h.f[v].transpose());
    if (!xt) throw Error("factor_through_surjection: no factorization");
    hbar.f.push_back(xt->transpose());
  }
  hbar.validate();
  return hbar;
}

}  // namespace

PushoutResult pushout(const ShortExactSeq& ses, const ModuleMap& fmap) {
  if (!(fmap.source == ses.sub()))
    throw ValidationError("pushout: map source is not the subobject");
  // E = coker(L -> M + X, (incl, -f)); then X >-> E ->> N.
  auto lay = sum2(ses.mid(), fmap.target);
  ModuleMap g = map_sub(compose(lay.in1, ses.incl), compose(lay.in2, fmap));
  auto ck = cokernel(g);
  ModuleMap x_to_e = compose(ck.map, lay.in2);
  ModuleMap m_to_e = compose(ck.map, lay.in1);
  // E ->> N induced by (proj, 0)
  ModuleMap proj0 = compose(ses.proj, lay.pr1);
  ModuleMap e_to_n = factor_through_surjection(proj0, ck.map);
  ShortExactSeq out{x_to_e, e_to_n};
  out.validate();
  return {out, m_to_e};
}

PullbackResult pullback(const ShortExactSeq& ses, const ModuleMap& g) {
  if (!(g.target == ses.quot()))
    throw ValidationError("pullback: map target is not the quotient");
  // E = ker(M + Z -> N, (proj, -g)); then L >-> E ->> Z.
  auto lay = sum2(ses.mid(), g.source);
  ModuleMap h = map_sub(compose(ses.proj, lay.pr1), compose(g, lay.pr2));
  auto ker = kernel(h);
  ModuleMap e_to_m = compose(lay.pr1, ker.map);
  ModuleMap e_to_z = compose(lay.pr2, ker.map);
  // L >-> E : the inclusion (incl, 0) factors through ker
  ModuleMap l_in = compose(lay.in1, ses.incl);
  ModuleMap l_to_e;
  l_to_e.source = ses.sub();
  l_to_e.target = ker.mod;
  for (size_t v = 0; v < l_in.f.size(); ++v) {
    auto x = ker.map.f[v].solve(l_in.f[v]);
    if (!x) throw Error("pullback: subobject does not land in the kernel");
    l_to_e.f.push_back(*x);
  }
  l_to_e.validate();
  ShortExactSeq out{l_to_e, e_to_z};
  out.validate();
  return {out, e_to_m};
}

std::vector<ShortExactSeq> extensions_from_cocycles(const ModuleRep& n,
                                                    const ModuleRep& l) {
  std::vector<ShortExactSeq> out;
  if (n.total_dim() == 0 || l.total_dim() == 0) return out;
  ModuleMap cover = projective_cover(n);
  auto syz = kernel(cover);
  ShortExactSeq pres{syz.map, cover};
  pres.validate();
  for (const auto& psi : hom_space(syz.mod, l)) {
    auto po = pushout(pres, psi);
    out.push_back(po.seq);
  }
  return out;
}

bool is_left_exact_vs(const ShortExactSeq& s, const ModuleRep& x) {
  // Hom(M, X) -> Hom(L, X) surjective
  auto hm = hom_space(s.mid(), x);
  auto hl = hom_space(s.sub(), x);
  if (hl.empty()) return true;
  Mat m = precompose_matrix(hm, hl, s.incl);
  return m.rank() == static_cast<int>(hl.size());
}

bool is_right_exact_vs(const ShortExactSeq& s, const ModuleRep& x) {
  // Hom(X, M) -> Hom(X, N) surjective
  auto hm = hom_space(x, s.mid());
  auto hn = hom_space(x, s.quot());
  if (hn.empty()) return true;
  Mat m = postcompose_matrix(hm, hn, s.proj);
  return m.rank() == static_cast<int>(hn.size());
}

bool is_right_approx(const ModuleMap& f, const std::vector<ModuleRep>& gens) {
  for (const auto& g : gens) {
    auto hom_src = hom_space(g, f.source);
    auto hom_tgt = hom_space(g, f.target);
    if (hom_tgt.empty()) continue;
    Mat m = postcompose_matrix(hom_src, hom_tgt, f);
    if (m.rank() != static_cast<int>(hom_tgt.size())) return false;
  }
  return true;
}

bool is_left_approx(const ModuleMap& f, const std::vector<ModuleRep>& gens) {
  for (const auto& g : gens) {
    auto hom_tgt = hom_space(f.target, g);
    auto hom_src = hom_space(f.source, g);
    if (hom_src.empty()) continue;
    Mat m = precompose_matrix(hom_tgt, hom_src, f);
    if (m.rank() != static_cast<int>(hom_src.size())) return false;
  }
  return true;
}

ModuleMap minimal_right_approx(const ModuleRep& target,
                               const std::vector<ModuleRep>& gens,
                               std::uint64_t seed) {
  // evaluation map from gens tensor Hom(gen, target)
  std::vector<ModuleRep> parts;
  std::vector<ModuleMap> comps;
  for (const auto& g : gens)
    for (const auto& h : hom_space(g, target)) {
      parts.push_back(g);
      comps.push_back(h);
    }
  Field f = target.field();
  auto assemble = [&](const std::vector<int>& keep) {
    std::vector<ModuleRep> ps;
    for (int k : keep) ps.push_back(parts[k]);
    ModuleRep src = ps.empty() ? zero_module(target.alg) : direct_sum(ps);
    ModuleMap ev = zero_map(src, target);
    std::vector<int> off(target.dims.size(), 0);
    for (int k : keep) {
      for (size_t v = 0; v < target.dims.size(); ++v) {
        for (int r = 0; r < comps[k].f[v].rows(); ++r)
          for (int c = 0; c < comps[k].f[v].cols(); ++c)
            ev.f[v].at(r, off[v] + c) = comps[k].f[v].at(r, c);
        off[v] += parts[k].dims[v];
      }
    }
    return ev;
  };
  std::vector<int> keep(parts.size());
  for (size_t i = 0; i < parts.size(); ++i) keep[i] = static_cast<int>(i);
  // drop redundant components greedily (deterministic order)
  for (size_t i = parts.size(); i-- > 0;) {
    std::vector<int> trial;
    for (int k : keep)
      if (k != static_cast<int>(i)) trial.push_back(k);
    ModuleMap ev = assemble(trial);
    if (is_right_approx(ev, gens)) keep = std::move(trial);
  }
  (void)seed;
  ModuleMap out = assemble(keep);
  out.validate();
  return out;
}

ModuleMap minimal_left_approx(const ModuleRep& source,
                              const std::vector<ModuleRep>& gens,
                              std::uint64_t seed) {
  std::vector<ModuleRep> parts;
  std::vector<ModuleMap> comps;
  for (const auto& g : gens)
    for (const auto& h : hom_space(source, g)) {
      parts.push_back(g);
      comps.push_back(h);
    }
  auto assemble = [&](const std::vector<int>& keep) {
    std::vector<ModuleRep> ps;
    for (int k : keep) ps.push_back(parts[k]);
    ModuleRep tgt = ps.empty() ? zero_module(source.alg) : direct_sum(ps);
    ModuleMap ev = zero_map(source, tgt);
    std::vector<int> off(source.dims.size(), 0);
    for (int k : keep) {
      for (size_t v = 0; v < source.dims.size(); ++v) {
        for (int r = 0; r < comps[k].f[v].rows(); ++r)
          for (int c = 0; c < comps[k].f[v].cols(); ++c)
            ev.f[v].at(off[v] + r, c) = comps[k].f[v].at(r, c);
        off[v] += parts[k].dims[v];
      }
    }
    return ev;
  };
  std::vector<int> keep(parts.size());
  for (size_t i = 0; i < parts.size(); ++i) keep[i] = static_cast<int>(i);
  for (size_t i = parts.size(); i-- > 0;) {
    std::vector<int> trial;
    for (int k : keep)
      if (k != static_cast<int>(i)) trial.push_back(k);
    ModuleMap ev = assemble(trial);
    if (is_left_approx(ev, gens)) keep = std::move(trial);
  }
  (void)seed;
  ModuleMap out = assemble(keep);
  out.validate();
  return out;
}

HatChain hat_resolution(const ModuleRep& target,
                        const std::vector<ModuleRep>& gens, int depth,
                        std::uint64_t seed) {
  HatChain chain;
  DecomposeOptions dopts;
  dopts.seed = seed;
  ModuleRep cur = target;
  for (int k = 0; k <= depth; ++k) {
    if (cur.total_dim() == 0) {
      chain.found = true;
      return chain;
    }
    ModuleMap approx = minimal_right_approx(cur, gens, seed);
    if (!approx.is_surjective()) {
      chain.failure = "right approximation not surjective at step " +
                      std::to_string(k);
      return chain;
    }
    ShortExactSeq step = ses_from_proj(approx);
    chain.steps.push_back(step);
    cur = step.sub();
    if (cur.total_dim() == 0) {
      chain.found = true;
      return chain;
    }
    if (in_add_of(cur, gens, dopts)) {
      // close with the identity deflation of the kernel
      ShortExactSeq last = ses_from_proj(identity_map(cur));
      chain.steps.push_back(last);
      chain.found = true;
      return chain;
    }
  }
  chain.failure = "depth " + std::to_string(depth) + " exceeded";
  return chain;
}

namespace {

AbResult ab_rec(const ModuleRep& c, const std::vector<ShortExactSeq>& chain,
                size_t step, const std::vector<ModuleRep>& x_gens,
                const std::vector<ModuleRep>& w_gens, int depth,
                std::uint64_t seed) {
  Field f = c.field();
  if (step >= chain.size()) {
    // base: c lies in add(x); right sequence 0 >-> c ->> c
    AbResult r;
    ShortExactSeq triv{zero_map(zero_module(c.alg), c), identity_map(c)};
    triv.validate();
    r.right_approx_seq = triv;
    // left: c >-> W ->> C' with W in add(w): minimal left approx, cokernel
    // must land back in add(x)
    ModuleMap la = minimal_left_approx(c, w_gens, seed);
    if (!la.is_injective())
      throw Error("ab_approximation: left w-approximation not injective at '" +
                  c.name + "' (x lacks enough injectives)");
    r.left_approx_seq = ses_from_incl(la);
    DecomposeOptions dopts;
    dopts.seed = seed;
    if (!in_add_of(r.left_approx_seq.quot(), x_gens, dopts))
      throw Error("ab_approximation: cokernel of injective hull step not in x");
    return r;
  }
  // chain[step]: D >-> X_0 ->> c with D one level lower
  const ShortExactSeq& s = chain[step];
  AbResult sub = ab_rec(s.sub(), chain, step + 1, x_gens, w_gens, depth, seed);
  // pushout of D >-> X0 along D >-> Y^D gives Y^D >-> E ->> c with E in x
  PushoutResult po = pushout(s, sub.left_approx_seq.incl);
  AbResult r;
  r.right_approx_seq = po.seq;
  // now embed E into some W in add(w): E >-> W ->> F, then pushout gives
  // C >-> G ->> F with G in hat(w)
  const ModuleRep& e = po.seq.mid();
  ModuleMap la = minimal_left_approx(e, w_gens, seed);
  if (!la.is_injective())
    throw Error("ab_approximation: left w-approximation not injective at '" +
                e.name + "'");
  ShortExactSeq ew = ses_from_incl(la);
  // pushout of Y^D >-> E (the right_approx inflation) along... the proof
  // pushes the conflation Y^D >-> E ->> C along E >-> W; implemented as the
  // pushout of (E ->> C) viewed with kernel Y^D: use the square directly.
  // G := coker(Y^D >-> W) via the composite inclusion.
  ModuleMap comp_incl = compose(ew.incl, po.seq.incl);  // Y^D >-> W
  auto g = cokernel(comp_incl);
  // C >-> G: image of C = E/Y^D inside W/Y^D
  // map E/Y^D -> W/Y^D induced: c_of_e: C ... we need C >-> G with cokernel F.
  // From the square: G/(C) = F = W/E.
  ModuleMap e_to_g = compose(g.map, ew.incl);  // E -> G, kills Y^D
  ModuleMap c_to_g = factor_through_surjection(e_to_g, po.seq.proj);
  ShortExactSeq cg = ses_from_incl(c_to_g);
  r.left_approx_seq = cg;
  return r;
}

}  // namespace

AbResult ab_approximation(const ModuleRep& c,
                          const std::vector<ModuleRep>& x_gens,
                          const std::vector<ModuleRep>& w_gens, int depth,
                          std::uint64_t seed) {
  DecomposeOptions dopts;
  dopts.seed = seed;
  std::vector<ShortExactSeq> chain;
  ModuleRep cur = c;
  int k = 0;
  while (!in_add_of(cur, x_gens, dopts)) {
    if (k++ > depth)
      throw SearchLimit("ab_approximation: no add(x) resolution within depth " +
                        std::to_string(depth));
    ModuleMap approx = minimal_right_approx(cur, x_gens, seed);
    if (!approx.is_surjective())
      throw Error("ab_approximation: right x-approximation not surjective");
    ShortExactSeq s = ses_from_proj(approx);
    chain.push_back(s);
    cur = s.sub();
    if (cur.total_dim() == 0) break;
  }
  AbResult r = ab_rec(c, chain, 0, x_gens, w_gens, depth, seed);
  r.right_approx_seq.validate();
  r.left_approx_seq.validate();
  return r;
}

std::optional<int> global_dimension(const AlgebraPtr& a, int bound) {
  int gd = 0;
  for (int v = 0; v < a->quiver.num_vertices; ++v) {
    Resolution r = min_proj_resolution(simple_module(a, v), bound);
    if (!r.terminated) return std::nullopt;
    gd = std::max(gd, r.length());
  }
  return gd;
}

}  // namespace qmod
