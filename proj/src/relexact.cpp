#include "qmod/relexact.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace qmod {

SubcatSpec SubcatSpec::make(std::vector<ModuleRep> gens,
                            const DecomposeOptions& opts) {
  SubcatSpec s;
  s.gens = std::move(gens);
  IsoOptions iso;
  iso.seed = opts.seed;
  for (const auto& g : s.gens) {
    if (g.total_dim() == 0) continue;
    for (const auto& sum : decompose(g, opts)) {
      bool seen = false;
      for (const auto& p : s.indec_pool)
        if (p.dims == sum.mod.dims && is_isomorphic(p, sum.mod, iso)) {
          seen = true;
          break;
        }
      if (!seen) s.indec_pool.push_back(sum.mod);
    }
  }
  return s;
}

bool is_conflation(const ShortExactSeq& ses, const ExactStructureSpec& spec) {
  ses.validate();
  switch (spec.kind) {
    case ExactKind::Full:
      return true;
    case ExactKind::FromC: {
      for (const auto& c : spec.subcat.gens)
        if (!is_right_exact_vs(ses, c)) return false;
      return true;
    }
    case ExactKind::ToC: {
      for (const auto& c : spec.subcat.gens)
        if (!is_left_exact_vs(ses, c)) return false;
      return true;
    }
    case ExactKind::BothC: {
      for (const auto& c : spec.subcat.gens) {
        if (!is_right_exact_vs(ses, c)) return false;
        if (!is_left_exact_vs(ses, c)) return false;
      }
      return true;
    }
  }
  return false;
}

ModuleMap right_approx(const ModuleRep& x, const SubcatSpec& spec,
                       std::uint64_t seed) {
  if (spec.empty()) return zero_map(zero_module(x.alg), x);
  ModuleMap ev = minimal_right_approx(x, spec.gens, seed);
  if (!spec.quotient_closed) return ev;
  auto img = image(ev);
  img.mod.name = "C_" + x.name;
  return img.map;  // inclusion C_X >-> x; image is in C by quotient closure
}

ModuleMap left_approx(const ModuleRep& x, const SubcatSpec& spec,
                      std::uint64_t seed) {
  if (spec.empty()) return zero_map(x, zero_module(x.alg));
  ModuleMap ev = minimal_left_approx(x, spec.gens, seed);
  if (!spec.submodule_closed) return ev;
  auto img = image(ev);  // C^x inside the evaluation target, in C by closure
  img.mod.name = "C^" + x.name;
  // surjection x ->> C^x: coordinates of ev through the inclusion
  ModuleMap onto;
  onto.source = x;
  onto.target = img.mod;
  for (size_t v = 0; v < ev.f.size(); ++v) {
    auto sol = img.map.f[v].solve(ev.f[v]);
    if (!sol) throw Error("left_approx: image factorization failed");
    onto.f.push_back(*sol);
  }
  onto.validate();
  return onto;
}

QuotientHom quotient_hom(const ModuleRep& x, const ModuleRep& y,
                         const SubcatSpec& spec) {
  QuotientHom q;
  q.source = x;
  q.target = y;
  q.hom_basis = hom_space(x, y);
  if (q.hom_basis.empty()) return q;
  int n = static_cast<int>(q.hom_basis[0].vec().size());
  Span ideal(n, x.field());
  for (const auto& c : spec.gens) {
    auto to_c = hom_space(x, c);
    auto from_c = hom_space(c, y);
    for (const auto& a : to_c)
      for (const auto& b : from_c) {
        ModuleMap comp = compose(b, a);
        if (ideal.add(comp.vec())) q.ideal_basis.push_back(comp);
      }
  }
  Span full = ideal;
  for (const auto& h : q.hom_basis)
    if (full.add(h.vec())) q.coset_basis.push_back(h);
  return q;
}

bool in_ideal(const ModuleMap& f, const SubcatSpec& spec) {
  auto v = f.vec();
  if (v.empty()) return true;
  Span ideal(static_cast<int>(v.size()), f.source.field());
  for (const auto& c : spec.gens) {
    auto to_c = hom_space(f.source, c);
    auto from_c = hom_space(c, f.target);
    for (const auto& a : to_c)
      for (const auto& b : from_c) ideal.add(compose(b, a).vec());
  }
  return ideal.contains(v);
}

namespace {

// Span of [C](z, y) as flattened vectors.
Span ideal_span(const ModuleRep& z, const ModuleRep& y,
                const SubcatSpec& spec) {
  int n = static_cast<int>(zero_map(z, y).vec().size());
  Span ideal(n, z.field());
  for (const auto& c : spec.gens) {
    auto to_c = hom_space(z, c);
    auto from_c = hom_space(c, y);
    for (const auto& a : to_c)
      for (const auto& b : from_c) ideal.add(compose(b, a).vec());
  }
  return ideal;
}

}  // namespace

bool quotient_is_mono(const ModuleMap& f, const SubcatSpec& spec,
                      const std::vector<ModuleRep>& test_objects) {
  for (const auto& z : test_objects) {
    if (z.total_dim() == 0) continue;
    auto homs = hom_space(z, f.source);
    if (homs.empty()) continue;
    Span ideal_zy = ideal_span(z, f.target, spec);
    Span ideal_zx = ideal_span(z, f.source, spec);
    // phi with f o phi in [C](z,y) must lie in [C](z,x): the kernel of
    // c |-> (f o phi_c mod ideal) is spanned by the kernel of the reduced
    // composite matrix.
    int nvec = static_cast<int>(compose(f, homs[0]).vec().size());
    std::vector<std::vector<Scalar>> cols;
    for (const auto& h : homs)
      cols.push_back(ideal_zy.reduce(compose(f, h).vec()));
    Mat ker = mat_from_cols(f.source.field(), nvec, cols).kernel_basis();
    for (int j = 0; j < ker.cols(); ++j) {
      ModuleMap phi = zero_map(z, f.source);
      for (size_t i = 0; i < homs.size(); ++i)
        phi = map_add(phi, map_scale(homs[i], ker.at(static_cast<int>(i), j)));
      if (!ideal_zx.contains(phi.vec())) return false;
    }
  }
  return true;
}

bool quotient_is_epi(const ModuleMap& f, const SubcatSpec& spec,
                     const std::vector<ModuleRep>& test_objects) {
  for (const auto& z : test_objects) {
    if (z.total_dim() == 0) continue;
    auto homs = hom_space(f.target, z);
    if (homs.empty()) continue;
    Span ideal_xz = ideal_span(f.source, z, spec);
    Span ideal_yz = ideal_span(f.target, z, spec);
    int nvec = static_cast<int>(compose(homs[0], f).vec().size());
    std::vector<std::vector<Scalar>> cols;
    for (const auto& h : homs)
      cols.push_back(ideal_xz.reduce(compose(h, f).vec()));
    Mat ker = mat_from_cols(f.source.field(), nvec, cols).kernel_basis();
    for (int j = 0; j < ker.cols(); ++j) {
      ModuleMap psi = zero_map(f.target, z);
      for (size_t i = 0; i < homs.size(); ++i)
        psi = map_add(psi, map_scale(homs[i], ker.at(static_cast<int>(i), j)));
      if (!ideal_yz.contains(psi.vec())) return false;
    }
  }
  return true;
}

ZeroKernelFactorization zero_kernel_factorization(
    const ModuleMap& f, const SubcatSpec& spec,
    const std::vector<ModuleRep>& test_objects, std::uint64_t seed) {
  ZeroKernelFactorization out;
  const ModuleRep& x = f.source;
  const ModuleRep& y = f.target;

  // f = (image inclusion) o (surjection onto the image)
  auto img = image(f);
  ModuleMap onto;
  onto.source = x;
  onto.target = img.mod;
  for (size_t v = 0; v < f.f.size(); ++v) {
    auto sol = img.map.f[v].solve(f.f[v]);
    if (!sol) {
      out.failure = "image factorization failed";
      return out;
    }
    onto.f.push_back(*sol);
  }
  onto.validate();

  // pullback of X ->> I along a right C-approximation C_I -> I
  ModuleMap ca = spec.empty()
                     ? zero_map(zero_module(x.alg), img.mod)
                     : minimal_right_approx(img.mod, spec.gens, seed);
  // E = pullback; sequence 0 -> E -> X + C_I -> I -> 0
  auto lay_mid = direct_sum({x, ca.source});
  ModuleMap combined = zero_map(lay_mid, img.mod);
  for (size_t v = 0; v < x.dims.size(); ++v) {
    for (int r = 0; r < onto.f[v].rows(); ++r) {
      for (int c = 0; c < onto.f[v].cols(); ++c)
        combined.f[v].at(r, c) = onto.f[v].at(r, c);
      for (int c = 0; c < ca.f[v].cols(); ++c)
        combined.f[v].at(r, x.dims[v] + c) = ca.f[v].at(r, c);
    }
  }
  combined.validate();
  if (!combined.is_surjective()) {
    out.failure = "combined map to image not surjective";
    return out;
  }
  ShortExactSeq pb = ses_from_proj(combined);  // E >-> X + C_I ->> I
  const ModuleRep& e = pb.sub();

  // pushout along a left C-approximation E ->> C^E
  ModuleMap la = spec.empty() ? zero_map(e, zero_module(x.alg))
                              : left_approx(e, spec, seed);
  PushoutResult po = pushout(pb, la);
  // certified C-conflation: C^E >-> F' ... the paper's sequence is
  // 0 -> E -> C^E + X + C_I -> F -> 0; assemble it directly.
  auto big = direct_sum({la.target, pb.mid()});
  ModuleMap e_in = zero_map(e, big);
  for (size_t v = 0; v < e.dims.size(); ++v) {
    for (int r = 0; r < la.f[v].rows(); ++r)
      for (int c = 0; c < la.f[v].cols(); ++c)
        e_in.f[v].at(r, c) = la.f[v].at(r, c);
    for (int r = 0; r < pb.incl.f[v].rows(); ++r)
      for (int c = 0; c < pb.incl.f[v].cols(); ++c)
        e_in.f[v].at(la.target.dims[v] + r, c) = -pb.incl.f[v].at(r, c);
  }
  e_in.validate();
  if (!e_in.is_injective()) {
    out.failure = "E does not embed into C^E + X + C_I";
    return out;
  }
  ShortExactSeq cconf = ses_from_incl(e_in);
  ExactStructureSpec both{ExactKind::BothC, spec};
  if (!is_conflation(cconf, both)) {
    out.failure = "constructed sequence is not a C-conflation";
    return out;
  }
  out.c_conflation = cconf;

  // deflation part X -> F: X into the big sum, then the cokernel projection
  const ModuleRep& fmod = cconf.quot();
  ModuleMap x_in = zero_map(x, big);
  for (size_t v = 0; v < x.dims.size(); ++v)
    for (int r = 0; r < x.dims[v]; ++r)
      x_in.f[v].at(la.target.dims[v] + r, r) = Scalar::one(x.field());
  x_in.validate();
  out.deflation_part = compose(cconf.proj, x_in);

  // mono part F -> Y: induced by (0, f, incl o ca): kills the image of E
  ModuleMap big_to_y = zero_map(big, y);
  ModuleMap ca_in_y = compose(img.map, ca);
  for (size_t v = 0; v < y.dims.size(); ++v) {
    for (int r = 0; r < y.dims[v]; ++r) {
      for (int c = 0; c < x.dims[v]; ++c)
        big_to_y.f[v].at(r, la.target.dims[v] + c) = f.f[v].at(r, c);
      for (int c = 0; c < ca.source.dims[v]; ++c)
        big_to_y.f[v].at(r, la.target.dims[v] + x.dims[v] + c) =
            ca_in_y.f[v].at(r, c);
    }
  }
  big_to_y.validate();
  if (!compose(big_to_y, e_in).is_zero()) {
    out.failure = "mono part ill-defined on the pushout";
    return out;
  }
  ModuleMap mono;
  mono.source = fmod;
  mono.target = y;
  for (size_t v = 0; v < y.dims.size(); ++v) {
    auto sol = cconf.proj.f[v].transpose().solve(big_to_y.f[v].transpose());
    if (!sol) {
      out.failure = "mono part does not factor through the deflation";
      return out;
    }
    mono.f.push_back(sol->transpose());
  }
  mono.validate();
  out.mono_part = mono;

  // residue class check: mono o deflation = f modulo [C]
  ModuleMap diff = map_sub(compose(mono, out.deflation_part), f);
  if (!in_ideal(diff, spec)) {
    out.failure = "composite differs from f in the quotient";
    return out;
  }
  if (!quotient_is_mono(mono, spec, test_objects)) {
    out.failure = "mono part not monic against the test objects";
    return out;
  }
  out.ok = true;
  return out;
}

NKernelReport n_kernels_check(const std::vector<ModuleMap>& morphisms,
                              const ExactStructureSpec& spec, int n,
                              const std::vector<ModuleRep>& test_objects,
                              std::uint64_t seed) {
  NKernelReport rep;
  rep.n = n;
  rep.pass = true;
  int idx = 0;
  for (const auto& f : morphisms) {
    NKernelRow row;
    row.morphism = f.name.empty() ? "f" + std::to_string(idx) : f.name;
    ++idx;
    if (n <= 0) {
      auto z = zero_kernel_factorization(f, spec.subcat, test_objects, seed);
      row.pass = z.ok;
      row.detail = z.ok ? "deflation-mono factorization certified" : z.failure;
      if (z.ok && n == -1) {
        // mono part must additionally be an inflation: injective with its
        // canonical sequence admitted by the structure
        if (!z.mono_part.is_injective()) {
          row.pass = false;
          row.detail = "mono part not injective";
        } else {
          ShortExactSeq s = ses_from_incl(z.mono_part);
          if (!is_conflation(s, spec)) {
            row.pass = false;
            row.detail = "mono part not an inflation of the structure";
          }
        }
      }
    } else {
      // kernel chains: K >-> X -> Y with Hom(Z,-) exactness against the
      // declared objects; iterate to depth n
      ModuleMap cur = f;
      bool ok = true;
      std::string why;
      for (int step = 0; step < n && ok; ++step) {
        auto k = kernel(cur);
        // exactness of 0 -> Hom(Z,K) -> Hom(Z,X) -> Hom(Z,Y) at the middle
        for (const auto& z : test_objects) {
          auto hz_k = hom_space(z, k.mod);
          auto hz_x = hom_space(z, cur.source);
          // middle kernel = maps phi with cur o phi = 0; these must factor
          // through k (automatic in module categories, asserted exactly)
          for (const auto& phi : hz_x) {
            if (!compose(cur, phi).is_zero()) continue;
            bool found = false;
            // solve phi = k.map o psi
            ModuleMap psi = zero_map(z, k.mod);
            bool solvable = true;
            for (size_t v = 0; v < phi.f.size(); ++v) {
              auto sol = k.map.f[v].solve(phi.f[v]);
              if (!sol) {
                solvable = false;
                break;
              }
              psi.f[v] = *sol;
            }
            if (solvable) {
              psi.validate();
              found = true;
            }
            if (!found) {
              ok = false;
              why = "kernel factorization failed against " + z.name;
              break;
            }
          }
          (void)hz_k;
          if (!ok) break;
        }
        cur = k.map;
      }
      row.pass = ok;
      row.detail = ok ? "kernel chain Hom-exact against the test objects" : why;
    }
    if (!row.pass) rep.pass = false;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

namespace {

// All subspaces of F_p^d via echelon pivot patterns; returned as basis
// column matrices.
void enumerate_subspaces(Field f, int d, std::vector<Mat>& out,
                         std::uint64_t budget) {
  // iterate over dimensions k and pivot sets; fill free entries
  out.push_back(Mat(d, 0, f));  // zero space
  std::vector<int> pivots;
  std::function<void(int, int)> rec_pivots = [&](int start, int k) {
    if (k == 0) {
      // echelon columns with these pivots; free entries below... use
      // reduced column echelon: entry rules: col j has 1 at pivots[j],
      // zeros at other pivots, free entries elsewhere above? Standard: free
      // positions are rows not in pivots and below the pivot of the column.
      std::vector<std::pair<int, int>> free_pos;  // (row, col)
      int kk = static_cast<int>(pivots.size());
      for (int j = 0; j < kk; ++j)
        for (int r = pivots[j] + 1; r < d; ++r) {
          bool is_piv = false;
          for (int t = 0; t < kk; ++t)
            if (pivots[t] == r) is_piv = true;
          if (!is_piv) free_pos.push_back({r, j});
        }
      std::uint64_t total = 1;
      for (size_t t = 0; t < free_pos.size(); ++t) {
        total *= f.p;
        if (total > budget) throw SearchLimit("subspace enumeration budget");
      }
      for (std::uint64_t code = 0; code < total; ++code) {
        Mat b(d, kk, f);
        std::uint64_t c = code;
        for (int j = 0; j < kk; ++j) b.at(pivots[j], j) = Scalar::one(f);
        for (const auto& [r, j] : free_pos) {
          b.at(r, j) = Scalar(f, static_cast<long long>(c % f.p));
          c /= f.p;
        }
        out.push_back(b);
      }
      return;
    }
    for (int pvt = start; pvt <= d - k; ++pvt) {
      pivots.push_back(pvt);
      rec_pivots(pvt + 1, k - 1);
      pivots.pop_back();
    }
  };
  for (int k = 1; k <= d; ++k) rec_pivots(0, k);
}

}  // namespace

std::vector<SubQuot> enumerate_subreps(const ModuleRep& m,
                                       std::uint64_t budget) {
  Field f = m.field();
  if (f.is_rational())
    throw Error("enumerate_subreps needs a finite field");
  const Quiver& q = m.alg->quiver;
  std::vector<std::vector<Mat>> per_vertex(q.num_vertices);
  for (int v = 0; v < q.num_vertices; ++v)
    enumerate_subspaces(f, m.dims[v], per_vertex[v], budget);
  std::vector<SubQuot> out;
  std::vector<int> choice(q.num_vertices, 0);
  std::uint64_t count = 0;
  while (true) {
    // stability check for the current tuple
    bool stable = true;
    for (size_t a = 0; a < q.arrows.size() && stable; ++a) {
      int i = q.arrows[a].src, j = q.arrows[a].tgt;
      const Mat& si = per_vertex[i][choice[i]];
      const Mat& sj = per_vertex[j][choice[j]];
      Mat img = m.arrow_mat[a] * si;
      if (!sj.solve(img)) stable = false;
    }
    if (stable) {
      std::vector<Mat> cols;
      for (int v = 0; v < q.num_vertices; ++v)
        cols.push_back(per_vertex[v][choice[v]]);
      out.push_back(submodule_from_cols(m, cols));
    }
    if (++count > budget) throw SearchLimit("subrep enumeration budget");
    // next tuple
    int v = 0;
    while (v < q.num_vertices &&
           ++choice[v] == static_cast<int>(per_vertex[v].size()))
      choice[v++] = 0;
    if (v == q.num_vertices) break;
  }
  return out;
}

ClosureReport closure_check(const SubcatSpec& spec, std::uint64_t enum_prime,
                            std::uint64_t budget, std::uint64_t seed) {
  ClosureReport rep;
  rep.submodule_closed = true;
  rep.quotient_closed = true;
  DecomposeOptions dopts;
  dopts.seed = seed;
  for (const auto& g : spec.gens) {
    if (g.field().is_rational() || g.field().p != enum_prime)
      throw Error(
          "closure_check expects generator modules loaded over F_" +
          std::to_string(enum_prime));
    auto subs = enumerate_subreps(g, budget);
    rep.enumerated += subs.size();
    for (const auto& s : subs) {
      if (rep.submodule_closed && !in_add_of(s.mod, spec.indec_pool, dopts)) {
        rep.submodule_closed = false;
        std::ostringstream os;
        os << "subrep of " << g.name << " with dims [";
        for (size_t v = 0; v < s.mod.dims.size(); ++v)
          os << (v ? "," : "") << s.mod.dims[v];
        os << "] outside add C";
        rep.submodule_witness = os.str();
      }
      auto quot = cokernel(s.map);
      if (rep.quotient_closed && !in_add_of(quot.mod, spec.indec_pool, dopts)) {
        rep.quotient_closed = false;
        std::ostringstream os;
        os << "quotient of " << g.name << " with dims [";
        for (size_t v = 0; v < quot.mod.dims.size(); ++v)
          os << (v ? "," : "") << quot.mod.dims[v];
        os << "] outside add C";
        rep.quotient_witness = os.str();
      }
    }
  }
  return rep;
}

std::vector<ModuleRep> relative_projectives_expected(const AlgebraCtx& ctx,
                                                     const SubcatSpec& spec,
                                                     RelProjSetting setting,
                                                     std::uint64_t seed) {
  DecomposeOptions dopts;
  dopts.seed = seed;
  IsoOptions iso;
  iso.seed = seed;
  std::vector<ModuleRep> out;
  auto add_unique = [&](const ModuleRep& m) {
    if (m.total_dim() == 0) return;
    for (const auto& x : out)
      if (x.dims == m.dims && is_isomorphic(x, m, iso)) return;
    out.push_back(m);
  };
  if (setting == RelProjSetting::ClassicalFromC) {
    for (const auto& c : spec.indec_pool) add_unique(c);
    return out;
  }
  for (int v = 0; v < ctx.alg->quiver.num_vertices; ++v)
    add_unique(projective_module(ctx.alg, v));
  for (const auto& c : spec.indec_pool) add_unique(c);
  for (const auto& c : spec.indec_pool) {
    ModuleRep t = tau_minus(c, ctx);
    add_unique(t);
  }
  return out;
}

std::vector<ModuleRep> relative_injectives_expected(const AlgebraCtx& ctx,
                                                    const SubcatSpec& spec,
                                                    RelProjSetting setting,
                                                    std::uint64_t seed) {
  DecomposeOptions dopts;
  dopts.seed = seed;
  IsoOptions iso;
  iso.seed = seed;
  std::vector<ModuleRep> out;
  auto add_unique = [&](const ModuleRep& m) {
    if (m.total_dim() == 0) return;
    for (const auto& x : out)
      if (x.dims == m.dims && is_isomorphic(x, m, iso)) return;
    out.push_back(m);
  };
  if (setting == RelProjSetting::ClassicalFromC) {
    // injectives of the (C,-)-structure with C generating: add{DA, tau C}
    for (int v = 0; v < ctx.alg->quiver.num_vertices; ++v)
      add_unique(injective_module(ctx.alg, v));
    for (const auto& c : spec.indec_pool) add_unique(tau(c, ctx));
    return out;
  }
  for (int v = 0; v < ctx.alg->quiver.num_vertices; ++v)
    add_unique(injective_module(ctx.alg, v));
  for (const auto& c : spec.indec_pool) add_unique(c);
  for (const auto& c : spec.indec_pool) add_unique(tau(c, ctx));
  return out;
}

bool is_relative_projective(const ModuleRep& x,
                            const std::vector<ShortExactSeq>& conflations) {
  for (const auto& s : conflations)
    if (!is_right_exact_vs(s, x)) return false;
  return true;
}

bool is_relative_injective(const ModuleRep& x,
                           const std::vector<ShortExactSeq>& conflations) {
  for (const auto& s : conflations)
    if (!is_left_exact_vs(s, x)) return false;
  return true;
}

}  // namespace qmod
