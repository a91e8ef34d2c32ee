#include "qmod/endalg.hpp"

#include <algorithm>
#include <sstream>

namespace qmod {

namespace {

struct Block {
  std::vector<ModuleMap> reps;    // basis representatives (coset reps if stable)
  std::vector<ModuleMap> ideal;   // ideal basis, stable case only
};

// Coordinates of f in reps modulo the span of ideal; throws if outside.
std::vector<Scalar> block_coords(const Block& blk, const ModuleMap& f) {
  Field fl = f.source.field();
  auto fv = f.vec();
  int n = static_cast<int>(fv.size());
  std::vector<std::vector<Scalar>> cols;
  for (const auto& r : blk.reps) cols.push_back(r.vec());
  for (const auto& r : blk.ideal) cols.push_back(r.vec());
  if (cols.empty()) {
    for (const auto& x : fv)
      if (!x.is_zero()) throw Error("block_coords: map outside zero block");
    return {};
  }
  auto c = coords_in(mat_from_cols(fl, n, cols), fv);
  if (!c) throw Error("block_coords: map outside block span");
  c->resize(blk.reps.size());
  return *c;
}

EndPresentation build_end(const std::vector<ModuleRep>& summands,
                          const SubcatSpec* spec, std::uint64_t seed) {
  if (summands.empty()) throw Error("end_algebra: empty summand list");
  const AlgebraPtr& base = summands[0].alg;
  Field fl = base->field;
  DecomposeOptions dopts;
  dopts.seed = seed;
  IsoOptions iso;
  iso.seed = seed;
  for (const auto& g : summands) {
    if (g.alg != base) throw ValidationError("end_algebra: mixed algebras");
    auto parts = decompose(g, dopts);
    if (parts.size() != 1 || parts[0].multiplicity != 1)
      throw ValidationError("end_algebra: summand '" + g.name +
                            "' not indecomposable");
  }
  for (size_t i = 0; i < summands.size(); ++i)
    for (size_t j = i + 1; j < summands.size(); ++j)
      if (summands[i].dims == summands[j].dims &&
          is_isomorphic(summands[i], summands[j], iso))
        throw ValidationError("end_algebra: summands " + summands[i].name +
                              " and " + summands[j].name + " isomorphic");

  int nv = static_cast<int>(summands.size());
  std::vector<Block> blocks(static_cast<size_t>(nv) * nv);
  for (int i = 0; i < nv; ++i)
    for (int j = 0; j < nv; ++j) {
      Block& blk = blocks[static_cast<size_t>(i) * nv + j];
      // e_i End e_j = maps G_j -> G_i
      auto homs = hom_space(summands[j], summands[i]);
      if (spec) {
        QuotientHom q = quotient_hom(summands[j], summands[i], *spec);
        blk.ideal = q.ideal_basis;
        if (i == j) {
          // the identity coset must survive and leads the basis
          ModuleMap idm = identity_map(summands[i]);
          if (in_ideal(idm, *spec))
            throw ValidationError("stable_end_algebra: summand '" +
                                  summands[i].name +
                                  "' vanishes in the quotient");
          std::vector<ModuleMap> reordered{idm};
          Span sp(static_cast<int>(idm.vec().size()), fl);
          for (const auto& m : blk.ideal) sp.add(m.vec());
          sp.add(idm.vec());
          for (const auto& h : q.hom_basis)
            if (sp.add(h.vec())) reordered.push_back(h);
          blk.reps = std::move(reordered);
        } else {
          blk.reps = q.coset_basis;
        }
      } else {
        if (i == j) {
          ModuleMap idm = identity_map(summands[i]);
          std::vector<ModuleMap> reordered{idm};
          Span sp(static_cast<int>(idm.vec().size()), fl);
          sp.add(idm.vec());
          for (const auto& h : homs)
            if (sp.add(h.vec())) reordered.push_back(h);
          blk.reps = std::move(reordered);
        } else {
          blk.reps = homs;
        }
      }
    }

  auto alg = std::make_shared<BasedAlgebra>();
  alg->field = fl;
  alg->relations_known = false;
  std::vector<std::pair<int, int>> basis_block;  // basis index -> (i, j)
  std::vector<int> block_offset(static_cast<size_t>(nv) * nv, 0);
  EndPresentation e;
  for (int i = 0; i < nv; ++i)
    for (int j = 0; j < nv; ++j) {
      const Block& blk = blocks[static_cast<size_t>(i) * nv + j];
      block_offset[static_cast<size_t>(i) * nv + j] = alg->dim;
      for (size_t t = 0; t < blk.reps.size(); ++t) {
        alg->basis_src.push_back(i);
        alg->basis_tgt.push_back(j);
        alg->basis_path_len.push_back(-1);
        std::ostringstream nm;
        nm << "h" << i << "_" << j << "_" << t;
        alg->basis_name.push_back(nm.str());
        basis_block.push_back({i, j});
        e.dict.push_back(blk.reps[t]);
        ++alg->dim;
      }
    }
  alg->vertex_idem.assign(nv, -1);
  for (int i = 0; i < nv; ++i)
    alg->vertex_idem[i] = block_offset[static_cast<size_t>(i) * nv + i];

  // multiplication: x in e_i E e_j, y in e_j E e_k composes to phi_x o phi_y
  alg->mult.assign(static_cast<size_t>(alg->dim) * alg->dim, {});
  for (int x = 0; x < alg->dim; ++x)
    for (int y = 0; y < alg->dim; ++y) {
      auto& cell = alg->mult[static_cast<size_t>(x) * alg->dim + y];
      cell.assign(alg->dim, Scalar::zero(fl));
      auto [i, j] = basis_block[x];
      auto [j2, k] = basis_block[y];
      if (j != j2) continue;
      ModuleMap comp = compose(e.dict[x], e.dict[y]);
      const Block& blk = blocks[static_cast<size_t>(i) * nv + k];
      auto coords = block_coords(blk, comp);
      int off = block_offset[static_cast<size_t>(i) * nv + k];
      for (size_t t = 0; t < coords.size(); ++t)
        cell[off + static_cast<int>(t)] = coords[t];
    }

  // radical and Gabriel data via the trace form
  alg->quiver.num_vertices = nv;  // provisional, needed by nothing below
  auto rad = trace_form_radical(*alg);
  alg->rad_basis = rad;
  // block spans of rad and rad^2
  auto project_block = [&](const std::vector<Scalar>& v, int i, int j) {
    auto ei = alg->unit_vec(alg->vertex_idem[i]);
    auto ej = alg->unit_vec(alg->vertex_idem[j]);
    return alg->multiply(ei, alg->multiply(v, ej));
  };
  std::vector<std::vector<Scalar>> rad2;
  for (const auto& r : rad)
    for (const auto& s : rad) rad2.push_back(alg->multiply(r, s));
  Quiver gq;
  gq.num_vertices = nv;
  for (int i = 0; i < nv; ++i)
    for (int j = 0; j < nv; ++j) {
      Span sp2(alg->dim, fl);
      for (const auto& v : rad2) sp2.add(project_block(v, i, j));
      Span sp(alg->dim, fl);
      for (const auto& r : sp2.rows()) sp.add(r);
      for (const auto& v : rad) {
        auto pv = project_block(v, i, j);
        if (sp.add(pv)) {
          Arrow a;
          a.label = "a" + std::to_string(gq.arrows.size());
          a.src = i;
          a.tgt = j;
          gq.arrows.push_back(a);
          alg->arrow_elem.push_back(pv);
        }
      }
    }
  alg->quiver = gq;
  if (!alg->check_idempotents())
    throw ValidationError("end_algebra: idempotent axioms failed");

  e.algebra = alg;
  e.summands = summands;
  e.stable = spec != nullptr;
  if (spec) e.subcat = *spec;
  return e;
}

}  // namespace

std::vector<Scalar> EndPresentation::coords_of(const ModuleMap& f, int i,
                                               int j) const {
  Block blk;
  int nv = static_cast<int>(summands.size());
  (void)nv;
  for (int k = 0; k < algebra->dim; ++k)
    if (algebra->basis_src[k] == i && algebra->basis_tgt[k] == j)
      blk.reps.push_back(dict[k]);
  if (stable) {
    QuotientHom q = quotient_hom(summands[j], summands[i], subcat);
    blk.ideal = q.ideal_basis;
  }
  auto local = block_coords(blk, f);
  std::vector<Scalar> out(algebra->dim, Scalar::zero(algebra->field));
  int t = 0;
  for (int k = 0; k < algebra->dim; ++k)
    if (algebra->basis_src[k] == i && algebra->basis_tgt[k] == j)
      out[k] = local[t++];
  return out;
}

EndPresentation end_algebra(const std::vector<ModuleRep>& summands,
                            std::uint64_t seed) {
  return build_end(summands, nullptr, seed);
}

EndPresentation stable_end_algebra(const std::vector<ModuleRep>& summands,
                                   const SubcatSpec& spec,
                                   std::uint64_t seed) {
  return build_end(summands, &spec, seed);
}

Quiver gabriel_quiver(const EndPresentation& e) { return e.algebra->quiver; }

namespace {

// The arrow representative as an actual map between summands.
ModuleMap arrow_as_map(const EndPresentation& e, int ar) {
  const auto& alg = *e.algebra;
  int i = alg.quiver.arrows[ar].src, j = alg.quiver.arrows[ar].tgt;
  // element of e_i E e_j = map G_j -> G_i
  ModuleMap m = zero_map(e.summands[j], e.summands[i]);
  const auto& coords = alg.arrow_elem[ar];
  for (int k = 0; k < alg.dim; ++k) {
    if (coords[k].is_zero()) continue;
    m = map_add(m, map_scale(e.dict[k], coords[k]));
  }
  return m;
}

}  // namespace

ModuleRep hom_functor(const EndPresentation& e, const ModuleRep& x) {
  if (e.stable) throw Error("hom_functor: use stable_hom_functor");
  const auto& alg = e.algebra;
  int nv = static_cast<int>(e.summands.size());
  std::vector<std::vector<ModuleMap>> bases(nv);
  ModuleRep m;
  m.alg = alg;
  m.dims.assign(nv, 0);
  for (int i = 0; i < nv; ++i) {
    bases[i] = hom_space(e.summands[i], x);
    m.dims[i] = static_cast<int>(bases[i].size());
  }
  for (size_t ar = 0; ar < alg->quiver.arrows.size(); ++ar) {
    int i = alg->quiver.arrows[ar].src, j = alg->quiver.arrows[ar].tgt;
    ModuleMap psi = arrow_as_map(e, ar);  // G_j -> G_i
    Mat act(m.dims[j], m.dims[i], alg->field);
    for (int c = 0; c < m.dims[i]; ++c) {
      auto coords = hom_coords(bases[j], compose(bases[i][c], psi));
      for (int r = 0; r < m.dims[j]; ++r) act.at(r, c) = coords[r];
    }
    m.arrow_mat.push_back(act);
  }
  m.name = "F(" + x.name + ")";
  m.validate();
  return m;
}

ModuleMap hom_functor_map(const EndPresentation& e, const ModuleMap& f) {
  ModuleRep fx = hom_functor(e, f.source);
  ModuleRep fy = hom_functor(e, f.target);
  int nv = static_cast<int>(e.summands.size());
  ModuleMap out = zero_map(fx, fy);
  for (int i = 0; i < nv; ++i) {
    auto bx = hom_space(e.summands[i], f.source);
    auto by = hom_space(e.summands[i], f.target);
    for (size_t c = 0; c < bx.size(); ++c) {
      auto coords = hom_coords(by, compose(f, bx[c]));
      for (size_t r = 0; r < by.size(); ++r)
        out.f[i].at(static_cast<int>(r), static_cast<int>(c)) = coords[r];
    }
  }
  out.validate();
  return out;
}

namespace {

// Residue coordinates of a map G_i -> x in the stable coset basis.
std::vector<Scalar> stable_coords(const QuotientHom& q, const ModuleMap& f) {
  Field fl = f.source.field();
  auto fv = f.vec();
  std::vector<std::vector<Scalar>> cols;
  for (const auto& r : q.coset_basis) cols.push_back(r.vec());
  for (const auto& r : q.ideal_basis) cols.push_back(r.vec());
  if (cols.empty()) {
    for (const auto& v : fv)
      if (!v.is_zero()) throw Error("stable_coords: outside zero space");
    return {};
  }
  auto c = coords_in(mat_from_cols(fl, static_cast<int>(fv.size()), cols), fv);
  if (!c) throw Error("stable_coords: outside span");
  c->resize(q.coset_basis.size());
  return *c;
}

}  // namespace

ModuleRep stable_hom_functor(const EndPresentation& e, const ModuleRep& x) {
  if (!e.stable) throw Error("stable_hom_functor: presentation not stable");
  const auto& alg = e.algebra;
  int nv = static_cast<int>(e.summands.size());
  std::vector<QuotientHom> qs;
  ModuleRep m;
  m.alg = alg;
  m.dims.assign(nv, 0);
  for (int i = 0; i < nv; ++i) {
    qs.push_back(quotient_hom(e.summands[i], x, e.subcat));
    m.dims[i] = qs[i].coset_dim();
  }
  for (size_t ar = 0; ar < alg->quiver.arrows.size(); ++ar) {
    int i = alg->quiver.arrows[ar].src, j = alg->quiver.arrows[ar].tgt;
    ModuleMap psi = arrow_as_map(e, ar);  // G_j -> G_i
    Mat act(m.dims[j], m.dims[i], alg->field);
    for (int c = 0; c < m.dims[i]; ++c) {
      auto coords = stable_coords(qs[j], compose(qs[i].coset_basis[c], psi));
      for (int r = 0; r < m.dims[j]; ++r) act.at(r, c) = coords[r];
    }
    m.arrow_mat.push_back(act);
  }
  m.name = "SF(" + x.name + ")";
  m.validate();
  return m;
}

FullyFaithfulReport fully_faithful_check(
    const EndPresentation& e, const std::vector<ModuleRep>& fixtures) {
  FullyFaithfulReport rep;
  int nv = static_cast<int>(e.summands.size());
  // precompute images and per-summand (coset) hom data once per fixture
  struct PerFixture {
    ModuleRep image;
    std::vector<QuotientHom> stable_blocks;         // stable case
    std::vector<std::vector<ModuleMap>> plain_blocks;  // plain case
  };
  std::vector<PerFixture> data;
  for (const auto& x : fixtures) {
    PerFixture d;
    d.image = e.stable ? stable_hom_functor(e, x) : hom_functor(e, x);
    for (int i = 0; i < nv; ++i) {
      if (e.stable)
        d.stable_blocks.push_back(quotient_hom(e.summands[i], x, e.subcat));
      else
        d.plain_blocks.push_back(hom_space(e.summands[i], x));
    }
    data.push_back(std::move(d));
  }
  for (size_t xi = 0; xi < fixtures.size(); ++xi) {
    for (size_t yi = 0; yi < fixtures.size(); ++yi) {
      const auto& x = fixtures[xi];
      const auto& y = fixtures[yi];
      const auto& dx = data[xi];
      const auto& dy = data[yi];
      FullyFaithfulRow row;
      row.x = x.name;
      row.y = y.name;
      std::vector<ModuleMap> upstairs;
      if (e.stable) {
        QuotientHom q = quotient_hom(x, y, e.subcat);
        row.dim_hom = q.coset_dim();
        upstairs = q.coset_basis;
      } else {
        upstairs = hom_space(x, y);
        row.dim_hom = static_cast<int>(upstairs.size());
      }
      row.dim_hom_end = hom_dim(dx.image, dy.image);
      std::vector<std::vector<Scalar>> cols;
      for (const auto& phi : upstairs) {
        ModuleMap img = zero_map(dx.image, dy.image);
        for (int i = 0; i < nv; ++i) {
          for (int c = 0; c < dx.image.dims[i]; ++c) {
            std::vector<Scalar> coords;
            if (e.stable)
              coords = stable_coords(
                  dy.stable_blocks[i],
                  compose(phi, dx.stable_blocks[i].coset_basis[c]));
            else
              coords = hom_coords(dy.plain_blocks[i],
                                  compose(phi, dx.plain_blocks[i][c]));
            for (int r = 0; r < dy.image.dims[i]; ++r)
              img.f[i].at(r, c) = coords[r];
          }
        }
        img.validate();
        cols.push_back(img.vec());
      }
      if (cols.empty()) {
        row.injective = true;
      } else if (cols[0].empty()) {
        row.injective = row.dim_hom == 0;  // images are zero modules
      } else {
        Mat m = mat_from_cols(e.algebra->field,
                              static_cast<int>(cols[0].size()), cols);
        row.injective = m.rank() == row.dim_hom;
      }
      row.pass = row.injective && row.dim_hom == row.dim_hom_end;
      if (!row.pass) rep.pass = false;
      rep.rows.push_back(std::move(row));
    }
  }
  return rep;
}

std::vector<Relation> recover_relations(const EndPresentation& e,
                                        int max_len) {
  const auto& alg = *e.algebra;
  const Quiver& q = alg.quiver;
  Field fl = alg.field;
  std::vector<Relation> rels;
  // enumerate paths grouped by endpoints, kernel of evaluation
  for (int s = 0; s < q.num_vertices; ++s) {
    std::vector<Path> frontier{{s, {}}}, all;
    for (int len = 0; len <= max_len && !frontier.empty(); ++len) {
      std::vector<Path> next;
      for (const auto& p : frontier) {
        all.push_back(p);
        int t = p.target(q);
        for (int a = 0; a < static_cast<int>(q.arrows.size()); ++a)
          if (q.arrows[a].src == t) {
            Path np = p;
            np.arrows.push_back(a);
            next.push_back(np);
          }
      }
      frontier = std::move(next);
    }
    for (int t = 0; t < q.num_vertices; ++t) {
      std::vector<Path> st;
      std::vector<std::vector<Scalar>> cols;
      for (const auto& p : all)
        if (p.target(q) == t) {
          st.push_back(p);
          cols.push_back(alg.path_element(p));
        }
      if (st.empty()) continue;
      Mat ev = mat_from_cols(fl, alg.dim, cols);
      Mat ker = ev.kernel_basis();
      for (int col = 0; col < ker.cols(); ++col) {
        Relation rel;
        for (size_t pi = 0; pi < st.size(); ++pi) {
          Scalar c = ker.at(static_cast<int>(pi), col);
          if (!c.is_zero()) rel.push_back({c, st[pi]});
        }
        bool admissible = true;
        for (const auto& term : rel)
          if (term.path.length() < 2) admissible = false;
        if (admissible && !rel.empty()) rels.push_back(rel);
      }
    }
  }
  return rels;
}

}  // namespace qmod
