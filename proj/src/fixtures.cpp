#include "qmod/fixtures.hpp"

#include <algorithm>
#include <sstream>

namespace qmod {

Quiver linear_quiver(int n) {
  Quiver q;
  q.num_vertices = n;
  for (int k = 1; k < n; ++k) {
    Arrow a;
    a.label = "a" + std::to_string(k);
    a.src = k;
    a.tgt = k - 1;
    q.arrows.push_back(a);
  }
  return q;
}

Quiver cyclic_quiver(int n) {
  Quiver q;
  q.num_vertices = n;
  for (int k = 0; k < n; ++k) {
    Arrow a;
    a.label = "c" + std::to_string(k);
    a.src = k;
    a.tgt = (k + 1) % n;
    q.arrows.push_back(a);
  }
  return q;
}

AlgebraPtr path_algebra_linear(int n, Field f) {
  return build_based_algebra(linear_quiver(n), {}, f);
}

AlgebraPtr nakayama_algebra(int n, int loewy, Field f) {
  Quiver q = cyclic_quiver(n);
  std::vector<Relation> rels;
  for (int v = 0; v < n; ++v) {
    Path p;
    p.source = v;
    for (int k = 0; k < loewy; ++k) p.arrows.push_back((v + k) % n);
    rels.push_back({{Scalar::one(f), p}});
  }
  return build_based_algebra(q, rels, f, loewy + 2);
}

ModuleRep interval_module(const AlgebraPtr& linear, int lo, int hi) {
  ModuleRep m = zero_module(linear);
  for (int v = lo; v <= hi; ++v) m.dims[v] = 1;
  Field f = linear->field;
  for (size_t a = 0; a < linear->quiver.arrows.size(); ++a) {
    int i = linear->quiver.arrows[a].src, j = linear->quiver.arrows[a].tgt;
    Mat mat(m.dims[j], m.dims[i], f);
    if (m.dims[i] == 1 && m.dims[j] == 1) mat.at(0, 0) = Scalar::one(f);
    m.arrow_mat[a] = mat;
  }
  std::ostringstream nm;
  nm << "m_" << lo << "_" << hi;
  m.name = nm.str();
  m.validate();
  return m;
}

ModuleRep serial_module(const AlgebraPtr& nakayama, int top_vertex, int len) {
  int n = nakayama->quiver.num_vertices;
  ModuleRep m = zero_module(nakayama);
  Field f = nakayama->field;
  // basis: radical layers top, top+1, ..., top+len-1 (vertices mod n)
  std::vector<int> layer_of_vertex_count(n, 0);
  std::vector<std::vector<int>> layers_at_vertex(n);
  for (int k = 0; k < len; ++k) {
    int v = (top_vertex + k) % n;
    layers_at_vertex[v].push_back(k);
    ++m.dims[v];
  }
  for (size_t a = 0; a < nakayama->quiver.arrows.size(); ++a) {
    int i = nakayama->quiver.arrows[a].src, j = nakayama->quiver.arrows[a].tgt;
    Mat mat(m.dims[j], m.dims[i], f);
    // arrow i -> i+1 sends layer k at vertex i to layer k+1 at vertex i+1
    for (size_t ci = 0; ci < layers_at_vertex[i].size(); ++ci) {
      int k = layers_at_vertex[i][ci];
      for (size_t rj = 0; rj < layers_at_vertex[j].size(); ++rj)
        if (layers_at_vertex[j][rj] == k + 1)
          mat.at(static_cast<int>(rj), static_cast<int>(ci)) = Scalar::one(f);
    }
    m.arrow_mat[a] = mat;
  }
  std::ostringstream nm;
  nm << "u_" << top_vertex << "_" << len;
  m.name = nm.str();
  m.validate();
  return m;
}

std::vector<ModuleRep> interval_fixtures(const AlgebraPtr& linear) {
  std::vector<ModuleRep> out;
  int n = linear->quiver.num_vertices;
  for (int len = 1; len <= n; ++len)
    for (int lo = 0; lo + len - 1 < n; ++lo)
      out.push_back(interval_module(linear, lo, lo + len - 1));
  return out;
}

std::vector<ModuleRep> serial_fixtures(const AlgebraPtr& nakayama, int loewy) {
  std::vector<ModuleRep> out;
  int n = nakayama->quiver.num_vertices;
  for (int len = 1; len <= loewy; ++len)
    for (int v = 0; v < n; ++v) out.push_back(serial_module(nakayama, v, len));
  return out;
}

std::vector<ShortExactSeq> fixture_conflations(
    const std::vector<ModuleRep>& fixtures, size_t cap) {
  std::vector<ShortExactSeq> out;
  for (const auto& n : fixtures)
    for (const auto& l : fixtures) {
      out.push_back(split_ses(l, n));
      for (auto& s : extensions_from_cocycles(n, l)) {
        out.push_back(std::move(s));
        if (out.size() >= cap) return out;
      }
      if (out.size() >= cap) return out;
    }
  return out;
}

void validate_fixture_corpus(const std::vector<ModuleRep>& fixtures,
                             std::uint64_t seed) {
  DecomposeOptions dopts;
  dopts.seed = seed;
  IsoOptions iso;
  iso.seed = seed;
  for (const auto& m : fixtures) {
    m.validate();
    auto parts = decompose(m, dopts);
    if (parts.size() != 1 || parts[0].multiplicity != 1)
      throw ValidationError("fixture '" + m.name + "' is not indecomposable");
  }
  for (size_t i = 0; i < fixtures.size(); ++i)
    for (size_t j = i + 1; j < fixtures.size(); ++j)
      if (fixtures[i].dims == fixtures[j].dims &&
          is_isomorphic(fixtures[i], fixtures[j], iso))
        throw ValidationError("fixtures '" + fixtures[i].name + "' and '" +
                              fixtures[j].name + "' are isomorphic");
}

std::vector<ModuleRep> indecomposable_closure(const AlgebraCtx& ctx,
                                              std::vector<ModuleRep> seeds,
                                              int max_rounds, size_t cap,
                                              std::uint64_t seed) {
  DecomposeOptions dopts;
  dopts.seed = seed;
  IsoOptions iso;
  iso.seed = seed;
  std::vector<ModuleRep> pool;
  auto absorb = [&](const ModuleRep& m) {
    if (m.total_dim() == 0) return false;
    bool grew = false;
    for (const auto& s : decompose(m, dopts)) {
      bool seen = false;
      for (const auto& p : pool)
        if (p.dims == s.mod.dims && is_isomorphic(p, s.mod, iso)) {
          seen = true;
          break;
        }
      if (!seen) {
        pool.push_back(s.mod);
        grew = true;
      }
    }
    return grew;
  };
  for (const auto& s : seeds) absorb(s);
  for (int round = 0; round < max_rounds; ++round) {
    bool grew = false;
    std::vector<ModuleRep> snapshot = pool;
    for (const auto& m : snapshot) {
      grew |= absorb(tau(m, ctx));
      grew |= absorb(tau_minus(m, ctx));
      grew |= absorb(radical_submodule(m).mod);
      grew |= absorb(top_quotient(m).mod);
      grew |= absorb(socle_submodule(m).mod);
      grew |= absorb(cokernel(socle_submodule(m).map).mod);
      grew |= absorb(kernel(projective_cover(m)).mod);
      grew |= absorb(cokernel(injective_envelope(m)).mod);
      if (pool.size() > cap)
        throw SearchLimit("indecomposable_closure exceeded cap");
    }
    for (size_t i = 0; i < snapshot.size(); ++i)
      for (size_t j = 0; j < snapshot.size(); ++j) {
        for (const auto& ses :
             extensions_from_cocycles(snapshot[i], snapshot[j]))
          grew |= absorb(ses.mid());
        if (pool.size() > cap)
          throw SearchLimit("indecomposable_closure exceeded cap");
      }
    if (!grew) break;
  }
  std::sort(pool.begin(), pool.end(),
            [](const ModuleRep& a, const ModuleRep& b) {
              if (a.total_dim() != b.total_dim())
                return a.total_dim() < b.total_dim();
              if (a.dims != b.dims) return a.dims < b.dims;
              return a.name < b.name;
            });
  return pool;
}

}  // namespace qmod
