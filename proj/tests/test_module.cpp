#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qmod/fixtures.hpp"
#include "qmod/module.hpp"

using namespace qmod;

namespace {

const Field Q = Field::rationals();
const Field F2 = Field::prime(2);

// Exhaustive Hom oracle over F_2: counts all vertex-map tuples that commute
// with every arrow. Returns log2 of the count, i.e. the dimension.
int brute_hom_dim_f2(const ModuleRep& m, const ModuleRep& n) {
  std::vector<std::pair<int, int>> cells;  // (vertex, flat entry index)
  for (size_t v = 0; v < m.dims.size(); ++v)
    for (int k = 0; k < m.dims[v] * n.dims[v]; ++k)
      cells.push_back({static_cast<int>(v), k});
  REQUIRE(cells.size() <= 20);
  long long count = 0;
  for (long long mask = 0; mask < (1ll << cells.size()); ++mask) {
    ModuleMap g = zero_map(m, n);
    for (size_t t = 0; t < cells.size(); ++t) {
      if (!(mask >> t & 1)) continue;
      auto [v, k] = cells[t];
      g.f[v].at(k / m.dims[v], k % m.dims[v]) = Scalar::one(F2);
    }
    bool ok = true;
    const Quiver& q = m.alg->quiver;
    for (size_t a = 0; a < q.arrows.size() && ok; ++a) {
      int i = q.arrows[a].src, j = q.arrows[a].tgt;
      if (g.f[j] * m.arrow_mat[a] != n.arrow_mat[a] * g.f[i]) ok = false;
    }
    if (ok) ++count;
  }
  int d = 0;
  while ((1ll << d) < count) ++d;
  REQUIRE((1ll << d) == count);
  return d;
}

}  // namespace

TEST_CASE("projective dimensions over A4 follow reachable intervals") {
  auto a = path_algebra_linear(4, Q);
  for (int v = 0; v < 4; ++v) {
    auto p = projective_module(a, v);
    CHECK(p.total_dim() == v + 1);
    for (int w = 0; w < 4; ++w) CHECK(p.dims[w] == (w <= v ? 1 : 0));
  }
}

TEST_CASE("every Nakayama projective has total dimension 4") {
  auto a = nakayama_algebra(3, 4, Q);
  for (int v = 0; v < 3; ++v)
    CHECK(projective_module(a, v).total_dim() == 4);
}

TEST_CASE("Yoneda: dim Hom(P(i), M) equals the dimension of M at i") {
  auto a = path_algebra_linear(4, Q);
  auto fixtures = interval_fixtures(a);
  for (int v = 0; v < 4; ++v) {
    auto p = projective_module(a, v);
    for (const auto& m : fixtures) CHECK(hom_dim(p, m) == m.dims[v]);
  }
  auto nak = nakayama_algebra(3, 4, Q);
  for (int v = 0; v < 3; ++v) {
    auto p = projective_module(nak, v);
    for (const auto& m : serial_fixtures(nak, 4))
      CHECK(hom_dim(p, m) == m.dims[v]);
  }
}

TEST_CASE("simples have scalar endomorphisms and no cross homs") {
  auto a = path_algebra_linear(4, Q);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(hom_dim(simple_module(a, i), simple_module(a, j)) ==
            (i == j ? 1 : 0));
}

TEST_CASE("commutation solver agrees with the exhaustive F_2 oracle") {
  auto a = path_algebra_linear(4, F2);
  auto fixtures = interval_fixtures(a);
  for (const auto& m : fixtures)
    for (const auto& n : fixtures)
      CHECK(hom_dim(m, n) == brute_hom_dim_f2(m, n));
}

TEST_CASE("kernel of identity and of zero maps") {
  auto a = path_algebra_linear(4, Q);
  auto m = interval_module(a, 0, 2);
  CHECK(kernel(identity_map(m)).mod.total_dim() == 0);
  auto z = zero_map(m, interval_module(a, 1, 3));
  CHECK(kernel(z).mod.dims == m.dims);
  CHECK(cokernel(z).mod.dims == std::vector<int>{0, 1, 1, 1});
}

TEST_CASE("cokernel of P(0) into P(1) is the simple at 1") {
  auto a = path_algebra_linear(4, Q);
  auto p0 = projective_module(a, 0);
  auto p1 = projective_module(a, 1);
  auto homs = hom_space(p0, p1);
  REQUIRE(homs.size() == 1);
  auto c = cokernel(homs[0]);
  CHECK(c.mod.dims == simple_module(a, 1).dims);
  c.mod.validate();
}

TEST_CASE("radical, socle and top behave on canonical inputs") {
  auto a = path_algebra_linear(4, Q);
  CHECK(radical_submodule(simple_module(a, 2)).mod.total_dim() == 0);
  for (int v = 0; v < 4; ++v) {
    auto p = projective_module(a, v);
    auto t = top_quotient(p);
    CHECK(t.mod.dims == simple_module(a, v).dims);
  }
  auto p3 = projective_module(a, 3);
  CHECK(socle_submodule(p3).mod.dims == simple_module(a, 0).dims);
}

TEST_CASE("projective covers: isomorphism for projectives, P(0) kernel") {
  auto a = path_algebra_linear(4, Q);
  for (int v = 0; v < 4; ++v) {
    auto p = projective_module(a, v);
    auto cover = projective_cover(p);
    CHECK(cover.is_isomorphism());
  }
  auto s1 = simple_module(a, 1);
  auto cover = projective_cover(s1);
  CHECK(cover.source.dims == projective_module(a, 1).dims);
  auto k = kernel(cover);
  CHECK(k.mod.dims == projective_module(a, 0).dims);
}

TEST_CASE("injective envelope of the sink simple has total dimension 4") {
  auto a = path_algebra_linear(4, Q);
  auto env = injective_envelope(simple_module(a, 0));
  CHECK(env.target.dims == std::vector<int>{1, 1, 1, 1});
  CHECK(env.target.dims == injective_module(a, 0).dims);
  CHECK(env.is_injective());
}

TEST_CASE("dualize: simples fixed, projectives to injectives, involution") {
  auto a = path_algebra_linear(4, Q);
  auto op = opposite_algebra(a);
  for (int v = 0; v < 4; ++v) {
    auto ds = dualize(simple_module(a, v), op);
    CHECK(ds.dims == simple_module(op, v).dims);
    auto dp = dualize(projective_module(a, v), op);
    CHECK(dp.dims == injective_module(op, v).dims);
    CHECK(dp.total_dim() == projective_module(a, v).total_dim());
    auto top_dims = top_quotient(projective_module(a, v)).mod.dims;
    CHECK(socle_submodule(dp).mod.dims == top_dims);
  }
  auto m = interval_module(a, 1, 2);
  auto dd = dualize(dualize(m, op), opposite_algebra(op));
  CHECK(dd.dims == m.dims);
  CHECK(dd.arrow_mat == m.arrow_mat);
}

TEST_CASE("short exact sequence validation") {
  auto a = path_algebra_linear(4, Q);
  auto p1 = projective_module(a, 1);
  auto incl = hom_space(projective_module(a, 0), p1)[0];
  auto s = ses_from_incl(incl);
  s.validate();
  CHECK(s.quot().dims == simple_module(a, 1).dims);
  auto sp = split_ses(simple_module(a, 0), simple_module(a, 2));
  sp.validate();
  CHECK(sp.mid().total_dim() == 2);
}

TEST_CASE("is_isomorphic: positives, certified negatives") {
  auto a = path_algebra_linear(4, Q);
  auto m = interval_module(a, 0, 2);
  CHECK(is_isomorphic(m, m));
  CHECK(!is_isomorphic(m, interval_module(a, 0, 1)));
  CHECK(!is_isomorphic(interval_module(a, 0, 1), interval_module(a, 1, 2)));
}

TEST_CASE("decompose: doubled summand and the regular module") {
  auto a = path_algebra_linear(4, Q);
  auto p0 = projective_module(a, 0);
  auto doubled = decompose(direct_sum({p0, p0}));
  REQUIRE(doubled.size() == 1);
  CHECK(doubled[0].multiplicity == 2);
  CHECK(is_isomorphic(doubled[0].mod, p0));

  auto reg = decompose(regular_module(a));
  REQUIRE(reg.size() == 4);
  for (const auto& s : reg) CHECK(s.multiplicity == 1);
  for (int v = 0; v < 4; ++v) {
    bool found = false;
    for (const auto& s : reg)
      if (s.mod.dims == projective_module(a, v).dims) found = true;
    CHECK(found);
  }
}

TEST_CASE("decompose over F_1009 and F_2 certifies indecomposables") {
  for (Field f : {Field::prime(1009), F2}) {
    auto a = nakayama_algebra(3, 4, f);
    auto fixtures = serial_fixtures(a, 4);
    for (const auto& m : fixtures) {
      auto parts = decompose(m);
      REQUIRE(parts.size() == 1);
      CHECK(parts[0].multiplicity == 1);
    }
    auto two = decompose(direct_sum({fixtures[0], fixtures[4]}));
    CHECK(two.size() == 2);
  }
}

TEST_CASE("in_add_of matches membership in a summand pool") {
  auto a = path_algebra_linear(4, Q);
  std::vector<ModuleRep> pool{projective_module(a, 0),
                              projective_module(a, 1)};
  CHECK(in_add_of(direct_sum({pool[0], pool[1], pool[0]}), pool));
  CHECK(!in_add_of(simple_module(a, 1), pool));
  CHECK(in_add_of(zero_module(a), pool));
}

TEST_CASE("rank bookkeeping: dims(M) = dims(ker f) + dims(im f)") {
  auto a = nakayama_algebra(3, 4, Q);
  auto fixtures = serial_fixtures(a, 4);
  for (const auto& m : fixtures)
    for (const auto& n : fixtures)
      for (const auto& f : hom_space(m, n)) {
        auto k = kernel(f);
        auto im = image(f);
        for (size_t v = 0; v < m.dims.size(); ++v)
          CHECK(m.dims[v] == k.mod.dims[v] + im.mod.dims[v]);
      }
}

TEST_CASE("module validation rejects a relation violation") {
  auto a = nakayama_algebra(3, 4, Q);
  std::vector<int> dims(3, 1);
  std::vector<Mat> mats;
  for (int k = 0; k < 3; ++k) mats.push_back(Mat::identity(1, Q));
  CHECK_THROWS_AS(make_module(a, dims, mats), ValidationError);
}

TEST_CASE("hom across algebras is rejected") {
  auto a = path_algebra_linear(4, Q);
  auto b = path_algebra_linear(4, Q);  // distinct object
  CHECK_THROWS_AS(hom_space(simple_module(a, 0), simple_module(b, 0)),
                  ValidationError);
}
