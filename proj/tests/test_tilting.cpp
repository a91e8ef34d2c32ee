#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qmod/fixtures.hpp"
#include "qmod/tilting.hpp"

using namespace qmod;

namespace {
const Field Q = Field::rationals();

std::vector<ModuleRep> injectives_of(const AlgebraPtr& a) {
  std::vector<ModuleRep> out;
  for (int v = 0; v < a->quiver.num_vertices; ++v)
    out.push_back(injective_module(a, v));
  return out;
}

std::vector<ModuleRep> projectives_of(const AlgebraPtr& a) {
  std::vector<ModuleRep> out;
  for (int v = 0; v < a->quiver.num_vertices; ++v)
    out.push_back(projective_module(a, v));
  return out;
}

}  // namespace

TEST_CASE("injective dimension basics") {
  auto a = path_algebra_linear(4, Q);
  for (int v = 0; v < 4; ++v) {
    auto d = injective_dimension(injective_module(a, v), 4);
    CHECK(!d.exceeded);
    CHECK(d.value == 0);
  }
  // hereditary: everything has id <= 1
  for (const auto& m : interval_fixtures(a)) {
    auto d = injective_dimension(m, 4);
    CHECK(!d.exceeded);
    CHECK(d.value <= 1);
  }
  // self-injective: non-injectives exceed any bound
  auto nak = nakayama_algebra(3, 4, Q);
  CHECK(injective_dimension(simple_module(nak, 0), 6).exceeded);
}

TEST_CASE("projectives and injective cogenerators are self-orthogonal") {
  auto a = path_algebra_linear(4, Q);
  CHECK(is_self_orthogonal(regular_module(a), 4).pass);
  CHECK(is_self_orthogonal(direct_sum(injectives_of(a)), 4).pass);
  // a non-example: S(0) + S(1) has a nonsplit extension
  auto bad = direct_sum({simple_module(a, 0), simple_module(a, 1)});
  CHECK(!is_self_orthogonal(bad, 4).pass);
}

TEST_CASE("cohat against the injectives reproduces injective dimension") {
  auto a = path_algebra_linear(4, Q);
  auto inj = injectives_of(a);
  for (const auto& m : interval_fixtures(a)) {
    auto w = cohat_membership(m, inj, 6);
    REQUIRE(w.found);
    auto d = injective_dimension(m, 6);
    CHECK(w.length == d.value);
  }
}

TEST_CASE("hat against the projectives reproduces projective dimension") {
  auto a = path_algebra_linear(4, Q);
  auto proj = projectives_of(a);
  for (const auto& m : interval_fixtures(a)) {
    auto w = hat_membership(m, proj, 6);
    REQUIRE(w.found);
    auto d = projective_dimension(m, 6);
    CHECK(w.length == d.value);
  }
}

TEST_CASE("DA is 0-cotilting") {
  auto a = path_algebra_linear(4, Q);
  auto da = direct_sum(injectives_of(a));
  da.name = "DA";
  auto rep = is_cotilting(da, 0, 4);
  CHECK(rep.pass);
  CHECK(rep.n == 0);
}

TEST_CASE("the regular module is 0-cotilting over the self-injective algebra") {
  auto nak = nakayama_algebra(3, 4, Q);
  auto reg = regular_module(nak);
  auto rep = is_cotilting(reg, 0, 4);
  CHECK(rep.pass);
}

TEST_CASE("the regular module is 1-cotilting but not 0-cotilting over A4") {
  auto a = path_algebra_linear(4, Q);
  auto reg = regular_module(a);
  CHECK(!is_cotilting(reg, 0, 4).pass);
  CHECK(is_cotilting(reg, 1, 4).pass);
}

TEST_CASE("perp membership: projectives always belong, u itself belongs") {
  auto a = path_algebra_linear(4, Q);
  auto u = regular_module(a);  // self-orthogonal with finite id
  for (int v = 0; v < 4; ++v)
    CHECK(perp_membership(projective_module(a, v), u, 4).member);
  CHECK(perp_membership(u, u, 4).member);
}

TEST_CASE("perp census for the regular A4 module") {
  auto a = path_algebra_linear(4, Q);
  auto u = regular_module(a);
  // Ext^1(X, A) = 0 over the hereditary algebra iff ... computed honestly:
  // count members among all ten intervals
  auto members = perp_fixture_list(interval_fixtures(a), u, 4);
  // the four projective intervals certainly belong
  CHECK(members.size() >= 4);
  for (int idx : members) {
    auto m = interval_fixtures(a)[idx];
    CHECK(ext_dim(m, u, 1) == 0);
  }
}

TEST_CASE("xw membership with w = add DA accepts every module") {
  auto a = path_algebra_linear(4, Q);
  auto inj = injectives_of(a);
  for (const auto& m : interval_fixtures(a)) {
    auto w = xw_membership(m, inj, 8, 4);
    CHECK(w.verdict == XwWitness::Verdict::Member);
  }
}

TEST_CASE("gorenstein projectives: every Nakayama fixture via periodicity") {
  auto nak = nakayama_algebra(3, 4, Q);
  auto proj = projectives_of(nak);
  auto bound = perp_check_bound(proj, 6);
  // self-injective: id A = 0 certifies the bound
  REQUIRE(bound);
  for (const auto& m : serial_fixtures(nak, 4)) {
    auto w = xw_membership(m, proj, 8, std::max(*bound, 1));
    CHECK(w.verdict == XwWitness::Verdict::Member);
    if (m.total_dim() < 4) CHECK(w.periodic);  // non-projectives cycle
  }
}

TEST_CASE("gorenstein projectives of the hereditary algebra are projective") {
  auto a = path_algebra_linear(4, Q);
  auto proj = projectives_of(a);
  auto bound = perp_check_bound(proj, 6);
  REQUIRE(bound);
  for (const auto& m : interval_fixtures(a)) {
    bool is_proj = m.dims[0] == 1;  // intervals [0..k]
    auto w = xw_membership(m, proj, 8, std::max(*bound, 1));
    CHECK((w.verdict == XwWitness::Verdict::Member) == is_proj);
  }
}

TEST_CASE("wakamatsu tilting: add A and add DA always qualify") {
  for (auto a : {path_algebra_linear(4, Q), nakayama_algebra(3, 4, Q)}) {
    auto w1 = is_wakamatsu_tilting(projectives_of(a), 8, 4);
    CHECK(w1.pass);
    auto w2 = is_wakamatsu_tilting(injectives_of(a), 8, 4);
    CHECK(w2.pass);
  }
}

TEST_CASE("wakamatsu tilting fails for a lone simple over A4") {
  auto a = path_algebra_linear(4, Q);
  auto w = is_wakamatsu_tilting({simple_module(a, 0)}, 8, 4);
  CHECK(!w.pass);
}

TEST_CASE("torsionfree class check flags the injective list") {
  auto a = path_algebra_linear(4, Q);
  auto ap = algebra_mod_p(a, 2);
  auto inj = injectives_of(a);
  std::vector<ModuleRep> inj_p;
  for (const auto& m : inj) inj_p.push_back(module_mod_p(m, ap));
  auto rep = torsionfree_class_check(inj, inj_p, 100000);
  // submodules of I(0) include non-injective intervals
  CHECK(!rep.submodule_closed);
}

TEST_CASE("torsionfree class check accepts the full module list") {
  auto a = path_algebra_linear(4, Q);
  auto ap = algebra_mod_p(a, 2);
  auto all = interval_fixtures(a);
  std::vector<ModuleRep> all_p;
  for (const auto& m : all) all_p.push_back(module_mod_p(m, ap));
  auto rep = torsionfree_class_check(all, all_p, 200000);
  CHECK(rep.extension_closed);
  CHECK(rep.submodule_closed);
}

TEST_CASE("dimension shift: resolving by perp members lands in perp") {
  // for self-orthogonal w with id <= n: kernels of deflation chains with
  // perp members stay in perp (sampled on the hereditary fixtures)
  auto a = path_algebra_linear(4, Q);
  auto u = regular_module(a);
  auto fixtures = interval_fixtures(a);
  auto members = perp_fixture_list(fixtures, u, 4);
  for (const auto& s : fixture_conflations(fixtures, 100)) {
    bool mid_in = perp_membership(s.mid(), u, 4).member;
    bool quot_in = perp_membership(s.quot(), u, 4).member;
    if (mid_in && quot_in)
      CHECK(perp_membership(s.sub(), u, 4).member);  // resolving property
  }
  (void)members;
}
