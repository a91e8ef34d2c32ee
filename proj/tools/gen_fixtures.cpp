// Offline fixture generator: writes the example algebras, their
// indecomposable module corpora, the pipeline configs, and the frozen
// module lists over the constructed endomorphism algebras (with manifest
// checksums). Regenerate with:  qmod_genfixtures <output-root>

#include "qmod/pipeline.hpp"

#include <iostream>

using namespace qmod;
namespace fs = std::filesystem;

namespace {

const Field Q = Field::rationals();

void write_module_file(const fs::path& dir, const ModuleRep& m,
                       const std::string& algebra_ref) {
  Json j = module_to_json(m, algebra_ref);
  write_text_file(dir / (m.name + ".json"), j.dump(2) + "\n");
}

void write_corpus(const fs::path& dir, const AlgebraPtr& alg,
                  const std::string& alg_name,
                  const std::vector<ModuleRep>& modules) {
  fs::create_directories(dir);
  Json aj = algebra_to_json(*alg, alg_name);
  aj["max_path_length"] = 16;
  write_text_file(dir / "algebra.json", aj.dump(2) + "\n");
  for (const auto& m : modules) write_module_file(dir, m, "algebra.json");
  std::cout << dir.string() << ": " << modules.size() << " modules\n";
}

void write_gamma_dir(const fs::path& dir, const EndPresentation& e,
                     const std::vector<ModuleRep>& indecs) {
  fs::create_directories(dir);
  Json manifest;
  manifest["format"] = "qmod-manifest/1";
  manifest["algebra_fingerprint"] = e.algebra->fingerprint();
  manifest["generated_by"] = "qmod_genfixtures";
  manifest["note"] =
      "indecomposable modules over the constructed endomorphism algebra; "
      "enumerated by closure under translates, syzygies, radicals and "
      "extensions, then frozen";
  Json mods = Json::array();
  int idx = 0;
  for (const auto& m : indecs) {
    ModuleRep named = m;
    std::ostringstream nm;
    nm << "g" << idx++;
    for (int d : named.dims) nm << "_" << d;
    named.name = nm.str();
    Json j = module_to_json_inline(named);
    std::string text = j.dump(2) + "\n";
    std::string fname = named.name + ".json";
    write_text_file(dir / fname, text);
    Json entry;
    entry["file"] = fname;
    entry["checksum"] = content_checksum(text);
    mods.push_back(std::move(entry));
  }
  manifest["modules"] = std::move(mods);
  write_text_file(dir / "manifest.json", manifest.dump(2) + "\n");
  std::cout << dir.string() << ": " << indecs.size()
            << " gamma modules, fingerprint " << e.algebra->fingerprint()
            << "\n";
}

std::vector<ModuleRep> enumerate_gamma_indecs(const EndPresentation& e,
                                              size_t expected) {
  AlgebraCtx gctx(e.algebra);
  std::vector<ModuleRep> seeds;
  for (int v = 0; v < e.algebra->quiver.num_vertices; ++v) {
    seeds.push_back(projective_module(e.algebra, v));
    seeds.push_back(injective_module(e.algebra, v));
    seeds.push_back(simple_module(e.algebra, v));
  }
  auto indecs = indecomposable_closure(gctx, seeds, 10, 64);
  if (indecs.size() != expected)
    throw Error("gamma enumeration found " + std::to_string(indecs.size()) +
                " indecomposables, expected " + std::to_string(expected));
  return indecs;
}

void write_config(const fs::path& path, const Json& j) {
  fs::create_directories(path.parent_path());
  write_text_file(path, j.dump(2) + "\n");
  std::cout << path.string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  fs::path root = argc > 1 ? argv[1] : "fixtures";
  try {
    // ---- Lambda-side corpora ------------------------------------------
    auto a4 = path_algebra_linear(4, Q);
    write_corpus(root / "a4", a4, "a4", interval_fixtures(a4));

    auto nak = nakayama_algebra(3, 4, Q);
    write_corpus(root / "nakayama34", nak, "nakayama34",
                 serial_fixtures(nak, 4));

    auto a5 = path_algebra_linear(5, Q);
    write_corpus(root / "a5", a5, "a5", interval_fixtures(a5));

    // ---- configs -------------------------------------------------------
    Json main2;
    main2["format"] = "qmod-pipeline/1";
    main2["pipeline"] = "main2";
    main2["algebra"] = "../a4/algebra.json";
    main2["generator_summands"] =
        Json::array({"../a4/m_0_0.json", "../a4/m_0_1.json",
                     "../a4/m_0_2.json", "../a4/m_0_3.json",
                     "../a4/m_2_2.json"});
    main2["fixture_dir"] = "../a4";
    main2["gamma_fixture_dir"] = "../gamma_main2";
    main2["field"] = "q";
    main2["seed"] = 0;
    main2["expect"] = Json{{"lambda_fixture_count", 10},
                           {"gamma_dim", 12},
                           {"gamma_arrows", Json::array({Json::array({1, 0}),
                                                         Json::array({2, 1}),
                                                         Json::array({3, 2}),
                                                         Json::array({4, 2})})},
                           {"id_u", 2},
                           {"perp_census", 10},
                           {"gamma_fixture_count", 13}};
    write_config(root / "configs" / "a4-main2.json", main2);

    Json main1;
    main1["format"] = "qmod-pipeline/1";
    main1["pipeline"] = "main1";
    main1["algebra"] = "../nakayama34/algebra.json";
    main1["module"] = "../nakayama34/u_0_1.json";
    main1["fixture_dir"] = "../nakayama34";
    main1["gamma_fixture_dir"] = "../gamma_main1";
    main1["field"] = "q";
    main1["seed"] = 0;
    main1["expect"] = Json{{"lambda_fixture_count", 12},
                           {"quotient_indec_count", 11},
                           {"gamma_vertices", 4},
                           {"gamma_arrow_count", 5},
                           {"gamma_dim", 14},
                           {"perp_census", 11},
                           {"gamma_fixture_count", 18}};
    write_config(root / "configs" / "nakayama-main1.json", main1);

    Json neg;
    neg["format"] = "qmod-pipeline/1";
    neg["pipeline"] = "main1";
    neg["algebra"] = "../a5/algebra.json";
    neg["module"] = "../a5/m_1_3.json";
    neg["fixture_dir"] = "../a5";
    neg["subcat_mode"] = "add";
    neg["field"] = "q";
    neg["seed"] = 0;
    neg["expect"] = Json{{"lambda_fixture_count", 15},
                         {"submodule_closed", false},
                         {"expect_zero_kernel_failure", true}};
    write_config(root / "configs" / "a5-negative.json", neg);

    Json apr;
    apr["format"] = "qmod-pipeline/1";
    apr["pipeline"] = "main1";
    apr["algebra"] = "../a4/algebra.json";
    apr["module"] = "../a4/m_0_0.json";
    apr["fixture_dir"] = "../a4";
    apr["gamma_fixture_dir"] = "../gamma_apr";
    apr["field"] = "q";
    apr["seed"] = 0;
    // the expected quiver is the reflection of the linear quiver at its
    // sink: the incident arrow turns around, the rest stay; vertex order of
    // the stable generator is [P1, P2, P3, tau^- S(0)]
    apr["expect"] = Json{{"lambda_fixture_count", 10},
                         {"quotient_indec_count", 9},
                         {"gamma_vertices", 4},
                         {"gamma_dim", 8},
                         {"gamma_arrows", Json::array({Json::array({1, 0}),
                                                       Json::array({2, 1}),
                                                       Json::array({3, 0})})},
                         {"perp_census", 9},
                         {"gamma_fixture_count", 10}};
    write_config(root / "configs" / "a4-apr.json", apr);

    // ---- gamma-side corpora (constructed exactly as the pipelines do) --
    PipelineOptions opts;

    {
      Workspace ws(Q);
      AlgebraPtr lam = ws.load_algebra(root / "a4" / "algebra.json");
      AlgebraCtx ctx(lam);
      std::vector<ModuleRep> gs;
      for (const char* f : {"m_0_0", "m_0_1", "m_0_2", "m_0_3", "m_2_2"})
        gs.push_back(ws.load_module(root / "a4" / (std::string(f) + ".json")));
      auto setup = main2_setup(ctx, gs, opts);
      write_gamma_dir(root / "gamma_main2", setup.end,
                      enumerate_gamma_indecs(setup.end, 13));
    }

    {
      Workspace ws(Q);
      AlgebraPtr lam = ws.load_algebra(root / "nakayama34" / "algebra.json");
      AlgebraCtx ctx(lam);
      auto fixtures = ws.load_module_dir(root / "nakayama34");
      ModuleRep m = ws.load_module(root / "nakayama34" / "u_0_1.json");
      auto setup = main1_setup(ctx, m, fixtures, "sub", opts);
      write_gamma_dir(root / "gamma_main1", setup.end,
                      enumerate_gamma_indecs(setup.end, 18));
    }

    {
      Workspace ws(Q);
      AlgebraPtr lam = ws.load_algebra(root / "a4" / "algebra.json");
      AlgebraCtx ctx(lam);
      auto fixtures = ws.load_module_dir(root / "a4");
      ModuleRep m = ws.load_module(root / "a4" / "m_0_0.json");
      auto setup = main1_setup(ctx, m, fixtures, "sub", opts);
      write_gamma_dir(root / "gamma_apr", setup.end,
                      enumerate_gamma_indecs(setup.end, 10));
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 0;
}
