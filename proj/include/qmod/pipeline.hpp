#pragma once

#include "qmod/endalg.hpp"
#include "qmod/fixtures.hpp"
#include "qmod/io.hpp"
#include "qmod/tilting.hpp"

namespace qmod {

struct StageReport {
  std::string name;
  bool pass = false;
  std::vector<std::string> lines;
};

struct PipelineReport {
  std::string pipeline;
  std::string config_path;
  std::string field_name;
  std::uint64_t seed = 0;
  std::vector<StageReport> stages;

  bool overall() const;
  StageReport& stage(const std::string& name);
  std::string render_text() const;
  std::string render_csv() const;
  Json to_json() const;
};

struct PipelineOptions {
  std::uint64_t seed = 0;
  int depth = 8;
  int ext_bound = 6;
  std::uint64_t enum_prime = 2;
  std::uint64_t enum_budget = 2000000;
  int id_bound = 8;
};

/// Shared pipeline inputs resolved from a config file.
struct PipelineConfig {
  std::string pipeline;  // "main1" or "main2"
  std::filesystem::path config_path;
  std::filesystem::path algebra_file;
  std::vector<std::filesystem::path> module_files;  // M (main1) or G summands
  std::filesystem::path fixture_dir;
  std::filesystem::path gamma_fixture_dir;  // optional
  std::string subcat_mode = "sub";          // "sub" (Sub M) or "add" (add M)
  Field field = Field::rationals();
  PipelineOptions opts;
  Json expect;  // frozen expected values; empty object if none

  static PipelineConfig load(const std::filesystem::path& file,
                             const std::optional<Field>& field_override,
                             const std::optional<std::uint64_t>& seed_override);
};

/// The deterministic constructions shared by the pipeline and the fixture
/// generator: subcategory, relative projectives/injectives, stable
/// endomorphism algebra and the cotilting candidate.
struct Main1Setup {
  SubcatSpec csub;
  std::vector<ModuleRep> expected_proj, expected_inj;
  std::vector<ModuleRep> m_hat, n_hat;  // generator summand orders
  std::vector<ModuleRep> nonzero;       // fixtures surviving the quotient
  EndPresentation end;
  ModuleRep u;
};

Main1Setup main1_setup(const AlgebraCtx& ctx, const ModuleRep& m,
                       const std::vector<ModuleRep>& fixtures,
                       const std::string& subcat_mode,
                       const PipelineOptions& opts);

struct Main2Setup {
  std::vector<ModuleRep> c_summands;
  EndPresentation end;
  ModuleRep u;
};

Main2Setup main2_setup(const AlgebraCtx& ctx,
                       const std::vector<ModuleRep>& g_summands,
                       const PipelineOptions& opts);

PipelineReport pipeline_main1(const PipelineConfig& cfg);
PipelineReport pipeline_main2(const PipelineConfig& cfg);
PipelineReport run_pipeline(const PipelineConfig& cfg);

/// Loads the frozen gamma-side fixture modules over the constructed
/// endomorphism algebra, verifying the manifest fingerprint and checksums.
std::vector<ModuleRep> load_gamma_fixtures(const std::filesystem::path& dir,
                                           const AlgebraPtr& gamma, Field f);

}  // namespace qmod
