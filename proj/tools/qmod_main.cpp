// Command-line interface: inspect algebras and modules, run homological
// computations, verify cotilting conditions and run the end-to-end
// pipelines. Exit codes: 0 pass, 1 verification failed, 2 error.

#include "qmod/pipeline.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace qmod;

namespace {

struct GlobalOpts {
  std::string field = "q";
  std::uint64_t seed = 0;
  Field parsed_field() const { return Field::parse(field); }
};

SubcatSpec load_subcat(Workspace& ws, const std::filesystem::path& file,
                       std::uint64_t seed) {
  Json j = parse_json_file(file);
  if (j.value("format", "") != "qmod-subcat/1")
    throw ValidationError(file.string() + ": not a qmod-subcat/1 file");
  std::vector<ModuleRep> gens;
  for (const auto& p : j.at("modules"))
    gens.push_back(ws.load_module(file.parent_path() / p.get<std::string>()));
  DecomposeOptions dopts;
  dopts.seed = seed;
  SubcatSpec s = SubcatSpec::make(gens, dopts);
  s.submodule_closed = j.value("assert_submodule_closed", false);
  s.quotient_closed = j.value("assert_quotient_closed", false);
  return s;
}

ShortExactSeq load_ses(Workspace& ws, const std::filesystem::path& file) {
  Json j = parse_json_file(file);
  if (j.value("format", "") != "qmod-ses/1")
    throw ValidationError(file.string() + ": not a qmod-ses/1 file");
  auto base = file.parent_path();
  ModuleRep sub = ws.load_module(base / j.at("sub").get<std::string>());
  ModuleRep mid = ws.load_module(base / j.at("mid").get<std::string>());
  ModuleRep quot = ws.load_module(base / j.at("quot").get<std::string>());
  Field f = ws.field();
  auto read_map = [&](const Json& arr, const ModuleRep& s,
                      const ModuleRep& t) {
    ModuleMap g = zero_map(s, t);
    for (size_t v = 0; v < s.dims.size(); ++v) {
      const Json& mat = arr.at(v);
      for (int r = 0; r < t.dims[v]; ++r)
        for (int c = 0; c < s.dims[v]; ++c) {
          const Json& cell = mat.at(r).at(c);
          g.f[v].at(r, c) = cell.is_string()
                                ? Scalar::parse(f, cell.get<std::string>())
                                : Scalar(f, cell.get<long long>());
        }
    }
    g.validate();
    return g;
  };
  ShortExactSeq s{read_map(j.at("incl"), sub, mid),
                  read_map(j.at("proj"), mid, quot)};
  s.validate();
  return s;
}

int render_report(const PipelineReport& rep, const std::string& format,
                  const std::string& out_json) {
  if (!out_json.empty())
    write_text_file(out_json, rep.to_json().dump(2) + "\n");
  if (format == "json")
    std::cout << rep.to_json().dump(2) << "\n";
  else if (format == "csv")
    std::cout << rep.render_csv();
  else
    std::cout << rep.render_text();
  return rep.overall() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-dimensional quiver algebra toolkit"};
  app.require_subcommand(1);
  GlobalOpts g;
  app.add_option("--field", g.field, "computation field: q or p=<prime>");
  app.add_option("--seed", g.seed, "seed for randomized searches");

  std::string file_a, file_b, file_c, subcat_file, out_json;
  std::string format = "text";
  int max_i = 4, n_opt = -1, index = 0;
  std::vector<std::string> summand_files;
  bool stable = false;

  auto* alg = app.add_subcommand("algebra", "algebra file operations");
  auto* alg_check = alg->add_subcommand("check", "validate an algebra file");
  alg_check->add_option("file", file_a)->required();
  auto* alg_info = alg->add_subcommand("info", "print basis and dimensions");
  alg_info->add_option("file", file_a)->required();

  auto* mod = app.add_subcommand("module", "module file operations");
  auto* mod_validate = mod->add_subcommand("validate", "relation check");
  mod_validate->add_option("file", file_a)->required();
  auto* mod_dec = mod->add_subcommand("decompose", "indecomposable summands");
  mod_dec->add_option("file", file_a)->required();
  auto* mod_tau = mod->add_subcommand("tau", "Auslander-Reiten translate");
  mod_tau->add_option("file", file_a)->required();
  auto* mod_dual = mod->add_subcommand("dual", "Matlis dual over the opposite");
  mod_dual->add_option("file", file_a)->required();

  auto* hom = app.add_subcommand("hom", "dimension and basis of Hom(x, y)");
  hom->add_option("x", file_a)->required();
  hom->add_option("y", file_b)->required();

  auto* ext = app.add_subcommand("ext", "Ext dimensions");
  ext->add_option("x", file_a)->required();
  ext->add_option("y", file_b)->required();
  ext->add_option("--max-i", max_i, "highest degree");

  auto* conf = app.add_subcommand("conflation", "conflation tests");
  auto* conf_check = conf->add_subcommand("check", "certify against a structure");
  conf_check->add_option("ses", file_a)->required();
  conf_check->add_option("--structure", file_b,
                         "subcat file; kind from --kind")->required();
  std::string kind = "both";
  conf_check->add_option("--kind", kind, "from|to|both|full");

  auto* quot = app.add_subcommand("quotient", "ideal quotient computations");
  auto* quot_hom = quot->add_subcommand("hom", "Hom modulo [C]");
  quot_hom->add_option("x", file_a)->required();
  quot_hom->add_option("y", file_b)->required();
  quot_hom->add_option("--subcat", subcat_file)->required();
  auto* quot_factor = quot->add_subcommand(
      "factor", "deflation-mono factorization of a coset basis morphism");
  quot_factor->add_option("x", file_a)->required();
  quot_factor->add_option("y", file_b)->required();
  quot_factor->add_option("--subcat", subcat_file)->required();
  quot_factor->add_option("--index", index, "coset basis index");
  quot_factor->add_option("--fixtures", file_c, "test object directory")
      ->required();

  auto* cot = app.add_subcommand("cotilt", "cotilting verification");
  auto* cot_verify = cot->add_subcommand("verify", "three-condition check");
  cot_verify->add_option("u", file_a)->required();
  cot_verify->add_option("-n", n_opt, "target n (default: id found)");

  auto* perp = app.add_subcommand("perp", "Ext-orthogonal category");
  auto* perp_census = perp->add_subcommand("census", "membership census");
  perp_census->add_option("u", file_a)->required();
  perp_census->add_option("fixture_dir", file_b)->required();

  auto* endalg_cmd = app.add_subcommand("endalg", "endomorphism algebra");
  endalg_cmd->add_option("summands", summand_files, "module files")->required();
  endalg_cmd->add_option("--stable", subcat_file, "subcat file for Hom/[C]");
  endalg_cmd->add_flag("--export", stable, "")->ignore_case();  // reserved
  endalg_cmd->remove_option(endalg_cmd->get_option("--export"));
  stable = false;

  auto* pipe = app.add_subcommand("pipeline", "end-to-end theorem pipelines");
  auto* pipe_main1 = pipe->add_subcommand("main1", "ideal quotient pipeline");
  pipe_main1->add_option("config", file_a)->required();
  pipe_main1->add_option("--format", format, "text|csv|json");
  pipe_main1->add_option("--report", out_json, "write JSON report here");
  auto* pipe_main2 = pipe->add_subcommand("main2", "generator pipeline");
  pipe_main2->add_option("config", file_a)->required();
  pipe_main2->add_option("--format", format, "text|csv|json");
  pipe_main2->add_option("--report", out_json, "write JSON report here");

  auto* report = app.add_subcommand("report", "re-render a saved JSON report");
  report->add_option("file", file_a)->required();
  report->add_option("--format", format, "text|csv|json");

  CLI11_PARSE(app, argc, argv);

  try {
    Workspace ws(g.parsed_field());
    if (*alg_check || *alg_info) {
      AlgebraPtr a = ws.load_algebra(file_a);
      if (!a->check_associativity())
        throw ValidationError("multiplication table not associative");
      std::cout << "algebra ok: dim " << a->dim << ", "
                << a->quiver.num_vertices << " vertices, "
                << a->quiver.arrows.size() << " arrows\n";
      if (*alg_info) {
        for (int i = 0; i < a->dim; ++i)
          std::cout << "  b" << i << " = " << a->basis_name[i] << " : "
                    << a->basis_src[i] << "->" << a->basis_tgt[i] << "\n";
      }
      return 0;
    }
    if (*mod_validate) {
      ModuleRep m = ws.load_module(file_a);
      std::cout << "module ok: " << m.name << " total dim " << m.total_dim()
                << "\n";
      return 0;
    }
    if (*mod_dec) {
      ModuleRep m = ws.load_module(file_a);
      DecomposeOptions dopts;
      dopts.seed = g.seed;
      for (const auto& s : decompose(m, dopts)) {
        std::cout << "summand dims [";
        for (size_t v = 0; v < s.mod.dims.size(); ++v)
          std::cout << (v ? "," : "") << s.mod.dims[v];
        std::cout << "] multiplicity " << s.multiplicity << " ("
                  << s.certificate << ")\n";
      }
      return 0;
    }
    if (*mod_tau) {
      ModuleRep m = ws.load_module(file_a);
      AlgebraCtx ctx(m.alg);
      ModuleRep t = tau(m, ctx);
      std::cout << module_to_json_inline(t).dump(2) << "\n";
      return 0;
    }
    if (*mod_dual) {
      ModuleRep m = ws.load_module(file_a);
      ModuleRep d = dualize(m, opposite_algebra(m.alg));
      std::cout << module_to_json_inline(d).dump(2) << "\n";
      return 0;
    }
    if (*hom) {
      ModuleRep x = ws.load_module(file_a), y = ws.load_module(file_b);
      std::cout << "dim Hom = " << hom_dim(x, y) << "\n";
      return 0;
    }
    if (*ext) {
      ModuleRep x = ws.load_module(file_a), y = ws.load_module(file_b);
      for (int i = 0; i <= max_i; ++i)
        std::cout << "ext^" << i << " = " << ext_dim(x, y, i) << "\n";
      return 0;
    }
    if (*conf_check) {
      ShortExactSeq s = load_ses(ws, file_a);
      SubcatSpec sub = load_subcat(ws, file_b, g.seed);
      ExactKind k = kind == "from"  ? ExactKind::FromC
                    : kind == "to"  ? ExactKind::ToC
                    : kind == "full" ? ExactKind::Full
                                     : ExactKind::BothC;
      bool ok = is_conflation(s, {k, sub});
      std::cout << (ok ? "conflation certified" : "not a conflation") << "\n";
      return ok ? 0 : 1;
    }
    if (*quot_hom) {
      ModuleRep x = ws.load_module(file_a), y = ws.load_module(file_b);
      SubcatSpec sub = load_subcat(ws, subcat_file, g.seed);
      QuotientHom q = quotient_hom(x, y, sub);
      std::cout << "dim Hom = " << q.hom_dim() << ", ideal = " << q.ideal_dim()
                << ", coset = " << q.coset_dim() << "\n";
      return 0;
    }
    if (*quot_factor) {
      ModuleRep x = ws.load_module(file_a), y = ws.load_module(file_b);
      SubcatSpec sub = load_subcat(ws, subcat_file, g.seed);
      auto fixtures = ws.load_module_dir(file_c);
      QuotientHom q = quotient_hom(x, y, sub);
      if (index < 0 || index >= q.coset_dim())
        throw Error("coset index out of range");
      auto z =
          zero_kernel_factorization(q.coset_basis[index], sub, fixtures, g.seed);
      std::cout << (z.ok ? "factorization certified" : "FAILED: " + z.failure)
                << "\n";
      return z.ok ? 0 : 1;
    }
    if (*cot_verify) {
      ModuleRep u = ws.load_module(file_a);
      auto idu = injective_dimension(u, 8);
      if (idu.exceeded) {
        std::cout << "id exceeds bound 8\n";
        return 1;
      }
      int n = n_opt >= 0 ? n_opt : idu.value;
      auto repc = is_cotilting(u, n, std::max(8, n), g.seed);
      std::cout << "id U = " << idu.value << "\n";
      std::cout << "self-orthogonal: " << (repc.self_orth.pass ? "yes" : "no")
                << "\n";
      std::cout << (repc.pass ? "pass" : "fail") << ", n = " << n << "\n";
      return repc.pass ? 0 : 1;
    }
    if (*perp_census) {
      ModuleRep u = ws.load_module(file_a);
      auto fixtures = ws.load_module_dir(file_b);
      auto members = perp_fixture_list(fixtures, u, 8);
      std::cout << "census " << members.size() << "/" << fixtures.size()
                << "\n";
      for (int idx : members) std::cout << "  " << fixtures[idx].name << "\n";
      return 0;
    }
    if (*endalg_cmd) {
      std::vector<ModuleRep> gs;
      for (const auto& p : summand_files) gs.push_back(ws.load_module(p));
      EndPresentation e;
      if (!subcat_file.empty()) {
        SubcatSpec sub = load_subcat(ws, subcat_file, g.seed);
        e = stable_end_algebra(gs, sub, g.seed);
      } else {
        e = end_algebra(gs, g.seed);
      }
      std::cout << "dim End = " << e.algebra->dim << "\n";
      std::cout << "Gabriel quiver: " << e.algebra->quiver.str() << "\n";
      for (const auto& r : recover_relations(e))
        std::cout << "relation: " << relation_str(e.algebra->quiver, r) << "\n";
      return 0;
    }
    if (*pipe_main1 || *pipe_main2) {
      auto cfg = PipelineConfig::load(
          file_a,
          app.count("--field") ? std::optional<Field>(g.parsed_field())
                               : std::nullopt,
          app.count("--seed") ? std::optional<std::uint64_t>(g.seed)
                              : std::nullopt);
      if (*pipe_main1 && cfg.pipeline != "main1")
        throw Error("config declares pipeline " + cfg.pipeline);
      if (*pipe_main2 && cfg.pipeline != "main2")
        throw Error("config declares pipeline " + cfg.pipeline);
      PipelineReport rep = run_pipeline(cfg);
      return render_report(rep, format, out_json);
    }
    if (*report) {
      Json j = parse_json_file(file_a);
      PipelineReport rep;
      rep.pipeline = j.value("pipeline", "");
      rep.config_path = j.value("config", "");
      rep.field_name = j.value("field", "");
      rep.seed = j.value("seed", 0ull);
      for (const auto& s : j.at("stages")) {
        StageReport st;
        st.name = s.at("name").get<std::string>();
        st.pass = s.at("pass").get<bool>();
        st.lines = s.at("lines").get<std::vector<std::string>>();
        rep.stages.push_back(std::move(st));
      }
      return render_report(rep, format, "");
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 2;
}
