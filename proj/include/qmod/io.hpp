#pragma once

#include "qmod/module.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>

namespace qmod {

using Json = nlohmann::ordered_json;

/// Loads and caches algebras and modules from the declarative JSON formats.
/// The field is a workspace-wide choice: files carry integral (or fraction)
/// entries and are interpreted over the chosen field at load time.
class Workspace {
 public:
  explicit Workspace(Field f) : field_(f) {}

  Field field() const { return field_; }

  AlgebraPtr load_algebra(const std::filesystem::path& file);
  ModuleRep load_module(const std::filesystem::path& file);
  /// All *.json module files in a directory, sorted by filename.
  std::vector<ModuleRep> load_module_dir(const std::filesystem::path& dir);

 private:
  Field field_;
  std::map<std::string, AlgebraPtr> algebras_;
};

Json algebra_to_json(const BasedAlgebra& a, const std::string& name);
Json module_to_json(const ModuleRep& m, const std::string& algebra_ref);
/// Module over an in-memory algebra (no file reference), e.g. fixtures over
/// a constructed endomorphism algebra.
Json module_to_json_inline(const ModuleRep& m);
ModuleRep module_from_json(const Json& j, const AlgebraPtr& a, Field f);

void write_text_file(const std::filesystem::path& p, const std::string& text);
std::string read_text_file(const std::filesystem::path& p);

/// FNV-1a 64 hash, hex; used for fixture manifests.
std::string content_checksum(const std::string& bytes);

Json parse_json_file(const std::filesystem::path& p);

}  // namespace qmod
