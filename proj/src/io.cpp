#include "qmod/io.hpp"

#include <fstream>
#include <sstream>

namespace qmod {

namespace {

Scalar scalar_from_json(const Json& j, Field f) {
  if (j.is_number_integer()) return Scalar(f, j.get<long long>());
  if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
  throw ValidationError("matrix entry must be an integer or a fraction string");
}

Json scalar_to_json(const Scalar& s) {
  if (s.field().is_rational()) {
    const BigRat& q = s.rational();
    if (boost::multiprecision::denominator(q) == 1) {
      BigInt n = boost::multiprecision::numerator(q);
      if (n >= std::numeric_limits<long long>::min() &&
          n <= std::numeric_limits<long long>::max())
        return Json(n.convert_to<long long>());
    }
    return Json(s.str());
  }
  return Json(static_cast<long long>(s.residue()));
}

Mat mat_from_json(const Json& j, int rows, int cols, Field f) {
  Mat m(rows, cols, f);
  if (!j.is_array() || static_cast<int>(j.size()) != rows)
    throw ValidationError("matrix row count mismatch");
  for (int i = 0; i < rows; ++i) {
    const Json& row = j[i];
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      throw ValidationError("matrix column count mismatch");
    for (int c = 0; c < cols; ++c) m.at(i, c) = scalar_from_json(row[c], f);
  }
  return m;
}

Json mat_to_json(const Mat& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Json parse_json_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw Error("cannot open file " + p.string());
  Json j;
  try {
    in >> j;
  } catch (const std::exception& ex) {
    throw ValidationError("invalid JSON in " + p.string() + ": " + ex.what());
  }
  return j;
}

AlgebraPtr Workspace::load_algebra(const std::filesystem::path& file) {
  auto canon = std::filesystem::weakly_canonical(file).string();
  auto it = algebras_.find(canon);
  if (it != algebras_.end()) return it->second;
  Json j = parse_json_file(file);
  if (j.value("format", "") != "qmod-algebra/1")
    throw ValidationError(file.string() + ": not a qmod-algebra/1 file");
  Quiver q;
  q.num_vertices = j.at("vertices").get<int>();
  for (const auto& a : j.at("arrows"))
    q.arrows.push_back({a.at("label").get<std::string>(),
                        a.at("src").get<int>(), a.at("tgt").get<int>()});
  q.validate();
  std::vector<Relation> rels;
  if (j.contains("relations"))
    for (const auto& r : j.at("relations"))
      rels.push_back(parse_relation(q, field_, r.get<std::string>()));
  int maxlen = j.value("max_path_length", 16);
  AlgebraPtr alg = build_based_algebra(q, rels, field_, maxlen);
  algebras_[canon] = alg;
  return alg;
}

ModuleRep Workspace::load_module(const std::filesystem::path& file) {
  Json j = parse_json_file(file);
  if (j.value("format", "") != "qmod-module/1")
    throw ValidationError(file.string() + ": not a qmod-module/1 file");
  auto algref = j.at("algebra").get<std::string>();
  AlgebraPtr alg = load_algebra(file.parent_path() / algref);
  ModuleRep m = module_from_json(j, alg, field_);
  if (m.name.empty()) m.name = file.stem().string();
  return m;
}

std::vector<ModuleRep> Workspace::load_module_dir(
    const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    if (entry.path().extension() != ".json") continue;
    Json j = parse_json_file(entry.path());
    if (j.value("format", "") != "qmod-module/1") continue;
    files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<ModuleRep> out;
  for (const auto& f : files) out.push_back(load_module(f));
  return out;
}

ModuleRep module_from_json(const Json& j, const AlgebraPtr& a, Field f) {
  std::vector<int> dims = j.at("dims").get<std::vector<int>>();
  if (static_cast<int>(dims.size()) != a->quiver.num_vertices)
    throw ValidationError("module dims length mismatch");
  std::vector<Mat> mats;
  const Json& maps = j.at("maps");
  for (const auto& arrow : a->quiver.arrows) {
    int r = dims[arrow.tgt], c = dims[arrow.src];
    if (!maps.contains(arrow.label)) {
      if (r == 0 || c == 0) {
        mats.push_back(Mat(r, c, f));
        continue;
      }
      throw ValidationError("missing map for arrow '" + arrow.label + "'");
    }
    mats.push_back(mat_from_json(maps.at(arrow.label), r, c, f));
  }
  return make_module(a, std::move(dims), std::move(mats),
                     j.value("name", ""));
}

Json algebra_to_json(const BasedAlgebra& a, const std::string& name) {
  Json j;
  j["format"] = "qmod-algebra/1";
  j["name"] = name;
  j["vertices"] = a.quiver.num_vertices;
  Json arrows = Json::array();
  for (const auto& ar : a.quiver.arrows)
    arrows.push_back(Json{{"label", ar.label}, {"src", ar.src}, {"tgt", ar.tgt}});
  j["arrows"] = std::move(arrows);
  Json rels = Json::array();
  for (const auto& r : a.relations) rels.push_back(relation_str(a.quiver, r));
  j["relations"] = std::move(rels);
  return j;
}

Json module_to_json(const ModuleRep& m, const std::string& algebra_ref) {
  Json j = module_to_json_inline(m);
  j["algebra"] = algebra_ref;
  // keep key order: format, name, algebra, dims, maps
  Json ordered;
  ordered["format"] = j["format"];
  ordered["name"] = j["name"];
  ordered["algebra"] = algebra_ref;
  ordered["dims"] = j["dims"];
  ordered["maps"] = j["maps"];
  return ordered;
}

Json module_to_json_inline(const ModuleRep& m) {
  Json j;
  j["format"] = "qmod-module/1";
  j["name"] = m.name;
  j["dims"] = m.dims;
  Json maps;
  for (size_t a = 0; a < m.alg->quiver.arrows.size(); ++a)
    maps[m.alg->quiver.arrows[a].label] = mat_to_json(m.arrow_mat[a]);
  j["maps"] = std::move(maps);
  return j;
}

void write_text_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p);
  if (!out) throw Error("cannot write file " + p.string());
  out << text;
}

std::string read_text_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw Error("cannot open file " + p.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string content_checksum(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (char ch : bytes) {
    h ^= static_cast<unsigned char>(ch);
    h *= 1099511628211ull;
  }
  std::ostringstream hex;
  hex << std::hex << h;
  return hex.str();
}

}  // namespace qmod
