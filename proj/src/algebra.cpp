#include "qmod/algebra.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace qmod {

std::vector<Scalar> BasedAlgebra::unit_vec(int i) const {
  auto v = zero_vec();
  v[i] = Scalar::one(field);
  return v;
}

std::vector<Scalar> BasedAlgebra::multiply(const std::vector<Scalar>& a,
                                           const std::vector<Scalar>& b) const {
  auto r = zero_vec();
  for (int i = 0; i < dim; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < dim; ++j) {
      if (b[j].is_zero()) continue;
      Scalar c = a[i] * b[j];
      const auto& m = mult[static_cast<size_t>(i) * dim + j];
      for (int k = 0; k < dim; ++k)
        if (!m[k].is_zero()) r[k] += c * m[k];
    }
  }
  return r;
}

std::vector<Scalar> BasedAlgebra::identity_elem() const {
  auto v = zero_vec();
  for (int e : vertex_idem) v[e] = Scalar::one(field);
  return v;
}

std::vector<Scalar> BasedAlgebra::path_element(const Path& p) const {
  p.validate(quiver);
  auto v = unit_vec(vertex_idem[p.source]);
  for (int a : p.arrows) v = multiply(v, arrow_elem[a]);
  return v;
}

bool BasedAlgebra::check_associativity() const {
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      auto ij = mult[static_cast<size_t>(i) * dim + j];
      for (int k = 0; k < dim; ++k) {
        auto left = multiply(ij, unit_vec(k));
        auto right = multiply(unit_vec(i), mult[static_cast<size_t>(j) * dim + k]);
        if (left != right) return false;
      }
    }
  return true;
}

bool BasedAlgebra::check_idempotents() const {
  for (size_t u = 0; u < vertex_idem.size(); ++u)
    for (size_t v = 0; v < vertex_idem.size(); ++v) {
      auto prod = multiply(unit_vec(vertex_idem[u]), unit_vec(vertex_idem[v]));
      auto expect = u == v ? unit_vec(vertex_idem[u]) : zero_vec();
      if (prod != expect) return false;
    }
  auto one = identity_elem();
  for (int i = 0; i < dim; ++i) {
    if (multiply(one, unit_vec(i)) != unit_vec(i)) return false;
    if (multiply(unit_vec(i), one) != unit_vec(i)) return false;
  }
  return true;
}

int BasedAlgebra::hom_block_dim(int i, int j) const {
  int n = 0;
  for (int k = 0; k < dim; ++k)
    if (basis_src[k] == i && basis_tgt[k] == j) ++n;
  return n;
}

std::string BasedAlgebra::fingerprint() const {
  std::ostringstream os;
  os << field.name() << "|" << quiver.str() << "|" << dim << "|";
  for (const auto& m : mult)
    for (const auto& s : m) os << s.str() << ",";
  std::uint64_t h = 1469598103934665603ull;
  for (char ch : os.str()) {
    h ^= static_cast<unsigned char>(ch);
    h *= 1099511628211ull;
  }
  std::ostringstream hex;
  hex << std::hex << h;
  return hex.str();
}

namespace {

struct PathKey {
  int source;
  std::vector<int> arrows;
  bool operator<(const PathKey& o) const {
    if (arrows.size() != o.arrows.size())
      return arrows.size() < o.arrows.size();
    if (source != o.source) return source < o.source;
    return arrows < o.arrows;  // deglex within a length level
  }
};

}  // namespace

AlgebraPtr build_based_algebra(const Quiver& q,
                               const std::vector<Relation>& rels, Field f,
                               int max_path_len) {
  q.validate();
  for (const auto& r : rels) validate_relation(q, r);

  // Enumerate all paths up to max_path_len in deglex order.
  std::vector<Path> paths;
  std::vector<int> level_start;  // first index of each length level
  for (int v = 0; v < q.num_vertices; ++v) paths.push_back({v, {}});
  level_start.push_back(0);
  int lvl_begin = 0;
  for (int len = 1; len <= max_path_len; ++len) {
    int lvl_end = static_cast<int>(paths.size());
    level_start.push_back(lvl_end);
    for (int i = lvl_begin; i < lvl_end; ++i) {
      int t = paths[i].target(q);
      for (int a = 0; a < static_cast<int>(q.arrows.size()); ++a) {
        if (q.arrows[a].src != t) continue;
        Path p = paths[i];
        p.arrows.push_back(a);
        paths.push_back(p);
      }
    }
    if (static_cast<int>(paths.size()) == lvl_end) break;  // acyclic: died out
    lvl_begin = lvl_end;
  }
  level_start.push_back(static_cast<int>(paths.size()));
  int npaths = static_cast<int>(paths.size());

  std::map<PathKey, int> path_id;
  for (int i = 0; i < npaths; ++i)
    path_id[{paths[i].source, paths[i].arrows}] = i;
  // Coordinates reversed so that Span pivots are the deglex-largest paths;
  // then non-pivot coordinates are the normal-form basis.
  auto coord = [&](int pid) { return npaths - 1 - pid; };

  // Span of { p * r * q } for all relations r and paths p, q that fit.
  Span ideal(npaths, f);
  for (const auto& rel : rels) {
    int rs = rel[0].path.source;
    int rt = rel[0].path.target(q);
    int rmax = 0;
    for (const auto& t : rel) rmax = std::max(rmax, t.path.length());
    for (int pi = 0; pi < npaths; ++pi) {
      if (paths[pi].target(q) != rs) continue;
      for (int qi = 0; qi < npaths; ++qi) {
        if (paths[qi].source != rt) continue;
        if (paths[pi].length() + rmax + paths[qi].length() > max_path_len)
          continue;
        std::vector<Scalar> v(npaths, Scalar::zero(f));
        bool fits = true;
        for (const auto& t : rel) {
          Path w = paths[pi].then(q, t.path).then(q, paths[qi]);
          auto it = path_id.find({w.source, w.arrows});
          if (it == path_id.end()) {
            fits = false;
            break;
          }
          v[coord(it->second)] += t.coeff;
        }
        if (fits) ideal.add(std::move(v));
      }
    }
  }

  // Saturation length: the smallest N with every length-N path in the ideal.
  int max_len_present = static_cast<int>(level_start.size()) - 2;
  auto level_in_ideal = [&](int len) {
    for (int i = level_start[len]; i < level_start[len + 1]; ++i) {
      std::vector<Scalar> v(npaths, Scalar::zero(f));
      v[coord(i)] = Scalar::one(f);
      if (!ideal.contains(v)) return false;
    }
    return true;
  };
  // Beyond max_len_present a level is vacuously dead only when enumeration
  // stopped because the quiver ran out of paths, not because it hit the cap.
  bool died_out = max_len_present < max_path_len;
  int sat = -1;
  for (int len = 0; len <= max_len_present + (died_out ? 1 : 0); ++len) {
    bool vacuous = len > max_len_present;
    if (vacuous || level_in_ideal(len)) {
      sat = len;
      break;
    }
  }
  if (sat < 0)
    throw ValidationError(
        "ideal not admissible up to max path length " +
        std::to_string(max_path_len) +
        " (no saturation length found; raise the bound or fix relations)");
  for (int len = sat; len <= max_len_present; ++len)
    if (!level_in_ideal(len))
      throw ValidationError("ideal span not closed above saturation length");

  // Basis: non-pivot paths; all lie below the saturation length.
  std::vector<bool> is_pivot(npaths, false);
  {
    std::vector<Scalar> probe(npaths, Scalar::zero(f));
    for (int i = 0; i < npaths; ++i) {
      if (paths[i].length() >= sat) {
        is_pivot[i] = true;  // reduces to zero anyway
        continue;
      }
      std::fill(probe.begin(), probe.end(), Scalar::zero(f));
      probe[coord(i)] = Scalar::one(f);
      auto r = ideal.reduce(probe);
      // i is a basis path iff its own coordinate survives reduction
      is_pivot[i] = r[coord(i)].is_zero();
    }
  }

  auto out = std::make_shared<BasedAlgebra>();
  out->field = f;
  out->quiver = q;
  out->relations = rels;
  out->relations_known = true;
  std::vector<int> basis_of_path(npaths, -1);
  for (int i = 0; i < npaths; ++i) {
    if (is_pivot[i]) continue;
    basis_of_path[i] = out->dim++;
    out->basis_name.push_back(paths[i].str(q));
    out->basis_src.push_back(paths[i].source);
    out->basis_tgt.push_back(paths[i].target(q));
    out->basis_path_len.push_back(paths[i].length());
  }
  out->vertex_idem.assign(q.num_vertices, -1);
  for (int v = 0; v < q.num_vertices; ++v) {
    int pid = path_id.at({v, {}});
    if (basis_of_path[pid] < 0)
      throw ValidationError("vertex idempotent killed by ideal (e" +
                            std::to_string(v) + "); ideal not admissible");
    out->vertex_idem[v] = basis_of_path[pid];
  }

  // Normal form of a path-supported vector, in basis coordinates.
  auto nf = [&](const std::vector<Scalar>& pathvec) {
    auto r = ideal.reduce(pathvec);
    std::vector<Scalar> out_c(out->dim, Scalar::zero(f));
    for (int i = 0; i < npaths; ++i) {
      const Scalar& c = r[coord(i)];
      if (c.is_zero()) continue;
      if (basis_of_path[i] < 0)
        throw ValidationError("normal form escaped the basis span");
      out_c[basis_of_path[i]] = c;
    }
    return out_c;
  };

  out->mult.assign(static_cast<size_t>(out->dim) * out->dim, {});
  for (int i = 0; i < npaths; ++i) {
    if (basis_of_path[i] < 0) continue;
    for (int j = 0; j < npaths; ++j) {
      if (basis_of_path[j] < 0) continue;
      auto& cell =
          out->mult[static_cast<size_t>(basis_of_path[i]) * out->dim +
                    basis_of_path[j]];
      if (paths[i].target(q) != paths[j].source) {
        cell = out->zero_vec();
        continue;
      }
      Path w = paths[i].then(q, paths[j]);
      if (w.length() >= sat) {
        cell = out->zero_vec();
        continue;
      }
      auto it = path_id.find({w.source, w.arrows});
      if (it == path_id.end())
        throw ValidationError("path product exceeds enumeration bound");
      std::vector<Scalar> v(npaths, Scalar::zero(f));
      v[coord(it->second)] = Scalar::one(f);
      cell = nf(v);
    }
  }

  for (int a = 0; a < static_cast<int>(q.arrows.size()); ++a) {
    int pid = path_id.at({q.arrows[a].src, {a}});
    std::vector<Scalar> v(npaths, Scalar::zero(f));
    v[coord(pid)] = Scalar::one(f);
    out->arrow_elem.push_back(nf(v));
  }

  for (int i = 0; i < out->dim; ++i)
    if (out->basis_path_len[i] >= 1) out->rad_basis.push_back(out->unit_vec(i));

  if (!out->check_idempotents())
    throw ValidationError("idempotent axioms failed after construction");
  return out;
}

AlgebraPtr opposite_algebra(const AlgebraPtr& a) {
  auto out = std::make_shared<BasedAlgebra>();
  out->field = a->field;
  out->quiver = a->quiver.reversed();
  out->dim = a->dim;
  out->basis_src = a->basis_tgt;
  out->basis_tgt = a->basis_src;
  out->basis_path_len = a->basis_path_len;
  out->vertex_idem = a->vertex_idem;
  for (int i = 0; i < a->dim; ++i) {
    std::string n = a->basis_name[i];
    // reverse "x*y*z" words for display
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : n) {
      if (ch == '*') {
        parts.push_back(cur);
        cur.clear();
      } else
        cur += ch;
    }
    parts.push_back(cur);
    std::string rev;
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
      if (!rev.empty()) rev += "*";
      rev += *it;
    }
    out->basis_name.push_back(rev);
  }
  out->mult.assign(static_cast<size_t>(a->dim) * a->dim, {});
  for (int i = 0; i < a->dim; ++i)
    for (int j = 0; j < a->dim; ++j)
      out->mult[static_cast<size_t>(i) * a->dim + j] =
          a->mult[static_cast<size_t>(j) * a->dim + i];
  out->arrow_elem = a->arrow_elem;
  out->relations_known = a->relations_known;
  for (const auto& rel : a->relations) {
    Relation r;
    for (const auto& t : rel)
      r.push_back({t.coeff, t.path.reversed(a->quiver, out->quiver)});
    out->relations.push_back(r);
  }
  out->rad_basis = a->rad_basis;
  return out;
}

namespace {

Scalar reduce_scalar(const Scalar& s, Field fp) {
  if (s.field().is_rational()) {
    const BigRat& q = s.rational();
    BigInt den = boost::multiprecision::denominator(q);
    if (den % BigInt(fp.p) == 0)
      throw Error("mod-p reduction hits a denominator divisible by p");
    return Scalar(fp, boost::multiprecision::numerator(q), den);
  }
  if (s.field().p == fp.p) return s;
  throw FieldMismatch("cannot reduce F_" + std::to_string(s.field().p) +
                      " scalar modulo " + std::to_string(fp.p));
}

}  // namespace

AlgebraPtr algebra_mod_p(const AlgebraPtr& a, std::uint64_t p) {
  Field fp = Field::prime(p);
  auto out = std::make_shared<BasedAlgebra>(*a);
  out->field = fp;
  for (auto& cell : out->mult)
    for (auto& s : cell) s = reduce_scalar(s, fp);
  for (auto& elem : out->arrow_elem)
    for (auto& s : elem) s = reduce_scalar(s, fp);
  for (auto& rel : out->relations)
    for (auto& term : rel) term.coeff = reduce_scalar(term.coeff, fp);
  out->rad_basis.clear();  // not meaningful after reduction
  if (!out->check_idempotents())
    throw ValidationError("mod-p reduction broke the idempotent axioms");
  return out;
}

std::vector<std::vector<Scalar>> trace_form_radical(const BasedAlgebra& a) {
  Field f = a.field;
  if (!f.is_rational() && f.p <= static_cast<std::uint64_t>(a.dim))
    throw Error("trace-form radical needs char 0 or p > dim (p=" +
                std::to_string(f.p) + ", dim=" + std::to_string(a.dim) + ")");
  // t[m] = trace of left multiplication by basis element m
  std::vector<Scalar> t(a.dim, Scalar::zero(f));
  for (int m = 0; m < a.dim; ++m)
    for (int l = 0; l < a.dim; ++l)
      t[m] += a.mult[static_cast<size_t>(m) * a.dim + l][l];
  Mat gram(a.dim, a.dim, f);
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) {
      Scalar g = Scalar::zero(f);
      const auto& prod = a.mult[static_cast<size_t>(i) * a.dim + j];
      for (int m = 0; m < a.dim; ++m)
        if (!prod[m].is_zero()) g += prod[m] * t[m];
      gram.at(i, j) = g;
    }
  Mat k = gram.kernel_basis();
  std::vector<std::vector<Scalar>> rad;
  for (int j = 0; j < k.cols(); ++j) rad.push_back(mat_col_vec(k, j));
  return rad;
}

}  // namespace qmod
