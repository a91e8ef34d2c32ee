#include "qmod/quiver.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace qmod {

void Quiver::validate() const {
  if (num_vertices < 0) throw ValidationError("negative vertex count");
  std::set<std::string> labels;
  for (const auto& a : arrows) {
    if (a.src < 0 || a.src >= num_vertices || a.tgt < 0 ||
        a.tgt >= num_vertices)
      throw ValidationError("arrow '" + a.label + "' endpoint out of range");
    if (a.label.empty()) throw ValidationError("empty arrow label");
    if (!labels.insert(a.label).second)
      throw ValidationError("duplicate arrow label '" + a.label + "'");
  }
}

int Quiver::arrow_index(const std::string& label) const {
  for (size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].label == label) return static_cast<int>(i);
  return -1;
}

Quiver Quiver::reversed() const {
  Quiver r;
  r.num_vertices = num_vertices;
  for (const auto& a : arrows) r.arrows.push_back({a.label, a.tgt, a.src});
  return r;
}

std::string Quiver::str() const {
  std::ostringstream os;
  os << num_vertices << " vertices;";
  for (const auto& a : arrows)
    os << " " << a.label << ":" << a.src << "->" << a.tgt;
  return os.str();
}

int Path::target(const Quiver& q) const {
  return arrows.empty() ? source : q.arrows[arrows.back()].tgt;
}

void Path::validate(const Quiver& q) const {
  if (source < 0 || source >= q.num_vertices)
    throw ValidationError("path source out of range");
  int at = source;
  for (int a : arrows) {
    if (a < 0 || a >= static_cast<int>(q.arrows.size()))
      throw ValidationError("path arrow index out of range");
    if (q.arrows[a].src != at)
      throw ValidationError("non-composable path " + str(q));
    at = q.arrows[a].tgt;
  }
}

Path Path::then(const Quiver& q, const Path& p) const {
  if (target(q) != p.source)
    throw ValidationError("path concatenation endpoint mismatch");
  Path r = *this;
  r.arrows.insert(r.arrows.end(), p.arrows.begin(), p.arrows.end());
  return r;
}

Path Path::reversed(const Quiver& q, const Quiver& /*rev*/) const {
  Path r;
  r.source = target(q);
  r.arrows.assign(arrows.rbegin(), arrows.rend());
  return r;
}

std::string Path::str(const Quiver& q) const {
  if (arrows.empty()) return "e" + std::to_string(source);
  std::string s;
  for (size_t i = 0; i < arrows.size(); ++i) {
    if (i) s += "*";
    s += q.arrows[arrows[i]].label;
  }
  return s;
}

void validate_relation(const Quiver& q, const Relation& rel) {
  if (rel.empty()) throw ValidationError("empty relation");
  int s = -1, t = -1;
  for (const auto& term : rel) {
    term.path.validate(q);
    if (term.path.length() < 2)
      throw ValidationError("non-admissible relation: term '" +
                            term.path.str(q) + "' has length < 2");
    if (s < 0) {
      s = term.path.source;
      t = term.path.target(q);
    } else if (term.path.source != s || term.path.target(q) != t) {
      throw ValidationError("relation terms not parallel");
    }
  }
}

namespace {

// Splits "a*b*c" into a Path, resolving arrow labels.
Path parse_word(const Quiver& q, const std::string& w) {
  Path p;
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : w) {
    if (ch == '*') {
      parts.push_back(cur);
      cur.clear();
    } else if (!isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  if (!cur.empty()) parts.push_back(cur);
  if (parts.empty()) throw ValidationError("empty path word");
  bool first = true;
  int at = -1;
  for (const auto& lbl : parts) {
    int idx = q.arrow_index(lbl);
    if (idx < 0) throw ValidationError("unknown arrow label '" + lbl + "'");
    if (first) {
      p.source = q.arrows[idx].src;
      at = p.source;
      first = false;
    }
    if (q.arrows[idx].src != at)
      throw ValidationError("word '" + w + "' is not composable at '" + lbl +
                            "'");
    p.arrows.push_back(idx);
    at = q.arrows[idx].tgt;
  }
  return p;
}

}  // namespace

Relation parse_relation(const Quiver& q, Field f, const std::string& s) {
  Relation rel;
  // split into signed terms
  std::vector<std::pair<int, std::string>> terms;
  int sign = 1;
  std::string cur;
  for (char ch : s) {
    if (ch == '+' || ch == '-') {
      if (!cur.empty()) {
        terms.push_back({sign, cur});
        cur.clear();
      }
      sign = (ch == '-') ? -1 : 1;
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) terms.push_back({sign, cur});
  for (auto& [sg, text] : terms) {
    // optional leading coefficient separated by whitespace: "2 a*b", "1/2 a*b"
    std::string t = text;
    while (!t.empty() && isspace(static_cast<unsigned char>(t.front())))
      t.erase(t.begin());
    while (!t.empty() && isspace(static_cast<unsigned char>(t.back())))
      t.pop_back();
    Scalar coeff = Scalar::one(f);
    auto sp = t.find(' ');
    if (sp != std::string::npos) {
      std::string head = t.substr(0, sp);
      bool numeric = !head.empty() &&
                     head.find_first_not_of("0123456789/") == std::string::npos;
      if (numeric) {
        coeff = Scalar::parse(f, head);
        t = t.substr(sp + 1);
      }
    }
    if (sg < 0) coeff = -coeff;
    rel.push_back({coeff, parse_word(q, t)});
  }
  validate_relation(q, rel);
  return rel;
}

std::string relation_str(const Quiver& q, const Relation& rel) {
  std::ostringstream os;
  for (size_t i = 0; i < rel.size(); ++i) {
    if (i) os << " + ";
    if (!rel[i].coeff.is_one()) os << rel[i].coeff.str() << " ";
    os << rel[i].path.str(q);
  }
  return os.str();
}

}  // namespace qmod
