#pragma once

#include "qmod/scalar.hpp"

#include <string>
#include <vector>

namespace qmod {

struct Arrow {
  std::string label;
  int src = 0;
  int tgt = 0;
  bool operator==(const Arrow&) const = default;
};

struct Quiver {
  int num_vertices = 0;
  std::vector<Arrow> arrows;

  void validate() const;
  int arrow_index(const std::string& label) const;  // -1 if absent
  Quiver reversed() const;
  bool operator==(const Quiver&) const = default;
  std::string str() const;
};

/// A path in a quiver: a source vertex plus a composable arrow list, read
/// left to right ("a*b" is first a, then b). The empty list is the lazy
/// path e_v at the source vertex.
struct Path {
  int source = 0;
  std::vector<int> arrows;

  int length() const { return static_cast<int>(arrows.size()); }
  bool is_trivial() const { return arrows.empty(); }
  int target(const Quiver& q) const;
  void validate(const Quiver& q) const;
  /// Concatenation this, then p; targets must match.
  Path then(const Quiver& q, const Path& p) const;
  Path reversed(const Quiver& q, const Quiver& rev) const;
  bool operator==(const Path&) const = default;
  std::string str(const Quiver& q) const;
};

struct RelationTerm {
  Scalar coeff;
  Path path;
};

/// A linear combination of parallel paths, each of length >= 2
/// (admissibility).
using Relation = std::vector<RelationTerm>;

void validate_relation(const Quiver& q, const Relation& rel);

/// Parses a relation from a string like "a*b - c*d*e" or "a*b" using arrow
/// labels joined by '*'; terms separated by + and -, optional integer or
/// fraction coefficients as in "2 a*b" or "1/2 a*b".
Relation parse_relation(const Quiver& q, Field f, const std::string& s);
std::string relation_str(const Quiver& q, const Relation& rel);

}  // namespace qmod
