#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qmod {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};
struct FieldMismatch : Error {
  explicit FieldMismatch(const std::string& msg) : Error(msg) {}
};
struct ShapeError : Error {
  explicit ShapeError(const std::string& msg) : Error(msg) {}
};
struct ValidationError : Error {
  explicit ValidationError(const std::string& msg) : Error(msg) {}
};
struct SearchLimit : Error {
  explicit SearchLimit(const std::string& msg) : Error(msg) {}
};
struct Undetermined : Error {
  explicit Undetermined(const std::string& msg) : Error(msg) {}
};

/// Ground field of a computation: the rationals (p == 0) or F_p for a prime p.
/// Every scalar, matrix, algebra and module carries its field; mixing fields
/// in one operation is a hard error, never a coercion.
struct Field {
  std::uint64_t p = 0;

  bool is_rational() const { return p == 0; }
  bool operator==(const Field&) const = default;

  static Field rationals() { return Field{0}; }
  static Field prime(std::uint64_t q);
  static Field parse(const std::string& s);  // "q" or "p=1009" or "1009"

  std::string name() const;
};

class Scalar {
 public:
  Scalar() = default;  // zero over Q
  explicit Scalar(Field f) : field_(f) {}
  Scalar(Field f, long long n);
  Scalar(Field f, const BigInt& num, const BigInt& den);

  static Scalar zero(Field f) { return Scalar(f); }
  static Scalar one(Field f) { return Scalar(f, 1); }
  /// Parses "3", "-5", "2/7".
  static Scalar parse(Field f, const std::string& s);

  Field field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // throws on zero divisor
  Scalar operator-() const;
  Scalar inv() const;
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  /// Exact value as a rational; only valid over Q.
  const BigRat& rational() const;
  /// Canonical representative in [0, p); only valid over F_p.
  std::uint64_t residue() const;

  std::string str() const;

 private:
  void check_same(const Scalar& o) const;

  Field field_{0};
  BigRat q_{0};
  std::uint64_t r_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace qmod
