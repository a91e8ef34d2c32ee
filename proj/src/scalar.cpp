#include "qmod/scalar.hpp"

#include <ostream>
#include <sstream>

namespace qmod {

namespace {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

}  // namespace

Field Field::prime(std::uint64_t q) {
  if (q >= (1ull << 32) || !is_prime_u64(q))
    throw Error("field modulus must be a prime < 2^32, got " +
                std::to_string(q));
  return Field{q};
}

Field Field::parse(const std::string& s) {
  if (s == "q" || s == "Q" || s == "rational" || s == "0")
    return Field::rationals();
  std::string t = s;
  if (t.rfind("p=", 0) == 0) t = t.substr(2);
  try {
    return Field::prime(std::stoull(t));
  } catch (const std::invalid_argument&) {
    throw Error("cannot parse field spec '" + s + "' (expected q or p=<prime>)");
  }
}

std::string Field::name() const {
  return is_rational() ? std::string("Q") : "F_" + std::to_string(p);
}

Scalar::Scalar(Field f, long long n) : field_(f) {
  if (f.is_rational()) {
    q_ = n;
  } else {
    long long m = n % static_cast<long long>(f.p);
    if (m < 0) m += static_cast<long long>(f.p);
    r_ = static_cast<std::uint64_t>(m);
  }
}

Scalar::Scalar(Field f, const BigInt& num, const BigInt& den) : field_(f) {
  if (den == 0) throw Error("zero denominator");
  if (f.is_rational()) {
    q_ = BigRat(num, den);
  } else {
    BigInt p(f.p);
    BigInt n = num % p, d = den % p;
    if (n < 0) n += p;
    if (d < 0) d += p;
    if (d == 0) throw Error("denominator divisible by field characteristic");
    std::uint64_t dv = d.convert_to<std::uint64_t>();
    r_ = mulmod(n.convert_to<std::uint64_t>(), powmod(dv, f.p - 2, f.p), f.p);
  }
}

Scalar Scalar::parse(Field f, const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Scalar(f, BigInt(s), BigInt(1));
  return Scalar(f, BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

bool Scalar::is_zero() const {
  return field_.is_rational() ? q_ == 0 : r_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_rational() ? q_ == 1 : r_ == 1 % field_.p;
}

void Scalar::check_same(const Scalar& o) const {
  if (field_ != o.field_)
    throw FieldMismatch("scalar arithmetic across fields " + field_.name() +
                        " and " + o.field_.name());
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  Scalar r(field_);
  if (field_.is_rational())
    r.q_ = q_ + o.q_;
  else
    r.r_ = (r_ + o.r_) % field_.p;
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same(o);
  Scalar r(field_);
  if (field_.is_rational())
    r.q_ = q_ - o.q_;
  else
    r.r_ = (r_ + field_.p - o.r_) % field_.p;
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  Scalar r(field_);
  if (field_.is_rational())
    r.q_ = q_ * o.q_;
  else
    r.r_ = mulmod(r_, o.r_, field_.p);
  return r;
}

Scalar Scalar::operator-() const {
  Scalar r(field_);
  if (field_.is_rational())
    r.q_ = -q_;
  else
    r.r_ = r_ == 0 ? 0 : field_.p - r_;
  return r;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw Error("division by zero");
  Scalar r(field_);
  if (field_.is_rational())
    r.q_ = 1 / q_;
  else
    r.r_ = powmod(r_, field_.p - 2, field_.p);
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inv(); }

bool Scalar::operator==(const Scalar& o) const {
  check_same(o);
  return field_.is_rational() ? q_ == o.q_ : r_ == o.r_;
}

const BigRat& Scalar::rational() const {
  if (!field_.is_rational()) throw Error("rational() on F_p scalar");
  return q_;
}

std::uint64_t Scalar::residue() const {
  if (field_.is_rational()) throw Error("residue() on rational scalar");
  return r_;
}

std::string Scalar::str() const {
  if (field_.is_rational()) {
    std::ostringstream os;
    os << q_;
    return os.str();
  }
  return std::to_string(r_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.str();
}

}  // namespace qmod
