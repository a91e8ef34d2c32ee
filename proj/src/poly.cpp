#include "qmod/poly.hpp"

#include <algorithm>
#include <sstream>

namespace qmod {

Poly::Poly(Field f, std::vector<Scalar> coeffs) : field(f), c(std::move(coeffs)) {
  normalize();
}

void Poly::normalize() {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

Scalar Poly::lead() const {
  if (is_zero()) throw Error("lead of zero polynomial");
  return c.back();
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Poly r = *this;
  Scalar inv = lead().inv();
  for (auto& x : r.c) x *= inv;
  return r;
}

Poly Poly::constant(Field f, const Scalar& a) {
  Poly p(f);
  p.c = {a};
  p.normalize();
  return p;
}

Poly Poly::x_minus(Field f, const Scalar& a) {
  Poly p(f);
  p.c = {-a, Scalar::one(f)};
  return p;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r(field);
  r.c.resize(std::max(c.size(), o.c.size()), Scalar::zero(field));
  for (size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
  for (size_t i = 0; i < o.c.size(); ++i) r.c[i] += o.c[i];
  r.normalize();
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r(field);
  r.c.resize(std::max(c.size(), o.c.size()), Scalar::zero(field));
  for (size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
  for (size_t i = 0; i < o.c.size(); ++i) r.c[i] -= o.c[i];
  r.normalize();
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly(field);
  Poly r(field);
  r.c.assign(c.size() + o.c.size() - 1, Scalar::zero(field));
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i].is_zero()) continue;
    for (size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
  }
  r.normalize();
  return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  if (d.is_zero()) throw Error("polynomial division by zero");
  Poly q(field), r = *this;
  q.c.assign(c.size(), Scalar::zero(field));
  Scalar dinv = d.lead().inv();
  while (!r.is_zero() && r.deg() >= d.deg()) {
    int k = r.deg() - d.deg();
    Scalar f = r.lead() * dinv;
    q.c[k] += f;
    for (int i = 0; i <= d.deg(); ++i) r.c[i + k] -= f * d.c[i];
    r.normalize();
  }
  q.normalize();
  return {q, r};
}

Poly Poly::derivative() const {
  Poly r(field);
  for (size_t i = 1; i < c.size(); ++i)
    r.c.push_back(c[i] * Scalar(field, static_cast<long long>(i)));
  r.normalize();
  return r;
}

Scalar Poly::eval(const Scalar& x) const {
  Scalar r = Scalar::zero(field);
  for (size_t i = c.size(); i-- > 0;) r = r * x + c[i];
  return r;
}

Mat Poly::eval_mat(const Mat& m) const {
  Mat r(m.rows(), m.rows(), field);
  Mat id = Mat::identity(m.rows(), field);
  for (size_t i = c.size(); i-- > 0;) r = r * m + id * c[i];
  return r;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  for (size_t i = c.size(); i-- > 0;) {
    if (c[i].is_zero()) continue;
    os << c[i].str() << "x^" << i << (i ? " + " : "");
  }
  return os.str();
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly poly_powmod(Poly base, BigInt e, const Poly& mod) {
  Poly r = Poly::constant(base.field, Scalar::one(base.field));
  base = base.divmod(mod).second;
  while (e > 0) {
    if ((e & 1) != 0) r = (r * base).divmod(mod).second;
    base = (base * base).divmod(mod).second;
    e >>= 1;
  }
  return r;
}

Poly char_poly(const Mat& m) {
  if (m.rows() != m.cols()) throw ShapeError("char_poly on non-square");
  int n = m.rows();
  Field f = m.field();
  if (n == 0) return Poly::constant(f, Scalar::one(f));
  // Reduce to upper Hessenberg form by row/column operations.
  Mat h = m;
  for (int j = 0; j < n - 2; ++j) {
    int piv = -1;
    for (int i = j + 1; i < n; ++i)
      if (!h.at(i, j).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != j + 1) {
      for (int k = 0; k < n; ++k) std::swap(h.at(piv, k), h.at(j + 1, k));
      for (int k = 0; k < n; ++k) std::swap(h.at(k, piv), h.at(k, j + 1));
    }
    Scalar inv = h.at(j + 1, j).inv();
    for (int i = j + 2; i < n; ++i) {
      if (h.at(i, j).is_zero()) continue;
      Scalar c = h.at(i, j) * inv;
      for (int k = 0; k < n; ++k) h.at(i, k) -= c * h.at(j + 1, k);
      for (int k = 0; k < n; ++k) h.at(k, j + 1) += c * h.at(k, i);
    }
  }
  // Recurrence for leading principal char polys of a Hessenberg matrix.
  std::vector<Poly> p;
  p.push_back(Poly::constant(f, Scalar::one(f)));
  for (int k = 1; k <= n; ++k) {
    Poly xk = Poly::x_minus(f, h.at(k - 1, k - 1)) * p[k - 1];
    Scalar prod = Scalar::one(f);
    for (int i = k - 1; i >= 1; --i) {
      prod *= h.at(i, i - 1);
      xk = xk - Poly::constant(f, prod * h.at(i - 1, k - 1)) * p[i - 1];
    }
    p.push_back(xk);
  }
  return p[n];
}

namespace {

// Squarefree part f / gcd(f, f'). Over F_p a vanishing derivative can leave
// p-th power factors behind; fine for root listing at desk scale.
Poly squarefree_part(const Poly& f) {
  Poly d = f.derivative();
  if (d.is_zero()) return f.monic();
  Poly g = poly_gcd(f, d);
  if (g.deg() <= 0) return f.monic();
  return f.divmod(g).first.monic();
}

std::vector<Scalar> rational_integer_roots(const Poly& f) {
  // Clear denominators, then search divisors of the constant term over the
  // scaled-to-integer polynomial. Restricted to monic-after-scaling integer
  // roots plus a small fixed candidate set; enough at desk scale where
  // eigenvalues of fixture endomorphisms are small integers.
  std::vector<Scalar> roots;
  Poly s = squarefree_part(f);
  Field q = f.field;
  BigInt den = 1;
  for (const auto& cc : s.c)
    den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(cc.rational()));
  std::vector<BigInt> ic;
  for (const auto& cc : s.c)
    ic.push_back(boost::multiprecision::numerator(cc.rational() * BigRat(den)));
  // candidates: divisors of constant term (if small), plus -3..3
  std::vector<BigInt> cands;
  for (long long k = -3; k <= 3; ++k) cands.push_back(k);
  BigInt c0 = ic.empty() ? BigInt(0) : ic[0];
  if (c0 != 0 && boost::multiprecision::abs(c0) <= 1000000) {
    long long lim = c0.convert_to<long long>();
    if (lim < 0) lim = -lim;
    for (long long d = 1; d * d <= lim; ++d) {
      if (lim % d) continue;
      for (long long cand : {d, lim / d, -d, -(lim / d)})
        cands.push_back(cand);
    }
  }
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  for (const auto& cand : cands) {
    Scalar x(q, cand, 1);
    if (s.eval(x).is_zero()) roots.push_back(x);
  }
  return roots;
}

}  // namespace

std::vector<Scalar> field_roots(const Poly& f) {
  if (f.is_zero()) throw Error("roots of zero polynomial");
  Field k = f.field;
  if (k.is_rational()) return rational_integer_roots(f);
  Poly s = squarefree_part(f);
  // roots in F_p are the roots of gcd(s, x^p - x)
  Poly x(k);
  x.c = {Scalar::zero(k), Scalar::one(k)};
  Poly xp = poly_powmod(x, BigInt(k.p), s);
  Poly g = poly_gcd(s, xp - x);
  std::vector<Scalar> roots;
  if (g.deg() <= 0) return roots;
  // With at most deg(g) roots, direct scan is fine for small p; otherwise
  // split recursively. Desk-scale p stays small, so scan.
  if (k.p <= 100000) {
    for (std::uint64_t v = 0; v < k.p; ++v) {
      Scalar x0(k, static_cast<long long>(v));
      if (g.eval(x0).is_zero()) {
        roots.push_back(x0);
        if (static_cast<int>(roots.size()) == g.deg()) break;
      }
    }
  }
  return roots;
}

std::optional<std::pair<Poly, Poly>> coprime_split(const Poly& f) {
  Field k = f.field;
  Poly fm = f.monic();
  // First try splitting off a root's full multiplicity.
  auto roots = field_roots(fm);
  for (const auto& r : roots) {
    Poly lin = Poly::x_minus(k, r);
    Poly g = Poly::constant(k, Scalar::one(k));
    Poly rest = fm;
    while (true) {
      auto [q, rem] = rest.divmod(lin);
      if (!rem.is_zero()) break;
      g = g * lin;
      rest = q;
    }
    if (g.deg() > 0 && rest.deg() > 0) return std::make_pair(g, rest);
  }
  // Over F_p, distinct-degree splitting catches irreducible factors of
  // different degrees even without roots in the prime field.
  if (!k.is_rational()) {
    Poly s = squarefree_part(fm);
    Poly x(k);
    x.c = {Scalar::zero(k), Scalar::one(k)};
    BigInt pd(1);
    for (int d = 1; d <= s.deg() / 2 + 1; ++d) {
      pd *= BigInt(k.p);
      Poly xpd = poly_powmod(x, pd, s);
      Poly g = poly_gcd(s, xpd - x);
      if (g.deg() > 0 && g.deg() < s.deg()) {
        // pull the full multiplicity of g out of fm
        Poly part = Poly::constant(k, Scalar::one(k));
        Poly rest = fm;
        Poly gg = g;
        while (gg.deg() > 0) {
          auto [q, rem] = rest.divmod(gg);
          while (rem.is_zero()) {
            part = part * gg;
            rest = q;
            auto qr = rest.divmod(gg);
            q = qr.first;
            rem = qr.second;
          }
          gg = poly_gcd(gg, rest);
        }
        if (part.deg() > 0 && rest.deg() > 0) return std::make_pair(part, rest);
      }
    }
  }
  return std::nullopt;
}

}  // namespace qmod
