#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qmod/matrix.hpp"
#include "qmod/poly.hpp"

#include <random>

using namespace qmod;

namespace {
const Field Q = Field::rationals();
const Field F1009 = Field::prime(1009);
}  // namespace

TEST_CASE("scalar arithmetic is exact") {
  Scalar a(Q, 1, 3), b(Q, 2, 5);
  CHECK(a * b == Scalar(Q, 2, 15));
  CHECK(a + b == Scalar(Q, 11, 15));
  CHECK((a / b) == Scalar(Q, 5, 6));
  Scalar p(F1009, 7), q(F1009, -1);
  CHECK(q.residue() == 1008);
  CHECK((p * p.inv()).is_one());
  CHECK_THROWS_AS(a + p, FieldMismatch);
  CHECK_THROWS_AS(Scalar(Q, 1).operator/(Scalar(Q, 0)), Error);
}

TEST_CASE("field parsing") {
  CHECK(Field::parse("q").is_rational());
  CHECK(Field::parse("p=1009").p == 1009);
  CHECK(Field::parse("1009").p == 1009);
  CHECK_THROWS(Field::parse("p=8"));
}

TEST_CASE("rref: identity stays put") {
  Mat m = Mat::identity(3, Q);
  auto [r, piv] = m.rref();
  CHECK(r == m);
  CHECK(piv == std::vector<int>{0, 1, 2});
}

TEST_CASE("rref: zero matrix") {
  Mat m(2, 4, Q);
  auto [r, piv] = m.rref();
  CHECK(r.is_zero());
  CHECK(piv.empty());
}

TEST_CASE("rref: rank-one 2x2 by hand") {
  Mat m = Mat::from_rows(Q, {{2, 4}, {1, 2}});
  auto [r, piv] = m.rref();
  CHECK(r == Mat::from_rows(Q, {{1, 2}, {0, 0}}));
  CHECK(piv == std::vector<int>{0});
}

TEST_CASE("kernel: identity has none, zero map has all") {
  CHECK(Mat::identity(4, Q).kernel_basis().cols() == 0);
  Mat z(1, 2, Q);
  CHECK(z.kernel_basis().cols() == 2);
}

TEST_CASE("kernel: substitution example") {
  // [[1,1,0],[0,1,1]] has kernel spanned by (1,-1,1)
  Mat m = Mat::from_rows(Q, {{1, 1, 0}, {0, 1, 1}});
  Mat k = m.kernel_basis();
  REQUIRE(k.cols() == 1);
  CHECK((m * k).is_zero());
  Scalar t = k.at(0, 0);
  CHECK(k.at(1, 0) == -t);
  CHECK(k.at(2, 0) == t);
  CHECK(!t.is_zero());
}

TEST_CASE("solve: identity, unsolvable, back-substitution") {
  Mat b = Mat::from_rows(Q, {{3}, {1}});
  auto x0 = Mat::identity(2, Q).solve(b);
  REQUIRE(x0);
  CHECK(*x0 == b);

  Mat z(2, 2, Q);
  CHECK(!z.solve(b).has_value());

  Mat a = Mat::from_rows(Q, {{1, 1}, {0, 1}});
  auto x = a.solve(b);
  REQUIRE(x);
  CHECK(*x == Mat::from_rows(Q, {{2}, {1}}));
  CHECK(a * *x == b);
}

TEST_CASE("solve: rectangular consistent system verifies by substitution") {
  Mat a = Mat::from_rows(Q, {{1, 2, 3}, {2, 4, 6}});
  Mat b = Mat::from_rows(Q, {{6}, {12}});
  auto x = a.solve(b);
  REQUIRE(x);
  CHECK(a * *x == b);
}

static Mat random_mat(Field f, int r, int c, std::mt19937_64& rng) {
  Mat m(r, c, f);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j)
      m.at(i, j) = Scalar(f, static_cast<long long>(rng() % 5) - 2);
  return m;
}

TEST_CASE("rank-nullity on seeded random matrices over Q and F_1009") {
  std::mt19937_64 rng(12345);
  for (int t = 0; t < 200; ++t) {
    int r = 1 + static_cast<int>(rng() % 6);
    int c = 1 + static_cast<int>(rng() % 6);
    for (Field f : {Q, F1009}) {
      Mat m = random_mat(f, r, c, rng);
      CHECK(m.rank() + m.kernel_basis().cols() == c);
      CHECK((m * m.kernel_basis()).is_zero());
      auto [rr, piv] = m.rref();
      CHECK(rr.rref().first == rr);  // idempotent
    }
  }
}

TEST_CASE("F_p agrees with Q followed by reduction on division-free samples") {
  std::mt19937_64 rng(777);
  Field f5 = Field::prime(5);
  for (int t = 0; t < 100; ++t) {
    int n = 1 + static_cast<int>(rng() % 4);
    Mat a(n, n, Q), ap(n, n, f5);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        long long v = static_cast<long long>(rng() % 5) - 2;
        a.at(i, j) = Scalar(Q, v);
        ap.at(i, j) = Scalar(f5, v);
      }
    Mat prod = a * a;
    Mat prodp = ap * ap;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        BigInt num = boost::multiprecision::numerator(prod.at(i, j).rational());
        long long residue = (num % 5).convert_to<long long>();
        if (residue < 0) residue += 5;
        CHECK(prodp.at(i, j).residue() == static_cast<std::uint64_t>(residue));
      }
  }
}

TEST_CASE("span membership and reduction") {
  Span sp(3, Q);
  CHECK(sp.add({Scalar(Q, 1), Scalar(Q, 0), Scalar(Q, 1)}));
  CHECK(sp.add({Scalar(Q, 0), Scalar(Q, 1), Scalar(Q, 1)}));
  CHECK(!sp.add({Scalar(Q, 1), Scalar(Q, 1), Scalar(Q, 2)}));
  CHECK(sp.dim() == 2);
  CHECK(sp.contains({Scalar(Q, 2), Scalar(Q, -1), Scalar(Q, 1)}));
  CHECK(!sp.contains({Scalar(Q, 0), Scalar(Q, 0), Scalar(Q, 1)}));
}

TEST_CASE("char poly of a companion-style matrix") {
  // x^2 - 5x - 2 for [[0,2],[1,5]]
  Mat m = Mat::from_rows(Q, {{0, 2}, {1, 5}});
  Poly chi = char_poly(m);
  REQUIRE(chi.deg() == 2);
  CHECK(chi.c[2] == Scalar(Q, 1));
  CHECK(chi.c[1] == Scalar(Q, -5));
  CHECK(chi.c[0] == Scalar(Q, -2));
  // Cayley-Hamilton
  CHECK(chi.eval_mat(m).is_zero());
}

TEST_CASE("char poly Cayley-Hamilton on random matrices") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 40; ++t) {
    int n = 1 + static_cast<int>(rng() % 5);
    for (Field f : {Q, F1009}) {
      Mat m = random_mat(f, n, n, rng);
      Poly chi = char_poly(m);
      CHECK(chi.deg() == n);
      CHECK(chi.eval_mat(m).is_zero());
    }
  }
}

TEST_CASE("coprime split finds eigenvalue factors") {
  // diag(0,0,1) should split as x^2 * (x-1)
  Mat m(3, 3, Q);
  m.at(2, 2) = Scalar(Q, 1);
  auto sp = coprime_split(char_poly(m));
  REQUIRE(sp);
  CHECK(sp->first.deg() + sp->second.deg() == 3);
}

TEST_CASE("field roots over F_p via gcd with x^p - x") {
  Field f = Field::prime(7);
  // (x-2)(x-3)(x^2+1): roots 2 and 3 mod 7 plus an irreducible quadratic
  Poly a = Poly::x_minus(f, Scalar(f, 2)) * Poly::x_minus(f, Scalar(f, 3));
  Poly quad(f, {Scalar(f, 1), Scalar(f, 0), Scalar(f, 1)});
  auto roots = field_roots(a * quad);
  REQUIRE(roots.size() == 2);
  CHECK(((roots[0] == Scalar(f, 2)) || (roots[0] == Scalar(f, 3))));
}
