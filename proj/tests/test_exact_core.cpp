#include <catch2/catch_amalgamated.hpp>

#include "polyfun/fp.hpp"
#include "polyfun/matrix.hpp"
#include "polyfun/rational.hpp"
#include "polyfun/rng.hpp"

using namespace polyfun;

namespace {

Matrix<Rational> mq(int r, int c, std::initializer_list<long> vals) {
  Matrix<Rational> m(r, c);
  auto it = vals.begin();
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = Rational(*it++);
  return m;
}

}  // namespace

TEST_CASE("rational arithmetic is exact and canonical") {
  Rational a = Rational::parse("3/4"), b(5, 7);
  CHECK((a + b).str() == "41/28");
  CHECK((a * b).str() == "15/28");
  CHECK(Rational(6, 8).str() == "3/4");
  CHECK(Rational(-6, 8).str() == "-3/4");
  CHECK(Rational(2, -4).str() == "-1/2");
  CHECK(Rational(0).is_zero());
  CHECK(Rational(7, 7).is_one());
  CHECK(a.inv().str() == "4/3");
  CHECK_THROWS_AS(Rational(1, 0), error);
  CHECK_THROWS_AS(Rational(1).operator/=(Rational(0)), error);
  CHECK_THROWS_AS(Rational::parse("abc"), error);

  Rational root;
  CHECK(Rational(49, 16).sqrt_exact(&root));
  CHECK(root.str() == "7/4");
  CHECK_FALSE(Rational(2).sqrt_exact(&root));
  CHECK_FALSE(Rational(-4).sqrt_exact(&root));
  CHECK(Rational(0).sqrt_exact(&root));
  CHECK(root.is_zero());
}

TEST_CASE("prime field arithmetic") {
  Fp a(3, 5), b(4, 5);
  CHECK((a + b).value() == 2);
  CHECK((a * b).value() == 2);
  CHECK((a - b).value() == 4);
  CHECK(a.inv().value() == 2);  // 3*2 = 6 = 1 mod 5
  CHECK((a / b).str() == "2 mod 5");
  CHECK(Fp::from_int(-1, 5).value() == 4);
  CHECK(Fp::parse("7 mod 5", 5).value() == 2);
  CHECK_THROWS_AS(Fp::parse("3 mod 7", 5), error);
  CHECK_THROWS_AS(Fp(1, 5) + Fp(1, 7), error);
  CHECK_THROWS_AS(Fp(0, 5).inv(), error);
  // Modulus-free zero adopts the other side's field.
  Fp z;
  CHECK((z + a).str() == "3 mod 5");
  CHECK((a * Fp()).is_zero());
}

TEST_CASE("rank on known matrices") {
  CHECK(mq(3, 3, {0, 0, 0, 0, 0, 0, 0, 0, 0}).rank() == 0);
  CHECK(Matrix<Rational>::identity(4, Rational(1)).rank() == 4);
  CHECK(mq(2, 2, {1, 2, 2, 4}).rank() == 1);
  CHECK(mq(2, 3, {1, 2, 3, 2, 4, 6}).rank() == 1);
  CHECK(mq(3, 3, {1, 2, 3, 4, 5, 6, 7, 8, 9}).rank() == 2);
}

TEST_CASE("solve with deterministic free variables") {
  // x + 2y + 3z = 1; 2x + 4y + 7z = 2: pivots x and z, free y = 0.
  auto m = mq(2, 3, {1, 2, 3, 2, 4, 7});
  auto x = m.solve({Rational(1), Rational(2)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Rational(1));
  CHECK((*x)[1] == Rational(0));
  CHECK((*x)[2] == Rational(0));

  // Inconsistent system.
  auto bad = mq(2, 2, {1, 1, 1, 1}).solve({Rational(0), Rational(1)});
  CHECK_FALSE(bad.has_value());

  // The documented pivot rule: first nonzero row in column order.
  auto t = mq(2, 2, {0, 1, 1, 0});
  auto piv = t.column_space_pivots();
  REQUIRE(piv.size() == 2);
}

TEST_CASE("property: solve returns vectors that satisfy the system") {
  Rng rng(20260816);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 2 + static_cast<int>(rng.below(4));
    int m = 2 + static_cast<int>(rng.below(4));
    Matrix<Rational> a(m, n);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) a.at(i, j) = Rational(rng.range(-5, 5));
    // Build a consistent rhs from a random preimage.
    std::vector<Rational> pre(n);
    for (auto& v : pre) v = Rational(rng.range(-5, 5));
    auto b = a.apply(pre);
    auto x = a.solve(b);
    REQUIRE(x.has_value());
    auto bx = a.apply(*x);
    CHECK(bx == b);
  }
}

TEST_CASE("property: modular rank never exceeds rational rank") {
  Rng rng(424242);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + static_cast<int>(rng.below(5));
    int m = 1 + static_cast<int>(rng.below(5));
    Matrix<Rational> a(m, n);
    Matrix<Fp> ap(m, n, Fp(0, 5));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) {
        long v = static_cast<long>(rng.range(-10, 10));
        a.at(i, j) = Rational(v);
        ap.at(i, j) = Fp::from_int(v, 5);
      }
    CHECK(ap.rank() <= a.rank());
  }
}

TEST_CASE("property: rank invariant under row shuffles and scalings") {
  Rng rng(777);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + static_cast<int>(rng.below(4));
    Matrix<Rational> a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a.at(i, j) = Rational(rng.range(-4, 4));
    int r = a.rank();
    // Scale a random row by a nonzero scalar and swap two rows.
    int row = static_cast<int>(rng.below(n));
    long c = 0;
    while (c == 0) c = static_cast<long>(rng.range(-3, 3));
    for (int j = 0; j < n; ++j) a.at(row, j) *= Rational(c);
    int r1 = static_cast<int>(rng.below(n)), r2 = static_cast<int>(rng.below(n));
    for (int j = 0; j < n; ++j) std::swap(a.at(r1, j), a.at(r2, j));
    CHECK(a.rank() == r);
  }
}
