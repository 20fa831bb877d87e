#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hdx/algebra.hpp"

using namespace hdx;
using namespace hdx::algebra;

namespace {

Poly constant(int a) { return Poly::constant((std::uint8_t)a); }

Mat elem(const Ring& r, int n1, int i, int j, const Poly& p) {
  return elementary_matrix(r, n1, i, j, p);
}

}  // namespace

TEST_CASE("field axioms hold exhaustively for small q") {
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    const Field& f = Field::get(q);
    for (int a = 0; a < q; ++a) {
      CHECK(f.add(a, 0) == a);
      CHECK(f.mul(a, 1) == a);
      CHECK(f.add(a, f.neg(a)) == 0);
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
      for (int b = 0; b < q; ++b) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        for (int c = 0; c < q; ++c) {
          CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
          CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        }
      }
    }
  }
}

TEST_CASE("quotient arithmetic commutes with truncation") {
  Ring full = Ring::make_poly(3);
  Ring quot = Ring::make_quotient(3, 3);
  // truncate(x*y) == truncate(truncate(x)*truncate(y)) over a sweep
  for (int a0 = 0; a0 < 3; ++a0)
    for (int a1 = 0; a1 < 3; ++a1)
      for (int b0 = 0; b0 < 3; ++b0)
        for (int b3 = 0; b3 < 3; ++b3) {
          Poly x = poly_add(full, constant(a0), Poly::monomial((std::uint8_t)a1, 2));
          Poly y = poly_add(full, constant(b0), Poly::monomial((std::uint8_t)b3, 3));
          Poly lhs = poly_truncate(quot, poly_mul(full, x, y));
          Poly rhs = poly_mul(quot, poly_truncate(quot, x), poly_truncate(quot, y));
          CHECK(lhs == rhs);
        }
}

TEST_CASE("elementary matrix basics") {
  Ring r = Ring::make_field(5);
  // e_{1,2}(0) = identity
  CHECK(elem(r, 4, 1, 2, Poly::zero()) == Mat::identity(r, 4));
  // index checks
  CHECK_THROWS_AS(elementary_matrix(r, 4, 0, 2, constant(1)), Error);
  CHECK_THROWS_AS(elementary_matrix(r, 4, 2, 2, constant(1)), Error);
  // degree cap
  Ring pr = Ring::make_poly(2);
  CHECK_THROWS_AS(elementary_matrix(pr, 4, 1, 2, Poly::monomial(1, 2), true), Error);
  CHECK_NOTHROW(elementary_matrix(pr, 4, 1, 4, Poly::monomial(1, 3), true));
}

TEST_CASE("matrix multiplication and truncation") {
  Ring r = Ring::make_field(2);
  Mat a = elem(r, 4, 1, 2, constant(1));
  Mat b = elem(r, 4, 2, 3, constant(1));
  Mat ab = mat_mul(r, a, b);
  CHECK(ab.at(1, 3) == constant(1));
  CHECK(mat_mul(r, Mat::identity(r, 4), ab) == ab);

  Ring q2 = Ring::make_quotient(2, 2);
  Mat at = elem(q2, 4, 1, 2, Poly::monomial(1, 1));
  Mat bt = elem(q2, 4, 2, 3, Poly::monomial(1, 1));
  // (1,3) entry t^2 vanishes in F2[t]/(t^2)
  CHECK(mat_mul(q2, at, bt).at(1, 3).is_zero());
}

TEST_CASE("unitriangular inverse") {
  Ring r = Ring::make_field(5);
  for (int a = 0; a < 5; ++a) {
    Mat m = elem(r, 4, 1, 2, constant(a));
    Mat inv = mat_inverse_unitriangular(r, m);
    CHECK(inv == elem(r, 4, 1, 2, constant((5 - a) % 5)));
  }
  CHECK(mat_inverse_unitriangular(r, Mat::identity(r, 4)) == Mat::identity(r, 4));
  Mat prod = mat_mul(r, elem(r, 4, 1, 2, constant(1)), elem(r, 4, 2, 3, constant(1)));
  CHECK(mat_mul(r, prod, mat_inverse_unitriangular(r, prod)) == Mat::identity(r, 4));

  Mat lower = Mat::identity(r, 4);
  lower.at(3, 1) = constant(1);
  CHECK_THROWS_AS(mat_inverse_unitriangular(r, lower), Error);
}

TEST_CASE("commutator identity [e12(a), e23(b)] = e13(ab) over F3") {
  Ring r = Ring::make_field(3);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      Mat lhs = commutator(r, elem(r, 4, 1, 2, constant(a)), elem(r, 4, 2, 3, constant(b)));
      const Field& f = Field::get(3);
      CHECK(lhs == elem(r, 4, 1, 3, constant(f.mul(a, b))));
    }
}

// Steinberg relation families as matrix identities, exhaustive at 4x4.
static void check_steinberg_field(int q) {
  Ring r = Ring::make_field(q);
  const Field& f = Field::get(q);
  const int n1 = 4;
  for (int i = 1; i <= n1; ++i)
    for (int j = i + 1; j <= n1; ++j)
      for (int a1 = 0; a1 < q; ++a1)
        for (int a2 = 0; a2 < q; ++a2) {
          Mat lhs = mat_mul(r, elem(r, n1, i, j, constant(a1)), elem(r, n1, i, j, constant(a2)));
          CHECK(lhs == elem(r, n1, i, j, constant(f.add(a1, a2))));
        }
  for (int i1 = 1; i1 <= n1; ++i1)
    for (int j1 = i1 + 1; j1 <= n1; ++j1)
      for (int i2 = 1; i2 <= n1; ++i2)
        for (int j2 = i2 + 1; j2 <= n1; ++j2)
          for (int a1 = 0; a1 < q; ++a1)
            for (int a2 = 0; a2 < q; ++a2) {
              Mat c = commutator(r, elem(r, n1, i1, j1, constant(a1)),
                                 elem(r, n1, i2, j2, constant(a2)));
              Mat expect = Mat::identity(r, n1);
              if (j1 == i2)
                expect = elem(r, n1, i1, j2, constant(f.mul(a1, a2)));
              else if (j2 == i1)
                expect = elem(r, n1, i2, j1, constant(f.neg(f.mul(a1, a2))));
              CHECK(c == expect);
            }
}

TEST_CASE("Steinberg relations (St1)/(St2), q in {2,3,5}, 4x4") {
  check_steinberg_field(2);
  check_steinberg_field(3);
  check_steinberg_field(5);
}

// Pure-degree variants in the degree-constrained polynomial group.
static void check_steinberg_pure_degree(int q) {
  Ring r = Ring::make_poly(q);
  const Field& f = Field::get(q);
  const int n1 = 4;
  for (int i = 1; i <= n1; ++i)
    for (int j = i + 1; j <= n1; ++j)
      for (int k = 0; k <= j - i; ++k)
        for (int a = 0; a < q; ++a)
          for (int b = 0; b < q; ++b) {
            Mat lhs =
                mat_mul(r, elementary_matrix(r, n1, i, j, Poly::monomial((std::uint8_t)a, k), true),
                        elementary_matrix(r, n1, i, j, Poly::monomial((std::uint8_t)b, k), true));
            CHECK(lhs == elementary_matrix(r, n1, i, j, Poly::monomial(f.add(a, b), k), true));
          }
  for (int i1 = 1; i1 <= n1; ++i1)
    for (int j1 = i1 + 1; j1 <= n1; ++j1)
      for (int i2 = 1; i2 <= n1; ++i2)
        for (int j2 = i2 + 1; j2 <= n1; ++j2)
          for (int k1 = 0; k1 <= j1 - i1; ++k1)
            for (int k2 = 0; k2 <= j2 - i2; ++k2)
              for (int a = 1; a < q; ++a)
                for (int b = 1; b < q; ++b) {
                  Mat c = commutator(r, elementary_matrix(r, n1, i1, j1, Poly::monomial((std::uint8_t)a, k1), true),
                                     elementary_matrix(r, n1, i2, j2, Poly::monomial((std::uint8_t)b, k2), true));
                  Mat expect = Mat::identity(r, n1);
                  if (j1 == i2)
                    expect = elementary_matrix(r, n1, i1, j2,
                                               Poly::monomial(f.mul(a, b), k1 + k2), true);
                  else if (j2 == i1)
                    expect = elementary_matrix(r, n1, i2, j1,
                                               Poly::monomial(f.neg(f.mul(a, b)), k1 + k2), true);
                  CHECK(c == expect);
                }
}

TEST_CASE("pure-degree Steinberg relations (pdS1)/(pdS2), q in {2,3}, 4x4") {
  check_steinberg_pure_degree(2);
  check_steinberg_pure_degree(3);
}

TEST_CASE("degree pattern recognizer") {
  Ring r = Ring::make_poly(2);
  Mat m = elem(r, 4, 1, 4, Poly::monomial(1, 3));
  CHECK(satisfies_degree_pattern(m));
  Mat bad = Mat::identity(r, 4);
  bad.at(1, 2) = Poly::monomial(1, 2);  // degree 2 > j-i = 1
  CHECK(!satisfies_degree_pattern(bad));
}
