#include <doctest.h>

#include "dimer/linalg.hpp"

using namespace dimer;

namespace {

MatQ mat(int r, int c, std::initializer_list<int> v) {
  MatQ m(r, c);
  auto it = v.begin();
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = *it++;
  return m;
}

}  // namespace

TEST_SUITE("linalg") {
TEST_CASE("rank and nullspace") {
  MatQ a = mat(3, 3, {1, 2, 3, 2, 4, 6, 1, 0, 1});
  CHECK(rank(a) == 2);
  MatQ k = nullspace(a);
  REQUIRE(k.cols() == 1);
  CHECK(is_zero(MatQ(a * k)));
  MatQ l = left_nullspace(a);
  REQUIRE(l.rows() == 1);
  CHECK(is_zero(MatQ(l * a)));
}

TEST_CASE("solve is exact over the rationals") {
  MatQ a = mat(2, 2, {3, 1, 1, 3});
  MatQ b = mat(2, 1, {1, 0});
  auto x = solve(a, b);
  REQUIRE(x);
  CHECK((*x)(0, 0) == Rational(3, 8));
  CHECK((*x)(1, 0) == Rational(-1, 8));
  CHECK_FALSE(solve(mat(2, 1, {1, 2}), mat(2, 1, {1, 0})).has_value());
}

TEST_CASE("inverse") {
  MatQ a = mat(2, 2, {2, 1, 1, 1});
  auto inv = inverse(a);
  REQUIRE(inv);
  CHECK(MatQ(a * *inv) == MatQ::Identity(2, 2));
  CHECK_FALSE(inverse(mat(2, 2, {1, 2, 2, 4})).has_value());
  CHECK(inverse(MatQ(0, 0))->size() == 0);
}

TEST_CASE("column basis and complement") {
  MatQ a = mat(3, 3, {1, 2, 0, 0, 0, 1, 0, 0, 0});
  MatQ b = column_basis(a);
  CHECK(b.cols() == 2);
  MatQ c = complement_basis(b, 3);
  CHECK(c.cols() == 1);
  MatQ all(3, 3);
  all << b, c;
  CHECK(rank(all) == 3);
  CHECK(in_column_span(b, mat(3, 1, {5, 7, 0})));
  CHECK_FALSE(in_column_span(b, mat(3, 1, {0, 0, 1})));
}
}
