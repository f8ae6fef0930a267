#include "birat/zerodim.hpp"
#include "doctest.h"

using namespace birat;

TEST_CASE("algebra of a point set") {
  auto R = make_ring(32003, 3);
  // (1|4 : 1|9 : 1)
  Ideal reduced(R, {parse_poly(R, "x0^2 - 5*x0*x2 + 4*x2^2"), parse_poly(R, "x1^2 - 10*x1*x2 + 9*x2^2")});
  ZeroDimAlgebra A(reduced);
  CHECK(A.dim() == 4);
  CHECK(A.reduced_projection().rows() == 4);
  // mult by x_last is the identity
  auto v = mat_vec(A.mult(2), A.one(), A.field());
  CHECK(v == A.one());

  // x0 - 3 x2 has a double root in the chart x2 = 1
  Ideal fat(R, {parse_poly(R, "x0^2 - 6*x0*x2 + 9*x2^2"), parse_poly(R, "x1 - x2")});
  ZeroDimAlgebra B(fat);
  CHECK(B.dim() == 2);
  CHECK(B.minimal_polynomial(0) == UPoly{9, B.field().neg(6), 1});
  CHECK(B.reduced_projection().rows() == 1);
}

TEST_CASE("non zero-dimensional input is rejected") {
  auto R = make_ring(32003, 3);
  CHECK_THROWS_AS(ZeroDimAlgebra(Ideal(R, {parse_poly(R, "x0 - x1")})), MathError);
  // a point on x_last = 0
  CHECK_THROWS_AS(ZeroDimAlgebra(Ideal(R, {parse_poly(R, "x1"), parse_poly(R, "x2")})), MathError);
}
