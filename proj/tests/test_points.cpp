#include <random>

#include "birat/points.hpp"
#include "doctest.h"

using namespace birat;

TEST_CASE("roots in F_p") {
  Field F(32003);
  std::mt19937_64 rng(4);
  // (t-3)(t-5)(t^2+1) has roots 3,5 (t^2+1 irreducible since 32003 = 3 mod 4)
  UPoly f{F.neg(15 % 32003), 0, 0, 0, 0};
  // expand directly
  UPoly a{F.neg(3), 1}, b{F.neg(5), 1}, c{1, 0, 1};
  auto mul = [&](const UPoly& x, const UPoly& y) {
    UPoly r(x.size() + y.size() - 1, 0);
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = 0; j < y.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(x[i], y[j]));
    return r;
  };
  f = mul(mul(a, b), c);
  CHECK(roots_in_field(f, F, rng) == std::vector<Coef>{3, 5});
  CHECK(roots_in_field(mul(mul(a, a), b), F, rng) == std::vector<Coef>{3, 5});
}

TEST_CASE("points on a cubic") {
  std::mt19937_64 rng(8);
  for (Coef p : {32003u, 10000019u}) {
    auto R = make_ring(p, 6);
    auto f = parse_poly(R, "x0^3 + x1^3 + x2^3 + x3^3 + x4^3 + x5^3 + 7*x0*x1*x2");
    for (int k = 0; k < 10; ++k) {
      auto pt = random_point_on_hypersurface(f, rng);
      CHECK(f.evaluate(pt) == 0);
    }
  }
}

TEST_CASE("factorization over F_p") {
  Field F(32003);
  Rng rng(9);
  // (t^2 + 1)(t - 2)(t - 7)^2
  auto mul = [&](const UPoly& x, const UPoly& y) {
    UPoly r(x.size() + y.size() - 1, 0);
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = 0; j < y.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(x[i], y[j]));
    return r;
  };
  UPoly a{1, 0, 1}, b{F.neg(2), 1}, c{F.neg(7), 1};
  UPoly f = mul(mul(a, b), mul(c, c));
  auto sq = squarefree_part(f, F);
  CHECK(sq.size() == 5);
  auto fs = irreducible_factors(f, F, rng);
  REQUIRE(fs.size() == 3);
  CHECK(fs[0].size() == 2);
  CHECK(fs[1].size() == 2);
  CHECK(fs[2] == a);
}
