#include <random>

#include "birat/f4.hpp"
#include "birat/poly.hpp"
#include "doctest.h"

using namespace birat;

TEST_CASE("fp_inv") {
  CHECK(fp_inv(3, 7) == 5);
  CHECK(fp_inv(1, 32003) == 1);
  CHECK_THROWS_AS(fp_inv(0, 7), MathError);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 100; ++i) {
    Coef a = 1 + rng() % 32002;
    CHECK(Field(32003).mul(a, fp_inv(a, 32003)) == 1);
  }
}

TEST_CASE("f4 small basis") {
  auto R = make_ring(32003, 3);
  F4 f4(R);
  f4.add_input(parse_poly(R, "x0^2 - x1*x2"));
  f4.add_input(parse_poly(R, "x0*x1 - x2^2"));
  f4.run();
  CHECK(f4.basis().size() == 3);
  auto nf = f4.normal_forms({parse_poly(R, "x1^2*x2 - x0*x2^2")});
  CHECK(nf[0].is_zero());
}

#include "oracle.hpp"

namespace {
void compare_with_oracle(const RingPtr& R, std::vector<MultiPoly> gens, std::vector<int> shifts = {}) {
  F4 f4(R, shifts);
  for (auto& g : gens) f4.add_input(g);
  f4.run();
  auto G = f4.basis();
  auto O = oracle::buchberger(gens);
  REQUIRE(G.size() == O.size());
  for (std::size_t i = 0; i < G.size(); ++i) CHECK(G[i] == O[i]);
}
}  // namespace

TEST_CASE("f4 agrees with buchberger on random ideals") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    auto R = make_ring(101, 4);
    std::vector<MultiPoly> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(oracle::random_form(R, 2 + (k == 2), 4, rng));
    compare_with_oracle(R, gens);
  }
  for (int trial = 0; trial < 10; ++trial) {
    auto R = make_ring(32003, 3, MonomialOrder::lex());
    std::vector<MultiPoly> gens;
    for (int k = 0; k < 2; ++k) gens.push_back(oracle::random_form(R, 2, 3, rng));
    compare_with_oracle(R, gens);
  }
  for (int trial = 0; trial < 10; ++trial) {
    auto R = make_ring(32003, 5, MonomialOrder::eliminate(2), {1, 1, 1, 1, 2});
    std::vector<MultiPoly> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(oracle::random_form(R, 2 + k % 2, 3, rng));
    compare_with_oracle(R, gens);
  }
  for (int trial = 0; trial < 10; ++trial) {
    auto R = make_ring(32003, 3);
    std::vector<MultiPoly> gens;
    for (int k = 0; k < 4; ++k) {
      // element of F = R(0) + R(-1): degree 2 row
      gens.push_back(oracle::random_form(R, 2, 3, rng, 0) + oracle::random_form(R, 1, 2, rng, 1));
    }
    compare_with_oracle(R, gens, {0, 1});
  }
}
