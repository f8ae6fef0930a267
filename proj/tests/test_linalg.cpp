#include <random>

#include "birat/linalg.hpp"
#include "doctest.h"

using namespace birat;

TEST_CASE("row reduction, kernel and solve") {
  Field F(101);
  std::mt19937_64 rng(9);
  for (int t = 0; t < 20; ++t) {
    std::size_t r = 1 + rng() % 9, c = 1 + rng() % 9, k = 1 + rng() % 5;
    // rank <= k by construction
    Matrix A(r, k), B(k, c), M(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < k; ++j) A.at(i, j) = rng() % 101;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < c; ++j) B.at(i, j) = rng() % 101;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) {
        std::uint64_t s = 0;
        for (std::size_t l = 0; l < k; ++l) s += A.at(i, l) * B.at(l, j);
        M.at(i, j) = static_cast<Coef>(s % 101);
      }
    auto ker = kernel(M, F);
    CHECK(ker.size() + rank(M, F) == c);
    CHECK(rank(M, F) <= std::min(k, std::min(r, c)));
    for (const auto& v : ker)
      for (std::size_t i = 0; i < r; ++i) {
        std::uint64_t s = 0;
        for (std::size_t j = 0; j < c; ++j) s += M.at(i, j) * v[j];
        CHECK(s % 101 == 0);
      }
    Matrix E = M;
    auto piv = row_reduce(E, F);
    for (std::size_t i = 0; i < piv.size(); ++i)
      for (std::size_t i2 = 0; i2 < piv.size(); ++i2) CHECK(E.at(i2, piv[i]) == (i == i2 ? 1u : 0u));
  }
  Matrix I2(2, 2);
  I2.at(0, 0) = 1;
  I2.at(1, 1) = 3;
  std::vector<Coef> x;
  REQUIRE(solve(I2, {5, 6}, F, x));
  CHECK(x == std::vector<Coef>{5, 2});
}
