#include <random>

#include "birat/linsys.hpp"
#include "doctest.h"

using namespace birat;

namespace {

std::vector<PlanePoint> random_points(Rng& rng, const Field& F, int k, int mult) {
  std::vector<PlanePoint> pts;
  for (int i = 0; i < k; ++i) pts.push_back({random_point(rng, F, 3), mult});
  return pts;
}

}  // namespace

TEST_CASE("plane systems") {
  auto P2 = make_ring(32003, 3);
  Rng rng(11);
  const Field& F = P2->field();
  auto a = plane_system(P2, 3, random_points(rng, F, 4, 1));
  CHECK(a.basis.size() == 6);
  CHECK_FALSE(a.dependent_conditions);
  CHECK(plane_system(P2, 4, random_points(rng, F, 8, 1)).basis.size() == 7);
  auto c = plane_system(P2, 10, random_points(rng, F, 10, 3));
  CHECK(c.basis.size() == 6);
  // cubics double at three collinear points: the line times a conic through them
  std::vector<PlanePoint> col = {{{1, 0, 0}, 2}, {{0, 1, 0}, 2}, {{1, 1, 0}, 2}};
  auto d = plane_system(P2, 3, col);
  CHECK(d.basis.size() == 3);
  CHECK(d.dependent_conditions);
}

TEST_CASE("multiplicity systems agree") {
  auto R = make_ring(32003, 4);
  // twisted cubic
  Ideal I(R, {parse_poly(R, "x0*x2 - x1^2"), parse_poly(R, "x0*x3 - x1*x2"), parse_poly(R, "x1*x3 - x2^2")});
  Rng rng(5);
  auto o1 = multiplicity_basis_oracle(I, 2, 1);
  CHECK(o1.basis.size() == 3);
  CHECK(same_span(o1.basis, I.degree_part(2)));
  for (int d = 3; d <= 5; ++d) {
    auto o = multiplicity_basis_oracle(I, d, 2);
    auto s = power_saturation_basis(I, d, 2, rng);
    CHECK(same_span(o.basis, s.basis));
  }
  // I^2 is saturated for the twisted cubic: h0(I^2(4)) = 6 quadric products
  CHECK(multiplicity_basis_oracle(I, 4, 2).basis.size() == 6);
}
