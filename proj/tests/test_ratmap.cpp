#include "birat/ratmap.hpp"
#include "doctest.h"

using namespace birat;

namespace {

Ideal twisted_cubic(const RingPtr& R) {
  return Ideal(R, {parse_poly(R, "x0*x2 - x1^2"), parse_poly(R, "x0*x3 - x1*x2"), parse_poly(R, "x1*x3 - x2^2")});
}

std::vector<MultiPoly> variables(const RingPtr& R) {
  std::vector<MultiPoly> v;
  for (int i = 0; i < R->nvars(); ++i) v.push_back(MultiPoly::variable(R, i));
  return v;
}

}  // namespace

TEST_CASE("projective degrees of simple maps") {
  auto P4 = make_ring(32003, 5);
  Rng rng(1);
  RationalMap id(Ideal::zero(P4), variables(P4));
  CHECK(projective_degrees(id, rng) == ProjectiveDegrees{1, 1, 1, 1, 1});

  auto P2 = make_ring(32003, 3);
  RationalMap cremona(Ideal::zero(P2), {parse_poly(P2, "x1*x2"), parse_poly(P2, "x0*x2"), parse_poly(P2, "x0*x1")});
  CHECK(projective_degrees(cremona, rng) == ProjectiveDegrees{1, 2, 1});

  // a linear change of target coordinates does not move the degrees
  std::vector<Coef> a, a_inv;
  random_invertible(rng, P2->field(), 3, a, a_inv);
  std::vector<MultiPoly> moved;
  for (int i = 0; i < 3; ++i) {
    MultiPoly f(P2);
    for (int j = 0; j < 3; ++j) f += cremona.forms()[j].scale(a[i * 3 + j]);
    moved.push_back(f);
  }
  CHECK(projective_degrees(RationalMap(Ideal::zero(P2), moved), rng) == ProjectiveDegrees{1, 2, 1});

  // projection of the twisted cubic from a point off it: a plane cubic
  auto P3 = make_ring(32003, 4);
  RationalMap proj(twisted_cubic(P3), {parse_poly(P3, "x0"), parse_poly(P3, "x1 + x3"), parse_poly(P3, "x2")});
  CHECK(projective_degrees(proj, rng) == ProjectiveDegrees{3, 3});
}

TEST_CASE("images: interpolation agrees with elimination") {
  auto P1 = make_ring(32003, 2);
  Rng rng(2);
  RationalMap nu(Ideal::zero(P1), {parse_poly(P1, "x0^3"), parse_poly(P1, "x0^2*x1"), parse_poly(P1, "x0*x1^2"),
                                   parse_poly(P1, "x1^3")});
  Ideal by_points = image_up_to(nu, 2, rng);
  Ideal by_graph = image_by_elimination(nu);
  CHECK(by_points.gens().size() == 3);
  CHECK(by_points.equals(by_graph));
  CHECK(dim_degree(by_points) == std::make_pair(1, std::int64_t{3}));

  auto P2 = make_ring(32003, 3);
  RationalMap veronese(Ideal::zero(P2), Ideal::irrelevant(P2).degree_part(2));
  auto quadrics = image_degree_part(veronese, 2, rng);
  CHECK(quadrics.size() == 6);
  CHECK(Ideal(veronese.target_ring(), quadrics).equals(image_by_elimination(veronese)));
}

TEST_CASE("fibers, secancy and inverse maps") {
  auto P3 = make_ring(32003, 4);
  Rng rng(3);
  // projection from (0:0:0:1): fibers are lines through the center
  RationalMap pr(Ideal::zero(P3), {parse_poly(P3, "x0"), parse_poly(P3, "x1"), parse_poly(P3, "x2")});
  std::vector<Coef> p{1, 2, 3, 4};
  Ideal F = fiber_at(pr, p, rng);
  CHECK(dim_degree(F) == std::make_pair(1, std::int64_t{1}));
  for (const auto& g : F.gens()) CHECK(g.evaluate(p) == 0);
  // a secant line of the twisted cubic meets it twice
  Ideal secant(P3, {parse_poly(P3, "x0 - x2"), parse_poly(P3, "x1 - x3")});  // through (1:1:1:1) and (-1:1:-1:1)
  CHECK(intersection_length(secant, twisted_cubic(P3), rng) == 2);

  auto P2 = make_ring(32003, 3);
  RationalMap cremona(Ideal::zero(P2), {parse_poly(P2, "x1*x2"), parse_poly(P2, "x0*x2"), parse_poly(P2, "x0*x1")});
  auto inv = inverse_map(cremona, Ideal::zero(cremona.target_ring()), rng);
  CHECK(inv.delta == 2);
  CHECK(composes_to_identity(cremona, inv.map, rng, 5));

  RationalMap id(Ideal::zero(P2), variables(P2));
  auto inv_id = inverse_map(id, Ideal::zero(id.target_ring()), rng);
  CHECK(inv_id.delta == 1);
}

TEST_CASE("lines through a point of a quadric surface") {
  auto P3 = make_ring(32003, 4);
  Ideal Q(P3, {parse_poly(P3, "x0*x3 - x1*x2")});
  std::vector<Coef> q{1, 1, 1, 1};
  auto L = lines_through_point(Q, q);
  CHECK(L.dim == 0);
  CHECK(L.degree == 2);
  // a smooth cubic surface has no lines through a general point
  Ideal C(P3, {parse_poly(P3, "x0^3 + x1^3 + x2^3 + x3^3")});
  std::vector<Coef> c{1, 1, 1, 7641};  // 7641^3 = -3
  CHECK(lines_through_point(C, c).dim < 0);
}
