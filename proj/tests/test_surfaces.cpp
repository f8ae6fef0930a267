#include "birat/hilbert.hpp"
#include "birat/surfaces.hpp"
#include "doctest.h"

using namespace birat;

TEST_CASE("projection of the twisted cubic") {
  auto P3 = make_ring(32003, 4);
  Rng rng(5);
  Ideal C(P3, {parse_poly(P3, "x0*x2 - x1^2"), parse_poly(P3, "x0*x3 - x1*x2"), parse_poly(P3, "x1*x3 - x2^2")});
  Ideal image = project_from_center(C, {{0, 1, 0, 1}}, rng);
  CHECK(image.ring()->nvars() == 3);
  REQUIRE(image.gens().size() == 1);
  CHECK(image.gens().front().degree() == 3);
}

TEST_CASE("Veronese surface from plane forms") {
  auto P2 = make_ring(32003, 3);
  Rng rng(6);
  Ideal V = plane_image(Ideal::irrelevant(P2).degree_part(2), 2, rng);
  CHECK(V.gens().size() == 6);
  CHECK(dim_degree(V) == std::make_pair(2, std::int64_t{4}));
}

TEST_CASE("quintic del Pezzo surface") {
  auto a = build_surface({SurfaceTag::DP5, 32003, 1});
  auto b = build_surface({SurfaceTag::DP5, 32003, 1});
  CHECK(a.degree == 5);
  CHECK(a.ideal.equals(b.ideal));
  CHECK(dim_degree(a.ideal) == std::make_pair(2, std::int64_t{5}));
  CHECK(a.ideal.degree_part(3).size() == 25);
  CHECK(a.nodes == 0);
}

TEST_CASE("tags round trip") {
  for (auto t : all_surface_tags()) CHECK(parse_tag(tag_name(t)) == t);
  CHECK_THROWS(parse_tag("nonsense"));
}
