#include "birat/homalg.hpp"
#include "birat/hilbert.hpp"
#include "doctest.h"

using namespace birat;

namespace {

Ideal twisted_cubic(const RingPtr& R) {
  return Ideal(R, {parse_poly(R, "x0*x2 - x1^2"), parse_poly(R, "x0*x3 - x1*x2"), parse_poly(R, "x1*x3 - x2^2")});
}

}  // namespace

TEST_CASE("syzygies") {
  auto R = make_ring(32003, 3);
  std::vector<MultiPoly> g{parse_poly(R, "x0"), parse_poly(R, "x1"), parse_poly(R, "x2")};
  auto m = generator_map(g);
  auto s = syzygies(m);
  CHECK(s.columns.size() == 3);  // Koszul relations
  CHECK(composes_to_zero(m, s));

  auto P3 = make_ring(32003, 4);
  auto gens = twisted_cubic(P3).gens();
  auto t = syzygies(gens);
  CHECK(composes_to_zero(generator_map(gens), t));
  // two independent linear relations
  int linear = 0;
  for (const auto& c : t.columns)
    if (std::all_of(c.begin(), c.end(), [](const MultiPoly& f) { return f.is_zero() || f.degree() == 1; })) ++linear;
  CHECK(linear >= 2);
}

TEST_CASE("normal bundle of the twisted cubic") {
  auto P3 = make_ring(32003, 4);
  CHECK(hom_degree_zero(twisted_cubic(P3)) == 12);
  // a point: h0(N) = 3
  Ideal pt(P3, {parse_poly(P3, "x0"), parse_poly(P3, "x1"), parse_poly(P3, "x2")});
  CHECK(hom_degree_zero(pt) == 3);
}

TEST_CASE("top components") {
  auto P3 = make_ring(32003, 4);
  Rng rng(11);
  // twisted cubic union the point (1:0:0:1) off it
  Ideal C = twisted_cubic(P3);
  Ideal p(P3, {parse_poly(P3, "x1"), parse_poly(P3, "x2"), parse_poly(P3, "x0 - x3")});
  Ideal both = intersect(C, p);
  auto top = top_component(both, rng);
  CHECK(top.ideal.equals(C));

  // double line: reduced structure is the line
  Ideal dbl(P3, {parse_poly(P3, "x0^2"), parse_poly(P3, "x0*x1"), parse_poly(P3, "x1^2")});
  CHECK(dim_degree(dbl) == std::make_pair(1, std::int64_t{3}));
  auto red = reduced_top_component(dbl, rng);
  CHECK(dim_degree(red.ideal) == std::make_pair(1, std::int64_t{1}));
  CHECK(red.ideal.equals(Ideal(P3, {parse_poly(P3, "x0"), parse_poly(P3, "x1")})));
}
