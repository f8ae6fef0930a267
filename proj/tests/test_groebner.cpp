#include <random>

#include "birat/groebner.hpp"
#include "birat/hilbert.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace birat;

namespace {
MultiPoly P(const RingPtr& R, const char* s) { return parse_poly(R, s); }
Ideal ideal(const RingPtr& R, std::initializer_list<const char*> gens) {
  std::vector<MultiPoly> g;
  for (auto* s : gens) g.push_back(P(R, s));
  return Ideal(R, g);
}
}  // namespace

TEST_CASE("groebner basis examples") {
  auto R = make_ring(32003, 3);
  auto I = ideal(R, {"x0^2 - x1*x2", "x0*x1 - x2^2"});
  CHECK(I.contains(P(R, "x1^2*x2 - x0*x2^2")));
  auto J = ideal(R, {"3*x0^2 + x1*x2"});
  REQUIRE(J.gb().elements().size() == 1);
  CHECK(J.gb().elements()[0] == P(R, "3*x0^2 + x1*x2").monic());
  CHECK(J.gb().normal_form(P(R, "1")) == P(R, "1"));
  // idempotence
  Ideal again(R, I.gb().elements());
  CHECK(again.gb().elements().size() == I.gb().elements().size());
  for (std::size_t i = 0; i < again.gb().elements().size(); ++i)
    CHECK(again.gb().elements()[i] == I.gb().elements()[i]);
}

TEST_CASE("normal form idempotent and membership order independent") {
  std::mt19937_64 rng(3);
  auto R = make_ring(32003, 4);
  auto L = R->with_order(MonomialOrder::lex());
  for (int t = 0; t < 5; ++t) {
    std::vector<MultiPoly> g;
    for (int k = 0; k < 3; ++k) g.push_back(oracle::random_form(R, 2, 4, rng));
    Ideal I(R, g);
    Ideal IL = I.in_ring(L);
    auto f = oracle::random_form(R, 4, 10, rng);
    auto r = I.gb().normal_form(f);
    CHECK(I.gb().normal_form(r) == r);
    auto member = g[0] * oracle::random_form(R, 2, 3, rng) + g[1] * oracle::random_form(R, 2, 3, rng);
    CHECK(I.contains(member));
    CHECK(IL.contains(member.in_ring(L)));
    CHECK(I.contains(f) == IL.contains(f.in_ring(L)));
  }
}

TEST_CASE("elimination: conic from the Veronese graph") {
  // graph ideal is homogeneous once the target variables get weight 2
  auto W = make_ring(32003, 5, MonomialOrder::grevlex(), {1, 1, 2, 2, 2});
  Ideal Gw(W, {P(W, "x2 - x0^2"), P(W, "x3 - x0*x1"), P(W, "x4 - x1^2")});
  auto E = eliminate(Gw, 2);
  REQUIRE(E.gens().size() == 1);
  auto T = E.ring();
  CHECK(E.gens()[0] == P(T, "x0*x2 - x1^2").monic());
}

TEST_CASE("quotients and saturation") {
  auto R = make_ring(32003, 3);
  auto I = ideal(R, {"x0^2", "x0*x1"});
  auto S = saturate(I, ideal(R, {"x0"}));
  CHECK(S.equals(ideal(R, {"1"})));
  auto S2 = saturate(I, ideal(R, {"x1"}));
  CHECK(S2.equals(ideal(R, {"x0"})));
  auto Q = ideal_quotient(ideal(R, {"x0*x1"}), ideal(R, {"x0"}));
  CHECK(Q.equals(ideal(R, {"x1"})));
  auto Q2 = ideal_quotient(I, I);
  CHECK(Q2.is_unit());
  std::mt19937_64 rng(5);
  auto R4 = make_ring(32003, 4);
  for (int t = 0; t < 4; ++t) {
    std::vector<MultiPoly> g;
    for (int k = 0; k < 3; ++k)
      g.push_back(oracle::random_form(R4, 2, 3, rng) * oracle::random_form(R4, 1, 2, rng));
    Ideal A(R4, g);
    auto h = oracle::random_form(R4, 1, 2, rng) * oracle::random_form(R4, 1, 2, rng);
    auto q1 = quotient_by_form(A, h, QuotientMethod::AuxVariable);
    auto q2 = quotient_by_form(A, h, QuotientMethod::Syzygy);
    CHECK(q1.equals(q2));
    // (I : J) J ⊆ I
    Ideal H(R4, {h});
    CHECK(A.contains(q1 * H));
    auto s = saturate_by_form(A, h);
    CHECK(saturate_by_form(s, h).equals(s));
  }
}

TEST_CASE("intersection and power") {
  auto R = make_ring(32003, 3);
  auto X = intersect(ideal(R, {"x0"}), ideal(R, {"x1"}));
  CHECK(X.equals(ideal(R, {"x0*x1"})));
  auto Pw = ideal_power(ideal(R, {"x0", "x1"}), 2);
  CHECK(Pw.equals(ideal(R, {"x0^2", "x0*x1", "x1^2"})));
  CHECK(Pw.gens().size() <= 3);
  auto P1 = ideal_power(ideal(R, {"x0", "x1"}), 1);
  CHECK(P1.equals(ideal(R, {"x0", "x1"})));
}

TEST_CASE("irrelevant saturation") {
  std::mt19937_64 rng(11);
  auto R = make_ring(32003, 3);
  // (x0^2, x0 x1, x0 x2) = (x0) ∩ m^2
  auto I = ideal(R, {"x0^2", "x0*x1", "x0*x2"});
  auto S = saturate_irrelevant(I, rng);
  CHECK(S.equals(ideal(R, {"x0"})));
  auto U = saturate_irrelevant(ideal(R, {"x0", "x1", "x2^3"}), rng);
  CHECK(U.is_unit());
}

TEST_CASE("hilbert data") {
  auto R = make_ring(32003, 4);
  auto tc = ideal(R, {"x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"});
  auto h = hilbert_data(tc);
  CHECK(h.proj_dim == 1);
  CHECK(h.degree == 3);
  CHECK(h.sectional_genus() == 0);
  for (int d = 0; d <= 12; ++d) CHECK(h.series_coefficient(d) == hilbert_function(tc, d));
  CHECK(h.polynomial_at(7) == 22);
  auto R6 = make_ring(32003, 6);
  CHECK(hilbert_function(Ideal::zero(R6), 3) == 56);
  auto z = hilbert_numerator({}, *R6);
  CHECK(z == IntPoly{1});
  auto x0 = hilbert_numerator({R6->variable(0)}, *R6);
  CHECK(x0 == IntPoly{1, -1});
}

TEST_CASE("singular locus") {
  std::mt19937_64 rng(2);
  auto R = make_ring(32003, 6);
  auto Q = ideal(R, {"x0*x1 + x2*x3 + x4*x5"});
  CHECK(singular_locus(Q, 1, rng).is_unit());
  // nodal plane cubic: one singular point
  auto R3 = make_ring(32003, 3);
  auto C = ideal(R3, {"x1^2*x2 - x0^3 - x0^2*x2"});
  auto sing = singular_locus(C, 1, rng);
  auto dd = dim_degree(sing);
  CHECK(dd.first == 0);
  CHECK(dd.second == 1);
}
