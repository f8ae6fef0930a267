#pragma once
// Naive reference implementations used only as test oracles.

#include <algorithm>
#include <random>
#include <vector>

#include "birat/poly.hpp"

namespace oracle {

using namespace birat;

inline MultiPoly reduce_full(MultiPoly f, const std::vector<MultiPoly>& G) {
  const Field& F = f.field();
  MultiPoly r(f.ring());
  while (!f.is_zero()) {
    const Term lt = f.terms().front();
    bool hit = false;
    for (const auto& g : G) {
      if (divides(g.leading_monomial(), lt.mono)) {
        Monomial q = quotient(lt.mono, g.leading_monomial());
        q.degree = static_cast<std::uint16_t>(f.ring()->degree_of(q));
        f = f - g.mul_term(q, F.div(lt.coef, g.leading_coef()));
        hit = true;
        break;
      }
    }
    if (!hit) {
      r = r + MultiPoly::monomial(f.ring(), lt.mono, lt.coef);
      f = f - MultiPoly::monomial(f.ring(), lt.mono, lt.coef);
    }
  }
  return r;
}

inline Monomial lcm(const Ring& R, const Monomial& a, const Monomial& b) {
  Monomial m;
  for (int i = 0; i < kMaxVars; ++i) m.exp[i] = std::max(a.exp[i], b.exp[i]);
  m.comp = a.comp;
  m.degree = static_cast<std::uint16_t>(R.degree_of(m));
  return m;
}

// Plain Buchberger followed by reduction.
inline std::vector<MultiPoly> buchberger(std::vector<MultiPoly> gens) {
  std::vector<MultiPoly> G;
  for (auto& g : gens)
    if (!g.is_zero()) G.push_back(g.monic());
  if (G.empty()) return G;
  const Ring& R = *G[0].ring();
  std::vector<std::pair<std::size_t, std::size_t>> P;
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) P.push_back({j, i});
  while (!P.empty()) {
    // normal strategy: smallest lcm first
    std::size_t best = 0;
    int best_deg = 1 << 30;
    for (std::size_t k = 0; k < P.size(); ++k) {
      const auto& a = G[P[k].first];
      const auto& b = G[P[k].second];
      int d = a.leading_monomial().comp != b.leading_monomial().comp
                  ? -1
                  : lcm(R, a.leading_monomial(), b.leading_monomial()).degree;
      if (d < best_deg) {
        best_deg = d;
        best = k;
      }
    }
    auto [i, j] = P[best];
    P.erase(P.begin() + static_cast<long>(best));
    const auto a = G[i];
    const auto b = G[j];
    if (a.leading_monomial().comp != b.leading_monomial().comp) continue;
    Monomial L = lcm(R, a.leading_monomial(), b.leading_monomial());
    Monomial qa = quotient(L, a.leading_monomial());
    Monomial qb = quotient(L, b.leading_monomial());
    qa.degree = static_cast<std::uint16_t>(R.degree_of(qa));
    qb.degree = static_cast<std::uint16_t>(R.degree_of(qb));
    MultiPoly s = a.mul_term(qa, 1) - b.mul_term(qb, 1);
    MultiPoly r = reduce_full(s, G);
    if (!r.is_zero()) {
      G.push_back(r.monic());
      for (std::size_t k = 0; k + 1 < G.size(); ++k) P.push_back({k, G.size() - 1});
    }
  }
  // minimalize
  std::vector<MultiPoly> M;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool red = false;
    for (std::size_t j = 0; j < G.size() && !red; ++j) {
      if (i == j) continue;
      if (divides(G[j].leading_monomial(), G[i].leading_monomial()) &&
          (G[j].leading_monomial() != G[i].leading_monomial() || j < i))
        red = true;
    }
    if (!red) M.push_back(G[i]);
  }
  std::vector<MultiPoly> out;
  for (std::size_t i = 0; i < M.size(); ++i) {
    std::vector<MultiPoly> others;
    for (std::size_t j = 0; j < M.size(); ++j)
      if (j != i) others.push_back(M[j]);
    out.push_back(reduce_full(M[i], others).monic());
  }
  std::sort(out.begin(), out.end(), [&](const MultiPoly& x, const MultiPoly& y) {
    return R.compare(x.leading_monomial(), y.leading_monomial()) < 0;
  });
  return out;
}

inline MultiPoly random_form(const RingPtr& R, int deg, int nterms, std::mt19937_64& rng, int comp = 0) {
  auto mons = monomials_of_degree(*R, deg);
  std::vector<Term> ts;
  for (int k = 0; k < nterms; ++k) {
    Monomial m = mons[rng() % mons.size()];
    m.comp = static_cast<std::uint16_t>(comp);
    ts.push_back({m, static_cast<Coef>(1 + rng() % (R->field().characteristic() - 1))});
  }
  return MultiPoly::from_terms(R, ts);
}

}  // namespace oracle
