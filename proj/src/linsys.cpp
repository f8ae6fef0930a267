#include "birat/linsys.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "birat/cancel.hpp"

namespace birat {

namespace {

std::unordered_map<Monomial, std::size_t, MonomialHash> index_of(const std::vector<Monomial>& mons) {
  std::unordered_map<Monomial, std::size_t, MonomialHash> idx;
  for (std::size_t i = 0; i < mons.size(); ++i) idx[mons[i]] = i;
  return idx;
}

// falling factorial a (a-1) ... (a-b+1) mod p
Coef falling(const Field& F, int a, int b) {
  Coef r = 1;
  for (int k = 0; k < b; ++k) r = F.mul(r, F.reduce(a - k));
  return r;
}

std::vector<MultiPoly> forms_from_kernel(const RingPtr& R, const std::vector<std::vector<Coef>>& ker,
                                         const std::vector<Monomial>& mons) {
  std::vector<MultiPoly> out;
  for (const auto& v : ker) {
    std::vector<Term> ts;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i]) ts.push_back({mons[i], v[i]});
    out.push_back(MultiPoly::from_terms(R, std::move(ts)));
  }
  return out;
}

}  // namespace

Matrix coefficient_matrix(const std::vector<MultiPoly>& polys, const std::vector<Monomial>& mons) {
  auto idx = index_of(mons);
  Matrix m(polys.size(), mons.size());
  for (std::size_t r = 0; r < polys.size(); ++r)
    for (const auto& t : polys[r].terms()) {
      auto it = idx.find(t.mono);
      if (it == idx.end()) throw std::invalid_argument("coefficient_matrix: monomial outside basis");
      m.at(r, it->second) = t.coef;
    }
  return m;
}

std::vector<MultiPoly> span_basis(const std::vector<MultiPoly>& polys) {
  if (polys.empty()) return {};
  const RingPtr& R = polys.front().ring();
  std::vector<Monomial> mons;
  {
    std::unordered_map<Monomial, int, MonomialHash> seen;
    for (const auto& f : polys)
      for (const auto& t : f.terms())
        if (seen.emplace(t.mono, 0).second) mons.push_back(t.mono);
    std::sort(mons.begin(), mons.end(), [&](const Monomial& a, const Monomial& b) { return R->compare(a, b) > 0; });
  }
  Matrix m = coefficient_matrix(polys, mons);
  row_reduce(m, R->field());
  std::vector<MultiPoly> out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::vector<Term> ts;
    for (std::size_t c = 0; c < mons.size(); ++c)
      if (m.at(r, c)) ts.push_back({mons[c], m.at(r, c)});
    out.push_back(MultiPoly::from_sorted_terms(R, std::move(ts)));
  }
  return out;
}

bool same_span(const std::vector<MultiPoly>& a, const std::vector<MultiPoly>& b) {
  auto ea = span_basis(a), eb = span_basis(b);
  if (ea.size() != eb.size()) return false;
  for (std::size_t i = 0; i < ea.size(); ++i)
    if (ea[i] != eb[i]) return false;
  return true;
}

LinearSystem multiplicity_basis_oracle(const Ideal& I, int d, int e) {
  if (e < 1 || d < e - 1) throw std::invalid_argument("multiplicity_basis_oracle: need d >= e - 1 >= 0");
  const RingPtr& R = I.ring();
  const Field& F = R->field();
  const int n = R->nvars();
  const auto& G = I.gb();
  auto mons = monomials_of_degree(*R, d);
  const int dl = d - e + 1;
  auto low = monomials_of_degree(*R, dl);
  std::vector<MultiPoly> low_polys;
  low_polys.reserve(low.size());
  for (const auto& m : low) low_polys.push_back(MultiPoly::monomial(R, m));
  auto nf = G.normal_forms(low_polys);
  auto low_idx = index_of(low);
  // standard monomials that occur
  std::vector<Monomial> std_mons;
  std::unordered_map<Monomial, std::size_t, MonomialHash> std_idx;
  for (const auto& f : nf)
    for (const auto& t : f.terms())
      if (std_idx.emplace(t.mono, std_mons.size()).second) std_mons.push_back(t.mono);
  auto betas = monomials_of_degree(*R, e - 1);
  Matrix A(betas.size() * std_mons.size(), mons.size());
  for (std::size_t bi = 0; bi < betas.size(); ++bi) {
    const Monomial& beta = betas[bi];
    for (std::size_t a = 0; a < mons.size(); ++a) {
      const Monomial& m = mons[a];
      if (!divides(beta, m)) continue;
      Coef c = 1;
      for (int v = 0; v < n; ++v) c = F.mul(c, falling(F, m.exp[v], beta.exp[v]));
      if (!c) continue;
      Monomial q = quotient(m, beta);
      q.degree = static_cast<std::uint16_t>(R->degree_of(q));
      const MultiPoly& r = nf[low_idx.at(q)];
      for (const auto& t : r.terms()) {
        std::size_t row = bi * std_mons.size() + std_idx.at(t.mono);
        A.at(row, a) = F.add(A.at(row, a), F.mul(c, t.coef));
      }
    }
    check_deadline();
  }
  LinearSystem L;
  L.ring = R;
  L.degree = d;
  L.multiplicity = e;
  L.basis = span_basis(forms_from_kernel(R, kernel(std::move(A), F), mons));
  return L;
}

LinearSystem power_saturation_basis(const Ideal& I, int d, int e, Rng& rng, int target_dim, int max_extra) {
  const RingPtr& R = I.ring();
  const int n = R->nvars();
  const Field& F = R->field();
  // generic coordinates: the last variable becomes a generic linear form
  std::vector<Coef> c(static_cast<std::size_t>(n), 0);
  for (int i = 0; i + 1 < n; ++i) c[i] = random_coef(rng, F);
  std::vector<MultiPoly> fwd, back;
  for (int i = 0; i + 1 < n; ++i) {
    fwd.push_back(MultiPoly::variable(R, i));
    back.push_back(MultiPoly::variable(R, i));
  }
  MultiPoly lf = MultiPoly::variable(R, n - 1), lb = lf;
  for (int i = 0; i + 1 < n; ++i) {
    lf += MultiPoly::variable(R, i).scale(c[i]);
    lb -= MultiPoly::variable(R, i).scale(c[i]);
  }
  fwd.push_back(lf);
  back.push_back(lb);
  Ideal Ie = ideal_power(I, e);
  std::vector<MultiPoly> moved;
  for (const auto& g : Ie.gens()) moved.push_back(g.substitute(fwd, R));
  Ideal J(R, moved);
  LinearSystem L;
  L.ring = R;
  L.degree = d;
  L.multiplicity = e;
  for (int D = d; D <= d + max_extra; ++D) {
    auto G = groebner_basis(J, R->order(), D);
    // elements of J : x_{n-1}^inf of degree <= d
    std::vector<MultiPoly> low;
    for (const auto& g : G.elements()) {
      int k = 255;
      for (const auto& t : g.terms()) k = std::min<int>(k, t.mono.exp[n - 1]);
      if (g.degree() - k > d) continue;
      std::vector<Term> ts = g.terms();
      for (auto& t : ts) {
        t.mono.exp[n - 1] = static_cast<std::uint8_t>(t.mono.exp[n - 1] - k);
        t.mono.degree = static_cast<std::uint16_t>(R->degree_of(t.mono));
      }
      low.push_back(MultiPoly::from_sorted_terms(R, std::move(ts)));
    }
    // degree-d span of the ideal they generate
    std::vector<MultiPoly> span;
    for (const auto& g : low) {
      for (const auto& m : monomials_of_degree(*R, d - g.degree())) span.push_back(g.mul_term(m, 1));
    }
    auto basis = span_basis(span);
    L.truncation = D;
    L.basis = basis;
    if (target_dim >= 0 && static_cast<int>(basis.size()) >= target_dim) break;
    if (!G.truncated()) break;
  }
  std::vector<MultiPoly> out;
  for (const auto& g : L.basis) out.push_back(g.substitute(back, R));
  L.basis = span_basis(out);
  return L;
}

LinearSystem plane_system(const RingPtr& plane, int d, const std::vector<PlanePoint>& points) {
  if (plane->nvars() != 3) throw std::invalid_argument("plane_system needs 3 variables");
  const Field& F = plane->field();
  auto mons = monomials_of_degree(*plane, d);
  Matrix A(0, mons.size());
  std::size_t expected_conditions = 0;
  for (const auto& pt : points) {
    if (pt.coords.size() != 3) throw std::invalid_argument("plane point needs 3 coordinates");
    const int m = pt.multiplicity;
    expected_conditions += static_cast<std::size_t>(m * (m + 1) / 2);
    for (const auto& beta : monomials_of_degree(*plane, m - 1)) {
      std::vector<Coef> row(mons.size(), 0);
      for (std::size_t a = 0; a < mons.size(); ++a) {
        const Monomial& mon = mons[a];
        if (!divides(beta, mon)) continue;
        Coef c = 1;
        for (int v = 0; v < 3; ++v) {
          c = F.mul(c, falling(F, mon.exp[v], beta.exp[v]));
          c = F.mul(c, F.pow(pt.coords[v], static_cast<std::uint64_t>(mon.exp[v] - beta.exp[v])));
        }
        row[a] = c;
      }
      A.append_row(row);
    }
  }
  LinearSystem L;
  L.ring = plane;
  L.degree = d;
  L.multiplicity = 1;
  auto ker = kernel(std::move(A), F);
  L.basis = forms_from_kernel(plane, ker, mons);
  std::size_t expected = mons.size() > expected_conditions ? mons.size() - expected_conditions : 0;
  L.dependent_conditions = ker.size() > expected;
  return L;
}

}  // namespace birat
