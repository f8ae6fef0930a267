#include "birat/zerodim.hpp"

#include <unordered_map>

#include "birat/cancel.hpp"
#include "birat/hilbert.hpp"

namespace birat {

namespace {

std::vector<Monomial> standard_monomials(const GroebnerBasis& G, const Ring& R, int d) {
  auto lead = G.leading_monomials();
  std::vector<Monomial> out;
  for (const auto& m : monomials_of_degree(R, d))
    if (std::none_of(lead.begin(), lead.end(), [&](const Monomial& l) { return divides(l, m); })) out.push_back(m);
  return out;
}

std::vector<Coef> add_scaled(std::vector<Coef> a, const std::vector<Coef>& b, Coef c, const Field& F) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = F.add(a[i], F.mul(c, b[i]));
  return a;
}

}  // namespace

ZeroDimAlgebra::ZeroDimAlgebra(const Ideal& J) : field_(J.ring()->field()) {
  const RingPtr& R = J.ring();
  const int n = R->nvars();
  auto [dim, deg] = dim_degree(J);
  if (dim != 0) throw MathError("ZeroDimAlgebra needs a zero-dimensional scheme");
  const auto N = static_cast<std::size_t>(deg);
  const auto& G = J.gb();
  // a degree where the Hilbert function has reached the degree
  int r = 0;
  while (static_cast<std::size_t>(hilbert_function(J, r)) != N) {
    if (++r > static_cast<int>(N) + 1) throw MathError("ZeroDimAlgebra: ideal is not saturated");
  }
  auto base = standard_monomials(G, *R, r);
  auto next = standard_monomials(G, *R, r + 1);
  if (base.size() != N || next.size() != N) throw MathError("ZeroDimAlgebra: ideal is not saturated");
  std::unordered_map<Monomial, std::size_t, MonomialHash> idx;
  for (std::size_t k = 0; k < N; ++k) idx[next[k]] = k;
  // [X_last | X_0 | ... | X_{n-1}] with X_i: base -> next, multiplication by x_i
  Matrix aug(N, N * static_cast<std::size_t>(n + 1));
  for (int i = 0; i < n; ++i) {
    std::vector<MultiPoly> prods;
    for (const auto& b : base) prods.push_back(MultiPoly::monomial(R, b).mul_term(MultiPoly::variable(R, i).leading_monomial(), 1));
    auto nfs = G.normal_forms(prods);
    for (std::size_t c = 0; c < N; ++c)
      for (const auto& t : nfs[c].terms()) {
        const std::size_t row = idx.at(t.mono);
        const std::size_t col = c + N * static_cast<std::size_t>(i + 1);
        aug.at(row, col) = t.coef;
        if (i == n - 1) aug.at(row, c) = t.coef;
      }
  }
  auto piv = row_reduce(aug, field_);
  if (piv.size() < N || piv[N - 1] != N - 1) throw MathError("ZeroDimAlgebra: last variable is a zero divisor");
  for (int i = 0; i < n; ++i) {
    Matrix m(N, N);
    for (std::size_t a = 0; a < N; ++a)
      for (std::size_t b = 0; b < N; ++b) m.at(a, b) = aug.at(a, b + N * static_cast<std::size_t>(i + 1));
    mult_.push_back(std::move(m));
  }
  // 1 = x_last^r / x_last^r
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  e[static_cast<std::size_t>(n - 1)] = r;
  MultiPoly xr = G.normal_forms({MultiPoly::monomial(R, R->monomial(e))}).front();
  std::unordered_map<Monomial, std::size_t, MonomialHash> bidx;
  for (std::size_t k = 0; k < N; ++k) bidx[base[k]] = k;
  one_.assign(N, 0);
  for (const auto& t : xr.terms()) one_[bidx.at(t.mono)] = t.coef;
}

UPoly ZeroDimAlgebra::minimal_polynomial(int i) const {
  // Krylov sequence of 1 under M_i; A is cyclic over itself so this is the full minimal polynomial
  const Matrix& M = mult(i);
  const std::size_t N = dim();
  RowEchelon ech(N, field_);
  std::vector<std::vector<Coef>> powers{one_};
  ech.add(one_);
  while (true) {
    powers.push_back(mat_vec(M, powers.back(), field_));
    if (!ech.add(powers.back())) break;
    if (powers.size() > N + 1) throw MathError("minimal polynomial: no dependency found");
  }
  const std::size_t k = powers.size();
  Matrix T(N, k);
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < k; ++b) T.at(a, b) = powers[b][a];
  auto ker = kernel(std::move(T), field_);
  if (ker.size() == 1 && ker.front().back()) {
    UPoly mu = ker.front();
    Coef inv = field_.inv(mu.back());
    for (auto& c : mu) c = field_.mul(c, inv);
    return mu;
  }
  throw MathError("minimal polynomial: no dependency found");
}

Matrix ZeroDimAlgebra::reduced_projection() const {
  const std::size_t N = dim();
  const int n = nvars();
  // nilradical: ideal generated by sqfree(mu_i)(x_i), i < n - 1
  RowEchelon nil(N, field_);
  std::vector<std::vector<Coef>> queue;
  for (int i = 0; i + 1 < n; ++i) {
    UPoly s = squarefree_part(minimal_polynomial(i), field_);
    // s(M_i) 1 by Horner
    std::vector<Coef> v(N, 0);
    for (std::size_t k = s.size(); k-- > 0;) v = add_scaled(mat_vec(mult(i), v, field_), one_, s[k], field_);
    if (nil.add(v)) queue.push_back(v);
  }
  while (!queue.empty()) {
    check_deadline();
    auto v = std::move(queue.back());
    queue.pop_back();
    for (int j = 0; j + 1 < n; ++j) {
      auto w = mat_vec(mult(j), v, field_);
      if (nil.add(w)) queue.push_back(std::move(w));
    }
  }
  Matrix P(0, N);
  for (const auto& row : kernel(nil.basis(), field_)) P.append_row(row);
  if (P.rows() == 0) throw MathError("reduced_projection: empty scheme");
  return P;
}

}  // namespace birat
