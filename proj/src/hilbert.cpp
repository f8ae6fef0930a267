#include "birat/hilbert.hpp"

#include <algorithm>
#include <stdexcept>

namespace birat {

namespace {

void add_into(IntPoly& a, const IntPoly& b, std::size_t shift = 0, std::int64_t sign = 1) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] += sign * b[i];
}

IntPoly times_one_minus(const IntPoly& a, int e) {
  IntPoly r = a;
  add_into(r, a, static_cast<std::size_t>(e), -1);
  return r;
}

void trim(IntPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int wdeg(const Monomial& m, const std::vector<int>& w) {
  int d = 0;
  for (std::size_t i = 0; i < w.size(); ++i) d += w[i] * m.exp[i];
  return d;
}

void minimalize(std::vector<Monomial>& g, const std::vector<int>& w) {
  std::sort(g.begin(), g.end(), [&](const Monomial& a, const Monomial& b) { return wdeg(a, w) < wdeg(b, w); });
  std::vector<Monomial> out;
  for (const auto& m : g) {
    bool red = false;
    for (const auto& k : out)
      if (divides(k, m)) {
        red = true;
        break;
      }
    if (!red) out.push_back(m);
  }
  g.swap(out);
}

IntPoly numerator_rec(std::vector<Monomial> g, const std::vector<int>& w) {
  const int n = static_cast<int>(w.size());
  minimalize(g, w);
  IntPoly factor{1};
  // split off linear generators
  {
    std::vector<Monomial> rest;
    std::vector<int> lin;
    for (const auto& m : g) {
      int s = 0, v = -1;
      for (int i = 0; i < n; ++i)
        if (m.exp[i]) {
          s += m.exp[i];
          v = i;
        }
      if (s == 1) {
        lin.push_back(v);
      } else {
        rest.push_back(m);
      }
    }
    if (!lin.empty()) {
      for (int v : lin) factor = times_one_minus(factor, w[v]);
      std::vector<Monomial> kept;
      for (auto& m : rest) {
        bool hit = false;
        for (int v : lin)
          if (m.exp[v]) hit = true;
        if (!hit) kept.push_back(m);
      }
      g.swap(kept);
    }
  }
  if (g.empty()) return factor;
  // pairwise coprime generators give a product
  std::vector<int> count(n, 0);
  for (const auto& m : g)
    for (int i = 0; i < n; ++i)
      if (m.exp[i]) ++count[i];
  if (*std::max_element(count.begin(), count.end()) <= 1) {
    IntPoly r = factor;
    for (const auto& m : g) r = times_one_minus(r, wdeg(m, w));
    return r;
  }
  int j = static_cast<int>(std::max_element(count.begin(), count.end()) - count.begin());
  std::vector<int> exps;
  int pure = 1 << 30;
  for (const auto& m : g) {
    if (!m.exp[j]) continue;
    bool is_pure = true;
    for (int i = 0; i < n; ++i)
      if (i != j && m.exp[i]) is_pure = false;
    if (is_pure) pure = std::min<int>(pure, m.exp[j]);
    exps.push_back(m.exp[j]);
  }
  std::sort(exps.begin(), exps.end());
  int e = exps[exps.size() / 2];
  if (e >= pure) e = pure - 1;
  if (e < 1) e = 1;
  Monomial piv;
  piv.exp[j] = static_cast<std::uint8_t>(e);
  // N(G) = N(G + p) + t^deg(p) N(G : p)
  std::vector<Monomial> with = g;
  with.push_back(piv);
  std::vector<Monomial> quot;
  quot.reserve(g.size());
  for (const auto& m : g) {
    Monomial q = m;
    q.exp[j] = static_cast<std::uint8_t>(std::max(0, m.exp[j] - e));
    quot.push_back(q);
  }
  IntPoly a = numerator_rec(std::move(with), w);
  IntPoly b = numerator_rec(std::move(quot), w);
  add_into(a, b, static_cast<std::size_t>(e * w[j]));
  IntPoly r;
  // multiply by factor
  r.assign(a.size() + factor.size(), 0);
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < factor.size(); ++y) r[x + y] += a[x] * factor[y];
  trim(r);
  return r;
}

std::int64_t binom_signed(std::int64_t n, std::int64_t k) {
  // C(n, k) for integer n (possibly negative) as a polynomial in n; k >= 0
  if (k < 0) return 0;
  __int128 r = 1;
  for (std::int64_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return static_cast<std::int64_t>(r);
}

}  // namespace

IntPoly hilbert_numerator(std::vector<Monomial> gens, const Ring& ring) {
  for (auto& m : gens) m.comp = 0;
  IntPoly r = numerator_rec(std::move(gens), ring.weights());
  trim(r);
  if (r.empty()) r.push_back(0);
  return r;
}

HilbertData hilbert_data(const std::vector<Monomial>& lead, const Ring& ring) {
  if (!ring.standard_grading()) throw std::invalid_argument("hilbert_data needs the standard grading");
  HilbertData h;
  h.nvars = ring.nvars();
  h.numerator = hilbert_numerator(lead, ring);
  // divide by (1-t) while possible
  IntPoly q = h.numerator;
  int k = 0;
  auto at_one = [](const IntPoly& a) {
    std::int64_t s = 0;
    for (auto c : a) s += c;
    return s;
  };
  while (k < h.nvars && !(q.size() == 1 && q[0] == 0) && at_one(q) == 0) {
    // synthetic division by (1 - t): q = (1-t) s  => s_i = sum_{j<=i} q_j
    IntPoly s(q.size() > 1 ? q.size() - 1 : 1, 0);
    std::int64_t acc = 0;
    for (std::size_t i = 0; i + 1 < q.size(); ++i) {
      acc += q[i];
      s[i] = acc;
    }
    q = s;
    trim(q);
    ++k;
  }
  if (q.empty() || (q.size() == 1 && q[0] == 0)) {
    h.proj_dim = -1;
    h.degree = 0;
    h.reduced = {0};
    return h;
  }
  h.reduced = q;
  h.proj_dim = h.nvars - k - 1;
  h.degree = at_one(q);
  if (h.proj_dim < 0) h.degree = 0;
  return h;
}

std::int64_t HilbertData::series_coefficient(int d) const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < numerator.size(); ++i) {
    std::int64_t m = d - static_cast<std::int64_t>(i);
    if (m < 0) continue;
    s += numerator[i] * binom_signed(m + nvars - 1, nvars - 1);
  }
  return s;
}

std::int64_t HilbertData::polynomial_at(std::int64_t k) const {
  if (proj_dim < 0) return 0;
  std::int64_t s = 0;
  for (std::size_t i = 0; i < reduced.size(); ++i)
    s += reduced[i] * binom_signed(k - static_cast<std::int64_t>(i) + proj_dim, proj_dim);
  return s;
}

bool HilbertData::same_polynomial(const HilbertData& o) const {
  if (proj_dim != o.proj_dim) return false;
  if (proj_dim < 0) return true;
  for (int k = 0; k <= proj_dim; ++k)
    if (polynomial_at(k + 1000) != o.polynomial_at(k + 1000)) return false;
  return true;
}

std::int64_t HilbertData::sectional_genus() const {
  if (proj_dim < 1) throw std::invalid_argument("sectional genus needs positive dimension");
  std::int64_t q1 = 0, dq1 = 0;
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    q1 += reduced[i];
    dq1 += static_cast<std::int64_t>(i) * reduced[i];
  }
  return 1 - q1 + dq1;
}

HilbertData hilbert_data(const Ideal& I) { return hilbert_data(I.gb().leading_monomials(), *I.ring()); }

std::int64_t hilbert_function(const Ideal& I, int d) {
  auto lead = I.gb().leading_monomials();
  std::int64_t count = 0;
  for (const auto& m : monomials_of_degree(*I.ring(), d)) {
    bool std_mon = true;
    for (const auto& l : lead)
      if (divides(l, m)) {
        std_mon = false;
        break;
      }
    if (std_mon) ++count;
  }
  return count;
}

std::int64_t ideal_dimension(const Ideal& I, int d) {
  return static_cast<std::int64_t>(monomials_of_degree(*I.ring(), d).size()) - hilbert_function(I, d);
}

std::pair<int, std::int64_t> dim_degree(const Ideal& I) {
  auto h = hilbert_data(I);
  return {h.proj_dim, h.degree};
}

std::int64_t sectional_genus(const Ideal& I) { return hilbert_data(I).sectional_genus(); }

}  // namespace birat
