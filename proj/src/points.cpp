#include "birat/points.hpp"

#include <algorithm>
#include <stdexcept>

namespace birat {

namespace {

void trim(UPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

UPoly mulmod(const UPoly& a, const UPoly& b, const UPoly& m, const Field& F) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  // reduce by monic m
  const std::size_t dm = m.size() - 1;
  for (std::size_t k = r.size(); k-- > dm;) {
    Coef c = r[k];
    if (!c) continue;
    for (std::size_t j = 0; j <= dm; ++j) r[k - dm + j] = F.sub(r[k - dm + j], F.mul(c, m[j]));
  }
  r.resize(std::min(r.size(), dm));
  trim(r);
  return r;
}

UPoly make_monic(UPoly a, const Field& F) {
  trim(a);
  if (a.empty()) return a;
  Coef inv = F.inv(a.back());
  for (auto& c : a) c = F.mul(c, inv);
  return a;
}

UPoly mod(UPoly a, const UPoly& m, const Field& F) {
  UPoly mm = make_monic(m, F);
  const std::size_t dm = mm.size() - 1;
  trim(a);
  for (std::size_t k = a.size(); k-- > dm;) {
    Coef c = a[k];
    if (!c) continue;
    for (std::size_t j = 0; j <= dm; ++j) a[k - dm + j] = F.sub(a[k - dm + j], F.mul(c, mm[j]));
  }
  if (a.size() > dm) a.resize(dm);
  trim(a);
  return a;
}

UPoly gcd(UPoly a, UPoly b, const Field& F) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = mod(a, b, F);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a, F);
}

// base^e mod m
UPoly powmod(UPoly base, std::uint64_t e, const UPoly& m, const Field& F) {
  UPoly r{1};
  base = mod(base, m, F);
  while (e) {
    if (e & 1) r = mulmod(r, base, m, F);
    e >>= 1;
    if (e) base = mulmod(base, base, m, F);
  }
  return r;
}

UPoly sub(UPoly a, const UPoly& b, const Field& F) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = F.sub(a[i], b[i]);
  trim(a);
  return a;
}

UPoly divide_exact(UPoly a, const UPoly& b, const Field& F) {
  UPoly mb = make_monic(b, F);
  Coef lead_inv = F.inv(b.back());
  const std::size_t db = mb.size() - 1;
  trim(a);
  if (a.size() <= db) return {};
  UPoly q(a.size() - db, 0);
  for (std::size_t k = a.size(); k-- > db;) {
    Coef c = a[k];
    q[k - db] = c;
    if (!c) continue;
    for (std::size_t j = 0; j <= db; ++j) a[k - db + j] = F.sub(a[k - db + j], F.mul(c, mb[j]));
  }
  for (auto& c : q) c = F.mul(c, lead_inv);
  trim(q);
  return q;
}

// f squarefree, monic, product of distinct linear factors
void split(const UPoly& f, const Field& F, Rng& rng, std::vector<Coef>& out) {
  const std::size_t d = f.size() - 1;
  if (d == 0) return;
  if (d == 1) {
    out.push_back(F.neg(f[0]));
    return;
  }
  const std::uint64_t p = F.characteristic();
  while (true) {
    UPoly shift{random_coef(rng, F), 1};
    UPoly h = powmod(shift, (p - 1) / 2, f, F);
    UPoly g = gcd(f, sub(h, UPoly{1}, F), F);
    std::size_t dg = g.size() - 1;
    if (dg == 0 || dg == d) continue;
    split(g, F, rng, out);
    split(make_monic(divide_exact(f, g, F), F), F, rng, out);
    return;
  }
}

// f squarefree, monic, all irreducible factors of degree k
void split_equal_degree(const UPoly& f, std::size_t k, const Field& F, Rng& rng, std::vector<UPoly>& out) {
  const std::size_t d = f.size() - 1;
  if (d == k) {
    out.push_back(f);
    return;
  }
  const std::uint64_t p = F.characteristic();
  while (true) {
    UPoly a;
    for (std::size_t i = 0; i < d; ++i) a.push_back(random_coef(rng, F));
    trim(a);
    if (a.empty()) continue;
    // a^((p^k - 1) / 2) = (a^(1 + p + ... + p^(k-1)))^((p - 1) / 2)
    UPoly frob = mod(a, f, F), norm = frob;
    for (std::size_t i = 1; i < k; ++i) {
      frob = powmod(frob, p, f, F);
      norm = mulmod(norm, frob, f, F);
    }
    UPoly h = powmod(norm, (p - 1) / 2, f, F);
    UPoly g = gcd(f, sub(h, UPoly{1}, F), F);
    std::size_t dg = g.size() - 1;
    if (dg == 0 || dg == d) continue;
    split_equal_degree(g, k, F, rng, out);
    split_equal_degree(make_monic(divide_exact(f, g, F), F), k, F, rng, out);
    return;
  }
}

}  // namespace

UPoly squarefree_part(UPoly f, const Field& F) {
  trim(f);
  if (f.empty()) throw std::invalid_argument("squarefree part of the zero polynomial");
  UPoly df;
  for (std::size_t i = 1; i < f.size(); ++i) df.push_back(F.mul(F.reduce(static_cast<std::int64_t>(i)), f[i]));
  trim(df);
  if (df.empty()) return make_monic(f, F);
  return make_monic(divide_exact(f, gcd(f, df, F), F), F);
}

std::vector<UPoly> irreducible_factors(UPoly f, const Field& F, Rng& rng) {
  f = squarefree_part(std::move(f), F);
  std::vector<UPoly> out;
  const std::uint64_t p = F.characteristic();
  UPoly x{0, 1}, frob = x;
  for (std::size_t k = 1; 2 * k <= f.size() - 1; ++k) {
    frob = powmod(frob, p, f, F);
    UPoly g = gcd(f, sub(frob, x, F), F);
    if (g.size() > 1) {
      split_equal_degree(g, k, F, rng, out);
      f = make_monic(divide_exact(f, g, F), F);
      frob = mod(frob, f, F);
    }
  }
  if (f.size() > 1) out.push_back(f);
  std::sort(out.begin(), out.end(), [](const UPoly& a, const UPoly& b) { return a.size() != b.size() ? a.size() < b.size() : a < b; });
  return out;
}

UPoly upoly_gcd(UPoly a, UPoly b, const Field& F) { return gcd(std::move(a), std::move(b), F); }

int distinct_root_count(UPoly f, const Field& F) {
  trim(f);
  if (f.empty()) throw std::invalid_argument("root count of the zero polynomial");
  UPoly df;
  for (std::size_t i = 1; i < f.size(); ++i) df.push_back(F.mul(F.reduce(static_cast<std::int64_t>(i)), f[i]));
  trim(df);
  const int d = static_cast<int>(f.size()) - 1;
  if (df.empty()) return d == 0 ? 0 : throw std::invalid_argument("degree not below the characteristic");
  return d - (static_cast<int>(gcd(f, df, F).size()) - 1);
}

std::vector<Coef> roots_in_field(UPoly f, const Field& F, Rng& rng) {
  trim(f);
  if (f.empty()) throw std::invalid_argument("roots of the zero polynomial");
  std::vector<Coef> out;
  if (f.size() == 1) return out;
  f = make_monic(f, F);
  // product of the distinct linear factors: gcd(f, t^p - t)
  UPoly t{0, 1};
  UPoly tp = powmod(t, F.characteristic(), f, F);
  UPoly g = gcd(f, sub(tp, t, F), F);
  split(g, F, rng, out);
  std::sort(out.begin(), out.end());
  return out;
}

UPoly restrict_to_line(const MultiPoly& f, const std::vector<Coef>& a, const std::vector<Coef>& b) {
  const Field& F = f.field();
  const int n = f.ring()->nvars();
  const int d = std::max(f.degree(), 0);
  // evaluate f(a + t b) at d+1 values of t, then interpolate
  std::vector<Coef> ts, vals;
  for (int k = 0; k <= d; ++k) {
    Coef t = static_cast<Coef>(k);
    std::vector<Coef> pt(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pt[i] = F.add(a[i], F.mul(t, b[i]));
    ts.push_back(t);
    vals.push_back(f.evaluate(pt));
  }
  // Newton interpolation
  std::vector<Coef> coef = vals;
  for (int j = 1; j <= d; ++j)
    for (int i = d; i >= j; --i)
      coef[i] = F.div(F.sub(coef[i], coef[i - 1]), F.sub(ts[i], ts[i - j]));
  UPoly r{coef[d]};
  for (int i = d - 1; i >= 0; --i) {
    // r = r * (t - ts[i]) + coef[i]
    UPoly nr(r.size() + 1, 0);
    for (std::size_t k = 0; k < r.size(); ++k) {
      nr[k + 1] = F.add(nr[k + 1], r[k]);
      nr[k] = F.sub(nr[k], F.mul(r[k], ts[i]));
    }
    nr[0] = F.add(nr[0], coef[i]);
    r = nr;
  }
  trim(r);
  return r;
}

std::vector<Coef> random_point_on_hypersurface(const MultiPoly& f, Rng& rng, int attempts) {
  const Field& F = f.field();
  const int n = f.ring()->nvars();
  for (int k = 0; k < attempts; ++k) {
    auto a = random_point(rng, F, n);
    auto b = random_point(rng, F, n);
    UPoly h = restrict_to_line(f, a, b);
    if (h.empty()) return a;  // line inside the hypersurface
    auto roots = roots_in_field(h, F, rng);
    if (roots.empty()) continue;
    Coef t = roots[rng() % roots.size()];
    std::vector<Coef> pt(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pt[i] = F.add(a[i], F.mul(t, b[i]));
    if (std::all_of(pt.begin(), pt.end(), [](Coef c) { return c == 0; })) continue;
    return pt;
  }
  throw std::runtime_error("no rational point found on hypersurface");
}

}  // namespace birat
