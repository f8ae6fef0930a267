#include "birat/groebner.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "birat/cancel.hpp"
#include "birat/f4.hpp"
#include "birat/hilbert.hpp"
#include "birat/linalg.hpp"
#include "birat/points.hpp"

namespace birat {

// ---------------------------------------------------------------- helpers

namespace {

/// Divides f by the largest power x_var^k with k <= cap dividing every term.
MultiPoly divide_out(const MultiPoly& f, int var, int cap) {
  int k = cap;
  for (const auto& t : f.terms()) k = std::min<int>(k, t.mono.exp[var]);
  if (k <= 0) return f;
  const Ring& R = *f.ring();
  std::vector<Term> ts = f.terms();
  for (auto& t : ts) {
    t.mono.exp[var] = static_cast<std::uint8_t>(t.mono.exp[var] - k);
    t.mono.degree = static_cast<std::uint16_t>(R.degree_of(t.mono));
  }
  return MultiPoly::from_sorted_terms(f.ring(), std::move(ts));
}

std::vector<int> extend(std::vector<int> w, int extra) {
  w.push_back(extra);
  return w;
}

RingPtr grevlex_of(const RingPtr& R) {
  if (R->order().kind() == MonomialOrder::Kind::Grevlex) return R;
  return R->with_order(MonomialOrder::grevlex());
}

void require_same_ring(const Ideal& I, const Ideal& J) {
  if (*I.ring() != *J.ring()) throw std::invalid_argument("ideals live in different rings");
}

}  // namespace

// ---------------------------------------------------------------- GroebnerBasis

struct GroebnerBasis::Reducer {
  std::mutex mu;
  std::unique_ptr<F4> engine;
};

GroebnerBasis::GroebnerBasis(RingPtr ring, std::vector<MultiPoly> elements, int complete_to, std::vector<int> shifts)
    : ring_(std::move(ring)),
      elements_(std::move(elements)),
      complete_to_(complete_to),
      shifts_(std::move(shifts)),
      reducer_(std::make_shared<Reducer>()) {}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(elements_.size());
  for (const auto& g : elements_) out.push_back(g.leading_monomial());
  return out;
}

bool GroebnerBasis::is_unit() const {
  for (const auto& g : elements_)
    if (g.leading_monomial().is_one() && g.leading_monomial().comp == 0 && shifts_.empty()) return true;
  return false;
}

std::vector<MultiPoly> GroebnerBasis::normal_forms(const std::vector<MultiPoly>& fs) const {
  if (elements_.empty()) return fs;
  std::lock_guard<std::mutex> lock(reducer_->mu);
  if (!reducer_->engine) {
    reducer_->engine = std::make_unique<F4>(ring_, shifts_);
    reducer_->engine->load_basis(elements_);
  }
  std::vector<MultiPoly> in;
  in.reserve(fs.size());
  for (const auto& f : fs) {
    if (*f.ring() != *ring_) {
      in.push_back(f.in_ring(ring_));
    } else {
      in.push_back(f);
    }
  }
  return reducer_->engine->normal_forms(in);
}

MultiPoly GroebnerBasis::normal_form(const MultiPoly& f) const { return normal_forms({f}).front(); }

MultiPoly normal_form(const MultiPoly& f, const GroebnerBasis& G) { return G.normal_form(f); }

GroebnerBasis groebner_basis(const Ideal& I, const MonomialOrder& order, int max_degree) {
  RingPtr R = I.ring()->order() == order ? I.ring() : I.ring()->with_order(order);
  F4 engine(R);
  for (const auto& g : I.gens()) engine.add_input(g.in_ring(R));
  engine.run(max_degree);
  int complete = engine.has_pending() ? max_degree : INT_MAX;
  return GroebnerBasis(R, engine.basis(), complete);
}

GroebnerBasis module_groebner_basis(const RingPtr& ring, const std::vector<MultiPoly>& gens,
                                    const std::vector<int>& shifts, int max_degree) {
  F4 engine(ring, shifts);
  for (const auto& g : gens) engine.add_input(g);
  engine.run(max_degree);
  int complete = engine.has_pending() ? max_degree : INT_MAX;
  return GroebnerBasis(ring, engine.basis(), complete, shifts);
}

// ---------------------------------------------------------------- Ideal

struct Ideal::Cache {
  std::once_flag once;
  GroebnerBasis gb;
};

Ideal::Ideal(RingPtr ring, std::vector<MultiPoly> gens) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    if (*g.ring() != *ring_) g = g.in_ring(ring_);
    if (!g.is_homogeneous()) throw std::invalid_argument("ideal generators must be homogeneous");
    gens_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(const RingPtr& ring) { return Ideal(ring, {MultiPoly::constant(ring, 1)}); }

Ideal Ideal::zero(const RingPtr& ring) { return Ideal(ring, {}); }

Ideal Ideal::irrelevant(const RingPtr& ring) {
  std::vector<MultiPoly> v;
  for (int i = 0; i < ring->nvars(); ++i) v.push_back(MultiPoly::variable(ring, i));
  return Ideal(ring, v);
}

const GroebnerBasis& Ideal::gb() const {
  std::call_once(cache_->once, [&] {
    F4 engine(ring_);
    for (const auto& g : gens_) engine.add_input(g);
    engine.run();
    cache_->gb = GroebnerBasis(ring_, engine.basis());
  });
  return cache_->gb;
}

bool Ideal::contains(const Ideal& other) const {
  auto nf = gb().normal_forms(other.gens());
  return std::all_of(nf.begin(), nf.end(), [](const MultiPoly& f) { return f.is_zero(); });
}

Ideal Ideal::operator+(const Ideal& o) const {
  require_same_ring(*this, o);
  std::vector<MultiPoly> g = gens_;
  g.insert(g.end(), o.gens_.begin(), o.gens_.end());
  return Ideal(ring_, std::move(g));
}

Ideal Ideal::operator*(const Ideal& o) const {
  require_same_ring(*this, o);
  std::vector<MultiPoly> g;
  for (const auto& a : gens_)
    for (const auto& b : o.gens_) g.push_back(a * b);
  return Ideal(ring_, std::move(g));
}

Ideal Ideal::in_ring(const RingPtr& other) const {
  std::vector<MultiPoly> g;
  for (const auto& f : gens_) g.push_back(f.in_ring(other));
  return Ideal(other, std::move(g));
}

std::vector<MultiPoly> Ideal::minimal_generators() const {
  std::vector<MultiPoly> sorted = gens_;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const MultiPoly& a, const MultiPoly& b) { return a.degree() < b.degree(); });
  std::vector<MultiPoly> out;
  std::size_t k = 0;
  while (k < sorted.size()) {
    const int d = sorted[k].degree();
    std::vector<MultiPoly> cands;
    while (k < sorted.size() && sorted[k].degree() == d) cands.push_back(sorted[k++]);
    // degree-d part of the ideal of the generators kept so far
    F4 engine(ring_);
    for (const auto& c : out) engine.add_input(c);
    engine.run(d);
    auto nf = engine.normal_forms(cands);
    // greedy independent subset of the normal forms
    std::vector<MultiPoly> basis;  // echelon: distinct leading monomials, monic
    std::vector<MultiPoly> chosen;
    for (std::size_t i = 0; i < nf.size(); ++i) {
      MultiPoly r = nf[i];
      bool changed = true;
      while (!r.is_zero() && changed) {
        changed = false;
        for (const auto& b : basis)
          if (b.leading_monomial() == r.leading_monomial()) {
            r = r - b.scale(r.leading_coef());
            changed = true;
            break;
          }
      }
      if (r.is_zero()) continue;
      r = r.monic();
      // keep echelon basis fully reduced on leading terms
      basis.push_back(r);
      chosen.push_back(cands[i]);
    }
    for (auto& c : chosen) out.push_back(c);
  }
  return out;
}

std::vector<MultiPoly> Ideal::degree_part(int d) const {
  const auto& G = gb();
  auto lead = G.leading_monomials();
  std::vector<MultiPoly> mons;
  for (const auto& m : monomials_of_degree(*ring_, d)) {
    bool in_lt = std::any_of(lead.begin(), lead.end(), [&](const Monomial& l) { return divides(l, m); });
    if (in_lt) mons.push_back(MultiPoly::monomial(ring_, m));
  }
  auto nf = G.normal_forms(mons);
  std::vector<MultiPoly> out;
  out.reserve(mons.size());
  for (std::size_t i = 0; i < mons.size(); ++i) out.push_back(mons[i] - nf[i]);
  return out;
}

// ---------------------------------------------------------------- elimination

Ideal eliminate(const Ideal& I, int k) {
  const RingPtr& R = I.ring();
  const int n = R->nvars();
  if (k < 0 || k > n) throw std::invalid_argument("eliminate: bad variable count");
  std::vector<int> w(R->weights().begin() + k, R->weights().end());
  RingPtr target = make_ring(R->field().characteristic(), n - k, MonomialOrder::grevlex(), w);
  if (k == 0) {
    const auto& G = I.gb();
    std::vector<MultiPoly> out;
    for (const auto& g : G.elements()) out.push_back(g.in_ring(target));
    return Ideal(target, out);
  }
  auto G = groebner_basis(I, MonomialOrder::eliminate(k));
  std::vector<MultiPoly> out;
  for (const auto& g : G.elements()) {
    bool free = true;
    for (const auto& t : g.terms()) {
      for (int i = 0; i < k && free; ++i)
        if (t.mono.exp[i]) free = false;
      if (!free) break;
    }
    if (free) out.push_back(transport(g, target, -k));
  }
  return Ideal(target, out);
}

// ---------------------------------------------------------------- quotients

namespace {

/// Basis of I + (z - g) in R[z], z weighted deg g and last in grevlex,
/// each element divided by z at most `cap` times, then z -> g.
Ideal aux_variable_quotient(const Ideal& I, const MultiPoly& g, int cap) {
  const RingPtr& R = I.ring();
  const int n = R->nvars();
  if (g.is_zero()) throw std::invalid_argument("quotient by zero form");
  if (!g.is_homogeneous()) throw std::invalid_argument("quotient form must be homogeneous");
  const int dg = g.degree();
  if (dg == 0) return I;
  RingPtr Rz = make_ring(R->field().characteristic(), n + 1, MonomialOrder::grevlex(), extend(R->weights(), dg));
  F4 engine(Rz);
  for (const auto& f : I.gens()) engine.add_input(transport(f, Rz));
  engine.add_input(MultiPoly::variable(Rz, n) - transport(g, Rz));
  engine.run();
  std::vector<MultiPoly> images;
  for (int i = 0; i < n; ++i) images.push_back(MultiPoly::variable(R, i));
  images.push_back(g.in_ring(R));
  std::vector<MultiPoly> out;
  for (const auto& h : engine.basis()) {
    MultiPoly d = divide_out(h, n, cap);
    out.push_back(d.substitute(images, R));
  }
  return Ideal(R, out);
}

Ideal syzygy_quotient(const Ideal& I, const MultiPoly& g) {
  const RingPtr& R = I.ring();
  if (g.is_zero()) throw std::invalid_argument("quotient by zero form");
  RingPtr Rg = grevlex_of(R);
  // module in R e0 + R e1 generated by g e0 + e1 and f e0; (I : g) e1 is the e1-part
  std::vector<MultiPoly> gens;
  gens.push_back(g.in_ring(Rg) + MultiPoly::monomial(Rg, Rg->monomial(std::vector<int>(Rg->nvars(), 0), 1)));
  for (const auto& f : I.gens()) gens.push_back(f.in_ring(Rg));
  auto G = module_groebner_basis(Rg, gens, {0, g.degree()});
  std::vector<MultiPoly> out;
  for (const auto& h : G.elements())
    if (h.leading_monomial().comp == 1) out.push_back(h.component(1).in_ring(R));
  return Ideal(R, out);
}

}  // namespace

Ideal quotient_by_form(const Ideal& I, const MultiPoly& g, QuotientMethod method) {
  if (method == QuotientMethod::Syzygy) return syzygy_quotient(I, g);
  return aux_variable_quotient(I, g, 1);
}

Ideal ideal_quotient(const Ideal& I, const Ideal& J, QuotientMethod method) {
  require_same_ring(I, J);
  if (J.gens().empty()) return Ideal::unit(I.ring());
  Ideal acc = quotient_by_form(I, J.gens()[0], method);
  for (std::size_t i = 1; i < J.gens().size(); ++i) acc = intersect(acc, quotient_by_form(I, J.gens()[i], method));
  return acc;
}

Ideal saturate_by_form(const Ideal& I, const MultiPoly& g) { return aux_variable_quotient(I, g, 255); }

Ideal saturate(const Ideal& I, const Ideal& J) {
  require_same_ring(I, J);
  if (J.gens().empty()) return Ideal::unit(I.ring());
  if (J.gens().size() == 1) return saturate_by_form(I, J.gens()[0]);
  Ideal cur = I;
  while (true) {
    check_deadline();
    Ideal next = ideal_quotient(cur, J);
    if (cur.contains(next)) return cur;
    cur = next;
  }
}

Ideal saturate_irrelevant(const Ideal& I, Rng& rng) {
  const RingPtr& R = I.ring();
  const int n = R->nvars();
  if (!R->standard_grading()) throw std::invalid_argument("saturate_irrelevant needs the standard grading");
  if (I.gens().empty()) return I;
  RingPtr Rg = grevlex_of(R);
  const Field& F = R->field();
  for (int attempt = 0; attempt < 3; ++attempt) {
    // x_{n-1} -> x_{n-1} + sum c_i x_i, so the new last variable is the generic form
    // x_{n-1} - sum c_i x_i in the old coordinates
    std::vector<Coef> c(static_cast<std::size_t>(n), 0);
    for (int i = 0; i + 1 < n; ++i) c[i] = random_coef(rng, F);
    std::vector<MultiPoly> fwd, back;
    for (int i = 0; i + 1 < n; ++i) {
      fwd.push_back(MultiPoly::variable(Rg, i));
      back.push_back(MultiPoly::variable(Rg, i));
    }
    MultiPoly last_f = MultiPoly::variable(Rg, n - 1), last_b = MultiPoly::variable(Rg, n - 1);
    for (int i = 0; i + 1 < n; ++i) {
      last_f += MultiPoly::variable(Rg, i).scale(c[i]);
      last_b -= MultiPoly::variable(Rg, i).scale(c[i]);
    }
    fwd.push_back(last_f);
    back.push_back(last_b);
    F4 engine(Rg);
    for (const auto& g : I.gens()) engine.add_input(g.in_ring(Rg).substitute(fwd, Rg));
    engine.run();
    auto G = engine.basis();
    std::vector<Monomial> lead_before, lead_after;
    std::vector<MultiPoly> divided;
    for (const auto& g : G) {
      lead_before.push_back(g.leading_monomial());
      divided.push_back(divide_out(g, n - 1, 255));
      lead_after.push_back(divided.back().leading_monomial());
    }
    if (!hilbert_data(lead_before, *Rg).same_polynomial(hilbert_data(lead_after, *Rg))) continue;
    std::vector<MultiPoly> out;
    for (const auto& g : divided) out.push_back(g.substitute(back, Rg).in_ring(R));
    return Ideal(R, out);
  }
  // one variable at a time
  Ideal m = Ideal::irrelevant(R);
  Ideal cur = I;
  while (true) {
    check_deadline();
    Ideal next = ideal_quotient(cur, m);
    if (cur.contains(next)) return cur;
    cur = next;
  }
}

Ideal saturate_generic(const Ideal& I, const Ideal& J, Rng& rng) {
  require_same_ring(I, J);
  if (J.gens().empty()) return Ideal::unit(I.ring());
  int D = 0;
  for (const auto& g : J.gens()) D = std::max(D, g.degree());
  MultiPoly comb(I.ring());
  for (const auto& g : J.gens()) {
    MultiPoly t = g.scale(random_coef(rng, g.field()));
    for (int k = g.degree(); k < D; ++k) t = t * random_linear_form(rng, I.ring());
    comb += t;
  }
  if (comb.is_zero()) comb = J.gens()[0];
  return saturate_by_form(I, comb);
}

Ideal intersect(const Ideal& I, const Ideal& J) {
  require_same_ring(I, J);
  const RingPtr& R = I.ring();
  RingPtr Rg = grevlex_of(R);
  Monomial one_e0 = Rg->one(), one_e1 = Rg->one(), one_e2 = Rg->one();
  one_e1.comp = 1;
  one_e2.comp = 2;
  std::vector<MultiPoly> gens;
  gens.push_back(MultiPoly::from_terms(Rg, {{one_e0, 1}, {one_e1, 1}, {one_e2, 1}}));
  for (const auto& f : I.gens()) gens.push_back(f.in_ring(Rg));
  for (const auto& h : J.gens()) gens.push_back(h.in_ring(Rg).with_component(1));
  auto G = module_groebner_basis(Rg, gens, {0, 0, 0});
  std::vector<MultiPoly> out;
  for (const auto& h : G.elements())
    if (h.leading_monomial().comp == 2) out.push_back(h.component(2).in_ring(R));
  return Ideal(R, out);
}

Ideal ideal_power(const Ideal& I, int e) {
  if (e < 1) throw std::invalid_argument("ideal_power needs e >= 1");
  const auto& g = I.gens();
  // multisets of size e as nondecreasing index sequences
  std::vector<std::pair<MultiPoly, std::size_t>> layer;
  for (std::size_t i = 0; i < g.size(); ++i) layer.push_back({g[i], i});
  for (int k = 1; k < e; ++k) {
    std::vector<std::pair<MultiPoly, std::size_t>> next;
    for (const auto& [f, last] : layer)
      for (std::size_t i = last; i < g.size(); ++i) next.push_back({f * g[i], i});
    layer.swap(next);
  }
  std::vector<MultiPoly> out;
  for (auto& [f, last] : layer) out.push_back(std::move(f));
  return Ideal(I.ring(), out);
}

// ---------------------------------------------------------------- singular locus

namespace {

MultiPoly determinant(std::vector<std::vector<MultiPoly>> m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  MultiPoly acc(m[0][0].ring());
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<MultiPoly>> sub;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<MultiPoly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      sub.push_back(row);
    }
    MultiPoly t = m[0][j] * determinant(sub);
    acc = (j % 2 == 0) ? acc + t : acc - t;
  }
  return acc;
}

void subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> s(k);
  for (std::size_t i = 0; i < k; ++i) s[i] = i;
  while (true) {
    out.push_back(s);
    std::size_t i = k;
    while (i > 0 && s[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++s[i - 1];
    for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
  }
}

}  // namespace

Ideal singular_locus(const Ideal& I, int codim, Rng& rng) {
  const RingPtr& R = I.ring();
  const int n = R->nvars();
  if (codim < 1 || codim > n) throw std::invalid_argument("singular_locus: bad codimension");
  const int k = n - 1 - codim;  // projective dimension
  const std::size_t m = static_cast<std::size_t>(codim + std::max(k, 0) + 1);
  std::vector<MultiPoly> rows;
  bool mixed = false;
  MultiPoly ell = random_linear_form(rng, R);
  if (I.gens().size() <= m) {
    rows = I.gens();
  } else {
    int D = 0;
    for (const auto& g : I.gens()) D = std::max(D, g.degree());
    for (const auto& g : I.gens())
      if (g.degree() != D) mixed = true;
    for (std::size_t a = 0; a < m; ++a) {
      MultiPoly comb(R);
      for (const auto& g : I.gens()) comb += g.scale(random_coef(rng, R->field())) * ell.pow(D - g.degree());
      rows.push_back(comb);
    }
  }
  std::vector<std::vector<MultiPoly>> jac(rows.size());
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (int v = 0; v < n; ++v) jac[a].push_back(rows[a].derivative(v));
  std::vector<std::vector<std::size_t>> rsub, csub;
  const auto c = static_cast<std::size_t>(codim);
  if (rows.size() < c) return Ideal::unit(R);
  subsets(rows.size(), c, rsub);
  subsets(static_cast<std::size_t>(n), c, csub);
  std::vector<MultiPoly> gens = I.gens();
  for (const auto& rs : rsub)
    for (const auto& cs : csub) {
      check_deadline();
      std::vector<std::vector<MultiPoly>> mm(c);
      for (std::size_t i = 0; i < c; ++i)
        for (std::size_t j = 0; j < c; ++j) mm[i].push_back(jac[rs[i]][cs[j]]);
      MultiPoly d = determinant(mm);
      if (!d.is_zero()) gens.push_back(d);
    }
  Ideal sing(R, gens);
  if (mixed) sing = saturate_by_form(sing, ell);
  return saturate_irrelevant(sing, rng);
}

namespace {

// a binary form in (x_u, x_v) from its x_u-coefficients
MultiPoly binary_form(const UPoly& h, const RingPtr& R, int u, int v) {
  const int deg = static_cast<int>(h.size()) - 1;
  std::vector<Term> ts;
  for (int i = 0; i <= deg; ++i) {
    if (!h[i]) continue;
    std::vector<int> e(static_cast<std::size_t>(R->nvars()), 0);
    e[u] = i;
    e[v] = deg - i;
    ts.push_back({R->monomial(e), h[i]});
  }
  return MultiPoly::from_terms(R, std::move(ts));
}

// binary eliminant of J in (x_u, x_last) dehomogenized at x_last = 1; empty if (1:0) is a root
UPoly binary_eliminant(const Ideal& J, int u) {
  const RingPtr& R = J.ring();
  const int n = R->nvars();
  // move x_u to position n-2
  std::vector<MultiPoly> perm;
  for (int i = 0; i < n; ++i) {
    int j = i == u ? n - 2 : (i == n - 2 ? u : i);
    perm.push_back(MultiPoly::variable(R, j));
  }
  std::vector<MultiPoly> g;
  for (const auto& f : J.gens()) g.push_back(f.substitute(perm, R));
  Ideal line = eliminate(Ideal(R, g), n - 2);
  UPoly out;
  bool finite = false;
  for (const auto& f : line.gens()) {
    UPoly c(static_cast<std::size_t>(f.degree() + 1), 0);
    for (const auto& t : f.terms()) c[t.mono.exp[0]] = t.coef;
    if (c.back()) finite = true;
    out = out.empty() ? c : upoly_gcd(out, c, R->field());
  }
  if (!finite) return {};
  return out;
}

}  // namespace

Ideal radical_zero_dim(const Ideal& I, Rng& rng) {
  const RingPtr& R = I.ring();
  const int n = R->nvars();
  const Field& F = R->field();
  Ideal J = saturate_irrelevant(I, rng);
  auto [dim, deg] = dim_degree(J);
  if (dim < 0) return J;
  if (dim > 0) throw MathError("radical_zero_dim needs a zero-dimensional scheme");
  if (n == 1) return Ideal::irrelevant(R);
  for (int attempt = 0; attempt < 3; ++attempt) {
    std::vector<Coef> a, a_inv;
    random_invertible(rng, F, n, a, a_inv);
    Ideal moved = substitute_linear(J, a);
    std::vector<MultiPoly> gens = moved.gens();
    bool ok = true;
    for (int u = 0; u + 1 < n && ok; ++u) {
      UPoly g = binary_eliminant(moved, u);
      if (g.empty()) {
        ok = false;
        break;
      }
      gens.push_back(binary_form(squarefree_part(g, F), R, u, n - 1));
    }
    if (!ok) continue;
    Ideal rad = saturate_irrelevant(Ideal(R, gens), rng);
    return substitute_linear(rad, a_inv);
  }
  throw MathError("radical_zero_dim: no generic coordinates found");
}

std::int64_t point_count(const Ideal& I, Rng& rng) {
  const RingPtr& R = I.ring();
  const int n = R->nvars();
  const Field& F = R->field();
  Ideal J = saturate_irrelevant(I, rng);
  auto [dim, deg] = dim_degree(J);
  if (dim < 0) return 0;
  if (dim > 0) throw MathError("point_count needs a zero-dimensional scheme");
  if (n == 1) return 1;
  for (int attempt = 0; attempt < 3; ++attempt) {
    std::vector<Coef> a, a_inv;
    random_invertible(rng, F, n, a, a_inv);
    UPoly g = binary_eliminant(substitute_linear(J, a), n - 2);
    if (g.empty()) continue;
    return distinct_root_count(g, F);
  }
  throw MathError("point_count: no generic projection found");
}

// ---------------------------------------------------------------- coordinates

MultiPoly substitute_linear(const MultiPoly& f, const std::vector<Coef>& a) {
  const RingPtr& R = f.ring();
  const auto n = static_cast<std::size_t>(R->nvars());
  if (a.size() != n * n) throw std::invalid_argument("substitute_linear: matrix size");
  std::vector<MultiPoly> images;
  for (std::size_t i = 0; i < n; ++i)
    images.push_back(linear_form(R, std::span<const Coef>(a.data() + i * n, n)));
  return f.substitute(images, R);
}

Ideal substitute_linear(const Ideal& I, const std::vector<Coef>& a) {
  std::vector<MultiPoly> g;
  for (const auto& f : I.gens()) g.push_back(substitute_linear(f, a));
  return Ideal(I.ring(), g);
}

}  // namespace birat
