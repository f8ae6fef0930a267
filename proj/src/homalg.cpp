#include "birat/homalg.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <unordered_map>

#include "birat/cancel.hpp"
#include "birat/hilbert.hpp"
#include "birat/linalg.hpp"
#include "birat/zerodim.hpp"

namespace birat {

ModuleMap generator_map(const std::vector<MultiPoly>& gens) {
  if (gens.empty()) throw std::invalid_argument("generator_map needs generators");
  ModuleMap m;
  m.ring = gens.front().ring();
  m.target_shifts = {0};
  for (const auto& g : gens) {
    m.source_shifts.push_back(g.degree());
    m.columns.push_back({g});
  }
  return m;
}

ModuleMap syzygies(const ModuleMap& m) {
  const RingPtr& R = m.ring;
  RingPtr Rg = R->order().kind() == MonomialOrder::Kind::Grevlex ? R : R->with_order(MonomialOrder::grevlex());
  const std::size_t r = m.rows(), c = m.cols();
  std::vector<int> shifts = m.target_shifts;
  shifts.insert(shifts.end(), m.source_shifts.begin(), m.source_shifts.end());
  const Monomial one = Rg->monomial(std::vector<int>(static_cast<std::size_t>(Rg->nvars()), 0));
  std::vector<MultiPoly> gens;
  for (std::size_t j = 0; j < c; ++j) {
    MultiPoly v = MultiPoly::monomial(Rg, one).with_component(static_cast<int>(r + j));
    for (std::size_t i = 0; i < r; ++i) {
      const MultiPoly& e = m.columns[j][i];
      if (!e.is_zero()) v += e.in_ring(Rg).with_component(static_cast<int>(i));
    }
    gens.push_back(v);
  }
  auto G = module_groebner_basis(Rg, gens, shifts);
  ModuleMap out;
  out.ring = R;
  out.target_shifts = m.source_shifts;
  for (const auto& h : G.elements()) {
    if (h.leading_monomial().comp < r) continue;
    std::vector<MultiPoly> col;
    for (std::size_t j = 0; j < c; ++j) col.push_back(h.component(static_cast<int>(r + j)).in_ring(R));
    out.columns.push_back(col);
    out.source_shifts.push_back(h.leading_monomial().degree + shifts[h.leading_monomial().comp]);
  }
  return out;
}

ModuleMap syzygies(const std::vector<MultiPoly>& gens) { return syzygies(generator_map(gens)); }

bool composes_to_zero(const ModuleMap& m, const ModuleMap& syz) {
  for (const auto& col : syz.columns)
    for (std::size_t i = 0; i < m.rows(); ++i) {
      MultiPoly acc(m.ring);
      for (std::size_t j = 0; j < m.cols(); ++j) acc += m.columns[j][i] * col[j];
      if (!acc.is_zero()) return false;
    }
  return true;
}

namespace {

// degree-0 homs from the module generated by gens into R/I; generators listed in `killed` map to 0
std::int64_t hom_count(const Ideal& I, const std::vector<MultiPoly>& gens, std::size_t killed) {
  const RingPtr& R = I.ring();
  const Field& F = R->field();
  const auto& G = I.gb();
  auto lead = G.leading_monomials();
  auto standard = [&](int d) {
    std::vector<Monomial> out;
    if (d < 0) return out;
    for (const auto& m : monomials_of_degree(*R, d)) {
      bool ok = true;
      for (const auto& l : lead)
        if (divides(l, m)) {
          ok = false;
          break;
        }
      if (ok) out.push_back(m);
    }
    return out;
  };
  ModuleMap syz = syzygies(gens);
  // unknown columns: (generator i, standard monomial of degree deg g_i)
  std::vector<std::vector<Monomial>> basis(gens.size());
  std::vector<std::size_t> offset(gens.size() + 1, 0);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i >= killed) basis[i] = standard(gens[i].degree());
    offset[i + 1] = offset[i] + basis[i].size();
  }
  const std::size_t ncols = offset.back();
  if (ncols == 0) return 0;
  Matrix A(0, ncols);
  for (std::size_t j = 0; j < syz.cols(); ++j) {
    check_deadline();
    const int e = syz.source_shifts[j];
    auto target = standard(e);
    if (target.empty()) continue;
    std::unordered_map<Monomial, std::size_t, MonomialHash> idx;
    for (std::size_t t = 0; t < target.size(); ++t) idx[target[t]] = t;
    std::vector<MultiPoly> prods;
    std::vector<std::size_t> where;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const MultiPoly& s = syz.columns[j][i];
      if (s.is_zero()) continue;
      for (std::size_t k = 0; k < basis[i].size(); ++k) {
        prods.push_back(s.mul_term(basis[i][k], 1));
        where.push_back(offset[i] + k);
      }
    }
    auto nfs = G.normal_forms(prods);
    std::vector<std::vector<Coef>> rows(target.size(), std::vector<Coef>(ncols, 0));
    for (std::size_t q = 0; q < nfs.size(); ++q)
      for (const auto& t : nfs[q].terms()) {
        auto& cell = rows[idx.at(t.mono)][where[q]];
        cell = F.add(cell, t.coef);
      }
    for (auto& row : rows) A.append_row(row);
  }
  return static_cast<std::int64_t>(ncols - rank(std::move(A), F));
}

}  // namespace

std::int64_t hom_degree_zero(const Ideal& I) { return hom_count(I, I.minimal_generators(), 0); }

std::int64_t hom_degree_zero_relative(const Ideal& I, const MultiPoly& F) {
  if (!I.contains(F)) throw MathError("the hypersurface does not contain the scheme");
  std::vector<MultiPoly> gens{F.in_ring(I.ring())};
  for (const auto& g : I.minimal_generators()) gens.push_back(g);
  return hom_count(I, gens, 1);
}

namespace {

// generic c-planes through which the top part of I is seen, shared across degrees;
// each keeps the coordinate ring of its section with the ambient variables as matrices
// g on the plane x_k = y_k (k < m), x_k = tail[k - m](y) (k >= m); terms are
// grouped by their tail exponents so only the tail variables get expanded
MultiPoly restrict_to_graph(const MultiPoly& g, const std::vector<MultiPoly>& tail, const RingPtr& L) {
  const int m = L->nvars();
  const Field& F = L->field();
  std::unordered_map<Monomial, std::vector<Term>, MonomialHash> groups;
  for (const auto& t : g.terms()) {
    Monomial head, rest;
    for (int k = 0; k < m; ++k) head.exp[k] = t.mono.exp[k];
    for (std::size_t k = 0; k < tail.size(); ++k) rest.exp[k] = t.mono.exp[m + k];
    int dh = 0, dr = 0;
    for (int k = 0; k < m; ++k) dh += head.exp[k];
    for (std::size_t k = 0; k < tail.size(); ++k) dr += rest.exp[k];
    head.degree = static_cast<std::uint16_t>(dh);
    rest.degree = static_cast<std::uint16_t>(dr);
    groups[rest].push_back({head, t.coef});
  }
  std::unordered_map<Monomial, Coef, MonomialHash> acc;
  for (const auto& [rest, heads] : groups) {
    MultiPoly p = MultiPoly::constant(L, 1);
    for (std::size_t k = 0; k < tail.size(); ++k)
      if (rest.exp[k]) p *= tail[k].pow(rest.exp[k]);
    for (const auto& h : heads)
      for (const auto& q : p.terms()) {
        Coef& c = acc[mul(h.mono, q.mono)];
        c = F.add(c, F.mul(h.coef, q.coef));
      }
  }
  std::vector<Term> ts;
  ts.reserve(acc.size());
  for (const auto& [mono, c] : acc)
    if (c) ts.push_back({mono, c});
  return MultiPoly::from_terms(L, std::move(ts));
}

class SectionCache {
 public:
  SectionCache(const Ideal& I, int c, bool reduced) : I_(I), c_(c), reduced_(reduced) {}

  struct Plane {
    std::vector<Matrix> vars;  // ambient x_i acting on the section algebra
    std::vector<Coef> one;
    Matrix projection;  // onto the reduced algebra; empty for the scheme itself
  };

  const Plane& at(std::size_t i, Rng& rng) {
    while (planes_.size() <= i) {
      check_deadline();
      const RingPtr& R = I_.ring();
      const Field& F = R->field();
      RingPtr L = make_ring(F.characteristic(), c_ + 1);
      // a generic c-plane as a graph over the first c + 1 coordinates
      std::vector<std::vector<Coef>> a;
      std::vector<MultiPoly> tail;
      for (int k = 0; k < R->nvars(); ++k) {
        if (k <= c_) {
          a.emplace_back(static_cast<std::size_t>(c_ + 1), 0);
          a.back()[static_cast<std::size_t>(k)] = 1;
        } else {
          a.push_back(random_point(rng, F, c_ + 1));
          tail.push_back(linear_form(L, a.back()));
        }
      }
      std::vector<MultiPoly> cut;
      for (const auto& g : I_.gens()) {
        MultiPoly h = restrict_to_graph(g, tail, L);
        if (!h.is_zero()) cut.push_back(h);
      }
      Ideal section = saturate_irrelevant(Ideal(L, cut), rng);
      std::optional<ZeroDimAlgebra> A;
      try {
        A.emplace(section);
      } catch (const MathError&) {
        if (++failures_ > 8) throw;
        continue;
      }
      const std::size_t N = A->dim();
      Plane pl;
      for (const auto& row : a) {
        Matrix m(N, N);
        for (int j = 0; j <= c_; ++j) {
          if (!row[j]) continue;
          const Matrix& M = A->mult(j);
          for (std::size_t x = 0; x < N; ++x)
            for (std::size_t y = 0; y < N; ++y)
              if (M.at(x, y)) m.at(x, y) = F.add(m.at(x, y), F.mul(row[j], M.at(x, y)));
        }
        pl.vars.push_back(std::move(m));
      }
      pl.one = A->one();
      if (reduced_) pl.projection = A->reduced_projection();
      planes_.push_back(std::move(pl));
    }
    return planes_[i];
  }

 private:
  Ideal I_;
  int c_;
  bool reduced_;
  int failures_ = 0;
  std::vector<Plane> planes_;
};

// degree-D forms, modulo J, whose restriction to generic c-planes lies in the section;
// J must vanish on the part being extracted
std::vector<MultiPoly> forms_on_top(const Ideal& J, SectionCache& cache, int D, Rng& rng) {
  const RingPtr& R = J.ring();
  const Field& F = R->field();
  auto lead = J.gb().leading_monomials();
  auto standard = [&](int d) {
    std::vector<Monomial> out;
    for (const auto& m : monomials_of_degree(*R, d))
      if (std::none_of(lead.begin(), lead.end(), [&](const Monomial& l) { return divides(l, m); })) out.push_back(m);
    return out;
  };
  std::vector<std::vector<Monomial>> layers;
  for (int d = 0; d <= D; ++d) layers.push_back(standard(d));
  const auto& mons = layers.back();
  if (mons.empty()) return {};
  RowEchelon ech(mons.size(), F);
  std::size_t last_rank = mons.size() + 1;
  int stable = 0;
  for (std::size_t plane = 0; plane < 256 && stable < 2; ++plane) {
    check_deadline();
    const auto& pl = cache.at(plane, rng);
    // class of each standard monomial, built up degree by degree
    std::unordered_map<Monomial, std::vector<Coef>, MonomialHash> cls;
    cls[layers[0].front()] = pl.one;
    for (int d = 1; d <= D; ++d)
      for (const auto& m : layers[static_cast<std::size_t>(d)]) {
        int i = 0;
        while (!m.exp[i]) ++i;
        Monomial parent = m;
        --parent.exp[i];
        parent.degree = static_cast<std::uint16_t>(R->degree_of(parent));
        cls[m] = mat_vec(pl.vars[static_cast<std::size_t>(i)], cls.at(parent), F);
      }
    const std::size_t N = pl.one.size();
    const std::size_t k = pl.projection.rows() ? pl.projection.rows() : N;
    std::vector<std::vector<Coef>> rows(k, std::vector<Coef>(mons.size(), 0));
    for (std::size_t a = 0; a < mons.size(); ++a) {
      const auto& v = cls.at(mons[a]);
      auto w = pl.projection.rows() ? mat_vec(pl.projection, v, F) : v;
      for (std::size_t t = 0; t < k; ++t) rows[t][a] = w[t];
    }
    for (const auto& r : rows) ech.add(r);
    const std::size_t rk = ech.rank();
    stable = rk == last_rank ? stable + 1 : 0;
    last_rank = rk;
    if (rk == mons.size()) break;
  }
  std::vector<MultiPoly> out;
  for (const auto& v : kernel(ech.basis(), F)) {
    std::vector<Term> ts;
    for (std::size_t a = 0; a < v.size(); ++a)
      if (v[a]) ts.push_back({mons[a], v[a]});
    out.push_back(MultiPoly::from_terms(R, std::move(ts)));
  }
  return out;
}

// forms of degree <= D on the top part, for the first D where they cut out the
// right dimension and degree and the next degree with new forms leaves the
// Hilbert polynomial unchanged
std::optional<std::pair<Ideal, int>> stable_candidate(const Ideal& I, int codim, int dim, std::int64_t deg, bool reduced,
                                                      int max_degree, Rng& rng) {
  const RingPtr& R = I.ring();
  SectionCache cache(I, codim, reduced);
  std::vector<MultiPoly> acc = I.gens();
  Ideal cur = I;
  std::optional<std::pair<Ideal, int>> match;
  for (int D = 1; D <= max_degree + 1; ++D) {
    if (D > max_degree && !match) break;
    auto forms = forms_on_top(cur, cache, D, rng);
    if (forms.empty()) {
      if (match) return match;
      continue;
    }
    acc.insert(acc.end(), forms.begin(), forms.end());
    Ideal cand = saturate_irrelevant(Ideal(R, acc), rng);
    cur = cand;
    auto [d2, g2] = dim_degree(cand);
    if (d2 != dim || g2 != deg) continue;
    if (match && hilbert_data(match->first).same_polynomial(hilbert_data(cand))) return match;
    match = std::make_pair(cand, D);
  }
  if (match) return match;
  // nothing beyond I itself up to max_degree + 1
  if (acc.size() == I.gens().size() && dim_degree(I) == std::make_pair(dim, deg)) return std::make_pair(I, 0);
  return std::nullopt;
}

}  // namespace

TopComponentResult top_component(const Ideal& I, Rng& rng, int max_degree) {
  const RingPtr& R = I.ring();
  auto [dim, deg] = dim_degree(I);
  TopComponentResult out;
  out.dim = dim;
  out.degree = deg;
  if (dim < 0) {
    out.ideal = I;
    return out;
  }
  const int codim = R->nvars() - 1 - dim;
  if (auto cand = stable_candidate(I, codim, dim, deg, false, max_degree, rng)) {
    out.ideal = cand->first;
    out.generator_degree = cand->second;
    return out;
  }
  // K : (K : I) for K a complete intersection of generic combinations
  int D = 0;
  for (const auto& g : I.gens()) D = std::max(D, g.degree());
  for (int attempt = 0; attempt < 3; ++attempt) {
    std::vector<MultiPoly> k;
    for (int a = 0; a < codim; ++a) {
      MultiPoly comb(R);
      for (const auto& g : I.gens()) {
        MultiPoly t = g.scale(random_coef(rng, R->field()));
        for (int e = g.degree(); e < D; ++e) t = t * random_linear_form(rng, R);
        comb += t;
      }
      k.push_back(comb);
    }
    Ideal K(R, k);
    if (dim_degree(K).first != dim) continue;
    Ideal link = ideal_quotient(K, I);
    Ideal top = ideal_quotient(K, link);
    auto [d2, g2] = dim_degree(top);
    if (d2 != dim || g2 != deg) continue;
    out.ideal = saturate_irrelevant(top, rng);
    return out;
  }
  throw MathError("top component: dimension check failed");
}

TopComponentResult reduced_top_component(const Ideal& I, Rng& rng, int max_degree) {
  const RingPtr& R = I.ring();
  auto [dim, deg] = dim_degree(I);
  TopComponentResult out;
  out.dim = dim;
  if (dim < 0) {
    out.ideal = I;
    return out;
  }
  const int n = R->nvars();
  const int codim = n - 1 - dim;
  // degree of the reduced top part = points on a generic complementary section
  RingPtr L = make_ring(R->field().characteristic(), codim + 1);
  std::vector<MultiPoly> images;
  for (int i = 0; i < n; ++i) images.push_back(random_linear_form(rng, L));
  std::vector<MultiPoly> cut;
  for (const auto& g : I.gens()) {
    MultiPoly h = g.substitute(images, L);
    if (!h.is_zero()) cut.push_back(h);
  }
  out.degree = point_count(Ideal(L, cut), rng);
  if (auto cand = stable_candidate(I, codim, dim, out.degree, true, max_degree, rng)) {
    out.ideal = cand->first;
    out.generator_degree = cand->second;
    return out;
  }
  throw MathError("reduced top component: no generators up to degree " + std::to_string(max_degree));
}

}  // namespace birat
