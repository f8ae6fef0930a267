#include "birat/ratmap.hpp"

#include <algorithm>
#include <mutex>
#include <optional>
#include <stdexcept>

#include "birat/cancel.hpp"
#include "birat/linalg.hpp"
#include "birat/linsys.hpp"
#include "birat/points.hpp"

namespace birat {

namespace {

bool all_zero(std::span<const Coef> v) {
  return std::all_of(v.begin(), v.end(), [](Coef c) { return c == 0; });
}

// values of the given monomials at y
std::vector<Coef> monomial_values(const Field& F, const std::vector<Monomial>& mons, std::span<const Coef> y) {
  const int n = static_cast<int>(y.size());
  std::vector<std::vector<Coef>> pw(static_cast<std::size_t>(n));
  std::vector<Coef> out;
  out.reserve(mons.size());
  for (const auto& m : mons) {
    Coef v = 1;
    for (int i = 0; i < n && v; ++i) {
      int e = m.exp[i];
      if (!e) continue;
      auto& p = pw[i];
      if (p.empty()) p.push_back(1);
      while (static_cast<int>(p.size()) <= e) p.push_back(F.mul(p.back(), y[i]));
      v = F.mul(v, p[e]);
    }
    out.push_back(v);
  }
  return out;
}

MultiPoly form_from_vector(const RingPtr& R, const std::vector<Monomial>& mons, const std::vector<Coef>& v) {
  std::vector<Term> ts;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i]) ts.push_back({mons[i], v[i]});
  return MultiPoly::from_terms(R, std::move(ts));
}

// x = A t with A an n x (m+1) random matrix; images of the x_i in a ring on m+1 variables
std::vector<MultiPoly> random_linear_embedding(Rng& rng, const RingPtr& small, int n) {
  std::vector<MultiPoly> images;
  for (int i = 0; i < n; ++i) images.push_back(random_linear_form(rng, small));
  return images;
}

// standard monomials of degree d modulo the leading terms
std::vector<Monomial> standard_monomials(const Ring& R, int d, const std::vector<Monomial>& lead) {
  std::vector<Monomial> out;
  for (const auto& m : monomials_of_degree(R, d)) {
    bool std_mon = true;
    for (const auto& l : lead)
      if (divides(l, m)) {
        std_mon = false;
        break;
      }
    if (std_mon) out.push_back(m);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- RationalMap

struct RationalMap::Cache {
  std::once_flag once;
  std::pair<int, std::int64_t> dim_degree{-1, 0};
};

RationalMap::RationalMap(Ideal source, std::vector<MultiPoly> forms)
    : source_(std::move(source)), forms_(std::move(forms)), cache_(std::make_shared<Cache>()) {
  if (forms_.empty()) throw std::invalid_argument("rational map needs at least one form");
  const int d = forms_.front().is_zero() ? -1 : forms_.front().degree();
  bool nonzero = false;
  for (auto& f : forms_) {
    if (f.ring() != source_.ring()) f = f.in_ring(source_.ring());
    if (f.is_zero()) continue;
    if (!f.is_homogeneous()) throw std::invalid_argument("map forms must be homogeneous");
    if (d >= 0 && f.degree() != d) throw std::invalid_argument("map forms must share one degree");
    nonzero = true;
  }
  if (!nonzero || d < 0) throw std::invalid_argument("map forms are all zero");
  bool all_in = true;
  for (const auto& f : forms_)
    if (!source_.contains(f)) {
      all_in = false;
      break;
    }
  if (all_in) throw MathError("map forms vanish on the source");
}

RingPtr RationalMap::target_ring() const {
  return make_ring(source_ring()->field().characteristic(), target_arity());
}

Ideal RationalMap::base_ideal() const {
  std::vector<MultiPoly> gens = source_.gens();
  gens.insert(gens.end(), forms_.begin(), forms_.end());
  return Ideal(source_ring(), gens);
}

std::vector<Coef> RationalMap::evaluate(std::span<const Coef> pt) const {
  std::vector<Coef> out;
  out.reserve(forms_.size());
  for (const auto& f : forms_) out.push_back(f.evaluate(pt));
  return out;
}

std::pair<int, std::int64_t> RationalMap::source_dim_degree() const {
  std::call_once(cache_->once, [&] { cache_->dim_degree = dim_degree(source_); });
  return cache_->dim_degree;
}

std::vector<Coef> RationalMap::sample_point(Rng& rng) const {
  if (sampler_) return sampler_(rng);
  const auto& gens = source_.gens();
  const Field& F = source_ring()->field();
  const int n = source_ring()->nvars();
  if (gens.empty()) {
    while (true) {
      auto pt = random_point(rng, F, n);
      if (!all_zero(pt)) return pt;
    }
  }
  if (gens.size() == 1) return random_point_on_hypersurface(gens.front(), rng);
  throw std::logic_error("no point sampler for this source");
}

RationalMap restrict_to_hypersurface(const RationalMap& phi, const MultiPoly& f) {
  if (phi.source().contains(f)) throw MathError("hypersurface contains the source");
  std::vector<MultiPoly> gens = phi.source().gens();
  gens.push_back(f.in_ring(phi.source_ring()));
  return RationalMap(Ideal(phi.source_ring(), gens), phi.forms());
}

// ---------------------------------------------------------------- projective degrees

std::int64_t projective_degree(const RationalMap& phi, int i, Rng& rng, int retries) {
  auto [k, deg0] = phi.source_dim_degree();
  if (i < 0 || i > k) throw std::invalid_argument("projective degree index out of range");
  if (i == 0) return deg0;
  const RingPtr& R = phi.source_ring();
  const int n = R->nvars();
  const int m = n - 1 - k + i;  // dim of the random linear section of P^{n-1}
  for (int attempt = 0; attempt < retries; ++attempt) {
    check_deadline();
    RingPtr L = make_ring(R->field().characteristic(), m + 1);
    auto images = random_linear_embedding(rng, L, n);
    std::vector<MultiPoly> gens;
    for (const auto& g : phi.source().gens()) {
      MultiPoly h = g.substitute(images, L);
      if (!h.is_zero()) gens.push_back(h);
    }
    std::vector<MultiPoly> fs;
    for (const auto& f : phi.forms()) fs.push_back(f.substitute(images, L));
    for (int j = 0; j < i; ++j) {
      MultiPoly h = random_combination(rng, fs);
      if (!h.is_zero()) gens.push_back(h);
    }
    MultiPoly g = random_combination(rng, fs);
    if (g.is_zero()) continue;
    Ideal J = saturate_by_form(Ideal(L, gens), g);
    auto [dim, deg] = dim_degree(J);
    if (dim == 0) return deg;
    if (dim < 0) return 0;
  }
  throw MathError("projective degree: no generic section found");
}

ProjectiveDegrees projective_degrees(const RationalMap& phi, Rng& rng, int retries) {
  const int k = phi.source_dim_degree().first;
  ProjectiveDegrees out;
  for (int i = 0; i <= k; ++i) out.push_back(projective_degree(phi, i, rng, retries));
  return out;
}

// ---------------------------------------------------------------- images

Ideal image_by_elimination(const RationalMap& phi) {
  const RingPtr& R = phi.source_ring();
  const int n = R->nvars(), m = phi.target_arity();
  const int d = phi.form_degree();
  const Coef p = R->field().characteristic();
  std::vector<int> w(static_cast<std::size_t>(n), 1);
  w.insert(w.end(), static_cast<std::size_t>(m), d);
  RingPtr G = make_ring(p, n + m, MonomialOrder::grevlex(), w);
  std::vector<MultiPoly> gens;
  for (const auto& g : phi.source().gens()) gens.push_back(transport(g, G));
  for (int j = 0; j < m; ++j) gens.push_back(MultiPoly::variable(G, n + j) - transport(phi.forms()[j], G));
  Ideal weighted = eliminate(Ideal(G, gens), n);
  RingPtr T = phi.target_ring();
  std::vector<MultiPoly> out;
  for (const auto& g : weighted.gens()) out.push_back(transport(g, T));
  return Ideal(T, out);
}

std::vector<MultiPoly> image_degree_part(const RationalMap& phi, int k, Rng& rng) {
  RingPtr T = phi.target_ring();
  const Field& F = T->field();
  auto mons = monomials_of_degree(*T, k);
  const std::size_t M = mons.size();
  const std::size_t extra = 20;
  Matrix A(M + extra, M);
  for (std::size_t r = 0; r < M + extra; ++r) {
    std::vector<Coef> y;
    do {
      y = phi.evaluate(phi.sample_point(rng));
    } while (all_zero(y));
    auto vals = monomial_values(F, mons, y);
    std::copy(vals.begin(), vals.end(), A.row(r));
    if (r % 64 == 0) check_deadline();
  }
  std::vector<MultiPoly> out;
  for (const auto& v : kernel(std::move(A), F)) {
    MultiPoly h = form_from_vector(T, mons, v);
    if (!phi.source().contains(h.substitute(phi.forms(), phi.source_ring())))
      throw MathError("image interpolation produced a form not vanishing on the image");
    out.push_back(h);
  }
  return span_basis(out);
}

Ideal image_up_to(const RationalMap& phi, int max_degree, Rng& rng) {
  RingPtr T = phi.target_ring();
  std::vector<MultiPoly> gens;
  for (int k = 1; k <= max_degree; ++k) {
    auto part = image_degree_part(phi, k, rng);
    if (part.empty()) continue;
    if (gens.empty()) {
      gens = part;
      continue;
    }
    // keep only what the lower degrees do not already generate
    Ideal lower(T, gens);
    auto nfs = lower.gb().normal_forms(part);
    std::vector<MultiPoly> fresh;
    for (std::size_t i = 0; i < part.size(); ++i)
      if (!nfs[i].is_zero()) fresh.push_back(part[i]);
    if (fresh.empty()) continue;
    // a basis of part modulo lower_k
    auto lower_k = lower.degree_part(k);
    auto all = lower_k;
    std::size_t base = span_basis(lower_k).size();
    for (const auto& f : fresh) {
      all.push_back(f);
      if (span_basis(all).size() > base) {
        ++base;
        gens.push_back(f);
      } else {
        all.pop_back();
      }
    }
  }
  return Ideal(T, gens);
}

// ---------------------------------------------------------------- fibers

Ideal fiber_at(const RationalMap& phi, std::span<const Coef> p, Rng& rng) {
  const RingPtr& R = phi.source_ring();
  const Field& F = R->field();
  auto q = phi.evaluate(p);
  if (all_zero(q)) throw MathError("point lies in the base locus");
  std::size_t a = 0;
  while (q[a] == 0) ++a;
  std::vector<MultiPoly> gens = phi.source().gens();
  const auto& fs = phi.forms();
  for (std::size_t j = 0; j < fs.size(); ++j) {
    if (j == a) continue;
    MultiPoly h = fs[j].scale(q[a]) - fs[a].scale(q[j]);
    if (!h.is_zero()) gens.push_back(h);
  }
  // a combination of the forms that is nonzero at phi(p) saturates exactly the base locus
  std::vector<Coef> c;
  Coef s = 0;
  do {
    c.clear();
    s = 0;
    for (std::size_t j = 0; j < fs.size(); ++j) {
      c.push_back(random_coef(rng, F));
      s = F.add(s, F.mul(c.back(), q[j]));
    }
  } while (s == 0);
  MultiPoly g(R);
  for (std::size_t j = 0; j < fs.size(); ++j) g += fs[j].scale(c[j]);
  return saturate_by_form(Ideal(R, gens), g);
}

std::int64_t intersection_length(const Ideal& F, const Ideal& S, Rng& rng) {
  Ideal sum = saturate_irrelevant(F + S, rng);
  auto [dim, deg] = dim_degree(sum);
  if (dim > 0) throw MathError("intersection is not zero-dimensional");
  return dim < 0 ? 0 : deg;
}

BirationalityCertificate is_birational(const ProjectiveDegrees& degrees, std::int64_t image_degree) {
  BirationalityCertificate c;
  c.top_degree = degrees.empty() ? 0 : degrees.back();
  c.image_degree = image_degree;
  c.birational = c.top_degree > 0 && c.top_degree == image_degree;
  return c;
}

// ---------------------------------------------------------------- inverse

namespace {

struct SourceSample {
  std::vector<Coef> x, y;
};

SourceSample sample_regular(const RationalMap& phi, Rng& rng) {
  while (true) {
    SourceSample s;
    s.x = phi.sample_point(rng);
    if (s.x[0] == 0) continue;
    s.y = phi.evaluate(s.x);
    if (!all_zero(s.y)) return s;
  }
}

bool proportional(const Field& F, std::span<const Coef> a, std::span<const Coef> b) {
  if (all_zero(a) || all_zero(b)) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (F.mul(a[i], b[j]) != F.mul(a[j], b[i])) return false;
  return true;
}

}  // namespace

bool composes_to_identity(const RationalMap& phi, const RationalMap& psi, Rng& rng, int count) {
  const Field& F = phi.source_ring()->field();
  for (int k = 0; k < count; ++k) {
    auto s = sample_regular(phi, rng);
    if (!proportional(F, psi.evaluate(s.y), s.x)) return false;
  }
  return true;
}

InverseResult inverse_map(const RationalMap& phi, const Ideal& image, Rng& rng, int delta_max, int checks) {
  RingPtr T = image.ring();
  const Field& F = T->field();
  const int n = phi.source_ring()->nvars();
  if (T->nvars() != phi.target_arity()) throw std::invalid_argument("image lives in the wrong ring");
  std::vector<Monomial> lead;
  if (!image.gens().empty()) lead = image.gb().leading_monomials();
  const std::size_t extra = 20;
  for (int delta = 1; delta <= delta_max; ++delta) {
    auto mons = standard_monomials(*T, delta, lead);
    const std::size_t M = mons.size();
    // pairs (psi_0, psi_1) with x_1 psi_0(y) = x_0 psi_1(y)
    std::vector<SourceSample> pts;
    Matrix A(2 * M + extra, 2 * M);
    for (std::size_t r = 0; r < 2 * M + extra; ++r) {
      pts.push_back(sample_regular(phi, rng));
      const auto& s = pts.back();
      auto vals = monomial_values(F, mons, s.y);
      Coef* row = A.row(r);
      for (std::size_t c = 0; c < M; ++c) {
        row[c] = F.mul(s.x[1], vals[c]);
        row[M + c] = F.neg(F.mul(s.x[0], vals[c]));
      }
      if (r % 64 == 0) check_deadline();
    }
    auto ker = kernel(std::move(A), F);
    RowEchelon cands(M, F);
    for (const auto& k : ker) cands.add(std::vector<Coef>(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(M)));
    if (cands.rank() == 0) continue;
    Matrix B(M + extra, M);
    std::vector<std::vector<Coef>> vals(M + extra);
    for (std::size_t r = 0; r < M + extra; ++r) {
      vals[r] = monomial_values(F, mons, pts[r].y);
      std::copy(vals[r].begin(), vals[r].end(), B.row(r));
    }
    // keep the psi_0 for which every x_j psi_0 / x_0 is again a form of degree delta
    Matrix C = cands.basis();
    for (int j = 1; j < n && C.rows() > 1; ++j) {
      const std::size_t k = C.rows();
      Matrix W(M + extra, M + k);
      for (std::size_t r = 0; r < M + extra; ++r) {
        std::copy(vals[r].begin(), vals[r].end(), W.row(r));
        const Coef ratio = F.div(pts[r].x[j], pts[r].x[0]);
        for (std::size_t a = 0; a < k; ++a) {
          Coef v = 0;
          for (std::size_t c = 0; c < M; ++c) v = F.add(v, F.mul(C.at(a, c), vals[r][c]));
          W.at(r, M + a) = F.neg(F.mul(ratio, v));
        }
      }
      RowEchelon next(M, F);
      for (const auto& w : kernel(std::move(W), F)) {
        std::vector<Coef> psi(M, 0);
        for (std::size_t a = 0; a < k; ++a)
          for (std::size_t c = 0; c < M; ++c) psi[c] = F.add(psi[c], F.mul(w[M + a], C.at(a, c)));
        next.add(psi);
      }
      C = next.basis();
    }
    if (C.rows() == 0) continue;
    std::vector<Coef> psi0(C.row(0), C.row(0) + M);
    // psi_j(y) = x_j psi_0(y) / x_0 at M + extra points
    std::vector<std::vector<Coef>> rhs(static_cast<std::size_t>(n));
    for (std::size_t r = 0; r < M + extra; ++r) {
      const auto& s = pts[r];
      Coef v0 = 0;
      for (std::size_t c = 0; c < M; ++c) v0 = F.add(v0, F.mul(psi0[c], vals[r][c]));
      Coef scale = F.div(v0, s.x[0]);
      for (int j = 0; j < n; ++j) rhs[j].push_back(F.mul(s.x[j], scale));
    }
    std::vector<MultiPoly> forms;
    bool ok = true;
    for (int j = 0; j < n && ok; ++j) {
      std::vector<Coef> sol;
      if (!solve(B, rhs[j], F, sol)) {
        ok = false;
        break;
      }
      forms.push_back(form_from_vector(T, mons, sol));
    }
    if (!ok) continue;
    RationalMap psi(image, forms);
    psi.set_sampler([phi](Rng& r) { return sample_regular(phi, r).y; });
    if (!composes_to_identity(phi, psi, rng, checks)) continue;
    return InverseResult{psi, delta, checks};
  }
  throw MathError("inverse not found within degree bound");
}

// ---------------------------------------------------------------- lines

LineDirections lines_through_point(const Ideal& Z, std::span<const Coef> q) {
  const RingPtr& R = Z.ring();
  const Field& F = R->field();
  const int N = R->nvars();
  if (static_cast<int>(q.size()) != N || all_zero(q)) throw std::invalid_argument("bad point");
  for (const auto& g : Z.gens())
    if (g.evaluate(q) != 0) throw MathError("point is not on the variety");
  int a = 0;
  while (q[a] == 0) ++a;
  // tangent directions v with v_a = 0: kernel of the gradients at q
  Matrix grad(0, static_cast<std::size_t>(N - 1));
  for (const auto& g : Z.gens()) {
    std::vector<Coef> row;
    for (int i = 0; i < N; ++i)
      if (i != a) row.push_back(g.derivative(i).evaluate(q));
    grad.append_row(row);
  }
  auto ker = kernel(std::move(grad), F);
  const int r = static_cast<int>(ker.size());
  if (r == 0) throw MathError("no tangent directions");
  RingPtr U = make_ring(F.characteristic(), r + 1);  // u_0..u_{r-1}, s
  std::vector<MultiPoly> images;
  for (int i = 0; i < N; ++i) {
    MultiPoly x = MultiPoly::variable(U, r).scale(q[i]);
    if (i != a) {
      const int col = i < a ? i : i - 1;
      for (int j = 0; j < r; ++j)
        if (ker[j][col]) x += MultiPoly::variable(U, j).scale(ker[j][col]);
    }
    images.push_back(x);
  }
  RingPtr D = make_ring(F.characteristic(), r);
  std::vector<MultiPoly> gens;
  for (const auto& g : Z.gens()) {
    MultiPoly h = g.substitute(images, U);
    const int deg = g.degree();
    // coefficient of s^(deg - j) is the degree-j part in u
    std::vector<std::vector<Term>> parts(static_cast<std::size_t>(deg + 1));
    for (auto t : h.terms()) {
      int j = deg - t.mono.exp[r];
      t.mono.exp[r] = 0;
      parts[j].push_back(t);
    }
    for (int j = 2; j <= deg; ++j) {
      if (parts[j].empty()) continue;
      MultiPoly c = transport(MultiPoly::from_terms(U, parts[j]), D);
      if (!c.is_zero()) gens.push_back(c);
    }
  }
  LineDirections out;
  out.point.assign(q.begin(), q.end());
  for (const auto& k : ker) {
    std::vector<Coef> w(static_cast<std::size_t>(N), 0);
    for (int i = 0; i < N; ++i)
      if (i != a) w[i] = k[i < a ? i : i - 1];
    out.tangent.push_back(w);
  }
  out.directions = Ideal(D, gens);
  auto [dim, deg] = dim_degree(out.directions);
  out.dim = dim;
  out.degree = deg;
  return out;
}

namespace {

// F_p-orbits of a zero-dimensional set in P^{r-1}, as radical ideals
std::vector<Ideal> orbits(const Ideal& D, Rng& rng) {
  const RingPtr& R = D.ring();
  const Field& F = R->field();
  const int r = R->nvars();
  Ideal J = radical_zero_dim(D, rng);
  if (dim_degree(J).first < 0) return {};
  if (r == 1) return {J};
  for (int attempt = 0; attempt < 3; ++attempt) {
    std::vector<Coef> a, a_inv;
    random_invertible(rng, F, r, a, a_inv);
    Ideal moved = substitute_linear(J, a);
    Ideal line = eliminate(moved, r - 2);
    UPoly g;
    bool finite = false;
    for (const auto& f : line.gens()) {
      UPoly c(static_cast<std::size_t>(f.degree() + 1), 0);
      for (const auto& t : f.terms()) c[t.mono.exp[0]] = t.coef;
      if (c.back()) finite = true;
      g = g.empty() ? c : upoly_gcd(g, c, F);
    }
    if (!finite) continue;
    std::vector<Ideal> out;
    std::int64_t total = 0;
    for (const auto& h : irreducible_factors(g, F, rng)) {
      std::vector<Term> ts;
      for (std::size_t i = 0; i < h.size(); ++i) {
        if (!h[i]) continue;
        std::vector<int> e(static_cast<std::size_t>(r), 0);
        e[r - 2] = static_cast<int>(i);
        e[r - 1] = static_cast<int>(h.size() - 1 - i);
        ts.push_back({R->monomial(e), h[i]});
      }
      Ideal orbit = saturate_irrelevant(moved + Ideal(R, {MultiPoly::from_terms(R, std::move(ts))}), rng);
      auto [d, deg] = dim_degree(orbit);
      if (d != 0 || deg != static_cast<std::int64_t>(h.size() - 1)) break;
      total += deg;
      out.push_back(substitute_linear(orbit, a_inv));
    }
    if (total == dim_degree(J).second) return out;
  }
  throw MathError("classify_lines: no generic projection separates the directions");
}

}  // namespace

std::vector<LineOrbit> classify_lines(const RationalMap& phi, const LineDirections& lines, const Ideal& base, Rng& rng) {
  if (lines.dim > 0) throw MathError("infinitely many lines through the point");
  const RingPtr& R = phi.source_ring();
  const Field& F = R->field();
  const auto N = static_cast<std::size_t>(phi.target_arity());
  const std::size_t r = lines.tangent.size();
  // A = [tangent | q | completion], invertible; rows of A^{-1} split into coordinates and equations
  std::vector<std::vector<Coef>> cols = lines.tangent;
  cols.push_back(lines.point);
  for (std::size_t e = 0; e < N && cols.size() < N; ++e) {
    auto trial = cols;
    trial.emplace_back(N, 0);
    trial.back()[e] = 1;
    Matrix t(trial.size(), N);
    for (std::size_t i = 0; i < trial.size(); ++i)
      for (std::size_t j = 0; j < N; ++j) t.at(i, j) = trial[i][j];
    if (rank(std::move(t), F) == trial.size()) cols = std::move(trial);
  }
  Matrix aug(N, 2 * N);
  for (std::size_t j = 0; j < N; ++j) {
    for (std::size_t i = 0; i < N; ++i) aug.at(i, j) = cols[j][i];
    aug.at(j, N + j) = 1;
  }
  auto piv = row_reduce(aug, F);
  if (piv.size() < N || piv[N - 1] != N - 1) throw MathError("tangent directions are dependent");
  auto row_form = [&](std::size_t i) {
    MultiPoly acc(R);
    for (std::size_t j = 0; j < N; ++j)
      if (aug.at(i, N + j)) acc += phi.forms()[j].scale(aug.at(i, N + j));
    return acc;
  };
  std::vector<MultiPoly> u;
  for (std::size_t j = 0; j < r; ++j) u.push_back(row_form(j));
  std::vector<MultiPoly> span_eqs;
  for (std::size_t i = r + 1; i < N; ++i) span_eqs.push_back(row_form(i));
  std::vector<LineOrbit> out;
  for (const auto& orbit : orbits(lines.directions, rng)) {
    check_deadline();
    std::vector<MultiPoly> gens = span_eqs;
    for (const auto& h : orbit.minimal_generators()) gens.push_back(h.substitute(u, R));
    Ideal pull = saturate_generic(saturate_irrelevant(Ideal(R, gens), rng), base, rng);
    LineOrbit o;
    o.size = static_cast<int>(dim_degree(orbit).second);
    std::tie(o.pullback_dim, o.pullback_degree) = dim_degree(pull);
    if (o.pullback_dim == 1) o.secancy = intersection_length(pull, base, rng);
    out.push_back(o);
  }
  return out;
}

}  // namespace birat
