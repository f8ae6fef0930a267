#include "birat/surfaces.hpp"

#include <stdexcept>

#include "birat/cancel.hpp"
#include "birat/hilbert.hpp"
#include "birat/homalg.hpp"
#include "birat/linalg.hpp"

namespace birat {

namespace {

struct TagInfo {
  SurfaceTag tag;
  const char* name;
};

const TagInfo kTags[] = {
    {SurfaceTag::DP5, "dP5"},         {SurfaceTag::Scroll4, "scroll4"}, {SurfaceTag::S14, "s14"},
    {SurfaceTag::FvScroll7, "fv_scroll7"}, {SurfaceTag::S38, "s38"}, {SurfaceTag::DP7Proj, "dp7_proj"},
    {SurfaceTag::OcticScroll8, "octic_scroll8"},
};

// P(k) = 1 + (k^2 H^2 - k H.K) / 2 - nodes
struct ExpectedPolynomial {
  std::int64_t h2, hk, nodes;
  std::int64_t at(std::int64_t k) const { return 1 + (k * k * h2 - k * hk) / 2 - nodes; }
};

bool matches(const HilbertData& h, const ExpectedPolynomial& e) {
  if (h.proj_dim != 2) return false;
  for (int k = 0; k <= 2; ++k)
    if (h.polynomial_at(k) != e.at(k)) return false;
  return true;
}

std::uint64_t mix(std::uint64_t seed, int attempt, std::uint64_t salt) {
  std::uint64_t z = seed * 0x9E3779B97F4A7C15ull + static_cast<std::uint64_t>(attempt) * 0xBF58476D1CE4E5B9ull + salt;
  z ^= z >> 31;
  return z;
}

// k plane points, pairwise distinct and no three collinear
std::vector<std::vector<Coef>> general_plane_points(Rng& rng, const Field& F, int k) {
  while (true) {
    std::vector<std::vector<Coef>> pts;
    for (int i = 0; i < k; ++i) pts.push_back(random_point(rng, F, 3));
    bool ok = true;
    for (int a = 0; a < k && ok; ++a)
      for (int b = a + 1; b < k && ok; ++b)
        for (int c = b + 1; c < k && ok; ++c) {
          const auto &p = pts[a], &q = pts[b], &r = pts[c];
          Coef det = F.add(F.add(F.mul(p[0], F.sub(F.mul(q[1], r[2]), F.mul(q[2], r[1]))),
                                 F.mul(p[1], F.sub(F.mul(q[2], r[0]), F.mul(q[0], r[2])))),
                           F.mul(p[2], F.sub(F.mul(q[0], r[1]), F.mul(q[1], r[0]))));
          if (det == 0) ok = false;
        }
    if (k == 2) {
      const auto &p = pts[0], &q = pts[1];
      ok = F.mul(p[0], q[1]) != F.mul(p[1], q[0]) || F.mul(p[0], q[2]) != F.mul(p[2], q[0]) ||
           F.mul(p[1], q[2]) != F.mul(p[2], q[1]);
    }
    if (ok) return pts;
  }
}

std::vector<Coef> eval_all(const std::vector<MultiPoly>& forms, std::span<const Coef> pt) {
  std::vector<Coef> out;
  for (const auto& f : forms) out.push_back(f.evaluate(pt));
  return out;
}

// combinations of the forms vanishing at the center points (projection from their span)
std::vector<MultiPoly> project_forms(const std::vector<MultiPoly>& forms, const std::vector<std::vector<Coef>>& center) {
  const Field& F = forms.front().field();
  Matrix A(0, forms.size());
  for (const auto& c : center) A.append_row(c);
  std::vector<MultiPoly> out;
  for (const auto& v : kernel(std::move(A), F)) {
    MultiPoly g(forms.front().ring());
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i]) g += forms[i].scale(v[i]);
    out.push_back(g);
  }
  return out;
}

std::vector<Coef> on_secant(Rng& rng, const Field& F, const std::vector<MultiPoly>& forms) {
  auto a = eval_all(forms, random_point(rng, F, 3));
  auto b = eval_all(forms, random_point(rng, F, 3));
  Coef l = random_nonzero(rng, F);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = F.add(a[i], F.mul(l, b[i]));
  return a;
}

// image of P^2, generators raised until the Hilbert polynomial matches
std::optional<Ideal> certified_plane_image(const std::vector<MultiPoly>& forms, const ExpectedPolynomial& e, Rng& rng) {
  for (int k = 2; k <= 4; ++k) {
    Ideal I = plane_image(forms, k, rng);
    if (matches(hilbert_data(I), e)) return I;
  }
  return std::nullopt;
}

Ideal scroll22(const RingPtr& R, Rng& rng) {
  const char* minors[] = {"x0*x2 - x1^2", "x0*x4 - x1*x3", "x0*x5 - x1*x4",
                          "x1*x4 - x2*x3", "x1*x5 - x2*x4", "x3*x5 - x4^2"};
  std::vector<MultiPoly> g;
  for (const char* m : minors) g.push_back(parse_poly(R, m));
  std::vector<Coef> a, a_inv;
  random_invertible(rng, R->field(), 6, a, a_inv);
  return substitute_linear(Ideal(R, g), a);
}

void finish(ConstructedSurface& s, Rng& rng) {
  auto hd = hilbert_data(s.ideal);
  s.degree = hd.degree;
  s.sectional_genus = hd.sectional_genus();
  s.h0_cubics = ideal_dimension(s.ideal, 3);
  auto [pts, len] = surface_singularities(s.ideal, rng);
  s.nodes = pts;
  s.singular_scheme_degree = len;
}

std::optional<ConstructedSurface> attempt(SurfaceTag tag, Coef prime, std::uint64_t seed, Rng& rng) {
  RingPtr P2 = make_ring(prime, 3);
  RingPtr P5 = make_ring(prime, 6);
  const Field& F = P2->field();
  ConstructedSurface s;
  s.tag = tag;
  s.seed = seed;
  auto plane = [&](int d, int k, int mult) {
    std::vector<PlanePoint> pts;
    for (auto& c : general_plane_points(rng, F, k)) pts.push_back({c, mult});
    return plane_system(P2, d, pts);
  };
  switch (tag) {
    case SurfaceTag::DP5: {
      auto L = plane(3, 4, 1);
      if (L.basis.size() != 6) return std::nullopt;
      auto I = certified_plane_image(L.basis, {5, -5, 0}, rng);
      if (!I) return std::nullopt;
      s.ideal = *I;
      s.plane_forms = L.basis;
      break;
    }
    case SurfaceTag::Scroll4: {
      s.ideal = scroll22(P5, rng);
      if (!matches(hilbert_data(s.ideal), {4, -6, 0})) return std::nullopt;
      break;
    }
    case SurfaceTag::S14: {
      auto L = plane(4, 8, 1);
      if (L.basis.size() != 7) return std::nullopt;
      const ExpectedPolynomial e{8, -4, 0};
      auto model = certified_plane_image(L.basis, e, rng);
      if (!model) return std::nullopt;
      s.model_genus = sectional_genus(*model);
      auto forms = project_forms(L.basis, {random_point(rng, F, 7)});
      auto I = certified_plane_image(forms, e, rng);
      if (!I) return std::nullopt;
      s.ideal = *I;
      s.plane_forms = forms;
      break;
    }
    case SurfaceTag::FvScroll7: {
      auto L = plane(4, 1, 3);
      if (L.basis.size() != 9) return std::nullopt;
      std::vector<std::vector<Coef>> center;
      for (int i = 0; i < 3; ++i) center.push_back(on_secant(rng, F, L.basis));
      auto forms = project_forms(L.basis, center);
      if (forms.size() != 6) return std::nullopt;
      auto I = certified_plane_image(forms, {7, -9, 3}, rng);
      if (!I) return std::nullopt;
      s.ideal = *I;
      s.plane_forms = forms;
      break;
    }
    case SurfaceTag::S38: {
      auto L = plane(10, 10, 3);
      if (L.basis.size() != 6) return std::nullopt;
      auto I = certified_plane_image(L.basis, {10, 0, 0}, rng);
      if (!I) return std::nullopt;
      s.ideal = *I;
      s.plane_forms = L.basis;
      break;
    }
    case SurfaceTag::DP7Proj: {
      auto L = plane(3, 2, 1);
      if (L.basis.size() != 8) return std::nullopt;
      auto forms = project_forms(L.basis, {on_secant(rng, F, L.basis), random_point(rng, F, 8)});
      if (forms.size() != 6) return std::nullopt;
      auto I = certified_plane_image(forms, {7, -7, 1}, rng);
      if (!I) return std::nullopt;
      s.ideal = *I;
      s.plane_forms = forms;
      break;
    }
    case SurfaceTag::OcticScroll8: {
      auto link = build_linkage(prime, seed);
      s.ideal = link.residual;
      if (!matches(hilbert_data(s.ideal), {8, -10, 6})) return std::nullopt;
      break;
    }
  }
  finish(s, rng);
  const std::int64_t expected_nodes[] = {0, 0, 0, 3, 0, 1, 6};
  if (s.nodes != expected_nodes[static_cast<int>(tag)]) return std::nullopt;
  return s;
}

}  // namespace

const std::vector<SurfaceTag>& all_surface_tags() {
  static const std::vector<SurfaceTag> tags = {SurfaceTag::DP5,       SurfaceTag::Scroll4, SurfaceTag::S14,
                                               SurfaceTag::FvScroll7, SurfaceTag::S38,     SurfaceTag::DP7Proj,
                                               SurfaceTag::OcticScroll8};
  return tags;
}

std::string tag_name(SurfaceTag tag) {
  for (const auto& t : kTags)
    if (t.tag == tag) return t.name;
  return "?";
}

SurfaceTag parse_tag(const std::string& name) {
  for (const auto& t : kTags)
    if (name == t.name) return t.tag;
  throw std::invalid_argument("unknown surface tag: " + name);
}

Ideal plane_image(const std::vector<MultiPoly>& forms, int max_degree, Rng& rng) {
  RationalMap phi(Ideal::zero(forms.front().ring()), forms);
  return saturate_irrelevant(image_up_to(phi, max_degree, rng), rng);
}

std::pair<std::int64_t, std::int64_t> surface_singularities(const Ideal& I, Rng& rng) {
  const int codim = I.ring()->nvars() - 3;
  Ideal sing = singular_locus(I, codim, rng);
  auto [dim, deg] = dim_degree(sing);
  if (dim < 0) return {0, 0};
  if (dim > 0) throw MathError("singular locus is not finite");
  return {point_count(sing, rng), deg};
}

ConstructedSurface build_surface(const SurfaceSpec& spec) {
  for (int a = 0; a < 3; ++a) {
    Rng rng(mix(spec.seed, a, static_cast<std::uint64_t>(spec.tag)));
    std::uint64_t seed = a == 0 ? spec.seed : mix(spec.seed, a, 77);
    auto s = attempt(spec.tag, spec.prime, seed, rng);
    if (s) {
      s->attempts = a + 1;
      return *s;
    }
  }
  throw MathError("surface certification failed: " + tag_name(spec.tag));
}

MultiPoly random_cubic_through(const Ideal& S, Rng& rng) {
  auto cubics = S.degree_part(3);
  if (cubics.empty()) throw MathError("no cubics through the surface");
  const RingPtr& R = S.ring();
  for (int a = 0; a < 3; ++a) {
    MultiPoly X = random_combination(rng, cubics);
    if (X.is_zero()) continue;
    // reducible hypersurfaces are singular in codimension one
    std::vector<MultiPoly> jac{X};
    for (int v = 0; v < R->nvars(); ++v) jac.push_back(X.derivative(v));
    if (dim_degree(Ideal(R, jac)).first >= R->nvars() - 3) continue;
    return X;
  }
  throw MathError("no irreducible cubic through the surface");
}

Ideal link_residual(const MultiPoly& X, const Ideal& B, const Ideal& S, Rng& rng) {
  const RingPtr& R = S.ring();
  std::vector<MultiPoly> w = B.gens();
  w.push_back(X.in_ring(R));
  Ideal W(R, w);
  auto [dw, degw] = dim_degree(W);
  auto [ds, degs] = dim_degree(S);
  if (dw != ds) throw MathError("X ∩ B has the wrong dimension");
  MultiPoly f = random_combination(rng, S.gens());
  Ideal T = saturate_irrelevant(quotient_by_form(W, f), rng);
  auto [dt, degt] = dim_degree(T);
  if (T.is_unit() && degw == degs) return T;
  if (dt != ds || degt != degw - degs) throw MathError("residual has the wrong dimension or degree");
  return T;
}

Ideal project_from_center(const Ideal& I, const std::vector<std::vector<Coef>>& center, Rng& rng) {
  const RingPtr& R = I.ring();
  const Field& F = R->field();
  const int n = R->nvars();
  Matrix C(0, static_cast<std::size_t>(n));
  for (const auto& c : center) C.append_row(c);
  auto ell = kernel(C, F);  // linear forms vanishing on the center
  const int k = n - static_cast<int>(ell.size());  // dim of the center's cone
  {
    std::vector<MultiPoly> g = I.gens();
    for (const auto& v : ell) g.push_back(linear_form(R, v));
    if (dim_degree(Ideal(R, g)).first >= 0) throw MathError("center meets the variety");
  }
  // new coordinates (w_0..w_{k-1}, z_1..z_{n-k}) with z_j = ell_j
  std::vector<Coef> a(static_cast<std::size_t>(n * n), 0);
  while (true) {
    Matrix T(0, static_cast<std::size_t>(n));
    std::vector<std::vector<Coef>> rows;
    for (int i = 0; i < k; ++i) rows.push_back(random_point(rng, F, n));
    for (const auto& v : ell) rows.push_back(v);
    for (const auto& r : rows) T.append_row(r);
    if (rank(T, F) == static_cast<std::size_t>(n)) {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i * n + j)] = rows[i][j];
      break;
    }
  }
  // x = a^{-1} (w, z): invert a
  Matrix aug(static_cast<std::size_t>(n), static_cast<std::size_t>(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = a[static_cast<std::size_t>(i * n + j)];
    aug.at(i, n + i) = 1;
  }
  row_reduce(aug, F);
  std::vector<Coef> inv(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[static_cast<std::size_t>(i * n + j)] = aug.at(i, n + j);
  Ideal moved = substitute_linear(I, inv);
  return eliminate(moved, k);
}

LinkageData build_linkage(Coef prime, std::uint64_t seed) {
  LinkageData out;
  out.s38 = build_surface({SurfaceTag::S38, prime, seed});
  Rng rng(mix(seed, 0, 0x51ED));
  out.quintics = power_saturation_basis(out.s38.ideal, 5, 2, rng, 5);
  Ideal base(out.s38.ideal.ring(), out.quintics.basis);
  auto top = top_component(base, rng);
  out.base_top = top.ideal;
  out.cubic = random_cubic_through(out.s38.ideal, rng);
  out.residual = link_residual(out.cubic, out.base_top, out.s38.ideal, rng);
  return out;
}

}  // namespace birat
