#pragma once

#include <optional>
#include <string>
#include <vector>

#include "birat/groebner.hpp"
#include "birat/linsys.hpp"
#include "birat/ratmap.hpp"

namespace birat {

enum class SurfaceTag { DP5, Scroll4, S14, FvScroll7, S38, DP7Proj, OcticScroll8 };

const std::vector<SurfaceTag>& all_surface_tags();
std::string tag_name(SurfaceTag tag);
/// Throws std::invalid_argument for unknown names.
SurfaceTag parse_tag(const std::string& name);

struct SurfaceSpec {
  SurfaceTag tag = SurfaceTag::DP5;
  Coef prime = 32003;
  std::uint64_t seed = 1;
};

struct ConstructedSurface {
  SurfaceTag tag = SurfaceTag::DP5;
  Ideal ideal;  // saturated, in P^5
  std::int64_t degree = 0;
  std::int64_t sectional_genus = 0;
  std::int64_t h0_cubics = 0;
  std::int64_t nodes = 0;                   // points of the singular locus
  std::int64_t singular_scheme_degree = 0;  // length of the Jacobian scheme
  /// Genus of the smooth model before projection, when there is one.
  std::optional<std::int64_t> model_genus;
  /// Plane forms parametrizing the surface, when it is rational by construction.
  std::vector<MultiPoly> plane_forms;
  std::uint64_t seed = 0;
  int attempts = 0;
};

/// Pieces of the linkage that produces the octic scroll.
struct LinkageData {
  ConstructedSurface s38;
  LinearSystem quintics;  // H^0(I^2(5)) of S_38
  Ideal base_top;         // B: top component of the base scheme
  MultiPoly cubic;        // X, a random cubic through S_38
  Ideal residual;         // T with X ∩ B = S_38 ∪ T
};

/// Builds and certifies one surface; reseeds up to 3 times.
ConstructedSurface build_surface(const SurfaceSpec& spec);

/// The linkage X ∩ B = S_38 ∪ T, T certified as a degree-8 surface.
LinkageData build_linkage(Coef prime, std::uint64_t seed);

/// Random F_p-combination of the cubics through S, checked to be irreducible of dimension 4.
MultiPoly random_cubic_through(const Ideal& S, Rng& rng);

/// ((X) + B) : S, saturated.  Errors unless the residual is a surface of
/// degree deg(X ∩ B) - deg(S).
Ideal link_residual(const MultiPoly& X, const Ideal& B, const Ideal& S, Rng& rng);

/// Image of V(I) under projection from the linear span of `center` (points).
Ideal project_from_center(const Ideal& I, const std::vector<std::vector<Coef>>& center, Rng& rng);

/// Image of P^2 under the given forms, certified against the expected
/// Hilbert polynomial values P(0), P(1), P(2) (generators up to degree max_degree).
Ideal plane_image(const std::vector<MultiPoly>& forms, int max_degree, Rng& rng);

/// Points of the singular locus and length of the singular scheme of a surface.
std::pair<std::int64_t, std::int64_t> surface_singularities(const Ideal& I, Rng& rng);

}  // namespace birat
