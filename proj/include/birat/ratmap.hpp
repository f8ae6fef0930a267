#pragma once

#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "birat/groebner.hpp"
#include "birat/hilbert.hpp"

namespace birat {

using PointSampler = std::function<std::vector<Coef>(Rng&)>;

/// x -> (f_0(x) : ... : f_m(x)) on the variety V(source).
class RationalMap {
 public:
  RationalMap(Ideal source, std::vector<MultiPoly> forms);

  const Ideal& source() const { return source_; }
  const RingPtr& source_ring() const { return source_.ring(); }
  const std::vector<MultiPoly>& forms() const { return forms_; }
  int form_degree() const { return forms_.front().degree(); }
  int target_arity() const { return static_cast<int>(forms_.size()); }
  RingPtr target_ring() const;

  /// forms + source
  Ideal base_ideal() const;
  std::vector<Coef> evaluate(std::span<const Coef> pt) const;

  /// (dim, degree) of the source variety, cached.
  std::pair<int, std::int64_t> source_dim_degree() const;

  /// Random F_p-point of the source.  Linear spaces and hypersurfaces are
  /// sampled directly; anything else needs set_sampler.
  std::vector<Coef> sample_point(Rng& rng) const;
  void set_sampler(PointSampler s) { sampler_ = std::move(s); }

 private:
  Ideal source_;
  std::vector<MultiPoly> forms_;
  PointSampler sampler_;
  struct Cache;
  std::shared_ptr<Cache> cache_;
};

/// Same forms on V(source) ∩ V(f).
RationalMap restrict_to_hypersurface(const RationalMap& phi, const MultiPoly& f);

using ProjectiveDegrees = std::vector<std::int64_t>;

/// d_i for one i; `retries` fresh draws when the preimage has the wrong dimension.
std::int64_t projective_degree(const RationalMap& phi, int i, Rng& rng, int retries = 3);
ProjectiveDegrees projective_degrees(const RationalMap& phi, Rng& rng, int retries = 3);

/// Image ideal from the graph: y_j - f_j eliminated in a ring where y has weight deg f.
Ideal image_by_elimination(const RationalMap& phi);
/// Degree-k part of the image ideal.  Candidates come from evaluation at
/// source points; each is then checked symbolically against the source.
std::vector<MultiPoly> image_degree_part(const RationalMap& phi, int k, Rng& rng);
/// Ideal generated by the image forms of degree <= max_degree.
Ideal image_up_to(const RationalMap& phi, int max_degree, Rng& rng);

/// Closure of phi^{-1}(phi(p)).
Ideal fiber_at(const RationalMap& phi, std::span<const Coef> p, Rng& rng);

/// Length of the scheme F ∩ S (both in the same ring; zero-dimensional intersection).
std::int64_t intersection_length(const Ideal& F, const Ideal& S, Rng& rng);

struct CongruenceCertificate {
  int e = 0;
  int fiber_dim = -1;
  std::int64_t fiber_degree = 0;
  std::int64_t fiber_genus = 0;
  std::int64_t secancy = 0;

  bool valid() const {
    return fiber_dim == 1 && fiber_degree == e && fiber_genus == 0 && secancy == 3 * e - 1 &&
           3 * e - secancy == 1;
  }
};

struct BirationalityCertificate {
  std::int64_t top_degree = 0;
  std::int64_t image_degree = 0;
  bool birational = false;
};

BirationalityCertificate is_birational(const ProjectiveDegrees& degrees, std::int64_t image_degree);

struct InverseResult {
  RationalMap map;
  int delta = 0;
  int points_checked = 0;
};

/// Inverse of a birational phi onto V(image): forms of the least degree
/// delta <= delta_max found by interpolation at points of the source,
/// certified on `checks` fresh points.
InverseResult inverse_map(const RationalMap& phi, const Ideal& image, Rng& rng, int delta_max = 9,
                          int checks = 3);

/// Whether psi(phi(x)) is proportional to x at `count` random source points.
bool composes_to_identity(const RationalMap& phi, const RationalMap& psi, Rng& rng, int count = 3);

struct LineDirections {
  Ideal directions;  // in the coordinates of the tangent directions at q
  int dim = -1;
  std::int64_t degree = 0;
  std::vector<Coef> point;                 // q
  std::vector<std::vector<Coef>> tangent;  // direction u_j is tangent[j]
};

/// Scheme of lines through q inside V(Z).
LineDirections lines_through_point(const Ideal& Z, std::span<const Coef> q);

/// A Galois orbit of lines through q = phi(p) and the curves they pull back to.
struct LineOrbit {
  int size = 0;
  int pullback_dim = -1;
  std::int64_t pullback_degree = 0;
  std::int64_t secancy = 0;  // length of the pullback meeting the base scheme
  /// Degree of each pulled-back curve, 0 if the orbit does not split evenly.
  std::int64_t curve_degree() const { return size > 0 && pullback_degree % size == 0 ? pullback_degree / size : 0; }
};

/// Splits a reduced zero-dimensional set of directions into F_p-orbits and
/// pulls each union of lines back along phi, away from `base`.
std::vector<LineOrbit> classify_lines(const RationalMap& phi, const LineDirections& lines, const Ideal& base, Rng& rng);

}  // namespace birat
