#pragma once

#include <utility>
#include <vector>

#include "birat/groebner.hpp"
#include "birat/linalg.hpp"

namespace birat {

struct LinearSystem {
  RingPtr ring;
  int degree = 0;
  int multiplicity = 1;
  std::vector<MultiPoly> basis;
  /// plane_system: conditions were dependent (dimension above the expected count).
  bool dependent_conditions = false;
  /// power_saturation_basis: degree of the truncated basis that produced it.
  int truncation = 0;

  int proj_dim() const { return static_cast<int>(basis.size()) - 1; }
};

/// Degree-d forms whose partials of order e-1 all lie in I (I saturated).
LinearSystem multiplicity_basis_oracle(const Ideal& I, int d, int e);

/// Degree-d part of saturate(I^e) from a degree-truncated basis in generic
/// coordinates.  The truncation grows until the result reaches the
/// dimension of `target_dim` (or max_extra degrees past d).
LinearSystem power_saturation_basis(const Ideal& I, int d, int e, Rng& rng, int target_dim = -1,
                                    int max_extra = 8);

struct PlanePoint {
  std::vector<Coef> coords;  // 3 coordinates
  int multiplicity = 1;
};

/// Plane curves of degree d with multiplicity >= m_i at p_i.
LinearSystem plane_system(const RingPtr& plane, int d, const std::vector<PlanePoint>& points);

/// Coefficient matrix of polys in the given monomial basis.
Matrix coefficient_matrix(const std::vector<MultiPoly>& polys, const std::vector<Monomial>& mons);

/// Whether two sets of degree-d forms span the same space.
bool same_span(const std::vector<MultiPoly>& a, const std::vector<MultiPoly>& b);

/// Echelon basis (distinct leading terms, monic) of the span of homogeneous forms of one degree.
std::vector<MultiPoly> span_basis(const std::vector<MultiPoly>& polys);

}  // namespace birat
