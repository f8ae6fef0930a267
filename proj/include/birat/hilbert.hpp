#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "birat/groebner.hpp"

namespace birat {

/// Integer polynomial in t, coefficient of t^i at index i.
using IntPoly = std::vector<std::int64_t>;

/// Numerator N of the Hilbert series N(t) / prod_i (1 - t^{w_i}) of R/(gens).
IntPoly hilbert_numerator(std::vector<Monomial> gens, const Ring& ring);

struct HilbertData {
  IntPoly numerator;  // over (1-t)^nvars
  IntPoly reduced;    // Q with series Q(t) / (1-t)^(proj_dim+1)
  int nvars = 0;
  int proj_dim = -1;
  std::int64_t degree = 0;

  /// Hilbert function of R/I read off the series.
  std::int64_t series_coefficient(int d) const;
  std::int64_t polynomial_at(std::int64_t k) const;
  /// Hilbert polynomial coefficients in the binomial basis, comparable across calls.
  bool same_polynomial(const HilbertData& o) const;
  /// Arithmetic genus of a curve section; needs proj_dim >= 1.
  std::int64_t sectional_genus() const;
};

HilbertData hilbert_data(const std::vector<Monomial>& lead, const Ring& ring);
HilbertData hilbert_data(const Ideal& I);

/// dim_k (R/I)_d by counting standard monomials.
std::int64_t hilbert_function(const Ideal& I, int d);
/// dim_k I_d.
std::int64_t ideal_dimension(const Ideal& I, int d);
/// (dim Proj(R/I), degree); (-1, 0) for irrelevant ideals.
std::pair<int, std::int64_t> dim_degree(const Ideal& I);
std::int64_t sectional_genus(const Ideal& I);

}  // namespace birat
