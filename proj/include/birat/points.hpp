#pragma once

#include <optional>
#include <vector>

#include "birat/poly.hpp"
#include "birat/random.hpp"

namespace birat {

/// Dense univariate polynomial over F_p, coefficient of t^i at index i.
using UPoly = std::vector<Coef>;

/// All roots in F_p of a nonzero univariate polynomial (distinct, sorted).
std::vector<Coef> roots_in_field(UPoly f, const Field& F, Rng& rng);

/// Monic squarefree part (deg f < p).
UPoly squarefree_part(UPoly f, const Field& F);
/// Monic irreducible factors of the squarefree part, sorted by degree.
std::vector<UPoly> irreducible_factors(UPoly f, const Field& F, Rng& rng);

/// Monic gcd.
UPoly upoly_gcd(UPoly a, UPoly b, const Field& F);
/// Number of distinct roots over the algebraic closure (deg f < p).
int distinct_root_count(UPoly f, const Field& F);

/// A random F_p-point of the hypersurface V(f): random lines until the
/// restricted polynomial has a root.  Throws after `attempts` failures.
std::vector<Coef> random_point_on_hypersurface(const MultiPoly& f, Rng& rng, int attempts = 200);

/// Restriction of f to the line a + t b, as a polynomial in t.
UPoly restrict_to_line(const MultiPoly& f, const std::vector<Coef>& a, const std::vector<Coef>& b);

}  // namespace birat
