#pragma once

#include <random>
#include <vector>

#include "birat/poly.hpp"

namespace birat {

using Rng = std::mt19937_64;

Coef random_coef(Rng& rng, const Field& f);
Coef random_nonzero(Rng& rng, const Field& f);
std::vector<Coef> random_point(Rng& rng, const Field& f, int n);
MultiPoly random_linear_form(Rng& rng, const RingPtr& ring);
/// Random F_p-combination of the given polynomials.
MultiPoly random_combination(Rng& rng, const std::vector<MultiPoly>& polys);
/// Random invertible n x n matrix (row-major) together with its inverse.
void random_invertible(Rng& rng, const Field& f, int n, std::vector<Coef>& a, std::vector<Coef>& a_inv);

}  // namespace birat
