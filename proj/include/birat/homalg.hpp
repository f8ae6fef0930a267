#pragma once

#include <optional>
#include <vector>

#include "birat/groebner.hpp"

namespace birat {

/// Matrix of forms; column j is the image of the j-th source basis vector,
/// entries (i, j) homogeneous of degree source_shifts[j] - target_shifts[i].
struct ModuleMap {
  RingPtr ring;
  std::vector<int> target_shifts;
  std::vector<int> source_shifts;
  std::vector<std::vector<MultiPoly>> columns;  // columns[j][i]

  std::size_t rows() const { return target_shifts.size(); }
  std::size_t cols() const { return columns.size(); }
};

/// Map F_0 -> R given by the generators (target shift 0).
ModuleMap generator_map(const std::vector<MultiPoly>& gens);

/// Generating set of the kernel of the map.
ModuleMap syzygies(const ModuleMap& m);
ModuleMap syzygies(const std::vector<MultiPoly>& gens);

/// Whether the composite of m and its syzygy matrix vanishes.
bool composes_to_zero(const ModuleMap& m, const ModuleMap& syz);

/// dim_k Hom(I, R/I)_0 from a presentation of I.
std::int64_t hom_degree_zero(const Ideal& I);
/// dim_k Hom(I/(F), R/I)_0 over R/(F); F must lie in I.
std::int64_t hom_degree_zero_relative(const Ideal& I, const MultiPoly& F);

struct TopComponentResult {
  Ideal ideal;
  int dim = -1;
  std::int64_t degree = 0;
  /// Degree of the forms generating the result; 0 when double linkage was used.
  int generator_degree = 0;
};

/// Union of the maximal-dimensional components of a saturated ideal.  The
/// forms of degree D vanishing on the top part are found on generic linear
/// sections of complementary dimension (which miss smaller components), for
/// D up to max_degree; the first D whose forms cut out a scheme of the same
/// dimension and degree, with a Hilbert polynomial that the forms of degree
/// D + 1 do not change, wins.  Otherwise K : (K : I) for a complete
/// intersection K inside I.
TopComponentResult top_component(const Ideal& I, Rng& rng, int max_degree = 4);

/// Reduced structure on the top-dimensional part: as above, with the radical
/// of each zero-dimensional section.
TopComponentResult reduced_top_component(const Ideal& I, Rng& rng, int max_degree = 10);

}  // namespace birat
