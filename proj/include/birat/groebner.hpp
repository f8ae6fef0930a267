#pragma once

#include <climits>
#include <memory>
#include <vector>

#include "birat/poly.hpp"
#include "birat/random.hpp"

namespace birat {

/// Reduced minimal Gröbner basis in the order of its ring.  A truncated
/// basis is only valid for elements of degree <= complete_to().
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(RingPtr ring, std::vector<MultiPoly> elements, int complete_to = INT_MAX,
                std::vector<int> shifts = {});

  const RingPtr& ring() const { return ring_; }
  const std::vector<MultiPoly>& elements() const { return elements_; }
  std::vector<Monomial> leading_monomials() const;
  int complete_to() const { return complete_to_; }
  bool truncated() const { return complete_to_ != INT_MAX; }
  bool is_unit() const;

  MultiPoly normal_form(const MultiPoly& f) const;
  std::vector<MultiPoly> normal_forms(const std::vector<MultiPoly>& fs) const;
  bool contains(const MultiPoly& f) const { return normal_form(f).is_zero(); }

 private:
  struct Reducer;
  RingPtr ring_;
  std::vector<MultiPoly> elements_;
  int complete_to_ = INT_MAX;
  std::vector<int> shifts_;
  std::shared_ptr<Reducer> reducer_;
};

/// Homogeneous ideal; value semantics with a lazily computed, shared basis.
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<MultiPoly> gens);

  static Ideal unit(const RingPtr& ring);
  static Ideal zero(const RingPtr& ring);
  /// (x0, ..., x{n-1})
  static Ideal irrelevant(const RingPtr& ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<MultiPoly>& gens() const { return gens_; }
  std::size_t size() const { return gens_.size(); }

  /// Basis in the ring's own order (cached).
  const GroebnerBasis& gb() const;
  bool contains(const MultiPoly& f) const { return gb().contains(f); }
  bool contains(const Ideal& other) const;
  bool equals(const Ideal& other) const { return contains(other) && other.contains(*this); }
  bool is_unit() const { return gb().is_unit(); }

  Ideal operator+(const Ideal& o) const;
  Ideal operator*(const Ideal& o) const;
  Ideal in_ring(const RingPtr& other) const;

  /// Generators of degree exactly d in a minimal generating set.
  std::vector<MultiPoly> minimal_generators() const;
  /// Basis of the degree-d component (standard grading).
  std::vector<MultiPoly> degree_part(int d) const;

 private:
  struct Cache;
  RingPtr ring_;
  std::vector<MultiPoly> gens_;
  std::shared_ptr<Cache> cache_;
};

GroebnerBasis groebner_basis(const Ideal& I, const MonomialOrder& order, int max_degree = INT_MAX);
/// Basis of a submodule of a graded free module; component c has shift shifts[c].
GroebnerBasis module_groebner_basis(const RingPtr& ring, const std::vector<MultiPoly>& gens,
                                    const std::vector<int>& shifts, int max_degree = INT_MAX);

MultiPoly normal_form(const MultiPoly& f, const GroebnerBasis& G);

/// I ∩ F_p[x_k..x_{n-1}], returned in a ring on those n-k variables.
Ideal eliminate(const Ideal& I, int k);

enum class QuotientMethod { AuxVariable, Syzygy };

Ideal quotient_by_form(const Ideal& I, const MultiPoly& g, QuotientMethod method = QuotientMethod::AuxVariable);
Ideal ideal_quotient(const Ideal& I, const Ideal& J, QuotientMethod method = QuotientMethod::AuxVariable);
/// I : g^∞ by one basis computation with an auxiliary variable.
Ideal saturate_by_form(const Ideal& I, const MultiPoly& g);
/// I : J^∞ by iterated quotients (a single form goes through saturate_by_form).
Ideal saturate(const Ideal& I, const Ideal& J);
/// I : m^∞ for the irrelevant ideal m.  A generic linear form is moved to
/// the last variable and divided out; the result is accepted only when its
/// Hilbert polynomial equals that of I, otherwise the variables are used one
/// at a time.
Ideal saturate_irrelevant(const Ideal& I, Rng& rng);
/// I : (generic combination of J)^∞ ; equals I : J^∞ for generic draws.
Ideal saturate_generic(const Ideal& I, const Ideal& J, Rng& rng);
Ideal intersect(const Ideal& I, const Ideal& J);
Ideal ideal_power(const Ideal& I, int e);
/// I + c x c minors of the Jacobian of random combinations of generators,
/// saturated by the irrelevant ideal.
Ideal singular_locus(const Ideal& I, int codim, Rng& rng);

/// Radical of a zero-dimensional ideal: the squarefree parts of the binary
/// eliminants in generic coordinates are added, then saturated.
Ideal radical_zero_dim(const Ideal& I, Rng& rng);

/// Number of geometric points of a zero-dimensional scheme (its reduced degree).
std::int64_t point_count(const Ideal& I, Rng& rng);

/// Linear change of coordinates x_i -> sum_j a[i*n+j] x_j.
MultiPoly substitute_linear(const MultiPoly& f, const std::vector<Coef>& a);
Ideal substitute_linear(const Ideal& I, const std::vector<Coef>& a);

}  // namespace birat
