#pragma once

#include <climits>
#include <cstdint>
#include <memory>
#include <vector>

#include "birat/poly.hpp"

namespace birat {

/// Degree-by-degree F4 for (weighted) homogeneous ideals and submodules of
/// graded free modules.  Every input row must be homogeneous with respect to
/// monomial degree plus the shift of its component.  Because inputs are
/// homogeneous, the basis is correct up to the last processed degree for
/// any monomial order, which is what degree truncation relies on.
class F4 {
 public:
  struct Stats {
    int steps = 0;
    std::size_t max_rows = 0;
    std::size_t max_cols = 0;
    std::size_t pairs_processed = 0;
    std::size_t zero_reductions = 0;
  };

  explicit F4(RingPtr ring, std::vector<int> component_shifts = {});
  ~F4();
  F4(const F4&) = delete;
  F4& operator=(const F4&) = delete;

  void add_input(const MultiPoly& f);
  /// Trusted Gröbner basis elements: used as reducers, no pairs formed.
  void load_basis(const std::vector<MultiPoly>& basis);

  /// Processes pairs and inputs of degree <= max_degree.
  void run(int max_degree = INT_MAX);
  bool has_pending() const;
  /// Smallest degree with pending work, or INT_MAX.
  int next_degree() const;
  /// Largest degree fully processed so far.
  int processed_degree() const { return processed_degree_; }

  /// Minimal basis; with `reduce`, tails are fully reduced and elements monic.
  std::vector<MultiPoly> basis(bool reduce = true);
  std::vector<Monomial> leading_monomials() const;
  /// Full reduction of arbitrary polynomials (any degrees) by the current basis.
  std::vector<MultiPoly> normal_forms(const std::vector<MultiPoly>& polys);

  const Stats& stats() const { return stats_; }
  const RingPtr& ring() const { return ring_; }

 private:
  struct Impl;
  RingPtr ring_;
  std::unique_ptr<Impl> impl_;
  int processed_degree_ = INT_MIN;
  Stats stats_;
};

}  // namespace birat
