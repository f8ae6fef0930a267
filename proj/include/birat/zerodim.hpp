#pragma once

#include <vector>

#include "birat/groebner.hpp"
#include "birat/linalg.hpp"
#include "birat/points.hpp"

namespace birat {

/// Affine coordinate ring A = R/J in the chart x_{n-1} = 1 of a saturated
/// zero-dimensional J, as a vector space with multiplication matrices.
/// Needs x_{n-1} to be a nonzerodivisor (no points on x_{n-1} = 0).
class ZeroDimAlgebra {
 public:
  explicit ZeroDimAlgebra(const Ideal& J);

  const Field& field() const { return field_; }
  std::size_t dim() const { return one_.size(); }
  int nvars() const { return static_cast<int>(mult_.size()); }
  /// Multiplication by x_i / x_{n-1}; the last one is the identity.
  const Matrix& mult(int i) const { return mult_[static_cast<std::size_t>(i)]; }
  const std::vector<Coef>& one() const { return one_; }

  /// Minimal polynomial of x_i / x_{n-1} (monic).
  UPoly minimal_polynomial(int i) const;

  /// Rows spanning the linear forms on A that vanish on the nilradical;
  /// their number is the count of geometric points.
  Matrix reduced_projection() const;

 private:
  Field field_;
  std::vector<Matrix> mult_;
  std::vector<Coef> one_;
};

}  // namespace birat
