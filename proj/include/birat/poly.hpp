#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "birat/monomial.hpp"

namespace birat {

struct Term {
  Monomial mono;
  Coef coef;
};

/// Sparse distributed polynomial: terms strictly decreasing in the ring
/// order, no zero coefficients.  Module elements reuse the same type with
/// the component stored in each monomial.
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(RingPtr ring) : ring_(std::move(ring)) {}

  static MultiPoly constant(RingPtr ring, Coef c);
  static MultiPoly variable(RingPtr ring, int i);
  static MultiPoly monomial(RingPtr ring, const Monomial& m, Coef c = 1);
  /// Sorts, merges equal monomials and drops zero coefficients.
  static MultiPoly from_terms(RingPtr ring, std::vector<Term> terms);
  /// Trusts the caller: terms already sorted, distinct and nonzero.
  static MultiPoly from_sorted_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const Field& field() const { return ring_->field(); }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  const Monomial& leading_monomial() const { return terms_.front().mono; }
  Coef leading_coef() const { return terms_.front().coef; }
  /// Largest weighted degree (shifted by nothing); -1 for zero.
  int degree() const;
  bool is_homogeneous() const;

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator-() const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  bool operator==(const MultiPoly& o) const;
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  MultiPoly scale(Coef c) const;
  MultiPoly monic() const;
  MultiPoly mul_term(const Monomial& m, Coef c) const;
  MultiPoly pow(int e) const;

  /// Value at a coordinate vector (length must equal the arity).
  Coef evaluate(std::span<const Coef> pt) const;
  MultiPoly derivative(int var) const;
  /// Ring homomorphism x_i -> images[i]; images live in `target`.
  MultiPoly substitute(const std::vector<MultiPoly>& images, const RingPtr& target) const;
  /// Same variables, different order (or identical ring): re-sort terms.
  MultiPoly in_ring(const RingPtr& other) const;
  /// Terms of component c moved to component 0 (module slicing).
  MultiPoly component(int c) const;
  MultiPoly with_component(int c) const;

  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& f);

/// Parses "3*x0^2*x1 - x2 + 7"; coefficients are reduced mod p.
MultiPoly parse_poly(const RingPtr& ring, std::string_view text);

/// Polynomial text file: header line then one polynomial per line.
std::string format_poly_file(const RingPtr& ring, const std::vector<MultiPoly>& polys);
struct PolyFile {
  RingPtr ring;
  std::vector<MultiPoly> polys;
};
PolyFile parse_poly_file(std::string_view text);

/// Moves f into `target`, sending variable i to variable i + offset.
MultiPoly transport(const MultiPoly& f, const RingPtr& target, int offset = 0);

/// Linear form sum c_i x_i.
MultiPoly linear_form(const RingPtr& ring, std::span<const Coef> coeffs);

}  // namespace birat
