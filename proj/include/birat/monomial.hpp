#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <memory>
#include <string>
#include <vector>

#include "birat/field.hpp"

namespace birat {

inline constexpr int kMaxVars = 28;

/// Exponent vector with cached (weighted) degree and a module component.
/// Ideals use component 0 throughout; module code uses the component to
/// index free-module basis vectors.
struct Monomial {
  std::array<std::uint8_t, kMaxVars> exp{};
  std::uint16_t degree = 0;
  std::uint16_t comp = 0;

  bool operator==(const Monomial& o) const {
    return comp == o.comp && std::memcmp(exp.data(), o.exp.data(), kMaxVars) == 0;
  }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

  bool is_one() const {
    for (auto e : exp)
      if (e) return false;
    return true;
  }

  std::size_t hash() const {
    std::uint64_t w[4];
    std::memcpy(w, exp.data(), kMaxVars);
    w[3] &= 0x00000000ffffffffULL;
    w[3] |= static_cast<std::uint64_t>(comp) << 32;
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto x : w) {
      h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 33));
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Divisibility ignoring the degree field; components must match.
inline bool divides(const Monomial& a, const Monomial& b) {
  if (a.comp != b.comp) return false;
  for (int i = 0; i < kMaxVars; ++i)
    if (a.exp[i] > b.exp[i]) return false;
  return true;
}

inline Monomial mul(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.exp[i] = static_cast<std::uint8_t>(a.exp[i] + b.exp[i]);
  r.degree = static_cast<std::uint16_t>(a.degree + b.degree);
  r.comp = static_cast<std::uint16_t>(a.comp + b.comp);
  return r;
}

/// a / b, assuming b divides a.  The result lives in component 0.
inline Monomial quotient(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.exp[i] = static_cast<std::uint8_t>(a.exp[i] - b.exp[i]);
  r.degree = static_cast<std::uint16_t>(a.degree - b.degree);
  r.comp = 0;
  return r;
}

class MonomialOrder {
 public:
  enum class Kind { Grevlex, Lex, Eliminate, Product };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex); }
  static MonomialOrder lex() { return MonomialOrder(Kind::Lex); }
  /// Elimination order for the first k variables: block degree first, then grevlex.
  static MonomialOrder eliminate(int k) {
    MonomialOrder o(Kind::Eliminate);
    o.block_ = k;
    return o;
  }
  /// Lexicographic product of weighted grevlex orders on consecutive blocks.
  static MonomialOrder product(std::vector<int> block_sizes) {
    MonomialOrder o(Kind::Product);
    o.blocks_ = std::move(block_sizes);
    return o;
  }

  Kind kind() const { return kind_; }
  int eliminated() const { return block_; }
  const std::vector<int>& blocks() const { return blocks_; }
  std::string name() const;

  bool operator==(const MonomialOrder& o) const {
    return kind_ == o.kind_ && block_ == o.block_ && blocks_ == o.blocks_;
  }

 private:
  explicit MonomialOrder(Kind k) : kind_(k) {}
  Kind kind_;
  int block_ = 0;
  std::vector<int> blocks_;
};

/// Polynomial ring F_p[x0..x{n-1}] with positive integer weights and a
/// monomial order.  Shared immutably between polynomials.
class Ring {
 public:
  Ring(Field field, int nvars, MonomialOrder order = MonomialOrder::grevlex(),
       std::vector<int> weights = {});

  const Field& field() const { return field_; }
  int nvars() const { return nvars_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<int>& weights() const { return weights_; }
  bool standard_grading() const { return standard_; }
  int weight(int i) const { return weights_[i]; }

  Monomial monomial(const std::vector<int>& exps, int comp = 0) const;
  Monomial variable(int i) const;
  Monomial one() const { return Monomial{}; }
  int degree_of(const Monomial& m) const;

  /// >0 if a > b, 0 if equal, <0 if a < b.  Components compare first
  /// (position over term, component 0 largest).
  int compare(const Monomial& a, const Monomial& b) const {
    if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
    switch (order_.kind()) {
      case MonomialOrder::Kind::Grevlex:
        return cmp_grevlex(a, b, 0, nvars_);
      case MonomialOrder::Kind::Lex:
        for (int i = 0; i < nvars_; ++i)
          if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i] ? 1 : -1;
        return 0;
      case MonomialOrder::Kind::Eliminate: {
        int sa = 0, sb = 0;
        for (int i = 0; i < order_.eliminated(); ++i) {
          sa += weights_[i] * a.exp[i];
          sb += weights_[i] * b.exp[i];
        }
        if (sa != sb) return sa > sb ? 1 : -1;
        return cmp_grevlex(a, b, 0, nvars_);
      }
      case MonomialOrder::Kind::Product: {
        int start = 0;
        for (int len : order_.blocks()) {
          int c = cmp_grevlex(a, b, start, start + len);
          if (c) return c;
          start += len;
        }
        return 0;
      }
    }
    return 0;
  }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  /// Same variables and field with a different order.
  std::shared_ptr<const Ring> with_order(MonomialOrder order) const;

  std::string var_name(int i) const { return "x" + std::to_string(i); }
  std::string header() const;

  bool operator==(const Ring& o) const {
    return field_ == o.field_ && nvars_ == o.nvars_ && order_ == o.order_ && weights_ == o.weights_;
  }
  bool operator!=(const Ring& o) const { return !(*this == o); }

 private:
  int cmp_grevlex(const Monomial& a, const Monomial& b, int lo, int hi) const {
    int da = 0, db = 0;
    if (lo == 0 && hi == nvars_) {
      da = a.degree;
      db = b.degree;
    } else {
      for (int i = lo; i < hi; ++i) {
        da += weights_[i] * a.exp[i];
        db += weights_[i] * b.exp[i];
      }
    }
    if (da != db) return da > db ? 1 : -1;
    for (int i = hi - 1; i >= lo; --i)
      if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? 1 : -1;
    return 0;
  }

  Field field_;
  int nvars_;
  MonomialOrder order_;
  std::vector<int> weights_;
  bool standard_ = true;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(Coef p, int nvars, MonomialOrder order = MonomialOrder::grevlex(),
                  std::vector<int> weights = {});

/// All exponents of total degree d in n variables, in descending grevlex order.
std::vector<Monomial> monomials_of_degree(int d, int n);
/// Weighted variant: all monomials of weighted degree d in the ring.
std::vector<Monomial> monomials_of_degree(const Ring& ring, int d);

std::uint64_t binomial(int n, int k);

}  // namespace birat
