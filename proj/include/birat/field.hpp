#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace birat {

/// Raised for arithmetic that has no answer (division by zero, bad modulus).
class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Coef = std::uint32_t;

/// Prime field F_p with canonical representatives in [0, p).
class Field {
 public:
  static constexpr Coef kDefaultPrime = 32003;
  static constexpr Coef kPaperPrime = 10000019;

  explicit Field(Coef p = kDefaultPrime);

  Coef characteristic() const { return p_; }

  Coef reduce(std::int64_t a) const {
    std::int64_t r = a % static_cast<std::int64_t>(p_);
    return static_cast<Coef>(r < 0 ? r + p_ : r);
  }
  Coef add(Coef a, Coef b) const {
    Coef s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coef sub(Coef a, Coef b) const { return a >= b ? a - b : a + p_ - b; }
  Coef neg(Coef a) const { return a == 0 ? 0 : p_ - a; }
  Coef mul(Coef a, Coef b) const {
    return static_cast<Coef>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  Coef inv(Coef a) const;
  Coef div(Coef a, Coef b) const { return mul(a, inv(b)); }
  Coef pow(Coef a, std::uint64_t e) const;

  bool operator==(const Field& o) const { return p_ == o.p_; }

 private:
  Coef p_;
};

/// Inverse of a modulo p; throws MathError when a == 0 mod p.
Coef fp_inv(std::int64_t a, Coef p);

bool is_prime(std::uint64_t n);

}  // namespace birat
