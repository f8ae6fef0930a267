#include "birat/field.hpp"

namespace birat {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field::Field(Coef p) : p_(p) {
  if (p <= 2 || p >= (Coef{1} << 31) || !is_prime(p))
    throw MathError("field modulus must be an odd prime below 2^31, got " +
                    std::to_string(p));
}

Coef fp_inv(std::int64_t a, Coef p) {
  std::int64_t r0 = p, r1 = a % static_cast<std::int64_t>(p);
  if (r1 < 0) r1 += p;
  if (r1 == 0) throw MathError("division by zero in F_" + std::to_string(p));
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (s0 < 0) s0 += p;
  return static_cast<Coef>(s0);
}

Coef Field::inv(Coef a) const { return fp_inv(a, p_); }

Coef Field::pow(Coef a, std::uint64_t e) const {
  Coef r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

}  // namespace birat
