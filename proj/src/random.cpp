#include "birat/random.hpp"

#include <algorithm>
#include <stdexcept>

#include "birat/linalg.hpp"

namespace birat {

Coef random_coef(Rng& rng, const Field& f) { return static_cast<Coef>(rng() % f.characteristic()); }

Coef random_nonzero(Rng& rng, const Field& f) {
  return static_cast<Coef>(1 + rng() % (f.characteristic() - 1));
}

std::vector<Coef> random_point(Rng& rng, const Field& f, int n) {
  std::vector<Coef> v(static_cast<std::size_t>(n));
  do {
    for (auto& c : v) c = random_coef(rng, f);
  } while (std::all_of(v.begin(), v.end(), [](Coef c) { return c == 0; }));
  return v;
}

MultiPoly random_linear_form(Rng& rng, const RingPtr& ring) {
  auto pt = random_point(rng, ring->field(), ring->nvars());
  return linear_form(ring, pt);
}

MultiPoly random_combination(Rng& rng, const std::vector<MultiPoly>& polys) {
  if (polys.empty()) throw std::invalid_argument("random_combination of nothing");
  MultiPoly out(polys.front().ring());
  for (const auto& f : polys) out += f.scale(random_coef(rng, f.field()));
  return out;
}

void random_invertible(Rng& rng, const Field& f, int n, std::vector<Coef>& a, std::vector<Coef>& a_inv) {
  const auto N = static_cast<std::size_t>(n);
  while (true) {
    Matrix m(N, 2 * N);
    a.assign(N * N, 0);
    for (std::size_t i = 0; i < N; ++i) {
      for (std::size_t j = 0; j < N; ++j) m.at(i, j) = a[i * N + j] = random_coef(rng, f);
      m.at(i, N + i) = 1;
    }
    auto piv = row_reduce(m, f);
    if (piv.size() < N || piv[N - 1] != N - 1) continue;
    a_inv.assign(N * N, 0);
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) a_inv[i * N + j] = m.at(i, N + j);
    return;
  }
}

}  // namespace birat
