#include "birat/monomial.hpp"

#include <algorithm>
#include <functional>

namespace birat {

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::Grevlex:
      return "grevlex";
    case Kind::Lex:
      return "lex";
    case Kind::Eliminate:
      return "eliminate(" + std::to_string(block_) + ")";
    case Kind::Product: {
      std::string s = "product(";
      for (std::size_t i = 0; i < blocks_.size(); ++i) s += (i ? "," : "") + std::to_string(blocks_[i]);
      return s + ")";
    }
  }
  return "?";
}

Ring::Ring(Field field, int nvars, MonomialOrder order, std::vector<int> weights)
    : field_(field), nvars_(nvars), order_(std::move(order)), weights_(std::move(weights)) {
  if (nvars < 0 || nvars > kMaxVars)
    throw std::invalid_argument("ring arity out of range: " + std::to_string(nvars));
  if (weights_.empty()) weights_.assign(nvars, 1);
  if (static_cast<int>(weights_.size()) != nvars)
    throw std::invalid_argument("weight vector length does not match arity");
  for (int w : weights_) {
    if (w <= 0) throw std::invalid_argument("weights must be positive");
    if (w != 1) standard_ = false;
  }
  if (order_.kind() == MonomialOrder::Kind::Eliminate &&
      (order_.eliminated() < 0 || order_.eliminated() > nvars))
    throw std::invalid_argument("elimination block larger than the ring");
  if (order_.kind() == MonomialOrder::Kind::Product) {
    int total = 0;
    for (int b : order_.blocks()) total += b;
    if (total != nvars) throw std::invalid_argument("product order blocks must cover all variables");
  }
}

Monomial Ring::monomial(const std::vector<int>& exps, int comp) const {
  if (static_cast<int>(exps.size()) != nvars_)
    throw std::invalid_argument("exponent vector has wrong length");
  Monomial m;
  int d = 0;
  for (int i = 0; i < nvars_; ++i) {
    if (exps[i] < 0 || exps[i] > 255) throw std::invalid_argument("exponent out of range");
    m.exp[i] = static_cast<std::uint8_t>(exps[i]);
    d += weights_[i] * exps[i];
  }
  m.degree = static_cast<std::uint16_t>(d);
  m.comp = static_cast<std::uint16_t>(comp);
  return m;
}

Monomial Ring::variable(int i) const {
  Monomial m;
  m.exp[i] = 1;
  m.degree = static_cast<std::uint16_t>(weights_[i]);
  return m;
}

int Ring::degree_of(const Monomial& m) const {
  int d = 0;
  for (int i = 0; i < nvars_; ++i) d += weights_[i] * m.exp[i];
  return d;
}

std::shared_ptr<const Ring> Ring::with_order(MonomialOrder order) const {
  return std::make_shared<const Ring>(field_, nvars_, std::move(order), weights_);
}

std::string Ring::header() const {
  std::string s = "ring GF(" + std::to_string(field_.characteristic()) + ")[x0..x" +
                  std::to_string(nvars_ - 1) + "] order " + order_.name();
  if (!standard_) {
    s += " weights";
    for (int w : weights_) s += " " + std::to_string(w);
  }
  return s;
}

RingPtr make_ring(Coef p, int nvars, MonomialOrder order, std::vector<int> weights) {
  return std::make_shared<const Ring>(Field(p), nvars, std::move(order), std::move(weights));
}

std::vector<Monomial> monomials_of_degree(const Ring& ring, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  const int n = ring.nvars();
  Monomial cur;
  std::function<void(int, int)> rec = [&](int var, int left) {
    if (var == n - 1) {
      if (left % ring.weight(var) != 0) return;
      cur.exp[var] = static_cast<std::uint8_t>(left / ring.weight(var));
      cur.degree = static_cast<std::uint16_t>(d);
      out.push_back(cur);
      cur.exp[var] = 0;
      return;
    }
    for (int e = left / ring.weight(var); e >= 0; --e) {
      cur.exp[var] = static_cast<std::uint8_t>(e);
      rec(var + 1, left - e * ring.weight(var));
    }
    cur.exp[var] = 0;
  };
  if (n == 0) {
    if (d == 0) out.push_back(cur);
    return out;
  }
  rec(0, d);
  std::sort(out.begin(), out.end(),
            [&](const Monomial& a, const Monomial& b) { return ring.compare(a, b) > 0; });
  return out;
}

std::vector<Monomial> monomials_of_degree(int d, int n) {
  Ring r(Field(), n);
  return monomials_of_degree(r, d);
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace birat
