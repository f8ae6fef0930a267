#include "birat/poly.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace birat {

namespace {

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (a != b && (!a || !b || *a != *b)) throw std::invalid_argument("ring mismatch");
}

}  // namespace

MultiPoly MultiPoly::constant(RingPtr ring, Coef c) {
  MultiPoly f(std::move(ring));
  c = f.field().reduce(c);
  if (c) f.terms_.push_back({Monomial{}, c});
  return f;
}

MultiPoly MultiPoly::variable(RingPtr ring, int i) {
  MultiPoly f(ring);
  f.terms_.push_back({ring->variable(i), 1});
  return f;
}

MultiPoly MultiPoly::monomial(RingPtr ring, const Monomial& m, Coef c) {
  MultiPoly f(std::move(ring));
  c = f.field().reduce(c);
  if (c) f.terms_.push_back({m, c});
  return f;
}

MultiPoly MultiPoly::from_terms(RingPtr ring, std::vector<Term> terms) {
  MultiPoly f(std::move(ring));
  const Ring& R = *f.ring_;
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return R.compare(a.mono, b.mono) > 0; });
  for (auto& t : terms) {
    t.coef = R.field().reduce(t.coef);
    if (!f.terms_.empty() && f.terms_.back().mono == t.mono) {
      f.terms_.back().coef = R.field().add(f.terms_.back().coef, t.coef);
      if (f.terms_.back().coef == 0) f.terms_.pop_back();
    } else if (t.coef) {
      f.terms_.push_back(t);
    }
  }
  return f;
}

MultiPoly MultiPoly::from_sorted_terms(RingPtr ring, std::vector<Term> terms) {
  MultiPoly f(std::move(ring));
  f.terms_ = std::move(terms);
  return f;
}

int MultiPoly::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max<int>(d, t.mono.degree);
  return d;
}

bool MultiPoly::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.mono.degree != terms_.front().mono.degree) return false;
  return true;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  require_same_ring(ring_, o.ring_);
  const Ring& R = *ring_;
  const Field& F = R.field();
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = R.compare(terms_[i].mono, o.terms_[j].mono);
    if (c > 0) {
      out.push_back(terms_[i++]);
    } else if (c < 0) {
      out.push_back(o.terms_[j++]);
    } else {
      Coef s = F.add(terms_[i].coef, o.terms_[j].coef);
      if (s) out.push_back({terms_[i].mono, s});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
  return from_sorted_terms(ring_, std::move(out));
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coef = field().neg(t.coef);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  require_same_ring(ring_, o.ring_);
  if (is_zero() || o.is_zero()) return MultiPoly(ring_);
  const Field& F = field();
  const std::uint64_t p = F.characteristic();
  const MultiPoly& a = size() <= o.size() ? *this : o;
  const MultiPoly& b = size() <= o.size() ? o : *this;
  if (a.size() == 1) return b.mul_term(a.terms_[0].mono, a.terms_[0].coef);
  std::unordered_map<Monomial, std::uint64_t, MonomialHash> acc;
  acc.reserve(a.size() * b.size() / 2 + 16);
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) {
      auto& v = acc[mul(s.mono, t.mono)];
      v = (v + static_cast<std::uint64_t>(s.coef) * t.coef) % p;
    }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (const auto& [m, c] : acc)
    if (c) out.push_back({m, static_cast<Coef>(c)});
  const Ring& R = *ring_;
  std::sort(out.begin(), out.end(),
            [&](const Term& x, const Term& y) { return R.compare(x.mono, y.mono) > 0; });
  return from_sorted_terms(ring_, std::move(out));
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].coef != o.terms_[i].coef || terms_[i].mono != o.terms_[i].mono) return false;
  return true;
}

MultiPoly MultiPoly::scale(Coef c) const {
  c = field().reduce(c);
  if (c == 0) return MultiPoly(ring_);
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coef = field().mul(t.coef, c);
  return r;
}

MultiPoly MultiPoly::monic() const {
  if (is_zero()) return *this;
  return scale(field().inv(leading_coef()));
}

MultiPoly MultiPoly::mul_term(const Monomial& m, Coef c) const {
  c = field().reduce(c);
  if (c == 0) return MultiPoly(ring_);
  MultiPoly r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({mul(t.mono, m), field().mul(t.coef, c)});
  return r;
}

MultiPoly MultiPoly::pow(int e) const {
  MultiPoly r = constant(ring_, 1);
  MultiPoly b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

Coef MultiPoly::evaluate(std::span<const Coef> pt) const {
  const int n = ring_->nvars();
  if (static_cast<int>(pt.size()) != n) throw std::invalid_argument("point has wrong number of coordinates");
  const Field& F = field();
  // powers[i][k] = pt[i]^k, grown on demand
  std::vector<std::vector<Coef>> powers(n, std::vector<Coef>{1});
  std::uint64_t acc = 0;
  const std::uint64_t p = F.characteristic();
  for (const auto& t : terms_) {
    std::uint64_t v = t.coef;
    for (int i = 0; i < n; ++i) {
      int e = t.mono.exp[i];
      if (!e) continue;
      auto& pw = powers[i];
      while (static_cast<int>(pw.size()) <= e) pw.push_back(F.mul(pw.back(), pt[i]));
      v = v * pw[e] % p;
    }
    acc += v;
    if (acc >= (1ULL << 62)) acc %= p;
  }
  return static_cast<Coef>(acc % p);
}

MultiPoly MultiPoly::derivative(int var) const {
  std::vector<Term> out;
  const Field& F = field();
  for (const auto& t : terms_) {
    int e = t.mono.exp[var];
    if (!e) continue;
    Coef c = F.mul(t.coef, F.reduce(e));
    if (!c) continue;
    Monomial m = t.mono;
    m.exp[var] = static_cast<std::uint8_t>(e - 1);
    m.degree = static_cast<std::uint16_t>(m.degree - ring_->weight(var));
    out.push_back({m, c});
  }
  // removing one variable keeps the relative order of grevlex/lex terms except in
  // weighted or block orders; re-sort to be safe
  return from_terms(ring_, std::move(out));
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images, const RingPtr& target) const {
  const int n = ring_->nvars();
  if (static_cast<int>(images.size()) != n) throw std::invalid_argument("substitution needs one image per variable");
  // Horner-style recursion on the variables; terms are grouped by exponent of
  // the current variable.
  std::vector<std::vector<MultiPoly>> powers(n);
  auto power = [&](int i, int e) -> const MultiPoly& {
    auto& pw = powers[i];
    if (pw.empty()) pw.push_back(MultiPoly::constant(target, 1));
    while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * images[i]);
    return pw[e];
  };
  std::function<MultiPoly(std::vector<const Term*>&, int)> rec = [&](std::vector<const Term*>& ts,
                                                                    int var) -> MultiPoly {
    if (ts.empty()) return MultiPoly(target);
    if (var == n) {
      std::uint64_t c = 0;
      for (auto* t : ts) c += t->coef;
      return MultiPoly::constant(target, static_cast<Coef>(c % target->field().characteristic()));
    }
    std::map<int, std::vector<const Term*>> groups;
    for (auto* t : ts) groups[t->mono.exp[var]].push_back(t);
    MultiPoly acc(target);
    for (auto& [e, g] : groups) {
      MultiPoly inner = rec(g, var + 1);
      if (inner.is_zero()) continue;
      acc += e == 0 ? inner : inner * power(var, e);
    }
    return acc;
  };
  std::vector<const Term*> all;
  all.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (t.mono.comp != 0) throw std::invalid_argument("substitute applies to ring elements only");
    all.push_back(&t);
  }
  return rec(all, 0);
}

MultiPoly MultiPoly::in_ring(const RingPtr& other) const {
  if (other->nvars() != ring_->nvars()) throw std::invalid_argument("in_ring: arity mismatch");
  std::vector<Term> ts = terms_;
  if (other->weights() != ring_->weights())
    for (auto& t : ts) t.mono.degree = static_cast<std::uint16_t>(other->degree_of(t.mono));
  if (other->field().characteristic() != ring_->field().characteristic())
    throw std::invalid_argument("in_ring: field mismatch");
  return from_terms(other, std::move(ts));
}

MultiPoly MultiPoly::component(int c) const {
  std::vector<Term> out;
  for (const auto& t : terms_)
    if (t.mono.comp == c) {
      Term u = t;
      u.mono.comp = 0;
      out.push_back(u);
    }
  return from_sorted_terms(ring_, std::move(out));
}

MultiPoly MultiPoly::with_component(int c) const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.mono.comp = static_cast<std::uint16_t>(c);
  return from_terms(ring_, std::move(out));
}

std::string MultiPoly::to_string() const {
  if (is_zero()) return "0";
  const Coef p = field().characteristic();
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    bool negative = t.coef > p / 2;
    Coef mag = negative ? p - t.coef : t.coef;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool one = t.mono.is_one();
    bool wrote = false;
    if (mag != 1 || one) {
      os << mag;
      wrote = true;
    }
    for (int i = 0; i < ring_->nvars(); ++i) {
      int e = t.mono.exp[i];
      if (!e) continue;
      if (wrote) os << "*";
      os << "x" << i;
      if (e > 1) os << "^" << e;
      wrote = true;
    }
    if (t.mono.comp) os << (wrote ? "*" : "") << "e" << t.mono.comp;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& f) { return os << f.to_string(); }

namespace {

struct Parser {
  const RingPtr& ring;
  std::string_view s;
  std::size_t pos = 0;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos) + ": " + what);
  }
  bool peek(char c) {
    skip();
    return pos < s.size() && s[pos] == c;
  }
  std::uint64_t number() {
    skip();
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) fail("expected integer");
    std::uint64_t v = 0;
    const std::uint64_t p = ring->field().characteristic();
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = (v * 10 + static_cast<std::uint64_t>(s[pos] - '0')) % p;
      ++pos;
    }
    return v;
  }
  int small_number() {
    skip();
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) fail("expected integer");
    long v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos] - '0');
      if (v > 100000) fail("exponent too large");
      ++pos;
    }
    return static_cast<int>(v);
  }

  Term term() {
    const Field& F = ring->field();
    Term t{Monomial{}, 1};
    std::vector<int> exps(ring->nvars(), 0);
    bool any = false;
    while (true) {
      skip();
      if (pos >= s.size()) break;
      if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
        t.coef = F.mul(t.coef, static_cast<Coef>(number()));
      } else if (s[pos] == 'x') {
        ++pos;
        int v = small_number();
        if (v >= ring->nvars()) fail("variable index out of range");
        int e = 1;
        if (peek('^')) {
          ++pos;
          e = small_number();
        }
        exps[v] += e;
      } else {
        fail(std::string("unexpected character '") + s[pos] + "'");
      }
      any = true;
      if (peek('*')) {
        ++pos;
        continue;
      }
      break;
    }
    if (!any) fail("empty term");
    t.mono = ring->monomial(exps);
    return t;
  }

  MultiPoly poly() {
    std::vector<Term> terms;
    bool negate = false;
    skip();
    if (peek('-')) {
      negate = true;
      ++pos;
    } else if (peek('+')) {
      ++pos;
    }
    while (true) {
      Term t = term();
      if (negate) t.coef = ring->field().neg(t.coef);
      terms.push_back(t);
      skip();
      if (pos >= s.size()) break;
      if (s[pos] == '+') {
        negate = false;
      } else if (s[pos] == '-') {
        negate = true;
      } else {
        fail("expected + or -");
      }
      ++pos;
    }
    return MultiPoly::from_terms(ring, std::move(terms));
  }
};

}  // namespace

MultiPoly parse_poly(const RingPtr& ring, std::string_view text) {
  Parser p{ring, text};
  p.skip();
  if (p.pos < text.size() && text.substr(p.pos) == "0") return MultiPoly(ring);
  return p.poly();
}

std::string format_poly_file(const RingPtr& ring, const std::vector<MultiPoly>& polys) {
  std::string out = ring->header() + "\n";
  for (const auto& f : polys) out += f.to_string() + "\n";
  return out;
}

PolyFile parse_poly_file(std::string_view text) {
  std::size_t nl = text.find('\n');
  std::string header(text.substr(0, nl));
  std::istringstream hs(header);
  std::string word, spec, order_word, order_name;
  hs >> word >> spec >> order_word >> order_name;
  if (word != "ring" || order_word != "order") throw std::invalid_argument("bad polynomial file header: " + header);
  // spec = GF(p)[x0..x{n-1}]
  std::size_t lp = spec.find('('), rp = spec.find(')'), dots = spec.find(".."), rb = spec.find(']');
  if (spec.rfind("GF(", 0) != 0 || rp == std::string::npos || dots == std::string::npos || rb == std::string::npos)
    throw std::invalid_argument("bad ring spec: " + spec);
  Coef p = static_cast<Coef>(std::stoul(spec.substr(lp + 1, rp - lp - 1)));
  int last = std::stoi(spec.substr(dots + 3, rb - dots - 3));
  MonomialOrder order = MonomialOrder::grevlex();
  if (order_name == "lex") {
    order = MonomialOrder::lex();
  } else if (order_name.rfind("eliminate(", 0) == 0) {
    order = MonomialOrder::eliminate(std::stoi(order_name.substr(10)));
  } else if (order_name != "grevlex") {
    throw std::invalid_argument("unsupported order in header: " + order_name);
  }
  std::vector<int> weights;
  if (hs >> word && word == "weights") {
    int w;
    while (hs >> w) weights.push_back(w);
  }
  PolyFile out{make_ring(p, last + 1, order, weights), {}};
  std::size_t start = nl == std::string_view::npos ? text.size() : nl + 1;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (line.find_first_not_of(" \t\r") != std::string_view::npos) out.polys.push_back(parse_poly(out.ring, line));
    start = end + 1;
  }
  return out;
}

MultiPoly linear_form(const RingPtr& ring, std::span<const Coef> coeffs) {
  std::vector<Term> ts;
  for (int i = 0; i < ring->nvars(); ++i)
    if (coeffs[i]) ts.push_back({ring->variable(i), coeffs[i]});
  return MultiPoly::from_terms(ring, std::move(ts));
}

MultiPoly transport(const MultiPoly& f, const RingPtr& target, int offset) {
  std::vector<Term> ts;
  ts.reserve(f.size());
  const int n = f.ring()->nvars();
  for (const auto& t : f.terms()) {
    Monomial m;
    m.comp = t.mono.comp;
    for (int i = 0; i < n; ++i) {
      if (!t.mono.exp[i]) continue;
      int j = i + offset;
      if (j < 0 || j >= target->nvars()) throw std::invalid_argument("transport: variable out of range");
      m.exp[j] = t.mono.exp[i];
    }
    m.degree = static_cast<std::uint16_t>(target->degree_of(m));
    ts.push_back({m, t.coef});
  }
  return MultiPoly::from_terms(target, std::move(ts));
}


}  // namespace birat
