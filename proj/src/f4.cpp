#include "birat/f4.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "birat/cancel.hpp"

namespace birat {

namespace {

// Open-addressing table of distinct monomials with divisibility masks.
class MonoTable {
 public:
  explicit MonoTable(const Ring& ring) : nvars_(ring.nvars()) {
    slots_.assign(1 << 12, 0);
    int per = nvars_ > 0 ? std::max(1, 64 / nvars_) : 1;
    bits_per_var_ = std::min(per, 16);
  }

  std::uint32_t insert(const Monomial& m) {
    if ((mons_.size() + 1) * 2 > slots_.size()) grow();
    std::uint32_t h = static_cast<std::uint32_t>(m.hash());
    std::size_t mask = slots_.size() - 1;
    std::size_t s = h & mask;
    while (true) {
      std::uint32_t v = slots_[s];
      if (v == 0) break;
      if (hashes_[v - 1] == h && mons_[v - 1] == m) return v - 1;
      s = (s + 1) & mask;
    }
    std::uint32_t idx = static_cast<std::uint32_t>(mons_.size());
    mons_.push_back(m);
    hashes_.push_back(h);
    divmasks_.push_back(compute_mask(m));
    slots_[s] = idx + 1;
    return idx;
  }

  const Monomial& operator[](std::uint32_t i) const { return mons_[i]; }
  std::uint64_t divmask(std::uint32_t i) const { return divmasks_[i]; }
  std::size_t size() const { return mons_.size(); }

  // a divides b (table indices)
  bool divides(std::uint32_t a, std::uint32_t b) const {
    if (divmasks_[a] & ~divmasks_[b]) return false;
    return birat::divides(mons_[a], mons_[b]);
  }

 private:
  std::uint64_t compute_mask(const Monomial& m) const {
    std::uint64_t mask = 0;
    int bit = 0;
    for (int i = 0; i < nvars_ && bit < 64; ++i)
      for (int j = 0; j < bits_per_var_ && bit < 64; ++j, ++bit)
        if (m.exp[i] > j) mask |= 1ULL << bit;
    return mask;
  }

  void grow() {
    std::vector<std::uint32_t> fresh(slots_.size() * 2, 0);
    std::size_t mask = fresh.size() - 1;
    for (std::uint32_t i = 0; i < mons_.size(); ++i) {
      std::size_t s = hashes_[i] & mask;
      while (fresh[s]) s = (s + 1) & mask;
      fresh[s] = i + 1;
    }
    slots_.swap(fresh);
  }

  int nvars_;
  int bits_per_var_;
  std::vector<Monomial> mons_;
  std::vector<std::uint32_t> hashes_;
  std::vector<std::uint64_t> divmasks_;
  std::vector<std::uint32_t> slots_;
};

struct EPoly {
  std::vector<std::uint32_t> mon;  // table indices, strictly decreasing in the order
  std::vector<Coef> coef;
  int deg = 0;
};

struct Pair {
  std::uint32_t i, j;
  std::uint32_t lcm;
  int deg;
};

struct SparseRow {
  std::vector<std::uint32_t> col;
  std::vector<Coef> val;
};

Monomial lcm_of(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.exp[i] = std::max(a.exp[i], b.exp[i]);
  r.comp = a.comp;
  return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < kMaxVars; ++i)
    if (a.exp[i] && b.exp[i]) return false;
  return true;
}

}  // namespace

struct F4::Impl {
  RingPtr ring;
  const Ring& R;
  const Field& F;
  std::int64_t p;
  std::int64_t p2;
  std::vector<int> shifts;
  bool module = false;
  MonoTable tab;

  std::vector<EPoly> basis;
  std::vector<char> redundant;
  std::vector<std::uint32_t> active;
  std::vector<Pair> pairs;
  std::vector<EPoly> inputs;

  // per-monomial reducer cache: element index (or -1) and basis size at check time
  std::vector<std::int32_t> div_cache;
  std::vector<std::uint32_t> div_checked;

  explicit Impl(RingPtr r, std::vector<int> s)
      : ring(std::move(r)), R(*ring), F(R.field()), tab(R) {
    p = F.characteristic();
    p2 = p * p;
    shifts = std::move(s);
    module = !shifts.empty();
  }

  int shift(int comp) const {
    if (!module) return 0;
    return shifts.at(static_cast<std::size_t>(comp));
  }
  int row_degree(std::uint32_t m) const { return tab[m].degree + shift(tab[m].comp); }

  Monomial fix_degree(Monomial m) const {
    m.degree = static_cast<std::uint16_t>(R.degree_of(m));
    return m;
  }

  EPoly to_epoly(const MultiPoly& f) {
    EPoly e;
    e.mon.reserve(f.size());
    e.coef.reserve(f.size());
    for (const auto& t : f.terms()) {
      if (!module && t.mono.comp != 0) throw std::invalid_argument("module element given to ideal engine");
      if (module && t.mono.comp >= shifts.size()) throw std::invalid_argument("component index out of range");
      e.mon.push_back(tab.insert(t.mono));
      e.coef.push_back(t.coef);
    }
    if (!e.mon.empty()) {
      e.deg = row_degree(e.mon[0]);
      for (auto m : e.mon)
        if (row_degree(m) != e.deg) throw std::invalid_argument("F4 input must be homogeneous");
    }
    return e;
  }

  MultiPoly to_multipoly(const EPoly& e) const {
    std::vector<Term> ts;
    ts.reserve(e.mon.size());
    for (std::size_t k = 0; k < e.mon.size(); ++k) ts.push_back({tab[e.mon[k]], e.coef[k]});
    return MultiPoly::from_sorted_terms(ring, std::move(ts));
  }

  void make_monic(EPoly& e) const {
    if (e.coef.empty() || e.coef[0] == 1) return;
    Coef inv = F.inv(e.coef[0]);
    for (auto& c : e.coef) c = F.mul(c, inv);
  }

  // --- reducer lookup ---
  std::int32_t find_reducer(std::uint32_t m) {
    if (div_cache.size() < tab.size()) {
      div_cache.resize(tab.size(), -1);
      div_checked.resize(tab.size(), 0);
    }
    if (div_cache[m] >= 0) return div_cache[m];
    std::uint32_t start = div_checked[m];
    std::uint64_t mmask = tab.divmask(m);
    const Monomial& mono = tab[m];
    for (std::uint32_t k = start; k < basis.size(); ++k) {
      if (redundant[k]) continue;
      std::uint32_t lm = basis[k].mon[0];
      if (tab.divmask(lm) & ~mmask) continue;
      if (!birat::divides(tab[lm], mono)) continue;
      div_cache[m] = static_cast<std::int32_t>(k);
      return static_cast<std::int32_t>(k);
    }
    div_checked[m] = static_cast<std::uint32_t>(basis.size());
    return -1;
  }

  // --- Gebauer–Möller update ---
  void insert_element(EPoly&& h) {
    const std::uint32_t hidx = static_cast<std::uint32_t>(basis.size());
    const std::uint32_t hlm = h.mon[0];
    basis.push_back(std::move(h));
    redundant.push_back(0);
    const Monomial lh = tab[hlm];

    struct Cand {
      std::uint32_t g;
      std::uint32_t lcm;
      int deg;
      bool coprime;
      bool dead;
    };
    std::vector<Cand> cands;
    cands.reserve(active.size());
    for (std::uint32_t g : active) {
      const Monomial lg = tab[basis[g].mon[0]];
      if (lg.comp != lh.comp) continue;
      Monomial l = fix_degree(lcm_of(lh, lg));
      std::uint32_t li = tab.insert(l);
      cands.push_back({g, li, row_degree(li), !module && coprime(lh, lg), false});
    }
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) { return a.deg < b.deg; });
    std::vector<std::size_t> kept;
    for (std::size_t a = 0; a < cands.size(); ++a) {
      bool drop = false;
      for (std::size_t k : kept) {
        Cand& q = cands[k];
        if (q.deg > cands[a].deg) break;
        if (q.lcm == cands[a].lcm) {
          if (cands[a].coprime) q.coprime = true;
          drop = true;
          break;
        }
        if (tab.divides(q.lcm, cands[a].lcm)) {
          drop = true;
          break;
        }
      }
      if (!drop) {
        // keep `kept` sorted by degree for the early break above
        kept.push_back(a);
      }
    }
    // old pairs: Buchberger's chain criterion with the new leading monomial
    std::uint64_t hmask = tab.divmask(hlm);
    std::size_t w = 0;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      Pair& pr = pairs[k];
      bool remove = false;
      const Monomial& L = tab[pr.lcm];
      if (L.comp == lh.comp && !(hmask & ~tab.divmask(pr.lcm)) && birat::divides(lh, L)) {
        Monomial l1 = fix_degree(lcm_of(tab[basis[pr.i].mon[0]], lh));
        Monomial l2 = fix_degree(lcm_of(tab[basis[pr.j].mon[0]], lh));
        if (l1 != L && l2 != L) remove = true;
      }
      if (!remove) pairs[w++] = pr;
    }
    pairs.resize(w);
    for (std::size_t k : kept) {
      const Cand& c = cands[k];
      if (c.coprime) continue;
      pairs.push_back({c.g, hidx, c.lcm, c.deg});
    }
    // elements whose leading monomial is now divisible become redundant
    std::size_t aw = 0;
    for (std::uint32_t g : active) {
      if (tab.divides(hlm, basis[g].mon[0])) {
        redundant[g] = 1;
      } else {
        active[aw++] = g;
      }
    }
    active.resize(aw);
    active.push_back(hidx);
  }

  // --- matrix machinery shared by F4 steps and normal forms ---
  struct RowSpec {
    std::int32_t elem;  // basis element, or -1 for explicit polynomial
    Monomial mult;
    const EPoly* explicit_poly;
    std::vector<std::uint32_t> mons;  // table indices of the row terms
  };

  std::vector<std::uint32_t> multiply_mons(const EPoly& e, const Monomial& mult) {
    std::vector<std::uint32_t> out(e.mon.size());
    if (mult.is_one()) {
      std::copy(e.mon.begin(), e.mon.end(), out.begin());
      return out;
    }
    for (std::size_t k = 0; k < e.mon.size(); ++k) out[k] = tab.insert(mul(tab[e.mon[k]], mult));
    return out;
  }

  // Builds reducer rows for every monomial reachable from `rows` (symbolic
  // preprocessing), sorts columns and fully reduces the non-pivot rows.
  // Returns reduced rows in column-index form together with the column map.
  struct Reduced {
    std::vector<std::uint32_t> col_mons;
    std::vector<SparseRow> rows;  // one per input row (possibly empty)
  };

  Reduced reduce_rows(std::vector<RowSpec>& pivots_in, std::vector<RowSpec>& todo, bool interreduce) {
    // column discovery
    std::vector<std::uint32_t> seen_list;
    std::vector<char> seen;
    auto mark = [&](std::uint32_t m) {
      if (seen.size() <= m) seen.resize(std::max<std::size_t>(tab.size(), m + 1) + 1024, 0);
      if (!seen[m]) {
        seen[m] = 1;
        seen_list.push_back(m);
      }
    };
    std::vector<std::int32_t> pivot_row_of;  // by table index, into `pivots`
    auto set_pivot = [&](std::uint32_t m, std::int32_t r) {
      if (pivot_row_of.size() <= m) pivot_row_of.resize(std::max<std::size_t>(tab.size(), m + 1) + 1024, -1);
      pivot_row_of[m] = r;
    };
    auto pivot_of = [&](std::uint32_t m) -> std::int32_t {
      return m < pivot_row_of.size() ? pivot_row_of[m] : -1;
    };

    std::vector<RowSpec>& pivots = pivots_in;
    for (std::size_t r = 0; r < pivots.size(); ++r) set_pivot(pivots[r].mons[0], static_cast<std::int32_t>(r));
    for (auto& rs : pivots)
      for (auto m : rs.mons) mark(m);
    for (auto& rs : todo)
      for (auto m : rs.mons) mark(m);
    for (std::size_t k = 0; k < seen_list.size(); ++k) {
      std::uint32_t m = seen_list[k];
      if (pivot_of(m) >= 0) continue;
      std::int32_t g = find_reducer(m);
      if (g < 0) continue;
      RowSpec rs{g, quotient(tab[m], tab[basis[g].mon[0]]), nullptr, {}};
      rs.mult.degree = static_cast<std::uint16_t>(R.degree_of(rs.mult));
      rs.mons = multiply_mons(basis[g], rs.mult);
      set_pivot(m, static_cast<std::int32_t>(pivots.size()));
      for (auto mm : rs.mons) mark(mm);
      pivots.push_back(std::move(rs));
    }
    check_deadline();

    // sort columns descending
    std::vector<std::uint32_t> cols = seen_list;
    std::sort(cols.begin(), cols.end(),
              [&](std::uint32_t a, std::uint32_t b) { return R.compare(tab[a], tab[b]) > 0; });
    std::vector<std::uint32_t> colidx(tab.size(), 0);
    for (std::size_t c = 0; c < cols.size(); ++c) colidx[cols[c]] = static_cast<std::uint32_t>(c);
    const std::size_t ncols = cols.size();

    // pivot rows in column form
    std::vector<SparseRow> prow(pivots.size());
    std::vector<std::int32_t> pivot_at(ncols, -1);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      const RowSpec& rs = pivots[r];
      const EPoly& src = rs.elem >= 0 ? basis[rs.elem] : *rs.explicit_poly;
      SparseRow& sr = prow[r];
      sr.col.resize(rs.mons.size());
      for (std::size_t k = 0; k < rs.mons.size(); ++k) sr.col[k] = colidx[rs.mons[k]];
      sr.val = src.coef;
      if (sr.val[0] != 1) {
        Coef inv = F.inv(sr.val[0]);
        for (auto& v : sr.val) v = F.mul(v, inv);
      }
      pivot_at[sr.col[0]] = static_cast<std::int32_t>(r);
    }
    stats_cols = std::max(stats_cols, ncols);
    stats_rows = std::max(stats_rows, pivots.size() + todo.size());

    Reduced out;
    out.col_mons = std::move(cols);
    out.rows.resize(todo.size());
    std::vector<std::int64_t> buf(ncols, 0);
    std::vector<SparseRow> fresh;  // new pivots created from reduced rows
    fresh.reserve(todo.size());
    std::size_t done = 0;
    for (std::size_t t = 0; t < todo.size(); ++t) {
      const RowSpec& rs = todo[t];
      const EPoly& src = rs.elem >= 0 ? basis[rs.elem] : *rs.explicit_poly;
      std::size_t first = ncols;
      for (std::size_t k = 0; k < rs.mons.size(); ++k) {
        std::uint32_t c = colidx[rs.mons[k]];
        buf[c] = src.coef[k];
        first = std::min<std::size_t>(first, c);
      }
      for (std::size_t c = first; c < ncols; ++c) {
        std::int64_t x = buf[c];
        if (x == 0) continue;
        x %= p;
        if (x == 0) {
          buf[c] = 0;
          continue;
        }
        std::int32_t pr = pivot_at[c];
        if (pr < 0) {
          buf[c] = x;
          continue;
        }
        const SparseRow& piv = pr < static_cast<std::int32_t>(prow.size())
                                   ? prow[pr]
                                   : fresh[static_cast<std::size_t>(pr) - prow.size()];
        buf[c] = 0;
        const std::uint32_t* pc = piv.col.data();
        const Coef* pv = piv.val.data();
        const std::size_t len = piv.col.size();
        for (std::size_t k = 1; k < len; ++k) {
          std::int64_t y = buf[pc[k]] - x * static_cast<std::int64_t>(pv[k]);
          y += (y >> 63) & p2;
          buf[pc[k]] = y;
        }
      }
      SparseRow res;
      for (std::size_t c = first; c < ncols; ++c) {
        if (buf[c]) {
          res.col.push_back(static_cast<std::uint32_t>(c));
          res.val.push_back(static_cast<Coef>(buf[c] % p));
          buf[c] = 0;
        }
      }
      if (interreduce && !res.col.empty()) {
        Coef inv = F.inv(res.val[0]);
        for (auto& v : res.val) v = F.mul(v, inv);
        pivot_at[res.col[0]] = static_cast<std::int32_t>(prow.size() + fresh.size());
        fresh.push_back(res);
      }
      out.rows[t] = std::move(res);
      if (++done % 64 == 0) check_deadline();
    }
    return out;
  }

  std::size_t stats_cols = 0, stats_rows = 0;

  int next_degree() const {
    int d = INT_MAX;
    for (const auto& pr : pairs) d = std::min(d, pr.deg);
    for (const auto& in : inputs) d = std::min(d, in.deg);
    return d;
  }

  // one degree step; returns number of new elements
  std::size_t step(int D, Stats& stats) {
    std::vector<Pair> sel;
    {
      std::size_t w = 0;
      for (auto& pr : pairs) {
        if (pr.deg == D) {
          sel.push_back(pr);
        } else {
          pairs[w++] = pr;
        }
      }
      pairs.resize(w);
    }
    std::vector<EPoly> step_inputs;
    {
      std::size_t w = 0;
      for (std::size_t k = 0; k < inputs.size(); ++k) {
        if (inputs[k].deg == D) {
          step_inputs.push_back(std::move(inputs[k]));
        } else {
          if (w != k) inputs[w] = std::move(inputs[k]);
          ++w;
        }
      }
      inputs.resize(w);
    }
    stats.pairs_processed += sel.size();

    std::vector<RowSpec> pivots, todo;
    std::unordered_set<std::uint64_t> dedupe;
    std::vector<char> has_pivot_lm;
    auto add_mulrow = [&](std::uint32_t g, std::uint32_t lcm) {
      // row = (lcm / LM(g)) * g, identified by (g, lcm)
      std::uint64_t key = (static_cast<std::uint64_t>(g) << 32) | lcm;
      if (!dedupe.insert(key).second) return;
      RowSpec rs{static_cast<std::int32_t>(g), quotient(tab[lcm], tab[basis[g].mon[0]]), nullptr, {}};
      rs.mult.degree = static_cast<std::uint16_t>(R.degree_of(rs.mult));
      rs.mons = multiply_mons(basis[g], rs.mult);
      if (has_pivot_lm.size() <= lcm) has_pivot_lm.resize(tab.size() + 1024, 0);
      if (!has_pivot_lm[lcm]) {
        has_pivot_lm[lcm] = 1;
        pivots.push_back(std::move(rs));
      } else {
        todo.push_back(std::move(rs));
      }
    };
    // sort pairs for reproducible row order
    std::sort(sel.begin(), sel.end(), [](const Pair& a, const Pair& b) {
      return a.lcm != b.lcm ? a.lcm < b.lcm : (a.i != b.i ? a.i < b.i : a.j < b.j);
    });
    for (const auto& pr : sel) {
      add_mulrow(pr.i, pr.lcm);
      add_mulrow(pr.j, pr.lcm);
    }
    for (auto& in : step_inputs) {
      RowSpec rs{-1, Monomial{}, &in, in.mon};
      todo.push_back(std::move(rs));
    }
    if (todo.empty()) return 0;
    Reduced red = reduce_rows(pivots, todo, true);
    std::size_t added = 0;
    std::vector<EPoly> fresh;
    for (auto& row : red.rows) {
      if (row.col.empty()) {
        ++stats.zero_reductions;
        continue;
      }
      EPoly e;
      e.mon.reserve(row.col.size());
      for (auto c : row.col) e.mon.push_back(red.col_mons[c]);
      e.coef = std::move(row.val);
      e.deg = D;
      fresh.push_back(std::move(e));
    }
    // newly found rows may have been partially reduced only against earlier
    // fresh rows; their leading monomials are distinct and not divisible by
    // previous leading monomials, which is all the update needs.
    std::sort(fresh.begin(), fresh.end(), [&](const EPoly& a, const EPoly& b) {
      return R.compare(tab[a.mon[0]], tab[b.mon[0]]) > 0;
    });
    for (auto& e : fresh) {
      insert_element(std::move(e));
      ++added;
    }
    return added;
  }
};

F4::F4(RingPtr ring, std::vector<int> component_shifts)
    : ring_(ring), impl_(std::make_unique<Impl>(std::move(ring), std::move(component_shifts))) {}

F4::~F4() = default;

void F4::add_input(const MultiPoly& f) {
  if (f.is_zero()) return;
  if (*f.ring() != *ring_) throw std::invalid_argument("F4 input from a different ring");
  EPoly e = impl_->to_epoly(f);
  if (e.deg <= processed_degree_)
    throw std::logic_error("F4 input below the processed degree; create a fresh engine");
  impl_->inputs.push_back(std::move(e));
}

void F4::load_basis(const std::vector<MultiPoly>& basis) {
  for (const auto& f : basis) {
    if (f.is_zero()) continue;
    EPoly e = impl_->to_epoly(f.monic());
    impl_->basis.push_back(std::move(e));
    impl_->redundant.push_back(0);
    impl_->active.push_back(static_cast<std::uint32_t>(impl_->basis.size() - 1));
  }
  // drop non-minimal leading monomials from the active set
  auto& I = *impl_;
  std::vector<std::uint32_t> keep;
  for (std::uint32_t g : I.active) {
    bool red = false;
    for (std::uint32_t h : I.active) {
      if (h == g) continue;
      std::uint32_t a = I.basis[h].mon[0], b = I.basis[g].mon[0];
      if (I.tab.divides(a, b) && (a != b || h < g)) {
        red = true;
        break;
      }
    }
    if (red) {
      I.redundant[g] = 1;
    } else {
      keep.push_back(g);
    }
  }
  I.active = keep;
}

bool F4::has_pending() const { return !impl_->pairs.empty() || !impl_->inputs.empty(); }

int F4::next_degree() const { return impl_->next_degree(); }

void F4::run(int max_degree) {
  while (true) {
    int D = impl_->next_degree();
    if (D == INT_MAX || D > max_degree) break;
    check_deadline();
    impl_->step(D, stats_);
    ++stats_.steps;
    processed_degree_ = D;
  }
  if (!has_pending() && max_degree != INT_MAX) processed_degree_ = std::max(processed_degree_, max_degree);
  stats_.max_cols = impl_->stats_cols;
  stats_.max_rows = impl_->stats_rows;
}

std::vector<Monomial> F4::leading_monomials() const {
  std::vector<Monomial> out;
  for (auto g : impl_->active) out.push_back(impl_->tab[impl_->basis[g].mon[0]]);
  return out;
}

std::vector<MultiPoly> F4::basis(bool reduce) {
  auto& I = *impl_;
  std::vector<std::uint32_t> act = I.active;
  std::sort(act.begin(), act.end(), [&](std::uint32_t a, std::uint32_t b) {
    return I.R.compare(I.tab[I.basis[a].mon[0]], I.tab[I.basis[b].mon[0]]) < 0;
  });
  std::vector<MultiPoly> out;
  if (!reduce) {
    for (auto g : act) {
      EPoly e = I.basis[g];
      I.make_monic(e);
      out.push_back(I.to_multipoly(e));
    }
    return out;
  }
  // tails reduced against the minimal basis
  std::vector<EPoly> tails(act.size());
  std::vector<Impl::RowSpec> pivots, todo;
  for (std::size_t k = 0; k < act.size(); ++k) {
    const EPoly& g = I.basis[act[k]];
    pivots.push_back({static_cast<std::int32_t>(act[k]), Monomial{}, nullptr, g.mon});
  }
  for (std::size_t k = 0; k < act.size(); ++k) {
    EPoly g = I.basis[act[k]];
    I.make_monic(g);
    tails[k].mon.assign(g.mon.begin() + 1, g.mon.end());
    tails[k].coef.assign(g.coef.begin() + 1, g.coef.end());
    tails[k].deg = g.deg;
    if (!tails[k].mon.empty()) todo.push_back({-1, Monomial{}, &tails[k], tails[k].mon});
  }
  auto red = I.reduce_rows(pivots, todo, false);
  std::size_t t = 0;
  for (std::size_t k = 0; k < act.size(); ++k) {
    const EPoly& g = I.basis[act[k]];
    std::vector<Term> ts;
    ts.push_back({I.tab[g.mon[0]], 1});
    if (!tails[k].mon.empty()) {
      const auto& row = red.rows[t++];
      Coef lead = g.coef[0];
      (void)lead;
      for (std::size_t j = 0; j < row.col.size(); ++j) ts.push_back({I.tab[red.col_mons[row.col[j]]], row.val[j]});
    }
    out.push_back(MultiPoly::from_sorted_terms(ring_, std::move(ts)));
  }
  return out;
}

std::vector<MultiPoly> F4::normal_forms(const std::vector<MultiPoly>& polys) {
  auto& I = *impl_;
  std::vector<EPoly> eps;
  eps.reserve(polys.size());
  for (const auto& f : polys) {
    EPoly e;
    for (const auto& t : f.terms()) {
      e.mon.push_back(I.tab.insert(t.mono));
      e.coef.push_back(t.coef);
    }
    eps.push_back(std::move(e));
  }
  std::vector<Impl::RowSpec> pivots, todo;
  std::vector<std::size_t> which;
  for (std::size_t k = 0; k < eps.size(); ++k) {
    if (eps[k].mon.empty()) continue;
    todo.push_back({-1, Monomial{}, &eps[k], eps[k].mon});
    which.push_back(k);
  }
  std::vector<MultiPoly> out(polys.size(), MultiPoly(ring_));
  if (todo.empty()) return out;
  auto red = I.reduce_rows(pivots, todo, false);
  for (std::size_t t = 0; t < which.size(); ++t) {
    std::vector<Term> ts;
    const auto& row = red.rows[t];
    for (std::size_t j = 0; j < row.col.size(); ++j) ts.push_back({I.tab[red.col_mons[row.col[j]]], row.val[j]});
    out[which[t]] = MultiPoly::from_sorted_terms(ring_, std::move(ts));
  }
  return out;
}

}  // namespace birat
