#include "birat/linalg.hpp"

#include <algorithm>
#include <stdexcept>

#include "birat/cancel.hpp"

namespace birat {

void Matrix::append_row(const std::vector<Coef>& r) {
  if (rows_ == 0 && cols_ == 0) cols_ = r.size();
  if (r.size() != cols_) throw std::invalid_argument("row length mismatch");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

std::vector<std::size_t> row_reduce(Matrix& m, const Field& f) {
  const std::int64_t p = f.characteristic();
  const std::int64_t p2 = p * p;
  const std::size_t R = m.rows(), C = m.cols();
  // echelon form row by row against the pivots found so far
  std::vector<std::vector<Coef>> piv_rows;
  std::vector<std::int32_t> piv_of(C, -1);
  std::vector<std::size_t> lead;
  std::vector<std::int64_t> buf(C);
  for (std::size_t i = 0; i < R; ++i) {
    const Coef* src = m.row(i);
    for (std::size_t k = 0; k < C; ++k) buf[k] = src[k];
    std::size_t found = C;
    for (std::size_t c = 0; c < C; ++c) {
      std::int64_t x = buf[c];
      if (!x) continue;
      x %= p;
      buf[c] = x;
      if (!x) continue;
      std::int32_t pr = piv_of[c];
      if (pr < 0) {
        found = c;
        break;
      }
      const Coef* pv = piv_rows[static_cast<std::size_t>(pr)].data();
      buf[c] = 0;
      for (std::size_t k = c + 1; k < C; ++k) {
        if (!pv[k]) continue;
        std::int64_t y = buf[k] - x * pv[k];
        y += (y >> 63) & p2;
        buf[k] = y;
      }
    }
    if (found == C) continue;
    std::vector<Coef> row(C, 0);
    Coef inv = f.inv(static_cast<Coef>(buf[found]));
    for (std::size_t k = found; k < C; ++k) row[k] = f.mul(static_cast<Coef>(buf[k] % p), inv);
    piv_of[found] = static_cast<std::int32_t>(piv_rows.size());
    piv_rows.push_back(std::move(row));
    lead.push_back(found);
    if ((piv_rows.size() & 31) == 0) check_deadline();
  }
  // sort by pivot column and back-substitute
  std::vector<std::size_t> order(lead.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return lead[a] < lead[b]; });
  const std::size_t r = order.size();
  Matrix out(r, C);
  std::vector<std::size_t> pivots(r);
  for (std::size_t ii = r; ii-- > 0;) {
    const std::size_t i = order[ii];
    const std::size_t c0 = lead[i];
    for (std::size_t k = 0; k < C; ++k) buf[k] = piv_rows[i][k];
    for (std::size_t k = c0 + 1; k < C; ++k) {
      std::int64_t x = buf[k];
      if (!x) continue;
      x %= p;
      buf[k] = x;
      if (!x) continue;
      std::int32_t pr = piv_of[k];
      if (pr < 0) continue;
      // pivot rows below are already fully reduced in `out`
      const Coef* pv = piv_rows[static_cast<std::size_t>(pr)].data();
      buf[k] = 0;
      for (std::size_t j = k + 1; j < C; ++j) {
        if (!pv[j]) continue;
        std::int64_t y = buf[j] - x * pv[j];
        y += (y >> 63) & p2;
        buf[j] = y;
      }
    }
    for (std::size_t k = 0; k < C; ++k) {
      Coef v = static_cast<Coef>(buf[k] % p);
      out.at(ii, k) = v;
      piv_rows[i][k] = v;
    }
    pivots[ii] = c0;
    if ((ii & 31) == 0) check_deadline();
  }
  m = std::move(out);
  return pivots;
}

std::size_t rank(Matrix m, const Field& f) { return row_reduce(m, f).size(); }

std::vector<std::vector<Coef>> kernel(Matrix m, const Field& f) {
  const std::size_t C = m.cols();
  auto piv = row_reduce(m, f);
  std::vector<char> is_piv(C, 0);
  for (auto c : piv) is_piv[c] = 1;
  std::vector<std::vector<Coef>> out;
  for (std::size_t free = 0; free < C; ++free) {
    if (is_piv[free]) continue;
    std::vector<Coef> v(C, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = f.neg(m.at(i, free));
    out.push_back(std::move(v));
  }
  return out;
}

bool solve(Matrix m, const std::vector<Coef>& b, const Field& f, std::vector<Coef>& x) {
  const std::size_t C = m.cols();
  Matrix aug(m.rows(), C + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t k = 0; k < C; ++k) aug.at(i, k) = m.at(i, k);
    aug.at(i, C) = b[i];
  }
  auto piv = row_reduce(aug, f);
  if (!piv.empty() && piv.back() == C) return false;
  x.assign(C, 0);
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug.at(i, C);
  return true;
}

bool RowEchelon::add(const std::vector<Coef>& src) {
  if (src.size() != cols_) throw std::invalid_argument("row length mismatch");
  const std::int64_t p = field_.characteristic();
  const std::int64_t p2 = p * p;
  buf_.assign(src.begin(), src.end());
  std::size_t found = cols_;
  for (std::size_t c = 0; c < cols_; ++c) {
    std::int64_t x = buf_[c];
    if (!x) continue;
    x %= p;
    buf_[c] = x;
    if (!x) continue;
    std::int32_t pr = piv_of_[c];
    if (pr < 0) {
      found = c;
      break;
    }
    const Coef* pv = rows_[static_cast<std::size_t>(pr)].data();
    buf_[c] = 0;
    for (std::size_t k = c + 1; k < cols_; ++k) {
      if (!pv[k]) continue;
      std::int64_t y = buf_[k] - x * pv[k];
      y += (y >> 63) & p2;
      buf_[k] = y;
    }
  }
  if (found == cols_) return false;
  std::vector<Coef> row(cols_, 0);
  Coef inv = field_.inv(static_cast<Coef>(buf_[found]));
  for (std::size_t k = found; k < cols_; ++k) row[k] = field_.mul(static_cast<Coef>(buf_[k] % p), inv);
  piv_of_[found] = static_cast<std::int32_t>(rows_.size());
  rows_.push_back(std::move(row));
  return true;
}

Matrix RowEchelon::basis() const {
  Matrix m(0, cols_);
  for (const auto& r : rows_) m.append_row(r);
  return m;
}

std::vector<Coef> mat_vec(const Matrix& m, const std::vector<Coef>& x, const Field& f) {
  if (x.size() != m.cols()) throw std::invalid_argument("mat_vec: size mismatch");
  const std::uint64_t p = f.characteristic();
  // products that fit in 64 bits before a reduction
  const std::uint64_t block = std::max<std::uint64_t>(1, UINT64_MAX / ((p - 1) * (p - 1)) - 1);
  std::vector<Coef> y(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const Coef* r = m.row(i);
    std::uint64_t acc = 0, pending = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      acc += static_cast<std::uint64_t>(r[j]) * x[j];
      if (++pending == block) {
        acc %= p;
        pending = 0;
      }
    }
    y[i] = static_cast<Coef>(acc % p);
  }
  return y;
}

}  // namespace birat
