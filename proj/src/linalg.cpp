#include "tors/linalg.hpp"

#include <algorithm>
#include <optional>

namespace tors {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational SparseVec::get(std::size_t i) const {
  auto it = std::lower_bound(e.begin(), e.end(), i, [](const auto& p, std::size_t k) { return p.first < k; });
  if (it != e.end() && it->first == i) return it->second;
  return 0;
}

void SparseVec::scale(const Rational& a) {
  if (sgn(a) == 0) {
    e.clear();
    return;
  }
  for (auto& [i, v] : e) v *= a;
}

SparseVec SparseVec::unit(std::size_t i) {
  SparseVec v;
  v.e.emplace_back(i, Rational(1));
  return v;
}

void axpy(SparseVec& y, const Rational& a, const SparseVec& x) {
  if (sgn(a) == 0 || x.e.empty()) return;
  std::vector<std::pair<std::size_t, Rational>> out;
  out.reserve(y.e.size() + x.e.size());
  std::size_t i = 0, j = 0;
  Rational t;
  while (i < y.e.size() || j < x.e.size()) {
    if (j == x.e.size() || (i < y.e.size() && y.e[i].first < x.e[j].first)) {
      out.push_back(std::move(y.e[i++]));
    } else if (i == y.e.size() || x.e[j].first < y.e[i].first) {
      t = a * x.e[j].second;
      out.emplace_back(x.e[j].first, t);
      ++j;
    } else {
      t = y.e[i].second + a * x.e[j].second;
      if (sgn(t) != 0) out.emplace_back(y.e[i].first, t);
      ++i;
      ++j;
    }
  }
  y.e = std::move(out);
}

SparseVec from_dense(const std::vector<Rational>& v) {
  SparseVec s;
  for (std::size_t i = 0; i < v.size(); ++i) s.push(i, v[i]);
  return s;
}

std::vector<Rational> to_dense(const SparseVec& v, std::size_t n) {
  std::vector<Rational> d(n);
  for (const auto& [i, x] : v.e) d.at(i) = x;
  return d;
}

SparseVec collect(std::vector<std::pair<std::size_t, Rational>> entries) {
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec s;
  for (std::size_t k = 0; k < entries.size();) {
    Rational acc = entries[k].second;
    std::size_t m = k + 1;
    while (m < entries.size() && entries[m].first == entries[k].first) acc += entries[m++].second;
    s.push(entries[k].first, acc);
    k = m;
  }
  return s;
}

void EchelonBasis::reduce(SparseVec& v, SparseVec* tag) const {
  std::size_t pos = 0;
  Rational c;
  while (pos < v.e.size()) {
    auto it = pivot_row_.find(v.e[pos].first);
    if (it == pivot_row_.end()) {
      ++pos;
      continue;
    }
    const Row& row = rows_[it->second];
    c = -v.e[pos].second;
    axpy(v, c, row.vec);
    if (tag && track_) axpy(*tag, c, row.tag);
  }
}

bool EchelonBasis::contains(SparseVec v) const {
  reduce(v);
  return v.empty();
}

EchelonBasis::Inserted EchelonBasis::insert(SparseVec v, SparseVec tag) {
  reduce(v, &tag);
  if (v.empty()) return {false, track_ ? std::move(tag) : SparseVec{}};
  Rational inv = 1 / v.e.front().second;
  v.scale(inv);
  if (track_) tag.scale(inv);
  const std::size_t pivot = v.e.front().first;
  pivot_row_.emplace(pivot, rows_.size());
  rows_.push_back({pivot, std::move(v), track_ ? std::move(tag) : SparseVec{}});
  return {true, {}};
}

std::size_t rank_of(const std::vector<SparseVec>& vectors) {
  EchelonBasis b;
  for (const auto& v : vectors) b.insert(v);
  return b.rank();
}

std::vector<SparseVec> kernel(const std::vector<SparseVec>& images) {
  EchelonBasis b(true);
  std::vector<SparseVec> out;
  for (std::size_t k = 0; k < images.size(); ++k) {
    auto r = b.insert(images[k], SparseVec::unit(k));
    if (!r.independent) out.push_back(std::move(r.relation));
  }
  return out;
}

std::optional<SparseVec> solve_in_span(const std::vector<SparseVec>& vectors, const SparseVec& v) {
  EchelonBasis b(true);
  for (std::size_t k = 0; k < vectors.size(); ++k) b.insert(vectors[k], SparseVec::unit(k));
  SparseVec r = v;
  SparseVec tag;
  b.reduce(r, &tag);
  if (!r.empty()) return std::nullopt;
  // v - sum(tag) == 0 after reduction started from tag = 0, so v = -tag.
  tag.scale(-1);
  return tag;
}

namespace {

// Row echelon in place; returns pivot columns.
std::vector<std::size_t> dense_echelon(DenseMatrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && sgn(m[p][c]) == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || sgn(m[i][c]) == 0) continue;
      Rational f = m[i][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t dense_rank(DenseMatrix m) {
  if (m.empty()) return 0;
  return dense_echelon(m, m[0].size()).size();
}

std::vector<std::size_t> dense_pivot_columns(DenseMatrix m) {
  if (m.empty()) return {};
  return dense_echelon(m, m[0].size());
}

std::optional<DenseMatrix> dense_inverse(DenseMatrix m) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    m[i].resize(2 * n);
    m[i][n + i] = 1;
  }
  auto piv = dense_echelon(m, n);
  if (piv.size() != n) return std::nullopt;
  DenseMatrix inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
  return inv;
}

std::vector<std::vector<Rational>> dense_kernel(DenseMatrix m, std::size_t cols) {
  auto piv = dense_echelon(m, cols);
  std::vector<bool> is_piv(cols, false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<std::vector<Rational>> out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_piv[f]) continue;
    std::vector<Rational> x(cols);
    x[f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = -m[r][f];
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace tors
