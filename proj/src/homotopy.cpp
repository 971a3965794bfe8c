#include "tors/homotopy.hpp"

#include "tors/error.hpp"

namespace tors {

HomLayout::HomLayout(const PathAlgebra& alg, std::vector<std::size_t> src, std::vector<std::size_t> tgt)
    : alg_(alg), src_(std::move(src)), tgt_(std::move(tgt)) {
  const std::size_t cols = src_.size();
  offset_.assign(tgt_.size() * cols + 1, 0);
  for (std::size_t r = 0; r < tgt_.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      offset_[r * cols + c] = dim_;
      dim_ += alg.block_dim(src_[c], tgt_[r]);
    }
  offset_.back() = dim_;
}

void HomLayout::flatten(const MapMatrix& m, std::size_t base,
                        std::vector<std::pair<std::size_t, Rational>>& out) const {
  if (m.src != src_ || m.tgt != tgt_) fail(ErrorCode::ShapeMismatch, "map does not match the hom layout");
  for (std::size_t r = 0; r < tgt_.size(); ++r)
    for (std::size_t c = 0; c < src_.size(); ++c) {
      const auto& x = m.a[r][c].c;
      for (std::size_t k = 0; k < x.size(); ++k)
        if (sgn(x[k]) != 0) out.emplace_back(base + offset(r, c) + k, x[k]);
    }
}

MapMatrix HomLayout::unflatten(const SparseVec& v, std::size_t base) const {
  MapMatrix m = MapMatrix::zero(alg_, src_, tgt_);
  const std::size_t cols = src_.size();
  for (const auto& [i, x] : v.e) {
    if (i < base || i >= base + dim_) continue;
    const std::size_t j = i - base;
    // last block start not exceeding j
    std::size_t lo = 0, hi = tgt_.size() * cols;
    while (hi - lo > 1) {
      std::size_t mid = (lo + hi) / 2;
      if (offset_[mid] <= j) lo = mid;
      else hi = mid;
    }
    m.a[lo / cols][lo % cols].c[j - offset_[lo]] = x;
  }
  return m;
}

namespace {

// Adds coeff * x at block (r, c) of a layout.
void push_elem(const HomLayout& lay, std::size_t r, std::size_t c, const AlgElem& x, const Rational& coeff,
               std::vector<std::pair<std::size_t, Rational>>& out) {
  const std::size_t o = lay.offset(r, c);
  for (std::size_t k = 0; k < x.c.size(); ++k)
    if (sgn(x.c[k]) != 0) out.emplace_back(o + k, coeff * x.c[k]);
}

// Images of unit maps f: P^-1 -> Q^-1 under f |-> d_Q f, in Hom(P^-1, Q^0).
void left_images(const PathAlgebra& alg, const TwoTermComplex& p, const TwoTermComplex& q, const HomLayout& target,
                 const Rational& sign, std::vector<SparseVec>& out) {
  for (std::size_t r = 0; r < q.minus.size(); ++r)
    for (std::size_t c = 0; c < p.minus.size(); ++c) {
      const std::size_t n = alg.block_dim(p.minus[c], q.minus[r]);
      for (std::size_t k = 0; k < n; ++k) {
        const AlgElem e = alg.basis_element(p.minus[c], q.minus[r], k);
        std::vector<std::pair<std::size_t, Rational>> entries;
        for (std::size_t s = 0; s < q.zero.size(); ++s)
          if (!q.d.a[s][r].is_zero()) push_elem(target, s, c, alg.mul(e, q.d.a[s][r]), sign, entries);
        out.push_back(collect(std::move(entries)));
      }
    }
}

// Images of unit maps g: P^0 -> Q^0 under g |-> g d_P, in Hom(P^-1, Q^0).
void right_images(const PathAlgebra& alg, const TwoTermComplex& p, const TwoTermComplex& q, const HomLayout& target,
                  const Rational& sign, std::vector<SparseVec>& out) {
  for (std::size_t rp = 0; rp < q.zero.size(); ++rp)
    for (std::size_t r = 0; r < p.zero.size(); ++r) {
      const std::size_t n = alg.block_dim(p.zero[r], q.zero[rp]);
      for (std::size_t k = 0; k < n; ++k) {
        const AlgElem e = alg.basis_element(p.zero[r], q.zero[rp], k);
        std::vector<std::pair<std::size_t, Rational>> entries;
        for (std::size_t cp = 0; cp < p.minus.size(); ++cp)
          if (!p.d.a[r][cp].is_zero()) push_elem(target, rp, cp, alg.mul(p.d.a[r][cp], e), sign, entries);
        out.push_back(collect(std::move(entries)));
      }
    }
}

}  // namespace

std::size_t hom_shift1_dim(const PathAlgebra& alg, const TwoTermComplex& p, const TwoTermComplex& q) {
  p.check(alg);
  q.check(alg);
  HomLayout target(alg, p.minus, q.zero);
  if (target.dim() == 0) return 0;
  std::vector<SparseVec> images;
  left_images(alg, p, q, target, 1, images);
  right_images(alg, p, q, target, 1, images);
  EchelonBasis b;
  for (auto& v : images) {
    if (b.rank() == target.dim()) break;
    b.insert(std::move(v));
  }
  return target.dim() - b.rank();
}

ChainSpace::ChainSpace(const PathAlgebra& alg, const TwoTermComplex& p, const TwoTermComplex& q)
    : alg_(alg),
      p_(p),
      q_(q),
      minus_(alg, p.minus, q.minus),
      zero_(alg, p.zero, q.zero),
      dim_(minus_.dim() + zero_.dim()) {
  p.check(alg);
  q.check(alg);
}

SparseVec ChainSpace::flatten(const ChainMap& f) const {
  std::vector<std::pair<std::size_t, Rational>> e;
  minus_.flatten(f.minus, 0, e);
  zero_.flatten(f.zero, minus_.dim(), e);
  return collect(std::move(e));
}

ChainMap ChainSpace::unflatten(const SparseVec& v) const {
  return {minus_.unflatten(v, 0), zero_.unflatten(v, minus_.dim())};
}

std::vector<SparseVec> ChainSpace::cycles() const {
  // delta(f, g) = d_Q f - g d_P
  HomLayout target(alg_, p_.minus, q_.zero);
  std::vector<SparseVec> images;
  images.reserve(dim_);
  left_images(alg_, p_, q_, target, 1, images);
  right_images(alg_, p_, q_, target, -1, images);
  return kernel(images);
}

std::vector<SparseVec> ChainSpace::boundaries() const {
  // h: P^0 -> Q^-1 gives (h d_P, d_Q h)
  std::vector<SparseVec> out;
  for (std::size_t r = 0; r < q_.minus.size(); ++r)
    for (std::size_t s = 0; s < p_.zero.size(); ++s) {
      const std::size_t n = alg_.block_dim(p_.zero[s], q_.minus[r]);
      for (std::size_t k = 0; k < n; ++k) {
        const AlgElem h = alg_.basis_element(p_.zero[s], q_.minus[r], k);
        std::vector<std::pair<std::size_t, Rational>> e;
        for (std::size_t c = 0; c < p_.minus.size(); ++c)
          if (!p_.d.a[s][c].is_zero()) push_elem(minus_, r, c, alg_.mul(p_.d.a[s][c], h), 1, e);
        const std::size_t base = minus_.dim();
        for (std::size_t t = 0; t < q_.zero.size(); ++t)
          if (!q_.d.a[t][r].is_zero()) {
            const AlgElem x = alg_.mul(h, q_.d.a[t][r]);
            const std::size_t o = base + zero_.offset(t, s);
            for (std::size_t j = 0; j < x.c.size(); ++j)
              if (sgn(x.c[j]) != 0) e.emplace_back(o + j, x.c[j]);
          }
        out.push_back(collect(std::move(e)));
      }
    }
  return out;
}

QuotientBasis::QuotientBasis(const std::vector<SparseVec>& vectors, const std::vector<SparseVec>& modulo) {
  for (const auto& v : modulo) {
    echelon_.insert(v, SparseVec{});
    modulo_.insert(v);
  }
  for (const auto& v : vectors) {
    SparseVec r = v;
    echelon_.reduce(r);
    if (r.empty()) continue;
    echelon_.insert(v, SparseVec::unit(basis_.size()));
    basis_.push_back(v);
  }
}

std::optional<std::vector<Rational>> QuotientBasis::coordinates(const SparseVec& v) const {
  SparseVec r = v;
  SparseVec tag;
  echelon_.reduce(r, &tag);
  if (!r.empty()) return std::nullopt;
  std::vector<Rational> out(basis_.size());
  for (const auto& [i, x] : tag.e) out.at(i) = -x;
  return out;
}

bool QuotientBasis::in_modulo(const SparseVec& v) const { return modulo_.contains(v); }

HomK::HomK(const PathAlgebra& alg, const TwoTermComplex& p, const TwoTermComplex& q)
    : space_(alg, p, q), quotient_(space_.cycles(), space_.boundaries()) {
  for (const auto& v : quotient_.basis()) reps_.push_back(space_.unflatten(v));
}

std::vector<Rational> HomK::coordinates(const ChainMap& f) const {
  auto c = quotient_.coordinates(space_.flatten(f));
  if (!c) fail(ErrorCode::ShapeMismatch, "map is not a chain map");
  return *c;
}

bool HomK::is_null_homotopic(const ChainMap& f) const { return quotient_.in_modulo(space_.flatten(f)); }

std::vector<ChainMap> chain_map_basis(const PathAlgebra& alg, const TwoTermComplex& p, const TwoTermComplex& q) {
  ChainSpace space(alg, p, q);
  std::vector<ChainMap> out;
  for (const auto& v : space.cycles()) out.push_back(space.unflatten(v));
  return out;
}

DenseMatrix top_matrix(const PathAlgebra& alg, const MapMatrix& m) {
  DenseMatrix t(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) t[r][c] = alg.trivial_coeff(m.a[r][c]);
  return t;
}

namespace {

bool square_invertible(const PathAlgebra& alg, const MapMatrix& m) {
  if (m.rows() != m.cols()) return false;
  return dense_rank(top_matrix(alg, m)) == m.rows();
}

}  // namespace

bool is_invertible(const PathAlgebra& alg, const ChainMap& f) {
  return square_invertible(alg, f.minus) && square_invertible(alg, f.zero);
}

MapMatrix invert(const PathAlgebra& alg, const MapMatrix& m) {
  if (m.rows() != m.cols()) fail(ErrorCode::ShapeMismatch, "inverse of a non-square map");
  auto tinv = dense_inverse(top_matrix(alg, m));
  if (!tinv) fail(ErrorCode::Internal, "map has a singular top");
  MapMatrix lift = MapMatrix::zero(alg, m.tgt, m.src);
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (std::size_t r = 0; r < m.rows(); ++r) {
      const Rational& x = (*tinv)[c][r];
      if (sgn(x) == 0) continue;
      if (m.src[c] != m.tgt[r]) fail(ErrorCode::Internal, "top inverse mixes vertices");
      lift.a[c][r] = alg.scaled(alg.idempotent(m.src[c]), x);
    }
  // lift * m = 1 + n with n radical and nilpotent
  MapMatrix one = MapMatrix::identity(alg, m.src);
  MapMatrix minus_n = add(alg, one, scaled(alg, compose(alg, lift, m), -1));
  MapMatrix sum = one;
  MapMatrix power = one;
  for (std::size_t k = 0; k <= alg.nilpotency_length() * (m.rows() + 1); ++k) {
    power = compose(alg, minus_n, power);
    if (power.is_zero()) break;
    sum = add(alg, sum, power);
  }
  return compose(alg, sum, lift);
}

}  // namespace tors
