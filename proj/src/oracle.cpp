#include "tors/oracle.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

#include "tors/error.hpp"
#include "tors/silting.hpp"

namespace tors {

std::size_t Representation::total_dim() const {
  std::size_t n = 0;
  for (auto d : dims) n += d;
  return n;
}

std::string format_dims(const std::vector<std::size_t>& dims) {
  std::string s = "(";
  for (std::size_t i = 0; i < dims.size(); ++i) s += (i ? "," : "") + std::to_string(dims[i]);
  return s + ")";
}

std::string describe(const PathAlgebra& alg, const Representation& m) {
  std::ostringstream os;
  os << format_dims(m.dims);
  for (std::size_t k = 0; k < m.maps.size(); ++k) {
    const auto& a = m.maps[k];
    if (a.rows == 0 || a.cols == 0) continue;
    os << " " << alg.quiver().arrows[k].name << "=[";
    for (std::size_t i = 0; i < a.rows; ++i) {
      if (i) os << ";";
      for (std::size_t j = 0; j < a.cols; ++j) os << int(a.at(i, j));
    }
    os << "]";
  }
  return os.str();
}

unsigned oracle_prime(const PathAlgebra& alg, unsigned fallback) {
  const unsigned c = characteristic(alg.field());
  return c ? c : fallback;
}

// ---------------------------------------------------------------------------
// F_p linear algebra

namespace {

struct Fp {
  unsigned p;

  std::uint8_t add(unsigned a, unsigned b) const { return static_cast<std::uint8_t>((a + b) % p); }
  std::uint8_t sub(unsigned a, unsigned b) const { return static_cast<std::uint8_t>((a + p - b) % p); }
  std::uint8_t mul(unsigned a, unsigned b) const { return static_cast<std::uint8_t>((a * b) % p); }
  std::uint8_t inv(unsigned a) const {
    for (unsigned x = 1; x < p; ++x)
      if ((a * x) % p == 1) return static_cast<std::uint8_t>(x);
    fail(ErrorCode::Internal, "zero has no inverse");
  }
  std::uint8_t from_rational(const Rational& q) const {
    mpz_class num = q.get_num() % p, den = q.get_den() % p;
    if (num < 0) num += p;
    if (den < 0) den += p;
    if (den == 0) fail(ErrorCode::ShapeMismatch, "coefficient " + q.get_str() + " is not defined mod " + std::to_string(p));
    return mul(static_cast<unsigned>(num.get_ui()), inv(static_cast<unsigned>(den.get_ui())));
  }
};

using Row = std::vector<std::uint8_t>;

FpMatrix identity_matrix(std::size_t n) {
  FpMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

FpMatrix mat_mul(const Fp& f, const FpMatrix& x, const FpMatrix& y) {
  FpMatrix z(x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t k = 0; k < x.cols; ++k) {
      const unsigned a = x.at(i, k);
      if (!a) continue;
      for (std::size_t j = 0; j < y.cols; ++j) z.at(i, j) = f.add(z.at(i, j), f.mul(a, y.at(k, j)));
    }
  return z;
}

bool is_zero_matrix(const FpMatrix& m) {
  return std::all_of(m.a.begin(), m.a.end(), [](std::uint8_t x) { return x == 0; });
}

// Reduced row echelon form in place over the first `cols` columns; returns pivot columns.
std::vector<std::size_t> rref(const Fp& f, std::vector<Row>& rows, std::size_t cols) {
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t k = r;
    while (k < rows.size() && rows[k][c] == 0) ++k;
    if (k == rows.size()) continue;
    std::swap(rows[k], rows[r]);
    const unsigned s = f.inv(rows[r][c]);
    for (auto& x : rows[r]) x = f.mul(x, s);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const unsigned g = rows[i][c];
      for (std::size_t j = 0; j < rows[i].size(); ++j) rows[i][j] = f.sub(rows[i][j], f.mul(g, rows[r][j]));
    }
    piv.push_back(c);
    ++r;
  }
  rows.resize(r);
  return piv;
}

std::size_t rank_of_rows(const Fp& f, std::vector<Row> rows, std::size_t cols) { return rref(f, rows, cols).size(); }

std::vector<Row> nullspace(const Fp& f, std::vector<Row> rows, std::size_t cols) {
  auto piv = rref(f, rows, cols);
  std::vector<bool> is_piv(cols, false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<Row> out;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_piv[free]) continue;
    Row x(cols, 0);
    x[free] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = f.sub(0, rows[r][free]);
    out.push_back(std::move(x));
  }
  return out;
}

std::size_t matrix_rank(const Fp& f, const FpMatrix& m) {
  std::vector<Row> rows(m.rows, Row(m.cols));
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) rows[i][j] = m.at(i, j);
  return rank_of_rows(f, std::move(rows), m.cols);
}

// Columns of m as row vectors.
std::vector<Row> columns(const FpMatrix& m) {
  std::vector<Row> out(m.cols, Row(m.rows));
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) out[j][i] = m.at(i, j);
  return out;
}

// Vertexwise linear map; one matrix per vertex.
using VMap = std::vector<FpMatrix>;

struct HomLayoutFp {
  std::vector<std::size_t> offset;
  std::size_t dim = 0;
};

HomLayoutFp hom_layout(const Representation& m, const Representation& n) {
  HomLayoutFp l;
  for (std::size_t v = 0; v < m.dims.size(); ++v) {
    l.offset.push_back(l.dim);
    l.dim += n.dims[v] * m.dims[v];
  }
  return l;
}

VMap unflatten(const Representation& m, const Representation& n, const HomLayoutFp& l, const Row& x) {
  VMap out;
  for (std::size_t v = 0; v < m.dims.size(); ++v) {
    FpMatrix a(n.dims[v], m.dims[v]);
    std::copy_n(x.begin() + static_cast<std::ptrdiff_t>(l.offset[v]), a.a.size(), a.a.begin());
    out.push_back(std::move(a));
  }
  return out;
}

std::vector<VMap> hom_maps(const PathAlgebra& alg, const Representation& m, const Representation& n) {
  const Fp f{m.p};
  const auto& arrows = alg.quiver().arrows;
  const auto l = hom_layout(m, n);
  std::vector<Row> eqs;
  // n_a phi_s - phi_t m_a = 0 for every arrow a : s -> t
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    const std::size_t s = arrows[k].source, t = arrows[k].target;
    const FpMatrix& ma = m.maps[k];
    const FpMatrix& na = n.maps[k];
    for (std::size_t i = 0; i < n.dims[t]; ++i)
      for (std::size_t j = 0; j < m.dims[s]; ++j) {
        Row r(l.dim, 0);
        for (std::size_t q = 0; q < n.dims[s]; ++q) {
          auto& x = r[l.offset[s] + q * m.dims[s] + j];
          x = f.add(x, na.at(i, q));
        }
        for (std::size_t q = 0; q < m.dims[t]; ++q) {
          auto& x = r[l.offset[t] + i * m.dims[t] + q];
          x = f.sub(x, ma.at(q, j));
        }
        eqs.push_back(std::move(r));
      }
  }
  std::vector<VMap> out;
  for (const auto& x : nullspace(f, std::move(eqs), l.dim)) out.push_back(unflatten(m, n, l, x));
  return out;
}

// Calls visit on every linear combination of the basis until it returns true.
template <class Visit>
bool any_combination(const Fp& f, const std::vector<VMap>& basis, const Caps& caps, Visit&& visit) {
  if (basis.empty()) return false;
  // basis elements, then pairwise sums, catch most witnesses cheaply
  for (const auto& b : basis)
    if (visit(b)) return true;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      VMap s = basis[i];
      for (std::size_t v = 0; v < s.size(); ++v)
        for (std::size_t e = 0; e < s[v].a.size(); ++e) s[v].a[e] = f.add(s[v].a[e], basis[j][v].a[e]);
      if (visit(s)) return true;
    }
  std::size_t total = 1;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (total > caps.oracle_space / f.p) fail(ErrorCode::SearchSpaceExceeded, "homomorphism space too large to search");
    total *= f.p;
  }
  std::vector<unsigned> coeff(basis.size(), 0);
  for (std::size_t code = 1; code < total; ++code) {
    std::size_t c = code;
    for (auto& x : coeff) {
      x = static_cast<unsigned>(c % f.p);
      c /= f.p;
    }
    VMap s = basis[0];
    for (std::size_t v = 0; v < s.size(); ++v)
      for (std::size_t e = 0; e < s[v].a.size(); ++e) {
        unsigned acc = 0;
        for (std::size_t k = 0; k < basis.size(); ++k) acc += coeff[k] * basis[k][v].a[e];
        s[v].a[e] = static_cast<std::uint8_t>(acc % f.p);
      }
    if (visit(s)) return true;
  }
  return false;
}

bool vmap_invertible(const Fp& f, const VMap& x) {
  for (const auto& a : x)
    if (a.rows != a.cols || matrix_rank(f, a) != a.rows) return false;
  return true;
}

bool vmap_nilpotent(const Fp& f, const VMap& x) {
  for (const auto& a : x) {
    FpMatrix pw = a;
    for (std::size_t k = 1; k < a.rows; ++k) pw = mat_mul(f, pw, a);
    if (a.rows && !is_zero_matrix(pw)) return false;
  }
  return true;
}

VMap vmap_power(const Fp& f, const VMap& x, std::size_t n) {
  VMap out;
  for (const auto& a : x) {
    FpMatrix pw = identity_matrix(a.rows);
    for (std::size_t k = 0; k < n; ++k) pw = mat_mul(f, pw, a);
    out.push_back(std::move(pw));
  }
  return out;
}

// Solves b x = y for the columns of a full-column-rank b; y lies in its span.
FpMatrix solve_columns(const Fp& f, const FpMatrix& b, const FpMatrix& y) {
  std::vector<Row> rows(b.rows, Row(b.cols + y.cols));
  for (std::size_t i = 0; i < b.rows; ++i) {
    for (std::size_t j = 0; j < b.cols; ++j) rows[i][j] = b.at(i, j);
    for (std::size_t j = 0; j < y.cols; ++j) rows[i][b.cols + j] = y.at(i, j);
  }
  auto piv = rref(f, rows, b.cols);
  if (piv.size() != b.cols) fail(ErrorCode::Internal, "basis is not independent");
  FpMatrix x(b.cols, y.cols);
  for (std::size_t r = 0; r < piv.size(); ++r)
    for (std::size_t j = 0; j < y.cols; ++j) x.at(piv[r], j) = rows[r][b.cols + j];
  for (std::size_t r = piv.size(); r < rows.size(); ++r)
    for (std::size_t j = 0; j < y.cols; ++j)
      if (rows[r][b.cols + j]) fail(ErrorCode::Internal, "vector outside the span");
  return x;
}

// Basis (as columns) of the column space, resp. kernel, of a.
FpMatrix image_basis(const Fp& f, const FpMatrix& a) {
  auto cols = columns(a);
  auto piv = rref(f, cols, a.rows);
  (void)piv;
  FpMatrix b(a.rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < a.rows; ++i) b.at(i, j) = cols[j][i];
  return b;
}

FpMatrix kernel_basis(const Fp& f, const FpMatrix& a) {
  std::vector<Row> rows(a.rows, Row(a.cols));
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) rows[i][j] = a.at(i, j);
  auto ker = nullspace(f, std::move(rows), a.cols);
  FpMatrix b(a.cols, ker.size());
  for (std::size_t j = 0; j < ker.size(); ++j)
    for (std::size_t i = 0; i < a.cols; ++i) b.at(i, j) = ker[j][i];
  return b;
}

// Subrepresentation spanned by the columns of basis[v], written in that basis.
Representation restrict_to(const PathAlgebra& alg, const Representation& m, const std::vector<FpMatrix>& basis) {
  const Fp f{m.p};
  Representation out;
  out.p = m.p;
  for (const auto& b : basis) out.dims.push_back(b.cols);
  const auto& arrows = alg.quiver().arrows;
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    const std::size_t s = arrows[k].source, t = arrows[k].target;
    const FpMatrix image = mat_mul(f, m.maps[k], basis[s]);
    out.maps.push_back(solve_columns(f, basis[t], image));
  }
  return out;
}

FpMatrix path_matrix(const Fp& f, const Representation& m, const Path& path, std::size_t from, std::size_t to) {
  FpMatrix acc = identity_matrix(m.dims[path.source]);
  for (std::size_t i = from; i < to; ++i) acc = mat_mul(f, m.maps[path.arrows[i]], acc);
  return acc;
}

}  // namespace

Representation direct_sum(const Representation& m, const Representation& n) {
  Representation out;
  out.p = m.p;
  for (std::size_t v = 0; v < m.dims.size(); ++v) out.dims.push_back(m.dims[v] + n.dims[v]);
  for (std::size_t k = 0; k < m.maps.size(); ++k) {
    const auto& a = m.maps[k];
    const auto& b = n.maps[k];
    FpMatrix s(a.rows + b.rows, a.cols + b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
      for (std::size_t j = 0; j < a.cols; ++j) s.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows; ++i)
      for (std::size_t j = 0; j < b.cols; ++j) s.at(a.rows + i, a.cols + j) = b.at(i, j);
    out.maps.push_back(std::move(s));
  }
  return out;
}

bool satisfies_relations(const PathAlgebra& alg, const Representation& m) {
  const Fp f{m.p};
  for (const auto& rel : alg.relations()) {
    if (rel.empty()) continue;
    const std::size_t s = rel[0].path.source, t = rel[0].path.target;
    FpMatrix sum(m.dims[t], m.dims[s]);
    for (const auto& term : rel) {
      const unsigned c = f.from_rational(term.coeff);
      const FpMatrix pm = path_matrix(f, m, term.path, 0, term.path.arrows.size());
      for (std::size_t e = 0; e < sum.a.size(); ++e) sum.a[e] = f.add(sum.a[e], f.mul(c, pm.a[e]));
    }
    if (!is_zero_matrix(sum)) return false;
  }
  return true;
}

std::vector<std::vector<FpMatrix>> hom_basis(const PathAlgebra& alg, const Representation& m,
                                             const Representation& n) {
  return hom_maps(alg, m, n);
}

namespace {

// An endomorphism that is neither nilpotent nor invertible, if any.
std::optional<VMap> splitting_endomorphism(const PathAlgebra& alg, const Representation& m, const Caps& caps) {
  const Fp f{m.p};
  std::optional<VMap> found;
  any_combination(f, hom_maps(alg, m, m), caps, [&](const VMap& x) {
    if (vmap_invertible(f, x) || vmap_nilpotent(f, x)) return false;
    found = x;
    return true;
  });
  return found;
}

}  // namespace

namespace {

// A vector killed by every arrow out of v and outside the images of the
// arrows into v spans a simple direct summand.
bool splits_simple(const PathAlgebra& alg, const Representation& m) {
  const Fp f{m.p};
  const auto& arrows = alg.quiver().arrows;
  for (std::size_t v = 0; v < m.dims.size(); ++v) {
    const std::size_t d = m.dims[v];
    if (d == 0) continue;
    std::vector<Row> out;
    std::vector<Row> in;
    for (std::size_t k = 0; k < arrows.size(); ++k) {
      const auto& a = m.maps[k];
      if (arrows[k].source == v)
        for (std::size_t i = 0; i < a.rows; ++i) out.emplace_back(a.a.begin() + static_cast<std::ptrdiff_t>(i * a.cols), a.a.begin() + static_cast<std::ptrdiff_t>((i + 1) * a.cols));
      if (arrows[k].target == v)
        for (auto& c : columns(a)) in.push_back(std::move(c));
    }
    const auto ker = nullspace(f, std::move(out), d);
    if (ker.empty()) continue;
    rref(f, in, d);
    const std::size_t r = in.size();
    for (const auto& x : ker) in.push_back(x);
    if (rank_of_rows(f, std::move(in), d) > r) return true;
  }
  return false;
}

}  // namespace

bool is_indecomposable(const PathAlgebra& alg, const Representation& m, const Caps& caps) {
  if (m.total_dim() == 0) return false;
  if (m.total_dim() > 1 && splits_simple(alg, m)) return false;
  return !splitting_endomorphism(alg, m, caps);
}

std::vector<Representation> decompose(const PathAlgebra& alg, const Representation& m, const Caps& caps) {
  if (m.total_dim() == 0) return {};
  auto phi = splitting_endomorphism(alg, m, caps);
  if (!phi) return {m};
  // Fitting: M = ker phi^N (+) im phi^N
  const Fp f{m.p};
  const VMap pw = vmap_power(f, *phi, m.total_dim());
  std::vector<FpMatrix> ker, im;
  for (const auto& a : pw) {
    ker.push_back(kernel_basis(f, a));
    im.push_back(image_basis(f, a));
  }
  auto out = decompose(alg, restrict_to(alg, m, ker), caps);
  for (auto& x : decompose(alg, restrict_to(alg, m, im), caps)) out.push_back(std::move(x));
  return out;
}

bool is_isomorphic(const PathAlgebra& alg, const Representation& m, const Representation& n, const Caps& caps) {
  if (m.dims != n.dims) return false;
  if (m.total_dim() == 0) return true;
  const Fp f{m.p};
  return any_combination(f, hom_maps(alg, m, n), caps, [&](const VMap& x) { return vmap_invertible(f, x); });
}

bool has_epi(const PathAlgebra& alg, const Representation& m, const Representation& n, const Caps& caps) {
  if (n.total_dim() == 0) return true;
  const Fp f{m.p};
  return any_combination(f, hom_maps(alg, m, n), caps, [&](const VMap& x) {
    for (std::size_t v = 0; v < x.size(); ++v)
      if (matrix_rank(f, x[v]) != n.dims[v]) return false;
    return true;
  });
}

bool has_mono(const PathAlgebra& alg, const Representation& n, const Representation& m, const Caps& caps) {
  if (n.total_dim() == 0) return true;
  const Fp f{m.p};
  return any_combination(f, hom_maps(alg, n, m), caps, [&](const VMap& x) {
    for (std::size_t v = 0; v < x.size(); ++v)
      if (matrix_rank(f, x[v]) != n.dims[v]) return false;
    return true;
  });
}

bool in_fac(const PathAlgebra& alg, const Representation& m, const Representation& n) {
  const Fp f{m.p};
  const auto basis = hom_maps(alg, m, n);
  for (std::size_t v = 0; v < n.dims.size(); ++v) {
    std::vector<Row> cols;
    for (const auto& x : basis)
      for (auto& c : columns(x[v])) cols.push_back(std::move(c));
    if (rank_of_rows(f, std::move(cols), n.dims[v]) != n.dims[v]) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// extensions

namespace {

struct ExtData {
  std::vector<std::size_t> offset;  // per arrow, into the h coordinates
  std::size_t dim = 0;
  std::vector<Row> cocycles;        // basis of Z
  std::vector<Row> complement;      // cocycles completing a basis of B to one of Z
};

// Extensions 0 -> N -> E -> M -> 0 with E_a = [[n_a, h_a], [0, m_a]].
ExtData ext_data(const PathAlgebra& alg, const Representation& m, const Representation& n) {
  const Fp f{m.p};
  const auto& arrows = alg.quiver().arrows;
  ExtData d;
  for (const auto& a : arrows) {
    d.offset.push_back(d.dim);
    d.dim += n.dims[a.target] * m.dims[a.source];
  }
  // cocycle equations: the off-diagonal block of every relation vanishes
  std::vector<Row> eqs;
  for (const auto& rel : alg.relations()) {
    if (rel.empty()) continue;
    const std::size_t s = rel[0].path.source, t = rel[0].path.target;
    std::vector<Row> block(n.dims[t] * m.dims[s], Row(d.dim, 0));
    for (const auto& term : rel) {
      const unsigned c = f.from_rational(term.coeff);
      const Path& path = term.path;
      for (std::size_t i = 0; i < path.arrows.size(); ++i) {
        const std::size_t k = path.arrows[i];
        const auto& a = arrows[k];
        // n-part after position i, m-part before it
        FpMatrix left = identity_matrix(n.dims[a.target]);
        for (std::size_t j = i + 1; j < path.arrows.size(); ++j) left = mat_mul(f, n.maps[path.arrows[j]], left);
        const FpMatrix right = path_matrix(f, m, path, 0, i);
        for (std::size_t x = 0; x < n.dims[a.target]; ++x)
          for (std::size_t y = 0; y < m.dims[a.source]; ++y) {
            const std::size_t var = d.offset[k] + x * m.dims[a.source] + y;
            for (std::size_t r = 0; r < n.dims[t]; ++r) {
              const unsigned l = left.at(r, x);
              if (!l) continue;
              for (std::size_t q = 0; q < m.dims[s]; ++q) {
                const unsigned rr = right.at(y, q);
                if (!rr) continue;
                auto& e = block[r * m.dims[s] + q][var];
                e = f.add(e, f.mul(c, f.mul(l, rr)));
              }
            }
          }
      }
    }
    for (auto& r : block) eqs.push_back(std::move(r));
  }
  d.cocycles = nullspace(f, std::move(eqs), d.dim);

  // coboundaries h_a = n_a phi_s - phi_t m_a, phi_v : M_v -> N_v
  std::vector<Row> bounds;
  for (std::size_t v = 0; v < m.dims.size(); ++v)
    for (std::size_t x = 0; x < n.dims[v]; ++x)
      for (std::size_t y = 0; y < m.dims[v]; ++y) {
        Row h(d.dim, 0);
        for (std::size_t k = 0; k < arrows.size(); ++k) {
          const std::size_t s = arrows[k].source, t = arrows[k].target;
          const std::size_t cols = m.dims[s];
          if (s == v)  // n_a phi_s: column y of phi is e_x
            for (std::size_t r = 0; r < n.dims[t]; ++r) {
              auto& e = h[d.offset[k] + r * cols + y];
              e = f.add(e, n.maps[k].at(r, x));
            }
          if (t == v)  // phi_t m_a: row x of phi is e_y
            for (std::size_t q = 0; q < cols; ++q) {
              auto& e = h[d.offset[k] + x * cols + q];
              e = f.sub(e, m.maps[k].at(y, q));
            }
        }
        bounds.push_back(std::move(h));
      }
  std::vector<Row> span = bounds;
  rref(f, span, d.dim);
  std::size_t rank = span.size();
  for (const auto& z : d.cocycles) {
    span.push_back(z);
    const std::size_t r = rank_of_rows(f, span, d.dim);
    if (r > rank) {
      rank = r;
      d.complement.push_back(z);
    } else {
      span.pop_back();
    }
  }
  return d;
}

Representation middle_term(const PathAlgebra& alg, const Representation& m, const Representation& n,
                           const ExtData& d, const Row& h) {
  Representation e;
  e.p = m.p;
  for (std::size_t v = 0; v < m.dims.size(); ++v) e.dims.push_back(n.dims[v] + m.dims[v]);
  const auto& arrows = alg.quiver().arrows;
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    const std::size_t s = arrows[k].source, t = arrows[k].target;
    FpMatrix a(e.dims[t], e.dims[s]);
    for (std::size_t i = 0; i < n.dims[t]; ++i)
      for (std::size_t j = 0; j < n.dims[s]; ++j) a.at(i, j) = n.maps[k].at(i, j);
    for (std::size_t i = 0; i < m.dims[t]; ++i)
      for (std::size_t j = 0; j < m.dims[s]; ++j) a.at(n.dims[t] + i, n.dims[s] + j) = m.maps[k].at(i, j);
    for (std::size_t i = 0; i < n.dims[t]; ++i)
      for (std::size_t j = 0; j < m.dims[s]; ++j) a.at(i, n.dims[s] + j) = h[d.offset[k] + i * m.dims[s] + j];
    e.maps.push_back(std::move(a));
  }
  return e;
}

}  // namespace

std::size_t ext_dim(const PathAlgebra& alg, const Representation& m, const Representation& n) {
  return ext_data(alg, m, n).complement.size();
}

// ---------------------------------------------------------------------------
// H^0 of complexes

Representation h0_representation(const PathAlgebra& alg, const TwoTermComplex& c, unsigned p) {
  const Fp f{p};
  const std::size_t nv = alg.num_vertices();
  // coordinates of e_v P^0: concatenated local bases of e_v A e_{zero[r]}
  std::vector<std::vector<std::size_t>> offset(nv, std::vector<std::size_t>(c.zero.size()));
  std::vector<std::size_t> total(nv, 0);
  for (std::size_t v = 0; v < nv; ++v)
    for (std::size_t r = 0; r < c.zero.size(); ++r) {
      offset[v][r] = total[v];
      total[v] += alg.block_dim(v, c.zero[r]);
    }
  auto coords = [&](std::size_t v, std::size_t r, const AlgElem& x, Row& out) {
    for (std::size_t l = 0; l < x.c.size(); ++l) out[offset[v][r] + l] = f.add(out[offset[v][r] + l], f.from_rational(x.c[l]));
  };

  // image of d at each vertex, in reduced echelon form
  std::vector<std::vector<Row>> image(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    for (std::size_t col = 0; col < c.minus.size(); ++col)
      for (std::size_t l = 0; l < alg.block_dim(v, c.minus[col]); ++l) {
        const AlgElem u = alg.basis_element(v, c.minus[col], l);
        Row img(total[v], 0);
        for (std::size_t r = 0; r < c.zero.size(); ++r) coords(v, r, alg.mul(u, c.d.a[r][col]), img);
        image[v].push_back(std::move(img));
      }
  }
  std::vector<std::vector<std::size_t>> pivots(nv), free(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    pivots[v] = rref(f, image[v], total[v]);
    std::vector<bool> is_piv(total[v], false);
    for (auto q : pivots[v]) is_piv[q] = true;
    for (std::size_t q = 0; q < total[v]; ++q)
      if (!is_piv[q]) free[v].push_back(q);
  }
  // quotient coordinates: reduce modulo the image, keep the free coordinates
  auto reduce = [&](std::size_t v, Row x) {
    for (std::size_t r = 0; r < pivots[v].size(); ++r) {
      const unsigned g = x[pivots[v][r]];
      if (!g) continue;
      for (std::size_t j = 0; j < x.size(); ++j) x[j] = f.sub(x[j], f.mul(g, image[v][r][j]));
    }
    return x;
  };

  Representation out;
  out.p = p;
  for (std::size_t v = 0; v < nv; ++v) out.dims.push_back(free[v].size());
  const auto& arrows = alg.quiver().arrows;
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    const std::size_t s = arrows[k].source, t = arrows[k].target;
    const AlgElem a = alg.path_element(Path{s, t, {k}});
    FpMatrix mat(out.dims[t], out.dims[s]);
    for (std::size_t j = 0; j < free[s].size(); ++j) {
      // basis vector free[s][j] lies in block r at local index l
      const std::size_t q = free[s][j];
      std::size_t r = 0;
      while (r + 1 < c.zero.size() && offset[s][r + 1] <= q) ++r;
      const AlgElem u = alg.basis_element(s, c.zero[r], q - offset[s][r]);
      Row y(total[t], 0);
      coords(t, r, alg.mul(a, u), y);
      y = reduce(t, std::move(y));
      for (std::size_t i = 0; i < free[t].size(); ++i) mat.at(i, j) = y[free[t][i]];
    }
    out.maps.push_back(std::move(mat));
  }
  const auto expected = h0_dim_vector(alg, c);
  for (std::size_t v = 0; v < nv; ++v)
    if (static_cast<long>(out.dims[v]) != expected[v])
      fail(ErrorCode::ShapeMismatch, "H0 changes dimension under reduction mod " + std::to_string(p));
  return out;
}

Representation projective_representation(const PathAlgebra& alg, std::size_t vertex, unsigned p) {
  return h0_representation(alg, TwoTermComplex::stalk(alg, {vertex}), p);
}

// ---------------------------------------------------------------------------
// enumeration

namespace {

bool connected_support(const PathAlgebra& alg, const std::vector<std::size_t>& dims) {
  const std::size_t nv = dims.size();
  std::vector<std::size_t> seen;
  std::vector<bool> in(nv, false);
  for (std::size_t v = 0; v < nv; ++v)
    if (dims[v]) {
      seen.push_back(v);
      in[v] = true;
      break;
    }
  if (seen.empty()) return false;
  for (std::size_t i = 0; i < seen.size(); ++i)
    for (const auto& a : alg.quiver().arrows) {
      const std::size_t u = seen[i];
      std::size_t w = nv;
      if (a.source == u) w = a.target;
      else if (a.target == u) w = a.source;
      if (w < nv && dims[w] && !in[w]) {
        in[w] = true;
        seen.push_back(w);
      }
    }
  for (std::size_t v = 0; v < nv; ++v)
    if (dims[v] && !in[v]) return false;
  return true;
}

Representation decode_rep(const PathAlgebra& alg, unsigned p, const std::vector<std::size_t>& dims, std::size_t code) {
  Representation m;
  m.p = p;
  m.dims = dims;
  for (const auto& a : alg.quiver().arrows) {
    FpMatrix x(dims[a.target], dims[a.source]);
    m.maps.push_back(std::move(x));
  }
  // the first entry of the first arrow is the most significant digit
  std::vector<std::uint8_t*> cells;
  for (auto& x : m.maps)
    for (auto& e : x.a) cells.push_back(&e);
  for (std::size_t i = cells.size(); i-- > 0;) {
    *cells[i] = static_cast<std::uint8_t>(code % p);
    code /= p;
  }
  return m;
}

}  // namespace

std::vector<Representation> enumerate_indecomposables(const PathAlgebra& alg, unsigned p,
                                                      const std::vector<std::size_t>& bound, const Caps& caps,
                                                      Exec exec) {
  const std::size_t nv = alg.num_vertices();
  if (bound.size() != nv) fail(ErrorCode::ShapeMismatch, "dimension bound needs one entry per vertex");
  if (p != 2 && p != 3) fail(ErrorCode::ValidationFailed, "oracle fields are F2 and F3");
  const auto& arrows = alg.quiver().arrows;

  // dimension vectors in lexicographic order
  std::vector<std::vector<std::size_t>> dimvecs;
  std::vector<std::size_t> d(nv, 0);
  while (true) {
    if (connected_support(alg, d)) dimvecs.push_back(d);
    std::size_t v = nv;
    while (v-- > 0) {
      if (d[v] < bound[v]) {
        ++d[v];
        break;
      }
      d[v] = 0;
    }
    if (v == static_cast<std::size_t>(-1)) break;
  }
  std::vector<std::size_t> counts;
  std::size_t space = 0;
  for (const auto& dv : dimvecs) {
    std::size_t entries = 0, n = 1;
    for (const auto& a : arrows) entries += dv[a.target] * dv[a.source];
    for (std::size_t e = 0; e < entries; ++e) {
      if (n > caps.oracle_space / p) fail(ErrorCode::SearchSpaceExceeded, "representation space exceeds the oracle cap");
      n *= p;
    }
    counts.push_back(n);
    space += n;
    if (space > caps.oracle_space) fail(ErrorCode::SearchSpaceExceeded, "representation space exceeds the oracle cap");
  }

  std::vector<Representation> classes;
  for (std::size_t di = 0; di < dimvecs.size(); ++di) {
    const auto& dv = dimvecs[di];
    auto found = kernels::gather<Representation>(
        counts[di],
        [&](std::size_t code, std::vector<Representation>& out) {
          Representation m = decode_rep(alg, p, dv, code);
          if (satisfies_relations(alg, m) && is_indecomposable(alg, m, caps)) out.push_back(std::move(m));
        },
        exec);
    const std::size_t first = classes.size();
    for (auto& m : found) {
      bool known = false;
      for (std::size_t k = first; k < classes.size() && !known; ++k) known = is_isomorphic(alg, classes[k], m, caps);
      if (!known) classes.push_back(std::move(m));
    }
  }
  return classes;
}

std::vector<Representation> enumerate_indecomposables(const PathAlgebra& alg, unsigned p, std::size_t bound,
                                                      const Caps& caps, Exec exec) {
  return enumerate_indecomposables(alg, p, std::vector<std::size_t>(alg.num_vertices(), bound), caps, exec);
}

// ---------------------------------------------------------------------------
// brute-force closed subsets

namespace {

struct Closure {
  std::size_t n = 0;
  std::vector<BitSet> quot1;                // quot1[i]: quotients of M_i
  std::vector<std::vector<BitSet>> quot2;   // quotients of M_i + M_j
  std::vector<std::vector<BitSet>> ext;     // summands of middle terms, M_i by M_j
  std::vector<BitSet> sub1;
  std::vector<std::vector<BitSet>> sub2;

  bool closed(const BitSet& s, bool serre) const {
    bool ok = true;
    s.for_each([&](std::size_t i) {
      if (!ok) return;
      if (!quot1[i].is_subset_of(s) || (serre && !sub1[i].is_subset_of(s))) ok = false;
      s.for_each([&](std::size_t j) {
        if (!ok) return;
        if (!quot2[i][j].is_subset_of(s) || !ext[i][j].is_subset_of(s)) ok = false;
        if (serre && !sub2[i][j].is_subset_of(s)) ok = false;
      });
    });
    return ok;
  }

  BitSet close(BitSet s, bool serre) const {
    while (true) {
      BitSet next = s;
      s.for_each([&](std::size_t i) {
        next |= quot1[i];
        if (serre) next |= sub1[i];
        s.for_each([&](std::size_t j) {
          next |= quot2[i][j];
          next |= ext[i][j];
          if (serre) next |= sub2[i][j];
        });
      });
      if (next == s) return s;
      s = std::move(next);
    }
  }
};

std::size_t identify(const PathAlgebra& alg, const std::vector<Representation>& ind, const Representation& x,
                     const Caps& caps) {
  for (std::size_t k = 0; k < ind.size(); ++k)
    if (is_isomorphic(alg, ind[k], x, caps)) return k;
  fail(ErrorCode::NotRepFiniteWithinBound,
       "indecomposable " + describe(alg, x) + " lies outside the enumerated classes");
}

Closure build_closure(const PathAlgebra& alg, const std::vector<Representation>& ind, bool serre, const Caps& caps,
                      Exec exec) {
  Closure c;
  c.n = ind.size();
  const std::size_t n = c.n;
  c.quot1.assign(n, BitSet(n));
  c.sub1.assign(n, BitSet(n));
  c.quot2.assign(n, std::vector<BitSet>(n, BitSet(n)));
  c.sub2 = c.quot2;
  c.ext = c.quot2;
  struct Cell {
    std::size_t i, j;
    BitSet quot, sub, ext;
  };
  auto cells = kernels::gather<Cell>(
      n * n,
      [&](std::size_t idx, std::vector<Cell>& out) {
        const std::size_t i = idx / n, j = idx % n;
        Cell cell{i, j, BitSet(n), BitSet(n), BitSet(n)};
        const Representation sum = direct_sum(ind[i], ind[j]);
        for (std::size_t k = 0; k < n; ++k) {
          if (has_epi(alg, sum, ind[k], caps)) cell.quot.set(k);
          if (serre && has_mono(alg, ind[k], sum, caps)) cell.sub.set(k);
        }
        // middle terms of 0 -> M_j -> E -> M_i -> 0, one per class of Ext^1
        const ExtData d = ext_data(alg, ind[i], ind[j]);
        const Fp f{ind[i].p};
        std::size_t total = 1;
        for (std::size_t k = 0; k < d.complement.size(); ++k) total *= f.p;
        for (std::size_t code = 1; code < total; ++code) {
          Row h(d.dim, 0);
          std::size_t cc = code;
          for (const auto& z : d.complement) {
            const unsigned a = static_cast<unsigned>(cc % f.p);
            cc /= f.p;
            for (std::size_t e = 0; e < d.dim; ++e) h[e] = f.add(h[e], f.mul(a, z[e]));
          }
          for (const auto& part : decompose(alg, middle_term(alg, ind[i], ind[j], d, h), caps))
            cell.ext.set(identify(alg, ind, part, caps));
        }
        out.push_back(std::move(cell));
      },
      exec);
  for (auto& cell : cells) {
    c.quot2[cell.i][cell.j] = std::move(cell.quot);
    c.sub2[cell.i][cell.j] = std::move(cell.sub);
    c.ext[cell.i][cell.j] = std::move(cell.ext);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (has_epi(alg, ind[i], ind[k], caps)) c.quot1[i].set(k);
      if (serre && has_mono(alg, ind[k], ind[i], caps)) c.sub1[i].set(k);
    }
  return c;
}

OracleLattice brute_closed(const PathAlgebra& alg, unsigned p, std::size_t bound, bool serre, const Caps& caps,
                           Exec exec) {
  OracleLattice out;
  out.indecomposables = enumerate_indecomposables(alg, p, bound, caps, exec);
  const std::size_t n = out.indecomposables.size();
  if (n >= 63 || (std::size_t{1} << n) > caps.subsets)
    fail(ErrorCode::SearchSpaceExceeded, "too many indecomposables for subset search");
  const Closure c = build_closure(alg, out.indecomposables, serre, caps, exec);

  std::vector<Element> els;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    BitSet s(n);
    for (std::size_t k = 0; k < n; ++k)
      if ((mask >> k) & 1) s.set(k);
    if (!c.closed(s, serre)) continue;
    std::string label = "{";
    bool first = true;
    s.for_each([&](std::size_t k) {
      label += (first ? "" : " ") + format_dims(out.indecomposables[k].dims);
      first = false;
    });
    els.push_back({"T" + std::to_string(out.members.size()), label + "}"});
    out.members.push_back(std::move(s));
  }
  const auto& members = out.members;
  out.poset = Poset::from_predicate(
      std::move(els), [&](std::size_t a, std::size_t b) { return members[a].is_subset_of(members[b]); }, caps, exec);

  // joins agree with the closure of unions
  for (std::size_t a = 0; a < members.size(); ++a)
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      auto j = try_join(out.poset, a, b);
      if (!j || members[*j] != c.close(members[a] | members[b], serre))
        fail(ErrorCode::Internal, "join differs from the closure of the union");
    }
  return out;
}

}  // namespace

OracleLattice brute_torsion_classes(const PathAlgebra& alg, unsigned p, std::size_t bound, const Caps& caps,
                                    Exec exec) {
  return brute_closed(alg, p, bound, false, caps, exec);
}

OracleLattice brute_serre(const PathAlgebra& alg, unsigned p, std::size_t bound, const Caps& caps, Exec exec) {
  return brute_closed(alg, p, bound, true, caps, exec);
}

}  // namespace tors
