#include "tors/complex.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "tors/error.hpp"

namespace tors {

MapMatrix MapMatrix::zero(const PathAlgebra& alg, std::vector<std::size_t> src, std::vector<std::size_t> tgt) {
  MapMatrix m;
  m.a.resize(tgt.size());
  for (std::size_t r = 0; r < tgt.size(); ++r)
    for (std::size_t c = 0; c < src.size(); ++c) m.a[r].push_back(alg.zero(src[c], tgt[r]));
  m.src = std::move(src);
  m.tgt = std::move(tgt);
  return m;
}

MapMatrix MapMatrix::identity(const PathAlgebra& alg, const std::vector<std::size_t>& vertices) {
  MapMatrix m = zero(alg, vertices, vertices);
  for (std::size_t i = 0; i < vertices.size(); ++i) m.a[i][i] = alg.idempotent(vertices[i]);
  return m;
}

bool MapMatrix::is_zero() const {
  for (const auto& row : a)
    for (const auto& x : row)
      if (!x.is_zero()) return false;
  return true;
}

MapMatrix compose(const PathAlgebra& alg, const MapMatrix& g, const MapMatrix& f) {
  if (f.tgt != g.src) fail(ErrorCode::ShapeMismatch, "composition of maps with different middle terms");
  MapMatrix out = MapMatrix::zero(alg, f.src, g.tgt);
  for (std::size_t s = 0; s < g.rows(); ++s)
    for (std::size_t r = 0; r < f.rows(); ++r) {
      if (g.a[s][r].is_zero()) continue;
      for (std::size_t c = 0; c < f.cols(); ++c) {
        if (f.a[r][c].is_zero()) continue;
        alg.add_to(out.a[s][c], alg.mul(f.a[r][c], g.a[s][r]));
      }
    }
  return out;
}

MapMatrix add(const PathAlgebra& alg, const MapMatrix& x, const MapMatrix& y) {
  if (x.src != y.src || x.tgt != y.tgt) fail(ErrorCode::ShapeMismatch, "sum of maps with different shapes");
  MapMatrix out = x;
  for (std::size_t r = 0; r < x.rows(); ++r)
    for (std::size_t c = 0; c < x.cols(); ++c) alg.add_to(out.a[r][c], y.a[r][c]);
  return out;
}

MapMatrix scaled(const PathAlgebra& alg, const MapMatrix& x, const Rational& s) {
  MapMatrix out = x;
  for (auto& row : out.a)
    for (auto& e : row) e = alg.scaled(e, s);
  return out;
}

bool is_radical(const PathAlgebra& alg, const MapMatrix& m) {
  for (const auto& row : m.a)
    for (const auto& x : row)
      if (alg.is_unit(x)) return false;
  return true;
}

MapMatrix submatrix(const MapMatrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  MapMatrix out;
  for (auto c : cols) out.src.push_back(m.src.at(c));
  for (auto r : rows) {
    out.tgt.push_back(m.tgt.at(r));
    std::vector<AlgElem> row;
    for (auto c : cols) row.push_back(m.a[r][c]);
    out.a.push_back(std::move(row));
  }
  return out;
}

MapMatrix block_diagonal(const PathAlgebra& alg, const MapMatrix& x, const MapMatrix& y) {
  auto src = x.src;
  src.insert(src.end(), y.src.begin(), y.src.end());
  auto tgt = x.tgt;
  tgt.insert(tgt.end(), y.tgt.begin(), y.tgt.end());
  MapMatrix out = MapMatrix::zero(alg, src, tgt);
  for (std::size_t r = 0; r < x.rows(); ++r)
    for (std::size_t c = 0; c < x.cols(); ++c) out.a[r][c] = x.a[r][c];
  for (std::size_t r = 0; r < y.rows(); ++r)
    for (std::size_t c = 0; c < y.cols(); ++c) out.a[x.rows() + r][x.cols() + c] = y.a[r][c];
  return out;
}

TwoTermComplex TwoTermComplex::stalk(const PathAlgebra& alg, const std::vector<std::size_t>& vertices) {
  return {{}, vertices, MapMatrix::zero(alg, {}, vertices)};
}

TwoTermComplex TwoTermComplex::shifted_stalk(const PathAlgebra& alg, const std::vector<std::size_t>& vertices) {
  return {vertices, {}, MapMatrix::zero(alg, vertices, {})};
}

TwoTermComplex TwoTermComplex::regular(const PathAlgebra& alg) {
  std::vector<std::size_t> v(alg.num_vertices());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = i;
  return stalk(alg, v);
}

TwoTermComplex TwoTermComplex::regular_shifted(const PathAlgebra& alg) {
  std::vector<std::size_t> v(alg.num_vertices());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = i;
  return shifted_stalk(alg, v);
}

std::vector<long> TwoTermComplex::p_minus(std::size_t n) const {
  std::vector<long> m(n, 0);
  for (auto v : minus) ++m.at(v);
  return m;
}

std::vector<long> TwoTermComplex::p_zero(std::size_t n) const {
  std::vector<long> m(n, 0);
  for (auto v : zero) ++m.at(v);
  return m;
}

std::vector<long> TwoTermComplex::g_vector(std::size_t n) const {
  auto g = p_zero(n);
  auto m = p_minus(n);
  for (std::size_t i = 0; i < n; ++i) g[i] -= m[i];
  return g;
}

namespace {

void check_matrix(const PathAlgebra& alg, const MapMatrix& m) {
  if (m.a.size() != m.tgt.size()) fail(ErrorCode::ShapeMismatch, "row count does not match the target");
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (m.a[r].size() != m.src.size()) fail(ErrorCode::ShapeMismatch, "column count does not match the source");
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const auto& x = m.a[r][c];
      if (x.left != m.src[c] || x.right != m.tgt[r] || x.c.size() != alg.block_dim(x.left, x.right))
        fail(ErrorCode::ShapeMismatch, "entry does not lie in the block of its row and column");
    }
  }
}

}  // namespace

void TwoTermComplex::check(const PathAlgebra& alg) const {
  if (d.src != minus || d.tgt != zero) fail(ErrorCode::ShapeMismatch, "differential does not match the terms");
  for (auto v : minus)
    if (v >= alg.num_vertices()) fail(ErrorCode::ShapeMismatch, "summand at an unknown vertex");
  for (auto v : zero)
    if (v >= alg.num_vertices()) fail(ErrorCode::ShapeMismatch, "summand at an unknown vertex");
  check_matrix(alg, d);
}

TwoTermComplex direct_sum(const PathAlgebra& alg, const TwoTermComplex& p, const TwoTermComplex& q) {
  TwoTermComplex s;
  s.d = block_diagonal(alg, p.d, q.d);
  s.minus = s.d.src;
  s.zero = s.d.tgt;
  return s;
}

TwoTermComplex direct_sum(const PathAlgebra& alg, const std::vector<TwoTermComplex>& parts) {
  TwoTermComplex s = TwoTermComplex::stalk(alg, {});
  for (const auto& p : parts) s = direct_sum(alg, s, p);
  return s;
}

ProjComplex ProjComplex::from_two_term(const TwoTermComplex& p) {
  ProjComplex c;
  c.lo = -1;
  c.terms = {p.minus, p.zero};
  c.d = {p.d};
  return c;
}

std::optional<TwoTermComplex> ProjComplex::as_two_term(const PathAlgebra& alg) const {
  std::vector<std::size_t> minus, zero;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const int deg = lo + static_cast<int>(k);
    if (terms[k].empty()) continue;
    if (deg == -1) minus = terms[k];
    else if (deg == 0) zero = terms[k];
    else return std::nullopt;
  }
  TwoTermComplex p{minus, zero, MapMatrix::zero(alg, minus, zero)};
  for (std::size_t k = 0; k + 1 < terms.size(); ++k)
    if (lo + static_cast<int>(k) == -1) p.d = d[k];
  return p;
}

void ProjComplex::check(const PathAlgebra& alg) const {
  if (terms.empty() ? !d.empty() : d.size() + 1 != terms.size())
    fail(ErrorCode::ShapeMismatch, "complex has the wrong number of differentials");
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (d[k].src != terms[k] || d[k].tgt != terms[k + 1])
      fail(ErrorCode::ShapeMismatch, "differential does not match its terms");
    check_matrix(alg, d[k]);
    if (k + 1 < d.size() && !compose(alg, d[k + 1], d[k]).is_zero())
      fail(ErrorCode::ShapeMismatch, "differentials do not compose to zero");
  }
}

ProjComplex shift(const PathAlgebra& alg, const ProjComplex& c, int k) {
  ProjComplex s = c;
  s.lo = c.lo - k;
  if (k % 2 != 0)
    for (auto& m : s.d) m = scaled(alg, m, -1);
  return s;
}

namespace {

// Removes index i from v.
template <class T>
void erase_at(std::vector<T>& v, std::size_t i) {
  v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
}

void drop_column(MapMatrix& m, std::size_t c) {
  erase_at(m.src, c);
  for (auto& row : m.a) erase_at(row, c);
}

void drop_row(MapMatrix& m, std::size_t r) {
  erase_at(m.tgt, r);
  erase_at(m.a, r);
}

// Splits off one contractible pair through the unit entry (r, c) of d[k].
void split_unit(const PathAlgebra& alg, ProjComplex& cx, std::size_t k, std::size_t r, std::size_t c) {
  MapMatrix& D = cx.d[k];
  const AlgElem u_inv = alg.local_inverse(D.a[r][c]);
  // Column operations clear row r: column c' += x * column c with
  // x = -D[r][c'] u^{-1}; the previous differential gets row c -= row c' * x.
  for (std::size_t cp = 0; cp < D.cols(); ++cp) {
    if (cp == c || D.a[r][cp].is_zero()) continue;
    AlgElem x = alg.scaled(alg.mul(D.a[r][cp], u_inv), -1);
    for (std::size_t s = 0; s < D.rows(); ++s)
      if (!D.a[s][c].is_zero()) alg.add_to(D.a[s][cp], alg.mul(x, D.a[s][c]));
    if (k > 0) {
      MapMatrix& E = cx.d[k - 1];
      for (std::size_t w = 0; w < E.cols(); ++w)
        if (!E.a[cp][w].is_zero()) alg.add_to(E.a[c][w], alg.mul(E.a[cp][w], x), -1);
    }
  }
  // Row operations clear column c: row r' += row r * y with
  // y = -u^{-1} D[r'][c]; the next differential gets column r -= y * column r'.
  for (std::size_t rp = 0; rp < D.rows(); ++rp) {
    if (rp == r || D.a[rp][c].is_zero()) continue;
    AlgElem y = alg.scaled(alg.mul(u_inv, D.a[rp][c]), -1);
    for (std::size_t t = 0; t < D.cols(); ++t)
      if (!D.a[r][t].is_zero()) alg.add_to(D.a[rp][t], alg.mul(D.a[r][t], y));
    if (k + 1 < cx.d.size()) {
      MapMatrix& F = cx.d[k + 1];
      for (std::size_t z = 0; z < F.rows(); ++z)
        if (!F.a[z][rp].is_zero()) alg.add_to(F.a[z][r], alg.mul(y, F.a[z][rp]), -1);
    }
  }
  // the pair (c, r) is now a direct summand
  drop_column(D, c);
  drop_row(D, r);
  erase_at(cx.terms[k], c);
  erase_at(cx.terms[k + 1], r);
  if (k > 0) drop_row(cx.d[k - 1], c);
  if (k + 1 < cx.d.size()) drop_column(cx.d[k + 1], r);
}

}  // namespace

ProjComplex reduce(const PathAlgebra& alg, ProjComplex cx) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k < cx.d.size() && !changed; ++k) {
      const MapMatrix& D = cx.d[k];
      for (std::size_t r = 0; r < D.rows() && !changed; ++r)
        for (std::size_t c = 0; c < D.cols() && !changed; ++c)
          if (alg.is_unit(D.a[r][c])) {
            split_unit(alg, cx, k, r, c);
            changed = true;
          }
    }
  }
  // trim empty terms at both ends
  while (!cx.terms.empty() && cx.terms.back().empty()) {
    cx.terms.pop_back();
    if (!cx.d.empty()) cx.d.pop_back();
  }
  while (!cx.terms.empty() && cx.terms.front().empty()) {
    cx.terms.erase(cx.terms.begin());
    if (!cx.d.empty()) cx.d.erase(cx.d.begin());
    ++cx.lo;
  }
  return cx;
}

TwoTermComplex reduce_complex(const PathAlgebra& alg, const TwoTermComplex& p) {
  auto r = reduce(alg, ProjComplex::from_two_term(p)).as_two_term(alg);
  if (!r) fail(ErrorCode::Internal, "reduction left the degrees -1..0");
  return *r;
}

ChainMap compose(const PathAlgebra& alg, const ChainMap& g, const ChainMap& f) {
  return {compose(alg, g.minus, f.minus), compose(alg, g.zero, f.zero)};
}

ChainMap identity_map(const PathAlgebra& alg, const TwoTermComplex& p) {
  return {MapMatrix::identity(alg, p.minus), MapMatrix::identity(alg, p.zero)};
}

ChainMap zero_map(const PathAlgebra& alg, const TwoTermComplex& p, const TwoTermComplex& q) {
  return {MapMatrix::zero(alg, p.minus, q.minus), MapMatrix::zero(alg, p.zero, q.zero)};
}

ChainMap add(const PathAlgebra& alg, const ChainMap& x, const ChainMap& y) {
  return {add(alg, x.minus, y.minus), add(alg, x.zero, y.zero)};
}

ChainMap scaled(const PathAlgebra& alg, const ChainMap& x, const Rational& a) {
  return {scaled(alg, x.minus, a), scaled(alg, x.zero, a)};
}

bool is_chain_map(const PathAlgebra& alg, const ChainMap& f, const TwoTermComplex& p, const TwoTermComplex& q) {
  if (f.minus.src != p.minus || f.minus.tgt != q.minus || f.zero.src != p.zero || f.zero.tgt != q.zero) return false;
  return compose(alg, q.d, f.minus) == compose(alg, f.zero, p.d);
}

ProjComplex cone(const PathAlgebra& alg, const ChainMap& f, const TwoTermComplex& p, const TwoTermComplex& q) {
  if (!is_chain_map(alg, f, p, q)) fail(ErrorCode::ShapeMismatch, "cone of a map that is not a chain map");
  ProjComplex c;
  c.lo = -2;
  std::vector<std::size_t> mid = p.zero;
  mid.insert(mid.end(), q.minus.begin(), q.minus.end());
  c.terms = {p.minus, mid, q.zero};
  MapMatrix d2 = MapMatrix::zero(alg, p.minus, mid);
  for (std::size_t r = 0; r < p.zero.size(); ++r)
    for (std::size_t col = 0; col < p.minus.size(); ++col) d2.a[r][col] = alg.scaled(p.d.a[r][col], -1);
  for (std::size_t r = 0; r < q.minus.size(); ++r)
    for (std::size_t col = 0; col < p.minus.size(); ++col) d2.a[p.zero.size() + r][col] = f.minus.a[r][col];
  MapMatrix d1 = MapMatrix::zero(alg, mid, q.zero);
  for (std::size_t r = 0; r < q.zero.size(); ++r) {
    for (std::size_t col = 0; col < p.zero.size(); ++col) d1.a[r][col] = f.zero.a[r][col];
    for (std::size_t col = 0; col < q.minus.size(); ++col) d1.a[r][p.zero.size() + col] = q.d.a[r][col];
  }
  c.d = {d2, d1};
  return c;
}

namespace {

std::string strip(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::size_t> parse_vertex_list(const PathAlgebra& alg, std::string s) {
  s = strip(s);
  if (s == "0") return {};
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') fail(ErrorCode::ParseError, "expected a list like [e1, e2]");
  s = s.substr(1, s.size() - 2);
  for (auto& ch : s)
    if (ch == ',') ch = ' ';
  std::vector<std::size_t> out;
  std::string tok;
  std::stringstream ss(s);
  while (ss >> tok) {
    std::string name = tok;
    if (name.size() > 1 && name[0] == 'e' && alg.quiver().vertex(name.substr(1))) name = name.substr(1);
    auto v = alg.quiver().vertex(name);
    if (!v) fail(ErrorCode::ParseError, "unknown vertex '" + tok + "'");
    out.push_back(*v);
  }
  return out;
}

// Splits "[[a, b], [c, d]]" into rows of cell strings.
std::vector<std::vector<std::string>> parse_cells(std::string s) {
  s = strip(s);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') fail(ErrorCode::ParseError, "expected a matrix like [[a]]");
  s = s.substr(1, s.size() - 2);
  std::vector<std::vector<std::string>> rows;
  std::size_t i = 0;
  while (i < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == ',') {
      ++i;
      continue;
    }
    if (s[i] != '[') fail(ErrorCode::ParseError, "expected '[' in matrix");
    auto close = s.find(']', i);
    if (close == std::string::npos) fail(ErrorCode::ParseError, "unbalanced '[' in matrix");
    std::string body = s.substr(i + 1, close - i - 1);
    std::vector<std::string> cells;
    std::stringstream ss(body);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(strip(cell));
    if (strip(body).empty()) cells.clear();
    rows.push_back(std::move(cells));
    i = close + 1;
  }
  return rows;
}

}  // namespace

TwoTermComplex parse_complex(const PathAlgebra& alg, const std::string& text) {
  std::string s = strip(text);
  if (s.rfind("P", 0) == 0) {
    auto eq = s.find('=');
    auto arrow = s.find("->");
    if (eq != std::string::npos && eq < arrow) s = strip(s.substr(eq + 1));
  }
  auto arrow = s.find("->");
  if (arrow == std::string::npos) fail(ErrorCode::ParseError, "expected '->' in complex literal");
  auto semi = s.find(';', arrow);
  auto minus = parse_vertex_list(alg, s.substr(0, arrow));
  auto zero = parse_vertex_list(alg, s.substr(arrow + 2, semi == std::string::npos ? std::string::npos : semi - arrow - 2));
  TwoTermComplex p{minus, zero, MapMatrix::zero(alg, minus, zero)};
  if (semi == std::string::npos) {
    if (!minus.empty() && !zero.empty()) fail(ErrorCode::ParseError, "missing differential");
    return p;
  }
  std::string rest = strip(s.substr(semi + 1));
  if (rest.rfind("d", 0) == 0) {
    auto eq = rest.find('=');
    if (eq == std::string::npos) fail(ErrorCode::ParseError, "expected 'd = [[...]]'");
    rest = rest.substr(eq + 1);
  }
  auto cells = parse_cells(rest);
  if (cells.size() != zero.size()) fail(ErrorCode::ParseError, "matrix needs one row per summand of P^0");
  for (std::size_t r = 0; r < zero.size(); ++r) {
    if (cells[r].size() != minus.size()) fail(ErrorCode::ParseError, "matrix needs one column per summand of P^-1");
    for (std::size_t c = 0; c < minus.size(); ++c) {
      if (cells[r][c] == "0") continue;
      auto terms = parse_combination(cells[r][c], alg.quiver());
      p.d.a[r][c] = alg.element(minus[c], zero[r], terms);
    }
  }
  return p;
}

std::string format_complex(const PathAlgebra& alg, const TwoTermComplex& p) {
  auto list = [&](const std::vector<std::size_t>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", e" : "e") + alg.quiver().vertices[v[i]];
    return s + "]";
  };
  std::string s = list(p.minus) + " -> " + list(p.zero) + " ; d = [";
  for (std::size_t r = 0; r < p.zero.size(); ++r) {
    s += r ? ", [" : "[";
    for (std::size_t c = 0; c < p.minus.size(); ++c) s += (c ? ", " : "") + alg.format(p.d.a[r][c]);
    s += "]";
  }
  return s + "]";
}

}  // namespace tors
