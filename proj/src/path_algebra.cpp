#include "tors/path_algebra.hpp"

#include <algorithm>
#include <cctype>
#include <tuple>
#include <map>
#include <set>
#include <sstream>

#include "tors/error.hpp"
#include "tors/poset_io.hpp"

namespace tors {

std::optional<std::size_t> Quiver::vertex(const std::string& name) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == name) return i;
  return std::nullopt;
}

std::optional<std::size_t> Quiver::arrow(const std::string& name) const {
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].name == name) return i;
  return std::nullopt;
}

void Quiver::validate() const {
  std::set<std::string> seen;
  for (const auto& v : vertices)
    if (!seen.insert(v).second) fail(ErrorCode::ParseError, "duplicate vertex '" + v + "'");
  seen.clear();
  for (const auto& a : arrows) {
    if (!seen.insert(a.name).second) fail(ErrorCode::ParseError, "duplicate arrow '" + a.name + "'");
    if (a.source >= vertices.size() || a.target >= vertices.size())
      fail(ErrorCode::ParseError, "arrow '" + a.name + "' has an undeclared endpoint");
  }
}

bool path_less(const Path& a, const Path& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  if (a.length() == 0) return a.source < b.source;
  return std::lexicographical_compare(a.arrows.rbegin(), a.arrows.rend(), b.arrows.rbegin(), b.arrows.rend());
}

std::string to_string(Field f) {
  switch (f) {
    case Field::Q: return "Q";
    case Field::F2: return "F2";
    case Field::F3: return "F3";
  }
  return "Q";
}

unsigned characteristic(Field f) {
  switch (f) {
    case Field::Q: return 0;
    case Field::F2: return 2;
    case Field::F3: return 3;
  }
  return 0;
}

bool AlgElem::is_zero() const {
  for (const auto& x : c)
    if (sgn(x) != 0) return false;
  return true;
}

struct PathAlgebra::Impl {
  Quiver quiver;
  std::vector<Relation> relations;
  Field field = Field::Q;
  std::size_t level = 0;  // paths of this length vanish
  std::vector<Path> basis;
  std::vector<std::size_t> local;
  std::vector<std::vector<std::vector<std::size_t>>> blocks;
  // normal forms: every path of length < level
  std::map<std::pair<std::size_t, std::vector<std::size_t>>, SparseVec> normal;  // -> global coords
  std::vector<SparseVec> table;  // dim * dim, local coords of the product block

  std::size_t n() const { return quiver.vertices.size(); }
  std::size_t dim() const { return basis.size(); }

  SparseVec normal_global(const Path& p) const {
    if (p.length() >= level) return {};
    auto it = normal.find({p.source, p.arrows});
    if (it == normal.end()) fail(ErrorCode::Internal, "missing normal form");
    return it->second;
  }
};

namespace {

Path concat(const Path& first, const Path& then) {
  Path p;
  p.source = first.source;
  p.target = then.target;
  p.arrows = first.arrows;
  p.arrows.insert(p.arrows.end(), then.arrows.begin(), then.arrows.end());
  return p;
}

// All paths of length <= maxlen grouped by length.
std::vector<std::vector<Path>> paths_up_to(const Quiver& q, std::size_t maxlen, std::size_t cap) {
  std::vector<std::vector<Path>> by_len(maxlen + 1);
  for (std::size_t v = 0; v < q.vertices.size(); ++v) by_len[0].push_back({v, v, {}});
  std::size_t total = by_len[0].size();
  for (std::size_t len = 1; len <= maxlen; ++len) {
    for (const auto& p : by_len[len - 1])
      for (std::size_t a = 0; a < q.arrows.size(); ++a)
        if (q.arrows[a].source == p.target) {
          Path np = p;
          np.arrows.push_back(a);
          np.target = q.arrows[a].target;
          by_len[len].push_back(std::move(np));
          if (++total > cap)
            fail(ErrorCode::NotFiniteDimensional, "more than " + std::to_string(cap) + " paths before stabilization");
        }
    std::sort(by_len[len].begin(), by_len[len].end(), path_less);
  }
  return by_len;
}

}  // namespace

PathAlgebra PathAlgebra::build(Quiver quiver, std::vector<Relation> relations, std::size_t length_cap, Field field,
                               std::size_t path_cap) {
  quiver.validate();
  auto impl = std::make_shared<Impl>();
  impl->field = field;

  // clean relations: merge duplicate paths, drop zero terms, check shape
  std::vector<Relation> rels;
  for (auto& r : relations) {
    std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::pair<Rational, Path>> merged;
    for (auto& t : r) {
      auto& slot = merged[{t.path.source, t.path.arrows}];
      slot.first += t.coeff;
      slot.second = t.path;
    }
    Relation clean;
    for (auto& [k, v] : merged)
      if (sgn(v.first) != 0) clean.push_back({v.first, v.second});
    if (clean.empty()) continue;
    for (const auto& t : clean) {
      if (t.path.length() < 2)
        fail(ErrorCode::NotAdmissible, "relation has a term of length " + std::to_string(t.path.length()));
      if (t.path.source != clean[0].path.source || t.path.target != clean[0].path.target)
        fail(ErrorCode::NotAdmissible, "relation terms are not parallel paths");
    }
    rels.push_back(std::move(clean));
  }
  impl->quiver = std::move(quiver);
  impl->relations = rels;
  const Quiver& q = impl->quiver;

  bool certified = false;
  std::vector<std::vector<Path>> paths;
  std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> column;
  std::vector<Path> columns;
  EchelonBasis ideal;
  std::size_t level = 1;
  for (; level <= length_cap; ++level) {
    paths = paths_up_to(q, level, path_cap);
    // column 0 is the largest path
    columns.clear();
    column.clear();
    for (std::size_t len = level + 1; len-- > 0;)
      for (std::size_t k = paths[len].size(); k-- > 0;) {
        column[{paths[len][k].source, paths[len][k].arrows}] = columns.size();
        columns.push_back(paths[len][k]);
      }
    ideal = EchelonBasis();
    for (const auto& r : rels) {
      std::size_t minlen = level + 1;
      for (const auto& t : r) minlen = std::min(minlen, t.path.length());
      if (minlen > level) continue;
      const std::size_t s = r[0].path.source, t = r[0].path.target;
      for (std::size_t lv = 0; lv + minlen <= level; ++lv)
        for (const auto& v : paths[lv]) {
          if (v.target != s) continue;
          for (std::size_t lu = 0; lv + lu + minlen <= level; ++lu)
            for (const auto& u : paths[lu]) {
              if (u.source != t) continue;
              std::vector<std::pair<std::size_t, Rational>> entries;
              for (const auto& term : r) {
                Path p = concat(concat(v, term.path), u);
                if (p.length() > level) continue;
                entries.emplace_back(column.at({p.source, p.arrows}), term.coeff);
              }
              ideal.insert(collect(std::move(entries)));
            }
        }
    }
    bool all_in = true;
    for (const auto& p : paths[level])
      if (!ideal.is_pivot(column.at({p.source, p.arrows}))) {
        all_in = false;
        break;
      }
    if (all_in) {
      certified = true;
      break;
    }
  }
  if (!certified)
    fail(ErrorCode::NotFiniteDimensional,
         "path ideal does not stabilize below length " + std::to_string(length_cap));
  impl->level = level;

  // basis: non-pivot paths of length < level
  for (std::size_t len = 0; len < level; ++len)
    for (const auto& p : paths[len])
      if (!ideal.is_pivot(column.at({p.source, p.arrows}))) impl->basis.push_back(p);
  std::sort(impl->basis.begin(), impl->basis.end(), path_less);
  const std::size_t n = q.vertices.size();
  impl->blocks.assign(n, std::vector<std::vector<std::size_t>>(n));
  impl->local.resize(impl->basis.size());
  std::map<std::size_t, std::size_t> col_to_global;
  for (std::size_t g = 0; g < impl->basis.size(); ++g) {
    const auto& p = impl->basis[g];
    auto& b = impl->blocks[p.target][p.source];
    impl->local[g] = b.size();
    b.push_back(g);
    col_to_global[column.at({p.source, p.arrows})] = g;
  }
  for (std::size_t len = 0; len < level; ++len)
    for (const auto& p : paths[len]) {
      SparseVec v = SparseVec::unit(column.at({p.source, p.arrows}));
      ideal.reduce(v);
      std::vector<std::pair<std::size_t, Rational>> entries;
      for (auto& [c, x] : v.e) entries.emplace_back(col_to_global.at(c), x);
      impl->normal[{p.source, p.arrows}] = collect(std::move(entries));
    }

  const std::size_t dim = impl->basis.size();
  impl->table.assign(dim * dim, {});
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b) {
      const auto& pa = impl->basis[a];
      const auto& pb = impl->basis[b];
      if (pb.target != pa.source) continue;
      SparseVec g = impl->normal_global(concat(pb, pa));
      std::vector<std::pair<std::size_t, Rational>> entries;
      for (auto& [idx, x] : g.e) entries.emplace_back(impl->local[idx], x);
      impl->table[a * dim + b] = collect(std::move(entries));
    }

  PathAlgebra alg;
  alg.impl_ = impl;

  // associativity and unit checks, exhaustive on small algebras, strided otherwise
  const std::size_t stride = dim <= 40 ? 1 : dim / 40 + 1;
  for (std::size_t a = 0; a < dim; a += stride)
    for (std::size_t b = 0; b < dim; b += stride)
      for (std::size_t c = 0; c < dim; c += stride) {
        const auto &pa = impl->basis[a], &pb = impl->basis[b], &pc = impl->basis[c];
        if (pa.source != pb.target || pb.source != pc.target) continue;
        auto x = alg.basis_element(pa.target, pa.source, impl->local[a]);
        auto y = alg.basis_element(pb.target, pb.source, impl->local[b]);
        auto z = alg.basis_element(pc.target, pc.source, impl->local[c]);
        if (!(alg.mul(alg.mul(x, y), z) == alg.mul(x, alg.mul(y, z))))
          fail(ErrorCode::Internal, "multiplication is not associative");
      }
  for (std::size_t a = 0; a < dim; ++a) {
    const auto& p = impl->basis[a];
    auto x = alg.basis_element(p.target, p.source, impl->local[a]);
    if (!(alg.mul(alg.idempotent(p.target), x) == x) || !(alg.mul(x, alg.idempotent(p.source)) == x))
      fail(ErrorCode::Internal, "idempotents do not act as units");
  }
  return alg;
}

const Quiver& PathAlgebra::quiver() const { return impl_->quiver; }
const std::vector<Relation>& PathAlgebra::relations() const { return impl_->relations; }
Field PathAlgebra::field() const { return impl_->field; }
std::size_t PathAlgebra::num_vertices() const { return impl_->n(); }
std::size_t PathAlgebra::dim() const { return impl_->dim(); }
std::size_t PathAlgebra::nilpotency_length() const { return impl_->level; }
const std::vector<Path>& PathAlgebra::basis() const { return impl_->basis; }

const std::vector<std::size_t>& PathAlgebra::block(std::size_t left, std::size_t right) const {
  return impl_->blocks.at(left).at(right);
}

std::size_t PathAlgebra::local_index(std::size_t global) const { return impl_->local.at(global); }

std::vector<std::vector<std::size_t>> PathAlgebra::cartan_matrix() const {
  const std::size_t n = num_vertices();
  std::vector<std::vector<std::size_t>> c(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c[i][j] = block_dim(i, j);
  return c;
}

std::vector<AlgElem> PathAlgebra::hom_projectives(std::size_t i, std::size_t j) const {
  std::vector<AlgElem> out;
  for (std::size_t k = 0; k < block_dim(i, j); ++k) out.push_back(basis_element(i, j, k));
  return out;
}

AlgElem PathAlgebra::zero(std::size_t left, std::size_t right) const {
  return {left, right, std::vector<Rational>(block_dim(left, right))};
}

AlgElem PathAlgebra::idempotent(std::size_t v) const {
  AlgElem e = zero(v, v);
  e.c.at(0) = 1;
  return e;
}

AlgElem PathAlgebra::basis_element(std::size_t left, std::size_t right, std::size_t local) const {
  AlgElem e = zero(left, right);
  e.c.at(local) = 1;
  return e;
}

AlgElem PathAlgebra::element(std::size_t left, std::size_t right, const std::vector<Term>& terms) const {
  AlgElem e = zero(left, right);
  for (const auto& t : terms) {
    if (t.path.source != right || t.path.target != left)
      fail(ErrorCode::ShapeMismatch, "path " + path_name(t.path) + " does not lie in the requested block");
    for (const auto& [g, x] : impl_->normal_global(t.path).e) e.c[impl_->local[g]] += t.coeff * x;
  }
  return e;
}

AlgElem PathAlgebra::path_element(const Path& p) const { return element(p.target, p.source, {{Rational(1), p}}); }

const SparseVec& PathAlgebra::structure(std::size_t a, std::size_t b) const { return impl_->table[a * dim() + b]; }

AlgElem PathAlgebra::mul(const AlgElem& x, const AlgElem& y) const {
  if (x.right != y.left) fail(ErrorCode::ShapeMismatch, "product of incompatible blocks");
  AlgElem out = zero(x.left, y.right);
  const auto& bx = block(x.left, x.right);
  const auto& by = block(y.left, y.right);
  Rational t;
  for (std::size_t i = 0; i < x.c.size(); ++i) {
    if (sgn(x.c[i]) == 0) continue;
    for (std::size_t j = 0; j < y.c.size(); ++j) {
      if (sgn(y.c[j]) == 0) continue;
      t = x.c[i] * y.c[j];
      for (const auto& [k, v] : structure(bx[i], by[j]).e) out.c[k] += t * v;
    }
  }
  return out;
}

AlgElem PathAlgebra::add(const AlgElem& x, const AlgElem& y) const {
  AlgElem out = x;
  add_to(out, y);
  return out;
}

AlgElem PathAlgebra::sub(const AlgElem& x, const AlgElem& y) const {
  AlgElem out = x;
  add_to(out, y, -1);
  return out;
}

AlgElem PathAlgebra::scaled(const AlgElem& x, const Rational& a) const {
  AlgElem out = x;
  for (auto& v : out.c) v *= a;
  return out;
}

void PathAlgebra::add_to(AlgElem& x, const AlgElem& y, const Rational& a) const {
  if (x.left != y.left || x.right != y.right) fail(ErrorCode::ShapeMismatch, "sum of elements from different blocks");
  for (std::size_t i = 0; i < x.c.size(); ++i)
    if (sgn(y.c[i]) != 0) x.c[i] += a * y.c[i];
}

Rational PathAlgebra::trivial_coeff(const AlgElem& x) const {
  if (x.left != x.right || x.c.empty()) return 0;
  return x.c[0];
}

bool PathAlgebra::is_unit(const AlgElem& x) const { return sgn(trivial_coeff(x)) != 0; }

AlgElem PathAlgebra::local_inverse(const AlgElem& x) const {
  const Rational lambda = trivial_coeff(x);
  if (sgn(lambda) == 0) fail(ErrorCode::Internal, "element is not a unit of its local ring");
  // x = lambda (e + m) with m radical; x^{-1} = lambda^{-1} sum_k (-m)^k
  AlgElem m = scaled(x, 1 / lambda);
  m.c[0] = 0;
  AlgElem minus_m = scaled(m, -1);
  AlgElem sum = idempotent(x.left);
  AlgElem power = idempotent(x.left);
  for (std::size_t k = 1; k < nilpotency_length() + 1; ++k) {
    power = mul(power, minus_m);
    if (power.is_zero()) break;
    add_to(sum, power);
  }
  return scaled(sum, 1 / lambda);
}

std::string PathAlgebra::path_name(const Path& p) const {
  if (p.length() == 0) return "e" + quiver().vertices[p.source];
  std::string s;
  for (std::size_t k = p.arrows.size(); k-- > 0;) {
    s += quiver().arrows[p.arrows[k]].name;
    if (k) s += "*";
  }
  return s;
}

std::string PathAlgebra::format(const AlgElem& x) const {
  std::string s;
  const auto& b = block(x.left, x.right);
  for (std::size_t i = 0; i < x.c.size(); ++i) {
    if (sgn(x.c[i]) == 0) continue;
    Rational a = x.c[i];
    if (s.empty()) {
      if (sgn(a) < 0) s += "-";
    } else {
      s += sgn(a) < 0 ? " - " : " + ";
    }
    Rational abs_a = abs(a);
    if (abs_a != 1) s += abs_a.get_str() + "*";
    s += path_name(basis()[b[i]]);
  }
  return s.empty() ? "0" : s;
}

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool parse_rational(const std::string& tok, Rational& out) {
  if (tok.empty()) return false;
  std::size_t slash = 0;
  for (std::size_t i = 0; i < tok.size(); ++i) {
    if (tok[i] == '/') {
      if (slash || i == 0 || i + 1 == tok.size()) return false;
      slash = i;
    } else if (!std::isdigit(static_cast<unsigned char>(tok[i]))) {
      return false;
    }
  }
  out = Rational(tok);
  if (slash && out.get_den() == 0) return false;
  out.canonicalize();
  return true;
}

}  // namespace

std::vector<Term> parse_combination(const std::string& text, const Quiver& q) {
  std::vector<std::pair<int, std::string>> raw;
  std::string cur;
  int sign = 1;
  for (char ch : text) {
    if (ch == '+' || ch == '-') {
      if (!trim(cur).empty()) {
        raw.emplace_back(sign, cur);
        cur.clear();
        sign = 1;
      }
      if (ch == '-') sign = -sign;
      continue;
    }
    cur += ch;
  }
  if (!trim(cur).empty()) raw.emplace_back(sign, cur);
  else if (!raw.empty()) fail(ErrorCode::ParseError, "dangling sign in '" + trim(text) + "'");
  if (raw.empty()) fail(ErrorCode::ParseError, "empty combination");

  std::vector<Term> terms;
  for (auto& [sg, body] : raw) {
    std::vector<std::string> factors;
    std::stringstream ss(body);
    std::string f;
    while (std::getline(ss, f, '*')) {
      f = trim(f);
      if (f.empty()) fail(ErrorCode::ParseError, "empty factor in '" + trim(body) + "'");
      factors.push_back(f);
    }
    Rational coeff = sg;
    std::vector<std::size_t> written;
    std::optional<std::size_t> idem;
    for (const auto& fac : factors) {
      Rational r;
      if (parse_rational(fac, r)) {
        coeff *= r;
      } else if (auto a = q.arrow(fac)) {
        written.push_back(*a);
      } else if (fac.size() > 1 && fac[0] == 'e' && q.vertex(fac.substr(1))) {
        auto v = *q.vertex(fac.substr(1));
        if (idem && *idem != v) fail(ErrorCode::ParseError, "product of distinct idempotents in '" + trim(body) + "'");
        idem = v;
      } else {
        fail(ErrorCode::ParseError, "unknown factor '" + fac + "'");
      }
    }
    Term t;
    t.coeff = coeff;
    if (written.empty()) {
      if (!idem) fail(ErrorCode::ParseError, "term '" + trim(body) + "' has no path");
      t.path = {*idem, *idem, {}};
    } else {
      t.path.arrows.assign(written.rbegin(), written.rend());
      t.path.source = q.arrows[t.path.arrows.front()].source;
      t.path.target = q.arrows[t.path.arrows.back()].target;
      for (std::size_t k = 1; k < t.path.arrows.size(); ++k)
        if (q.arrows[t.path.arrows[k - 1]].target != q.arrows[t.path.arrows[k]].source)
          fail(ErrorCode::ParseError, "'" + trim(body) + "' is not a path");
      if (idem && *idem != t.path.source && *idem != t.path.target)
        fail(ErrorCode::ParseError, "idempotent does not match path in '" + trim(body) + "'");
    }
    terms.push_back(std::move(t));
  }
  return terms;
}

AlgebraSpec parse_algebra_text(const std::string& text) {
  AlgebraSpec spec;
  std::vector<std::pair<std::size_t, std::string>> relation_lines;
  std::vector<std::tuple<std::size_t, std::string, std::string, std::string>> arrow_lines;
  bool have_vertices = false;
  std::stringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  auto err = [&](const std::string& msg) { fail(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": " + msg); };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    line = trim(line);
    if (line.empty()) continue;
    if (line.rfind("arrow ", 0) == 0) {
      auto rest = line.substr(6);
      auto colon = rest.find(':');
      auto arrow = rest.find("->");
      if (colon == std::string::npos || arrow == std::string::npos || arrow < colon) err("expected 'arrow NAME : S -> T'");
      auto name = trim(rest.substr(0, colon));
      auto s = trim(rest.substr(colon + 1, arrow - colon - 1));
      auto t = trim(rest.substr(arrow + 2));
      if (name.empty() || std::isdigit(static_cast<unsigned char>(name[0]))) err("bad arrow name '" + name + "'");
      arrow_lines.emplace_back(lineno, name, s, t);
      continue;
    }
    if (line.rfind("relation ", 0) == 0) {
      relation_lines.emplace_back(lineno, line.substr(9));
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos) err("expected 'key = value'");
    auto key = trim(line.substr(0, eq));
    auto value = trim(line.substr(eq + 1));
    if (key == "field") {
      if (value == "Q") spec.field = Field::Q;
      else if (value == "F2") spec.field = Field::F2;
      else if (value == "F3") spec.field = Field::F3;
      else err("unknown field '" + value + "'");
    } else if (key == "vertices") {
      std::stringstream vs(value);
      std::string v;
      while (vs >> v) spec.quiver.vertices.push_back(v);
      have_vertices = true;
    } else if (key == "length_cap") {
      try {
        spec.length_cap = std::stoul(value);
      } catch (...) {
        err("bad length_cap");
      }
      if (spec.length_cap == 0) err("length_cap must be positive");
    } else if (key == "name") {
      spec.name = value;
    } else {
      err("unknown key '" + key + "'");
    }
  }
  if (!have_vertices) fail(ErrorCode::ParseError, "missing 'vertices' line");
  for (auto& [ln, name, s, t] : arrow_lines) {
    lineno = ln;
    auto vs = spec.quiver.vertex(s);
    auto vt = spec.quiver.vertex(t);
    if (!vs || !vt) err("arrow '" + name + "' has an undeclared endpoint");
    if (spec.quiver.arrow(name)) err("duplicate arrow '" + name + "'");
    spec.quiver.arrows.push_back({name, *vs, *vt});
  }
  try {
    spec.quiver.validate();
  } catch (const Error& e) {
    fail(ErrorCode::ParseError, e.what());
  }
  for (auto& [ln, body] : relation_lines) {
    lineno = ln;
    try {
      spec.relations.push_back(parse_combination(body, spec.quiver));
    } catch (const Error& e) {
      err(e.what());
    }
  }
  return spec;
}

PathAlgebra build_algebra(const AlgebraSpec& spec) {
  return PathAlgebra::build(spec.quiver, spec.relations, spec.length_cap, spec.field);
}

PathAlgebra load_algebra(const std::string& path) { return build_algebra(parse_algebra_text(read_text_file(path))); }

}  // namespace tors
