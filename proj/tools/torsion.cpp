// Command-line front end: algebra info, silting and torsion lattices,
// spectrum classification, oracle cross-checks and fixture export.

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "tors/error.hpp"
#include "tors/oracle.hpp"
#include "tors/poset_io.hpp"
#include "tors/resources.hpp"
#include "tors/silting.hpp"
#include "tors/spectrum.hpp"

using namespace tors;

namespace {

enum Exit { kOk = 0, kFailure = 1, kUsage = 2, kCap = 3, kInvalid = 4, kMismatch = 5 };

int exit_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::ParseError:
    case ErrorCode::ShapeMismatch:
    case ErrorCode::NotAdmissible:
    case ErrorCode::NotFiniteDimensional:
    case ErrorCode::UnknownElement:
    case ErrorCode::CycleDetected:
    case ErrorCode::DuplicateId:
      return kUsage;
    case ErrorCode::CapExceeded:
    case ErrorCode::SizeCap:
    case ErrorCode::SearchSpaceExceeded:
      return kCap;
    case ErrorCode::ValidationFailed:
    case ErrorCode::NotRepFiniteWithinBound:
    case ErrorCode::NotPresilting:
    case ErrorCode::NotSilting:
      return kInvalid;
    default:
      return kFailure;
  }
}

struct Options {
  std::size_t cap = 10'000;
  std::string format = "summary";
  std::string out;
  std::string fixture;
  std::string what = "compatible";
  std::string input;
  std::string spec_arg;
  std::string algebra;
  bool corpus = false;
  bool any_algebra = false;
  std::size_t dim_bound = 3;
  unsigned prime = 2;
};

const std::vector<std::string> kCorpus = {"a1", "a2", "a3", "kxk", "dual_numbers", "cyclic_zero"};

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) fail(ErrorCode::ParseError, "cannot write " + o.out);
  f << text;
}

std::string render_poset(const Options& o, const Poset& p, const std::string& name) {
  return render(p, parse_format(o.format), name);
}

// A path on disk, or the name of a builtin algebra.
PathAlgebra load_algebra_arg(const std::string& arg) {
  if (std::filesystem::exists(arg)) return load_algebra(arg);
  if (auto r = resource("algebras/" + arg + ".alg")) return build_algebra(parse_algebra_text(std::string(*r)));
  fail(ErrorCode::ParseError, "no algebra file or builtin named '" + arg + "'");
}

std::string algebra_arg(const Options& o) {
  if (!o.input.empty()) return o.input;
  if (!o.algebra.empty()) return o.algebra;
  if (o.fixture == "dynkin-a2") return "a2";
  if (o.fixture == "kronecker") return "kronecker";
  if (o.fixture == "paper36") return "cyclic_zero";
  fail(ErrorCode::ParseError, "no algebra given");
}

SpecFile load_spec_arg(const Options& o, const std::string& arg) {
  if (!arg.empty()) {
    if (std::filesystem::exists(arg)) return load_spec_file(arg);
    if (resource("spectra/" + arg + ".spec")) return builtin_spec(arg);
    fail(ErrorCode::ParseError, "no spectrum file or builtin named '" + arg + "'");
  }
  if (o.fixture == "paper36") return builtin_spec("paper36");
  if (o.fixture == "dynkin-a2") return builtin_spec("chain2_a2");
  fail(ErrorCode::ParseError, "no spectrum given");
}

// point, chainN, antichainN, or a spectrum file.
Poset spec_poset(const Options& o, const std::string& arg) {
  if (arg == "point") return chain(1, "p");
  auto number = [&](const std::string& prefix) -> std::optional<std::size_t> {
    if (arg.rfind(prefix, 0) != 0 || arg.size() == prefix.size()) return std::nullopt;
    const std::string rest = arg.substr(prefix.size());
    if (rest.find_first_not_of("0123456789") != std::string::npos) return std::nullopt;
    return std::stoul(rest);
  };
  if (auto n = number("chain")) return chain(*n, "p");
  if (auto n = number("antichain")) return antichain(*n, "p");
  return load_spec_arg(o, arg).model.spec;
}

// Dynkin quiver algebra with a fixed orientation: A_n linear, D_n and E_n
// with the branch vertex third from the end of the long arm.
PathAlgebra dynkin_algebra(const std::string& type) {
  if (type.size() < 2) fail(ErrorCode::ParseError, "Dynkin type like A3, D4, E6");
  const char kind = static_cast<char>(std::toupper(static_cast<unsigned char>(type[0])));
  const std::string digits = type.substr(1);
  if (digits.find_first_not_of("0123456789") != std::string::npos) fail(ErrorCode::ParseError, "bad Dynkin type " + type);
  const std::size_t n = std::stoul(digits);
  std::ostringstream os;
  os << "name = " << type << "\nvertices =";
  for (std::size_t v = 1; v <= n; ++v) os << " " << v;
  os << "\n";
  std::size_t arrow = 0;
  auto add = [&](std::size_t s, std::size_t t) { os << "arrow a" << ++arrow << " : " << s << " -> " << t << "\n"; };
  if (kind == 'A' && n >= 1) {
    for (std::size_t v = 1; v < n; ++v) add(v, v + 1);
  } else if (kind == 'D' && n >= 4) {
    for (std::size_t v = 1; v + 2 < n; ++v) add(v, v + 1);
    add(n - 2, n);
  } else if (kind == 'E' && n >= 6 && n <= 8) {
    for (std::size_t v = 1; v + 1 < n; ++v) add(v, v + 1);
    add(3, n);
  } else {
    fail(ErrorCode::ParseError, "unsupported Dynkin type " + type);
  }
  return build_algebra(parse_algebra_text(os.str()));
}

Caps caps_of(const Options& o) {
  Config c;
  c.caps.silting_objects = o.cap;
  c.format = parse_format(o.format);
  c.validate();
  return c.caps;
}

int cmd_info(const Options& o) {
  const auto alg = load_algebra_arg(algebra_arg(o));
  std::ostringstream os;
  os << "dim " << alg.dim() << "\n";
  os << "vertices " << alg.num_vertices() << "\n";
  os << "basis";
  for (const auto& p : alg.basis()) os << " " << alg.path_name(p);
  os << "\ncartan\n";
  for (const auto& row : alg.cartan_matrix()) {
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "  ") << row[j];
    os << "\n";
  }
  emit(o, os.str());
  return kOk;
}

int cmd_2silt(const Options& o) {
  const auto alg = load_algebra_arg(algebra_arg(o));
  try {
    const auto s = enumerate_2silt(alg, caps_of(o).silting_objects);
    emit(o, render_poset(o, s.poset, "silt"));
    return kOk;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::CapExceeded) throw;
    std::cerr << "not certified finite: more than " << o.cap << " two-term silting objects\n";
    return kCap;
  }
}

int cmd_tors(const Options& o) {
  const auto alg = load_algebra_arg(algebra_arg(o));
  try {
    const auto s = tors_lattice(alg, caps_of(o).silting_objects);
    emit(o, render_poset(o, s.poset, "tors"));
    return kOk;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::CapExceeded) throw;
    std::cerr << "not certified finite: more than " << o.cap << " torsion classes reached\n";
    return kCap;
  }
}

int cmd_cambrian(const Options& o) {
  const auto alg = dynkin_algebra(o.input);
  const Poset spec = spec_poset(o, o.spec_arg.empty() ? "point" : o.spec_arg);
  const auto h = cambrian_classification(alg, spec, caps_of(o));
  emit(o, render_poset(o, h.poset, "cambrian"));
  return kOk;
}

int cmd_classify(const Options& o) {
  const Caps caps = caps_of(o);
  const SpecFile file = load_spec_arg(o, o.input);
  const SpecModel& m = file.model;
  if (o.what == "local") {
    const auto lf = classify_local_fibers(m.spec, caps);
    if (o.format == "summary") {
      emit(o, "specialization closed\n" + summary(lf.tors.poset) + "all subsets\n" + summary(lf.torf.poset));
    } else {
      emit(o, render_poset(o, lf.tors.poset, "local"));
    }
    return kOk;
  }
  if (o.what == "serre") {
    if (!file.sim) fail(ErrorCode::ValidationFailed, "spectrum file declares no simple modules");
    emit(o, render_poset(o, classify_serre(*file.sim, m.spec, caps).poset, "serre"));
    return kOk;
  }
  const auto violations = validate(m);
  if (!violations.empty()) {
    for (const auto& v : violations) std::cerr << v.rule << ": " << v.detail << "\n";
    return kInvalid;
  }
  if (o.what == "compatible" || o.what == "tors") {
    const auto c = classify_tors(m, caps);
    emit(o, render_poset(o, c.lattice.poset, o.what));
  } else if (o.what == "torf") {
    emit(o, render_poset(o, classify_torf(m, caps).poset, "torf"));
  } else {
    fail(ErrorCode::ParseError, "unknown --what '" + o.what + "'");
  }
  return kOk;
}

int cmd_crosscheck(const Options& o) {
  Caps caps = caps_of(o);
  std::vector<std::string> names;
  if (o.corpus || (o.input.empty() && o.algebra.empty())) {
    for (const auto& n : kCorpus) {
      if (!resource("algebras/" + n + ".alg")) fail(ErrorCode::ValidationFailed, "corpus algebra " + n + " is missing");
      names.push_back(n);
    }
  } else {
    const std::string n = algebra_arg(o);
    if (!o.any_algebra && std::find(kCorpus.begin(), kCorpus.end(), n) == kCorpus.end())
      fail(ErrorCode::ValidationFailed, "'" + n + "' is outside the frozen corpus; pass --any-algebra to override");
    names.push_back(n);
  }
  bool all = true;
  std::printf("%-16s%-8s%-8s%s\n", "algebra", "engine", "oracle", "result");
  for (const auto& n : names) {
    const auto alg = load_algebra_arg(n);
    const auto engine = tors_lattice(alg, caps.silting_objects);
    const auto brute = brute_torsion_classes(alg, oracle_prime(alg, o.prime), o.dim_bound, caps);
    const bool ok = poset_isomorphism(engine.poset, brute.poset).has_value();
    all = all && ok;
    std::printf("%-16s%-8zu%-8zu%s\n", n.c_str(), engine.poset.size(), brute.poset.size(), ok ? "pass" : "FAIL");
  }
  return all ? kOk : kMismatch;
}

// Writes the builtin files of a fixture into --out (a directory), or lists them.
int cmd_export(const Options& o) {
  std::map<std::string, std::vector<std::string>> prefixes = {
      {"paper36", {"spectra/paper36", "golden/paper36/", "algebras/cyclic_zero.alg", "algebras/kxk.alg"}},
      {"dynkin-a2", {"spectra/chain2_a2.spec", "spectra/pentagon.json", "algebras/a2.alg"}},
      {"kronecker", {"algebras/kronecker.alg"}},
  };
  auto it = prefixes.find(o.fixture);
  if (it == prefixes.end()) fail(ErrorCode::ParseError, "unknown fixture '" + o.fixture + "'");
  std::vector<std::string> files;
  for (const auto& name : resource_names())
    for (const auto& pre : it->second)
      if (name.rfind(pre, 0) == 0) files.push_back(name);
  for (const auto& name : files) {
    if (o.out.empty()) {
      std::cout << name << "\n";
      continue;
    }
    const auto path = std::filesystem::path(o.out) / name;
    std::filesystem::create_directories(path.parent_path());
    std::ofstream f(path);
    if (!f) fail(ErrorCode::ParseError, "cannot write " + path.string());
    f << *resource(name);
    std::cout << path.string() << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Torsion classes, silting objects and finite spectrum classification"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* c) {
    c->add_option("--cap", o.cap, "Cap on enumerated silting objects")->check(CLI::PositiveNumber);
    c->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "dot", "summary"}));
    c->add_option("--out", o.out, "Output file");
    c->add_option("--fixture", o.fixture, "Builtin fixture")->check(CLI::IsMember({"paper36", "dynkin-a2", "kronecker"}));
  };
  auto* info = app.add_subcommand("info", "Dimension, basis and Cartan matrix of an algebra");
  auto* silt = app.add_subcommand("2silt", "Poset of two-term silting objects");
  auto* tors = app.add_subcommand("tors", "Lattice of torsion classes");
  auto* camb = app.add_subcommand("cambrian", "Monotone maps from a spectrum to the torsion lattice of a Dynkin quiver");
  auto* cls = app.add_subcommand("classify", "Classify over a finite spectrum model");
  auto* cross = app.add_subcommand("crosscheck", "Compare the silting engine against the brute-force oracle");
  auto* exp = app.add_subcommand("export", "Write or list the files of a builtin fixture");
  for (auto* c : {info, silt, tors, camb, cls, cross, exp}) common(c);
  for (auto* c : {info, silt, tors}) {
    c->add_option("file", o.input, "Algebra file or builtin name");
    c->add_option("--algebra", o.algebra, "Builtin algebra name");
  }
  camb->add_option("type", o.input, "Dynkin type, e.g. A2")->required();
  camb->add_option("spec", o.spec_arg, "point, chainN, antichainN or a spectrum file");
  cls->add_option("spec", o.input, "Spectrum file or builtin name");
  cls->add_option("--what", o.what, "What to classify")
      ->check(CLI::IsMember({"tors", "torf", "serre", "compatible", "local"}));
  cross->add_flag("--corpus", o.corpus, "Run the whole frozen corpus");
  cross->add_option("--algebra", o.algebra, "Single algebra");
  cross->add_flag("--any-algebra", o.any_algebra, "Allow algebras outside the corpus");
  cross->add_option("--dim-bound", o.dim_bound, "Oracle dimension bound per vertex")->check(CLI::PositiveNumber);
  cross->add_option("--prime", o.prime, "Oracle field characteristic")->check(CLI::IsMember({2, 3}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*info) return cmd_info(o);
    if (*silt) return cmd_2silt(o);
    if (*tors) return cmd_tors(o);
    if (*camb) return cmd_cambrian(o);
    if (*cls) return cmd_classify(o);
    if (*cross) return cmd_crosscheck(o);
    if (*exp) return cmd_export(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}
