/**
 * @file cskit_cli.cpp
 * @brief Command-line front end: metric families, signatures, centralizers,
 *        cover verification, screw geodesics, property checks, and algebra
 *        loading.
 *
 * Exit codes: 0 success, 1 property failure (including failed checks),
 * 2 usage error, 3 degenerate configuration, 4 I/O failure.
 *
 * All output is deterministic: randomized subcommands take --seed (or the
 * CSKIT_SEED environment variable) and print it in their header line, JSON
 * uses 17-significant-digit floats with fixed key order, and text uses 12
 * significant digits.
 */
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cskit/checks.hpp"
#include "cskit/errors.hpp"
#include "cskit/groups.hpp"
#include "cskit/isomaps.hpp"
#include "cskit/json_io.hpp"
#include "cskit/lie_algebra.hpp"
#include "cskit/linalg.hpp"
#include "cskit/metrics.hpp"
#include "cskit/quat.hpp"
#include "cskit/rng.hpp"
#include "cskit/screws.hpp"
#include "cskit/version.hpp"

namespace {

using namespace cskit;

std::uint64_t resolve_seed(const CLI::Option* seed_opt, std::uint64_t value) {
  if (seed_opt != nullptr && seed_opt->count() > 0) return value;
  if (const char* env = std::getenv("CSKIT_SEED")) {
    try {
      std::size_t pos = 0;
      const std::uint64_t v = std::stoull(env, &pos);
      if (pos != std::string(env).size())
        throw UsageError("CSKIT_SEED must be an unsigned integer");
      return v;
    } catch (const UsageError&) {
      throw;
    } catch (...) {
      throw UsageError("CSKIT_SEED must be an unsigned integer");
    }
  }
  return 0;
}

Vec3 parse_vec3(const std::string& s) {
  std::stringstream ss(s);
  Vec3 out;
  char comma = 0;
  if (!(ss >> out(0) >> comma >> out(1)) || comma != ',')
    throw UsageError("expected \"x,y,z\", got \"" + s + "\"");
  if (!(ss >> comma >> out(2)) || comma != ',')
    throw UsageError("expected \"x,y,z\", got \"" + s + "\"");
  std::string rest;
  if (ss >> rest) throw UsageError("expected \"x,y,z\", got \"" + s + "\"");
  return out;
}

std::string sig_text(const Signature& s) {
  return "(" + std::to_string(s.neg) + "-, " + std::to_string(s.pos) + "+, " +
         std::to_string(s.zero) + " zero)";
}

jio::Value sig_json(const Signature& s) {
  jio::Value v = jio::Value::object();
  v.set("negative", jio::Value::integer(s.neg));
  v.set("positive", jio::Value::integer(s.pos));
  v.set("zero", jio::Value::integer(s.zero));
  return v;
}

std::string vec3_text(const Vec3& v) {
  return "[" + jio::num12(v(0)) + "," + jio::num12(v(1)) + "," +
         jio::num12(v(2)) + "]";
}

// ------------------------------------------------------- metric families

struct FamilyOptions {
  std::string family;
  double s = 1.0, t = 1.0;
  double s1 = 1.0, s2 = 0.0, t1 = 1.0, t2 = 0.0;
  double k1 = 1.0, k2 = 0.0;
  double a = 1.0, b = 0.0, c = 0.0, d = 0.0, e = 1.0, m = 1.0;
  std::string at = "0,0,0";
};

void add_family_options(CLI::App* cmd, FamilyOptions& o) {
  cmd->add_option("family", o.family,
                  "t*so3 | t*su2 | t*sl2 | t*so21 | t*so31 | so31 | h3")
      ->required();
  cmd->add_option("--s", o.s, "base coefficient (odd families)");
  cmd->add_option("--t", o.t, "pairing coefficient (odd families)");
  cmd->add_option("--s1", o.s1, "Killing coefficient (t*so31)");
  cmd->add_option("--s2", o.s2, "secondary-form coefficient (t*so31)");
  cmd->add_option("--t1", o.t1, "pairing coefficient (t*so31)");
  cmd->add_option("--t2", o.t2, "twisted pairing coefficient (t*so31)");
  cmd->add_option("--k1", o.k1, "Killing coefficient (so31)");
  cmd->add_option("--k2", o.k2, "secondary-form coefficient (so31)");
  cmd->add_option("--a", o.a, "h3 coefficient a");
  cmd->add_option("--b", o.b, "h3 coefficient b");
  cmd->add_option("--c", o.c, "h3 coefficient c");
  cmd->add_option("--d", o.d, "h3 coefficient d");
  cmd->add_option("--e", o.e, "h3 coefficient e");
  cmd->add_option("--m", o.m, "h3 coefficient m");
  cmd->add_option("--at", o.at, "evaluation point \"x,y,z\" (h3)");
}

struct FamilyResult {
  std::vector<std::string> basis;
  jio::Value parameters = jio::Value::object();
  Mat B;
};

FamilyResult build_family(const FamilyOptions& o) {
  FamilyResult r;
  const auto odd = [&](const std::string& base) {
    const LieAlgebra L = builtin_algebra(base);
    r.basis = cotangent_algebra(L).labels;
    r.parameters.set("s", jio::Value::number(o.s));
    r.parameters.set("t", jio::Value::number(o.t));
    r.B = cotangent_metric_odd(L, o.s, o.t);
  };
  if (o.family == "t*so3") {
    odd("so3");
  } else if (o.family == "t*su2") {
    odd("su2");
  } else if (o.family == "t*sl2") {
    odd("sl2");
  } else if (o.family == "t*so21") {
    odd("so21");
  } else if (o.family == "t*so31") {
    r.basis = cotangent_algebra(builtin_algebra("so31")).labels;
    r.parameters.set("s1", jio::Value::number(o.s1));
    r.parameters.set("s2", jio::Value::number(o.s2));
    r.parameters.set("t1", jio::Value::number(o.t1));
    r.parameters.set("t2", jio::Value::number(o.t2));
    r.B = cotangent_metric_even_so31(o.s1, o.s2, o.t1, o.t2);
  } else if (o.family == "so31") {
    r.basis = builtin_algebra("so31").labels;
    r.parameters.set("k1", jio::Value::number(o.k1));
    r.parameters.set("k2", jio::Value::number(o.k2));
    r.B = so31_metric(o.k1, o.k2);
  } else if (o.family == "h3") {
    r.basis = builtin_algebra("h3").labels;
    const H3MetricParams p{o.a, o.b, o.c, o.d, o.e, o.m};
    if (std::abs(h3_metric_det(p)) < 1e-12)
      throw DegenerateError("h3 metric coefficients are degenerate");
    const Vec3 at = parse_vec3(o.at);
    r.parameters.set("a", jio::Value::number(o.a));
    r.parameters.set("b", jio::Value::number(o.b));
    r.parameters.set("c", jio::Value::number(o.c));
    r.parameters.set("d", jio::Value::number(o.d));
    r.parameters.set("e", jio::Value::number(o.e));
    r.parameters.set("m", jio::Value::number(o.m));
    jio::Value pt = jio::Value::array();
    for (int i = 0; i < 3; ++i) pt.push(jio::Value::number(at(i)));
    r.parameters.set("at", std::move(pt));
    Vec x(3);
    x << at(0), at(1), at(2);
    r.B = h3_metric_field(p).at(x);
  } else {
    throw UsageError("unknown family: " + o.family);
  }
  return r;
}

void print_matrix_text(std::ostream& os, const Mat& m) {
  for (int i = 0; i < m.rows(); ++i) {
    os << "  [";
    for (int j = 0; j < m.cols(); ++j)
      os << (j ? " " : "") << jio::num12(m(i, j));
    os << "]\n";
  }
}

int cmd_metric(const FamilyOptions& o, const std::string& format,
               bool signature_only) {
  const FamilyResult r = build_family(o);
  const SymEigenResult eig = jacobi_eigensymmetric(r.B);
  const Signature sig = signature_of(r.B);

  if (format == "text") {
    std::cout << "# cskit " << kVersionString << " | "
              << (signature_only ? "signature " : "metric ") << o.family
              << "\n";
    std::cout << "family: " << o.family << "\n";
    if (!signature_only) {
      std::cout << "basis:";
      for (const auto& b : r.basis) std::cout << " " << b;
      std::cout << "\nmatrix:\n";
      print_matrix_text(std::cout, r.B);
    }
    std::cout << "eigenvalues:";
    for (int i = 0; i < eig.eigenvalues.size(); ++i)
      std::cout << " " << jio::num12(eig.eigenvalues(i));
    std::cout << "\nsignature: " << sig_text(sig) << "\n";
    return 0;
  }

  jio::Value out = jio::Value::object();
  out.set("family", jio::Value::string(o.family));
  out.set("parameters", r.parameters);
  if (!signature_only) {
    jio::Value basis = jio::Value::array();
    for (const auto& b : r.basis) basis.push(jio::Value::string(b));
    out.set("basis", std::move(basis));
    out.set("matrix", jio::mat_to_json(r.B));
  }
  out.set("eigenvalues", jio::vec_to_json(eig.eigenvalues));
  out.set("signature", sig_json(sig));
  std::cout << out.dump() << "\n";
  return 0;
}

// ----------------------------------------------------------- centralizer

int cmd_centralizer(const std::string& algebra, const std::string& format) {
  const LieAlgebra L = builtin_algebra(algebra);
  const auto basis = centralizer_basis(L);
  const auto cs = complex_structure(L);

  if (format == "text") {
    std::cout << "# cskit " << kVersionString << " | centralizer " << algebra
              << "\n";
    std::cout << "dim: " << basis.size() << "\n";
    for (std::size_t i = 0; i < basis.size(); ++i) {
      std::cout << "basis[" << i << "]:\n";
      print_matrix_text(std::cout, basis[i]);
    }
    if (cs.found) {
      std::cout << "complex_structure:\n";
      print_matrix_text(std::cout, cs.J);
    } else {
      std::cout << "complex_structure: none\n";
    }
    return 0;
  }

  jio::Value out = jio::Value::object();
  out.set("algebra", jio::Value::string(algebra));
  out.set("dim", jio::Value::integer(static_cast<long long>(basis.size())));
  jio::Value arr = jio::Value::array();
  for (const auto& b : basis) arr.push(jio::mat_to_json(b));
  out.set("basis", std::move(arr));
  out.set("complex_structure",
          cs.found ? jio::mat_to_json(cs.J) : jio::Value::null());
  std::cout << out.dump() << "\n";
  return 0;
}

// ------------------------------------------------------------ iso-verify

int cmd_iso_verify(const std::string& map_name, bool list, int trials,
                   std::uint64_t seed, double tol, const std::string& format) {
  if (list) {
    for (const auto& m : iso_registry())
      std::cout << m.name << "  " << m.doc << "\n";
    return 0;
  }
  if (map_name.empty()) throw UsageError("iso-verify needs a map name");
  const MapDescriptor& map = find_map(map_name);
  const double res = hom_residual(map, trials, Rng(seed));
  const bool pass = res <= tol;

  if (format == "json") {
    jio::Value out = jio::Value::object();
    out.set("map", jio::Value::string(map.name));
    out.set("seed", jio::Value::integer(static_cast<long long>(seed)));
    out.set("trials", jio::Value::integer(trials));
    out.set("residual", jio::Value::number(res));
    out.set("tol", jio::Value::number(tol));
    out.set("pass", jio::Value::boolean(pass));
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "# cskit " << kVersionString << " | iso-verify " << map.name
              << " | seed " << seed << " | trials " << trials << "\n";
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << "hom." << map.name
              << " residual " << jio::num17(res) << " tol " << jio::num12(tol)
              << "\n";
  }
  return pass ? 0 : 1;
}

// -------------------------------------------------------------- geodesic

int cmd_geodesic(const std::string& space, const std::string& omega_s,
                 const std::string& v_s, double t0, double t1, int steps,
                 const std::string& out_path) {
  if (steps < 2) throw UsageError("--steps must be at least 2");
  MotionSpace sp;
  if (space == "euclidean")
    sp = MotionSpace::Euclidean;
  else if (space == "minkowski")
    sp = MotionSpace::Minkowski;
  else
    throw UsageError("--space must be euclidean or minkowski");

  const Twist xi{parse_vec3(omega_s), parse_vec3(v_s)};

  std::ofstream file;
  const bool to_file = !out_path.empty();
  if (to_file) {
    file.open(out_path);
    if (!file) throw IoError("cannot open " + out_path + " for writing");
  }
  std::ostream& csv = to_file ? static_cast<std::ostream&>(file) : std::cout;
  std::ostream& info = to_file ? std::cout : std::cerr;

  csv << "t";
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) csv << ",m" << i << j;
  csv << "\n";
  for (int k = 0; k < steps; ++k) {
    const double t = t0 + (t1 - t0) * k / (steps - 1);
    const GroupElement g = twist_exp(sp, xi, t);
    const Mat m = g.m.real();
    csv << jio::num12(t);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) csv << "," << jio::num12(m(i, j));
    csv << "\n";
  }
  if (to_file && !file) throw IoError("write to " + out_path + " failed");

  if (sp == MotionSpace::Euclidean) {
    const auto s = screw_decompose(twist_exp(sp, xi, t1));
    info << "# screw: angle " << jio::num12(s.angle) << " axis "
         << vec3_text(s.axis) << " point " << vec3_text(s.point) << " pitch "
         << jio::num12(s.pitch) << " pure_translation "
         << (s.pure_translation ? 1 : 0) << "\n";
  }
  return 0;
}

// ----------------------------------------------------------------- check

int cmd_check(const std::string& suite, int trials, std::uint64_t seed,
              const std::vector<std::string>& tol_overrides,
              const std::string& format) {
  CheckOptions opt;
  opt.trials = trials;
  opt.seed = seed;
  for (const auto& kv : tol_overrides) {
    const auto pos = kv.find('=');
    if (pos == std::string::npos)
      throw UsageError("--tolerance expects NAME=VALUE, got \"" + kv + "\"");
    const std::string name = kv.substr(0, pos);
    try {
      std::size_t used = 0;
      const double v = std::stod(kv.substr(pos + 1), &used);
      if (used != kv.size() - pos - 1) throw std::invalid_argument("trail");
      opt.tolerance_overrides[name] = v;
    } catch (const UsageError&) {
      throw;
    } catch (...) {
      throw UsageError("--tolerance expects NAME=VALUE, got \"" + kv + "\"");
    }
  }

  const auto results = run_checks(suite, opt);
  int failed = 0;
  for (const auto& r : results)
    if (!r.pass) ++failed;

  if (format == "json") {
    jio::Value out = jio::Value::object();
    out.set("suite", jio::Value::string(suite));
    out.set("seed", jio::Value::integer(static_cast<long long>(seed)));
    out.set("trials", jio::Value::integer(trials));
    jio::Value arr = jio::Value::array();
    for (const auto& r : results) {
      jio::Value item = jio::Value::object();
      item.set("name", jio::Value::string(r.name));
      item.set("residual", jio::Value::number(r.residual));
      item.set("tol", jio::Value::number(r.tol));
      item.set("pass", jio::Value::boolean(r.pass));
      arr.push(std::move(item));
    }
    out.set("results", std::move(arr));
    out.set("failed", jio::Value::integer(failed));
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "# cskit " << kVersionString << " | check " << suite
              << " | seed " << seed << " | trials " << trials << "\n";
    for (const auto& r : results)
      std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << " residual "
                << jio::num17(r.residual) << " tol " << jio::num12(r.tol)
                << "\n";
    std::cout << "# " << (results.size() - failed) << "/" << results.size()
              << " checks passed\n";
  }
  return failed == 0 ? 0 : 1;
}

// ---------------------------------------------------------- algebra-load

int cmd_algebra_load(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot read " + path);
  std::stringstream buf;
  buf << f.rdbuf();
  const LieAlgebra L = algebra_from_json(buf.str());

  std::cout << algebra_to_json(L) << "\n";
  const Signature sig = signature_of(killing_form(L));
  std::cout << "# dim " << L.dim << "\n";
  std::cout << "# derived_dim " << derived_dim(L) << "\n";
  std::cout << "# jacobi_residual " << jio::num17(jacobi_residual(L)) << "\n";
  std::cout << "# killing_signature " << sig_text(sig) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "invariant metrics, quaternionic covers, and screw geodesics on "
      "low-dimensional Lie groups"};
  app.set_version_flag("--version", std::string("cskit ") + kVersionString);
  app.require_subcommand(1);

  // metric / signature
  FamilyOptions mo, so;
  std::string m_format = "json", s_format = "json";
  CLI::App* metric =
      app.add_subcommand("metric", "evaluate a metric family member");
  add_family_options(metric, mo);
  metric->add_option("--format", m_format, "json | text")
      ->check(CLI::IsMember({"json", "text"}));
  CLI::App* signature = app.add_subcommand(
      "signature", "eigenvalues and signature of a metric family member");
  add_family_options(signature, so);
  signature->add_option("--format", s_format, "json | text")
      ->check(CLI::IsMember({"json", "text"}));

  // centralizer
  std::string c_algebra;
  std::string c_format = "json";
  CLI::App* centralizer = app.add_subcommand(
      "centralizer", "centralizer of ad(g) and the complex structure");
  centralizer->add_option("algebra", c_algebra, "builtin algebra name")
      ->required();
  centralizer->add_option("--format", c_format, "json | text")
      ->check(CLI::IsMember({"json", "text"}));

  // iso-verify
  std::string iv_map;
  bool iv_list = false;
  int iv_trials = 200;
  std::uint64_t iv_seed = 0;
  double iv_tol = 1e-10;
  std::string iv_format = "text";
  CLI::App* iso = app.add_subcommand(
      "iso-verify", "homomorphism residual of a registered map");
  iso->add_option("map", iv_map, "map name (see --list)");
  iso->add_flag("--list", iv_list, "list registered maps");
  iso->add_option("--trials", iv_trials, "random pairs to test")
      ->check(CLI::PositiveNumber);
  CLI::Option* iv_seed_opt =
      iso->add_option("--seed", iv_seed, "RNG seed (default CSKIT_SEED or 0)");
  iso->add_option("--tol", iv_tol, "pass threshold");
  iso->add_option("--format", iv_format, "text | json")
      ->check(CLI::IsMember({"json", "text"}));

  // geodesic
  std::string g_space = "euclidean", g_omega, g_v, g_out;
  double g_t0 = 0.0, g_t1 = 1.0;
  int g_steps = 11;
  CLI::App* geodesic = app.add_subcommand(
      "geodesic", "sample the screw motion exp(t xi) as CSV");
  geodesic->add_option("--space", g_space, "euclidean | minkowski")
      ->check(CLI::IsMember({"euclidean", "minkowski"}));
  geodesic->add_option("--omega", g_omega, "rotational part \"x,y,z\"")
      ->required();
  geodesic->add_option("--v", g_v, "translational part \"x,y,z\"")
      ->required();
  geodesic->add_option("--t0", g_t0, "interval start");
  geodesic->add_option("--t1", g_t1, "interval end");
  geodesic->add_option("--steps", g_steps, "number of samples");
  geodesic->add_option("--out", g_out, "CSV output file (default stdout)");

  // check
  std::string ck_suite = "all";
  int ck_trials = 200;
  std::uint64_t ck_seed = 0;
  std::vector<std::string> ck_tols;
  std::string ck_format = "text";
  CLI::App* check = app.add_subcommand("check", "run property-check suites");
  check->add_option("suite", ck_suite,
                    "algebra | quat | covers | metrics | screws | all");
  check->add_option("--trials", ck_trials, "random trials per check")
      ->check(CLI::PositiveNumber);
  CLI::Option* ck_seed_opt = check->add_option(
      "--seed", ck_seed, "RNG seed (default CSKIT_SEED or 0)");
  check->add_option("--tolerance", ck_tols,
                    "override a check tolerance, NAME=VALUE (repeatable)");
  check->add_option("--format", ck_format, "text | json")
      ->check(CLI::IsMember({"json", "text"}));

  // algebra-load
  std::string al_path;
  CLI::App* algebra_load = app.add_subcommand(
      "algebra-load", "load an algebra from JSON and report its invariants");
  algebra_load->add_option("file", al_path, "JSON file path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (metric->parsed()) return cmd_metric(mo, m_format, false);
    if (signature->parsed()) return cmd_metric(so, s_format, true);
    if (centralizer->parsed()) return cmd_centralizer(c_algebra, c_format);
    if (iso->parsed())
      return cmd_iso_verify(iv_map, iv_list, iv_trials,
                            resolve_seed(iv_seed_opt, iv_seed), iv_tol,
                            iv_format);
    if (geodesic->parsed())
      return cmd_geodesic(g_space, g_omega, g_v, g_t0, g_t1, g_steps, g_out);
    if (check->parsed())
      return cmd_check(ck_suite, ck_trials, resolve_seed(ck_seed_opt, ck_seed),
                       ck_tols, ck_format);
    if (algebra_load->parsed()) return cmd_algebra_load(al_path);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DegenerateError& e) {
    std::cerr << "degenerate: " << e.what() << "\n";
    return 3;
  } catch (const ChartOverflowError& e) {
    std::cerr << "degenerate: " << e.what() << "\n";
    return 3;
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 4;
  } catch (const PropertyError& e) {
    std::cerr << "property violation: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
