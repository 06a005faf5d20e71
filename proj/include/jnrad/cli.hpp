#pragma once

/**
 * @file cli.hpp
 * @brief The `jnrad` command-line front end.
 *
 *     jnrad <command> <problem.json> [flags]
 *
 * Commands: radius, subdiff, gateaux, smooth, orth, extremes, verify.
 * JSON goes to `out`, diagnostics to `err`. Exit status is 0 on success, 2 on
 * ZeroRadius / DependentDirection, 1 on anything else.
 */

#include <jnrad/errors.hpp>
#include <jnrad/io.hpp>
#include <jnrad/oracle.hpp>
#include <jnrad/orth.hpp>
#include <jnrad/radius.hpp>
#include <jnrad/subdiff.hpp>

#include <CLI11.hpp>

#include <cstdio>
#include <iomanip>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace jnrad::cli {

using io::json;

struct Flags {
  std::string input;
  std::optional<double> p;
  int starts = 64;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  int samples = 10000;
  bool pretty = false;
  std::optional<double> attain_exact;
  std::optional<double> attain_smooth;
  std::optional<double> orbit;
  std::string direction;
  std::string against;
  std::string subspace;
};

namespace detail {

inline RadiusOptions radius_options(const Flags& f) {
  RadiusOptions o;
  o.starts = f.starts;
  o.seed = f.seed;
  if (f.attain_exact) o.tol.attain_exact = *f.attain_exact;
  if (f.attain_smooth) o.tol.attain_smooth = *f.attain_smooth;
  if (f.orbit) o.tol.orbit = *f.orbit;
  return o;
}

inline void emit(std::ostream& out, const json& j, bool pretty) {
  if (!io::all_finite(j)) fail(ErrorCode::InvalidArgument, "result contains a non-finite number");
  out << (pretty ? j.dump(2) : j.dump()) << '\n';
}

inline json generator_json(const SubdiffGenerator& g, const OperatorTuple& T) {
  json e = io::to_json(g, T.field());
  json mats = json::array();
  for (const auto& m : derivative_matrices(g)) mats.push_back(io::to_json(m, T.field()));
  e["matrices"] = std::move(mats);
  return e;
}

/// Auxiliary tuple from a flag path, or from the problem file section.
inline OperatorTuple aux_tuple(const std::string& flag_path, const std::optional<OperatorTuple>& embedded,
                               const io::ProblemFile& prob, const char* what) {
  if (!flag_path.empty()) {
    const json j = io::detail::parse_file(flag_path);
    return io::parse_aux_tuple(j, prob, std::filesystem::path(flag_path).parent_path(), what);
  }
  if (embedded) return *embedded;
  fail(ErrorCode::Schema, std::string("problem: command needs a \"") + what + "\" tuple (section or --" + what + ")");
}

inline json cmd_radius(const io::ProblemFile& prob, const Flags& f) {
  return io::to_json(compute_radius(*prob.tuple, prob.space, radius_options(f)), prob.space.field());
}

inline json cmd_subdiff(const io::ProblemFile& prob, const Flags& f) {
  const auto& T = *prob.tuple;
  const auto rr = compute_radius(T, prob.space, radius_options(f));
  json gens = json::array();
  for (const auto& g : generators(T, prob.space, rr)) gens.push_back(generator_json(g, T));
  return json{{"value", rr.value}, {"exhaustive", rr.attaining.exhaustive}, {"generators", std::move(gens)}};
}

inline json cmd_gateaux(const io::ProblemFile& prob, const Flags& f) {
  const auto& T = *prob.tuple;
  const OperatorTuple S = aux_tuple(f.direction, prob.direction, prob, "direction");
  const auto rr = compute_radius(T, prob.space, radius_options(f));
  const auto rep = gateaux_one_sided(T, S, prob.space, rr);
  json out{{"value", rr.value},
           {"exhaustive", rep.exhaustive},
           {"c_values", rep.c_values},
           {"g_plus", rep.g_plus},
           {"g_minus", rep.g_minus},
           {"verdict", std::string(to_string(rep.smooth))}};
  out["derivative"] = rep.derivative ? json(*rep.derivative) : json(nullptr);
  return out;
}

inline json cmd_smooth(const io::ProblemFile& prob, const Flags& f) {
  const auto& T = *prob.tuple;
  const auto rr = compute_radius(T, prob.space, radius_options(f));
  const auto rep = smoothness(T, prob.space, rr);
  json out{{"smooth", std::string(to_string(rep.verdict))}, {"exhaustive", rep.exhaustive}, {"value", rr.value}};
  out["derivative_basis"] = rep.gradient ? generator_json(*rep.gradient, T) : json(nullptr);
  return out;
}

inline json cmd_orth(const io::ProblemFile& prob, const Flags& f) {
  const auto& T = *prob.tuple;
  const auto rr = compute_radius(T, prob.space, radius_options(f));
  OrthOptions oo;
  oo.tol = f.tol;
  OrthResult res;
  if (!f.subspace.empty() || (f.against.empty() && prob.subspace)) {
    TupleSubspace V;
    if (!f.subspace.empty()) {
      const json j = io::detail::parse_file(f.subspace);
      V = io::parse_subspace(j, prob, std::filesystem::path(f.subspace).parent_path(), "subspace");
    } else {
      V = *prob.subspace;
    }
    res = orth_subspace(T, V, prob.space, rr, oo);
  } else {
    res = orth_scalar(T, aux_tuple(f.against, prob.against, prob, "against"), prob.space, rr, oo);
  }
  json out{{"orthogonal", res.orthogonal}, {"approximate", res.approximate}};
  out["certificate"] = res.certificate ? io::to_json(*res.certificate) : json(nullptr);
  return out;
}

inline json cmd_extremes(const io::ProblemFile& prob) {
  json out{{"space", prob.space.describe()}};
  const auto ext = extreme_points(prob.space);
  if (!ext) {
    out["finite"] = false;
    return out;
  }
  out["finite"] = true;
  auto list = [](const std::vector<RealVector>& vs) {
    json a = json::array();
    for (const auto& v : vs) a.push_back(io::to_json(v));
    return a;
  };
  out["primal_extremes"] = list(ext->primal);
  out["dual_extremes"] = list(ext->dual);
  json pairs = json::array();
  for (const auto& pr : admissible_pairs(prob.space)) pairs.push_back(io::to_json(pr, prob.space.field()));
  out["admissible_pairs"] = std::move(pairs);
  return out;
}

inline json cmd_verify(const io::ProblemFile& prob, const Flags& f, std::ostream& err) {
  const auto& T = *prob.tuple;
  const auto ropts = radius_options(f);
  const auto rr = compute_radius(T, prob.space, ropts);
  std::vector<SubdiffGenerator> gens;
  if (rr.value > 0.0 && !rr.degenerate) gens = generators(T, prob.space, rr);
  AuditOptions ao;
  ao.samples = f.samples;
  ao.radius = ropts;
  const auto rep = audit(T, prob.space, rr, gens, f.seed, ao);

  json checks = json::array();
  for (const auto& c : rep.checks)
    checks.push_back(json{{"name", c.name}, {"status", c.pass ? "pass" : "fail"}, {"measured", c.measured}, {"bound", c.bound}});

  err << std::left << std::setw(24) << "check" << std::setw(8) << "status" << std::setw(16) << "measured"
      << "bound\n";
  for (const auto& c : rep.checks) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%-16.6g%.3g", c.measured, c.bound);
    err << std::left << std::setw(24) << c.name << std::setw(8) << (c.pass ? "pass" : "FAIL") << buf << '\n';
  }
  return json{{"value", rr.value}, {"all_pass", rep.all_pass()}, {"checks", std::move(checks)}};
}

}  // namespace detail

/// Entry point; never throws.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Joint numerical radius of operator tuples on finite-dimensional Banach spaces", "jnrad"};
  app.require_subcommand(1);
  Flags f;

  struct Command {
    const char* name;
    const char* help;
  };
  const std::vector<Command> commands{
      {"radius", "w_p(T) and its attaining orbits"},
      {"subdiff", "one supporting functional per attaining orbit"},
      {"gateaux", "one-sided Gateaux derivatives in a direction"},
      {"smooth", "smoothness verdict and derivative"},
      {"orth", "Birkhoff-James orthogonality with certificate"},
      {"extremes", "extreme points and admissible pairs of the space"},
      {"verify", "run the brute-force invariant checks"},
  };
  std::string command;
  for (const auto& s : commands) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("input", f.input, "problem file")->required();
    sub->add_option("--p", f.p, "override the aggregation exponent (1 < p < inf)");
    sub->add_option("--starts", f.starts, "multi-start count for smooth spaces")->check(CLI::PositiveNumber);
    sub->add_option("--seed", f.seed, "random seed");
    sub->add_option("--tol", f.tol, "hull-membership tolerance for orth")->check(CLI::PositiveNumber);
    sub->add_option("--samples", f.samples, "sample count for verify")->check(CLI::PositiveNumber);
    sub->add_flag("--pretty", f.pretty, "indent JSON output");
    sub->add_option("--attain-tol-exact", f.attain_exact, "relative attaining window, exact enumeration");
    sub->add_option("--attain-tol-smooth", f.attain_smooth, "relative attaining window, multi-start");
    sub->add_option("--orbit-tol", f.orbit, "orbit distinctness tolerance");
    if (std::string(s.name) == "gateaux") sub->add_option("--direction", f.direction, "direction tuple file");
    if (std::string(s.name) == "orth") {
      sub->add_option("--against", f.against, "direction tuple file (scaled family)");
      sub->add_option("--subspace", f.subspace, "subspace basis file");
    }
    sub->callback([&command, name = std::string(s.name)] { command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }

  try {
    if (f.p && (!(*f.p > 1.0) || std::isinf(*f.p)))
      fail(ErrorCode::Schema, "--p: aggregation exponent must satisfy 1 < p < inf");
    const auto prob = io::load_problem(f.input, f.p, command != "extremes");
    json result;
    if (command == "radius") result = detail::cmd_radius(prob, f);
    else if (command == "subdiff") result = detail::cmd_subdiff(prob, f);
    else if (command == "gateaux") result = detail::cmd_gateaux(prob, f);
    else if (command == "smooth") result = detail::cmd_smooth(prob, f);
    else if (command == "orth") result = detail::cmd_orth(prob, f);
    else if (command == "extremes") result = detail::cmd_extremes(prob);
    else result = detail::cmd_verify(prob, f, err);
    detail::emit(out, result, f.pretty);
    return 0;
  } catch (const Error& e) {
    err << "jnrad: " << e.what() << '\n';
    return e.is_mathematical() ? 2 : 1;
  } catch (const std::exception& e) {
    err << "jnrad: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace jnrad::cli
