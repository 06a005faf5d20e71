#pragma once

/**
 * @file oracle.hpp
 * @brief Brute-force checks that share nothing with the solvers beyond norm
 *        evaluation and pair images: sampled radius, finite differences,
 *        λ-sweeps and an invariant audit.
 */

#include <jnrad/errors.hpp>
#include <jnrad/radius.hpp>
#include <jnrad/random.hpp>
#include <jnrad/space.hpp>
#include <jnrad/subdiff.hpp>
#include <jnrad/tuple.hpp>

#include <string>
#include <vector>

namespace jnrad {

/// max aggregate over sample_pairs(); never exceeds the true w_p.
inline double sampled_radius(const OperatorTuple& T, const SpaceDescriptor& space, int samples, std::uint64_t seed) {
  detail::require_compatible(T, space);
  double best = 0.0;
  for (const auto& pair : sample_pairs(space, samples, seed)) best = std::max(best, aggregate(T, pair));
  return best;
}

enum class Side { Plus, Minus };

/// (w(T + tS) - w(T)) / t for Plus, (w(T - tS) - w(T)) / (-t) for Minus,
/// with w computed by compute_radius().
inline double fd_gateaux(const OperatorTuple& T, const OperatorTuple& S, const SpaceDescriptor& space, double t,
                         Side side, const RadiusOptions& opts = {}) {
  if (!(t > 0.0) || t > 1e-2) fail(ErrorCode::InvalidArgument, "finite-difference step must satisfy 0 < t <= 1e-2");
  const double sign = side == Side::Plus ? 1.0 : -1.0;
  // w(0 + tS) = t w(S) by homogeneity.
  if (T.is_zero()) return sign * compute_radius(S, space, opts).value;
  const double w0 = compute_radius(T, space, opts).value;
  const double wt = compute_radius(tuple_axpy(T, sign * t, S), space, opts).value;
  return (wt - w0) / (sign * t);
}

/// Five-point central difference of w(T + hS) at h = 0.
inline double fd_central(const OperatorTuple& T, const OperatorTuple& S, const SpaceDescriptor& space, double h,
                         const RadiusOptions& opts = {}) {
  auto w = [&](double c) { return compute_radius(tuple_axpy(T, c, S), space, opts).value; };
  return (-w(2 * h) + 8 * w(h) - 8 * w(-h) + w(-2 * h)) / (12 * h);
}

struct GridSpec {
  int directions = 400;
  int radii = 20;
  double r_min = 1e-3;
  double r_max = 1e1;
};

struct SweepResult {
  double min_value = 0.0;
  Vector argmin;
};

namespace detail {

inline std::vector<double> log_radii(int count, double lo, double hi) {
  std::vector<double> out;
  for (int k = 0; k < count; ++k)
    out.push_back(count == 1 ? lo : lo * std::pow(hi / lo, static_cast<double>(k) / (count - 1)));
  return out;
}

/// λ directions: d = 1 covers F with ±1 (real) or evenly spaced phases
/// (complex); d > 1 starts with ±e_i (and ±i·e_i) and fills up with seeded
/// Gaussian directions.
inline std::vector<Vector> sweep_directions(Field field, int d, int count, std::uint64_t seed) {
  std::vector<Vector> dirs;
  if (d == 1) {
    if (field == Field::Real) return {Vector::Constant(1, 1.0), Vector::Constant(1, -1.0)};
    for (int k = 0; k < count; ++k) dirs.push_back(Vector::Constant(1, std::polar(1.0, 2.0 * M_PI * k / count)));
    return dirs;
  }
  const std::vector<Scalar> units = field == Field::Real ? std::vector<Scalar>{1.0, -1.0}
                                                          : std::vector<Scalar>{1.0, -1.0, {0.0, 1.0}, {0.0, -1.0}};
  for (int i = 0; i < d && static_cast<int>(dirs.size()) < count; ++i)
    for (Scalar u : units) {
      Vector e = Vector::Zero(d);
      e[i] = u;
      dirs.push_back(e);
    }
  Rng rng = make_rng(seed, 0x5357u);
  while (static_cast<int>(dirs.size()) < count) {
    Vector g = gaussian_vector(field, d, rng);
    if (g.norm() > 1e-12) dirs.push_back(g / g.norm());
  }
  return dirs;
}

}  // namespace detail

/**
 * min over λ ∈ {0} ∪ grid of w_p(T + λS).
 *
 * Grid sizes: d = 1 real uses 2 signs × (directions/2) radii; d = 1 complex
 * uses √directions phases × √directions radii; d > 1 uses `directions`
 * directions × `radii` radii.
 */
inline SweepResult lambda_sweep(const OperatorTuple& T, const OperatorTuple& S, const SpaceDescriptor& space,
                                const GridSpec& grid, std::uint64_t seed, const RadiusOptions& opts = {}) {
  const int d = T.d();
  std::vector<Vector> dirs;
  std::vector<double> radii;
  if (d == 1 && T.field() == Field::Real) {
    dirs = detail::sweep_directions(T.field(), 1, 2, seed);
    radii = detail::log_radii(std::max(1, grid.directions / 2), grid.r_min, grid.r_max);
  } else if (d == 1) {
    const int side = std::max(1, static_cast<int>(std::lround(std::sqrt(grid.directions))));
    dirs = detail::sweep_directions(T.field(), 1, side, seed);
    radii = detail::log_radii(side, grid.r_min, grid.r_max);
  } else {
    dirs = detail::sweep_directions(T.field(), d, grid.directions, seed);
    radii = detail::log_radii(grid.radii, grid.r_min, grid.r_max);
  }

  SweepResult out;
  out.argmin = Vector::Zero(d);
  out.min_value = compute_radius(T, space, opts).value;
  for (const auto& dir : dirs)
    for (double rad : radii) {
      const Vector lambda = rad * dir;
      const double w = compute_radius(tuple_combine(T, S, lambda), space, opts).value;
      if (w < out.min_value) {
        out.min_value = w;
        out.argmin = lambda;
      }
    }
  return out;
}

struct Check {
  std::string name;
  bool pass = false;
  double measured = 0.0;
  double bound = 0.0;
};

struct VerifyReport {
  std::vector<Check> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

struct AuditOptions {
  int directions = 20;   ///< random tuples S for the functional inequalities
  int samples = 10000;   ///< sampled_radius draws
  double fd_step = 1e-4;
  RadiusOptions radius{};
};

namespace detail {

inline OperatorTuple random_like(const OperatorTuple& T, Rng& rng) {
  std::vector<Matrix> ms;
  for (int i = 0; i < T.d(); ++i) ms.push_back(gaussian_matrix(T.field(), T.n(), rng));
  return OperatorTuple(T.field(), std::move(ms), T.p());
}

inline Check upper_check(std::string name, double measured, double bound) {
  return {std::move(name), measured <= bound, measured, bound};
}

}  // namespace detail

/**
 * Invariant battery for one solved instance: positivity, sampled ≤ radius,
 * generator attainment, supporting-functional and norm-one inequalities on
 * random directions, finite-difference sandwich (exhaustive results only) and
 * the rank-one reconstruction w_p = 1 for the first generator.
 */
inline VerifyReport audit(const OperatorTuple& T, const SpaceDescriptor& space, const RadiusResult& rr,
                          const std::vector<SubdiffGenerator>& gens, std::uint64_t seed,
                          const AuditOptions& opts = {}) {
  VerifyReport rep;
  const double w = rr.value;
  const bool positive = w > 0.0 && !rr.degenerate;
  rep.checks.push_back({"norm_positivity", positive, w, 0.0});

  const double sampled = sampled_radius(T, space, opts.samples, seed);
  rep.checks.push_back(
      detail::upper_check("sampled_le_radius", sampled - w, rr.attaining.exhaustive ? 1e-12 : 1e-9));
  if (!positive || gens.empty()) return rep;

  double attain_gap = 0.0;
  for (const auto& g : gens) attain_gap = std::max(attain_gap, std::abs(apply(g, T) - w));
  rep.checks.push_back(detail::upper_check("generator_attains", attain_gap, 1e-9 * std::max(1.0, w)));

  Rng rng = make_rng(seed, 0x41554449u);
  double support_violation = -kInf;
  double norm_one_violation = -kInf;
  double sandwich_gap = 0.0;
  RadiusOptions ropts = opts.radius;
  for (int k = 0; k < opts.directions; ++k) {
    const OperatorTuple S = detail::random_like(T, rng);
    const double wS = compute_radius(S, space, ropts).value;
    const OperatorTuple diff = tuple_axpy(S, -1.0, T);
    for (const auto& g : gens) {
      support_violation = std::max(support_violation, apply(g, diff).real() - (wS - w));
      norm_one_violation = std::max(norm_one_violation, std::abs(apply(g, S)) - wS);
    }
    if (rr.attaining.exhaustive && k < 5) {
      const auto rep_g = gateaux_one_sided(T, S, space, rr);
      const double fd = fd_gateaux(T, S, space, opts.fd_step, Side::Plus, ropts);
      sandwich_gap = std::max(sandwich_gap, std::abs(fd - rep_g.g_plus));
    }
  }
  rep.checks.push_back(detail::upper_check("supporting_inequality", support_violation, 1e-8));
  rep.checks.push_back(detail::upper_check("norm_one", norm_one_violation, 1e-8));
  if (rr.attaining.exhaustive) rep.checks.push_back(detail::upper_check("fd_sandwich", sandwich_gap, 1e-3));

  const auto& g0 = gens.front();
  const Vector alpha = g0.alpha.alpha / lp_norm(g0.alpha.alpha, T.q());
  const OperatorTuple R = rank_one_tuple(space, g0.pair, alpha, T.p());
  const double wr = compute_radius(R, space, ropts).value;
  rep.checks.push_back(
      detail::upper_check("rank_one_radius", std::abs(wr - 1.0), rr.attaining.exhaustive ? 1e-12 : 1e-9));
  return rep;
}

}  // namespace jnrad
