#pragma once

/**
 * @file radius.hpp
 * @brief Joint numerical radius w_p and its attaining set.
 *
 * Finite-extreme spaces are solved exactly: the supremum over all norming
 * pairs equals the maximum over pairs of primal and dual extreme points, so
 * enumeration of admissible_pairs() is exhaustive. Smooth ℓr spaces use a
 * seeded multi-start ascent on the unit sphere and report a lower bound with
 * the maximizers it found.
 *
 * Attaining pairs are grouped into unimodular orbits {(μx, μx_star) : |μ| = 1}.
 * In stored form both vectors rotate by μ; as functionals this is the orbit
 * (μx, conj(μ)x*).
 */

#include <jnrad/errors.hpp>
#include <jnrad/random.hpp>
#include <jnrad/space.hpp>
#include <jnrad/tuple.hpp>

#include <optional>
#include <string_view>
#include <vector>

namespace jnrad {

enum class Method { ExactEnumeration, MultiStart };

inline std::string_view to_string(Method m) {
  return m == Method::ExactEnumeration ? "ExactEnumeration" : "MultiStart";
}

struct Tolerances {
  double attain_exact = 1e-12;   ///< relative attaining window, exact enumeration
  double attain_smooth = 1e-8;   ///< relative attaining window, multi-start
  double orbit = 1e-6;           ///< orbit distance
};

struct RadiusOptions {
  int starts = 64;
  std::uint64_t seed = 0;
  Tolerances tol{};
};

struct Orbit {
  NormingPair representative;
  double value;
};

struct AttainingSet {
  std::vector<Orbit> orbits;
  bool exhaustive = false;
};

struct RadiusResult {
  double value = 0.0;
  Method method = Method::ExactEnumeration;
  AttainingSet attaining;
  /// w ≈ 0 while some operator is nonzero: w_p is only a seminorm here.
  bool degenerate = false;
  /// Multi-start only: best local maximum that fell outside the attaining window.
  std::optional<double> runner_up;
};

/// True if b = (μ a.x, μ a.x_star) for some unimodular μ, within tol in both vectors.
inline bool same_orbit(const NormingPair& a, const NormingPair& b, Field field, double tol) {
  Eigen::Index k = 0;
  a.x.cwiseAbs().maxCoeff(&k);
  Scalar mu{1.0, 0.0};
  const Scalar w = b.x[k] * std::conj(a.x[k]);
  if (field == Field::Real) {
    mu = w.real() < 0.0 ? -1.0 : 1.0;
  } else if (std::abs(w) > 0.0) {
    mu = w / std::abs(w);
  }
  return (mu * a.x - b.x).norm() <= tol && (mu * a.x_star - b.x_star).norm() <= tol;
}

namespace detail {

/// Indices of orbit founders, in input order.
inline std::vector<std::size_t> orbit_founders(const std::vector<NormingPair>& pairs, Field field, double tol) {
  std::vector<std::size_t> founders;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    bool joined = false;
    for (std::size_t f : founders)
      if (same_orbit(pairs[f], pairs[i], field, tol)) {
        joined = true;
        break;
      }
    if (!joined) founders.push_back(i);
  }
  return founders;
}

inline void require_compatible(const OperatorTuple& T, const SpaceDescriptor& space) {
  if (T.n() != space.dim())
    fail(ErrorCode::DimensionMismatch, "operator size " + std::to_string(T.n()) + " does not match space dimension " +
                                           std::to_string(space.dim()));
  if (T.field() != space.field()) fail(ErrorCode::InvalidArgument, "tuple and space fields differ");
}

inline bool is_degenerate(const OperatorTuple& T, double value) {
  const double scale = T.max_abs_entry();
  return scale > 0.0 && value <= 1e-12 * scale;
}

}  // namespace detail

/// Greedy clustering of pairs into unimodular orbits; founders keep input order.
inline std::vector<NormingPair> orbit_dedup(const std::vector<NormingPair>& pairs, Field field, double tol) {
  if (!(tol > 0.0)) fail(ErrorCode::InvalidArgument, "orbit tolerance must be positive");
  std::vector<NormingPair> out;
  for (std::size_t i : detail::orbit_founders(pairs, field, tol)) out.push_back(pairs[i]);
  return out;
}

/// Exact w_p on a finite-extreme space by enumeration of admissible pairs.
inline RadiusResult radius_exact(const OperatorTuple& T, const SpaceDescriptor& space, const Tolerances& tol = {}) {
  detail::require_compatible(T, space);
  if (!space.has_finite_extremes())
    fail(ErrorCode::Unsupported, "exact enumeration needs a space with finitely many extreme points");
  const auto pairs = admissible_pairs(space);
  if (pairs.empty()) fail(ErrorCode::InconsistentDescriptor, "descriptor has no admissible extreme pairs");

  std::vector<double> values(pairs.size());
  double best = 0.0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    values[i] = aggregate(T, pairs[i]);
    best = std::max(best, values[i]);
  }
  std::vector<NormingPair> attaining;
  std::vector<double> attaining_values;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (values[i] >= best - tol.attain_exact * best) {
      attaining.push_back(pairs[i]);
      attaining_values.push_back(values[i]);
    }

  RadiusResult rr;
  rr.value = best;
  rr.method = Method::ExactEnumeration;
  rr.attaining.exhaustive = true;
  for (std::size_t f : detail::orbit_founders(attaining, space.field(), tol.orbit))
    rr.attaining.orbits.push_back({attaining[f], attaining_values[f]});
  rr.degenerate = detail::is_degenerate(T, best);
  return rr;
}

namespace detail {

/**
 * Φ^p extended 0-homogeneously off the ℓr sphere:
 *
 *     G(x) = sum_i |u(x)^H T_i x|^p / (sum_k |x_k|^r)^p,   u_k = x_k |x_k|^(r-2).
 *
 * On the sphere u is the duality map, so G = Φ^p. The gradient is returned as
 * 2 ∂G/∂conj(x), whose real and imaginary parts are the partials with respect
 * to Re x and Im x.
 */
class SphereObjective {
 public:
  SphereObjective(const OperatorTuple& T, double r) : T_(T), r_(r), p_(T.p()) {}

  double value(const Vector& x) const {
    double M = 0.0;
    for (Eigen::Index k = 0; k < x.size(); ++k) M += std::pow(std::abs(x[k]), r_);
    Vector u(x.size());
    for (Eigen::Index k = 0; k < x.size(); ++k) u[k] = std::conj(dual_power(x[k], r_));
    double A = 0.0;
    for (int i = 0; i < T_.d(); ++i) A += std::pow(std::abs(pairing(u, T_[i] * x)), p_);
    return A / std::pow(M, p_);
  }

  double value_and_gradient(const Vector& x, Vector& grad) const {
    const Eigen::Index n = x.size();
    double M = 0.0;
    RealVector ax(n);
    for (Eigen::Index k = 0; k < n; ++k) {
      ax[k] = std::abs(x[k]);
      M += std::pow(ax[k], r_);
    }
    Vector u(n);  // x|x|^(r-2)
    for (Eigen::Index k = 0; k < n; ++k) u[k] = std::conj(dual_power(x[k], r_));

    double A = 0.0;
    Vector dA = Vector::Zero(n);
    for (int i = 0; i < T_.d(); ++i) {
      const Vector v = T_[i] * x;
      const Scalar a = pairing(u, v);
      A += std::pow(std::abs(a), p_);
      const Scalar P = 0.5 * p_ * dual_power(a, p_);  // (p/2)|a|^(p-2) conj(a)
      const Vector Thu = T_[i].adjoint() * u;
      for (Eigen::Index m = 0; m < n; ++m) {
        const double am = ax[m];
        Scalar term = std::conj(P) * Thu[m];
        if (am > 1e-300) {
          term += P * (0.5 * r_) * v[m] * std::pow(am, r_ - 2.0);
          if (r_ != 2.0)
            term += std::conj(P) * (0.5 * (r_ - 2.0)) * std::conj(v[m]) * x[m] * x[m] * std::pow(am, r_ - 4.0);
        }
        dA[m] += term;
      }
    }
    const double Mp = std::pow(M, p_);
    const double G = A / Mp;
    grad.resize(n);
    for (Eigen::Index m = 0; m < n; ++m) {
      const Scalar dM = 0.5 * r_ * u[m];
      grad[m] = 2.0 * (dA[m] / Mp - p_ * G / M * dM);
    }
    return G;
  }

 private:
  const OperatorTuple& T_;
  double r_;
  double p_;
};

struct AscentOutcome {
  Vector x;
  double objective;  // G = Φ^p
};

/// Normalized-gradient ascent with Armijo backtracking and renormalization.
/// Stops when the step falls below 1e-12 or after 500 iterations.
inline AscentOutcome sphere_ascent(const SphereObjective& obj, const SpaceDescriptor& space, Vector x) {
  constexpr int kMaxIter = 500;
  constexpr double kMinStep = 1e-12;
  constexpr double kArmijo = 1e-4;
  const bool real = space.field() == Field::Real;

  x /= norm_eval(space, x);
  Vector g;
  double G = obj.value_and_gradient(x, g);
  double step = 0.1;
  for (int it = 0; it < kMaxIter; ++it) {
    if (real) g = g.real().cast<Scalar>();
    const double gn = g.norm();
    if (!(gn > 0.0) || !std::isfinite(gn)) break;
    const Vector dir = g / gn;
    step = std::min(1.0, 2.0 * step);
    bool accepted = false;
    while (step >= kMinStep) {
      Vector trial = x + step * dir;
      trial /= norm_eval(space, trial);
      const double Gt = obj.value(trial);
      if (Gt >= G + kArmijo * step * gn) {
        x = std::move(trial);
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;
    G = obj.value_and_gradient(x, g);
  }
  return {x, G};
}

}  // namespace detail

/**
 * w_p on a smooth ℓr space (1 < r < inf) by multi-start ascent.
 *
 * Each start s draws from its own stream of the seed, so results do not depend
 * on evaluation order. value is the best local maximum found; attaining holds
 * the orbit-deduplicated maximizers within attain_smooth·value and is never
 * exhaustive.
 */
inline RadiusResult radius_smooth(const OperatorTuple& T, const SpaceDescriptor& space, int starts, std::uint64_t seed,
                                  const Tolerances& tol = {}) {
  detail::require_compatible(T, space);
  if (!space.is_smooth_lp()) fail(ErrorCode::Unsupported, "multi-start ascent needs an lr space with 1 < r < inf");
  if (starts < 1) fail(ErrorCode::InvalidArgument, "need at least one start");
  const double r = *space.lp_exponent();
  const detail::SphereObjective obj(T, r);

  struct Final {
    NormingPair pair;
    double value;
  };
  std::vector<Final> finals;
  finals.reserve(static_cast<std::size_t>(starts));
  for (int s = 0; s < starts; ++s) {
    Rng rng = make_rng(seed, static_cast<std::uint64_t>(s) + 1);
    Vector x0;
    do {
      x0 = gaussian_vector(space.field(), space.dim(), rng);
    } while (norm_eval(space, x0) <= 1e-12);
    auto outcome = detail::sphere_ascent(obj, space, x0);
    NormingPair pair = duality_map(space, outcome.x / norm_eval(space, outcome.x)).front();
    double value = aggregate(T, pair);

    // Where some z_i vanishes and p < 2 the objective is not differentiable;
    // kick the point and retry, keeping the better end point.
    for (int retry = 0; retry < 2 && T.p() < 2.0 && value > 0.0; ++retry) {
      const Vector z = pair_image(T, pair);
      if (z.cwiseAbs().minCoeff() > 1e-12 * value) break;
      const Vector kick = gaussian_vector(space.field(), space.dim(), rng);
      Vector xk = pair.x + 1e-3 * kick / kick.norm();
      auto again = detail::sphere_ascent(obj, space, xk);
      NormingPair cand = duality_map(space, again.x / norm_eval(space, again.x)).front();
      const double cv = aggregate(T, cand);
      if (cv > value) {
        pair = std::move(cand);
        value = cv;
      }
    }

    // Canonical phase: largest-magnitude coordinate of x real positive.
    Eigen::Index k = 0;
    pair.x.cwiseAbs().maxCoeff(&k);
    if (std::abs(pair.x[k]) > 0.0) {
      const Scalar mu = std::conj(pair.x[k]) / std::abs(pair.x[k]);
      const Scalar phase = space.field() == Field::Real ? Scalar(mu.real() < 0.0 ? -1.0 : 1.0) : mu;
      pair.x *= phase;
      pair.x_star *= phase;
    }
    finals.push_back({std::move(pair), value});
  }

  double best = 0.0;
  for (const auto& f : finals) best = std::max(best, f.value);
  std::vector<NormingPair> attaining;
  std::vector<double> attaining_values;
  std::optional<double> runner_up;
  for (const auto& f : finals) {
    if (f.value >= best - tol.attain_smooth * best) {
      attaining.push_back(f.pair);
      attaining_values.push_back(f.value);
    } else if (!runner_up || f.value > *runner_up) {
      runner_up = f.value;
    }
  }

  RadiusResult rr;
  rr.value = best;
  rr.method = Method::MultiStart;
  rr.attaining.exhaustive = false;
  for (std::size_t f : detail::orbit_founders(attaining, space.field(), tol.orbit))
    rr.attaining.orbits.push_back({attaining[f], attaining_values[f]});
  rr.runner_up = runner_up;
  rr.degenerate = detail::is_degenerate(T, best);
  return rr;
}

/// Exact enumeration where available, multi-start ascent on smooth ℓr.
inline RadiusResult compute_radius(const OperatorTuple& T, const SpaceDescriptor& space,
                                   const RadiusOptions& opts = {}) {
  if (space.has_finite_extremes()) return radius_exact(T, space, opts.tol);
  if (space.is_smooth_lp()) return radius_smooth(T, space, opts.starts, opts.seed, opts.tol);
  fail(ErrorCode::Unsupported, "no radius method for " + space.describe());
}

}  // namespace jnrad
