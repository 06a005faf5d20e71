#pragma once

/**
 * @file subdiff.hpp
 * @brief Supporting functionals of w_p at a tuple, one-sided Gateaux
 *        derivatives and the smoothness verdict.
 *
 * Every attaining pair (x, x*) of extreme points yields the norm-one functional
 *
 *     f(S) = sum_i α_i x*(S_i x),   α_i = conj(z_i)|z_i|^(p-2) / w^(p-1),
 *
 * with z = pair_image(T, pair); the subdifferential is their convex hull.
 * Pairs in one unimodular orbit give the same f, so one generator is emitted
 * per orbit.
 */

#include <jnrad/errors.hpp>
#include <jnrad/radius.hpp>
#include <jnrad/tuple.hpp>

#include <algorithm>
#include <optional>
#include <string_view>
#include <vector>

namespace jnrad {

struct SubdiffGenerator {
  NormingPair pair;
  CoefficientVector alpha;
};

enum class Smoothness { Smooth, NotSmooth, Inconclusive };

inline std::string_view to_string(Smoothness s) {
  switch (s) {
    case Smoothness::Smooth: return "Smooth";
    case Smoothness::NotSmooth: return "NotSmooth";
    case Smoothness::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

struct GateauxReport {
  double g_plus = 0.0;
  double g_minus = 0.0;
  std::vector<double> c_values;  ///< one per attaining orbit, before the 1/w^(p-1) factor
  Smoothness smooth = Smoothness::Inconclusive;
  std::optional<double> derivative;
  bool exhaustive = false;  ///< false: g_plus is a lower estimate, g_minus an upper estimate
};

struct SmoothnessReport {
  Smoothness verdict = Smoothness::Inconclusive;
  bool exhaustive = false;
  /// The unique supporting functional when verdict == Smooth.
  std::optional<SubdiffGenerator> gradient;
};

inline constexpr double kSmoothValueWindow = 1e-6;

inline void require_positive_radius(const RadiusResult& rr) {
  if (!(rr.value > 0.0) || rr.degenerate)
    fail(ErrorCode::ZeroRadius, "w_p(T) = " + std::to_string(rr.value) + " is not a positive norm value");
}

/// Σ_i α_i x*(S_i x).
inline Scalar apply(const SubdiffGenerator& gen, const OperatorTuple& S) {
  if (gen.alpha.alpha.size() != S.d()) fail(ErrorCode::DimensionMismatch, "generator and tuple differ in d");
  const Vector z = pair_image(S, gen.pair);
  Scalar acc{0.0, 0.0};
  for (int i = 0; i < S.d(); ++i) acc += gen.alpha.alpha[i] * z[i];
  return acc;
}

/**
 * Matrices D_i with f(S) = Σ_i Σ_jk D_i(j,k) S_i(j,k); the gradient of w_p at
 * a smooth tuple is S ↦ Re of this sum.
 */
inline std::vector<Matrix> derivative_matrices(const SubdiffGenerator& gen) {
  std::vector<Matrix> out;
  const Matrix outer = gen.pair.x_star.conjugate() * gen.pair.x.transpose();
  for (Eigen::Index i = 0; i < gen.alpha.alpha.size(); ++i) out.push_back(gen.alpha.alpha[i] * outer);
  return out;
}

/// One generator per attaining orbit. Throws ZeroRadius when w_p(T) is not positive.
inline std::vector<SubdiffGenerator> generators(const OperatorTuple& T, const SpaceDescriptor& space,
                                                const RadiusResult& rr) {
  detail::require_compatible(T, space);
  require_positive_radius(rr);
  std::vector<SubdiffGenerator> out;
  out.reserve(rr.attaining.orbits.size());
  for (const auto& orbit : rr.attaining.orbits)
    out.push_back({orbit.representative, subdiff_coefficients(T, orbit.representative, rr.value)});
  return out;
}

namespace detail {

inline bool in_list(const Vector& v, const std::vector<RealVector>& list) {
  for (const auto& e : list)
    if ((v - e.cast<Scalar>()).cwiseAbs().maxCoeff() <= kDescriptorTol) return true;
  return false;
}

}  // namespace detail

/**
 * Smooth iff the attaining set is one unimodular orbit of extreme pairs.
 *
 * Exhaustive results give a definitive verdict. Multi-start results give
 * NotSmooth for two or more orbits, Smooth for one orbit with no other local
 * maximum within 1e-6·w, and Inconclusive otherwise.
 */
inline SmoothnessReport smoothness(const OperatorTuple& T, const SpaceDescriptor& space, const RadiusResult& rr) {
  const auto gens = generators(T, space, rr);
  SmoothnessReport rep;
  rep.exhaustive = rr.attaining.exhaustive;
  if (rr.attaining.exhaustive) {
    if (const auto ext = extreme_points(space)) {
      for (const auto& g : gens)
        if (!detail::in_list(g.pair.x, ext->primal) || !detail::in_list(g.pair.x_star, ext->dual))
          fail(ErrorCode::InconsistentDescriptor, "attaining representative is not an extreme pair");
    }
    rep.verdict = gens.size() == 1 ? Smoothness::Smooth : Smoothness::NotSmooth;
  } else if (gens.size() >= 2) {
    rep.verdict = Smoothness::NotSmooth;
  } else if (rr.runner_up && *rr.runner_up >= rr.value * (1.0 - kSmoothValueWindow)) {
    rep.verdict = Smoothness::Inconclusive;
  } else {
    rep.verdict = Smoothness::Smooth;
  }
  if (rep.verdict == Smoothness::Smooth) rep.gradient = gens.front();
  return rep;
}

/**
 * G±(T, S) = max / min over attaining orbits of
 * Σ_i Re(conj(z_i)|z_i|^(p-2) x*(S_i x)), divided by w^(p-1).
 *
 * The derivative is populated iff the smoothness verdict is Smooth.
 */
inline GateauxReport gateaux_one_sided(const OperatorTuple& T, const OperatorTuple& S, const SpaceDescriptor& space,
                                       const RadiusResult& rr) {
  detail::require_compatible(T, space);
  detail::require_compatible(S, space);
  if (S.d() != T.d()) fail(ErrorCode::DimensionMismatch, "direction tuple differs in d");
  const auto sm = smoothness(T, space, rr);

  GateauxReport rep;
  rep.exhaustive = rr.attaining.exhaustive;
  rep.smooth = sm.verdict;
  for (const auto& orbit : rr.attaining.orbits) {
    const Vector z = pair_image(T, orbit.representative);
    const Vector s = pair_image(S, orbit.representative);
    double c = 0.0;
    for (int i = 0; i < T.d(); ++i) c += (dual_power(z[i], T.p()) * s[i]).real();
    rep.c_values.push_back(c);
  }
  const double scale = std::pow(rr.value, T.p() - 1.0);
  rep.g_plus = *std::max_element(rep.c_values.begin(), rep.c_values.end()) / scale;
  rep.g_minus = *std::min_element(rep.c_values.begin(), rep.c_values.end()) / scale;
  if (sm.verdict == Smoothness::Smooth) rep.derivative = rep.g_plus;
  return rep;
}

}  // namespace jnrad
