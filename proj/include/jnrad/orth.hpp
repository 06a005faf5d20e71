#pragma once

/**
 * @file orth.hpp
 * @brief Birkhoff-James orthogonality of a tuple to a direction family.
 *
 * T ⊥ V (w_p(T + S) >= w_p(T) for all S in V) holds iff convex weights t_j on
 * attaining orbits exist with
 *
 *     Σ_j t_j Σ_i conj(z_ji)|z_ji|^(p-2) x_j*(S_i x_j) = 0   for every S in V,
 *
 * and for the scaled family {λS : λ ∈ F^d} iff the per-component sums vanish
 * for each i. Both reduce to 0 ∈ conv{v_j}, decided by hull_membership().
 * Complex constraints are split into real and imaginary rows.
 */

#include <jnrad/errors.hpp>
#include <jnrad/lp.hpp>
#include <jnrad/radius.hpp>
#include <jnrad/subdiff.hpp>
#include <jnrad/tuple.hpp>

#include <optional>
#include <vector>

namespace jnrad {

struct CertificateWeight {
  std::size_t orbit_index;
  double t;
};

struct OrthCertificate {
  std::vector<CertificateWeight> weights;
  double residual = 0.0;  ///< max |constraint sum| at the weights
};

struct OrthResult {
  bool orthogonal = false;
  /// Attaining set was not exhaustive; a false verdict may come from missed orbits.
  bool approximate = false;
  std::optional<OrthCertificate> certificate;
};

/// Basis tuples S^(k) spanning a direction subspace; all share (d, n, field, p).
struct TupleSubspace {
  std::vector<OperatorTuple> basis;
};

struct OrthOptions {
  double tol = 1e-9;
  bool check_dependence = true;
};

namespace detail {

/// Rows = constraints, columns = orbits.
using ConstraintMatrix = Eigen::MatrixXcd;

inline ConstraintMatrix scalar_constraints(const OperatorTuple& T, const OperatorTuple& S, const RadiusResult& rr) {
  const auto& orbits = rr.attaining.orbits;
  ConstraintMatrix c(T.d(), static_cast<Eigen::Index>(orbits.size()));
  for (std::size_t j = 0; j < orbits.size(); ++j) {
    const Vector z = pair_image(T, orbits[j].representative);
    const Vector s = pair_image(S, orbits[j].representative);
    for (int i = 0; i < T.d(); ++i) c(i, static_cast<Eigen::Index>(j)) = dual_power(z[i], T.p()) * s[i];
  }
  return c;
}

inline ConstraintMatrix subspace_constraints(const OperatorTuple& T, const TupleSubspace& V, const RadiusResult& rr) {
  const auto& orbits = rr.attaining.orbits;
  ConstraintMatrix c(static_cast<Eigen::Index>(V.basis.size()), static_cast<Eigen::Index>(orbits.size()));
  for (std::size_t j = 0; j < orbits.size(); ++j) {
    const Vector z = pair_image(T, orbits[j].representative);
    for (std::size_t k = 0; k < V.basis.size(); ++k) {
      const Vector s = pair_image(V.basis[k], orbits[j].representative);
      Scalar acc{0.0, 0.0};
      for (int i = 0; i < T.d(); ++i) acc += dual_power(z[i], T.p()) * s[i];
      c(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j)) = acc;
    }
  }
  return c;
}

inline double residual_of(const ConstraintMatrix& c, const std::vector<CertificateWeight>& weights) {
  Vector sum = Vector::Zero(c.rows());
  for (const auto& w : weights) {
    if (w.orbit_index >= static_cast<std::size_t>(c.cols()))
      fail(ErrorCode::StaleIndex, "certificate references orbit " + std::to_string(w.orbit_index) +
                                      " but only " + std::to_string(c.cols()) + " orbits exist");
    sum += w.t * c.col(static_cast<Eigen::Index>(w.orbit_index));
  }
  return c.rows() == 0 ? 0.0 : sum.cwiseAbs().maxCoeff();
}

inline OrthResult decide(const ConstraintMatrix& c, Field field, const RadiusResult& rr, double scale,
                         const OrthOptions& opts) {
  OrthResult out;
  out.approximate = !rr.attaining.exhaustive;
  const double vmax = c.size() == 0 ? 0.0 : c.cwiseAbs().maxCoeff();

  // All constraint vectors vanish: every single orbit certifies.
  if (vmax <= 1e-12 * std::max(1.0, scale)) {
    OrthCertificate cert;
    cert.weights.push_back({0, 1.0});
    cert.residual = residual_of(c, cert.weights);
    out.orthogonal = true;
    out.certificate = std::move(cert);
    return out;
  }

  const Eigen::Index rows = field == Field::Complex ? 2 * c.rows() : c.rows();
  HullProblem prob;
  prob.tolerance = opts.tol;
  prob.target = RealVector::Zero(rows);
  for (Eigen::Index j = 0; j < c.cols(); ++j) {
    RealVector v(rows);
    for (Eigen::Index i = 0; i < c.rows(); ++i) {
      v[i] = c(i, j).real() / vmax;
      if (field == Field::Complex) v[c.rows() + i] = c(i, j).imag() / vmax;
    }
    prob.points.push_back(std::move(v));
  }
  const auto hull = hull_membership(prob);
  if (!hull.feasible) return out;

  OrthCertificate cert;
  double sum = 0.0;
  for (std::size_t j = 0; j < hull.weights->size(); ++j)
    if ((*hull.weights)[j] > 0.0) {
      cert.weights.push_back({j, (*hull.weights)[j]});
      sum += (*hull.weights)[j];
    }
  for (auto& w : cert.weights) w.t /= sum;
  cert.residual = residual_of(c, cert.weights);
  out.orthogonal = true;
  out.certificate = std::move(cert);
  return out;
}

inline double frobenius(const OperatorTuple& T) {
  double s = 0.0;
  for (const auto& m : T.matrices()) s += m.squaredNorm();
  return std::sqrt(s);
}

inline void require_same_shape(const OperatorTuple& T, const OperatorTuple& S) {
  if (T.d() != S.d() || T.n() != S.n()) fail(ErrorCode::DimensionMismatch, "direction tuple differs in shape");
  if (T.field() != S.field()) fail(ErrorCode::InvalidArgument, "direction tuple differs in field");
  if (T.p() != S.p()) fail(ErrorCode::InvalidArgument, "direction tuple differs in aggregation exponent");
}

/// Least-squares fit T_i ≈ λ_i S_i; throws DependentDirection when the residual is below 1e-10·max(1, ‖T‖_F).
inline void require_not_scaled(const OperatorTuple& T, const OperatorTuple& S) {
  double res2 = 0.0;
  for (int i = 0; i < T.d(); ++i) {
    const double ss = S[i].squaredNorm();
    Scalar lambda{0.0, 0.0};
    if (ss > 0.0) {
      Scalar inner{0.0, 0.0};
      for (Eigen::Index k = 0; k < S[i].size(); ++k) inner += std::conj(S[i].data()[k]) * T[i].data()[k];
      lambda = inner / ss;
    }
    res2 += (T[i] - lambda * S[i]).squaredNorm();
  }
  if (std::sqrt(res2) < 1e-10 * std::max(1.0, frobenius(T)))
    fail(ErrorCode::DependentDirection, "T lies in the component-wise scalings of S");
}

/// Rank test: throws DependentDirection when T lies in span(V).
inline void require_outside_span(const OperatorTuple& T, const TupleSubspace& V) {
  const Eigen::Index len = static_cast<Eigen::Index>(T.d()) * T.n() * T.n();
  auto flatten = [len](const OperatorTuple& X) {
    Vector out(len);
    Eigen::Index pos = 0;
    for (const auto& m : X.matrices())
      for (Eigen::Index k = 0; k < m.size(); ++k) out[pos++] = m.data()[k];
    return out;
  };
  Matrix basis(len, static_cast<Eigen::Index>(V.basis.size()));
  for (std::size_t k = 0; k < V.basis.size(); ++k) basis.col(static_cast<Eigen::Index>(k)) = flatten(V.basis[k]);
  const Vector t = flatten(T);
  const Vector coef = basis.completeOrthogonalDecomposition().solve(t);
  if ((basis * coef - t).norm() < 1e-10 * std::max(1.0, t.norm()))
    fail(ErrorCode::DependentDirection, "T lies in the span of the subspace basis");
}

}  // namespace detail

/**
 * Decides T ⊥ F^d S: w_p(T + λS) >= w_p(T) for all λ ∈ F^d.
 *
 * Exact when rr is exhaustive; flagged approximate otherwise.
 */
inline OrthResult orth_scalar(const OperatorTuple& T, const OperatorTuple& S, const SpaceDescriptor& space,
                              const RadiusResult& rr, const OrthOptions& opts = {}) {
  detail::require_compatible(T, space);
  detail::require_same_shape(T, S);
  require_positive_radius(rr);
  if (opts.check_dependence) detail::require_not_scaled(T, S);
  const double scale = std::pow(rr.value, T.p() - 1.0) * detail::frobenius(S);
  return detail::decide(detail::scalar_constraints(T, S, rr), T.field(), rr, scale, opts);
}

/// Decides T ⊥ V for V = span(basis).
inline OrthResult orth_subspace(const OperatorTuple& T, const TupleSubspace& V, const SpaceDescriptor& space,
                                const RadiusResult& rr, const OrthOptions& opts = {}) {
  detail::require_compatible(T, space);
  if (V.basis.empty()) fail(ErrorCode::EmptyBasis, "subspace basis is empty");
  double sn = 0.0;
  for (const auto& S : V.basis) {
    detail::require_same_shape(T, S);
    sn = std::max(sn, detail::frobenius(S));
  }
  require_positive_radius(rr);
  if (opts.check_dependence) detail::require_outside_span(T, V);
  const double scale = std::pow(rr.value, T.p() - 1.0) * sn;
  return detail::decide(detail::subspace_constraints(T, V, rr), T.field(), rr, scale, opts);
}

namespace detail {

inline void require_convex(const OrthCertificate& cert) {
  double sum = 0.0;
  for (const auto& w : cert.weights) {
    if (!(w.t > 0.0)) fail(ErrorCode::InvalidArgument, "certificate weights must be positive");
    sum += w.t;
  }
  if (std::abs(sum - 1.0) > 1e-10)
    fail(ErrorCode::InvalidArgument, "certificate weights sum to " + std::to_string(sum) + ", not 1");
}

}  // namespace detail

/// Recomputes the per-component constraint sums of a scaled-direction certificate.
inline double verify_certificate(const OrthCertificate& cert, const OperatorTuple& T, const OperatorTuple& S,
                                 const RadiusResult& rr) {
  detail::require_same_shape(T, S);
  detail::require_convex(cert);
  return detail::residual_of(detail::scalar_constraints(T, S, rr), cert.weights);
}

/// Recomputes the per-basis constraint sums of a subspace certificate.
inline double verify_certificate(const OrthCertificate& cert, const OperatorTuple& T, const TupleSubspace& V,
                                 const RadiusResult& rr) {
  for (const auto& S : V.basis) detail::require_same_shape(T, S);
  detail::require_convex(cert);
  return detail::residual_of(detail::subspace_constraints(T, V, rr), cert.weights);
}

}  // namespace jnrad
