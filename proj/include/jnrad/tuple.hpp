#pragma once

/**
 * @file tuple.hpp
 * @brief Operator tuples (T_1, ..., T_d) with their aggregation exponent p,
 *        and the per-pair quantities the radius is built from.
 */

#include <jnrad/errors.hpp>
#include <jnrad/space.hpp>
#include <jnrad/types.hpp>

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace jnrad {

/// d square n×n matrices over one field, with 1 < p < inf. Immutable.
class OperatorTuple {
 public:
  OperatorTuple(Field field, std::vector<Matrix> matrices, double p = 2.0)
      : field_(field), matrices_(std::move(matrices)), p_(p) {
    if (matrices_.empty()) fail(ErrorCode::InvalidArgument, "operator tuple needs d >= 1");
    if (!(p_ > 1.0) || std::isinf(p_) || std::isnan(p_))
      fail(ErrorCode::InvalidArgument, "aggregation exponent must satisfy 1 < p < inf, got " + std::to_string(p_));
    const auto n = matrices_.front().rows();
    if (n < 1) fail(ErrorCode::InvalidArgument, "operators must be at least 1x1");
    for (const auto& m : matrices_) {
      if (m.rows() != n || m.cols() != n) fail(ErrorCode::DimensionMismatch, "tuple operators must all be n x n");
      if (field_ == Field::Real && !is_real(m))
        fail(ErrorCode::InvalidArgument, "complex entries in a real-field tuple");
    }
  }

  static OperatorTuple zeros(Field field, int n, int d, double p = 2.0) {
    return OperatorTuple(field, std::vector<Matrix>(static_cast<std::size_t>(d), Matrix::Zero(n, n)), p);
  }

  Field field() const { return field_; }
  int n() const { return static_cast<int>(matrices_.front().rows()); }
  int d() const { return static_cast<int>(matrices_.size()); }
  double p() const { return p_; }
  double q() const { return conjugate_exponent(p_); }

  const Matrix& operator[](int i) const { return matrices_[static_cast<std::size_t>(i)]; }
  const std::vector<Matrix>& matrices() const { return matrices_; }

  OperatorTuple with_p(double p) const { return OperatorTuple(field_, matrices_, p); }

  OperatorTuple scaled(Scalar c) const {
    if (field_ == Field::Real && c.imag() != 0.0) fail(ErrorCode::InvalidArgument, "complex scale on a real tuple");
    auto out = matrices_;
    for (auto& m : out) m *= c;
    return OperatorTuple(field_, std::move(out), p_);
  }

  bool is_zero() const {
    return std::all_of(matrices_.begin(), matrices_.end(), [](const Matrix& m) { return m.isZero(0.0); });
  }

  /// Largest entry magnitude over all components.
  double max_abs_entry() const {
    double m = 0.0;
    for (const auto& t : matrices_) m = std::max(m, t.cwiseAbs().maxCoeff());
    return m;
  }

 private:
  Field field_;
  std::vector<Matrix> matrices_;
  double p_;
};

/// α with ‖α‖_q = 1 when produced from an attaining pair.
struct CoefficientVector {
  Vector alpha;
  bool attaining = true;
};

namespace detail {

inline void require_pair_dim(const OperatorTuple& T, const NormingPair& pair) {
  if (pair.x.size() != T.n() || pair.x_star.size() != T.n())
    fail(ErrorCode::DimensionMismatch, "norming pair length does not match operator size");
}

/// ℓp norm summed in ascending magnitude, so permuting the entries never
/// changes the result.
inline double sorted_lp_norm(const Vector& z, double p) {
  std::vector<double> mags(static_cast<std::size_t>(z.size()));
  for (Eigen::Index i = 0; i < z.size(); ++i) mags[static_cast<std::size_t>(i)] = std::abs(z[i]);
  std::sort(mags.begin(), mags.end());
  const double scale = mags.empty() ? 0.0 : mags.back();
  if (scale == 0.0) return 0.0;
  double s = 0.0;
  for (double m : mags) s += std::pow(m / scale, p);
  return scale * std::pow(s, 1.0 / p);
}

}  // namespace detail

/// (x*(T_1 x), ..., x*(T_d x)).
inline Vector pair_image(const OperatorTuple& T, const NormingPair& pair) {
  detail::require_pair_dim(T, pair);
  Vector z(T.d());
  for (int i = 0; i < T.d(); ++i) z[i] = pairing(pair.x_star, T[i] * pair.x);
  return z;
}

/// ‖pair_image‖_p: the radius objective at one pair.
inline double aggregate(const OperatorTuple& T, const NormingPair& pair) {
  return detail::sorted_lp_norm(pair_image(T, pair), T.p());
}

/**
 * α_i = conj(z_i)|z_i|^(p-2) / w^(p-1) for z = pair_image(T, pair).
 *
 * A pair that does not attain w (relative tolerance attain_tol) still gets its
 * coefficients; the result is flagged with attaining = false.
 */
inline CoefficientVector subdiff_coefficients(const OperatorTuple& T, const NormingPair& pair, double w,
                                              double attain_tol = 1e-8) {
  if (!(w > 0.0)) fail(ErrorCode::ZeroRadius, "subdifferential coefficients need w > 0");
  const Vector z = pair_image(T, pair);
  const double scale = std::pow(w, T.p() - 1.0);
  CoefficientVector out;
  out.alpha.resize(T.d());
  for (int i = 0; i < T.d(); ++i) out.alpha[i] = dual_power(z[i], T.p()) / scale;
  out.attaining = std::abs(detail::sorted_lp_norm(z, T.p()) - w) <= attain_tol * std::max(1.0, w);
  return out;
}

/**
 * Rank-one tuple T_i = conj(α_i)|α_i|^(q-2) · x*(·) x.
 *
 * For a norming pair and ‖α‖_q = 1 the result has joint numerical radius 1,
 * attained by the functional built from (pair, α).
 */
inline OperatorTuple rank_one_tuple(const SpaceDescriptor& space, const NormingPair& pair, const Vector& alpha,
                                    double p) {
  if (alpha.size() < 1 || alpha.cwiseAbs().maxCoeff() == 0.0)
    fail(ErrorCode::InvalidArgument, "rank-one construction needs a nonzero coefficient vector");
  const double q = conjugate_exponent(p);
  if (std::abs(lp_norm(alpha, q) - 1.0) > kUnitTol)
    fail(ErrorCode::InvalidArgument, "coefficient vector must have unit q-norm");
  if (space.field() == Field::Real && !is_real(alpha))
    fail(ErrorCode::InvalidArgument, "complex coefficients in a real space");
  require_pair(space, pair);
  const Matrix base = pair.x * pair.x_star.adjoint();
  std::vector<Matrix> ms;
  ms.reserve(static_cast<std::size_t>(alpha.size()));
  for (Eigen::Index i = 0; i < alpha.size(); ++i) ms.push_back(dual_power(alpha[i], q) * base);
  return OperatorTuple(space.field(), std::move(ms), p);
}

/// Component-wise T_i + λ_i S_i.
inline OperatorTuple tuple_combine(const OperatorTuple& T, const OperatorTuple& S, const Vector& lambda) {
  if (T.d() != S.d() || T.n() != S.n()) fail(ErrorCode::DimensionMismatch, "tuples differ in shape");
  if (T.field() != S.field()) fail(ErrorCode::InvalidArgument, "tuples differ in field");
  if (T.p() != S.p()) fail(ErrorCode::InvalidArgument, "tuples differ in aggregation exponent");
  if (lambda.size() != T.d()) fail(ErrorCode::DimensionMismatch, "lambda length must equal d");
  if (T.field() == Field::Real && !is_real(lambda)) fail(ErrorCode::InvalidArgument, "complex lambda on real tuples");
  std::vector<Matrix> ms;
  ms.reserve(static_cast<std::size_t>(T.d()));
  for (int i = 0; i < T.d(); ++i) ms.push_back(T[i] + lambda[i] * S[i]);
  return OperatorTuple(T.field(), std::move(ms), T.p());
}

/// T + c S with one scalar for every component.
inline OperatorTuple tuple_axpy(const OperatorTuple& T, Scalar c, const OperatorTuple& S) {
  return tuple_combine(T, S, Vector::Constant(T.d(), c));
}

}  // namespace jnrad
