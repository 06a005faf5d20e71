#pragma once

/**
 * @file types.hpp
 * @brief Scalar, vector and matrix aliases shared by every jnrad header.
 *
 * All computations run over std::complex<double>. Real-field problems carry
 * zero imaginary parts and restrict unimodular scalars to {+1, -1}; this keeps
 * one code path for both fields.
 *
 * Dual pairing convention: a dual vector is stored as a coefficient vector
 * x_star and acts as
 *
 *     x*(z) = sum_i conj(x_star_i) * z_i,
 *
 * so on a Hilbert space x_star = x reproduces <z, x>. Every header uses this
 * convention through pairing().
 */

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <limits>
#include <string_view>

namespace jnrad {

using Scalar = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class Field { Real, Complex };

inline std::string_view to_string(Field f) {
  return f == Field::Real ? "real" : "complex";
}

/// x*(z) under the fixed pairing convention.
inline Scalar pairing(const Vector& x_star, const Vector& z) {
  Scalar acc{0.0, 0.0};
  for (Eigen::Index i = 0; i < z.size(); ++i) acc += std::conj(x_star[i]) * z[i];
  return acc;
}

/**
 * conj(z) |z|^(e-2), defined as 0 when |z| <= 1e-300.
 *
 * The factor |z|^(e-2) is never formed on its own: for e < 2 it diverges at
 * zero while the product has magnitude |z|^(e-1) -> 0.
 */
inline Scalar dual_power(Scalar z, double e) {
  const double a = std::abs(z);
  if (a <= 1e-300) return {0.0, 0.0};
  return std::conj(z) / a * std::pow(a, e - 1.0);
}

/// Hölder conjugate of p (1 -> inf, inf -> 1).
inline double conjugate_exponent(double p) {
  if (p == 1.0) return kInf;
  if (std::isinf(p)) return 1.0;
  return p / (p - 1.0);
}

inline bool is_real(const Vector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v[i].imag() != 0.0) return false;
  return true;
}

inline bool is_real(const Matrix& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (m(i, j).imag() != 0.0) return false;
  return true;
}

/**
 * ℓr norm of a vector. Finite r > 1 is evaluated with max-abs scaling; the
 * sum runs in index order so identical inputs give identical bits.
 */
inline double lp_norm(const Vector& v, double r) {
  if (std::isinf(r)) {
    double m = 0.0;
    for (Eigen::Index i = 0; i < v.size(); ++i) m = std::max(m, std::abs(v[i]));
    return m;
  }
  if (r == 1.0) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < v.size(); ++i) s += std::abs(v[i]);
    return s;
  }
  double scale = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) scale = std::max(scale, std::abs(v[i]));
  if (scale == 0.0) return 0.0;
  double s = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) s += std::pow(std::abs(v[i]) / scale, r);
  return scale * std::pow(s, 1.0 / r);
}

}  // namespace jnrad
