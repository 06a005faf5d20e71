#pragma once

#include <jnrad/types.hpp>

#include <cstdint>
#include <random>

namespace jnrad {

using Rng = std::mt19937_64;

/// Independent generator for (seed, stream). Streams let parallel or
/// restarted work draw from fixed sequences regardless of execution order.
inline Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                    0x6a6e7261u};
  return Rng(seq);
}

/// Standard Gaussian vector over the field (circular complex Gaussian for Complex).
inline Vector gaussian_vector(Field field, Eigen::Index n, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Vector v(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double re = normal(rng);
    const double im = field == Field::Complex ? normal(rng) : 0.0;
    v[i] = Scalar(re, im);
  }
  return v;
}

inline Matrix gaussian_matrix(Field field, Eigen::Index n, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix m(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) {
      const double re = normal(rng);
      const double im = field == Field::Complex ? normal(rng) : 0.0;
      m(i, j) = Scalar(re, im);
    }
  return m;
}

/// Unimodular scalar: ±1 for Real, e^{iθ} for Complex.
inline Scalar random_unimodular(Field field, Rng& rng) {
  if (field == Field::Real) return std::bernoulli_distribution(0.5)(rng) ? 1.0 : -1.0;
  const double theta = std::uniform_real_distribution<double>(0.0, 2.0 * M_PI)(rng);
  return std::polar(1.0, theta);
}

}  // namespace jnrad
