#pragma once

/**
 * @file space.hpp
 * @brief Finite-dimensional normed spaces: norms, dual norms, duality maps,
 *        extreme points and norming pairs.
 *
 * Two norm families are modelled:
 *  - LpNorm(r), r in [1, inf], over either field. For 1 < r < inf the space is
 *    smooth and strictly convex; r in {1, inf} over the reals expands to
 *    finite extreme-point data.
 *  - Polyhedral (real field only), given by the extreme points of the unit
 *    ball and of the dual unit ball. The norm is max_u |<u, v>| over dual
 *    extremes, the dual norm max_v |<v, u>| over primal extremes.
 */

#include <jnrad/errors.hpp>
#include <jnrad/random.hpp>
#include <jnrad/types.hpp>

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace jnrad {

inline constexpr double kDescriptorTol = 1e-12;
inline constexpr double kUnitTol = 1e-10;
inline constexpr double kAdmissibleTol = 1e-12;
inline constexpr int kMaxSignDim = 20;

struct LpNorm {
  double r;
};

struct PolyhedralNorm {
  std::vector<RealVector> primal_extremes;
  std::vector<RealVector> dual_extremes;
};

/// Unit vector x with unit dual vector x_star and x*(x) = 1.
struct NormingPair {
  Vector x;
  Vector x_star;
};

class SpaceDescriptor {
 public:
  using Norm = std::variant<LpNorm, PolyhedralNorm>;

  static SpaceDescriptor lp(Field field, int dim, double r) {
    if (dim < 1) fail(ErrorCode::InvalidArgument, "space dimension must be positive");
    if (!(r >= 1.0)) fail(ErrorCode::InvalidArgument, "lp exponent must satisfy r >= 1");
    return SpaceDescriptor(field, dim, LpNorm{r});
  }

  static SpaceDescriptor polyhedral(std::vector<RealVector> primal, std::vector<RealVector> dual) {
    if (primal.empty() || dual.empty())
      fail(ErrorCode::InconsistentDescriptor, "polyhedral extreme lists must be nonempty");
    const auto dim = primal.front().size();
    if (dim < 1) fail(ErrorCode::InvalidArgument, "space dimension must be positive");
    for (const auto& v : primal)
      if (v.size() != dim) fail(ErrorCode::DimensionMismatch, "primal extremes differ in length");
    for (const auto& u : dual)
      if (u.size() != dim) fail(ErrorCode::DimensionMismatch, "dual extremes differ in length");
    check_negation_closed(primal, "primal");
    check_negation_closed(dual, "dual");
    check_spanning(primal, "primal");
    check_spanning(dual, "dual");
    check_consistent(primal, dual, "primal");
    check_consistent(dual, primal, "dual");
    return SpaceDescriptor(Field::Real, static_cast<int>(dim),
                           PolyhedralNorm{std::move(primal), std::move(dual)});
  }

  Field field() const { return field_; }
  int dim() const { return dim_; }
  const Norm& norm() const { return norm_; }

  bool is_polyhedral() const { return std::holds_alternative<PolyhedralNorm>(norm_); }

  std::optional<double> lp_exponent() const {
    if (const auto* lp = std::get_if<LpNorm>(&norm_)) return lp->r;
    return std::nullopt;
  }

  /// LpNorm with 1 < r < inf: unique norming functional for every unit vector.
  bool is_smooth_lp() const {
    const auto r = lp_exponent();
    return r && *r > 1.0 && !std::isinf(*r);
  }

  /// Polyhedral, or real ℓ1 / ℓ∞.
  bool has_finite_extremes() const {
    if (is_polyhedral()) return true;
    const double r = *lp_exponent();
    return field_ == Field::Real && (r == 1.0 || std::isinf(r));
  }

  std::string describe() const {
    if (is_polyhedral()) return "polyhedral^" + std::to_string(dim_);
    const double r = *lp_exponent();
    return std::string(to_string(field_)) + " l" + (std::isinf(r) ? std::string("inf") : trim(r)) + "^" +
           std::to_string(dim_);
  }

 private:
  SpaceDescriptor(Field field, int dim, Norm norm) : field_(field), dim_(dim), norm_(std::move(norm)) {}

  static std::string trim(double r) {
    std::string s = std::to_string(r);
    while (!s.empty() && s.back() == '0') s.pop_back();
    if (!s.empty() && s.back() == '.') s.pop_back();
    return s;
  }

  static void check_negation_closed(const std::vector<RealVector>& pts, const char* which) {
    for (const auto& v : pts) {
      bool found = false;
      for (const auto& w : pts)
        if ((v + w).cwiseAbs().maxCoeff() <= kDescriptorTol) {
          found = true;
          break;
        }
      if (!found)
        fail(ErrorCode::InconsistentDescriptor, std::string(which) + " extremes are not closed under negation");
    }
  }

  // Both balls must be bounded with nonempty interior.
  static void check_spanning(const std::vector<RealVector>& pts, const char* which) {
    Eigen::MatrixXd m(pts.front().size(), static_cast<Eigen::Index>(pts.size()));
    for (std::size_t j = 0; j < pts.size(); ++j) m.col(static_cast<Eigen::Index>(j)) = pts[j];
    Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
    lu.setThreshold(kDescriptorTol);
    if (lu.rank() < m.rows())
      fail(ErrorCode::InconsistentDescriptor, std::string(which) + " extremes do not span the space");
  }

  static void check_consistent(const std::vector<RealVector>& pts, const std::vector<RealVector>& functionals,
                               const char* which) {
    for (const auto& v : pts) {
      double best = 0.0;
      for (const auto& u : functionals) best = std::max(best, std::abs(u.dot(v)));
      if (std::abs(best - 1.0) > kDescriptorTol)
        fail(ErrorCode::InconsistentDescriptor,
             std::string(which) + " extreme has max pairing " + std::to_string(best) + " against the other list");
    }
  }

  Field field_;
  int dim_;
  Norm norm_;
};

namespace detail {

inline void require_dim(const SpaceDescriptor& space, const Vector& v) {
  if (v.size() != space.dim())
    fail(ErrorCode::DimensionMismatch,
         "vector of length " + std::to_string(v.size()) + " in a space of dimension " + std::to_string(space.dim()));
}

inline double max_pairing(const std::vector<RealVector>& functionals, const Vector& v) {
  double best = 0.0;
  for (const auto& u : functionals) {
    Scalar acc{0.0, 0.0};
    for (Eigen::Index i = 0; i < v.size(); ++i) acc += u[i] * v[i];
    best = std::max(best, std::abs(acc));
  }
  return best;
}

inline Vector to_complex(const RealVector& v) { return v.cast<Scalar>(); }

/// {±1}^n in lexicographic order, first coordinate most significant, + before -.
inline std::vector<RealVector> sign_vectors(int n) {
  if (n > kMaxSignDim)
    fail(ErrorCode::TooLarge, "sign-vector enumeration is capped at dimension " + std::to_string(kMaxSignDim));
  std::vector<RealVector> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t k = 0; k < (std::uint64_t{1} << n); ++k) {
    RealVector s(n);
    for (int j = 0; j < n; ++j) s[j] = ((k >> (n - 1 - j)) & 1u) ? -1.0 : 1.0;
    out.push_back(std::move(s));
  }
  return out;
}

/// e_1, -e_1, e_2, -e_2, ...
inline std::vector<RealVector> signed_basis(int n) {
  std::vector<RealVector> out;
  out.reserve(2 * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    RealVector e = RealVector::Zero(n);
    e[i] = 1.0;
    out.push_back(e);
    out.push_back(-e);
  }
  return out;
}

}  // namespace detail

/// ‖v‖ in the space.
inline double norm_eval(const SpaceDescriptor& space, const Vector& v) {
  detail::require_dim(space, v);
  if (const auto* poly = std::get_if<PolyhedralNorm>(&space.norm()))
    return detail::max_pairing(poly->dual_extremes, v);
  return lp_norm(v, *space.lp_exponent());
}

/// ‖u‖ in the dual space.
inline double dual_norm_eval(const SpaceDescriptor& space, const Vector& u) {
  detail::require_dim(space, u);
  if (const auto* poly = std::get_if<PolyhedralNorm>(&space.norm()))
    return detail::max_pairing(poly->primal_extremes, u);
  return lp_norm(u, conjugate_exponent(*space.lp_exponent()));
}

struct ExtremeSets {
  std::vector<RealVector> primal;
  std::vector<RealVector> dual;
};

/**
 * Extreme points of the unit ball and dual unit ball, or nullopt when they form
 * the whole sphere (1 < r < inf). Complex ℓ1/ℓ∞ throws Unsupported.
 */
inline std::optional<ExtremeSets> extreme_points(const SpaceDescriptor& space) {
  if (const auto* poly = std::get_if<PolyhedralNorm>(&space.norm()))
    return ExtremeSets{poly->primal_extremes, poly->dual_extremes};
  const double r = *space.lp_exponent();
  if (r > 1.0 && !std::isinf(r)) return std::nullopt;
  if (space.field() == Field::Complex)
    fail(ErrorCode::Unsupported, "extreme structure of complex l1/linf is not implemented");
  if (r == 1.0) return ExtremeSets{detail::signed_basis(space.dim()), detail::sign_vectors(space.dim())};
  return ExtremeSets{detail::sign_vectors(space.dim()), detail::signed_basis(space.dim())};
}

/// Pairs (x, x*) of primal and dual extremes with x*(x) = 1, ordered by primal
/// index then dual index.
inline std::vector<NormingPair> admissible_pairs(const SpaceDescriptor& space) {
  const auto ext = extreme_points(space);
  if (!ext) fail(ErrorCode::Unsupported, "admissible pairs need finite extreme-point lists");
  std::vector<NormingPair> out;
  for (const auto& x : ext->primal)
    for (const auto& u : ext->dual)
      if (std::abs(u.dot(x) - 1.0) <= kAdmissibleTol)
        out.push_back({detail::to_complex(x), detail::to_complex(u)});
  return out;
}

/**
 * Extreme-point norming functionals of the unit vector x.
 *
 * Smooth ℓr returns the single pair with x*_i = x_i |x_i|^(r-2) (stored form;
 * as a functional its coefficients are conj(x_i)|x_i|^(r-2)). Finite-extreme
 * spaces return every dual extreme u with u(x) = 1 within 1e-10.
 */
inline std::vector<NormingPair> duality_map(const SpaceDescriptor& space, const Vector& x) {
  detail::require_dim(space, x);
  const double nx = norm_eval(space, x);
  if (std::abs(nx - 1.0) > kUnitTol)
    fail(ErrorCode::NotUnitVector, "duality map needs a unit vector, got norm " + std::to_string(nx));
  if (space.is_smooth_lp()) {
    const double r = *space.lp_exponent();
    const Vector xu = x / nx;
    Vector xs(xu.size());
    for (Eigen::Index i = 0; i < xu.size(); ++i) xs[i] = std::conj(dual_power(xu[i], r));
    return {{xu, xs}};
  }
  if (space.field() == Field::Real && !is_real(x))
    fail(ErrorCode::InvalidArgument, "complex vector in a real space");
  const auto ext = extreme_points(space);
  std::vector<NormingPair> out;
  for (const auto& u : ext->dual) {
    double acc = 0.0;
    for (Eigen::Index i = 0; i < x.size(); ++i) acc += u[i] * x[i].real();
    if (std::abs(acc - 1.0) <= kUnitTol) out.push_back({x, detail::to_complex(u)});
  }
  if (out.empty()) fail(ErrorCode::InconsistentDescriptor, "no dual extreme norms a unit vector");
  return out;
}

/// Residuals of the norming-pair invariants: max of |‖x‖-1|, |‖x*‖-1|, |x*(x)-1|.
inline double pair_defect(const SpaceDescriptor& space, const NormingPair& pair) {
  detail::require_dim(space, pair.x);
  detail::require_dim(space, pair.x_star);
  return std::max({std::abs(norm_eval(space, pair.x) - 1.0), std::abs(dual_norm_eval(space, pair.x_star) - 1.0),
                   std::abs(pairing(pair.x_star, pair.x) - 1.0)});
}

inline void require_pair(const SpaceDescriptor& space, const NormingPair& pair) {
  const double defect = pair_defect(space, pair);
  if (defect > kUnitTol)
    fail(ErrorCode::InvalidArgument, "not a norming pair (defect " + std::to_string(defect) + ")");
}

namespace detail {

/// Point on the unit sphere of a finite-extreme space. Half the draws are
/// Gaussian directions; the other half are sparse Dirichlet combinations of
/// primal extremes, which put mass near vertices and low-dimensional faces.
inline Vector sample_polyhedral_point(const SpaceDescriptor& space, const std::vector<RealVector>& primal, Rng& rng) {
  for (;;) {
    Vector v;
    if (std::bernoulli_distribution(0.5)(rng)) {
      v = gaussian_vector(Field::Real, space.dim(), rng);
    } else {
      std::gamma_distribution<double> gamma(0.15, 1.0);
      RealVector acc = RealVector::Zero(space.dim());
      for (const auto& e : primal) acc += gamma(rng) * e;
      v = to_complex(acc);
    }
    const double nv = norm_eval(space, v);
    if (nv > 1e-12) return v / nv;
  }
}

}  // namespace detail

/**
 * count valid norming pairs, deterministic for a fixed seed. Smooth ℓr draws
 * x from a normalized Gaussian; finite-extreme spaces pick x* uniformly among
 * the active dual extremes of x.
 */
inline std::vector<NormingPair> sample_pairs(const SpaceDescriptor& space, int count, std::uint64_t seed) {
  if (count < 1) fail(ErrorCode::InvalidArgument, "sample count must be at least 1");
  Rng rng = make_rng(seed, 0x5350u);
  std::vector<NormingPair> out;
  out.reserve(static_cast<std::size_t>(count));
  if (space.is_smooth_lp()) {
    for (int k = 0; k < count; ++k) {
      Vector g;
      double ng = 0.0;
      do {
        g = gaussian_vector(space.field(), space.dim(), rng);
        ng = norm_eval(space, g);
      } while (ng <= 1e-12);
      out.push_back(duality_map(space, g / ng).front());
    }
    return out;
  }
  const auto ext = extreme_points(space);
  for (int k = 0; k < count; ++k) {
    const Vector x = detail::sample_polyhedral_point(space, ext->primal, rng);
    auto candidates = duality_map(space, x);
    std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
    out.push_back(std::move(candidates[pick(rng)]));
  }
  return out;
}

}  // namespace jnrad
