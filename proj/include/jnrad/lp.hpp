#pragma once

/**
 * @file lp.hpp
 * @brief Convex-hull membership by phase-I simplex.
 *
 * Decides whether target ∈ conv{points} by finding t >= 0 with
 *
 *     sum_j t_j (v_j - target) = 0,   sum_j t_j = 1,
 *
 * or proving no such t exists. Dense tableau, one artificial variable per row,
 * Bland's rule for both entering and leaving choices. Problem sizes are tiny
 * (tens of columns, a handful of rows).
 */

#include <jnrad/errors.hpp>
#include <jnrad/types.hpp>

#include <optional>
#include <vector>

namespace jnrad {

struct HullProblem {
  std::vector<RealVector> points;
  RealVector target;
  double tolerance = 1e-9;
};

struct HullResult {
  bool feasible = false;
  std::optional<std::vector<double>> weights;
};

namespace detail {

class PhaseOneTableau {
 public:
  // a: rows x cols constraint matrix, b >= 0.
  PhaseOneTableau(const Eigen::MatrixXd& a, const RealVector& b)
      : rows_(a.rows()), cols_(a.cols()), tab_(a.rows() + 1, a.cols() + a.rows() + 1), basis_(a.rows()) {
    tab_.setZero();
    tab_.topLeftCorner(rows_, cols_) = a;
    tab_.block(0, cols_, rows_, rows_).setIdentity();
    tab_.col(tab_.cols() - 1).head(rows_) = b;
    for (Eigen::Index i = 0; i < rows_; ++i) basis_[i] = cols_ + i;
    // Reduced costs of min sum(artificials), priced out against the initial basis.
    for (Eigen::Index j = 0; j < cols_; ++j) tab_(rows_, j) = -a.col(j).sum();
    tab_(rows_, tab_.cols() - 1) = -b.sum();
  }

  /// Runs to optimality; returns the phase-I objective (sum of artificials).
  double solve() {
    constexpr double kEps = 1e-12;
    const Eigen::Index rhs = tab_.cols() - 1;
    const Eigen::Index max_pivots = 50 * (rows_ + cols_ + 1);
    for (Eigen::Index it = 0; it < max_pivots; ++it) {
      Eigen::Index enter = -1;
      for (Eigen::Index j = 0; j < rhs; ++j)
        if (tab_(rows_, j) < -kEps) {
          enter = j;
          break;
        }
      if (enter < 0) break;
      Eigen::Index leave = -1;
      double best_ratio = 0.0;
      for (Eigen::Index i = 0; i < rows_; ++i) {
        const double aij = tab_(i, enter);
        if (aij <= kEps) continue;
        const double ratio = tab_(i, rhs) / aij;
        if (leave < 0 || ratio < best_ratio - kEps ||
            (std::abs(ratio - best_ratio) <= kEps && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave < 0) break;  // unbounded direction cannot occur in phase I
      pivot(leave, enter);
    }
    return -tab_(rows_, rhs);
  }

  /// Values of the structural variables at the current basis.
  std::vector<double> structural_values() const {
    std::vector<double> x(static_cast<std::size_t>(cols_), 0.0);
    for (Eigen::Index i = 0; i < rows_; ++i)
      if (basis_[i] < cols_) x[static_cast<std::size_t>(basis_[i])] = tab_(i, tab_.cols() - 1);
    return x;
  }

 private:
  void pivot(Eigen::Index r, Eigen::Index c) {
    tab_.row(r) /= tab_(r, c);
    for (Eigen::Index i = 0; i < tab_.rows(); ++i)
      if (i != r && tab_(i, c) != 0.0) tab_.row(i) -= tab_(i, c) * tab_.row(r);
    basis_[r] = c;
  }

  Eigen::Index rows_;
  Eigen::Index cols_;
  Eigen::MatrixXd tab_;
  std::vector<Eigen::Index> basis_;
};

}  // namespace detail

/**
 * Convex weights reconstructing the target, if any.
 *
 * Feasible results satisfy ‖Σ t_j v_j - target‖_∞ <= tolerance, t >= 0 and
 * Σ t_j = 1 to rounding. The output is a basic solution: deterministic, and
 * {1, -1} with target 0 yields (1/2, 1/2).
 */
inline HullResult hull_membership(const HullProblem& prob) {
  if (prob.points.empty()) fail(ErrorCode::InvalidArgument, "hull problem needs at least one point");
  if (!(prob.tolerance > 0.0)) fail(ErrorCode::InvalidArgument, "hull tolerance must be positive");
  const Eigen::Index k = prob.target.size();
  for (const auto& v : prob.points)
    if (v.size() != k) fail(ErrorCode::DimensionMismatch, "hull points and target differ in dimension");
  const auto m = static_cast<Eigen::Index>(prob.points.size());

  Eigen::MatrixXd a(k + 1, m);
  RealVector b = RealVector::Zero(k + 1);
  for (Eigen::Index j = 0; j < m; ++j) {
    a.col(j).head(k) = prob.points[static_cast<std::size_t>(j)] - prob.target;
    a(k, j) = 1.0;
  }
  b[k] = 1.0;
  // Partial scaling: each coordinate row by its largest magnitude.
  for (Eigen::Index i = 0; i < k; ++i) {
    const double s = a.row(i).cwiseAbs().maxCoeff();
    if (s > 0.0) a.row(i) /= s;
  }

  detail::PhaseOneTableau tableau(a, b);
  const double infeasibility = tableau.solve();
  if (infeasibility > prob.tolerance) return {false, std::nullopt};

  std::vector<double> t = tableau.structural_values();
  double sum = 0.0;
  for (double& w : t) {
    w = std::max(w, 0.0);
    sum += w;
  }
  if (!(sum > 0.0)) return {false, std::nullopt};
  for (double& w : t) w /= sum;

  RealVector recon = RealVector::Zero(k);
  for (Eigen::Index j = 0; j < m; ++j) recon += t[static_cast<std::size_t>(j)] * prob.points[static_cast<std::size_t>(j)];
  if (k > 0 && (recon - prob.target).cwiseAbs().maxCoeff() > prob.tolerance) return {false, std::nullopt};
  return {true, std::move(t)};
}

}  // namespace jnrad
