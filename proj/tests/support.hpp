#pragma once

// Instance generators and independent oracles shared by the unit and
// acceptance tests. Nothing here calls the solvers.

#include <jnrad/random.hpp>
#include <jnrad/space.hpp>
#include <jnrad/tuple.hpp>

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

namespace jnrad::testkit {

inline OperatorTuple random_tuple(Field field, int n, int d, double p, Rng& rng) {
  std::vector<Matrix> ms;
  for (int i = 0; i < d; ++i) ms.push_back(gaussian_matrix(field, n, rng));
  return OperatorTuple(field, std::move(ms), p);
}

/// Entries drawn from {-1, 0, 1}; produces ties and exact zeros.
inline OperatorTuple integer_tuple(int n, int d, double p, Rng& rng) {
  std::uniform_int_distribution<int> pick(-1, 1);
  std::vector<Matrix> ms;
  for (int i = 0; i < d; ++i) {
    Matrix m(n, n);
    for (Eigen::Index k = 0; k < m.size(); ++k) m.data()[k] = static_cast<double>(pick(rng));
    ms.push_back(m);
  }
  return OperatorTuple(Field::Real, std::move(ms), p);
}

inline Matrix diag2(Scalar a, Scalar b) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

inline OperatorTuple single(Field field, const Matrix& m, double p = 2.0) { return OperatorTuple(field, {m}, p); }

// ---------------------------------------------------------------------------
// Planar geometry

using Point = Eigen::Vector2d;

inline double cross(const Point& o, const Point& a, const Point& b) {
  return (a.x() - o.x()) * (b.y() - o.y()) - (a.y() - o.y()) * (b.x() - o.x());
}

/// Counter-clockwise hull without collinear points (Andrew's monotone chain).
inline std::vector<Point> convex_hull(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
    return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y());
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Point> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

inline double segment_distance(const Point& p, const Point& a, const Point& b) {
  const Point ab = b - a;
  const double len2 = ab.squaredNorm();
  const double t = len2 > 0 ? std::clamp((p - a).dot(ab) / len2, 0.0, 1.0) : 0.0;
  return (p - (a + t * ab)).norm();
}

/// Distance from p to the boundary of conv(hull); hull as returned by convex_hull().
inline double boundary_distance(const Point& p, const std::vector<Point>& hull) {
  if (hull.size() == 1) return (p - hull[0]).norm();
  double best = kInf;
  for (std::size_t i = 0; i < hull.size(); ++i)
    best = std::min(best, segment_distance(p, hull[i], hull[(i + 1) % hull.size()]));
  return best;
}

/// Strictly inside a counter-clockwise polygon with at least 3 vertices.
inline bool strictly_inside(const Point& p, const std::vector<Point>& hull) {
  if (hull.size() < 3) return false;
  for (std::size_t i = 0; i < hull.size(); ++i)
    if (cross(hull[i], hull[(i + 1) % hull.size()], p) <= 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Random consistent polyhedral descriptors

/// Centrally symmetric polygon: hull vertices as primal extremes, edge normals
/// u with u·a = u·b = 1 as dual extremes.
inline SpaceDescriptor random_polygon_space(Rng& rng, int half_vertices) {
  std::uniform_real_distribution<double> ang(0.0, M_PI), rad(0.5, 1.5);
  std::vector<Point> pts;
  for (int k = 0; k < half_vertices; ++k) {
    const double a = ang(rng), r = rad(rng);
    const Point v(r * std::cos(a), r * std::sin(a));
    pts.push_back(v);
    pts.push_back(-v);
  }
  const auto hull = convex_hull(pts);
  std::vector<RealVector> primal, dual;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const Point& a = hull[i];
    const Point& b = hull[(i + 1) % hull.size()];
    Eigen::Matrix2d m;
    m << a.x(), a.y(), b.x(), b.y();
    const Point u = m.inverse() * Point(1.0, 1.0);
    primal.push_back(RealVector(a));
    dual.push_back(RealVector(u));
  }
  return SpaceDescriptor::polyhedral(primal, dual);
}

/// Unit ball A·B_∞: primal A·s for sign vectors s, dual A^{-T}(±e_i).
inline SpaceDescriptor random_parallelotope_space(Rng& rng, int n) {
  Eigen::MatrixXd a;
  do {
    a = Eigen::MatrixXd::Identity(n, n) + 0.4 * gaussian_matrix(Field::Real, n, rng).real();
  } while (std::abs(a.determinant()) < 0.3);
  const Eigen::MatrixXd ait = a.inverse().transpose();
  std::vector<RealVector> primal, dual;
  for (const auto& s : detail::sign_vectors(n)) primal.push_back(a * s);
  for (int i = 0; i < n; ++i) {
    dual.push_back(ait.col(i));
    dual.push_back(-ait.col(i));
  }
  return SpaceDescriptor::polyhedral(primal, dual);
}

// ---------------------------------------------------------------------------
// Hilbert-space numerical radius of a single operator (d = 1, any p)

/// Complex field: max over θ of λ_max(Re(e^{iθ}T)), grid plus golden-section refinement.
inline double complex_numerical_radius(const Matrix& t) {
  auto f = [&](double th) {
    const Matrix h = 0.5 * (std::polar(1.0, th) * t + (std::polar(1.0, th) * t).adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
    return es.eigenvalues().maxCoeff();
  };
  const int grid = 720;
  int best_k = 0;
  double best = -kInf;
  for (int k = 0; k < grid; ++k) {
    const double v = f(2 * M_PI * k / grid);
    if (v > best) best = v, best_k = k;
  }
  double lo = 2 * M_PI * (best_k - 1) / grid, hi = 2 * M_PI * (best_k + 1) / grid;
  const double g = (std::sqrt(5.0) - 1) / 2;
  for (int it = 0; it < 100; ++it) {
    const double a = hi - g * (hi - lo), b = lo + g * (hi - lo);
    if (f(a) < f(b)) lo = a;
    else hi = b;
  }
  return std::max(best, f(0.5 * (lo + hi)));
}

/// Real field: largest |eigenvalue| of the symmetric part.
inline double real_numerical_radius(const Matrix& t) {
  const Eigen::MatrixXd s = 0.5 * (t.real() + t.real().transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(s, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

}  // namespace jnrad::testkit
