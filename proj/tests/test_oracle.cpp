#include <jnrad/oracle.hpp>

#include <gtest/gtest.h>

#include "support.hpp"

using namespace jnrad;
using testkit::diag2;
using testkit::single;

namespace {

const auto kHilbert = SpaceDescriptor::lp(Field::Complex, 2, 2.0);
const auto kLinf = SpaceDescriptor::lp(Field::Real, 2, kInf);

RadiusOptions quick() {
  RadiusOptions o;
  o.starts = 12;
  return o;
}

}  // namespace

TEST(SampledRadius, Examples) {
  EXPECT_NEAR(sampled_radius(single(Field::Complex, Matrix::Identity(2, 2)), kHilbert, 50, 3), 1.0, 1e-12);
  Matrix n = Matrix::Zero(2, 2);
  n(0, 1) = 1.0;
  EXPECT_GE(sampled_radius(single(Field::Complex, n), kHilbert, 100000, 0), 0.499);
  const double s = sampled_radius(single(Field::Real, diag2(1, 0)), kLinf, 10000, 0);
  EXPECT_LE(s, 1.0);
  EXPECT_GE(s, 0.99);
}

TEST(FdGateaux, Examples) {
  const auto T = single(Field::Complex, diag2(1, -1));
  const auto S = single(Field::Complex, diag2(1, 0));
  EXPECT_NEAR(fd_gateaux(T, S, kHilbert, 1e-4, Side::Plus), 1.0, 1e-3);
  EXPECT_NEAR(fd_gateaux(T, S, kHilbert, 1e-4, Side::Minus), 0.0, 1e-3);
  const auto Z = OperatorTuple::zeros(Field::Complex, 2, 1);
  EXPECT_EQ(fd_gateaux(Z, S, kHilbert, 1e-4, Side::Plus), compute_radius(S, kHilbert).value);
  EXPECT_THROW(fd_gateaux(T, S, kHilbert, 0.1, Side::Plus), Error);
}

TEST(FdGateaux, MonotoneInStepOnExactInstances) {
  Rng rng = make_rng(15);
  const auto space = SpaceDescriptor::lp(Field::Real, 3, 1.0);
  for (int k = 0; k < 30; ++k) {
    const auto T = testkit::random_tuple(Field::Real, 3, 2, 2.0, rng);
    const auto S = testkit::random_tuple(Field::Real, 3, 2, 2.0, rng);
    EXPECT_LE(fd_gateaux(T, S, space, 1e-4, Side::Plus), fd_gateaux(T, S, space, 1e-3, Side::Plus) + 1e-6);
  }
}

TEST(LambdaSweep, Examples) {
  const auto I2 = single(Field::Complex, Matrix::Identity(2, 2));
  EXPECT_GE(lambda_sweep(single(Field::Complex, diag2(1, -1)), I2, kHilbert, {}, 0, quick()).min_value, 1.0 - 1e-9);
  const auto res = lambda_sweep(single(Field::Complex, diag2(1, 0)), I2, kHilbert, {}, 0, quick());
  EXPECT_LT(res.min_value, 1.0);
  EXPECT_NEAR(res.min_value, 0.5, 5e-2);
  const auto T = single(Field::Complex, diag2(1, 0));
  EXPECT_EQ(lambda_sweep(T, OperatorTuple::zeros(Field::Complex, 2, 1), kHilbert, {}, 0, quick()).min_value,
            compute_radius(T, kHilbert, quick()).value);
}

TEST(Audit, HilbertDiagPasses) {
  const auto T = single(Field::Complex, diag2(1, 0));
  const auto rr = compute_radius(T, kHilbert);
  AuditOptions o;
  o.samples = 2000;
  const auto rep = audit(T, kHilbert, rr, generators(T, kHilbert, rr), 0, o);
  for (const auto& c : rep.checks) EXPECT_TRUE(c.pass) << c.name << " " << c.measured << " > " << c.bound;
}

TEST(Audit, DegenerateFailsPositivity) {
  Matrix k(2, 2);
  k << 0, 1, -1, 0;
  const auto T = single(Field::Real, k);
  const auto space = SpaceDescriptor::lp(Field::Real, 2, 2.0);
  const auto rr = compute_radius(T, space);
  ASSERT_TRUE(rr.degenerate);
  const auto rep = audit(T, space, rr, {}, 0);
  EXPECT_FALSE(rep.all_pass());
  EXPECT_EQ(rep.checks.front().name, "norm_positivity");
  EXPECT_FALSE(rep.checks.front().pass);
}

TEST(Audit, RandomExactInstancesPass) {
  Rng rng = make_rng(27);
  for (int k = 0; k < 5; ++k) {
    const auto space = k % 2 ? SpaceDescriptor::lp(Field::Real, 3, kInf) : testkit::random_polygon_space(rng, 4);
    const auto T = testkit::random_tuple(Field::Real, space.dim(), 2, 1.5 + 0.5 * k, rng);
    const auto rr = compute_radius(T, space);
    AuditOptions o;
    o.samples = 2000;
    const auto rep = audit(T, space, rr, generators(T, space, rr), static_cast<std::uint64_t>(k), o);
    for (const auto& c : rep.checks) EXPECT_TRUE(c.pass) << c.name << " " << c.measured << " > " << c.bound;
  }
}
