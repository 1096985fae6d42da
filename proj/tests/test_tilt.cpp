#include <cmath>

#include <gtest/gtest.h>

#include "casimir/tilt.hpp"

using namespace casimir;

namespace {

constexpr double um = 1e-6;
constexpr double nm = 1e-9;

Geometry cyl(double a) { return {a, 100 * um, 100 * um}; }
double rel(double got, double want) { return std::abs(got / want - 1.0); }

const PermittivityModel kDrude = kGoldDrude;
const PermittivityModel kIdeal = IdealMetal{};

// sum_n r^{2n} e^{-nv} n^{-sigma} sinh(A n v)/(A n v), summed term by term.
long double naive_tilt_sum(double r2, double v, double A, double sigma) {
  long double sum = 0;
  for (int n = 1; n < 2000000; ++n) {
    const long double x = static_cast<long double>(A) * n * v;
    const long double t = std::pow(static_cast<long double>(r2), n) * std::exp(-static_cast<long double>(n) * v) *
                          std::pow(static_cast<long double>(n), -sigma) * std::sinh(x) / x;
    sum += t;
    if (t < 1e-24L * sum) break;
  }
  return sum;
}

}  // namespace

TEST(Kappa, TableValues) {
  EXPECT_NEAR(kappa(0.01), 1.00026, 5e-6);
  EXPECT_NEAR(kappa(0.05), 1.0066, 5e-5);
  EXPECT_NEAR(kappa(0.1), 1.0267, 5e-5);
  EXPECT_NEAR(kappa(0.5), 2.1176, 5e-5);
  EXPECT_EQ(kappa(0.0), 1.0);
}

TEST(Kappa, SeriesJoinsClosedForm) {
  const double A = 1e-3;
  const double closed = (std::pow(1.0 - A, -2.5) - std::pow(1.0 + A, -2.5)) / (5.0 * A);
  EXPECT_NEAR(kappa(A), closed, 1e-11);
  EXPECT_NEAR(kappa(0.999e-3), closed, 1e-8);
  for (long double x : {1e-4L, 5e-4L}) {
    const long double ref = (std::pow(1.0L - x, -2.5L) - std::pow(1.0L + x, -2.5L)) / (5.0L * x);
    EXPECT_NEAR(kappa(static_cast<double>(x)), static_cast<double>(ref), 1e-14);
  }
}

TEST(Kappa, Domain) {
  EXPECT_THROW(kappa(1.0), DomainError);
  EXPECT_THROW(kappa(-0.1), DomainError);
  EXPECT_THROW(TiltParams::from_a_theta(1.0, cyl(100 * nm)), DomainError);
  EXPECT_THROW(TiltParams::from_angle(2.0 * 100 * nm / (100 * um), cyl(100 * nm)), DomainError);
  const auto t = TiltParams::from_angle(1e-3, cyl(100 * nm));
  EXPECT_DOUBLE_EQ(t.a_theta, 1e-3 * 100e-6 / 200e-9);
  EXPECT_DOUBLE_EQ(TiltParams::from_a_theta(0.5, cyl(100 * nm)).theta, 1e-3);
}

TEST(TiltKernel, StableFormMatchesNaiveSinhSum) {
  for (double r2 : {1.0, 0.7, 0.05}) {
    for (double v : {0.05, 0.5, 3.0, 20.0}) {
      for (double A : {0.01, 0.3, 0.9}) {
        for (Quantity q : {Quantity::force, Quantity::gradient}) {
          const detail::LifshitzKernel k{q, A};
          const double sigma = q == Quantity::force ? 0.5 : -0.5;
          const double weight = q == Quantity::force ? std::pow(v, 1.5) : std::pow(v, 2.5);
          const double want = weight * static_cast<double>(naive_tilt_sum(r2, v, A, sigma));
          const double got = k(v, {-std::log(r2), detail::kNoReflection});
          EXPECT_LT(rel(got, want), 1e-12) << "r2=" << r2 << " v=" << v << " A=" << A;
        }
      }
    }
  }
}

TEST(TiltedForce, ZeroTiltReducesToParallel) {
  const auto g = cyl(200 * nm);
  const TiltParams zero{};
  EXPECT_EQ(tilted_force(g, {300}, kDrude, zero).value, cylinder_force(g, {300}, kDrude).value);
  EXPECT_EQ(tilted_gradient(g, {300}, kDrude, zero).value, cylinder_force_gradient(g, {300}, kDrude).value);
  EXPECT_EQ(kappa_nm(g, {300}, kDrude, zero), 1.0);
  EXPECT_EQ(multiplicative_force(g, {300}, kDrude, zero).value, cylinder_force(g, {300}, kDrude).value);
}

TEST(TiltedForce, IdealMetalIsMultiplicative) {
  for (double A : {0.1, 0.5}) {
    const auto g = cyl(100 * nm);
    const auto t = TiltParams::from_a_theta(A, g);
    const double tilted = tilted_force(g, {0.0}, kIdeal, t).value;
    EXPECT_LT(rel(tilted, kappa(A) * ideal_force_zero_temperature(g)), 1e-8);
    EXPECT_LT(rel(tilted, multiplicative_force(g, {0.0}, kIdeal, t).value), 1e-8);
  }
}

TEST(TiltedGradient, CentralDifferenceAtFixedAngle) {
  const double a = 200 * nm;
  const double theta = 2.0 * 0.3 * a / (100 * um);  // A = 0.3 at a
  for (const PermittivityModel& m : {kIdeal, kDrude}) {
    for (double T : {0.0, 300.0}) {
      QuadratureSpec q;
      q.rel_tol = T == 0.0 ? 1e-10 : 1e-12;
      const double h = a * 1e-4;
      auto force_at = [&](double x) {
        return tilted_force(cyl(x), {T}, m, TiltParams::from_angle(theta, cyl(x)), q).value;
      };
      const double fd = (force_at(a + h) - force_at(a - h)) / (2.0 * h);
      const double grad = tilted_gradient(cyl(a), {T}, m, TiltParams::from_angle(theta, cyl(a)), q).value;
      EXPECT_GT(grad, 0.0);
      EXPECT_LT(rel(grad, fd), 1e-5) << model_name(m) << " T=" << T;
    }
  }
}

TEST(KappaNm, BracketingAndMonotonicity) {
  const double As[] = {0.01, 0.05, 0.1, 0.5};
  const double as[] = {100 * nm, 300 * nm, 500 * nm};
  double prev_by_a[4] = {0, 0, 0, 0};
  for (double a : as) {
    const auto g = cyl(a);
    double prev = 1.0;
    for (int i = 0; i < 4; ++i) {
      const double k = kappa_nm(g, {300}, kDrude, TiltParams::from_a_theta(As[i], g));
      EXPECT_GE(k, 1.0);
      EXPECT_LE(k, kappa(As[i]));
      EXPECT_GT(k, prev);
      EXPECT_GT(k, prev_by_a[i]);
      prev = k;
      prev_by_a[i] = k;
    }
  }
}

TEST(KappaNm, SmallSeparationDifference) {
  // kappa - kappa_nm at 100 nm and A = 0.05
  const auto g = cyl(100 * nm);
  const double d = kappa(0.05) - kappa_nm(g, {300}, kDrude, TiltParams::from_a_theta(0.05, g));
  EXPECT_NEAR(d, 0.0015, 0.0003);
}
