#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "casimir/core.hpp"

using namespace casimir;

namespace {

constexpr double um = 1e-6;
constexpr double nm = 1e-9;

Geometry cyl(double a) { return {a, 100 * um, 100 * um}; }

double rel(double got, double want) { return std::abs(got / want - 1.0); }

const PermittivityModel kDrude = kGoldDrude;
const PermittivityModel kPlasma = OscillatorSet{9.0, {}};
const PermittivityModel kIdeal = IdealMetal{};

}  // namespace

TEST(ThermalState, Tau) {
  const ThermalState t{300.0};
  EXPECT_DOUBLE_EQ(t.tau(100 * nm), 4.0 * M_PI * constants::k_B * 300.0 * 100e-9 / constants::hbar_c);
  EXPECT_NEAR(t.tau(100 * nm), 0.164633, 1e-6);
  EXPECT_EQ(ThermalState{0.0}.tau(1e-6), 0.0);
}

TEST(Geometry, ValidationAndWarning) {
  EXPECT_THROW(cylinder_force({0.0, 1e-4, 1e-4}, {300}, kIdeal), DomainError);
  EXPECT_THROW(cylinder_force({1e-7, -1e-4, 1e-4}, {300}, kIdeal), DomainError);
  EXPECT_THROW(cylinder_force({1e-7, 1e-4, 0.0}, {300}, kIdeal), DomainError);
  EXPECT_THROW(cylinder_force(cyl(1e-7), {-1.0}, kIdeal), DomainError);
  QuadratureSpec bad;
  bad.rel_tol = 1e-3;
  EXPECT_THROW(cylinder_force(cyl(1e-7), {300}, kIdeal, bad), DomainError);
  bad.rel_tol = 0.0;
  EXPECT_THROW(cylinder_force(cyl(1e-7), {300}, kIdeal, bad), DomainError);
  EXPECT_FALSE(cyl(1 * um).pfa_warning());
  EXPECT_TRUE(cyl(6 * um).pfa_warning());
  EXPECT_TRUE(cylinder_force(cyl(6 * um), {300}, kDrude).pfa_warning);
}

TEST(ZeroTemperature, IdealMetalClosedForms) {
  for (double a : {100 * nm, 300 * nm, 1000 * nm}) {
    const auto g = cyl(a);
    EXPECT_LT(rel(zero_temperature_force(g, kIdeal).value, ideal_force_zero_temperature(g)), 1e-8);
    EXPECT_LT(rel(zero_temperature_gradient(g, kIdeal).value, ideal_gradient_zero_temperature(g)), 1e-8);
  }
  EXPECT_NEAR(ideal_force_zero_temperature(cyl(100 * nm)), -5.708e-9, 1e-12);
}

TEST(ZeroTemperature, PowerLaw) {
  const double f1 = zero_temperature_force(cyl(200 * nm), kIdeal).value;
  const double f2 = zero_temperature_force(cyl(400 * nm), kIdeal).value;
  EXPECT_LT(rel(f2 / f1, std::pow(2.0, -3.5)), 1e-8);
}

TEST(ZeroTemperature, DrudeAndPlasmaClose) {
  const auto g = cyl(150 * nm);
  const double d = zero_temperature_force(g, kDrude).value;
  const double p = zero_temperature_force(g, kPlasma).value;
  EXPECT_LT(rel(d, p), 2.5e-2);  // relaxation costs ~1.6% here
  EXPECT_LT(std::abs(d), std::abs(p));
}

TEST(ZeroTemperature, LowTemperatureSumApproachesIntegral) {
  const auto g = cyl(300 * nm);
  const double cold = zero_temperature_force(g, kIdeal).value;
  const double warm = cylinder_force(g, {30.0}, kIdeal).value;
  EXPECT_LT(rel(warm, cold), 1e-4);
}

TEST(PlatePressure, IdealZeroTemperature) {
  EXPECT_LT(rel(plate_pressure(1 * um, 0.0, kIdeal), ideal_pressure_zero_temperature(1 * um)), 1e-8);
  EXPECT_NEAR(ideal_pressure_zero_temperature(1 * um), -1.3001e-3, 1e-7);
}

TEST(PlatePressure, HighTemperature) {
  const double a = 20 * um;
  const double T = 300.0;
  const double ideal = plate_pressure(a, T, kIdeal);
  const double asym = -zeta3() * constants::k_B * T / (4.0 * M_PI * a * a * a);
  EXPECT_LT(rel(ideal, asym), 1e-2);
  EXPECT_LT(rel(plate_pressure(a, T, kDrude) / ideal, 0.5), 1e-2);
}

TEST(CylinderForce, SignsAndLinearity) {
  const auto g = cyl(300 * nm);
  const auto f = cylinder_force(g, {300}, kDrude);
  const auto d = cylinder_force_gradient(g, {300}, kDrude);
  EXPECT_LT(f.value, 0.0);
  EXPECT_GT(d.value, 0.0);
  EXPECT_GT(f.l_used, 3);
  EXPECT_GE(f.truncation_estimate, 0.0);
  EXPECT_LT(f.truncation_estimate, 1e-9);
  EXPECT_EQ(f.per_length * g.L, f.value);
  Geometry g2 = g;
  g2.L = 2.0 * g.L;
  const auto f2 = cylinder_force(g2, {300}, kDrude);
  EXPECT_EQ(f2.per_length, f.per_length);
  EXPECT_EQ(f2.value, 2.0 * f.value);
}

TEST(CylinderForce, AttractionMonotonicityHierarchy) {
  std::vector<double> grid;
  for (int i = 0; i < 8; ++i) grid.push_back(100 * nm * std::pow(50.0, i / 7.0));
  for (double T : {0.0, 300.0}) {
    double prev_ideal = INFINITY, prev_plasma = INFINITY, prev_drude = INFINITY;
    for (double a : grid) {
      const auto g = cyl(a);
      const double fi = cylinder_force(g, {T}, kIdeal).value;
      const double fp = cylinder_force(g, {T}, kPlasma).value;
      const double fd = cylinder_force(g, {T}, kDrude).value;
      EXPECT_LT(fd, 0.0);
      EXPECT_LT(fp, 0.0);
      EXPECT_LT(fi, 0.0);
      EXPECT_GE(std::abs(fi), std::abs(fp)) << "a=" << a << " T=" << T;
      EXPECT_GE(std::abs(fp), std::abs(fd)) << "a=" << a << " T=" << T;
      EXPECT_LT(std::abs(fi), prev_ideal);
      EXPECT_LT(std::abs(fp), prev_plasma);
      EXPECT_LT(std::abs(fd), prev_drude);
      prev_ideal = std::abs(fi);
      prev_plasma = std::abs(fp);
      prev_drude = std::abs(fd);
      EXPECT_GT(cylinder_force_gradient(g, {T}, kDrude).value, 0.0);
    }
  }
}

TEST(CylinderForce, GradientMatchesCentralDifference) {
  for (const PermittivityModel& m : {kDrude, kPlasma}) {
    for (double T : {0.0, 300.0}) {
      QuadratureSpec q;
      q.rel_tol = T == 0.0 ? 1e-10 : 1e-12;
      const double a = 400 * nm;
      const double h = a * 1e-4;
      const double fd = (cylinder_force(cyl(a + h), {T}, m, q).value - cylinder_force(cyl(a - h), {T}, m, q).value) /
                        (2.0 * h);
      EXPECT_LT(rel(cylinder_force_gradient(cyl(a), {T}, m, q).value, fd), 1e-5) << model_name(m) << " T=" << T;
    }
  }
}

TEST(CylinderForce, ParallelSummationIsBitIdentical) {
  QuadratureSpec serial;
  QuadratureSpec threaded;
  threaded.parallel = true;
  threaded.threads = 3;
  for (double a : {100 * nm, 700 * nm}) {
    const auto s = cylinder_force(cyl(a), {300}, kDrude, serial);
    const auto p = cylinder_force(cyl(a), {300}, kDrude, threaded);
    EXPECT_EQ(s.value, p.value);
    EXPECT_EQ(s.l_used, p.l_used);
    EXPECT_LT(rel(p.value, s.value), 1e-12);
  }
}

TEST(CylinderForce, ConvergenceFailureIsReported) {
  QuadratureSpec q;
  q.max_matsubara = 5;
  EXPECT_THROW(cylinder_force(cyl(100 * nm), {300}, kDrude, q), ConvergenceError);
}

TEST(HighTemperature, IdealClosedForms) {
  const auto g = cyl(1 * um);
  const double T = 300.0;
  const double s = std::sqrt(g.R / (2 * g.a));
  const double kT = constants::k_B * T;
  EXPECT_LT(rel(high_temperature_force(g, T, zero_freq::IdealMetal{}),
                -3.0 * zeta3() * kT * g.L / (16 * g.a * g.a) * s), 1e-15);
  EXPECT_LT(rel(high_temperature_gradient(g, T, zero_freq::IdealMetal{}),
                15.0 * zeta3() * kT * g.L / (32 * g.a * g.a * g.a) * s), 1e-15);
  EXPECT_EQ(high_temperature_force(g, T, zero_freq::DrudeLike{}),
            0.5 * high_temperature_force(g, T, zero_freq::IdealMetal{}));
  EXPECT_EQ(high_temperature_gradient(g, T, zero_freq::DrudeLike{}),
            0.5 * high_temperature_gradient(g, T, zero_freq::IdealMetal{}));
}

TEST(HighTemperature, DielectricAndMixed) {
  const auto g = cyl(1 * um);
  const double T = 300.0;
  const double s = std::sqrt(g.R / (2 * g.a));
  const double kT = constants::k_B * T;
  const double li3 = 0.25846139579657330529;  // Li_3(1/4)
  EXPECT_LT(rel(high_temperature_force(g, T, zero_freq::Dielectric{0.5}), -3.0 * kT * g.L / (32 * g.a * g.a) * s * li3),
            1e-14);
  EXPECT_LT(rel(high_temperature_gradient(g, T, zero_freq::Dielectric{0.5}),
                15.0 * kT * g.L / (64 * g.a * g.a * g.a) * s * li3), 1e-14);
  const double li3_half = 0.53721319360804020094;  // Li_3(1/2)
  EXPECT_LT(rel(high_temperature_limit_metal_dielectric(Quantity::force, g, T, 0.5),
                -3.0 * kT * g.L / (32 * g.a * g.a) * s * li3_half), 1e-14);
}

TEST(HighTemperature, PlasmaBracketAndDomain) {
  const auto g = cyl(1 * um);
  const zero_freq::PlasmaLike p{0.01, 20e-9};
  const double x = 0.02;
  EXPECT_LT(rel(high_temperature_force(g, 300, p),
                high_temperature_force(g, 300, zero_freq::IdealMetal{}) * (1 - 2.5 * x + 8.75 * x * x)), 1e-15);
  EXPECT_LT(rel(high_temperature_gradient(g, 300, p),
                high_temperature_gradient(g, 300, zero_freq::IdealMetal{}) * (1 - 3.5 * x + 15.75 * x * x)), 1e-15);
  EXPECT_THROW(high_temperature_force(cyl(40 * nm), 300, zero_freq::PlasmaLike{0.25, 20e-9}), DomainError);
  EXPECT_THROW(high_temperature_force(g, 0.0, zero_freq::IdealMetal{}), DomainError);
}

TEST(HighTemperature, ZeroFrequencyTermEqualsClosedForm) {
  const auto g = cyl(2 * um);
  for (Quantity w : {Quantity::force, Quantity::gradient}) {
    EXPECT_LT(rel(zero_frequency_term(w, g, {300}, kIdeal).value,
                  high_temperature_limit(w, g, 300, zero_freq::IdealMetal{})), 1e-8);
    EXPECT_LT(rel(zero_frequency_term(w, g, {300}, kDrude).value,
                  high_temperature_limit(w, g, 300, zero_freq::DrudeLike{})), 1e-8);
    EXPECT_LT(rel(zero_frequency_term(w, g, {300}, StaticDielectric{3.0}).value,
                  high_temperature_limit(w, g, 300, zero_freq::Dielectric{0.5})), 1e-8);
  }
}

TEST(HighTemperature, NumericApproachesAsymptote) {
  const auto g = Geometry{20 * um, 100 * um, 100 * um};
  ASSERT_GT(ThermalState{300}.tau(g.a), 30.0);
  const double fi = cylinder_force(g, {300}, kIdeal).value;
  const double di = cylinder_force_gradient(g, {300}, kIdeal).value;
  EXPECT_LT(rel(fi, high_temperature_force(g, 300, zero_freq::IdealMetal{})), 1e-2);
  EXPECT_LT(rel(di, high_temperature_gradient(g, 300, zero_freq::IdealMetal{})), 1e-2);
  const double fd = cylinder_force(g, {300}, kDrude).value;
  EXPECT_LT(rel(fd, high_temperature_force(g, 300, zero_freq::DrudeLike{})), 1e-2);
  EXPECT_LT(std::abs(fd / fi - 0.5), 1e-3);
}

TEST(ThermalCorrection, ZeroAtZeroTemperature) {
  EXPECT_EQ(thermal_correction(cyl(500 * nm), kDrude, {}, Quantity::force, 0.0), 0.0);
}

TEST(ThermalCorrection, DrudeNegativePlasmaPositive) {
  const auto g = cyl(500 * nm);
  EXPECT_LT(thermal_correction(g, kDrude, {}, Quantity::force), 0.0);
  EXPECT_GT(thermal_correction(g, kPlasma, {}, Quantity::force), 0.0);
  EXPECT_LT(thermal_correction(g, kDrude, {}, Quantity::gradient), 0.0);
}

TEST(Attenuation, MatchesLongDoubleFresnel) {
  for (double eps : {1.5, 80.0, 1e8}) {
    for (double zeta : {1e-4, 0.3, 5.0}) {
      for (double f : {1.0, 1.001, 3.0, 40.0}) {
        const long double v = zeta * f;
        const long double s = std::sqrt(v * v + (eps - 1.0L) * zeta * zeta);
        const long double tm = -2.0L * std::log((eps * v - s) / (eps * v + s));
        const long double te = -2.0L * std::log((s - v) / (s + v));
        const auto att = detail::fresnel_attenuation(static_cast<double>(v), zeta, eps);
        EXPECT_LT(rel(att.tm, static_cast<double>(tm)), 1e-12) << eps << " " << zeta << " " << f;
        EXPECT_LT(rel(att.te, static_cast<double>(te)), 1e-12) << eps << " " << zeta << " " << f;
      }
    }
  }
  const auto vacuum = detail::fresnel_attenuation(1.0, 0.5, 1.0);
  EXPECT_EQ(vacuum.tm, detail::kNoReflection);
  EXPECT_EQ(vacuum.te, detail::kNoReflection);
}
