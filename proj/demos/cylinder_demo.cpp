// Force, gradient and thermal corrections for an Au cylinder above an Au plate.
#include <cstdio>

#include "casimir/casimir.hpp"

int main() {
  using namespace casimir;
  const QuadratureSpec q;
  const PermittivityModel drude = kGoldDrude;
  const PermittivityModel plasma = OscillatorSet{9.0, {}};

  std::printf("%8s %14s %14s %10s %10s\n", "a (nm)", "F (N)", "dF/da (N/m)", "dT Drude", "dT plasma");
  for (double a_nm : {150.0, 300.0, 500.0, 1000.0, 2000.0}) {
    const Geometry g{a_nm * 1e-9, 100e-6, 100e-6};
    const auto f = cylinder_force(g, ThermalState{300.0}, drude, q);
    const auto d = cylinder_force_gradient(g, ThermalState{300.0}, drude, q);
    std::printf("%8.0f %14.6e %14.6e %9.2f%% %9.3f%%\n", a_nm, f.value, d.value,
                100.0 * thermal_correction(g, drude, q, Quantity::force),
                100.0 * thermal_correction(g, plasma, q, Quantity::force));
  }

  // tilt: A_theta = 0.1 at a = 200 nm
  const Geometry g{200e-9, 100e-6, 100e-6};
  const auto tp = TiltParams::from_a_theta(0.1, g);
  std::printf("\nkappa(0.1) = %.5f, kappa_nm(200 nm, 0.1) = %.5f\n", kappa(0.1),
              kappa_nm(g, ThermalState{300.0}, drude, tp, q));
  std::printf("total PFA error at 200 nm: force %.3f%%, gradient %.3f%%\n",
              100.0 * total_pfa_error(g, Quantity::force), 100.0 * total_pfa_error(g, Quantity::gradient));
  return 0;
}
