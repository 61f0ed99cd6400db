#pragma once

// Nonperturbative exponent W0 of the pair-creation rate Gamma ~ exp(-W0),
// reported in units of E_S / E. Three independent routes:
//   - w0_closed: the truncated-series closed form with threshold gamma_check
//     and the shift delta = xi * gamma_check,
//   - reflection_solve: the transcendental reflection equation solved exactly,
//   - instanton_shoot: the periodic instanton integrated and closed by
//     shooting.

#include <array>
#include <vector>

#include "schwinger/backgrounds.hpp"

namespace schwinger {

enum class Branch { Static, Dynamical };

std::string_view to_string(Branch branch);

struct W0Result {
  double gamma = 0.0;
  double w0 = 0.0; // units of E_S / E
  Branch branch = Branch::Static;
  double x4_check = 1.0;
  double gamma_check = 0.0;
  double delta = 0.0;
  double xi = 0.0;
};

struct CorrectionBlock {
  int order_n = 0;
  double eps = 0.0;
  double alpha = 0.0; // ln(1/eps)
  double omega0 = 0.0;
  double omega1 = 0.0;
  double omega2 = 0.0;
  double dfrak = 0.0;
  double zfrak = 0.0;
  // Parts of zfrak: the polynomial term and the square root.
  double zfrak_linear = 0.0;
  double zfrak_root = 0.0;
};

struct ReflectionSolution {
  Branch branch = Branch::Static;
  double y_star = 0.0; // omega x4* (0 on the Static branch)
  double residual = 0.0;
  double w0 = 0.0;
};

struct InstantonLoop {
  // (x3, x4) samples in units of m / E, one full period, first == last
  // up to closure_defect.
  std::vector<std::array<double, 2>> nodes;
  double a = 0.0;           // loop length in units of m / E
  double action = 0.0;      // units of E_S / E
  double x4_max = 0.0;      // apex height, units of m / E
  double closure_defect = 0.0;
  double speed_defect = 0.0; // max |x3'^2 + x4'^2 - 1| along the loop
  int shooting_iterations = 0;
};

// Critical threshold (ln(1/eps))^(1/(4N+2)) for the super-Gaussian; 1 for the
// rectangular limit and the Lorentzian; pi/2 for Sauter and modified Sauter.
double gamma_check(const WeakPulseSpec& spec, double eps);
double gamma_check_sg(int order_n, double eps);

CorrectionBlock correction_block(int order_n, double eps);

// xi = -Z / (alpha D) from the truncated expansion.
double xi(int order_n, double eps);

// Root in xi of the expansion's generating equation
// (4N+2) + eps Re E_p(-alpha (1+xi)^(4N+2)) = 0, before truncation.
double xi_untruncated(int order_n, double eps);

// Dynamical-branch action for the reflection point x in (0, 1].
double dynamical_action(double x4_check);

W0Result w0_closed(const WeakPulseSpec& spec, const FieldScales& scales);
// Same with the kind and order of spec but an explicit gamma.
W0Result w0_at_gamma(const WeakPulseSpec& spec, double eps, double gamma);
// w0_at_gamma over a grid; evaluated in parallel, returned in grid order.
std::vector<W0Result> w0_curve(const WeakPulseSpec& spec, double eps,
                               const std::vector<double>& gamma_grid);

ReflectionSolution reflection_solve(const WeakPulseSpec& spec,
                                    const FieldScales& scales);
ReflectionSolution reflection_solve_at_gamma(int order_n, double eps,
                                             double gamma);

struct ShootingOptions {
  double ode_tol = 1e-11;
  double shoot_tol = 1e-13;
  int max_iterations = 200;
  int samples = 400; // nodes written per loop
};

InstantonLoop instanton_shoot(const WeakPulseSpec& spec,
                              const FieldScales& scales,
                              const ShootingOptions& opts = {});

} // namespace schwinger
