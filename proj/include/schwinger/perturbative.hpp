#pragma once

// Fourier-space route: the pulse enters through its transform, absorbed
// energy varpi is weighted by the static-field matrix element Pi0, and the
// exponents follow from saddle points in varpi. Units: m = 1, varpi in m,
// E in E_S; exponents are reported in units of E_S / E unless stated.

#include <optional>
#include <vector>

#include "schwinger/backgrounds.hpp"

namespace schwinger {

// Static-field matrix element for absorbing energy varpi in [0, 2].
double pi0(double varpi, double e_over_es);
// ln pi0 in units of E_S / E, i.e. v sqrt(1-v^2) + arcsin v - pi/2 at v = varpi/2.
double log_pi0_scaled(double varpi);

// Saddle of the transform-weighted matrix element, 2 sqrt(1 - 1/gamma^2).
// Empty below the threshold gamma = 1.
std::optional<double> varpi_saddle(double gamma);

struct SaddleDiagnostic {
  double gamma = 0.0;
  double e_over_es = 0.0;
  double varpi_sp = 0.0;
  // omega * d/dx [gtilde Pi0] / (envelope(x) Pi0) at x = varpi_sp / omega.
  double derivative_at_sp = 0.0;
  bool valid = false; // gamma * E / E_S <= 1e-2
};

inline constexpr double kSaddleKappa = 1e-4;
inline constexpr double kSaddleValidity = 1e-2;

SaddleDiagnostic saddle_diagnostic(double e_over_es, double gamma,
                                   double kappa = kSaddleKappa);
std::vector<SaddleDiagnostic>
saddle_condition_scan(double e_over_es, const std::vector<double>& gamma_grid,
                      double kappa = kSaddleKappa);

struct IntegralCheck {
  double value = 0.0;          // int_0^inf omega gtilde(omega x) dx
  double deficit = 0.0;        // sqrt(pi/2) - value, closed form where known
  double error_estimate = 0.0; // quadrature error estimate of value
  bool analytic = false;       // value taken from the closed form
};

IntegralCheck integral_condition(const WeakPulseSpec& spec);

// Decay constant c of the large-x estimate omega gtilde ~ exp(-c x).
// Sauter and modified Sauter: pi/2; Lorentzian and rectangular: 1.
double transform_decay_rate(PulseKind kind);

// Exponent of the O(eps) probability, ln P_1 in units of E_S/E, from the
// saddle over varpi of exp(-c varpi/omega) Pi0(varpi), squared. Equals -W0.
double first_order_exponent(const WeakPulseSpec& spec,
                            const FieldScales& scales);
double first_order_exponent_at_gamma(PulseKind kind, double gamma);
// gamma below which the first-order exponent stays at its static value,
// located by bisection on the exponent itself.
double first_order_threshold(PulseKind kind);

// Photon energies of one N-photon term: the first j_split are absorbed and sum
// to 2 Sigma, the rest balance them. With j_split == n_photons the balancing
// leg comes from the conjugate amplitude and is not listed.
class OrderConfig {
public:
  OrderConfig(int n_photons, int j_split, std::vector<double> varpi);
  // Equal shares: absorbed varpi = 2 sigma / J, the rest -2 sigma / (N - J).
  static OrderConfig uniform(int n_photons, int j_split, double sigma);

  int n_photons() const { return n_photons_; }
  int j_split() const { return j_split_; }
  double sigma() const { return sigma_; }
  const std::vector<double>& varpi() const { return varpi_; }
  // sum |varpi| / (2 sigma), including the implicit leg when J == N.
  double energy_budget() const;

private:
  int n_photons_;
  int j_split_;
  double sigma_;
  std::vector<double> varpi_;
};

struct HigherOrderResult {
  double exponent = 0.0; // ln P_N in units of E_S / E
  double sigma_sp = 0.0;
  bool regime_ok = false; // 2 Sigma_sp >= 10 omega
};

HigherOrderResult higher_order_exponent(const WeakPulseSpec& spec,
                                        const FieldScales& scales,
                                        const OrderConfig& cfg);

} // namespace schwinger
