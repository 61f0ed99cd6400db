#pragma once

// Composite background E(t) = E (1 + eps g(t)) along x3: weak-pulse
// profiles, their Euclidean continuations (t -> i x4) and their Fourier
// transforms. Natural units, m = 1, field strengths in units of E_S = m^2.

#include <string>
#include <string_view>
#include <vector>

namespace schwinger {

enum class PulseKind {
  SuperGaussian,
  Gaussian,
  Sauter,
  ModifiedSauter,
  Lorentzian,
  Rectangular,
};

std::string_view to_string(PulseKind kind);
// Accepts the CLI spellings: sg, gaussian, sauter, msauter, lorentzian, rect.
PulseKind parse_pulse_kind(std::string_view text);

// Which weak pulse rides on the static field. Immutable once built.
class WeakPulseSpec {
public:
  static WeakPulseSpec super_gaussian(int order_n, double omega);
  static WeakPulseSpec of_kind(PulseKind kind, double omega);

  PulseKind kind() const { return kind_; }
  // Order N of the super-Gaussian exp(-(omega t)^(4N+2)); 0 for other kinds.
  int order() const { return order_; }
  // Exponent 4N+2.
  int exponent() const { return 4 * order_ + 2; }
  double omega() const { return omega_; }

  WeakPulseSpec with_omega(double omega) const;

private:
  WeakPulseSpec(PulseKind kind, int order, double omega);

  PulseKind kind_;
  int order_;
  double omega_;
};

// Strong-field scale and weak-to-strong ratio. eps == 0 is the pure static
// field; every other value must satisfy 0 < eps <= 0.1.
class FieldScales {
public:
  FieldScales(double e_over_es, double eps);

  double e_over_es() const { return e_over_es_; }
  double eps() const { return eps_; }
  // Combined Keldysh parameter m omega / E for a pulse of frequency omega.
  double gamma(double omega) const { return omega / e_over_es_; }
  // Frequency that realizes a given combined Keldysh parameter.
  double omega_for(double gamma) const { return gamma * e_over_es_; }

private:
  double e_over_es_;
  double eps_;
};

// Minkowski profile g(t), normalized to g(0) = 1.
double profile_g(const WeakPulseSpec& spec, double t);

// Euclidean weak potential G(x4) = int_0^x4 g(i s) ds and its derivative
// G'(x4) = g(i x4). For the super-Gaussian G is evaluated from the entire
// part of the generalized exponential integral E_{(M-1)/M}(-(omega x4)^M).
// Poles (Sauter, modified Sauter at omega x4 = pi/2, Lorentzian at 1) raise
// DomainError; super-Gaussian arguments beyond the exponent budget raise
// OverflowError. Odd in x4.
double euclidean_G(const WeakPulseSpec& spec, double x4);
double euclidean_Gprime(const WeakPulseSpec& spec, double x4);

// ln G for x4 > 0, valid further out than euclidean_G for the super-Gaussian.
double log_euclidean_G(const WeakPulseSpec& spec, double x4);

// Dimensionless transform x -> omega * gtilde(omega x), x = varpi / omega.
class SpectralFunction {
public:
  SpectralFunction(PulseKind kind, double kappa);

  PulseKind kind() const { return kind_; }
  double kappa() const { return kappa_; }
  double operator()(double x) const;
  // Non-oscillating magnitude bound: equals |value| for the monotone kinds,
  // sqrt(2/pi) e^(-kappa^2 x^2/4) min(1, 1/x) for the sinc-type kinds.
  double envelope(double x) const;
  // d/dx of operator(), analytic.
  double derivative(double x) const;
  // operator() and derivative() divided by envelope(). The Gaussian damping
  // of the sinc-type kinds cancels analytically, so these stay finite where
  // the damping itself underflows.
  double value_over_envelope(double x) const;
  double derivative_over_envelope(double x) const;

private:
  PulseKind kind_;
  double kappa_;
};

// Width ratio sigma_g / sigma_r assigned to a super-Gaussian of order N.
double kappa_of_order(int order_n);

SpectralFunction fourier_transform(const WeakPulseSpec& spec);

struct TransformCheck {
  std::vector<double> x;
  std::vector<double> oracle;      // discrete transform samples
  std::vector<double> closed_form; // SpectralFunction samples
  double max_abs_deviation = 0.0;
};

// Numerical transform of the normalized convolution of a Gaussian (width
// kappa / omega) with a rectangle (half width 1 / omega), built and
// transformed on a uniform grid. Validation oracle for the closed-form
// super-Gaussian transform. kappa in (0, 0.5].
TransformCheck convolution_transform_check(double kappa,
                                           const std::vector<double>& x_grid);

// Numerical transform of the actual profile exp(-(omega t)^(4N+2)) against
// the closed form with kappa = kappa_of_order(N). Diagnostic only: the two
// agree in shape, not pointwise.
TransformCheck super_gaussian_transform_check(int order_n,
                                              const std::vector<double>& x_grid);

} // namespace schwinger
