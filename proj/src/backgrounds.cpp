#include "schwinger/backgrounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "schwinger/errors.hpp"
#include "schwinger/specfun.hpp"

namespace schwinger {

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrt2OverPi = std::sqrt(2.0 / kPi);
const double kSqrtPiOver2 = std::sqrt(kPi / 2.0);

// (omega x4)^M above this would push e^((omega x4)^M) past the double range.
constexpr double kExponentBudget = 700.0;

} // namespace

std::string_view to_string(PulseKind kind) {
  switch (kind) {
  case PulseKind::SuperGaussian:
    return "sg";
  case PulseKind::Gaussian:
    return "gaussian";
  case PulseKind::Sauter:
    return "sauter";
  case PulseKind::ModifiedSauter:
    return "msauter";
  case PulseKind::Lorentzian:
    return "lorentzian";
  case PulseKind::Rectangular:
    return "rect";
  }
  return "unknown";
}

PulseKind parse_pulse_kind(std::string_view text) {
  if (text == "sg" || text == "supergaussian" || text == "super-gaussian") {
    return PulseKind::SuperGaussian;
  }
  if (text == "gaussian" || text == "gauss") {
    return PulseKind::Gaussian;
  }
  if (text == "sauter") {
    return PulseKind::Sauter;
  }
  if (text == "msauter" || text == "modified-sauter") {
    return PulseKind::ModifiedSauter;
  }
  if (text == "lorentzian" || text == "lorentz") {
    return PulseKind::Lorentzian;
  }
  if (text == "rect" || text == "rectangular") {
    return PulseKind::Rectangular;
  }
  throw std::invalid_argument("unknown pulse kind '" + std::string(text) +
                              "'");
}

// ---------------------------------------------------------------------------

WeakPulseSpec::WeakPulseSpec(PulseKind kind, int order, double omega)
    : kind_(kind), order_(order), omega_(omega) {
  if (!(omega > 0.0) || !std::isfinite(omega)) {
    throw DomainError("WeakPulseSpec: omega must be positive");
  }
  if (kind == PulseKind::SuperGaussian && order < 1) {
    throw DomainError("WeakPulseSpec: super-Gaussian order N must be >= 1");
  }
}

WeakPulseSpec WeakPulseSpec::super_gaussian(int order_n, double omega) {
  return WeakPulseSpec(PulseKind::SuperGaussian, order_n, omega);
}

WeakPulseSpec WeakPulseSpec::of_kind(PulseKind kind, double omega) {
  if (kind == PulseKind::SuperGaussian) {
    throw DomainError("WeakPulseSpec: super-Gaussian needs an order; use "
                      "super_gaussian()");
  }
  return WeakPulseSpec(kind, 0, omega);
}

WeakPulseSpec WeakPulseSpec::with_omega(double omega) const {
  return WeakPulseSpec(kind_, order_, omega);
}

FieldScales::FieldScales(double e_over_es, double eps)
    : e_over_es_(e_over_es), eps_(eps) {
  if (!(e_over_es > 0.0 && e_over_es < 1.0)) {
    throw DomainError("FieldScales: E/E_S must lie in (0, 1)");
  }
  if (!(eps >= 0.0 && eps <= 0.1)) {
    throw DomainError("FieldScales: eps must lie in [0, 0.1]");
  }
}

// ---------------------------------------------------------------------------

double profile_g(const WeakPulseSpec& spec, double t) {
  const double y = spec.omega() * t;
  switch (spec.kind()) {
  case PulseKind::SuperGaussian:
    return std::exp(-std::pow(std::abs(y), spec.exponent()));
  case PulseKind::Gaussian:
    return std::exp(-y * y);
  case PulseKind::Sauter: {
    const double s = 1.0 / std::cosh(y);
    return s * s;
  }
  case PulseKind::ModifiedSauter:
    return 1.0 / std::cosh(y);
  case PulseKind::Lorentzian:
    return std::pow(1.0 + y * y, -1.5);
  case PulseKind::Rectangular:
    return std::abs(y) <= 1.0 ? 1.0 : 0.0;
  }
  return 0.0;
}

namespace {

// Power M of exp(-(omega t)^M) for the kinds that share the expint route.
int expint_power(const WeakPulseSpec& spec) {
  return spec.kind() == PulseKind::Gaussian ? 2 : spec.exponent();
}

// int_0^y e^(s^M) ds for y >= 0, i.e. omega G at omega x4 = y.
double scaled_sg_potential(double y, int power) {
  const double a = std::pow(y, power);
  if (a == 0.0) {
    return y;
  }
  if (a > kExponentBudget) {
    std::ostringstream msg;
    msg << "euclidean_G: (omega x4)^" << power << " = " << a
        << " exceeds the exponent budget";
    throw OverflowError(msg.str());
  }
  const double order = (power - 1.0) / power;
  // -y E_order(-a) / M with the branch term dropped.
  return -y * specfun::expint_entire(order, a) / power;
}

void require_below_pole(double y, double pole, const char* name) {
  if (std::abs(y) >= pole) {
    std::ostringstream msg;
    msg << "euclidean potential: " << name << " pole at |omega x4| = " << pole
        << " reached (omega x4 = " << y << ")";
    throw DomainError(msg.str());
  }
}

} // namespace

double euclidean_G(const WeakPulseSpec& spec, double x4) {
  const double w = spec.omega();
  const double y = w * x4;
  switch (spec.kind()) {
  case PulseKind::SuperGaussian:
  case PulseKind::Gaussian:
    return std::copysign(scaled_sg_potential(std::abs(y), expint_power(spec)),
                         y) /
           w;
  case PulseKind::Sauter:
    require_below_pole(y, kPi / 2.0, "Sauter");
    return std::tan(y) / w;
  case PulseKind::ModifiedSauter:
    require_below_pole(y, kPi / 2.0, "modified Sauter");
    return std::atanh(std::sin(y)) / w;
  case PulseKind::Lorentzian:
    require_below_pole(y, 1.0, "Lorentzian");
    return y / (w * std::sqrt(1.0 - y * y));
  case PulseKind::Rectangular:
    require_below_pole(y, 1.0, "rectangular wall");
    return x4;
  }
  return 0.0;
}

double euclidean_Gprime(const WeakPulseSpec& spec, double x4) {
  const double y = spec.omega() * x4;
  switch (spec.kind()) {
  case PulseKind::SuperGaussian:
  case PulseKind::Gaussian: {
    const double a = std::pow(std::abs(y), expint_power(spec));
    if (a > kExponentBudget) {
      throw OverflowError("euclidean_Gprime: exponent budget exceeded");
    }
    return std::exp(a);
  }
  case PulseKind::Sauter: {
    require_below_pole(y, kPi / 2.0, "Sauter");
    const double c = std::cos(y);
    return 1.0 / (c * c);
  }
  case PulseKind::ModifiedSauter:
    require_below_pole(y, kPi / 2.0, "modified Sauter");
    return 1.0 / std::cos(y);
  case PulseKind::Lorentzian:
    require_below_pole(y, 1.0, "Lorentzian");
    return std::pow(1.0 - y * y, -1.5);
  case PulseKind::Rectangular:
    require_below_pole(y, 1.0, "rectangular wall");
    return 1.0;
  }
  return 0.0;
}

double log_euclidean_G(const WeakPulseSpec& spec, double x4) {
  if (!(x4 > 0.0)) {
    throw DomainError("log_euclidean_G: x4 must be positive");
  }
  if (spec.kind() != PulseKind::SuperGaussian &&
      spec.kind() != PulseKind::Gaussian) {
    return std::log(euclidean_G(spec, x4));
  }
  const double w = spec.omega();
  const double y = w * x4;
  const int power = expint_power(spec);
  const double a = std::pow(y, power);
  if (a <= kExponentBudget) {
    return std::log(scaled_sg_potential(y, power) / w);
  }
  // int_0^y e^(s^M) ds ~ (y / (M a)) e^a sum_k (p)_k / a^k, p = (M-1)/M.
  const double order = (power - 1.0) / power;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < 40; ++k) {
    const double next = term * (order + k) / a;
    if (std::abs(next) >= std::abs(term) ||
        std::abs(next) < 1e-17 * std::abs(sum)) {
      break;
    }
    term = next;
    sum += term;
  }
  return std::log(y / (w * power)) + a - std::log(a) + std::log(sum);
}

// ---------------------------------------------------------------------------

SpectralFunction::SpectralFunction(PulseKind kind, double kappa)
    : kind_(kind), kappa_(kappa) {
  if (!(kappa >= 0.0)) {
    throw DomainError("SpectralFunction: kappa must be >= 0");
  }
}

namespace {

double sinc(double x) {
  if (std::abs(x) < 1e-4) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
  }
  return std::sin(x) / x;
}

double sinc_derivative(double x) {
  if (std::abs(x) < 1e-3) {
    const double x2 = x * x;
    return -x / 3.0 + x * x2 / 30.0;
  }
  return (x * std::cos(x) - std::sin(x)) / (x * x);
}

// x csch(pi x / 2) with its removable singularity at 0.
double x_csch(double x) {
  const double u = 0.5 * kPi * x;
  if (std::abs(u) < 1e-4) {
    return (2.0 / kPi) * (1.0 - u * u / 6.0);
  }
  return x / std::sinh(u);
}

double lorentzian_transform(double x) {
  if (x == 0.0) {
    return kSqrt2OverPi;
  }
  return kSqrt2OverPi * x * specfun::bessel_k1(std::abs(x));
}

} // namespace

double SpectralFunction::operator()(double x) const {
  switch (kind_) {
  case PulseKind::Lorentzian:
    return lorentzian_transform(x);
  case PulseKind::Sauter:
    return kSqrtPiOver2 * x_csch(x);
  case PulseKind::ModifiedSauter:
    return kSqrtPiOver2 / std::cosh(0.5 * kPi * x);
  case PulseKind::SuperGaussian:
  case PulseKind::Rectangular:
    return kSqrt2OverPi * sinc(x) * std::exp(-0.25 * kappa_ * kappa_ * x * x);
  case PulseKind::Gaussian:
    return std::exp(-0.25 * x * x) / std::sqrt(2.0);
  }
  return 0.0;
}

double SpectralFunction::envelope(double x) const {
  switch (kind_) {
  case PulseKind::SuperGaussian:
  case PulseKind::Rectangular:
    return kSqrt2OverPi * std::min(1.0, 1.0 / std::abs(x)) *
           std::exp(-0.25 * kappa_ * kappa_ * x * x);
  default:
    return std::abs((*this)(x));
  }
}

double SpectralFunction::derivative(double x) const {
  switch (kind_) {
  case PulseKind::Lorentzian: {
    // (x K1(x))' = -x K0(x); central difference keeps K0 out of specfun.
    const double h = 1e-5 * std::max(1.0, std::abs(x));
    if (x - h <= 0.0) {
      return (lorentzian_transform(x + h) - lorentzian_transform(x)) / h;
    }
    return (lorentzian_transform(x + h) - lorentzian_transform(x - h)) /
           (2.0 * h);
  }
  case PulseKind::Sauter: {
    const double u = 0.5 * kPi * x;
    if (std::abs(u) < 1e-4) {
      return -kSqrtPiOver2 * (2.0 / kPi) * (kPi * kPi / 4.0) * x / 3.0;
    }
    const double csch = 1.0 / std::sinh(u);
    return kSqrtPiOver2 * (csch - x * 0.5 * kPi * csch / std::tanh(u));
  }
  case PulseKind::ModifiedSauter: {
    const double u = 0.5 * kPi * x;
    return -kSqrtPiOver2 * 0.5 * kPi * std::tanh(u) / std::cosh(u);
  }
  case PulseKind::SuperGaussian:
  case PulseKind::Rectangular: {
    const double damp = std::exp(-0.25 * kappa_ * kappa_ * x * x);
    return kSqrt2OverPi * damp *
           (sinc_derivative(x) - sinc(x) * 0.5 * kappa_ * kappa_ * x);
  }
  case PulseKind::Gaussian:
    return -0.5 * x * std::exp(-0.25 * x * x) / std::sqrt(2.0);
  }
  return 0.0;
}

double SpectralFunction::value_over_envelope(double x) const {
  if (kind_ == PulseKind::SuperGaussian || kind_ == PulseKind::Rectangular) {
    return sinc(x) / std::min(1.0, 1.0 / std::abs(x));
  }
  return (*this)(x) / envelope(x);
}

double SpectralFunction::derivative_over_envelope(double x) const {
  if (kind_ == PulseKind::SuperGaussian || kind_ == PulseKind::Rectangular) {
    return (sinc_derivative(x) - sinc(x) * 0.5 * kappa_ * kappa_ * x) /
           std::min(1.0, 1.0 / std::abs(x));
  }
  return derivative(x) / envelope(x);
}

double kappa_of_order(int order_n) {
  if (order_n < 1) {
    throw DomainError("kappa_of_order: N must be >= 1");
  }
  return 1.0 / order_n;
}

SpectralFunction fourier_transform(const WeakPulseSpec& spec) {
  switch (spec.kind()) {
  case PulseKind::SuperGaussian:
    return SpectralFunction(spec.kind(), kappa_of_order(spec.order()));
  default:
    return SpectralFunction(spec.kind(), 0.0);
  }
}

// ---------------------------------------------------------------------------

namespace {

double max_abs(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    m = std::max(m, std::abs(a[i] - b[i]));
  }
  return m;
}

} // namespace

TransformCheck convolution_transform_check(double kappa,
                                           const std::vector<double>& x_grid) {
  if (!(kappa > 0.0 && kappa <= 0.5)) {
    throw DomainError("convolution_transform_check: kappa must lie in (0, 0.5]");
  }
  // omega = 1: rectangle half width sigma_r = 1, Gaussian width sigma_g = kappa.
  // Spacing <= sigma_g / 8 and commensurate with the rectangle edges.
  const int per_unit = static_cast<int>(std::ceil(8.0 / kappa));
  const double dt = 1.0 / per_unit;
  const double half_domain = 6.0;
  const int half_n = static_cast<int>(std::lround(half_domain * per_unit));
  double x_max = 0.0;
  for (double x : x_grid) {
    x_max = std::max(x_max, std::abs(x));
  }
  if (x_max * dt > 0.5 * kPi) {
    throw DomainError("convolution_transform_check: x grid exceeds the "
                      "bandwidth resolved by the time grid");
  }

  // Sampled Gaussian kernel, normalized to unit discrete area.
  const int kernel_half = static_cast<int>(std::ceil(8.0 * kappa * per_unit));
  std::vector<double> kernel(2 * kernel_half + 1);
  double kernel_area = 0.0;
  for (int j = -kernel_half; j <= kernel_half; ++j) {
    const double s = j * dt / kappa;
    kernel[j + kernel_half] = std::exp(-s * s);
    kernel_area += kernel[j + kernel_half] * dt;
  }
  // Rectangle with trapezoid half weights on the edges.
  auto rect = [per_unit](int i) {
    const int a = std::abs(i);
    if (a < per_unit) {
      return 1.0;
    }
    return a == per_unit ? 0.5 : 0.0;
  };

  std::vector<double> conv(2 * half_n + 1, 0.0);
  for (int i = -half_n; i <= half_n; ++i) {
    double acc = 0.0;
    for (int j = -kernel_half; j <= kernel_half; ++j) {
      const int k = i - j;
      if (std::abs(k) <= per_unit) {
        acc += rect(k) * kernel[j + kernel_half];
      }
    }
    conv[i + half_n] = acc * dt / kernel_area;
  }

  TransformCheck out;
  out.x = x_grid;
  const SpectralFunction closed(PulseKind::SuperGaussian, kappa);
  const double norm = dt / std::sqrt(2.0 * kPi);
  for (double x : x_grid) {
    double acc = 0.0;
    for (int i = -half_n; i <= half_n; ++i) {
      acc += conv[i + half_n] * std::cos(x * i * dt);
    }
    out.oracle.push_back(acc * norm);
    out.closed_form.push_back(closed(x));
  }
  out.max_abs_deviation = max_abs(out.oracle, out.closed_form);
  return out;
}

TransformCheck super_gaussian_transform_check(
    int order_n, const std::vector<double>& x_grid) {
  const int power = 4 * order_n + 2;
  const double upper = std::pow(40.0, 1.0 / power);
  TransformCheck out;
  out.x = x_grid;
  const SpectralFunction closed(PulseKind::SuperGaussian,
                                kappa_of_order(order_n));
  specfun::QuadratureOptions opts;
  opts.abs_tol = 1e-12;
  opts.rel_tol = 1e-12;
  for (double x : x_grid) {
    auto integrand = [x, power](double t) {
      return std::exp(-std::pow(t, power)) * std::cos(x * t);
    };
    const double value = specfun::integrate(integrand, 0.0, upper, opts).value;
    out.oracle.push_back(2.0 * value / std::sqrt(2.0 * kPi));
    out.closed_form.push_back(closed(x));
  }
  out.max_abs_deviation = max_abs(out.oracle, out.closed_form);
  return out;
}

} // namespace schwinger
