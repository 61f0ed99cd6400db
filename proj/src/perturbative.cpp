#include "schwinger/perturbative.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "schwinger/errors.hpp"
#include "schwinger/parallel.hpp"
#include "schwinger/specfun.hpp"

namespace schwinger {

namespace {

constexpr double kPi = std::numbers::pi;
const double kRootHalfPi = std::sqrt(kPi / 2.0);

// Amplitude-level exponent (units E_S/E) of exp(-rate * varpi / omega) Pi0 at
// v = varpi / 2, with rate already divided by gamma.
double weighted_log(double v, double rate_over_gamma) {
  return -2.0 * rate_over_gamma * v + v * std::sqrt(1.0 - v * v) +
         std::asin(v) - 0.5 * kPi;
}

// Maximizer in v in [0, 1] of weighted_log; 0 when the slope at 0 is negative.
double weighted_saddle(double rate_over_gamma) {
  auto slope = [rate_over_gamma](double v) {
    return -2.0 * rate_over_gamma + 2.0 * std::sqrt(1.0 - v * v);
  };
  if (slope(0.0) <= 0.0) {
    return 0.0;
  }
  return specfun::solve_bracketed(slope, 0.0, 1.0, 1e-15);
}

} // namespace

double log_pi0_scaled(double varpi) {
  if (!(varpi >= 0.0 && varpi <= 2.0)) {
    std::ostringstream msg;
    msg << "pi0: varpi must lie in [0, 2m], got " << varpi;
    throw DomainError(msg.str());
  }
  const double v = 0.5 * varpi;
  return v * std::sqrt((1.0 - v) * (1.0 + v)) + std::asin(v) - 0.5 * kPi;
}

double pi0(double varpi, double e_over_es) {
  if (!(e_over_es > 0.0)) {
    throw DomainError("pi0: E/E_S must be positive");
  }
  return std::exp(log_pi0_scaled(varpi) / e_over_es);
}

std::optional<double> varpi_saddle(double gamma) {
  if (!(gamma >= 1.0)) {
    return std::nullopt;
  }
  return 2.0 * std::sqrt(1.0 - 1.0 / (gamma * gamma));
}

SaddleDiagnostic saddle_diagnostic(double e_over_es, double gamma,
                                   double kappa) {
  const auto sp = varpi_saddle(gamma);
  if (!sp || gamma == 1.0) {
    std::ostringstream msg;
    msg << "saddle_condition_scan: gamma must exceed 1, got " << gamma;
    throw DomainError(msg.str());
  }
  SaddleDiagnostic d;
  d.gamma = gamma;
  d.e_over_es = e_over_es;
  d.varpi_sp = *sp;
  d.valid = gamma * e_over_es <= kSaddleValidity;
  const double omega = gamma * e_over_es;
  const double x = d.varpi_sp / omega;
  const SpectralFunction transform(PulseKind::SuperGaussian, kappa);
  const double v = 0.5 * d.varpi_sp;
  // d ln Pi0 / d varpi
  const double pi0_slope = std::sqrt(1.0 - v * v) / e_over_es;
  d.derivative_at_sp =
      omega * (transform.derivative_over_envelope(x) +
               transform.value_over_envelope(x) * omega * pi0_slope);
  if (!std::isfinite(d.derivative_at_sp)) {
    throw NumericalError("saddle_condition_scan: derivative not finite");
  }
  return d;
}

std::vector<SaddleDiagnostic>
saddle_condition_scan(double e_over_es, const std::vector<double>& gamma_grid,
                      double kappa) {
  return parallel_map(gamma_grid, [&](double g) {
    return saddle_diagnostic(e_over_es, g, kappa);
  });
}

IntegralCheck integral_condition(const WeakPulseSpec& spec) {
  const SpectralFunction transform = fourier_transform(spec);
  IntegralCheck c;
  specfun::QuadratureResult q;
  switch (spec.kind()) {
  case PulseKind::Rectangular:
    // sqrt(2/pi) int_0^inf sin x / x dx
    c.value = kRootHalfPi;
    c.analytic = true;
    return c;
  case PulseKind::SuperGaussian: {
    q = specfun::integrate_oscillatory_semiline(transform, kPi, 1e-13);
    c.value = q.value;
    c.error_estimate = q.abs_error_estimate;
    // sqrt(pi/2) erf(1/kappa): the deficit is kept in closed form because it
    // drops below double resolution of the value already at moderate N.
    c.deficit = kRootHalfPi * std::erfc(1.0 / transform.kappa());
    return c;
  }
  default:
    q = specfun::integrate_semiline(transform, 1e-12);
    c.value = q.value;
    c.error_estimate = q.abs_error_estimate;
    c.deficit = kRootHalfPi - q.value;
    return c;
  }
}

double transform_decay_rate(PulseKind kind) {
  switch (kind) {
  case PulseKind::Sauter:
  case PulseKind::ModifiedSauter:
    return 0.5 * kPi;
  case PulseKind::Lorentzian:
  case PulseKind::Rectangular:
    return 1.0;
  default:
    break;
  }
  throw UnsupportedKindError(std::string("no exponential large-x estimate for "
                                         "the ") +
                             std::string(to_string(kind)) + " transform");
}

double first_order_exponent_at_gamma(PulseKind kind, double gamma) {
  if (!(gamma > 0.0)) {
    throw DomainError("first_order_exponent: gamma must be positive");
  }
  const double rate = transform_decay_rate(kind) / gamma;
  const double v = weighted_saddle(rate);
  // |amplitude|^2
  return 2.0 * weighted_log(v, rate);
}

double first_order_exponent(const WeakPulseSpec& spec,
                            const FieldScales& scales) {
  return first_order_exponent_at_gamma(spec.kind(),
                                       scales.gamma(spec.omega()));
}

double first_order_threshold(PulseKind kind) {
  const double floor = -kPi;
  auto lifted = [kind, floor](double g) {
    return first_order_exponent_at_gamma(kind, g) > floor + 1e-12;
  };
  double lo = 0.2;
  double hi = 10.0;
  if (lifted(lo) || !lifted(hi)) {
    throw NumericalError("first_order_threshold: threshold outside [0.2, 10]");
  }
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    (lifted(mid) ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

// ---------------------------------------------------------------------------

OrderConfig::OrderConfig(int n_photons, int j_split, std::vector<double> varpi)
    : n_photons_(n_photons), j_split_(j_split), varpi_(std::move(varpi)) {
  if (n_photons < 1) {
    throw DomainError("OrderConfig: photon number must be >= 1");
  }
  if (j_split < 1 || j_split > n_photons) {
    throw DomainError("OrderConfig: need 1 <= J <= photon number");
  }
  if (static_cast<int>(varpi_.size()) != n_photons) {
    throw DomainError("OrderConfig: one energy per photon required");
  }
  for (int i = 0; i < n_photons; ++i) {
    const bool absorbed = i < j_split;
    if (absorbed ? !(varpi_[i] > 0.0) : !(varpi_[i] < 0.0)) {
      throw DomainError("OrderConfig: absorbed energies must be positive, "
                        "emitted ones negative");
    }
  }
  const double absorbed =
      std::accumulate(varpi_.begin(), varpi_.begin() + j_split, 0.0);
  sigma_ = 0.5 * absorbed;
  if (!(sigma_ > 0.0 && sigma_ < 1.0)) {
    throw DomainError("OrderConfig: Sigma must lie in (0, 1)");
  }
  if (j_split < n_photons) {
    const double total = std::accumulate(varpi_.begin(), varpi_.end(), 0.0);
    double scale = 0.0;
    for (double w : varpi_) {
      scale += std::abs(w);
    }
    if (std::abs(total) > 1e-12 * scale) {
      std::ostringstream msg;
      msg << "OrderConfig: energy not conserved, sum of varpi = " << total;
      throw DomainError(msg.str());
    }
  }
}

OrderConfig OrderConfig::uniform(int n_photons, int j_split, double sigma) {
  if (n_photons < 1 || j_split < 1 || j_split > n_photons) {
    throw DomainError("OrderConfig: need 1 <= J <= photon number");
  }
  std::vector<double> w(n_photons);
  for (int i = 0; i < n_photons; ++i) {
    w[i] = i < j_split ? 2.0 * sigma / j_split
                       : -2.0 * sigma / (n_photons - j_split);
  }
  return OrderConfig(n_photons, j_split, std::move(w));
}

double OrderConfig::energy_budget() const {
  double total = 0.0;
  for (double w : varpi_) {
    total += std::abs(w);
  }
  if (j_split_ == n_photons_) {
    total += 2.0 * sigma_;
  }
  return total / (2.0 * sigma_);
}

HigherOrderResult higher_order_exponent(const WeakPulseSpec& spec,
                                        const FieldScales& scales,
                                        const OrderConfig& cfg) {
  if (spec.kind() != PulseKind::Lorentzian &&
      spec.kind() != PulseKind::Rectangular) {
    throw UnsupportedKindError(
        "higher_order_exponent: only Lorentzian and rectangular pulses");
  }
  const double gamma = scales.gamma(spec.omega());
  // Each photon costs exp(-c |varpi| / omega); the summed cost is
  // budget * 2 Sigma. The Sigma dependence then matches one absorbed photon
  // of energy 2 Sigma with rate c * budget / 2 in the squared amplitude.
  const double rate =
      transform_decay_rate(spec.kind()) * 0.5 * cfg.energy_budget() / gamma;
  HigherOrderResult r;
  r.sigma_sp = weighted_saddle(rate);
  r.exponent = 2.0 * weighted_log(r.sigma_sp, rate);
  r.regime_ok = 2.0 * r.sigma_sp >= 10.0 * spec.omega();
  return r;
}

} // namespace schwinger
