#include "schwinger/worldline.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "schwinger/errors.hpp"
#include "schwinger/parallel.hpp"
#include "schwinger/specfun.hpp"

namespace schwinger {

namespace {

constexpr double kPi = std::numbers::pi;

void require_eps(double eps) {
  if (!(eps > 0.0 && eps < 1.0)) {
    std::ostringstream msg;
    msg << "eps must lie in (0, 1), got " << eps;
    throw DomainError(msg.str());
  }
}

} // namespace

std::string_view to_string(Branch branch) {
  return branch == Branch::Static ? "static" : "dynamical";
}

double gamma_check_sg(int order_n, double eps) {
  require_eps(eps);
  if (order_n < 1) {
    throw DomainError("gamma_check: N must be >= 1");
  }
  return std::pow(std::log(1.0 / eps), 1.0 / (4.0 * order_n + 2.0));
}

double gamma_check(const WeakPulseSpec& spec, double eps) {
  switch (spec.kind()) {
  case PulseKind::SuperGaussian:
    return gamma_check_sg(spec.order(), eps);
  case PulseKind::Rectangular:
  case PulseKind::Lorentzian:
    return 1.0;
  case PulseKind::Sauter:
  case PulseKind::ModifiedSauter:
    return 0.5 * kPi;
  case PulseKind::Gaussian:
    break;
  }
  throw UnsupportedKindError("gamma_check: no closed-form threshold for the "
                             "Gaussian pulse");
}

CorrectionBlock correction_block(int order_n, double eps) {
  if (order_n < 1) {
    throw DomainError("correction_block: N must be >= 1");
  }
  if (!(eps > 0.0 && eps <= 0.1)) {
    throw DomainError("correction_block: eps must lie in (0, 0.1]");
  }
  const double n = order_n;
  const double power = 4.0 * n + 2.0;
  const double order = (4.0 * n + 1.0) / power;

  CorrectionBlock b;
  b.order_n = order_n;
  b.eps = eps;
  b.alpha = std::log(1.0 / eps);
  const double a = b.alpha;
  b.omega0 = specfun::expint_re(order, a);
  b.omega1 = specfun::expint_re(order - 1.0, a);
  b.omega2 = specfun::expint_re(order - 2.0, a);
  const double w = b.omega0;
  const double w1 = b.omega1;
  const double w2 = b.omega2;

  b.dfrak = 2.0 * eps * (2.0 * n + 1.0) *
            (2.0 * a * w2 + 4.0 * a * n * w2 + 4.0 * n * w1 + 3.0 * w1);
  b.zfrak_linear =
      2.0 * a * w1 * eps + 4.0 * a * n * w1 * eps + 4.0 * n + w * eps + 2.0;
  const double first = eps * (2.0 * a * w1 + w) + 4.0 * n * (a * w1 * eps + 1.0) + 2.0;
  const double disc =
      first * first - 4.0 * a * eps * (2.0 * n + 1.0) * (4.0 * n + w * eps + 2.0) *
                          (2.0 * a * (2.0 * n + 1.0) * w2 + (4.0 * n + 3.0) * w1);
  if (!(disc >= 0.0)) {
    std::ostringstream msg;
    msg << "correction_block: negative discriminant " << disc << " (N=" << order_n
        << ", eps=" << eps << ")";
    throw NumericalError(msg.str());
  }
  b.zfrak_root = std::sqrt(disc);
  b.zfrak = b.zfrak_linear + b.zfrak_root;
  if (b.dfrak == 0.0 || !std::isfinite(b.dfrak)) {
    throw NumericalError("correction_block: D vanishes");
  }
  return b;
}

double xi(int order_n, double eps) {
  const CorrectionBlock b = correction_block(order_n, eps);
  return -b.zfrak / (b.alpha * b.dfrak);
}

double xi_untruncated(int order_n, double eps) {
  require_eps(eps);
  const double power = 4.0 * order_n + 2.0;
  const double order = (4.0 * order_n + 1.0) / power;
  const double alpha = std::log(1.0 / eps);
  auto generating = [&](double u) {
    return power + eps * specfun::expint_re(order, u);
  };
  const double u = specfun::solve_bracketed(generating, alpha, 700.0, 1e-14);
  return std::pow(u / alpha, 1.0 / power) - 1.0;
}

double dynamical_action(double x4_check) {
  const double x = std::clamp(x4_check, 0.0, 1.0);
  return 2.0 * x * std::sqrt((1.0 - x) * (1.0 + x)) + 2.0 * std::asin(x);
}

W0Result w0_at_gamma(const WeakPulseSpec& spec, double eps, double gamma) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw DomainError("w0: gamma must be positive");
  }
  if (spec.kind() == PulseKind::Gaussian) {
    throw UnsupportedKindError(
        "w0_closed: the Gaussian pulse has no closed-form action");
  }
  W0Result r;
  r.gamma = gamma;
  if (eps == 0.0) {
    r.gamma_check = std::numeric_limits<double>::infinity();
    r.w0 = kPi;
    return r;
  }
  r.gamma_check = gamma_check(spec, eps);
  double shift = 0.0;
  if (spec.kind() == PulseKind::SuperGaussian) {
    r.xi = xi(spec.order(), eps);
    r.delta = r.xi * r.gamma_check;
    shift = r.delta;
  }
  if (gamma < r.gamma_check) {
    r.w0 = kPi;
    return r;
  }
  const double x = (r.gamma_check + shift) / (gamma + shift);
  if (x > 1.0) {
    r.w0 = kPi;
    return r;
  }
  r.branch = Branch::Dynamical;
  r.x4_check = x;
  r.w0 = dynamical_action(x);
  return r;
}

W0Result w0_closed(const WeakPulseSpec& spec, const FieldScales& scales) {
  return w0_at_gamma(spec, scales.eps(), scales.gamma(spec.omega()));
}

std::vector<W0Result> w0_curve(const WeakPulseSpec& spec, double eps,
                               const std::vector<double>& gamma_grid) {
  return parallel_map(gamma_grid,
                      [&](double g) { return w0_at_gamma(spec, eps, g); });
}

ReflectionSolution reflection_solve_at_gamma(int order_n, double eps,
                                             double gamma) {
  ReflectionSolution s;
  const double threshold = gamma_check_sg(order_n, eps);
  if (gamma < threshold) {
    s.w0 = kPi;
    return s;
  }
  const WeakPulseSpec unit = WeakPulseSpec::super_gaussian(order_n, 1.0);
  const double power = unit.exponent();
  const double alpha = std::log(1.0 / eps);
  const double target = std::log(gamma / eps);
  // ln(eps G(y)) - ln(gamma) with y = u^(1/M); G here is int_0^y e^(s^M) ds.
  auto residual = [&](double u) {
    return log_euclidean_G(unit, std::pow(u, 1.0 / power)) - target;
  };
  double u_star = 0.0;
  try {
    u_star = specfun::solve_bracketed(residual, 1e-12, alpha + 20.0, 1e-15);
  } catch (const BracketError& e) {
    std::ostringstream msg;
    msg << "reflection_solve: no root in u = (omega x4)^M on [0, alpha+20] (N="
        << order_n << ", eps=" << eps << ", gamma=" << gamma << ")";
    throw BracketError(msg.str());
  }
  s.branch = Branch::Dynamical;
  s.y_star = std::pow(u_star, 1.0 / power);
  s.residual = residual(u_star);
  s.w0 = dynamical_action(std::min(1.0, s.y_star / gamma));
  return s;
}

ReflectionSolution reflection_solve(const WeakPulseSpec& spec,
                                    const FieldScales& scales) {
  if (spec.kind() != PulseKind::SuperGaussian) {
    throw UnsupportedKindError(
        "reflection_solve: only the super-Gaussian pulse is supported");
  }
  return reflection_solve_at_gamma(spec.order(), scales.eps(),
                                   scales.gamma(spec.omega()));
}

} // namespace schwinger
