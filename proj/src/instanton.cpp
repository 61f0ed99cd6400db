#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include <boost/numeric/odeint.hpp>

#include "schwinger/errors.hpp"
#include "schwinger/specfun.hpp"
#include "schwinger/worldline.hpp"

namespace schwinger {

namespace {

namespace odeint = boost::numeric::odeint;

// x3, x4, tangent (t3, t4), accumulated action.
using State = std::array<double, 5>;

// Lengths in units of m/E. The field term enters through
// phi(x4) = x4 + eps G(x4) with the pulse frequency set to gamma, and the
// loop curvature is phi'(x4).
class LoopField {
public:
  LoopField(const WeakPulseSpec& spec, double eps, double gamma)
      : spec_(spec.with_omega(gamma)), eps_(eps) {}

  double phi(double x4) const {
    if (eps_ == 0.0) {
      return x4;
    }
    try {
      return x4 + eps_ * euclidean_G(spec_, x4);
    } catch (const DomainError&) {
    } catch (const OverflowError&) {
    }
    return std::copysign(kWall, x4);
  }

  double curvature(double x4) const {
    if (eps_ == 0.0) {
      return 1.0;
    }
    try {
      return 1.0 + eps_ * euclidean_Gprime(spec_, x4);
    } catch (const DomainError&) {
    } catch (const OverflowError&) {
    }
    // Past a pole or the exponent budget: a wall that forces step rejection.
    return kWall;
  }

  void operator()(const State& s, State& ds, double /*arc*/) const {
    const double k = curvature(s[1]);
    ds[0] = s[2];
    ds[1] = s[3];
    ds[2] = -k * s[3];
    ds[3] = k * s[2];
    ds[4] = 1.0 + phi(s[1]) * s[2];
  }

private:
  static constexpr double kWall = 1e12;
  WeakPulseSpec spec_;
  double eps_;
};

using Stepper = odeint::runge_kutta_dopri5<State>;
using DenseStepper = odeint::dense_output_runge_kutta<
    odeint::controlled_runge_kutta<Stepper>>;

State apex_state(double x4_max) { return {0.0, x4_max, -1.0, 0.0, 0.0}; }

// Arc length of the next sign change of t4 in the given direction
// (rising: - to +, falling: + to -). The stepper is advanced past it.
double next_turn(DenseStepper& stepper, const LoopField& field, bool rising,
                 double max_arc) {
  while (stepper.current_time() < max_arc) {
    const double before = stepper.current_state()[3];
    const auto step = stepper.do_step(field);
    const double after = stepper.current_state()[3];
    const bool crossed = rising ? (before < 0.0 && after >= 0.0)
                                : (before > 0.0 && after <= 0.0);
    if (!crossed) {
      continue;
    }
    double lo = step.first;
    double hi = step.second;
    State probe;
    for (int i = 0; i < 80 && hi - lo > 1e-15 * hi; ++i) {
      const double mid = 0.5 * (lo + hi);
      stepper.calc_state(mid, probe);
      const bool past = rising ? probe[3] >= 0.0 : probe[3] <= 0.0;
      (past ? hi : lo) = mid;
    }
    return hi;
  }
  throw ConvergenceError("instanton_shoot: loop did not turn within the "
                         "arc-length budget");
}

DenseStepper make_stepper(const ShootingOptions& opts) {
  return odeint::make_dense_output(opts.ode_tol, opts.ode_tol, Stepper());
}

// x3 at the lower apex for a loop launched from the upper apex at x4_max.
double half_loop_drift(const LoopField& field, double x4_max,
                       const ShootingOptions& opts) {
  DenseStepper stepper = make_stepper(opts);
  stepper.initialize(apex_state(x4_max), 0.0, 1e-4);
  const double arc = next_turn(stepper, field, true, 20.0);
  State bottom;
  stepper.calc_state(arc, bottom);
  return bottom[0];
}

// Largest x4 with phi(x4) <= level; phi is increasing.
double height_for_level(const LoopField& field, double level) {
  return specfun::solve_bracketed(
      [&](double x4) { return field.phi(x4) - level; }, 0.0, level, 1e-15);
}

} // namespace

InstantonLoop instanton_shoot(const WeakPulseSpec& spec,
                              const FieldScales& scales,
                              const ShootingOptions& opts) {
  const double gamma = scales.gamma(spec.omega());
  const double eps = scales.eps();
  const LoopField field(spec, eps, gamma);
  InstantonLoop loop;

  if (eps == 0.0) {
    // Translation invariance: every apex height closes; take the centred one.
    loop.x4_max = 1.0;
  } else {
    auto drift = [&](double x4_max) {
      ++loop.shooting_iterations;
      if (loop.shooting_iterations > opts.max_iterations) {
        throw ConvergenceError("instanton_shoot: shooting iteration cap hit");
      }
      return half_loop_drift(field, x4_max, opts);
    };
    bool solved = false;
    for (double spread : {0.05, 0.2, 0.5}) {
      const double lo = height_for_level(field, 1.0 - spread);
      const double hi = height_for_level(field, 1.0 + spread);
      try {
        loop.x4_max = specfun::solve_bracketed(drift, lo, hi, opts.shoot_tol);
        solved = true;
        break;
      } catch (const BracketError&) {
      }
    }
    if (!solved) {
      std::ostringstream msg;
      msg << "instanton_shoot: no closing apex height found (gamma=" << gamma
          << ", eps=" << eps << ")";
      throw ConvergenceError(msg.str());
    }
  }

  DenseStepper stepper = make_stepper(opts);
  const State start = apex_state(loop.x4_max);
  stepper.initialize(start, 0.0, 1e-4);
  next_turn(stepper, field, true, 20.0);
  loop.a = next_turn(stepper, field, false, 40.0);
  State end;
  stepper.calc_state(loop.a, end);
  loop.action = end[4];

  double defect = 0.0;
  for (int i = 0; i < 4; ++i) {
    defect += (end[i] - start[i]) * (end[i] - start[i]);
  }
  loop.closure_defect = std::sqrt(defect);

  // Nodes from a fresh pass so the dense output covers every sample.
  DenseStepper sampler = make_stepper(opts);
  sampler.initialize(start, 0.0, 1e-4);
  const int samples = std::max(opts.samples, 2);
  loop.nodes.reserve(samples + 1);
  State probe;
  for (int i = 0; i <= samples; ++i) {
    const double s = loop.a * i / samples;
    while (sampler.current_time() < s) {
      sampler.do_step(field);
    }
    if (i == 0) {
      probe = start;
    } else {
      sampler.calc_state(s, probe);
    }
    loop.nodes.push_back({probe[0], probe[1]});
    loop.speed_defect = std::max(
        loop.speed_defect, std::abs(probe[2] * probe[2] + probe[3] * probe[3] - 1.0));
  }
  return loop;
}

} // namespace schwinger
