#pragma once

// Special functions and numerical kernels shared by the rest of the library:
// the generalized exponential integral continued to negative argument, the
// modified Bessel function K1, adaptive quadrature and bracketed root finding.
// Everything here is a pure function of its arguments.

#include <functional>

#include "schwinger/errors.hpp"

namespace schwinger::specfun {

using RealFunction = std::function<double(double)>;

struct RealSeriesResult {
  double value = 0.0;
  int terms_used = 0;
  bool converged = false;
};

struct QuadratureResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  int subdivisions = 0;
};

inline constexpr int kSeriesTermCap = 500;
inline constexpr double kSeriesRelTol = 1e-15;
// Above this |argument| the exponential integral switches from the
// convergent power series to the asymptotic expansion.
inline constexpr double kExpintAsymptoticSwitch = 30.0;

// ---------------------------------------------------------------------------
// Generalized exponential integral at negative real argument.
//
// E_nu(z) = Gamma(1-nu) z^(nu-1) - sum_k (-z)^k / (k! (1-nu+k)).
// At z = -alpha the first ("branch") term is complex on the principal branch;
// expint_re keeps its real part, Gamma(1-nu) alpha^(nu-1) cos(pi (nu-1)).
// The remaining sum is entire in z and real; it is exposed separately as
// expint_entire so callers that need the branch-free continuation (the
// Euclidean potential) do not have to subtract two large numbers.
// ---------------------------------------------------------------------------

// Re E_nu(-alpha). Throws DomainError for alpha < 0, for positive integer nu,
// and for alpha == 0 when nu <= 1.
double expint_re(double nu, double alpha);
RealSeriesResult expint_re_detail(double nu, double alpha);

// Real part of the branch term Gamma(1-nu) (-alpha)^(nu-1).
double expint_branch_term(double nu, double alpha);

// -sum_k alpha^k / (k! (1-nu+k)) = Re E_nu(-alpha) - branch term.
double expint_entire(double nu, double alpha);
RealSeriesResult expint_entire_detail(double nu, double alpha);

// Phi_rho(a) = int_0^a e^v v^(rho-1) dv, 0 < rho <= 1, by quadrature after
// the substitution v = w^(1/rho).
double phi_integral(double rho, double a);

// Modified Bessel function of the second kind, order one. x > 0.
double bessel_k1(double x);

// ---------------------------------------------------------------------------
// Quadrature
// ---------------------------------------------------------------------------

struct QuadratureOptions {
  double abs_tol = 1e-13;
  double rel_tol = 1e-13;
  int max_subdivisions = 2000;
};

// Adaptive Gauss-Kronrod (7/15) on [lo, hi]. Throws ConvergenceError when the
// subdivision cap is hit before the tolerance, NumericalError on NaN.
QuadratureResult integrate(const RealFunction& f, double lo, double hi,
                           const QuadratureOptions& opts = {});

// Integral over [0, inf) via x = t / (1 - t). Suitable for integrands that
// decay without oscillating.
QuadratureResult integrate_semiline(const RealFunction& f, double tol);

// Integral over [0, inf) of an integrand whose sign changes at multiples of
// zero_spacing (e.g. sin(x)/x with spacing pi). Each zero-to-zero lobe is
// integrated separately and the alternating partial sums are accelerated
// with Wynn's epsilon algorithm.
QuadratureResult integrate_oscillatory_semiline(const RealFunction& f,
                                                double zero_spacing,
                                                double tol);

// ---------------------------------------------------------------------------
// Root finding
// ---------------------------------------------------------------------------

// Brent's method with bisection fallback. Requires f(lo) * f(hi) <= 0
// (BracketError otherwise). The result always lies inside [lo, hi].
double solve_bracketed(const RealFunction& f, double lo, double hi,
                       double tol);

} // namespace schwinger::specfun
