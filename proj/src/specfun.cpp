#include "schwinger/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace schwinger::specfun {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEulerGamma = std::numbers::egamma;

bool is_positive_integer(double nu) {
  return nu >= 1.0 && nu == std::floor(nu);
}

void check_expint_domain(double nu, double alpha) {
  if (!(alpha >= 0.0) || !std::isfinite(alpha) || !std::isfinite(nu)) {
    std::ostringstream msg;
    msg << "expint: alpha must be finite and >= 0 (nu=" << nu
        << ", alpha=" << alpha << ")";
    throw DomainError(msg.str());
  }
  if (is_positive_integer(nu)) {
    throw DomainError("expint: positive integer order hits a pole of the "
                      "branch term; not supported");
  }
  if (alpha == 0.0 && nu <= 1.0) {
    throw DomainError("expint: E_nu(0) diverges for nu <= 1");
  }
}

// -sum_{k>=0} alpha^k / (k! (1 - nu + k))
RealSeriesResult entire_series(double nu, double alpha) {
  RealSeriesResult r;
  double power = 1.0; // alpha^k / k!
  double sum = 0.0;
  for (int k = 0; k < kSeriesTermCap; ++k) {
    const double term = power / (1.0 - nu + k);
    sum += term;
    r.terms_used = k + 1;
    // Terms keep growing while k < alpha; only test past the peak.
    if (k > alpha && std::abs(term) < kSeriesRelTol * std::abs(sum)) {
      r.converged = true;
      break;
    }
    if (power == 0.0) {
      r.converged = true;
      break;
    }
    power *= alpha / (k + 1);
  }
  r.value = -sum;
  return r;
}

// Re E_nu(-alpha) ~ -(e^alpha / alpha) sum_k (nu)_k / alpha^k, truncated
// before the smallest term.
RealSeriesResult asymptotic_series(double nu, double alpha) {
  RealSeriesResult r;
  const double scale = std::exp(alpha) / alpha;
  if (!std::isfinite(scale)) {
    throw OverflowError("expint: e^alpha overflows for alpha = " +
                        std::to_string(alpha));
  }
  double term = 1.0;
  double sum = 1.0;
  double last = 1.0;
  r.terms_used = 1;
  for (int k = 0; k < kSeriesTermCap; ++k) {
    const double next = term * (nu + k) / alpha;
    if (std::abs(next) >= std::abs(last) && k > 0) {
      // Smallest term reached; optimal truncation.
      break;
    }
    term = next;
    sum += term;
    last = term;
    r.terms_used = k + 2;
    if (std::abs(term) < kSeriesRelTol * std::abs(sum)) {
      break;
    }
  }
  // The truncation error is bounded by the first omitted term.
  r.converged = std::abs(last) < 1e-10 * std::abs(sum);
  r.value = -scale * sum;
  return r;
}

} // namespace

double expint_branch_term(double nu, double alpha) {
  check_expint_domain(nu, alpha);
  if (alpha == 0.0) {
    return 0.0; // nu > 1 here, so alpha^(nu-1) -> 0
  }
  return std::tgamma(1.0 - nu) * std::pow(alpha, nu - 1.0) *
         std::cos(kPi * (nu - 1.0));
}

RealSeriesResult expint_entire_detail(double nu, double alpha) {
  check_expint_domain(nu, alpha);
  RealSeriesResult r;
  if (alpha < kExpintAsymptoticSwitch) {
    r = entire_series(nu, alpha);
  } else {
    r = asymptotic_series(nu, alpha);
    r.value -= expint_branch_term(nu, alpha);
  }
  if (!r.converged) {
    std::ostringstream msg;
    msg << "expint: no convergence for nu=" << nu << ", alpha=" << alpha
        << " after " << r.terms_used << " terms";
    throw ConvergenceError(msg.str());
  }
  return r;
}

double expint_entire(double nu, double alpha) {
  return expint_entire_detail(nu, alpha).value;
}

RealSeriesResult expint_re_detail(double nu, double alpha) {
  check_expint_domain(nu, alpha);
  RealSeriesResult r;
  if (alpha < kExpintAsymptoticSwitch) {
    r = entire_series(nu, alpha);
    r.value += expint_branch_term(nu, alpha);
  } else {
    r = asymptotic_series(nu, alpha);
  }
  if (!r.converged) {
    std::ostringstream msg;
    msg << "expint: no convergence for nu=" << nu << ", alpha=" << alpha
        << " after " << r.terms_used << " terms";
    throw ConvergenceError(msg.str());
  }
  return r;
}

double expint_re(double nu, double alpha) {
  return expint_re_detail(nu, alpha).value;
}

double phi_integral(double rho, double a) {
  if (!(rho > 0.0 && rho <= 1.0) || !(a >= 0.0)) {
    throw DomainError("phi_integral: need 0 < rho <= 1 and a >= 0");
  }
  if (a == 0.0) {
    return 0.0;
  }
  // v = w^(1/rho): e^v v^(rho-1) dv = (1/rho) e^(w^(1/rho)) dw
  const double upper = std::pow(a, rho);
  const double inv_rho = 1.0 / rho;
  auto integrand = [inv_rho](double w) {
    return inv_rho * std::exp(std::pow(w, inv_rho));
  };
  QuadratureOptions opts;
  opts.abs_tol = 0.0;
  opts.rel_tol = 1e-14;
  return integrate(integrand, 0.0, upper, opts).value;
}

// ---------------------------------------------------------------------------
// K1
// ---------------------------------------------------------------------------

namespace {

// Power series with logarithmic term, used for x <= 2.
double k1_series(double x) {
  const double q = 0.25 * x * x;
  // I1(x) = (x/2) sum q^k / (k! (k+1)!)
  double i1_term = 0.5 * x;
  double i1 = i1_term;
  // psi(k+1) + psi(k+2) with psi(1) = -gamma
  double psi_k1 = -kEulerGamma;
  double psi_k2 = 1.0 - kEulerGamma;
  double s_term = 1.0; // q^k / (k! (k+1)!)
  double s = (psi_k1 + psi_k2) * s_term;
  for (int k = 1; k < 60; ++k) {
    s_term *= q / (k * (k + 1.0));
    i1_term *= q / (k * (k + 1.0));
    psi_k1 += 1.0 / k;
    psi_k2 += 1.0 / (k + 1.0);
    const double ds = (psi_k1 + psi_k2) * s_term;
    s += ds;
    i1 += i1_term;
    if (std::abs(ds) < 1e-17 * std::abs(s) && i1_term < 1e-17 * i1) {
      break;
    }
  }
  return 1.0 / x + std::log(0.5 * x) * i1 - 0.25 * x * s;
}

// Steed's continued fraction (Temme's CF2) for K_0 and K_1, x >= 2.
double k1_continued_fraction(double x) {
  double b = 2.0 * (1.0 + x);
  double d = 1.0 / b;
  double h = d;
  double delh = d;
  double q1 = 0.0;
  double q2 = 1.0;
  const double a1 = 0.25;
  double q = a1;
  double c = a1;
  double a = -a1;
  double s = 1.0 + q * delh;
  int i = 1;
  for (; i < 10000; ++i) {
    a -= 2 * i;
    c = -a * c / (i + 1.0);
    const double qnew = (q1 - b * q2) / a;
    q1 = q2;
    q2 = qnew;
    q += c * qnew;
    b += 2.0;
    d = 1.0 / (b + a * d);
    delh = (b * d - 1.0) * delh;
    h += delh;
    const double dels = q * delh;
    s += dels;
    if (std::abs(dels / s) < 1e-16) {
      break;
    }
  }
  if (i == 10000) {
    throw ConvergenceError("bessel_k1: continued fraction did not converge");
  }
  h = a1 * h;
  const double k0 = std::sqrt(kPi / (2.0 * x)) * std::exp(-x) / s;
  return k0 * (x + 0.5 - h) / x;
}

// Hankel expansion; only used far out where it is accurate to e^(-2x).
double k1_asymptotic(double x) {
  constexpr double mu = 4.0;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 30; ++k) {
    const double odd = 2.0 * k - 1.0;
    const double next = term * (mu - odd * odd) / (k * 8.0 * x);
    if (std::abs(next) >= std::abs(term)) {
      break;
    }
    term = next;
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) {
      break;
    }
  }
  return std::sqrt(kPi / (2.0 * x)) * std::exp(-x) * sum;
}

} // namespace

double bessel_k1(double x) {
  if (!(x > 0.0)) {
    throw DomainError("bessel_k1: argument must be positive");
  }
  if (x <= 2.0) {
    return k1_series(x);
  }
  if (x <= 40.0) {
    return k1_continued_fraction(x);
  }
  return k1_asymptotic(x);
}

// ---------------------------------------------------------------------------
// Brent
// ---------------------------------------------------------------------------

double solve_bracketed(const RealFunction& f, double lo, double hi,
                       double tol) {
  if (lo > hi) {
    std::swap(lo, hi);
  }
  double a = lo;
  double b = hi;
  double fa = f(a);
  double fb = f(b);
  if (std::isnan(fa) || std::isnan(fb)) {
    throw NumericalError("solve_bracketed: function is NaN at bracket end");
  }
  if (fa == 0.0) {
    return a;
  }
  if (fb == 0.0) {
    return b;
  }
  if (fa * fb > 0.0) {
    std::ostringstream msg;
    msg << "solve_bracketed: no sign change on [" << lo << ", " << hi
        << "] (f=" << fa << ", " << fb << ")";
    throw BracketError(msg.str());
  }
  double c = b;
  double fc = fb;
  double d = 0.0;
  double e = 0.0;
  constexpr double eps = std::numeric_limits<double>::epsilon();
  for (int iter = 0; iter < 500; ++iter) {
    if ((fb > 0.0 && fc > 0.0) || (fb < 0.0 && fc < 0.0)) {
      c = a;
      fc = fa;
      e = d = b - a;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b;
      b = c;
      c = a;
      fa = fb;
      fb = fc;
      fc = fa;
    }
    const double tol1 =
        2.0 * eps * std::abs(b) + 0.5 * tol * std::max(1.0, std::abs(b));
    const double xm = 0.5 * (c - b);
    if (std::abs(xm) <= tol1 || fb == 0.0) {
      return std::clamp(b, lo, hi);
    }
    if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
      double p;
      double q;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {
        const double qq = fa / fc;
        const double r = fb / fc;
        p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
        q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) {
        q = -q;
      }
      p = std::abs(p);
      const double min1 = 3.0 * xm * q - std::abs(tol1 * q);
      const double min2 = std::abs(e * q);
      if (2.0 * p < std::min(min1, min2)) {
        e = d;
        d = p / q;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = b;
    fa = fb;
    b += (std::abs(d) > tol1) ? d : std::copysign(tol1, xm);
    fb = f(b);
    if (std::isnan(fb)) {
      throw NumericalError("solve_bracketed: function returned NaN");
    }
  }
  throw ConvergenceError("solve_bracketed: iteration cap reached");
}

} // namespace schwinger::specfun
