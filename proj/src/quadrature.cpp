#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <sstream>
#include <vector>

#include "schwinger/specfun.hpp"

namespace schwinger::specfun {

namespace {

// Gauss-Kronrod 7/15 abscissae on [-1, 1] (positive half, centre last).
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for the odd-indexed Kronrod nodes (1, 3, 5) and the centre.
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double lo;
  double hi;
  double value;
  double error;
  bool operator<(const Segment& other) const { return error < other.error; }
};

Segment gk15(const RealFunction& f, double lo, double hi) {
  const double centre = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double fc = f(centre);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double f1 = f(centre - dx);
    const double f2 = f(centre + dx);
    kronrod += kWgk[j] * (f1 + f2);
    if (j % 2 == 1) {
      gauss += kWg[j / 2] * (f1 + f2);
    }
  }
  Segment s{lo, hi, kronrod * half, std::abs((kronrod - gauss) * half)};
  if (std::isnan(s.value)) {
    std::ostringstream msg;
    msg << "integrate: integrand produced NaN on [" << lo << ", " << hi << "]";
    throw NumericalError(msg.str());
  }
  return s;
}

} // namespace

QuadratureResult integrate(const RealFunction& f, double lo, double hi,
                           const QuadratureOptions& opts) {
  QuadratureResult r;
  if (lo == hi) {
    return r;
  }
  std::priority_queue<Segment> heap;
  Segment first = gk15(f, lo, hi);
  double total = first.value;
  double error = first.error;
  heap.push(first);
  r.subdivisions = 1;
  while (error > std::max(opts.abs_tol, opts.rel_tol * std::abs(total))) {
    if (r.subdivisions >= opts.max_subdivisions) {
      std::ostringstream msg;
      msg << "integrate: tolerance not met on [" << lo << ", " << hi
          << "] after " << r.subdivisions << " subdivisions (error " << error
          << ")";
      throw ConvergenceError(msg.str());
    }
    const Segment worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (mid <= worst.lo || mid >= worst.hi) {
      // Interval cannot be split further in double precision.
      heap.push(worst);
      break;
    }
    const Segment left = gk15(f, worst.lo, mid);
    const Segment right = gk15(f, mid, worst.hi);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++r.subdivisions;
  }
  // Re-sum to shed accumulated cancellation in the running totals.
  total = 0.0;
  error = 0.0;
  while (!heap.empty()) {
    total += heap.top().value;
    error += heap.top().error;
    heap.pop();
  }
  r.value = total;
  r.abs_error_estimate = error;
  return r;
}

QuadratureResult integrate_semiline(const RealFunction& f, double tol) {
  if (!(tol > 0.0)) {
    throw DomainError("integrate_semiline: tol must be positive");
  }
  auto mapped = [&f](double t) {
    const double one_minus = 1.0 - t;
    const double x = t / one_minus;
    return f(x) / (one_minus * one_minus);
  };
  QuadratureOptions opts;
  opts.abs_tol = tol;
  opts.rel_tol = tol;
  return integrate(mapped, 0.0, 1.0, opts);
}

namespace {

// Wynn's epsilon algorithm on a sequence of partial sums; returns the
// highest even-column estimate.
double wynn_epsilon(const std::vector<double>& sums) {
  const std::size_t n = sums.size();
  std::vector<double> prev(n + 1, 0.0);
  std::vector<double> curr(sums.begin(), sums.end());
  double best = sums.back();
  for (std::size_t col = 1; col < n; ++col) {
    std::vector<double> next(n - col);
    bool ok = true;
    for (std::size_t i = 0; i + col < n; ++i) {
      const double diff = curr[i + 1] - curr[i];
      if (diff == 0.0) {
        ok = false;
        break;
      }
      next[i] = prev[i + 1] + 1.0 / diff;
    }
    if (!ok) {
      break;
    }
    prev = std::move(curr);
    curr = std::move(next);
    if (col % 2 == 0) {
      best = curr.back();
    }
  }
  return best;
}

} // namespace

QuadratureResult integrate_oscillatory_semiline(const RealFunction& f,
                                                double zero_spacing,
                                                double tol) {
  if (!(zero_spacing > 0.0) || !(tol > 0.0)) {
    throw DomainError(
        "integrate_oscillatory_semiline: spacing and tol must be positive");
  }
  constexpr int kMaxLobes = 400;
  QuadratureOptions opts;
  opts.abs_tol = 0.1 * tol;
  opts.rel_tol = 1e-15;
  QuadratureResult r;
  std::vector<double> partial;
  double sum = 0.0;
  double quad_error = 0.0;
  double previous_estimate = 0.0;
  int stable = 0;
  for (int k = 0; k < kMaxLobes; ++k) {
    const QuadratureResult lobe =
        integrate(f, k * zero_spacing, (k + 1) * zero_spacing, opts);
    sum += lobe.value;
    quad_error += lobe.abs_error_estimate;
    r.subdivisions += lobe.subdivisions;
    partial.push_back(sum);
    if (partial.size() < 6) {
      continue;
    }
    // Keep the table short; the tail of the sequence carries the information.
    const std::size_t window = std::min<std::size_t>(partial.size(), 24);
    const std::vector<double> tail(partial.end() - window, partial.end());
    const double estimate = wynn_epsilon(tail);
    const double change = std::abs(estimate - previous_estimate);
    previous_estimate = estimate;
    if (change < tol * std::max(1.0, std::abs(estimate))) {
      if (++stable >= 2) {
        r.value = estimate;
        r.abs_error_estimate = change + quad_error;
        return r;
      }
    } else {
      stable = 0;
    }
  }
  throw ConvergenceError(
      "integrate_oscillatory_semiline: extrapolation did not settle");
}

} // namespace schwinger::specfun
