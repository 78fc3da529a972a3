#include "rotint/quadrature.hpp"

#include <cmath>
#include <cstddef>

#include "rotint/errors.hpp"

namespace rotint {

std::vector<double> simpson_weights(std::size_t n, double h) {
  if (n < 2) {
    throw validation_error("simpson_weights: need at least 2 points");
  }
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw validation_error("simpson_weights: step must be positive and finite");
  }

  std::vector<double> w(n, 0.0);
  const std::size_t m = n - 1;  // interval count

  if (m == 1) {
    w[0] = w[1] = h / 2.0;
    return w;
  }

  if (m % 2 == 0) {
    const double third = h / 3.0;
    w[0] = w[m] = third;
    for (std::size_t i = 1; i < m; ++i) {
      w[i] = (i % 2 == 1 ? 4.0 : 2.0) * third;
    }
    return w;
  }

  if (m % 3 == 0) {
    const double c = 3.0 * h / 8.0;
    w[0] = w[m] = c;
    for (std::size_t i = 1; i < m; ++i) {
      w[i] = (i % 3 == 0 ? 2.0 : 3.0) * c;
    }
    return w;
  }

  // m odd and not divisible by 3: 1/3 rule on the first m - 3 intervals
  // (an even count >= 2 because m >= 5 here), 3/8 rule on the final three.
  const std::size_t k = m - 3;
  const double third = h / 3.0;
  w[0] = third;
  for (std::size_t i = 1; i < k; ++i) {
    w[i] = (i % 2 == 1 ? 4.0 : 2.0) * third;
  }
  w[k] = third;  // right endpoint of the 1/3 part...
  const double c = 3.0 * h / 8.0;
  w[k] += c;  // ...is also the left endpoint of the 3/8 part
  w[k + 1] = 3.0 * c;
  w[k + 2] = 3.0 * c;
  w[m] = c;
  return w;
}

namespace {

struct Panel {
  double a, b, fa, fm, fb, whole;
};

double simpson_estimate(double a, double b, double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

// Classic adaptive Simpson with Richardson correction; eps is the absolute
// error budget for this subinterval.
double adapt(const std::function<double(double)>& f, double a, double b,
             double fa, double fm, double fb, double whole, double eps,
             int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson_estimate(a, m, fa, flm, fm);
  const double right = simpson_estimate(m, b, fm, frm, fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * eps) {
    return left + right + delta / 15.0;
  }
  return adapt(f, a, m, fa, flm, fm, left, 0.5 * eps, depth - 1) +
         adapt(f, m, b, fm, frm, fb, right, 0.5 * eps, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double rel_tol, std::size_t min_intervals) {
  if (!(rel_tol > 0.0)) {
    throw validation_error("adaptive_simpson: relative tolerance must be positive");
  }
  if (min_intervals < 1) {
    throw validation_error("adaptive_simpson: need at least one seed interval");
  }
  if (!(b >= a)) {
    throw validation_error("adaptive_simpson: interval must satisfy b >= a");
  }
  if (a == b) {
    return 0.0;
  }

  // Seed pass: one Simpson estimate per uniform panel, kept for refinement.
  const std::size_t n = min_intervals;
  const double h = (b - a) / static_cast<double>(n);
  std::vector<Panel> panels;
  panels.reserve(n);
  double estimate = 0.0;
  double prev_f = f(a);
  for (std::size_t i = 0; i < n; ++i) {
    const double pa = a + h * static_cast<double>(i);
    const double pb = (i + 1 == n) ? b : a + h * static_cast<double>(i + 1);
    const double fm = f(0.5 * (pa + pb));
    const double fb = f(pb);
    const double whole = simpson_estimate(pa, pb, prev_f, fm, fb);
    panels.push_back({pa, pb, prev_f, fm, fb, whole});
    estimate += whole;
    prev_f = fb;
  }

  const double scale = std::abs(estimate) > 0.0 ? std::abs(estimate) : 1.0;
  const double eps_per_panel = rel_tol * scale / static_cast<double>(n);

  double total = 0.0;
  for (const Panel& p : panels) {
    total += adapt(f, p.a, p.b, p.fa, p.fm, p.fb, p.whole, eps_per_panel, 48);
  }
  return total;
}

}  // namespace rotint
