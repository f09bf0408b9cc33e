#include "hermquant/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace hermq {

namespace {

void gershgorin(const SymTridiag& t, double& lo, double& hi) {
  const std::size_t n = t.size();
  lo = std::numeric_limits<double>::infinity();
  hi = -lo;
  for (std::size_t i = 0; i < n; ++i) {
    double r = 0.0;
    if (i > 0) r += std::fabs(t.off[i - 1]);
    if (i + 1 < n) r += std::fabs(t.off[i]);
    lo = std::min(lo, t.diag[i] - r);
    hi = std::max(hi, t.diag[i] + r);
  }
  const double pad = 1e-12 * std::max({1.0, std::fabs(lo), std::fabs(hi)});
  lo -= pad;
  hi += pad;
}

}  // namespace

std::size_t sturm_count(const SymTridiag& t, double x) {
  const std::size_t n = t.size();
  const double tiny = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
  std::size_t count = 0;
  double d = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double b2 = i > 0 ? t.off[i - 1] * t.off[i - 1] : 0.0;
    d = (t.diag[i] - x) - (i > 0 ? b2 / d : 0.0);
    if (d == 0.0) d = -tiny;
    if (d < 0.0) ++count;
  }
  return count;
}

double kth_eigenvalue(const SymTridiag& t, std::size_t k) {
  if (k >= t.size()) throw IndexError("kth_eigenvalue: k out of range");
  double lo = 0.0;
  double hi = 0.0;
  gershgorin(t, lo, hi);
  const double floor = 1e-3 * std::numeric_limits<double>::epsilon() * std::max(std::fabs(lo), std::fabs(hi));
  for (int it = 0; it < 2000; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) return mid;
    const double width = hi - lo;
    if (width <= floor || width <= 2.0 * std::numeric_limits<double>::epsilon() * std::max(std::fabs(lo), std::fabs(hi))) {
      return mid;
    }
    if (sturm_count(t, mid) > k) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  throw NonConvergence("bisection did not converge for eigenvalue " + std::to_string(k));
}

std::vector<double> eigenvalues(const SymTridiag& t) {
  std::vector<double> ev(t.size());
  for (std::size_t k = 0; k < t.size(); ++k) ev[k] = kth_eigenvalue(t, k);
  return ev;
}

}  // namespace hermq
