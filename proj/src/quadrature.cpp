#include "hermquant/quadrature.hpp"

#include <algorithm>
#include <stdexcept>

#include "hermquant/tridiag.hpp"

namespace hermq {

namespace {

// L_n^{(alpha)}(x) and its derivative by the three-term recurrence.
void laguerre_with_derivative(unsigned n, long double alpha, long double x, long double& value,
                              long double& deriv) {
  long double prev = 0.0L;
  long double cur = 1.0L;
  for (unsigned k = 0; k < n; ++k) {
    const long double next = ((2.0L * k + 1.0L + alpha - x) * cur - (k + alpha) * prev) / (k + 1.0L);
    prev = cur;
    cur = next;
  }
  value = cur;
  deriv = (n * cur - (n + alpha) * prev) / x;
}

}  // namespace

QuadratureRule gauss_laguerre_rule(unsigned n_r, double alpha, unsigned angular_points) {
  if (n_r == 0) throw std::invalid_argument("gauss_laguerre_rule: n_r must be >= 1");
  if (alpha <= -1.0) throw std::invalid_argument("gauss_laguerre_rule: alpha must exceed -1");
  if (angular_points == 0) throw std::invalid_argument("gauss_laguerre_rule: angular_points must be >= 1");

  SymTridiag jac;
  jac.diag.resize(n_r);
  jac.off.resize(n_r - 1);
  for (unsigned k = 0; k < n_r; ++k) jac.diag[k] = 2.0 * k + alpha + 1.0;
  for (unsigned k = 1; k < n_r; ++k) jac.off[k - 1] = std::sqrt(k * (k + alpha));

  QuadratureRule rule;
  rule.alpha = alpha;
  rule.angular_points = angular_points;
  rule.nodes = eigenvalues(jac);

  // Polish each node with Newton steps on L_n^{(alpha)}.
  for (unsigned j = 0; j < n_r; ++j) {
    long double x = rule.nodes[j];
    const double gap_lo = j > 0 ? rule.nodes[j] - rule.nodes[j - 1] : rule.nodes[j];
    const double gap_hi = j + 1 < n_r ? rule.nodes[j + 1] - rule.nodes[j] : gap_lo;
    const long double limit = 0.01L * std::min(gap_lo, gap_hi);
    for (int it = 0; it < 3; ++it) {
      long double v = 0.0L;
      long double d = 0.0L;
      laguerre_with_derivative(n_r, alpha, x, v, d);
      if (d == 0.0L) break;
      const long double step = v / d;
      if (!(std::fabs(step) < limit)) break;
      x -= step;
    }
    rule.nodes[j] = static_cast<double>(x);
  }

  // Christoffel numbers w_j = mu0 / sum_k p_k(x_j)^2 with orthonormal p_k,
  // accumulated with rescaling so that large nodes do not overflow.
  const long double log_mu0 = std::lgamma(alpha + 1.0);
  rule.weights.resize(n_r);
  for (unsigned j = 0; j < n_r; ++j) {
    const long double x = rule.nodes[j];
    long double prev = 0.0L;
    long double cur = 1.0L;
    long double sum = 1.0L;
    long double log_scale = 0.0L;  // true values are exp(log_scale) times the stored ones
    for (unsigned k = 0; k + 1 < n_r; ++k) {
      const long double bk = k > 0 ? std::sqrt(static_cast<long double>(k) * (k + alpha)) : 0.0L;
      const long double bk1 = std::sqrt(static_cast<long double>(k + 1) * (k + 1 + alpha));
      const long double next = ((x - (2.0L * k + alpha + 1.0L)) * cur - bk * prev) / bk1;
      prev = cur;
      cur = next;
      sum += cur * cur;
      if (std::fabs(cur) > 1e150L) {
        prev *= 1e-150L;
        cur *= 1e-150L;
        sum *= 1e-300L;
        log_scale += 150.0L * std::log(10.0L);
      }
    }
    rule.weights[j] = static_cast<double>(std::exp(log_mu0 - std::log(sum) - 2.0L * log_scale));
  }
  return rule;
}

QuadratureRule plane_rule(unsigned radial_degree, unsigned max_frequency) {
  return gauss_laguerre_rule(radial_degree / 2 + 8, 0.0, 2 * max_frequency + 3);
}

}  // namespace hermq
