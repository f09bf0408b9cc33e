// Gauss-Laguerre rules and the factorized plane quadrature
//   int d^2z/pi e^{-|z|^2} h(z) = int_0^inf du e^{-u} (1/2pi) int dtheta h(sqrt(u) e^{i theta}).
#pragma once

#include <cmath>
#include <complex>
#include <vector>

namespace hermq {

struct QuadratureRule {
  std::vector<double> nodes;    // radial nodes u_j (u = |z|^2)
  std::vector<double> weights;  // weights for int_0^inf u^alpha e^{-u} g(u) du
  unsigned angular_points = 1;  // uniform grid on [0, 2pi)
  double alpha = 0.0;

  std::size_t radial_size() const { return nodes.size(); }
};

/// n_r-point generalized Gauss-Laguerre rule: nodes are the eigenvalues of the
/// Laguerre Jacobi matrix (diagonal 2k+alpha+1, off-diagonal sqrt(k(k+alpha))),
/// weights are Gamma(alpha+1) times the squared first eigenvector components.
QuadratureRule gauss_laguerre_rule(unsigned n_r, double alpha = 0.0, unsigned angular_points = 1);

/// Rule sized for e^{-u} * (polynomial of degree radial_degree in u) times a
/// trigonometric polynomial of maximal frequency max_frequency:
/// n_r = radial_degree/2 + 8, M = 2 max_frequency + 3.
QuadratureRule plane_rule(unsigned radial_degree, unsigned max_frequency);

/// int d^2z/pi e^{-|z|^2} h(z) for h(z) given on the product grid.
template <class F>
std::complex<double> integrate_plane(const QuadratureRule& rule, F&& h) {
  const unsigned m = rule.angular_points;
  const double two_pi = 2.0 * M_PI;
  std::complex<double> total{0.0, 0.0};
  for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
    const double rho = std::sqrt(rule.nodes[j]);
    std::complex<double> ring{0.0, 0.0};
    for (unsigned k = 0; k < m; ++k) {
      const double th = two_pi * k / m;
      ring += h(std::complex<double>(rho * std::cos(th), rho * std::sin(th)), rule.nodes[j], th);
    }
    total += rule.weights[j] * ring / static_cast<double>(m);
  }
  return total;
}

}  // namespace hermq
