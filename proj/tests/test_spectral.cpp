#include "doctest.h"

#include <Eigen/Dense>
#include <boost/math/special_functions/hermite.hpp>

#include <cmath>
#include <vector>

#include "hermquant/spectral.hpp"

using namespace hermq;

namespace {

// Faddeev-LeVerrier on the rational tridiagonal matrix with 1 above and
// c_k^2 below the diagonal, which is similar to the Jacobi matrix.
std::vector<Rational> faddeev_leverrier(unsigned n, unsigned s) {
  using RMat = std::vector<std::vector<Rational>>;
  RMat a(n, std::vector<Rational>(n, Rational(0)));
  for (unsigned k = 1; k < n; ++k) {
    a[k - 1][k] = 1;
    a[k][k - 1] = jacobi_c2(k, Rational(s));
  }
  auto mul = [n](const RMat& x, const RMat& y) {
    RMat z(n, std::vector<Rational>(n, Rational(0)));
    for (unsigned i = 0; i < n; ++i)
      for (unsigned k = 0; k < n; ++k)
        if (x[i][k] != 0)
          for (unsigned j = 0; j < n; ++j) z[i][j] += x[i][k] * y[k][j];
    return z;
  };
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  RMat m(n, std::vector<Rational>(n, Rational(0)));  // M_0 = 0
  for (unsigned k = 1; k <= n; ++k) {
    RMat am = mul(a, m);
    for (unsigned i = 0; i < n; ++i) am[i][i] += c[n - k + 1];
    m = am;
    const RMat amk = mul(a, m);
    Rational tr = 0;
    for (unsigned i = 0; i < n; ++i) tr += amk[i][i];
    c[n - k] = -tr / k;
  }
  return c;
}

}  // namespace

TEST_CASE("jacobi c_k^2 = (k+s)/2") {
  CHECK(jacobi_c2(3, Rational(2)) == rational(5, 2));
  const auto j = jacobi_matrix(4, 1);
  REQUIRE(j.offdiag.size() == 3);
  CHECK(j.offdiag[0] == doctest::Approx(1.0));
  CHECK(j.offdiag[2] == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("char_poly equals Faddeev-LeVerrier") {
  for (unsigned s = 0; s <= 4; ++s) {
    for (unsigned n = 1; n <= 10; ++n) CHECK(char_poly(n, s).coeffs() == faddeev_leverrier(n, s));
  }
}

TEST_CASE("assoc_hermite: s = 0 is classical Hermite (Boost.Math)") {
  for (unsigned n = 0; n <= 12; ++n) {
    const PolyExact h = assoc_hermite(n, Rational(0));
    for (double x : {-1.3, 0.0, 0.4, 2.2}) {
      CHECK(h(x) == doctest::Approx(boost::math::hermite(n, x)).epsilon(1e-12).scale(1.0));
    }
  }
  CHECK(assoc_hermite(2, Rational(1)).coeffs() == std::vector<Rational>{-4, 0, 4});
  CHECK(assoc_hermite(3, Rational(0)).coeffs() == std::vector<Rational>{0, -12, 0, 8});
}

TEST_CASE("eigenvalues and Golub-Welsch weights against Eigen") {
  for (unsigned s = 0; s <= 4; ++s) {
    const unsigned n = 30;
    const auto j = jacobi_matrix(n, s);
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (unsigned k = 0; k + 1 < n; ++k) m(k, k + 1) = m(k + 1, k) = j.offdiag[k];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
    const auto ev = eigenvalues(n, s);
    const auto gw = golub_welsch(s, n);
    for (unsigned k = 0; k < n; ++k) {
      CHECK(ev[k] == doctest::Approx(es.eigenvalues()(k)).epsilon(1e-12).scale(1.0));
      CHECK(gw.nodes[k] == doctest::Approx(es.eigenvalues()(k)).epsilon(1e-12).scale(1.0));
      const double w = std::pow(es.eigenvectors()(0, k), 2);
      CHECK(std::fabs(gw.weights[k] - w) < 1e-9 * w + 1e-15);
    }
  }
}

TEST_CASE("divergence partial sums match a direct sum") {
  const DivergenceReport r = selfadjointness_divergence_test(0, 10000, 190.0);
  long double direct = 0.0L;
  unsigned counted = 0;
  for (unsigned k = 0; counted < 10000; ++k) {
    if (k == 0) continue;
    direct += 1.0L / std::sqrt(static_cast<long double>(k));
    ++counted;
  }
  REQUIRE_FALSE(r.partial_sums.empty());
  CHECK(r.partial_sums.back() == doctest::Approx(static_cast<double>(direct)).epsilon(1e-12));
  CHECK(r.monotone);
  CHECK(r.exceeds_threshold);
}

TEST_CASE("associated Laguerre forms reproduce H_n") {
  for (unsigned s = 0; s <= 4; ++s) {
    for (unsigned n = 0; n <= 4; ++n) CHECK(assoc_hermite_laguerre_check(n, s).all_pass());
  }
}
