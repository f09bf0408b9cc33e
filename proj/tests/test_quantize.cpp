#include "doctest.h"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/special_functions/laguerre.hpp>

#include <cmath>

#include "hermquant/errors.hpp"
#include "hermquant/quantize.hpp"
#include "hermquant/specfun.hpp"

using namespace hermq;

TEST_CASE("laguerre_integral against an exp_sinh integral") {
  boost::math::quadrature::exp_sinh<double> integrator;
  struct Case {
    double lambda, alpha, beta;
    unsigned r, s;
  };
  for (const Case& c : {Case{0, 0, 0, 2, 2}, Case{1, 1, 0, 3, 1}, Case{2, 1, 1, 2, 3}, Case{3, 2, 1, 1, 4},
                        Case{0.5, 1, 1, 2, 2}}) {
    const double want = integrator.integrate(
        [&](double x) {
          if (x > 600.0) return 0.0;
          return std::pow(x, c.lambda) * std::exp(-x) * laguerre(c.r, c.alpha, x) * laguerre(c.s, c.beta, x);
        },
        1e-14);
    CHECK(laguerre_integral(c.lambda, c.alpha, c.beta, c.r, c.s) == doctest::Approx(want).epsilon(1e-9).scale(1.0));
  }
  // Orthogonality: lambda = alpha = beta
  CHECK(laguerre_integral(2, 2, 2, 3, 1) == doctest::Approx(0.0).scale(1.0));
  CHECK(laguerre_integral(2, 2, 2, 3, 3) == doctest::Approx(std::tgamma(6.0) / 6.0));
  // Removable pole at (2,1,1,2,3) evaluates to -12.
  CHECK(laguerre_integral(2, 1, 1, 2, 3) == doctest::Approx(-12.0));
  CHECK_THROWS_AS(laguerre_integral_raw(2, 1, 1, 2, 3), PoleError);
}

TEST_CASE("quantizing 1, z and |z|^2") {
  const std::size_t n = 8;
  for (unsigned s = 0; s <= 3; ++s) {
    const auto one = quantize_monomial_closed(0, 0, s, Sector::L, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) CHECK(one.at(i, j) == Complex(i == j ? 1.0 : 0.0));
    }
    // A_z is the lowering matrix A_z: entries sqrt(s+n+1) above the diagonal for L.
    const auto az = quantize_monomial_closed(1, 0, s, Sector::L, n);
    for (std::size_t k = 0; k + 1 < n; ++k) CHECK(az.at(k, k + 1).real() == doctest::Approx(std::sqrt(s + k + 1.0)));
  }
}

TEST_CASE("numeric quantization of a sampled real function is Hermitian") {
  Sampled f;
  f.f = [](double u, double th) { return Complex(u * std::cos(2 * th) + 0.5 * u * u, 0.0); };
  f.max_frequency = 2;
  f.radial_degree = 2;
  const PhaseSpaceFunction pf = f;
  const auto op = quantize_numeric(pf, 1, Sector::L, 10, quantization_rule(pf, 1, 10));
  for (std::size_t i = 0; i < 10; ++i) {
    for (std::size_t j = 0; j < 10; ++j) CHECK(std::abs(op.at(i, j) - std::conj(op.at(j, i))) < 1e-12);
  }
  Sampled bare;
  bare.f = [](double, double) { return Complex(1.0); };
  CHECK_THROWS_AS(quantization_rule(PhaseSpaceFunction(bare), 0, 4), HintViolation);
}

TEST_CASE("coherent states and lower symbols") {
  const Complex z(0.6, -0.8);
  for (unsigned s = 0; s <= 3; ++s) {
    const std::size_t dim = cs_dimension(z, s, 1e-15);
    const auto c = cs_coefficients(z, s, Sector::L, dim);
    long double norm = 0.0L;
    for (const auto& x : c) norm += std::norm(x);
    CHECK(static_cast<double>(norm) == doctest::Approx(1.0).epsilon(1e-14));
    const auto one = quantize_monomial_closed(0, 0, s, Sector::L, dim + 5);
    CHECK(std::abs(lower_symbol(one, z, s, Sector::L) - 1.0) < 1e-13);
  }
  const auto small = quantize_monomial_closed(0, 0, 0, Sector::L, 3);
  CHECK_THROWS_AS(lower_symbol(small, Complex(4.0, 0.0), 0, Sector::L), TailError);
}

TEST_CASE("scaled normalization agrees with the direct ratio") {
  for (unsigned s = 0; s <= 4; ++s) {
    for (double t : {0.2, 2.0, 10.0}) {
      long double deficit = 0.0L;
      for (unsigned m = 0; m < s; ++m) {
        const long double l = boost::math::laguerre(m, s - m, t);
        deficit += std::exp(std::lgamma(m + 1.0L) - std::lgamma(s + 1.0L) - t) * std::pow(t, s - m) * l * l;
      }
      CHECK(scaled_normalization(s, t) == doctest::Approx(static_cast<double>(1.0L - deficit)).epsilon(1e-13));
    }
  }
}
