#include "doctest.h"

#include <boost/math/distributions/gamma.hpp>
#include <boost/math/distributions/poisson.hpp>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/trapezoidal.hpp>

#include <cmath>

#include "hermquant/basis.hpp"
#include "hermquant/errors.hpp"
#include "hermquant/specfun.hpp"

using namespace hermq;

namespace {

// (1/pi) int d^2z f(z), polar: radial exp_sinh times periodic trapezoid.
Complex plane_integral(const std::function<Complex(Complex)>& f) {
  boost::math::quadrature::exp_sinh<double> radial;
  auto part = [&](bool imag) {
    return radial.integrate(
        [&](double r) {
          auto ang = [&](double th) {
            const Complex v = f(std::polar(r, th));
            return imag ? v.imag() : v.real();
          };
          return r * boost::math::quadrature::trapezoidal(ang, 0.0, 2.0 * M_PI, 1e-13);
        },
        1e-12);
  };
  return Complex(part(false), part(true)) / M_PI;
}

}  // namespace

TEST_CASE("phi orthonormality by an independent plane integral") {
  for (Sector e : {Sector::L, Sector::R}) {
    for (auto [m, s, n, sp] : {std::array<unsigned, 4>{0, 0, 0, 0}, {2, 1, 2, 1}, {3, 2, 1, 2}, {1, 0, 0, 1},
                               {4, 3, 4, 3}, {2, 2, 0, 0}}) {
      const Complex g = plane_integral([&](Complex z) { return std::conj(phi(e, m, s, z)) * phi(e, n, sp, z); });
      const double want = (m == n && s == sp) ? 1.0 : 0.0;
      CHECK(std::abs(g - want) < 1e-9);
    }
  }
}

TEST_CASE("phi^R is the conjugate of phi^L") {
  const Complex z(0.8, -0.35);
  for (unsigned n = 0; n < 6; ++n) {
    for (unsigned s = 0; s < 6; ++s) {
      CHECK(std::abs(phi(Sector::R, n, s, z) - std::conj(phi(Sector::L, n, s, z))) < 1e-15);
    }
  }
}

TEST_CASE("normalization: closed form, series, low orders") {
  for (double t : {0.01, 0.5, 3.0, 12.0, 35.0, 50.0}) {
    CHECK(normalization(0, t) == doctest::Approx(std::exp(t)).epsilon(1e-15));
    CHECK(normalization(1, t) == doctest::Approx(std::exp(t) - t).epsilon(1e-15));
    for (unsigned s = 0; s <= 6; ++s) {
      const double nc = normalization(s, t);
      CHECK(nc == doctest::Approx(normalization_series(s, t)).epsilon(1e-10));
      if (s >= 1) CHECK(nc > 0.0);
    }
  }
  // N_2(t) = e^t - t^2/2 - t (2-t)^2 / 2, using L_1^{(1)}(t) = 2 - t.
  const double t = 1.5;
  CHECK(normalization(2, t) == doctest::Approx(std::exp(t) - t * t / 2 - t * (2 - t) * (2 - t) / 2).epsilon(1e-14));
}

TEST_CASE("kernel s = 0 and s = 1 against closed forms") {
  const Complex z(0.9, -0.4), zp(-1.2, 0.7);
  const KernelValue k0 = kernel(0, z, zp);
  CHECK(std::abs(k0.value - std::exp(std::conj(z) * zp)) < 1e-12 * std::abs(k0.value));
  CHECK(k0.est_tail >= 0.0);
  const KernelValue k1 = kernel(1, z, zp);
  CHECK(std::abs(k1.value - kernel_closed_s1(z, zp)) < 1e-10 * std::abs(k1.value));
}

TEST_CASE("kernel series equals a brute-force basis sum") {
  // e^{-(t+t')/2} K_s(z, zbar') = sum_n phi_{n;s}(z) conj(phi_{n;s}(z')) for the L sector.
  const Complex z(0.5, 0.3), zp(-0.2, 0.6);
  for (unsigned s = 0; s <= 3; ++s) {
    Complex brute = 0.0;
    for (unsigned n = 0; n < 80; ++n) brute += phi(Sector::L, n, s, z) * std::conj(phi(Sector::L, n, s, zp));
    const Complex k = kernel(s, z, zp).value * std::exp(-(std::norm(z) + std::norm(zp)) / 2);
    CHECK(std::abs(k - brute) < 1e-13);
  }
}

TEST_CASE("distributions reduce to gamma and Poisson at s = 0") {
  for (unsigned n = 0; n <= 6; ++n) {
    for (double t : {0.3, 1.0, 4.5}) {
      const boost::math::gamma_distribution<double> g(n + 1.0, 1.0);
      const boost::math::poisson_distribution<double> p(t);
      CHECK(gamma_like_pdf(n, 0, t) == doctest::Approx(boost::math::pdf(g, t)).epsilon(1e-13));
      CHECK(poisson_like_pmf(n, 0, t) == doctest::Approx(boost::math::pdf(p, n)).epsilon(1e-13));
    }
  }
}

TEST_CASE("gamma-like pdf integrates to 1 for s >= 1") {
  boost::math::quadrature::exp_sinh<double> integrator;
  for (unsigned s = 1; s <= 3; ++s) {
    for (unsigned n = 0; n <= 4; ++n) {
      CHECK(integrator.integrate([&](double t) { return gamma_like_pdf(n, s, t); }) ==
            doctest::Approx(1.0).epsilon(1e-11));
    }
  }
}

TEST_CASE("displacement elements") {
  const Complex z(0.7, -0.2);
  for (unsigned s = 0; s <= 4; ++s) {
    long double sum = 0.0L;
    for (unsigned m = 0; m < 120; ++m) sum += std::norm(displacement_element_any(m, s, z));
    CHECK(static_cast<double>(sum) == doctest::Approx(1.0).epsilon(1e-13));
  }
  // <0|D(z)|0> = e^{-|z|^2/2}
  CHECK(std::abs(displacement_element(0, 0, z)) == doctest::Approx(std::exp(-std::norm(z) / 2)));
  CHECK_THROWS_AS(displacement_element(1, 2, z), IndexError);
}
