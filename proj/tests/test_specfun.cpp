#include "doctest.h"

#include <boost/math/special_functions/binomial.hpp>
#include <boost/math/special_functions/factorials.hpp>
#include <boost/math/special_functions/laguerre.hpp>

#include <cmath>
#include <random>

#include "hermquant/errors.hpp"
#include "hermquant/specfun.hpp"

using namespace hermq;

TEST_CASE("laguerre matches Boost.Math associated Laguerre") {
  for (unsigned n = 0; n <= 15; ++n) {
    for (unsigned m = 0; m <= 6; ++m) {
      for (double x : {0.0, 0.3, 1.7, 4.0, 9.5}) {
        const double want = boost::math::laguerre(n, m, x);
        CHECK(laguerre(n, m, x) == doctest::Approx(want).epsilon(1e-12).scale(1.0));
      }
    }
  }
}

TEST_CASE("laguerre at hand-derived points") {
  // L_2(t) = 1 - 2t + t^2/2
  CHECK(laguerre(2, 0, 2.0) == doctest::Approx(-1.0));
  // L_1^{(a)}(x) = 1 + a - x
  CHECK(laguerre(1, 2.5, 0.5) == doctest::Approx(3.0));
  CHECK(laguerre(0, 7, 123.0) == 1.0);
}

TEST_CASE("pochhammer and binomial match Boost.Math") {
  for (unsigned k = 0; k <= 12; ++k) {
    for (double a : {0.5, 1.0, 2.25, 7.0}) {
      CHECK(pochhammer(a, k) == doctest::Approx(boost::math::rising_factorial(a, k)).epsilon(1e-14));
    }
    CHECK(binomial(12.0, k) == doctest::Approx(boost::math::binomial_coefficient<double>(12, k)).epsilon(1e-14));
  }
  CHECK(pochhammer(-3.0, 4) == 0.0);
  CHECK(pochhammer(rational(1, 2), 3) == rational(15, 8));
}

TEST_CASE("complex Hermite values") {
  // h^{2,2}(1+i) = 2! L_2(2) = -2
  const Complex v = complex_hermite(2, 2, {1.0, 1.0});
  CHECK(v.real() == doctest::Approx(-2.0));
  CHECK(v.imag() == doctest::Approx(0.0));
  // h^{r,0} = zbar^r, h^{1,1} = |z|^2 - 1
  const Complex z(0.4, -1.3);
  const Complex h30 = complex_hermite(3, 0, z);
  const Complex want30 = std::pow(std::conj(z), 3);
  CHECK(h30.real() == doctest::Approx(want30.real()));
  CHECK(h30.imag() == doctest::Approx(want30.imag()));
  CHECK(complex_hermite(1, 1, z).real() == doctest::Approx(std::norm(z) - 1.0));
}

TEST_CASE("complex Hermite: both forms and conjugate symmetry") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.7, 1.7);
  for (int i = 0; i < 30; ++i) {
    const Complex z(u(rng), u(rng));
    for (unsigned s = 0; s <= 12; ++s) {
      for (unsigned n = 0; n <= 12; ++n) {
        const Complex a = complex_hermite(s + n, s, z);
        const Complex b = complex_hermite_laguerre_form(s, n, z);
        const Complex c = std::conj(complex_hermite(s, s + n, z));
        const double scale = std::max(std::abs(a), 1e-300);
        CHECK(std::abs(a - b) / scale < 1e-12);
        CHECK(std::abs(a - c) / scale < 1e-12);
      }
    }
  }
}

TEST_CASE("complex Hermite by finite differences of the generating derivative") {
  // h^{r+1,s} = zbar h^{r,s} - d/dz h^{r,s}; check with a central difference.
  const Complex z(0.6, 0.2);
  const double hstep = 1e-5;
  for (unsigned r = 0; r <= 5; ++r) {
    for (unsigned s = 0; s <= 5; ++s) {
      // d/dz = (d/dx - i d/dy)/2
      const Complex dx = (complex_hermite(r, s, z + hstep) - complex_hermite(r, s, z - hstep)) / (2 * hstep);
      const Complex dy =
          (complex_hermite(r, s, z + Complex(0, hstep)) - complex_hermite(r, s, z - Complex(0, hstep))) / (2 * hstep);
      const Complex dz = 0.5 * (dx - Complex(0, 1) * dy);
      const Complex want = std::conj(z) * complex_hermite(r, s, z) - dz;
      const Complex got = complex_hermite(r + 1, s, z);
      CHECK(std::abs(got - want) < 1e-6 * std::max(1.0, std::abs(want)));
    }
  }
}

TEST_CASE("terminating 3F2 against a brute-force Rational sum") {
  auto brute = [](int a1, Rational a2, Rational a3, Rational b1, Rational b2) {
    Rational sum = 0;
    for (int j = 0; j <= -a1; ++j) {
      Rational term = 1;
      for (int i = 0; i < j; ++i) term *= Rational(a1 + i) * (a2 + i) * (a3 + i) / ((b1 + i) * (b2 + i) * (i + 1));
      sum += term;
    }
    return sum;
  };
  CHECK(hyp3f2_terminating(-3, rational(1, 2), rational(2), rational(3, 2), rational(5)) ==
        brute(-3, rational(1, 2), rational(2), rational(3, 2), rational(5)));
  CHECK(hyp3f2_terminating(-4, rational(7, 3), rational(-1, 2), rational(2), rational(9, 4)) ==
        brute(-4, rational(7, 3), rational(-1, 2), rational(2), rational(9, 4)));
  CHECK(hyp3f2_terminating(-2, 1.5, 2.0, 3.0, 4.0) == doctest::Approx(to_double(
                                                         brute(-2, rational(3, 2), rational(2), rational(3), rational(4)))));
  // Saalschutz: 3F2(-n, a, b; c, 1+a+b-c-n; 1) = (c-a)_n (c-b)_n / ((c)_n (c-a-b)_n)
  const Rational a = rational(1, 3), b = rational(5, 2), c = rational(7, 4);
  const unsigned n = 5;
  const Rational want = pochhammer(c - a, n) * pochhammer(c - b, n) / (pochhammer(c, n) * pochhammer(c - a - b, n));
  CHECK(hyp3f2_terminating(-static_cast<int>(n), a, b, c, 1 + a + b - c - n) == want);
}

TEST_CASE("3F2 with a vanishing lower parameter raises PoleError") {
  CHECK_THROWS_AS(hyp3f2_terminating(-3, 1.0, 1.0, -1.0, 2.0), PoleError);
}

TEST_CASE("laguerre_poly coefficients") {
  // L_2^{(1)}(x) = 3 - 3x + x^2/2
  const PolyExact p = laguerre_poly(2, rational(1));
  REQUIRE(p.degree() == 2);
  CHECK(p.coeff(0) == 3);
  CHECK(p.coeff(1) == -3);
  CHECK(p.coeff(2) == rational(1, 2));
}
