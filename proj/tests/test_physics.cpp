#include "doctest.h"

#include <Eigen/Dense>

#include <cmath>

#include "hermquant/operators.hpp"
#include "hermquant/physics.hpp"

using namespace hermq;

TEST_CASE("gamma for an electron at optical frequency") {
  const auto p = PhysicalParams::electron_optical(3e15);
  // hbar omega / (16 m c^2) with CODATA 2018 values, evaluated by hand.
  const double want = 1.054571817e-34 * 3e15 / (16.0 * 9.1093837015e-31 * 299792458.0 * 299792458.0);
  CHECK(gamma_ratio(p) == doctest::Approx(want).epsilon(1e-14));
  CHECK(gamma_ratio(p) == doctest::Approx(2.4152e-7).epsilon(1e-4));
  CHECK(gamma_ratio(PhysicalParams::electron_optical(6e15)) == doctest::Approx(2.0 * gamma_ratio(p)));
}

TEST_CASE("Compton length makes the kinetic internal energy m c^2") {
  const auto p = PhysicalParams::electron_optical();
  CHECK(p.ell == doctest::Approx(1.054571817e-34 / (2.0 * 9.1093837015e-31 * 299792458.0)));
  CHECK(kinetic_internal_energy(p) == doctest::Approx(p.m * p.c * p.c).epsilon(1e-15));
}

TEST_CASE("zeta map round trip and scaling") {
  PhysicalParams p;
  p.ell = 2.0;
  p.hbar = 0.5;
  const Complex z = zeta_map(p, 1.0, 3.0);
  CHECK(z.real() == doctest::Approx(1.0 / (2.0 * std::sqrt(2.0))));
  CHECK(z.imag() == doctest::Approx(3.0 * 2.0 / (0.5 * std::sqrt(2.0))));
  const auto [q, mom] = zeta_inverse(p, z);
  CHECK(q == doctest::Approx(1.0));
  CHECK(mom == doctest::Approx(3.0));
}

TEST_CASE("invalid physical parameters are rejected") {
  PhysicalParams p;
  p.m = -1.0;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  CHECK_THROWS_AS(PhysicalParams::compton(0.0, 1.0, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("physical A_H levels against Eigen") {
  PhysicalParams p;
  p.m = 2.0;
  p.omega = 3.0;
  p.hbar = 0.5;
  p.ell = std::sqrt(p.hbar / (p.m * p.omega));
  for (unsigned s = 0; s <= 3; ++s) {
    const std::size_t n = 24;
    const auto h = build_physical_AH(p, s, n);
    Eigen::MatrixXd m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = h.op.at(i, j).real();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
    for (std::size_t k = 0; k < n; ++k) CHECK(h.levels[k] == doctest::Approx(es.eigenvalues()(k)).epsilon(1e-12));
    // With ell^2 = hbar/(m omega) the matrix is hbar omega times the dimensionless A_H.
    for (std::size_t k = 0; k < n; ++k) CHECK(h.levels[k] == doctest::Approx(p.hbar * p.omega * (k + 2 * s + 1.0)));
  }
}

TEST_CASE("physical commutator is i hbar (1 + s P0)") {
  const auto p = PhysicalParams::electron_optical();
  for (unsigned s = 0; s <= 3; ++s) {
    const auto c = physical_commutator(p, s, 10);
    for (std::size_t k = 0; k < 10; ++k) {
      const double want = p.hbar * (k == 0 ? 1.0 + s : 1.0);
      CHECK(c.at(k, k).imag() == doctest::Approx(want).epsilon(1e-12));
      CHECK(std::abs(c.at(k, k).real()) < 1e-12 * p.hbar);
    }
  }
}

TEST_CASE("infimum scan and spectrum table") {
  for (unsigned s = 0; s <= 3; ++s) {
    const InfimumScan r = infimum_scan(s);
    CHECK(std::fabs(r.infimum - (s + 0.5)) < 1e-3);
    // Finite sections approach the same value from above.
    CHECK(r.section_minima.back() > s + 0.5);
    CHECK(std::fabs(r.spectral_extrapolated - (s + 0.5)) < 1e-3);
  }
  const auto rows = spectrum_compare({0, 1, 2}, 12);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].equivalent);
  CHECK(rows[0].constant_shift);
  for (const auto& r : rows) {
    CHECK(r.ah_ground == 2.0 * r.s + 1.0);
    CHECK(r.hhat_ground == (r.s + 1.0) / 2.0);
    CHECK(r.hhat_first_gap == r.s / 2.0 + 1.0);
    CHECK(r.ah_first_gap == 1.0);
  }
  CHECK_FALSE(rows[1].equivalent);
}
