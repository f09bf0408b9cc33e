#include "doctest.h"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

#include "hermquant/operators.hpp"
#include "hermquant/physics.hpp"

using namespace hermq;
using Mat = Eigen::MatrixXcd;

namespace {

Mat dense(const BandedMatrix<Complex>& b) {
  const auto n = static_cast<Eigen::Index>(b.dim());
  Mat m = Mat::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = b.at(i, j);
  }
  return m;
}

Mat one_plus_sP0(unsigned s, Eigen::Index n) {
  Mat m = Mat::Identity(n, n);
  m(0, 0) += static_cast<double>(s);
  return m;
}

}  // namespace

TEST_CASE("A_z entries") {
  // L: superdiagonal sqrt(s+n+1)
  const auto a = build_A_z(2, 5, Sector::L);
  CHECK(a.at(0, 1).real() == doctest::Approx(std::sqrt(3.0)));
  CHECK(a.at(3, 4).real() == doctest::Approx(std::sqrt(6.0)));
  CHECK(a.at(1, 0) == Complex(0.0));
  const auto r = build_A_z(2, 5, Sector::R);
  CHECK(r.at(1, 0).real() == doctest::Approx(std::sqrt(3.0)));
}

TEST_CASE("commutators by dense Eigen products") {
  const Eigen::Index n = 25;
  for (unsigned s = 0; s <= 6; ++s) {
    for (Sector e : {Sector::L, Sector::R}) {
      const double sign = e == Sector::L ? 1.0 : -1.0;
      const Mat az = dense(build_A_z(s, n + 1, e).values);
      const Mat azb = dense(build_A_zbar(s, n + 1, e).values);
      const Mat q = dense(build_Q(s, n + 1, e).values);
      const Mat p = dense(build_P(s, n + 1, e).values);
      const Mat c1 = (az * azb - azb * az).topLeftCorner(n, n);
      const Mat c2 = (q * p - p * q).topLeftCorner(n, n);
      CHECK((c1 - sign * one_plus_sP0(s, n)).cwiseAbs().maxCoeff() < 1e-12);
      CHECK((c2 - Complex(0, sign) * one_plus_sP0(s, n)).cwiseAbs().maxCoeff() < 1e-12);
      CHECK((q - q.adjoint()).cwiseAbs().maxCoeff() == 0.0);
      CHECK((p - p.adjoint()).cwiseAbs().maxCoeff() == 0.0);
    }
  }
}

TEST_CASE("mirror: conj of L matrices gives R matrices") {
  for (unsigned s = 0; s <= 3; ++s) {
    CHECK((dense(build_Q(s, 12, Sector::L).values).conjugate() - dense(build_Q(s, 12, Sector::R).values))
              .cwiseAbs()
              .maxCoeff() == 0.0);
    CHECK((dense(build_P(s, 12, Sector::L).values).conjugate() - dense(build_P(s, 12, Sector::R).values))
              .cwiseAbs()
              .maxCoeff() == 0.0);
  }
}

TEST_CASE("A_q2, A_H, H_hat against dense products") {
  const Eigen::Index n = 20;
  for (unsigned s = 0; s <= 5; ++s) {
    const Mat q = dense(build_Q(s, n + 2, Sector::L).values);
    const Mat p = dense(build_P(s, n + 2, Sector::L).values);
    const Mat q2 = (q * q).topLeftCorner(n, n);
    const Mat p2 = (p * p).topLeftCorner(n, n);
    Mat shift = (s + 0.5) * Mat::Identity(n, n);
    shift(0, 0) += s / 2.0;
    CHECK((dense(build_Aq2(s, n).values) - q2 - shift).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((dense(build_Ap2(s, n).values) - p2 - shift).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((dense(build_Hhat(s, n).values) - 0.5 * (p2 + q2)).cwiseAbs().maxCoeff() < 1e-12);
    const Mat ah = dense(build_AH(s, n).values);
    for (Eigen::Index k = 0; k < n; ++k) CHECK(ah(k, k).real() == static_cast<double>(k + 2 * s + 1));
  }
}

TEST_CASE("A_q2 eigenvalues: even/odd split equals Eigen") {
  const std::size_t n = 40;
  for (unsigned s = 0; s <= 3; ++s) {
    const auto a = build_Aq2(s, n, Storage::ValuesOnly).values;
    const auto ours = pentadiagonal_even_odd_eigenvalues(a);
    Eigen::SelfAdjointEigenSolver<Mat> es(dense(a));
    const Eigen::VectorXd ev = es.eigenvalues();
    REQUIRE(ours.size() == n);
    for (std::size_t k = 0; k < n; ++k) CHECK(ours[k] == doctest::Approx(ev(static_cast<Eigen::Index>(k))).epsilon(1e-11));
  }
}

TEST_CASE("ValuesOnly storage carries the same values") {
  const auto a = build_Aq2(3, 15);
  const auto b = build_Aq2(3, 15, Storage::ValuesOnly);
  CHECK(a.exact.has_value());
  CHECK_FALSE(b.exact.has_value());
  CHECK((a.values - b.values).max_abs() < 1e-14);
}
