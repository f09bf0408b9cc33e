// Harmonic oscillator with physical dimensions: phase-space coherent states
// |xi_{q,p}>, the CS-quantized Hamiltonian in SI units, the Compton-length
// choice and comparison with the canonical-like ansatz.
#pragma once

#include <utility>
#include <vector>

#include "hermquant/operators.hpp"

namespace hermq {

struct PhysicalParams {
  double m = 1.0;      // kg
  double omega = 1.0;  // 1/s
  double hbar = 1.0;   // J s
  double c = 1.0;      // m/s
  double ell = 1.0;    // m

  /// hbar = m = omega = c = 1, ell = 1.
  static PhysicalParams dimensionless();
  /// ell = hbar/(2 m c), half the Compton length.
  static PhysicalParams compton(double m, double omega, double hbar, double c);
  /// Electron at omega = 3e15 1/s (CODATA constants), Compton choice.
  static PhysicalParams electron_optical(double omega = 3e15);

  /// Throws std::invalid_argument unless all fields are positive and finite.
  void validate() const;
};

/// z = q/(ell sqrt2) + i p ell/(hbar sqrt2)
Complex zeta_map(const PhysicalParams& p, double q, double mom);
/// Inverse of zeta_map: (q, p).
std::pair<double, double> zeta_inverse(const PhysicalParams& p, Complex z);

/// hbar omega / (16 m c^2)
double gamma_ratio(const PhysicalParams& p);

/// hbar^2/(4 m ell^2) + m omega^2 ell^2 / 4, the factor of (2s+1) 1 + s P_0.
double internal_energy_factor(const PhysicalParams& p);
/// hbar^2/(4 m ell^2); equals m c^2 with the Compton choice.
double kinetic_internal_energy(const PhysicalParams& p);

struct PhysicalHamiltonian {
  TruncatedOperator op;            // SI energies (J) on span{e_n, n < N}
  double internal_factor = 0.0;    // hbar^2/(4 m ell^2) + m omega^2 ell^2/4
  std::vector<double> levels;      // eigenvalues of the finite section, ascending
  std::vector<double> gaps;        // consecutive differences
  double ground = 0.0;
};

/// A_H = hbar^2/(2 m ell^2) A_{p^2} + m omega^2 ell^2/2 A_{q^2}
///     = P^2/2m + m omega^2 Q^2/2 + internal_factor ((2s+1) 1 + s P_0),
/// with P = hbar/ell P_1 and Q = ell Q_1 in terms of the dimensionless ones.
PhysicalHamiltonian build_physical_AH(const PhysicalParams& p, unsigned s, std::size_t n);

/// [Q, P] with physical Q, P (sector L) on span{e_n, n < N}, evaluated at
/// dimension N+2 and cut to the leading block: i hbar (1 + s P_0).
BandedMatrix<Complex> physical_commutator(const PhysicalParams& p, unsigned s, std::size_t n);

/// Eigenvalues of a real symmetric operator whose only nonzero diagonals are
/// 0 and +/-2 (splits into even and odd tridiagonal blocks).
std::vector<double> pentadiagonal_even_odd_eigenvalues(const BandedMatrix<Complex>& a);

struct InfimumScan {
  unsigned s = 0;
  Complex z{1.0, 0.0};
  std::vector<double> sigmas;          // CS at z/sqrt(sigma)
  std::vector<std::size_t> cs_dims;    // truncation used per sigma
  std::vector<double> lower_symbols;   // <A_{q^2}>
  std::vector<double> q2_expectations; // <Q^2>
  std::vector<double> estimates;       // <A_{q^2}> - <Q^2>
  double extrapolated = 0.0;           // Richardson limit sigma -> 0
  double q2_floor = 0.0;               // inf of the spectrum of Q^2, from odd sections
  double infimum = 0.0;                // extrapolated + q2_floor

  // Independent route: smallest eigenvalue of finite sections of A_{q^2}.
  std::vector<std::size_t> section_dims;
  std::vector<double> section_minima;
  double spectral_extrapolated = 0.0;
};

/// Infimum of <psi|A_{q^2}|psi> over unit psi, from coherent states
/// concentrated at the origin.  sigmas defaults to {1, 1e-1, ..., 1e-4}.
InfimumScan infimum_scan(unsigned s, Complex z = {1.0, 0.0}, std::vector<double> sigmas = {});

struct SpectrumRow {
  unsigned s = 0;
  double ah_ground = 0.0;           // 2s+1
  double hhat_ground = 0.0;         // (s+1)/2
  double ah_first_gap = 0.0;        // 1
  double hhat_first_gap = 0.0;      // s/2+1
  double hhat_upper_gap = 0.0;      // 1
  double ground_shift = 0.0;        // ah_ground - hhat_ground
  double zero_point_cs = 0.0;       // ah_ground - inf A_{q^2}, i.e. s+1/2
  double zero_point_canonical = 0.0;  // hhat_ground - 0, i.e. (s+1)/2
  bool constant_shift = false;      // A_H - H_hat is a multiple of 1 on the section
  bool equivalent = false;          // constant shift and equal zero-point gaps
  double infimum = 0.0;             // extrapolated inf <A_{q^2}>
};

/// One row per s, from finite sections of dimension n (n >= 3).
std::vector<SpectrumRow> spectrum_compare(const std::vector<unsigned>& s_list, std::size_t n);

}  // namespace hermq
