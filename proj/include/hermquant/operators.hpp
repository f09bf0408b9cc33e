// Finite sections of the sector operators on span{|e_n; s>, n < N}:
// A_z, A_zbar, Q, P, the quantized squares and the two Hamiltonians.
#pragma once

#include <optional>
#include <string>

#include "hermquant/banded.hpp"
#include "hermquant/basis.hpp"

namespace hermq {

struct TruncatedOperator {
  std::string name;
  unsigned s = 0;
  Sector epsilon = Sector::L;
  BandedMatrix<Complex> values;
  /// Exact entries when every entry is a finite sum of Gaussian-rational
  /// multiples of square roots.
  std::optional<BandedMatrix<Surd>> exact;

  std::size_t dim() const { return values.dim(); }
  int band_low() const { return values.band_low(); }
  int band_high() const { return values.band_high(); }
  Complex at(std::size_t i, std::size_t j) const { return values.at(i, j); }

  TruncatedOperator adjoint() const;
};

/// Exact keeps Surd entries next to the floating-point values; ValuesOnly
/// skips them (large sections).
enum class Storage { Exact, ValuesOnly };

/// Builds a TruncatedOperator from exact entries.
TruncatedOperator from_exact(std::string name, unsigned s, Sector e, BandedMatrix<Surd> m);

/// L: sum sqrt(s+n+1) |e_n><e_{n+1}|  (lowering).  R: the transpose pattern
/// sum sqrt(s+n+1) |e_{n+1}><e_n|  (raising).
TruncatedOperator build_A_z(unsigned s, std::size_t n, Sector e, Storage storage = Storage::Exact);
TruncatedOperator build_A_zbar(unsigned s, std::size_t n, Sector e, Storage storage = Storage::Exact);

/// Q = (A_z + A_zbar)/sqrt2, P = -i (A_z - A_zbar)/sqrt2.  For L this is
/// P = -i sum c_n (|e_n><e_{n+1}| - h.c.), for R the sign of i flips.
TruncatedOperator build_Q(unsigned s, std::size_t n, Sector e, Storage storage = Storage::Exact);
TruncatedOperator build_P(unsigned s, std::size_t n, Sector e, Storage storage = Storage::Exact);

/// diag(n+2s+1) +/- sum c_{n+1} c_{n+2} (|e_n><e_{n+2}| + h.c.), c_n = sqrt((n+s)/2).
TruncatedOperator build_Aq2(unsigned s, std::size_t n, Storage storage = Storage::Exact);
TruncatedOperator build_Ap2(unsigned s, std::size_t n, Storage storage = Storage::Exact);
/// diag(n+2s+1)
TruncatedOperator build_AH(unsigned s, std::size_t n, Storage storage = Storage::Exact);
/// diag((s+1)/2, s+3/2, s+5/2, ...)
TruncatedOperator build_Hhat(unsigned s, std::size_t n, Storage storage = Storage::Exact);

BandedMatrix<Surd> ground_projector(std::size_t n);

/// Commutator [A, B] of exact matrices.
BandedMatrix<Surd> commutator(const BandedMatrix<Surd>& a, const BandedMatrix<Surd>& b);

}  // namespace hermq
