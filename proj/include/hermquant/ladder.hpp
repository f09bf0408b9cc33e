// Ladder algebra on the index space of the decomposition
//   L^2(C) = (+)_s ( K^L_{*s} (+) G_s (+) K^R_{*s} ).
// phi^L_{n;s} with n >= 1 is (Lstar, n, s), phi^R_{n;s} with n >= 1 is
// (Rstar, n, s) and the common vector phi^L_{0;s} = phi^R_{0;s} is (G, s).
#pragma once

#include <functional>
#include <map>
#include <string>

#include "hermquant/banded.hpp"
#include "hermquant/basis.hpp"
#include "hermquant/report.hpp"

namespace hermq {

struct SectorIndex {
  enum class Kind { Lstar, G, Rstar };
  Kind kind = Kind::G;
  unsigned n = 0;  // 0 for G, >= 1 otherwise
  unsigned s = 0;

  static SectorIndex lstar(unsigned n, unsigned s);
  static SectorIndex rstar(unsigned n, unsigned s);
  static SectorIndex ground(unsigned s);
  /// phi^e_{n;s}, mapped to G when n = 0.
  static SectorIndex basis(Sector e, unsigned n, unsigned s);

  std::string str() const;
  friend bool operator<(const SectorIndex& a, const SectorIndex& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.s != b.s) return a.s < b.s;
    return a.n < b.n;
  }
  friend bool operator==(const SectorIndex& a, const SectorIndex& b) {
    return a.kind == b.kind && a.n == b.n && a.s == b.s;
  }
};

/// Image of a basis vector: distinct indices with exact coefficients.
class WeightedIndexSum {
 public:
  WeightedIndexSum() = default;
  WeightedIndexSum(const SectorIndex& idx, const Surd& c = Surd(1));  // NOLINT

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::map<SectorIndex, Surd>& terms() const { return terms_; }
  Surd coeff(const SectorIndex& idx) const;

  void add(const SectorIndex& idx, const Surd& c);
  WeightedIndexSum& operator+=(const WeightedIndexSum& o);
  WeightedIndexSum& operator-=(const WeightedIndexSum& o);
  friend WeightedIndexSum operator+(WeightedIndexSum a, const WeightedIndexSum& b) { return a += b; }
  friend WeightedIndexSum operator-(WeightedIndexSum a, const WeightedIndexSum& b) { return a -= b; }
  friend WeightedIndexSum operator*(const Surd& c, const WeightedIndexSum& v);
  friend bool operator==(const WeightedIndexSum& a, const WeightedIndexSum& b) { return a.terms_ == b.terms_; }

  /// Largest |coefficient| (0 for the empty sum).
  double max_abs() const;
  std::string str() const;

 private:
  std::map<SectorIndex, Surd> terms_;
};

enum class Ladder { AL, ALdag, AR, ARdag };
const char* ladder_name(Ladder which);

WeightedIndexSum ladder_apply(Ladder which, const SectorIndex& idx);

/// Linear operator on index space, defined by its action on basis vectors.
class IndexOp {
 public:
  using Action = std::function<WeightedIndexSum(const SectorIndex&)>;

  IndexOp() = default;
  explicit IndexOp(Action f) : f_(std::move(f)) {}

  static IndexOp identity();
  static IndexOp ladder(Ladder which);
  static IndexOp mirror();    // J: L <-> R, fixes G
  static IndexOp number_L();  // A^{L dag} A^L
  static IndexOp number_R();  // A^{R dag} A^R
  static IndexOp scalar(const Surd& c);

  WeightedIndexSum operator()(const SectorIndex& idx) const { return f_(idx); }
  WeightedIndexSum operator()(const WeightedIndexSum& v) const;

  /// (A * B) x = A (B x)
  friend IndexOp operator*(const IndexOp& a, const IndexOp& b);
  friend IndexOp operator+(const IndexOp& a, const IndexOp& b);
  friend IndexOp operator-(const IndexOp& a, const IndexOp& b);

 private:
  Action f_;
};

IndexOp commutator(const IndexOp& a, const IndexOp& b);

/// All indices with n <= n_max and s <= s_max (each G_s once).
std::vector<SectorIndex> index_grid(unsigned n_max, unsigned s_max);

/// Matrix <e_j | A | e_k> of an index operator restricted to the span of
/// phi^e_{k;s}, k < n.
BandedMatrix<Surd> sector_matrix(const IndexOp& op, Sector e, unsigned s, std::size_t n);

/// Canonical and mixed commutators, number operators, mirror symmetry and the
/// ground-state ladders, all with exact coefficients.
Report verify_commutators_full(unsigned n_max, unsigned s_max);

/// Non-linear pseudo-boson triple a = A^L A^R N^L, b = A^{R dag} A^{L dag},
/// eps_n = n^3 on the ground-state ladder.
Report nlpb_verify(unsigned n_max);

/// Dual Hamiltonians h1 = N^R, x1 = J A^{L dag}, h2 = A^L A^{L dag}.
Report dual_hamiltonian_verify(unsigned n_max, unsigned s);

}  // namespace hermq
