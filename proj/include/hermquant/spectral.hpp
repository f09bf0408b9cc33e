// Spectral theory of the position operator Q in the sector s: truncated
// Jacobi matrices, monic and associated Hermite polynomials, eigenvalues,
// discrete spectral measures and the associated-Laguerre representation.
#pragma once

#include <vector>

#include "hermquant/exact.hpp"
#include "hermquant/report.hpp"
#include "hermquant/tridiag.hpp"

namespace hermq {

/// c_k^2 = (k+s)/2
Rational jacobi_c2(unsigned k, const Rational& s);

struct JacobiMatrix {
  unsigned s = 0;
  unsigned dim = 0;
  std::vector<double> offdiag;  // c_1 .. c_{dim-1}

  SymTridiag tridiag() const;
};

JacobiMatrix jacobi_matrix(unsigned n, unsigned s);

/// q_0 = 1, q_1 = lambda, q_{k+1} = lambda q_k - c_k^2 q_{k-1}.
PolyExact monic_q(unsigned n, const Rational& s);

/// H_{-1} = 0, H_0 = 1, H_{k+1} = 2 lambda H_k - 2 (s+k) H_{k-1}.
PolyExact assoc_hermite(unsigned n, const Rational& s);

/// det(lambda 1_n - Q_n), expanded along the last row of the matrix with
/// exact square-root entries: D_k = lambda D_{k-1} - Q_{k-1,k-2} Q_{k-2,k-1} D_{k-2}.
PolyExact char_poly(unsigned n, unsigned s);

/// Eigenvalues of Q_n in ascending order.
std::vector<double> eigenvalues(unsigned n, unsigned s);

/// Orthonormal p_0..p_{kmax} at x: c_{k+1} p_{k+1} = x p_k - c_k p_{k-1}, p_0 = 1.
std::vector<double> orthonormal_p(unsigned kmax, unsigned s, double x);

struct DiscreteMeasure {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Nodes = eigenvalues of Q_n, weights = squared first components of the
/// normalized eigenvectors (computed as Christoffel numbers 1/sum_k p_k^2).
DiscreteMeasure golub_welsch(unsigned s, unsigned n);

struct DivergenceReport {
  unsigned s = 0;
  std::vector<unsigned> checkpoints;
  std::vector<double> partial_sums;  // sum 1/sqrt(s+k) over the first checkpoints[i] nonzero terms
  std::vector<double> rate_ratio;    // partial_sum / (2 sqrt(N))
  bool monotone = true;
  double threshold = 0.0;
  bool exceeds_threshold = false;
};

/// Partial sums of sum_n 1/sqrt(x_n), x_n = s+n (terms with x_n = 0 skipped).
DivergenceReport selfadjointness_divergence_test(unsigned s, unsigned n_terms, double threshold = 0.0);

/// Associated Laguerre polynomials through their 3F2 sums:
///   script L (script = true):  3F2(m-n, m-alpha, c; -alpha-n, c+m+1; 1)
///   L        (script = false): 3F2(m-n, m+1-alpha, c; -alpha-n, c+m+1; 1)
/// each multiplied by (alpha+1)_n/n! (-n)_m x^m / ((c+1)_m (alpha+1)_m).
double assoc_laguerre(bool script, unsigned n, double alpha, double c, double x);
PolyExact assoc_laguerre_poly(bool script, unsigned n, const Rational& alpha, const Rational& c);

/// sigma_n = (-4)^n (1+s/2)_n
Rational laguerre_sigma(unsigned n, const Rational& s);

/// H_{2n}(lambda;s) = sigma_n script-L_n^{-1/2}(lambda^2; s/2) and
/// H_{2n+1}(lambda;s) = 2 lambda sigma_n L_n^{1/2}(lambda^2; s/2), checked at
/// sample points (relative) and coefficient-exactly.
Report assoc_hermite_laguerre_check(unsigned n, unsigned s, double tol = 1e-10);

}  // namespace hermq
