// Orthonormal functions phi^{L/R}_{n;s} on L^2(C, d^2z/pi), normalization
// factors N_s, reproducing kernels, displacement-operator matrix elements and
// the associated gamma-like / Poisson-like distributions.
#pragma once

#include <functional>

#include "hermquant/quadrature.hpp"
#include "hermquant/specfun.hpp"

namespace hermq {

enum class Sector { L, R };

inline const char* sector_name(Sector e) { return e == Sector::L ? "L" : "R"; }
inline Sector mirror(Sector e) { return e == Sector::L ? Sector::R : Sector::L; }

struct BasisLabel {
  Sector epsilon = Sector::L;
  unsigned n = 0;
  unsigned s = 0;
};

/// phi^L_{n;s}(z) = e^{-|z|^2/2} h^{s+n,s}(z, zbar) / sqrt(s!(s+n)!);
/// phi^R_{n;s} is its complex conjugate.  The Gaussian is folded into
/// the log-magnitude, so large |z| neither overflows nor underflows early.
Complex phi(const BasisLabel& label, Complex z);
inline Complex phi(Sector e, unsigned n, unsigned s, Complex z) { return phi(BasisLabel{e, n, s}, z); }

/// N_s(t) = e^t - sum_{m<s} (m!/s!) t^{s-m} (L_m^{(s-m)}(t))^2.
double normalization(unsigned s, double t);

/// N_s(t) = sum_n s!/(s+n)! t^n (L_s^{(n)}(t))^2, summed until the terms fall
/// below rel_tol times the partial sum (three in a row, past the peak).
double normalization_series(unsigned s, double t, double rel_tol = 1e-17);

struct KernelValue {
  Complex value;
  unsigned truncation_n = 0;  // number of series terms kept
  double est_tail = 0.0;      // rigorous bound on the discarded tail
};

/// Gaussian-stripped reproducing kernel
///   K^L_s(z, zbar') = sum_n s!/(s+n)! (zbar z')^n L_s^{(n)}(|z|^2) L_s^{(n)}(|z'|^2)
/// (for R the roles of z and zbar are exchanged).  Each term is bounded by
/// |w|^n (n+s)! / (s! n!^2) e^{(t+t')/2}, w = zbar z'; summation stops once
/// the geometric bound on the remainder is below tol times sum |terms|.
KernelValue kernel(unsigned s, Complex z, Complex zprime, Sector e = Sector::L, double tol = 1e-16,
                   unsigned max_terms = 20000);

/// Displayed closed forms for s = 0 and s = 1.
Complex kernel_closed_s0(Complex z, Complex zprime);
Complex kernel_closed_s1(Complex z, Complex zprime);

/// int d^2z'/pi K_s(z, zbar') f(z') with the full kernel
/// e^{-(|z|^2+|z'|^2)/2} K_s, evaluated with the given plane quadrature.
Complex reproduce(unsigned s, Complex z, const std::function<Complex(Complex)>& f, const QuadratureRule& rule,
                  Sector e = Sector::L);

/// Default rule for reproduce(): 80 radial nodes, 64 angles.
QuadratureRule reproduce_rule();

/// <m | D(z) | s> for m >= s: (-1)^s phi^R_{m-s;s}(z).  IndexError if m < s.
Complex displacement_element(unsigned m, unsigned s, Complex z);

/// <m | D(z) | s> for all m, using (-1)^m phi^L_{s-m;m}(-z) when m < s.
Complex displacement_element_any(unsigned m, unsigned s, Complex z);

/// [s!/(s+n)!] e^{-t} t^n (L_s^{(n)}(t))^2
double gamma_like_pdf(unsigned n, unsigned s, double t);

/// [s!/(s+n)!] t^n (L_s^{(n)}(t))^2 / N_s(t)
double poisson_like_pmf(unsigned n, unsigned s, double t);

}  // namespace hermq
