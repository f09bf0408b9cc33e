// Special functions: Pochhammer symbols, generalized Laguerre polynomials,
// terminating 3F2 sums and the complex Hermite polynomials h^{r,s}(z, zbar).
#pragma once

#include <complex>

#include "hermquant/errors.hpp"
#include "hermquant/exact.hpp"

namespace hermq {

using Complex = std::complex<double>;

/// (a)_k = a (a+1) ... (a+k-1); (a)_0 = 1.
double pochhammer(double a, unsigned k);
Rational pochhammer(const Rational& a, unsigned k);

/// log|(a)_k| and the sign of (a)_k, for magnitudes beyond double range.
/// Returns sign 0 when the product vanishes.
double log_abs_pochhammer(double a, unsigned k, int* sign);

/// log(n!)
double log_factorial(unsigned n);

/// Binomial C(x, k) for real x and integer k >= 0.
double binomial(double x, unsigned k);

/// L_s^{(alpha)}(x).  Explicit alternating sum (extended precision) for
/// s <= 20, three-term recurrence above.
double laguerre(unsigned s, double alpha, double x);
long double laguerre_ld(unsigned s, long double alpha, long double x);

/// Exact coefficients of L_s^{(alpha)}.
PolyExact laguerre_poly(unsigned s, const Rational& alpha);

/// Terminating 3F2(-k, a2, a3; b1, b2; 1) for a1 = -k.  The sum stops early
/// when a numerator factor reaches zero; a denominator factor reaching zero
/// first raises PoleError.
double hyp3f2_terminating(int a1, double a2, double a3, double b1, double b2);
Rational hyp3f2_terminating(int a1, const Rational& a2, const Rational& a3, const Rational& b1,
                            const Rational& b2);

/// h^{r,s}(z, zbar) by its defining double sum
///   sum_k (-1)^k / k! * r! s! / ((r-k)! (s-k)!) * z^{s-k} zbar^{r-k}.
Complex complex_hermite(unsigned r, unsigned s, Complex z);

/// h^{s+n,s}(z, zbar) = (-1)^s s! zbar^n L_s^{(n)}(|z|^2).
Complex complex_hermite_laguerre_form(unsigned s, unsigned n, Complex z);

}  // namespace hermq
