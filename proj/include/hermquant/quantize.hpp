// Coherent-state quantization f -> A_f in the sector (epsilon, s):
//   [A_f]_{n n'} = int d^2z/pi f(z) conj(phi_n(z)) phi_{n'}(z),
// closed-form matrix elements for monomials z^a zbar^b, the quadrature
// evaluation of the same integral, lower symbols and Laguerre integrals.
#pragma once

#include <functional>
#include <optional>
#include <variant>

#include "hermquant/operators.hpp"
#include "hermquant/quadrature.hpp"

namespace hermq {

struct Monomial {
  unsigned a = 0;  // power of z
  unsigned b = 0;  // power of zbar
};

/// f given on polar coordinates u = |z|^2, theta = arg z.  The hints bound
/// the largest angular frequency and the polynomial degree in u of f.
struct Sampled {
  std::function<Complex(double u, double theta)> f;
  std::optional<unsigned> max_frequency;
  std::optional<unsigned> radial_degree;
};

using PhaseSpaceFunction = std::variant<Monomial, Sampled>;

/// e^{+i k theta} for L, e^{-i k theta} for R: the angular factor of
/// conj(phi_n) phi_{n'} with k = n - n'.
Complex angular_factor(Sector e, int k, double theta);

/// (epsilon(b-a)) : the only diagonal offset n - n' carrying entries.
int monomial_band(unsigned a, unsigned b, Sector e);

/// Exact closed-form element [A_{z^a zbar^b; s}]_{n n'} (finite-sum form).
Surd monomial_element(unsigned a, unsigned b, unsigned s, Sector e, unsigned n, unsigned np);

/// Same element through the 3F2 form; requires a_{-epsilon} >= s.
Surd monomial_element_3f2(unsigned a, unsigned b, unsigned s, Sector e, unsigned n, unsigned np);

/// N x N matrix of the quantized monomial with exact entries.  IndexError if
/// the band n - n' = epsilon(b-a) lies outside the matrix.
TruncatedOperator quantize_monomial_closed(unsigned a, unsigned b, unsigned s, Sector e, std::size_t n);

/// Default plane rule exact for f on the N x N block: HintViolation when a
/// Sampled f lacks hints.
QuadratureRule quantization_rule(const PhaseSpaceFunction& f, unsigned s, std::size_t n);

/// Matrix elements by radial Gauss-Laguerre x uniform angular quadrature.
/// Throws HintViolation if f is Sampled without hints, or if the rule is too
/// small for the hints.
TruncatedOperator quantize_numeric(const PhaseSpaceFunction& f, unsigned s, Sector e, std::size_t n,
                                   const QuadratureRule& rule);

struct NumericQuantization {
  TruncatedOperator op;
  double error_estimate = 0.0;  // max entry change against a refined rule
};

/// Hint-free variant: compares the given rule with a refined one.
NumericQuantization quantize_numeric_estimated(const PhaseSpaceFunction& f, unsigned s, Sector e, std::size_t n,
                                               const QuadratureRule& rule);

/// e^{-t} N_s(t) = 1 - sum_{m<s} |<m|D(z)|s>|^2, stable for large t.
double scaled_normalization(unsigned s, double t);

/// Coefficients conj(phi^e_{n;s}(z)) / sqrt(e^{-|z|^2} N_s(|z|^2)), n < dim,
/// of the coherent state |z; s, e>.  Evaluated in log space.
std::vector<Complex> cs_coefficients(Complex z, unsigned s, Sector e, std::size_t dim);

/// Smallest dimension whose coefficient tail 1 - sum |c_n|^2 is below tol.
std::size_t cs_dimension(Complex z, unsigned s, double tol = 1e-14);

/// <z; s, e | A | z; s, e>.  TailError if the coherent-state tail beyond the
/// dimension of A exceeds tol.
Complex lower_symbol(const TruncatedOperator& a, Complex z, unsigned s, Sector e, double tol = 1e-14);
Complex lower_symbol(const BandedMatrix<Complex>& a, Complex z, unsigned s, Sector e, double tol = 1e-14);

/// int_0^inf x^lambda e^{-x} L_r^{(alpha)}(x) L_s^{(beta)}(x) dx from
///   (1+alpha)_r (beta-lambda)_s Gamma(lambda+1)/(r! s!)
///     3F2(-r, lambda+1, lambda+1-beta; alpha+1, lambda+1-beta-s; 1),
/// with the factor (beta-lambda)_s folded into the sum so that removable
/// poles (lambda+1-beta-s a nonpositive integer) cancel.
double laguerre_integral(double lambda, double alpha, double beta, unsigned r, unsigned s);

/// The same closed form evaluated literally through hyp3f2_terminating;
/// raises PoleError at removable singularities.
double laguerre_integral_raw(double lambda, double alpha, double beta, unsigned r, unsigned s);

/// Symmetric form (1+beta)_s (alpha-lambda)_r Gamma(lambda+1)/(r! s!)
///   3F2(-s, lambda+1, lambda+1-alpha; beta+1, lambda+1-alpha-r; 1).
double laguerre_integral_second(double lambda, double alpha, double beta, unsigned r, unsigned s);

/// Generalized Gauss-Laguerre evaluation of the same integral (exact for
/// the polynomial integrand).
double laguerre_integral_quadrature(double lambda, double alpha, double beta, unsigned r, unsigned s);

struct LaguerreIntegralCheck {
  double first_form = 0.0;
  double second_form = 0.0;
  double quadrature = 0.0;
  double max_rel_diff = 0.0;
};

LaguerreIntegralCheck laguerre_integral_check(double lambda, double alpha, double beta, unsigned r, unsigned s);

}  // namespace hermq
