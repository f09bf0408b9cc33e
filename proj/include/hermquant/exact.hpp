// Exact arithmetic: big integers, rationals, Gaussian-rational surds and
// polynomials with rational coefficients.
//
// Matrix entries of the ladder and position operators are square roots of
// half-integers, so every algebraic identity between them (commutators,
// squares, products of ladders) closes over finite sums  sum_m q_m sqrt(m)
// with square-free radicands m.  Surd keeps those sums in canonical form so
// that equality is decided exactly.
#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hermq {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(unsigned n);
Rational rational(long long num, long long den = 1);
std::string to_string(const Rational& q);
double to_double(const Rational& q);

/// Gaussian rational re + i im.
struct GaussRational {
  Rational re;
  Rational im;

  bool is_zero() const { return re == 0 && im == 0; }
  GaussRational conj() const { return {re, -im}; }
  friend GaussRational operator+(const GaussRational& a, const GaussRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussRational operator-(const GaussRational& a, const GaussRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussRational operator*(const GaussRational& a, const GaussRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

/// Finite sum  sum_m c_m sqrt(m)  with square-free m >= 1 and Gaussian-rational
/// c_m != 0.  The representation is canonical, so operator== is exact equality.
class Surd {
 public:
  Surd() = default;
  Surd(long long v);  // NOLINT(google-explicit-constructor)
  Surd(const Rational& v);  // NOLINT(google-explicit-constructor)
  Surd(const GaussRational& v);  // NOLINT(google-explicit-constructor)

  /// sqrt(q) for q >= 0.  Radicand numerator*denominator must fit in 63 bits.
  static Surd sqrt(const Rational& q);
  static Surd imaginary_unit();

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  /// Value when is_rational() and the imaginary part vanishes; throws otherwise.
  Rational as_rational() const;
  Surd conj() const;
  /// Multiplicative inverse of a single-term surd.
  Surd inverse() const;

  std::complex<double> to_complex() const;
  std::string str() const;

  Surd& operator+=(const Surd& o);
  Surd& operator-=(const Surd& o);
  Surd& operator*=(const Surd& o);
  friend Surd operator+(Surd a, const Surd& b) { return a += b; }
  friend Surd operator-(Surd a, const Surd& b) { return a -= b; }
  friend Surd operator*(Surd a, const Surd& b) { return a *= b; }
  Surd operator-() const;
  friend bool operator==(const Surd& a, const Surd& b) { return a.terms_ == b.terms_; }

  const std::map<BigInt, GaussRational>& terms() const { return terms_; }

 private:
  void add_term(const BigInt& radicand, const GaussRational& c);
  std::map<BigInt, GaussRational> terms_;
};

inline Surd conj_value(const Surd& v) { return v.conj(); }
inline std::complex<double> conj_value(const std::complex<double>& v) { return std::conj(v); }
inline double abs_value(const Surd& v) { return std::abs(v.to_complex()); }
inline double abs_value(const std::complex<double>& v) { return std::abs(v); }

/// Polynomial in one variable with exact rational coefficients, ascending
/// degree.  Trailing zero coefficients are never stored, so the zero
/// polynomial has an empty coefficient list.
class PolyExact {
 public:
  PolyExact() = default;
  explicit PolyExact(std::vector<Rational> coeffs);
  static PolyExact constant(const Rational& c);
  static PolyExact monomial(unsigned degree, const Rational& c = 1);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(unsigned k) const;
  Rational leading() const;
  bool is_monic() const;
  bool has_integer_coeffs() const;

  /// Horner evaluation; switches to compensated Horner above degree 15.
  double operator()(double x) const;
  Rational operator()(const Rational& x) const;

  /// p(x) -> p(x^2).
  PolyExact compose_square() const;

  PolyExact& operator+=(const PolyExact& o);
  PolyExact& operator-=(const PolyExact& o);
  friend PolyExact operator+(PolyExact a, const PolyExact& b) { return a += b; }
  friend PolyExact operator-(PolyExact a, const PolyExact& b) { return a -= b; }
  friend PolyExact operator*(const PolyExact& a, const PolyExact& b);
  friend PolyExact operator*(const Rational& c, const PolyExact& p);
  /// Multiply by the variable.
  PolyExact shifted() const;
  friend bool operator==(const PolyExact& a, const PolyExact& b) { return a.coeffs_ == b.coeffs_; }

  std::vector<std::string> coeff_strings() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Compensated Horner scheme (error-free transformations); relative error
/// about u + cond * u^2.
double compensated_horner(const std::vector<double>& coeffs, double x);

}  // namespace hermq
