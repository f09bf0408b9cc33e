#include "hermquant/specfun.hpp"

#include <cmath>
#include <string>

namespace hermq {

double pochhammer(double a, unsigned k) {
  long double p = 1.0L;
  for (unsigned j = 0; j < k; ++j) p *= static_cast<long double>(a) + j;
  return static_cast<double>(p);
}

Rational pochhammer(const Rational& a, unsigned k) {
  Rational p = 1;
  for (unsigned j = 0; j < k; ++j) p *= a + j;
  return p;
}

double log_abs_pochhammer(double a, unsigned k, int* sign) {
  double acc = 0.0;
  int sg = 1;
  for (unsigned j = 0; j < k; ++j) {
    const double f = a + j;
    if (f == 0.0) {
      if (sign) *sign = 0;
      return -HUGE_VAL;
    }
    if (f < 0) sg = -sg;
    acc += std::log(std::fabs(f));
  }
  if (sign) *sign = sg;
  return acc;
}

double log_factorial(unsigned n) { return std::lgamma(static_cast<double>(n) + 1.0); }

double binomial(double x, unsigned k) {
  long double p = 1.0L;
  for (unsigned j = 1; j <= k; ++j) p *= (static_cast<long double>(x) - k + j) / j;
  return static_cast<double>(p);
}

long double laguerre_ld(unsigned s, long double alpha, long double x) {
  if (s <= 20) {
    long double sum = 0.0L;
    long double xm = 1.0L;  // x^m / m!
    for (unsigned m = 0; m <= s; ++m) {
      if (m > 0) xm *= x / m;
      long double binom = 1.0L;  // C(s+alpha, s-m)
      for (unsigned j = 1; j <= s - m; ++j) binom *= (alpha + m + j) / j;
      sum += (m % 2 ? -1.0L : 1.0L) * binom * xm;
    }
    return sum;
  }
  long double prev = 1.0L;
  long double cur = 1.0L + alpha - x;
  for (unsigned k = 1; k < s; ++k) {
    const long double next = ((2.0L * k + 1.0L + alpha - x) * cur - (k + alpha) * prev) / (k + 1.0L);
    prev = cur;
    cur = next;
  }
  return cur;
}

double laguerre(unsigned s, double alpha, double x) {
  return static_cast<double>(laguerre_ld(s, alpha, x));
}

PolyExact laguerre_poly(unsigned s, const Rational& alpha) {
  std::vector<Rational> c(s + 1);
  for (unsigned m = 0; m <= s; ++m) {
    Rational binom = 1;
    for (unsigned j = 1; j <= s - m; ++j) binom *= (alpha + m + j) / Rational(j);
    Rational v = binom / Rational(factorial(m));
    c[m] = (m % 2) ? Rational(-v) : v;
  }
  return PolyExact(std::move(c));
}

double hyp3f2_terminating(int a1, double a2, double a3, double b1, double b2) {
  if (a1 > 0) throw std::invalid_argument("hyp3f2_terminating: a1 must be a nonpositive integer");
  const unsigned k = static_cast<unsigned>(-a1);
  long double term = 1.0L;
  long double sum = 1.0L;
  for (unsigned j = 1; j <= k; ++j) {
    const long double num = (static_cast<long double>(a1) + j - 1) * (static_cast<long double>(a2) + j - 1) *
                            (static_cast<long double>(a3) + j - 1);
    if (num == 0.0L) break;
    const long double d1 = static_cast<long double>(b1) + j - 1;
    const long double d2 = static_cast<long double>(b2) + j - 1;
    if (d1 == 0.0L || d2 == 0.0L) {
      throw PoleError("3F2: denominator Pochhammer vanishes at j = " + std::to_string(j));
    }
    term *= num / (d1 * d2 * j);
    sum += term;
  }
  return static_cast<double>(sum);
}

Rational hyp3f2_terminating(int a1, const Rational& a2, const Rational& a3, const Rational& b1,
                            const Rational& b2) {
  if (a1 > 0) throw std::invalid_argument("hyp3f2_terminating: a1 must be a nonpositive integer");
  const unsigned k = static_cast<unsigned>(-a1);
  Rational term = 1;
  Rational sum = 1;
  for (unsigned j = 1; j <= k; ++j) {
    const Rational num = Rational(a1 + static_cast<int>(j) - 1) * (a2 + j - 1) * (a3 + j - 1);
    if (num == 0) break;
    const Rational d1 = b1 + j - 1;
    const Rational d2 = b2 + j - 1;
    if (d1 == 0 || d2 == 0) {
      throw PoleError("3F2: denominator Pochhammer vanishes at j = " + std::to_string(j));
    }
    term *= num / (d1 * d2 * j);
    sum += term;
  }
  return sum;
}

namespace {

// Both forms of h^{r,s} cancel heavily once |z| > 2 and s, n ~ 12, so they
// are summed in binary128 (software float, no libquadmath needed).
using Quad = __float128;

struct QComplex {
  Quad re = 0;
  Quad im = 0;
};

QComplex mul(QComplex a, QComplex b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }

QComplex qpow(QComplex z, unsigned k) {
  QComplex r{1, 0};
  for (unsigned i = 0; i < k; ++i) r = mul(r, z);
  return r;
}

Complex to_complex(QComplex z) { return {static_cast<double>(z.re), static_cast<double>(z.im)}; }

Quad laguerre_quad(unsigned s, Quad alpha, Quad x) {
  Quad sum = 0;
  Quad xm = 1;  // x^m / m!
  for (unsigned m = 0; m <= s; ++m) {
    if (m > 0) xm *= x / m;
    Quad binom = 1;  // C(s+alpha, s-m)
    for (unsigned j = 1; j <= s - m; ++j) binom *= (alpha + m + j) / j;
    sum += (m % 2 ? -binom : binom) * xm;
  }
  return sum;
}

}  // namespace

Complex complex_hermite(unsigned r, unsigned s, Complex z) {
  const QComplex zq{z.real(), z.imag()};
  const QComplex zb{z.real(), -z.imag()};
  const unsigned kmax = r < s ? r : s;
  // Monomial z^{s-k} zbar^{r-k}, built from the top k downwards.
  QComplex mono = mul(qpow(zq, s - kmax), qpow(zb, r - kmax));
  QComplex sum;
  for (unsigned k = kmax + 1; k-- > 0;) {
    if (k < kmax) mono = mul(mul(mono, zq), zb);
    // r! s! / (k! (r-k)! (s-k)!) = C(r,k) s!/(s-k)!
    Quad coef = 1;
    for (unsigned j = 1; j <= k; ++j) coef *= static_cast<Quad>(r - k + j) / j;
    for (unsigned j = s - k + 1; j <= s; ++j) coef *= j;
    if (k % 2) coef = -coef;
    sum.re += coef * mono.re;
    sum.im += coef * mono.im;
  }
  return to_complex(sum);
}

Complex complex_hermite_laguerre_form(unsigned s, unsigned n, Complex z) {
  const Quad x = z.real();
  const Quad y = z.imag();
  const Quad t = x * x + y * y;
  Quad sf = 1;
  for (unsigned j = 2; j <= s; ++j) sf *= j;
  const Quad pre = (s % 2 ? -sf : sf) * laguerre_quad(s, n, t);
  const QComplex v = qpow(QComplex{x, -y}, n);
  return to_complex(QComplex{pre * v.re, pre * v.im});
}

}  // namespace hermq
