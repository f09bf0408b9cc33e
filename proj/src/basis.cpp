#include "hermquant/basis.hpp"

#include <cmath>
#include <string>

namespace hermq {

namespace {

using ComplexLD = std::complex<long double>;

// s!/(s+n)! t^n (L_s^{(n)}(t))^2, evaluated in log space.
long double weighted_square(unsigned n, unsigned s, long double t) {
  const long double lag = laguerre_ld(s, n, t);
  if (lag == 0.0L) return 0.0L;
  if (n > 0 && t == 0.0L) return 0.0L;
  long double lg = std::lgamma(s + 1.0L) - std::lgamma(s + n + 1.0L) + 2.0L * std::log(std::fabs(lag));
  if (n > 0) lg += n * std::log(t);
  return std::exp(lg);
}

}  // namespace

Complex phi(const BasisLabel& label, Complex z) {
  const unsigned n = label.n;
  const unsigned s = label.s;
  const double t = std::norm(z);
  if (n > 0 && t == 0.0) return {0.0, 0.0};
  const long double lag = laguerre_ld(s, n, t);
  if (lag == 0.0L) return {0.0, 0.0};
  long double lg = -0.5L * t + 0.5L * (std::lgamma(s + 1.0L) - std::lgamma(s + n + 1.0L)) +
                   std::log(std::fabs(lag));
  if (n > 0) lg += 0.5L * n * std::log(static_cast<long double>(t));
  long double mag = std::exp(lg);
  if ((s % 2 == 1) != (lag < 0.0L)) mag = -mag;
  // zbar^n for L, z^n for R.
  const long double th = std::arg(z);
  const long double ph = (label.epsilon == Sector::L ? -1.0L : 1.0L) * n * th;
  return {static_cast<double>(mag * std::cos(ph)), static_cast<double>(mag * std::sin(ph))};
}

double normalization(unsigned s, double t) {
  if (t < 0) throw std::domain_error("normalization: t must be >= 0");
  const long double tl = t;
  long double v = std::exp(tl);
  for (unsigned m = 0; m < s; ++m) {
    long double ratio = 1.0L;  // m!/s!
    for (unsigned j = m + 1; j <= s; ++j) ratio /= j;
    const long double lag = laguerre_ld(m, s - m, tl);
    v -= ratio * std::pow(tl, static_cast<long double>(s - m)) * lag * lag;
  }
  return static_cast<double>(v);
}

double normalization_series(unsigned s, double t, double rel_tol) {
  if (t < 0) throw std::domain_error("normalization_series: t must be >= 0");
  long double sum = 0.0L;
  int small = 0;
  const unsigned max_n = 200000;
  for (unsigned n = 0; n < max_n; ++n) {
    const long double term = weighted_square(n, s, t);
    sum += term;
    if (n > t + 2.0 * s + 4.0 && term <= rel_tol * sum) {
      if (++small == 3) return static_cast<double>(sum);
    } else {
      small = 0;
    }
    if (t == 0.0 && n >= 1) return static_cast<double>(sum);
  }
  throw NonConvergence("normalization_series did not converge at t = " + std::to_string(t));
}

KernelValue kernel(unsigned s, Complex z, Complex zprime, Sector e, double tol, unsigned max_terms) {
  const ComplexLD zl(z.real(), z.imag());
  const ComplexLD zpl(zprime.real(), zprime.imag());
  const ComplexLD w = e == Sector::L ? std::conj(zl) * zpl : zl * std::conj(zpl);
  const long double t = std::norm(zl);
  const long double tp = std::norm(zpl);
  const long double aw = std::abs(w);
  const long double argw = std::arg(w);
  const long double law = aw > 0 ? std::log(aw) : 0.0L;
  const long double lfs = std::lgamma(s + 1.0L);

  ComplexLD sum{0.0L, 0.0L};
  long double abs_sum = 0.0L;
  for (unsigned n = 0; n < max_terms; ++n) {
    if (n == 0 || aw > 0) {
      const long double lag = laguerre_ld(s, n, t) * laguerre_ld(s, n, tp);
      const long double c = std::exp(lfs - std::lgamma(s + n + 1.0L) + n * law) * lag;
      const ComplexLD term = std::polar(c, n * argw);
      sum += term;
      abs_sum += std::fabs(c);
    }
    // Remainder bound for indices > n.
    const unsigned k = n + 1;
    long double tail = 0.0L;
    if (aw > 0) {
      const long double bk = std::exp(k * law + std::lgamma(k + s + 1.0L) - lfs - 2.0L * std::lgamma(k + 1.0L) +
                                      0.5L * (t + tp));
      const long double r = aw * (k + s + 1.0L) / ((k + 1.0L) * (k + 1.0L));
      if (r >= 1.0L) continue;
      tail = bk / (1.0L - r);
    }
    if (tail <= tol * abs_sum || (tail == 0.0L)) {
      return {Complex(static_cast<double>(sum.real()), static_cast<double>(sum.imag())), k,
              static_cast<double>(tail)};
    }
  }
  throw NonConvergence("kernel series: tail bound not reached within " + std::to_string(max_terms) + " terms");
}

Complex kernel_closed_s0(Complex z, Complex zprime) { return std::exp(std::conj(z) * zprime); }

Complex kernel_closed_s1(Complex z, Complex zprime) {
  return std::exp(std::conj(z) * zprime) * (1.0 - std::norm(z - zprime)) - z * std::conj(zprime);
}

QuadratureRule reproduce_rule() { return gauss_laguerre_rule(80, 0.0, 64); }

Complex reproduce(unsigned s, Complex z, const std::function<Complex(Complex)>& f, const QuadratureRule& rule,
                  Sector e) {
  const double t = std::norm(z);
  return integrate_plane(rule, [&](Complex zp, double u, double) {
    const Complex k = kernel(s, z, zp, e).value;
    return std::exp(0.5 * (u - t)) * k * f(zp);
  });
}

Complex displacement_element(unsigned m, unsigned s, Complex z) {
  if (m < s) {
    throw IndexError("displacement_element: m = " + std::to_string(m) + " < s = " + std::to_string(s));
  }
  const Complex v = phi(Sector::R, m - s, s, z);
  return s % 2 ? -v : v;
}

Complex displacement_element_any(unsigned m, unsigned s, Complex z) {
  if (m >= s) return displacement_element(m, s, z);
  const Complex v = phi(Sector::L, s - m, m, -z);
  return m % 2 ? -v : v;
}

double gamma_like_pdf(unsigned n, unsigned s, double t) {
  if (t < 0) throw std::domain_error("gamma_like_pdf: t must be >= 0");
  const long double w = weighted_square(n, s, t);
  return static_cast<double>(w * std::exp(-static_cast<long double>(t)));
}

double poisson_like_pmf(unsigned n, unsigned s, double t) {
  if (t < 0) throw std::domain_error("poisson_like_pmf: t must be >= 0");
  return static_cast<double>(weighted_square(n, s, t) / normalization(s, t));
}

}  // namespace hermq
