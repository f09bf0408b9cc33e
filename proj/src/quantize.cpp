#include "hermquant/quantize.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hermq {

namespace {

using ComplexLD = std::complex<long double>;

unsigned a_eps(unsigned a, unsigned b, Sector e) { return e == Sector::L ? a : b; }
unsigned a_meps(unsigned a, unsigned b, Sector e) { return e == Sector::L ? b : a; }

Rational fact(unsigned n) { return Rational(factorial(n)); }

// sqrt((n+s)!/(n'+s)!)
Surd factorial_ratio_root(unsigned n, unsigned np, unsigned s) {
  return Surd::sqrt(fact(n + s) / fact(np + s));
}

long double lfact(long double n) { return std::lgamma(n + 1.0L); }

}  // namespace

Complex angular_factor(Sector e, int k, double theta) {
  const double ph = (e == Sector::L ? 1.0 : -1.0) * k * theta;
  return {std::cos(ph), std::sin(ph)};
}

int monomial_band(unsigned a, unsigned b, Sector e) {
  const int d = static_cast<int>(b) - static_cast<int>(a);
  return e == Sector::L ? d : -d;
}

Surd monomial_element(unsigned a, unsigned b, unsigned s, Sector e, unsigned n, unsigned np) {
  if (static_cast<int>(n) - static_cast<int>(np) != monomial_band(a, b, e)) return {};
  const unsigned ae = a_eps(a, b, e);
  const unsigned am = a_meps(a, b, e);
  // Lower limit sup(0, s - a_{-eps}).
  const unsigned m0 = s > am ? s - am : 0;
  Rational sum = 0;
  for (unsigned m = m0; m <= s; ++m) {
    Rational t = fact(n + ae + m) * fact(am + m) / (fact(m) * fact(s - m) * fact(m + n) * fact(am + m - s));
    if (m % 2) t = -t;
    sum += t;
  }
  if (s % 2) sum = -sum;
  return factorial_ratio_root(n, np, s) * Surd(sum);
}

Surd monomial_element_3f2(unsigned a, unsigned b, unsigned s, Sector e, unsigned n, unsigned np) {
  if (static_cast<int>(n) - static_cast<int>(np) != monomial_band(a, b, e)) return {};
  const unsigned ae = a_eps(a, b, e);
  const unsigned am = a_meps(a, b, e);
  if (am < s) throw std::domain_error("3F2 form of the monomial element needs a_{-eps} >= s");
  Rational pre = fact(am) * fact(n + ae) / (fact(n) * fact(s) * fact(am - s));
  if (s % 2) pre = -pre;
  const Rational f = hyp3f2_terminating(-static_cast<int>(s), Rational(n + ae + 1), Rational(am + 1), Rational(n + 1),
                                        Rational(am - s + 1));
  return factorial_ratio_root(n, np, s) * Surd(pre * f);
}

TruncatedOperator quantize_monomial_closed(unsigned a, unsigned b, unsigned s, Sector e, std::size_t n) {
  if (n == 0) throw std::invalid_argument("quantize_monomial_closed: N must be >= 1");
  const int band = monomial_band(a, b, e);
  if (static_cast<std::size_t>(std::abs(band)) >= n) {
    throw IndexError("quantize_monomial_closed: band " + std::to_string(band) + " outside " + std::to_string(n) +
                     "x" + std::to_string(n) + " matrix");
  }
  BandedMatrix<Surd> m(n);
  for (std::size_t i = 0; i < n; ++i) {
    const long j = static_cast<long>(i) - band;
    if (j < 0 || j >= static_cast<long>(n)) continue;
    m.set(i, static_cast<std::size_t>(j), monomial_element(a, b, s, e, static_cast<unsigned>(i), static_cast<unsigned>(j)));
  }
  return from_exact("A_{z^" + std::to_string(a) + " zbar^" + std::to_string(b) + "}", s, e, std::move(m));
}

// ---------------------------------------------------------------------------

namespace {

struct Hints {
  unsigned max_frequency = 0;
  unsigned radial_degree = 0;  // ceil of the degree in u
};

Hints hints_of(const PhaseSpaceFunction& f) {
  if (const auto* mono = std::get_if<Monomial>(&f)) {
    return {static_cast<unsigned>(std::abs(static_cast<int>(mono->a) - static_cast<int>(mono->b))),
            (mono->a + mono->b + 1) / 2};
  }
  const auto& smp = std::get<Sampled>(f);
  if (!smp.max_frequency || !smp.radial_degree) {
    throw HintViolation("sampled phase-space function has no degree hints; request an error estimate instead");
  }
  return {*smp.max_frequency, *smp.radial_degree};
}

// Total polynomial degree in u of the integrand on the N x N block and the
// largest angular frequency.
void requirements(const Hints& h, unsigned s, std::size_t n, unsigned& degree, unsigned& freq) {
  degree = static_cast<unsigned>(n - 1) + 2 * s + h.radial_degree;
  freq = static_cast<unsigned>(n - 1) + h.max_frequency;
}

std::function<Complex(double, double)> evaluator(const PhaseSpaceFunction& f) {
  if (const auto* mono = std::get_if<Monomial>(&f)) {
    const unsigned a = mono->a;
    const unsigned b = mono->b;
    return [a, b](double u, double th) {
      const double r = std::pow(u, 0.5 * (a + b));
      const double ph = (static_cast<double>(a) - static_cast<double>(b)) * th;
      return Complex(r * std::cos(ph), r * std::sin(ph));
    };
  }
  return std::get<Sampled>(f).f;
}

BandedMatrix<Complex> integrate_elements(const std::function<Complex(double, double)>& f, unsigned s, Sector e,
                                         std::size_t n, const QuadratureRule& rule) {
  const std::size_t nr = rule.nodes.size();
  const unsigned m = rule.angular_points;
  // radial[j][k] = sqrt(s!/(k+s)!) u_j^{k/2} L_s^{(k)}(u_j), so that the
  // element is sum_j w_j radial[j][n] radial[j][n'] <f e^{+-i(n-n')theta}>.
  std::vector<std::vector<long double>> radial(nr, std::vector<long double>(n));
  for (std::size_t j = 0; j < nr; ++j) {
    const long double u = rule.nodes[j];
    for (std::size_t k = 0; k < n; ++k) {
      const long double lag = laguerre_ld(s, k, u);
      const long double lg = 0.5L * (lfact(s) - lfact(k + s)) + 0.5L * k * std::log(u);
      radial[j][k] = std::exp(lg) * lag;
    }
  }
  // ang[j][d + n - 1] = (1/M) sum_k f(u_j, theta_k) e^{+-i d theta_k}
  const std::size_t nd = 2 * n - 1;
  std::vector<std::vector<ComplexLD>> ang(nr, std::vector<ComplexLD>(nd));
  for (std::size_t j = 0; j < nr; ++j) {
    for (unsigned k = 0; k < m; ++k) {
      const double th = 2.0 * M_PI * k / m;
      const Complex fv = f(rule.nodes[j], th);
      for (std::size_t di = 0; di < nd; ++di) {
        const int d = static_cast<int>(di) - static_cast<int>(n - 1);
        const Complex v = fv * angular_factor(e, d, th);
        ang[j][di] += ComplexLD(v.real(), v.imag());
      }
    }
    for (auto& v : ang[j]) v /= static_cast<long double>(m);
  }
  BandedMatrix<Complex> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t di = i + (n - 1) - k;
      ComplexLD acc{0.0L, 0.0L};
      for (std::size_t j = 0; j < nr; ++j) acc += static_cast<long double>(rule.weights[j]) * radial[j][i] * radial[j][k] * ang[j][di];
      const Complex v(static_cast<double>(acc.real()), static_cast<double>(acc.imag()));
      if (v != Complex(0.0, 0.0)) out.set(i, k, v);
    }
  }
  return out;
}

QuadratureRule refined(const QuadratureRule& rule) {
  return gauss_laguerre_rule(static_cast<unsigned>(rule.nodes.size()) + 12, rule.alpha, 2 * rule.angular_points + 1);
}

}  // namespace

QuadratureRule quantization_rule(const PhaseSpaceFunction& f, unsigned s, std::size_t n) {
  unsigned degree = 0;
  unsigned freq = 0;
  requirements(hints_of(f), s, n, degree, freq);
  return plane_rule(degree, freq);
}

TruncatedOperator quantize_numeric(const PhaseSpaceFunction& f, unsigned s, Sector e, std::size_t n,
                                   const QuadratureRule& rule) {
  if (n == 0) throw std::invalid_argument("quantize_numeric: N must be >= 1");
  unsigned degree = 0;
  unsigned freq = 0;
  requirements(hints_of(f), s, n, degree, freq);
  if (degree > 2 * rule.nodes.size() - 1 || freq >= rule.angular_points) {
    throw HintViolation("quadrature rule too small for the degree hints (needs radial degree " +
                        std::to_string(degree) + ", angular frequency " + std::to_string(freq) + ")");
  }
  TruncatedOperator op;
  op.name = "A_f (quadrature)";
  op.s = s;
  op.epsilon = e;
  op.values = integrate_elements(evaluator(f), s, e, n, rule);
  return op;
}

NumericQuantization quantize_numeric_estimated(const PhaseSpaceFunction& f, unsigned s, Sector e, std::size_t n,
                                               const QuadratureRule& rule) {
  const auto fn = evaluator(f);
  NumericQuantization out;
  out.op.name = "A_f (quadrature)";
  out.op.s = s;
  out.op.epsilon = e;
  out.op.values = integrate_elements(fn, s, e, n, rule);
  const BandedMatrix<Complex> fine = integrate_elements(fn, s, e, n, refined(rule));
  out.error_estimate = (fine - out.op.values).max_abs();
  return out;
}

// ---------------------------------------------------------------------------

double scaled_normalization(unsigned s, double t) {
  if (t < 0) throw std::domain_error("scaled_normalization: t must be >= 0");
  long double v = 1.0L;
  if (t == 0.0) return 1.0;
  for (unsigned m = 0; m < s; ++m) {
    const long double lag = laguerre_ld(m, s - m, t);
    if (lag == 0.0L) continue;
    const long double lg =
        lfact(m) - lfact(s) + (s - m) * std::log(static_cast<long double>(t)) - t + 2.0L * std::log(std::fabs(lag));
    v -= std::exp(lg);
  }
  return static_cast<double>(v);
}

namespace {

// |c_n|^2 and the phase/sign of c_n for the coherent state at z.
struct CsTerm {
  long double weight;  // |c_n|^2
  Complex value;
};

class CsSeries {
 public:
  CsSeries(Complex z, unsigned s, Sector e) : s_(s), e_(e), t_(std::norm(z)), theta_(std::arg(z)) {
    log_norm_ = std::log(static_cast<long double>(scaled_normalization(s, t_)));
  }

  CsTerm term(std::size_t n) const {
    if (n > 0 && t_ == 0.0) return {0.0L, Complex(0.0, 0.0)};
    const long double lag = laguerre_ld(s_, n, t_);
    if (lag == 0.0L) return {0.0L, Complex(0.0, 0.0)};
    long double lg = lfact(s_) - lfact(n + s_) - t_ + 2.0L * std::log(std::fabs(lag)) - log_norm_;
    if (n > 0) lg += n * std::log(static_cast<long double>(t_));
    const long double w = std::exp(lg);
    long double amp = std::sqrt(w);
    if ((s_ % 2 == 1) != (lag < 0.0L)) amp = -amp;
    // conj(zbar^n) = z^n for L, conj(z^n) for R.
    const long double ph = (e_ == Sector::L ? 1.0L : -1.0L) * n * theta_;
    return {w, Complex(static_cast<double>(amp * std::cos(ph)), static_cast<double>(amp * std::sin(ph)))};
  }

  // Index past which the terms are decreasing and negligible.
  bool past_peak(std::size_t n) const { return n > t_ + 2.0 * s_ + 8.0; }

 private:
  unsigned s_;
  Sector e_;
  double t_;
  double theta_;
  long double log_norm_;
};

// sum_{n >= from} |c_n|^2, summed until the terms are negligible.
long double cs_tail(const CsSeries& cs, std::size_t from) {
  long double tail = 0.0L;
  for (std::size_t n = from;; ++n) {
    const long double w = cs.term(n).weight;
    tail += w;
    if (cs.past_peak(n) && w <= 1e-22L * std::max(tail, 1e-300L)) break;
    if (cs.past_peak(n) && w < 1e-300L) break;
  }
  return tail;
}

}  // namespace

std::vector<Complex> cs_coefficients(Complex z, unsigned s, Sector e, std::size_t dim) {
  const CsSeries cs(z, s, e);
  std::vector<Complex> c(dim);
  for (std::size_t n = 0; n < dim; ++n) c[n] = cs.term(n).value;
  return c;
}

std::size_t cs_dimension(Complex z, unsigned s, double tol) {
  const CsSeries cs(z, s, Sector::L);
  std::vector<long double> w;
  for (std::size_t n = 0;; ++n) {
    w.push_back(cs.term(n).weight);
    if (cs.past_peak(n) && w.back() < 1e-30L) break;
  }
  long double tail = 0.0L;
  std::size_t dim = w.size();
  for (std::size_t k = w.size(); k-- > 0;) {
    tail += w[k];
    if (tail > tol) break;
    dim = k;
  }
  return std::max<std::size_t>(dim, 1);
}

Complex lower_symbol(const BandedMatrix<Complex>& a, Complex z, unsigned s, Sector e, double tol) {
  const std::size_t n = a.dim();
  const CsSeries cs(z, s, e);
  const long double tail = cs_tail(cs, n);
  if (tail > tol) {
    throw TailError("coherent-state tail " + std::to_string(static_cast<double>(tail)) + " exceeds " +
                    std::to_string(tol) + " at dimension " + std::to_string(n));
  }
  std::vector<Complex> c(n);
  for (std::size_t k = 0; k < n; ++k) c[k] = cs.term(k).value;
  const std::vector<Complex> ac = a.apply(c);
  ComplexLD acc{0.0L, 0.0L};
  for (std::size_t k = 0; k < n; ++k) {
    const Complex v = std::conj(c[k]) * ac[k];
    acc += ComplexLD(v.real(), v.imag());
  }
  return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

Complex lower_symbol(const TruncatedOperator& a, Complex z, unsigned s, Sector e, double tol) {
  return lower_symbol(a.values, z, s, e, tol);
}

// ---------------------------------------------------------------------------

namespace {

long double poch_ld(long double a, unsigned k) {
  long double p = 1.0L;
  for (unsigned j = 0; j < k; ++j) p *= a + j;
  return p;
}

// (-1)^s (1+alpha)_r Gamma(lambda+1)/(r! s!) sum_j (-r)_j (lambda+1)_j / ((alpha+1)_j j!) R_j
long double regularized_first_form(long double lambda, long double alpha, long double beta, unsigned r, unsigned s) {
  const long double b = lambda + 1.0L - beta - s;
  long double sum = 0.0L;
  for (unsigned j = 0; j <= r; ++j) {
    const long double den = poch_ld(alpha + 1.0L, j);
    if (den == 0.0L) throw PoleError("laguerre_integral: (alpha+1)_j vanishes at j = " + std::to_string(j));
    long double rj = 0.0L;
    if (j <= s) {
      rj = poch_ld(lambda + 1.0L - beta, j) * poch_ld(b + j, s - j);
    } else {
      rj = poch_ld(lambda + 1.0L - beta + j - s, s);
    }
    sum += poch_ld(-static_cast<long double>(r), j) * poch_ld(lambda + 1.0L, j) / (den * std::tgamma(j + 1.0L)) * rj;
  }
  long double pre = poch_ld(1.0L + alpha, r) * std::tgamma(lambda + 1.0L) / (std::tgamma(r + 1.0L) * std::tgamma(s + 1.0L));
  if (s % 2) pre = -pre;
  return pre * sum;
}

}  // namespace

double laguerre_integral(double lambda, double alpha, double beta, unsigned r, unsigned s) {
  if (!(lambda > -1.0)) throw std::domain_error("laguerre_integral: needs lambda > -1");
  return static_cast<double>(regularized_first_form(lambda, alpha, beta, r, s));
}

double laguerre_integral_raw(double lambda, double alpha, double beta, unsigned r, unsigned s) {
  if (!(lambda > -1.0)) throw std::domain_error("laguerre_integral_raw: needs lambda > -1");
  const double f = hyp3f2_terminating(-static_cast<int>(r), lambda + 1.0, lambda + 1.0 - beta, alpha + 1.0,
                                      lambda + 1.0 - beta - s);
  return pochhammer(1.0 + alpha, r) * pochhammer(beta - lambda, s) * std::tgamma(lambda + 1.0) /
         (std::tgamma(r + 1.0) * std::tgamma(s + 1.0)) * f;
}

double laguerre_integral_second(double lambda, double alpha, double beta, unsigned r, unsigned s) {
  if (!(lambda > -1.0)) throw std::domain_error("laguerre_integral_second: needs lambda > -1");
  // Mirror of the first form under (alpha, r) <-> (beta, s).
  return static_cast<double>(regularized_first_form(lambda, beta, alpha, s, r));
}

double laguerre_integral_quadrature(double lambda, double alpha, double beta, unsigned r, unsigned s) {
  if (!(lambda > -1.0)) throw std::domain_error("laguerre_integral_quadrature: needs lambda > -1");
  const QuadratureRule rule = gauss_laguerre_rule((r + s) / 2 + 2, lambda);
  long double acc = 0.0L;
  for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
    acc += static_cast<long double>(rule.weights[j]) * laguerre_ld(r, alpha, rule.nodes[j]) *
           laguerre_ld(s, beta, rule.nodes[j]);
  }
  return static_cast<double>(acc);
}

LaguerreIntegralCheck laguerre_integral_check(double lambda, double alpha, double beta, unsigned r, unsigned s) {
  LaguerreIntegralCheck c;
  c.first_form = laguerre_integral(lambda, alpha, beta, r, s);
  c.second_form = laguerre_integral_second(lambda, alpha, beta, r, s);
  c.quadrature = laguerre_integral_quadrature(lambda, alpha, beta, r, s);
  const double scale = std::max({std::fabs(c.first_form), std::fabs(c.quadrature), 1.0});
  c.max_rel_diff = std::max(std::fabs(c.first_form - c.second_form), std::fabs(c.first_form - c.quadrature)) / scale;
  return c;
}

}  // namespace hermq
