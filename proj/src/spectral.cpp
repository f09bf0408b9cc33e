#include "hermquant/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "hermquant/specfun.hpp"

namespace hermq {

Rational jacobi_c2(unsigned k, const Rational& s) { return (Rational(k) + s) / 2; }

SymTridiag JacobiMatrix::tridiag() const {
  SymTridiag t;
  t.diag.assign(dim, 0.0);
  t.off = offdiag;
  return t;
}

JacobiMatrix jacobi_matrix(unsigned n, unsigned s) {
  if (n == 0) throw std::invalid_argument("jacobi_matrix: n must be >= 1");
  JacobiMatrix j;
  j.s = s;
  j.dim = n;
  j.offdiag.resize(n - 1);
  for (unsigned k = 1; k < n; ++k) j.offdiag[k - 1] = std::sqrt(0.5 * (k + s));
  return j;
}

PolyExact monic_q(unsigned n, const Rational& s) {
  PolyExact prev;  // q_{-1} = 0
  PolyExact cur = PolyExact::constant(1);
  for (unsigned k = 0; k < n; ++k) {
    PolyExact next = cur.shifted();
    if (k > 0) next -= jacobi_c2(k, s) * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

PolyExact assoc_hermite(unsigned n, const Rational& s) {
  PolyExact prev;
  PolyExact cur = PolyExact::constant(1);
  for (unsigned k = 0; k < n; ++k) {
    PolyExact next = Rational(2) * cur.shifted();
    if (k > 0) next -= (2 * (s + k)) * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

PolyExact char_poly(unsigned n, unsigned s) {
  if (n == 0) throw std::invalid_argument("char_poly: n must be >= 1");
  // Entries of lambda 1 - Q_n: lambda on the diagonal, -c_k off it.
  auto entry = [s](unsigned k) { return -Surd::sqrt(rational(static_cast<long long>(k + s), 2)); };
  PolyExact d_prev = PolyExact::constant(1);   // D_0
  PolyExact d_cur = PolyExact::monomial(1);    // D_1
  for (unsigned k = 2; k <= n; ++k) {
    // Last row of the k x k block: (..., -c_{k-1}, lambda).  The cofactor of
    // -c_{k-1} contributes -(-c_{k-1})(-c_{k-1}) D_{k-2}.
    const Surd prod = entry(k - 1) * entry(k - 1);
    PolyExact next = d_cur.shifted() - prod.as_rational() * d_prev;
    d_prev = std::move(d_cur);
    d_cur = std::move(next);
  }
  return d_cur;
}

std::vector<double> eigenvalues(unsigned n, unsigned s) { return eigenvalues(jacobi_matrix(n, s).tridiag()); }

std::vector<double> orthonormal_p(unsigned kmax, unsigned s, double x) {
  std::vector<double> p(kmax + 1);
  long double pm1 = 0.0L;
  long double p0 = 1.0L;
  long double c_prev = 0.0L;
  p[0] = 1.0;
  for (unsigned k = 0; k < kmax; ++k) {
    const long double c_next = std::sqrt(0.5L * (k + 1 + s));
    const long double p1 = (x * p0 - c_prev * pm1) / c_next;
    pm1 = p0;
    p0 = p1;
    c_prev = c_next;
    p[k + 1] = static_cast<double>(p1);
  }
  return p;
}

DiscreteMeasure golub_welsch(unsigned s, unsigned n) {
  DiscreteMeasure m;
  m.nodes = eigenvalues(n, s);
  m.weights.reserve(n);
  for (double x : m.nodes) {
    // Christoffel number 1 / sum_{k<n} p_k(x)^2 equals the squared first
    // component of the normalized eigenvector.
    const auto p = orthonormal_p(n - 1, s, x);
    long double sum = 0.0L;
    for (double v : p) sum += static_cast<long double>(v) * v;
    m.weights.push_back(static_cast<double>(1.0L / sum));
  }
  return m;
}

DivergenceReport selfadjointness_divergence_test(unsigned s, unsigned n_terms, double threshold) {
  DivergenceReport r;
  r.s = s;
  r.threshold = threshold;
  unsigned next_cp = 10;
  long double sum = 0.0L;
  double last = -1.0;
  unsigned counted = 0;
  for (unsigned n = 0; counted < n_terms; ++n) {
    const unsigned x = s + n;
    if (x == 0) continue;
    sum += 1.0L / std::sqrt(static_cast<long double>(x));
    ++counted;
    if (static_cast<double>(sum) <= last) r.monotone = false;
    last = static_cast<double>(sum);
    if (counted == next_cp || counted == n_terms) {
      r.checkpoints.push_back(counted);
      r.partial_sums.push_back(static_cast<double>(sum));
      r.rate_ratio.push_back(static_cast<double>(sum / (2.0L * std::sqrt(static_cast<long double>(counted)))));
      if (counted == next_cp) next_cp *= 10;
    }
  }
  r.exceeds_threshold = !r.partial_sums.empty() && r.partial_sums.back() > threshold;
  return r;
}

double assoc_laguerre(bool script, unsigned n, double alpha, double c, double x) {
  const double second_shift = script ? 0.0 : 1.0;
  long double sum = 0.0L;
  long double xm = 1.0L;
  for (unsigned m = 0; m <= n; ++m) {
    const double a1 = static_cast<double>(m) - n;
    const double f = hyp3f2_terminating(static_cast<int>(a1), m + second_shift - alpha, c, -alpha - n, c + m + 1);
    const long double pre = pochhammer(-static_cast<double>(n), m) /
                            (static_cast<long double>(pochhammer(c + 1, m)) * pochhammer(alpha + 1, m));
    sum += pre * xm * f;
    xm *= x;
  }
  return static_cast<double>(static_cast<long double>(pochhammer(alpha + 1, n)) /
                             std::tgamma(static_cast<long double>(n) + 1) * sum);
}

PolyExact assoc_laguerre_poly(bool script, unsigned n, const Rational& alpha, const Rational& c) {
  const Rational second_shift = script ? 0 : 1;
  std::vector<Rational> coeffs(n + 1);
  for (unsigned m = 0; m <= n; ++m) {
    const Rational f = hyp3f2_terminating(static_cast<int>(m) - static_cast<int>(n), Rational(m) + second_shift - alpha,
                                          c, -alpha - n, c + m + 1);
    coeffs[m] = pochhammer(Rational(-static_cast<int>(n)), m) / (pochhammer(c + 1, m) * pochhammer(alpha + 1, m)) * f;
  }
  const Rational pre = pochhammer(alpha + 1, n) / Rational(factorial(n));
  return pre * PolyExact(std::move(coeffs));
}

Rational laguerre_sigma(unsigned n, const Rational& s) {
  Rational p = pochhammer(1 + s / 2, n);
  for (unsigned k = 0; k < n; ++k) p *= -4;
  return p;
}

namespace {

double magnitude(const PolyExact& p, double x) {
  double sum = 0.0;
  double xk = 1.0;
  for (const auto& c : p.coeffs()) {
    sum += std::fabs(to_double(c)) * xk;
    xk *= std::fabs(x);
  }
  return sum;
}

}  // namespace

Report assoc_hermite_laguerre_check(unsigned n, unsigned s, double tol) {
  Report rep;
  const Rational rs(s);
  const Rational c = rs / 2;
  const Rational sigma = laguerre_sigma(n, rs);
  const double cd = 0.5 * s;
  const double sigma_d = to_double(sigma);

  const PolyExact h_even = assoc_hermite(2 * n, rs);
  const PolyExact h_odd = assoc_hermite(2 * n + 1, rs);
  const std::string tag = "n=" + std::to_string(n) + ",s=" + std::to_string(s);

  CheckBuilder even_pts("spectral", "H_2n = sigma_n scriptL_n^{-1/2}(lambda^2; s/2)", "sample points, relative", tol);
  CheckBuilder odd_pts("spectral", "H_2n+1 = 2 lambda sigma_n L_n^{1/2}(lambda^2; s/2)", "sample points, relative", tol);
  const unsigned points = 2 * n + 3 > 10 ? 2 * n + 3 : 10;
  for (unsigned i = 0; i < points; ++i) {
    const double lam = -2.5 + 5.0 * (i + 0.5) / points;
    const double lhs_e = h_even(lam);
    const double rhs_e = sigma_d * assoc_laguerre(true, n, -0.5, cd, lam * lam);
    const double lhs_o = h_odd(lam);
    const double rhs_o = 2.0 * lam * sigma_d * assoc_laguerre(false, n, 0.5, cd, lam * lam);
    // Relative to the size of the summands (sum |a_k| |lambda|^k), so that
    // points close to a root stay meaningful.
    const double scale_e = std::max(magnitude(h_even, lam), std::fabs(lhs_e));
    const double scale_o = std::max(magnitude(h_odd, lam), std::fabs(lhs_o));
    const std::string w = tag + ",lambda=" + std::to_string(lam);
    even_pts.observe(scale_e > 0.0 ? std::fabs(lhs_e - rhs_e) / scale_e : std::fabs(rhs_e), w);
    odd_pts.observe(scale_o > 0.0 ? std::fabs(lhs_o - rhs_o) / scale_o : std::fabs(rhs_o), w);
  }
  rep.checks.push_back(even_pts.finish());
  rep.checks.push_back(odd_pts.finish());

  CheckBuilder even_ex("spectral", "H_2n = sigma_n scriptL_n^{-1/2}(lambda^2; s/2)", "exact coefficients", 0.0);
  CheckBuilder odd_ex("spectral", "H_2n+1 = 2 lambda sigma_n L_n^{1/2}(lambda^2; s/2)", "exact coefficients", 0.0);
  const PolyExact rhs_even = sigma * assoc_laguerre_poly(true, n, rational(-1, 2), c).compose_square();
  const PolyExact rhs_odd = (2 * sigma) * assoc_laguerre_poly(false, n, rational(1, 2), c).compose_square().shifted();
  auto residual = [](const PolyExact& a, const PolyExact& b) {
    const PolyExact d = a - b;
    double r = 0.0;
    for (const auto& q : d.coeffs()) r = std::max(r, std::fabs(to_double(q)));
    if (!d.coeffs().empty() && r == 0.0) r = std::numeric_limits<double>::denorm_min();
    return r;
  };
  even_ex.observe(residual(h_even, rhs_even), tag);
  odd_ex.observe(residual(h_odd, rhs_odd), tag);
  rep.checks.push_back(even_ex.finish());
  rep.checks.push_back(odd_ex.finish());
  return rep;
}

}  // namespace hermq
