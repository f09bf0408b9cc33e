// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <boost/math/quadrature/exp_sinh.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "hermquant/basis.hpp"
#include "hermquant/ladder.hpp"
#include "hermquant/operators.hpp"
#include "hermquant/physics.hpp"
#include "hermquant/quadrature.hpp"
#include "hermquant/quantize.hpp"
#include "hermquant/specfun.hpp"
#include "hermquant/spectral.hpp"

using namespace hermq;

namespace {

struct Outcome {
  bool pass = true;
  double worst = 0.0;
  std::string witness;

  void residual(double r, double tol, const std::string& w) {
    if (!(r <= tol)) {
      if (pass) witness = w;
      pass = false;
    }
    if (!(r <= worst)) {
      worst = r;
      if (pass) witness = w;
    }
  }
  void require(bool ok, const std::string& w) { residual(ok ? 0.0 : INFINITY, 0.0, w); }
};

double rel(Complex a, Complex b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

Complex random_in_disc(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return std::polar(radius * std::sqrt(u(rng)), 2.0 * M_PI * u(rng));
}

std::string at(std::initializer_list<std::pair<const char*, double>> kv) {
  std::string out;
  char buf[64];
  for (const auto& [k, v] : kv) {
    std::snprintf(buf, sizeof buf, "%s%s=%g", out.empty() ? "" : ",", k, v);
    out += buf;
  }
  return out;
}

bool exact_zero(const BandedMatrix<Surd>& m) {
  for (const auto& [k, d] : m.diagonals()) {
    for (const auto& v : d) {
      if (!v.is_zero()) return false;
    }
  }
  return true;
}

BandedMatrix<Surd> one_plus_sP0(unsigned s, std::size_t n, const Surd& scale) {
  BandedMatrix<Surd> m(n);
  for (std::size_t k = 0; k < n; ++k) m.set(k, k, scale);
  m.add(0, 0, scale * Surd(static_cast<long long>(s)));
  return m;
}

// ---------------------------------------------------------------------------

Outcome c1_orthogonality() {
  Outcome o;
  for (unsigned s = 0; s <= 4; ++s) {
    const auto rule = plane_rule(2 * (s + 8), 8);
    for (unsigned n = 0; n <= 8; ++n) {
      for (unsigned np = 0; np <= 8; ++np) {
        const Complex g = integrate_plane(rule, [&](Complex z, double, double) {
          return complex_hermite(s + n, s, z) * std::conj(complex_hermite(s + np, s, z));
        });
        const double norm = std::tgamma(s + 1.0) * std::tgamma(s + n + 1.0);
        o.residual(std::abs(g - (n == np ? norm : 0.0)) / norm, 1e-8, at({{"s", s}, {"n", n}, {"n'", np}}));
      }
    }
  }
  return o;
}

Outcome c2_dual_representation() {
  Outcome o;
  std::mt19937_64 rng(20240917);
  for (int i = 0; i < 100; ++i) {
    const Complex z = random_in_disc(rng, 2.5);
    for (unsigned s = 0; s <= 12; ++s) {
      for (unsigned n = 0; n <= 12; ++n) {
        o.residual(rel(complex_hermite(s + n, s, z), complex_hermite_laguerre_form(s, n, z)), 1e-12,
                   at({{"re z", z.real()}, {"im z", z.imag()}, {"s", s}, {"n", n}}));
      }
    }
  }
  return o;
}

Outcome c3_normalization() {
  Outcome o;
  for (int i = 1; i <= 200; ++i) {
    const double t = 0.25 * i;  // (0, 50]
    o.residual(std::fabs(normalization(0, t) - std::exp(t)) / std::exp(t), 1e-15, at({{"N_0 t", t}}));
    o.residual(std::fabs(normalization(1, t) - (std::exp(t) - t)) / std::exp(t), 1e-15, at({{"N_1 t", t}}));
    for (unsigned s = 0; s <= 6; ++s) {
      const double nc = normalization(s, t);
      const double ns = normalization_series(s, t);
      o.residual(std::fabs(nc - ns) / std::fabs(ns), 1e-10, at({{"s", s}, {"t", t}}));
      if (s >= 1) {
        // e^t - N_s = sum_{m<s} (m!/s!) t^{s-m} L_m^{(s-m)}(t)^2, each term >= 0 and the m = 0 term > 0.
        long double deficit = 0.0L;
        for (unsigned m = 0; m < s; ++m) {
          const long double l = laguerre(m, s - m, t);
          deficit += std::exp(std::lgamma(m + 1.0L) - std::lgamma(s + 1.0L)) * std::pow(t, s - m) * l * l;
        }
        const double recon = std::fabs(nc + static_cast<double>(deficit) - std::exp(t)) / std::exp(t);
        o.require(nc > 0.0 && deficit > 0.0L && recon < 1e-12, at({{"bound s", s}, {"t", t}}));
      }
    }
  }
  return o;
}

Outcome c4_kernel() {
  Outcome o;
  std::mt19937_64 rng(4);
  for (int i = 0; i < 20; ++i) {
    const Complex z = random_in_disc(rng, 2.0);
    const Complex zp = random_in_disc(rng, 2.0);
    const std::string w = at({{"re z", z.real()}, {"im z", z.imag()}, {"re z'", zp.real()}, {"im z'", zp.imag()}});
    o.residual(rel(kernel(0, z, zp).value, std::exp(std::conj(z) * zp)), 1e-10, "s=0," + w);
    o.residual(rel(kernel(1, z, zp).value, kernel_closed_s1(z, zp)), 1e-8, "s=1," + w);
  }
  const auto rule = reproduce_rule();
  for (int i = 0; i < 4; ++i) {
    const Complex z = random_in_disc(rng, 1.5);
    for (unsigned s = 0; s <= 2; ++s) {
      auto f = [s](Complex w) {
        return Complex(0.3, -0.1) * phi(Sector::L, 0, s, w) + 2.0 * phi(Sector::L, 2, s, w) -
               Complex(0, 1) * phi(Sector::L, 5, s, w);
      };
      o.residual(std::abs(reproduce(s, z, f, rule) - f(z)), 1e-7, "reproduce," + at({{"s", s}, {"|z|", std::abs(z)}}));
    }
  }
  return o;
}

Outcome c5_commutators() {
  Outcome o;
  const std::size_t n = 20;
  for (unsigned s = 0; s <= 6; ++s) {
    for (Sector e : {Sector::L, Sector::R}) {
      const std::size_t big = n + 1;  // products are exact on the leading n x n block
      const auto az = build_A_z(s, big, e);
      const auto azb = build_A_zbar(s, big, e);
      const auto q = build_Q(s, big, e);
      const auto p = build_P(s, big, e);
      const Surd sign = e == Sector::L ? Surd(1) : Surd(-1);
      const auto c1 = commutator(*az.exact, *azb.exact).leading_block(n) - one_plus_sP0(s, n, sign);
      const auto c2 = commutator(*q.exact, *p.exact).leading_block(n) - one_plus_sP0(s, n, sign * Surd::imaginary_unit());
      const std::string w = std::string(sector_name(e)) + "," + at({{"s", s}});
      o.require(exact_zero(c1), "[A_z,A_zbar]," + w);
      o.require(exact_zero(c2), "[Q,P]," + w);
    }
  }
  return o;
}

Outcome c6_quantization() {
  Outcome o;
  const std::size_t n = 12;
  for (unsigned s = 0; s <= 3; ++s) {
    for (Sector e : {Sector::L, Sector::R}) {
      for (unsigned a = 0; a <= 4; ++a) {
        for (unsigned b = 0; a + b <= 4; ++b) {
          const auto closed = quantize_monomial_closed(a, b, s, e, n);
          const PhaseSpaceFunction f = Monomial{a, b};
          const auto num = quantize_numeric(f, s, e, n, quantization_rule(f, s, n));
          for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
              const Complex c = closed.at(i, j);
              const Complex q = num.at(i, j);
              const std::string w =
                  std::string(sector_name(e)) + "," + at({{"s", s}, {"a", a}, {"b", b}, {"i", i}, {"j", j}});
              if (c == 0.0) {
                o.residual(std::abs(q), 1e-12, "off-band," + w);  // selection rule
              } else {
                o.residual(rel(c, q), 1e-10, w);
              }
            }
          }
        }
      }
    }
  }
  return o;
}

Outcome c7_operator_identities() {
  Outcome o;
  const std::size_t n = 20;
  for (unsigned s = 0; s <= 6; ++s) {
    const std::size_t big = n + 2;
    const auto q = build_Q(s, big, Sector::L);
    const auto p = build_P(s, big, Sector::L);
    BandedMatrix<Surd> shift(n);
    for (std::size_t k = 0; k < n; ++k) shift.set(k, k, Surd(rational(2 * static_cast<long long>(s) + 1, 2)));
    shift.add(0, 0, Surd(rational(s, 2)));
    const auto q2 = (*q.exact * *q.exact).leading_block(n);
    const auto p2 = (*p.exact * *p.exact).leading_block(n);
    const auto aq2 = build_Aq2(s, n);
    const auto ah = build_AH(s, n);
    const auto hh = build_Hhat(s, n);
    const std::string w = at({{"s", s}});
    o.require(exact_zero(*aq2.exact - q2 - shift), "A_q2," + w);
    o.require(exact_zero(*ah.exact - *hh.exact - shift), "A_H," + w);
    o.require(exact_zero(*hh.exact - Surd(rational(1, 2)) * (p2 + q2)), "H_hat," + w);
    std::vector<Rational> levels;
    for (std::size_t k = 0; k < n; ++k) {
      o.require(ah.exact->at(k, k) == Surd(static_cast<long long>(k + 2 * s + 1)), "spec A_H," + w);
      levels.push_back(hh.exact->at(k, k).as_rational());
    }
    // A_H and H_hat are diagonal here, so the diagonals are the spectra.
    o.require(ah.values.band_low() == 0 && ah.values.band_high() == 0 && hh.values.band_low() == 0 &&
                  hh.values.band_high() == 0,
              "diagonal," + w);
    std::sort(levels.begin(), levels.end());
    o.require(levels[1] - levels[0] == rational(s, 2) + 1, "H_hat gap," + w);
  }
  return o;
}

Outcome c8_spectral() {
  Outcome o;
  for (unsigned s = 0; s <= 6; ++s) {
    for (unsigned n = 0; n <= 20; ++n) {
      const PolyExact q = monic_q(n, s);
      const PolyExact scaled = Rational(1, BigInt(1) << n) * assoc_hermite(n, s);
      const std::string w = at({{"s", s}, {"n", n}});
      if (n >= 1) o.require(char_poly(n, s) == q, "char_poly," + w);
      o.require(scaled == q, "2^-n H_n," + w);
    }
  }
  for (unsigned s = 0; s <= 6; ++s) {
    const auto m = golub_welsch(s, 40);
    std::vector<std::vector<double>> pk;
    for (double x : m.nodes) pk.push_back(orthonormal_p(12, s, x));
    for (unsigned k = 0; k <= 12; ++k) {
      for (unsigned l = 0; l <= 12; ++l) {
        long double g = 0.0L;
        for (std::size_t j = 0; j < m.nodes.size(); ++j) g += m.weights[j] * pk[j][k] * pk[j][l];
        o.residual(std::fabs(static_cast<double>(g) - (k == l ? 1.0 : 0.0)), 1e-11,
                   "GW," + at({{"s", s}, {"k", k}, {"l", l}}));
      }
      const PolyExact hk = assoc_hermite(k, s);
      long double norm = 0.0L;
      for (std::size_t j = 0; j < m.nodes.size(); ++j) norm += m.weights[j] * std::pow(hk(m.nodes[j]), 2);
      const double want = std::ldexp(std::exp(std::lgamma(k + s + 1.0) - std::lgamma(s + 1.0)), static_cast<int>(k));
      o.residual(std::fabs(static_cast<double>(norm) - want) / want, 1e-9, "H-norm," + at({{"s", s}, {"k", k}}));
    }
  }
  return o;
}

Outcome c9_laguerre_form() {
  Outcome o;
  for (unsigned s = 0; s <= 4; ++s) {
    for (unsigned n = 0; n <= 4; ++n) {
      const Report r = assoc_hermite_laguerre_check(n, s, 1e-10);
      for (const auto& c : r.checks) o.residual(c.max_residual, c.tolerance, c.identity + "," + c.witness);
      o.require(r.all_pass(), at({{"s", s}, {"n", n}}));
    }
  }
  return o;
}

Outcome c10_nlpb() {
  Outcome o;
  Report r = nlpb_verify(30);
  for (unsigned s = 0; s <= 4; ++s) r.append(dual_hamiltonian_verify(30, s));
  for (const auto& c : r.checks) {
    o.residual(c.max_residual, 0.0, c.identity + "," + c.witness);
    o.require(c.pass, c.identity + "," + c.witness);
  }
  return o;
}

Outcome c11_infimum() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  for (unsigned s = 0; s <= 3; ++s) {
    const InfimumScan scan = infimum_scan(s);
    o.residual(std::fabs(scan.infimum - (s + 0.5)), 1e-3, at({{"s", s}, {"infimum", scan.infimum}}));
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.require(secs < 30.0, at({{"seconds", secs}}));
  return o;
}

Outcome c12_distributions() {
  Outcome o;
  boost::math::quadrature::exp_sinh<double> integrator;
  for (unsigned s = 0; s <= 4; ++s) {
    for (unsigned n = 0; n <= 8; ++n) {
      const double total = integrator.integrate([&](double t) { return gamma_like_pdf(n, s, t); }, 1e-15);
      o.residual(std::fabs(total - 1.0), 1e-10, "pdf," + at({{"s", s}, {"n", n}}));
    }
    for (double t : {0.1, 1.0, 5.0, 20.0}) {
      long double sum = 0.0L;
      for (unsigned n = 0; n < 400; ++n) sum += poisson_like_pmf(n, s, t);
      o.residual(std::fabs(static_cast<double>(sum) - 1.0), 1e-10, "pmf," + at({{"s", s}, {"t", t}}));
    }
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"complex Hermite Gram = diag(s!(s+n)!), rel 1e-8", c1_orthogonality},
      {"double sum = Laguerre form, rel 1e-12", c2_dual_representation},
      {"N_0, N_1, closed form = series 1e-10, 0 < N_s < e^t", c3_normalization},
      {"kernel s=0 1e-10, s=1 closed form 1e-8, reproduction 1e-7", c4_kernel},
      {"[A_z,A_zbar], [Q,P] almost canonical, exact", c5_commutators},
      {"closed-form quantization = quadrature, rel 1e-10", c6_quantization},
      {"A_q2, A_H identities and spectra, exact", c7_operator_identities},
      {"char_poly = q_n = 2^-n H_n; Golub-Welsch 1e-11; H-norms 1e-9", c8_spectral},
      {"H_n via associated Laguerre forms, rel 1e-10", c9_laguerre_form},
      {"pseudo-boson and dual Hamiltonian identities, exact", c10_nlpb},
      {"inf lower symbol of A_q2 = s + 1/2 within 1e-3, < 30 s", c11_infimum},
      {"pdf integrates to 1, pmf sums to 1, 1e-10", c12_distributions},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome r;
    try {
      r = criteria[i].run();
    } catch (const std::exception& e) {
      r.pass = false;
      r.worst = INFINITY;
      r.witness = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %2zu  %-62s worst=%.3g  %.2fs%s%s\n", r.pass ? "PASS" : "FAIL", i + 1, criteria[i].name, r.worst,
                secs, r.witness.empty() ? "" : "  at ", r.witness.c_str());
    if (!r.pass) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
