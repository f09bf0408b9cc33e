#include "hermquant/verify.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <random>
#include <sstream>
#include <vector>

#include "hermquant/basis.hpp"
#include "hermquant/ladder.hpp"
#include "hermquant/operators.hpp"
#include "hermquant/physics.hpp"
#include "hermquant/quantize.hpp"
#include "hermquant/spectral.hpp"

namespace hermq {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

std::string fmt(Complex z) { return fmt(z.real()) + (z.imag() < 0 ? "" : "+") + fmt(z.imag()) + "i"; }

std::string tag(std::initializer_list<std::pair<const char*, double>> kv) {
  std::string out;
  for (const auto& [k, v] : kv) {
    if (!out.empty()) out += ",";
    out += std::string(k) + "=" + fmt(v);
  }
  return out;
}

Complex random_in_disc(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double r = radius * std::sqrt(u(rng));
  const double th = 2.0 * M_PI * u(rng);
  return std::polar(r, th);
}

double rel(double a, double b) {
  const double scale = std::max(std::fabs(a), std::fabs(b));
  return scale == 0.0 ? 0.0 : std::fabs(a - b) / scale;
}

double rel(Complex a, Complex b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

// Exact residual of a Surd matrix against zero.
void observe_matrix(CheckBuilder& cb, const BandedMatrix<Surd>& diff, const std::string& witness) {
  for (const auto& [k, d] : diff.diagonals()) {
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (!d[i].is_zero()) {
        const std::size_t r = k >= 0 ? i : i - k;
        const std::size_t c = k >= 0 ? i + k : i;
        cb.observe_exact(d[i], witness + ",entry=(" + std::to_string(r) + "," + std::to_string(c) + ")");
        return;
      }
    }
  }
  cb.observe(0.0, witness);
}

BandedMatrix<Surd> scaled_identity(std::size_t n, const Surd& c) {
  BandedMatrix<Surd> m(n);
  for (std::size_t k = 0; k < n; ++k) m.set(k, k, c);
  return m;
}

// (s+1/2) 1 + (s/2) P_0
BandedMatrix<Surd> zero_point_shift(unsigned s, std::size_t n) {
  BandedMatrix<Surd> m = scaled_identity(n, Surd(rational(2 * static_cast<long long>(s) + 1, 2)));
  m.add(0, 0, Surd(rational(s, 2)));
  return m;
}

}  // namespace

std::optional<Suite> parse_suite(const std::string& name) {
  if (name == "all") return Suite::All;
  if (name == "basis") return Suite::Basis;
  if (name == "ladder") return Suite::Ladder;
  if (name == "nlpb") return Suite::Nlpb;
  if (name == "quantize") return Suite::Quantize;
  if (name == "spectral") return Suite::Spectral;
  if (name == "physics") return Suite::Physics;
  return std::nullopt;
}

const char* suite_name(Suite s) {
  switch (s) {
    case Suite::All: return "all";
    case Suite::Basis: return "basis";
    case Suite::Ladder: return "ladder";
    case Suite::Nlpb: return "nlpb";
    case Suite::Quantize: return "quantize";
    case Suite::Spectral: return "spectral";
    case Suite::Physics: return "physics";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// basis (with the special functions it rests on)

Report verify_basis(const VerifyOptions& o) {
  const std::string suite = "basis";
  std::mt19937_64 rng(o.seed);
  Report rep;

  {
    CheckBuilder cb(suite, "h^{s+n,s} orthogonality", "Gram = diag(s!(s+n)!), relative", o.tol_quadrature);
    for (unsigned s = 0; s <= 4; ++s) {
      const auto rule = plane_rule(2 * (s + 8), 8);
      for (unsigned n = 0; n <= 8; ++n) {
        for (unsigned np = 0; np <= 8; ++np) {
          const Complex g = integrate_plane(rule, [&](Complex z, double, double) {
            return complex_hermite(s + n, s, z) * std::conj(complex_hermite(s + np, s, z));
          });
          const double norm = std::exp(std::lgamma(s + 1.0) + std::lgamma(s + n + 1.0));
          const double want = n == np ? norm : 0.0;
          cb.observe(std::abs(g - want) / norm, tag({{"s", s}, {"n", n}, {"n'", np}}));
        }
      }
    }
    rep.checks.push_back(cb.finish());
  }
  {
    CheckBuilder cb(suite, "h^{s+n,s} double sum = (-1)^s s! zbar^n L_s^{(n)}(|z|^2)", "relative", 1e-12);
    CheckBuilder sym(suite, "h^{r,s} = conj h^{s,r}", "relative", 1e-12);
    for (int i = 0; i < 100; ++i) {
      const Complex z = random_in_disc(rng, 2.5);
      for (unsigned s = 0; s <= 12; ++s) {
        for (unsigned n = 0; n <= 12; ++n) {
          const Complex a = complex_hermite(s + n, s, z);
          const Complex b = complex_hermite_laguerre_form(s, n, z);
          const std::string w = "z=" + fmt(z) + tag({{"s", s}, {"n", n}});
          cb.observe(rel(a, b), w);
          sym.observe(rel(a, std::conj(complex_hermite(s, s + n, z))), w);
        }
      }
    }
    rep.checks.push_back(cb.finish());
    rep.checks.push_back(sym.finish());
  }
  {
    CheckBuilder cb(suite, "Laguerre orthogonality", "Gauss-Laguerre, relative to Gamma(1+a) C(n+a,n)",
                    o.tol_quadrature);
    for (int alpha = 0; alpha <= 2; ++alpha) {
      const auto rule = gauss_laguerre_rule(2 * 10 + 4, alpha);
      for (unsigned m = 0; m <= 10; ++m) {
        for (unsigned n = 0; n <= 10; ++n) {
          long double sum = 0.0L;
          for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
            sum += static_cast<long double>(rule.weights[j]) * laguerre(m, alpha, rule.nodes[j]) *
                   laguerre(n, alpha, rule.nodes[j]);
          }
          const double norm = std::tgamma(1.0 + alpha) * binomial(n + alpha, n);
          cb.observe(std::fabs(static_cast<double>(sum) - (m == n ? norm : 0.0)) / norm,
                     tag({{"alpha", alpha}, {"m", m}, {"n", n}}));
        }
      }
    }
    rep.checks.push_back(cb.finish());
  }
  {
    CheckBuilder cb(suite, "<phi_{m;s}, phi_{n;s'}> = delta", "plane quadrature", o.tol_quadrature);
    for (Sector e : {Sector::L, Sector::R}) {
      const auto rule = plane_rule(2 * (10 + 4), 16);
      for (unsigned s = 0; s <= 4; ++s) {
        for (unsigned sp = 0; sp <= 4; ++sp) {
          for (unsigned m = 0; m <= 10; ++m) {
            for (unsigned n = 0; n <= 10; ++n) {
              // Gaussian folded into phi: integrate e^{|z|^2} phi conj(phi') against e^{-|z|^2}.
              const Complex g = integrate_plane(rule, [&](Complex z, double u, double) {
                return std::exp(u) * std::conj(phi(e, m, s, z)) * phi(e, n, sp, z);
              });
              const double want = (m == n && s == sp) ? 1.0 : 0.0;
              cb.observe(std::abs(g - want),
                         std::string(sector_name(e)) + "," + tag({{"m", m}, {"s", s}, {"n", n}, {"s'", sp}}));
            }
          }
        }
      }
    }
    rep.checks.push_back(cb.finish());
  }
  {
    CheckBuilder closed(suite, "N_s closed form = series", "relative", o.tol_quadrature);
    CheckBuilder low(suite, "N_0 = e^t, N_1 = e^t - t", "relative", 1e-15);
    CheckBuilder bound(suite, "0 < N_s(t) < e^t for s >= 1", "inequality", 0.0);
    CheckBuilder unit(suite, "e^{-t} N_s = 1 - sum_{m<s} |D_{ms}|^2", "absolute", 1e-13);
    for (unsigned s = 0; s <= 6; ++s) {
      for (int i = 1; i <= 100; ++i) {
        const double t = 0.5 * i;
        const double nc = normalization(s, t);
        const std::string w = tag({{"s", s}, {"t", t}});
        closed.observe(rel(nc, normalization_series(s, t)), w);
        if (s == 0) low.observe(rel(nc, std::exp(t)), w);
        if (s == 1) low.observe(rel(nc, std::exp(t) - t), w);
        if (s >= 1) {
          // e^t - N_s resolved directly; in doubles N_s rounds to e^t for large t.
          long double deficit = 0.0L;
          for (unsigned m = 0; m < s; ++m) {
            const long double lag = laguerre(m, s - m, t);
            deficit += std::exp(std::lgamma(m + 1.0L) - std::lgamma(s + 1.0L)) * std::pow(t, s - m) * lag * lag;
          }
          bound.observe_true(nc > 0.0 && deficit > 0.0L && rel(nc + static_cast<double>(deficit), std::exp(t)) < 1e-12,
                             w);
        }
        long double sum = 0.0L;
        for (unsigned m = 0; m < s; ++m) sum += std::norm(displacement_element_any(m, s, std::sqrt(t)));
        unit.observe(std::fabs(scaled_normalization(s, t) - static_cast<double>(1.0L - sum)), w);
      }
    }
    rep.checks.push_back(closed.finish());
    rep.checks.push_back(low.finish());
    rep.checks.push_back(bound.finish());
    rep.checks.push_back(unit.finish());
  }
  {
    CheckBuilder k0(suite, "K_0(z, zbar') = e^{zbar z'}", "relative", o.tol_quadrature);
    CheckBuilder k1(suite, "K_1 closed form", "relative", 1e-8);
    CheckBuilder herm(suite, "K^L_s(z, zbar') = K^R_s(z', zbar)", "relative", 1e-14);
    for (int i = 0; i < 20; ++i) {
      const Complex z = random_in_disc(rng, 2.0);
      const Complex zp = random_in_disc(rng, 2.0);
      const std::string w = "z=" + fmt(z) + ",z'=" + fmt(zp);
      k0.observe(rel(kernel(0, z, zp).value, kernel_closed_s0(z, zp)), w);
      k1.observe(rel(kernel(1, z, zp).value, kernel_closed_s1(z, zp)), w);
      for (unsigned s = 0; s <= 4; ++s) {
        herm.observe(rel(kernel(s, z, zp, Sector::L).value, kernel(s, zp, z, Sector::R).value),
                     w + ",s=" + std::to_string(s));
      }
    }
    rep.checks.push_back(k0.finish());
    rep.checks.push_back(k1.finish());
    rep.checks.push_back(herm.finish());
  }
  {
    CheckBuilder cb(suite, "int K_s f = f", "plane quadrature, absolute", o.tol_reproduction);
    const auto rule = reproduce_rule();
    const Complex z0(0.7, 0.3);
    for (unsigned s = 0; s <= 2; ++s) {
      auto f = [s](Complex z) { return phi(Sector::L, 0, s, z); };
      cb.observe(std::abs(reproduce(s, z0, f, rule) - f(z0)), "f=phi_{0;s},s=" + std::to_string(s));
    }
    for (int i = 0; i < 5; ++i) {
      const Complex z = random_in_disc(rng, 2.0);
      auto f = [](Complex w) { return phi(Sector::L, 3, 1, w); };
      cb.observe(std::abs(reproduce(1, z, f, rule) - f(z)), "f=phi_{3;1},z=" + fmt(z));
      auto mix = [](Complex w) { return 0.5 * phi(Sector::L, 0, 2, w) - Complex(0, 2) * phi(Sector::L, 4, 2, w); };
      cb.observe(std::abs(reproduce(2, z, mix, rule) - mix(z)), "f=combination,s=2,z=" + fmt(z));
      auto other = [](Complex w) { return phi(Sector::L, 2, 3, w); };
      cb.observe(std::abs(reproduce(1, z, other, rule)), "f=phi_{2;3} in K_1,z=" + fmt(z));
    }
    rep.checks.push_back(cb.finish());
  }
  {
    CheckBuilder mono(suite, "partial sums of |D_{ms}|^2 increase to 1", "monotone, <= 1", 1e-14);
    CheckBuilder ineq(suite, "sum_n |phi_{n;s}|^2 < 1 for s >= 1", "inequality", 0.0);
    for (int i = 0; i < 10; ++i) {
      const Complex z = random_in_disc(rng, 2.5);
      for (unsigned s = 0; s <= 4; ++s) {
        long double partial = 0.0L;
        long double prev = -1.0L;
        bool ok = true;
        for (unsigned m = 0; m < 200; ++m) {
          partial += std::norm(displacement_element_any(m, s, z));
          if (partial < prev || partial > 1.0L + 1e-14L) ok = false;
          prev = partial;
        }
        const std::string w = "z=" + fmt(z) + ",s=" + std::to_string(s);
        mono.observe(ok ? std::fabs(static_cast<double>(1.0L - partial)) : INFINITY, w);
        if (s >= 1) {
          long double sum = 0.0L;
          for (unsigned n = 0; n < 200; ++n) sum += std::norm(phi(Sector::L, n, s, z));
          ineq.observe_true(sum < 1.0L, w);
        }
      }
    }
    rep.checks.push_back(mono.finish());
    rep.checks.push_back(ineq.finish());
  }
  {
    CheckBuilder pdf(suite, "gamma-like pdf integrates to 1", "Gauss-Laguerre", o.tol_quadrature);
    CheckBuilder pmf(suite, "Poisson-like pmf sums to 1", "series", o.tol_quadrature);
    for (unsigned s = 0; s <= 4; ++s) {
      for (unsigned n = 0; n <= 8; ++n) {
        const auto rule = gauss_laguerre_rule((n + 2 * s) / 2 + 8);
        long double sum = 0.0L;
        for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
          sum += rule.weights[j] * std::exp(rule.nodes[j]) * gamma_like_pdf(n, s, rule.nodes[j]);
        }
        pdf.observe(std::fabs(static_cast<double>(sum) - 1.0), tag({{"n", n}, {"s", s}}));
      }
      for (double t : {0.5, 2.0, 10.0}) {
        long double sum = 0.0L;
        for (unsigned n = 0; n < 400; ++n) sum += poisson_like_pmf(n, s, t);
        pmf.observe(std::fabs(static_cast<double>(sum) - 1.0), tag({{"s", s}, {"t", t}}));
      }
    }
    rep.checks.push_back(pdf.finish());
    rep.checks.push_back(pmf.finish());
  }
  return rep;
}

// ---------------------------------------------------------------------------
// ladder: index-space algebra and the truncated sector matrices

Report verify_ladder(const VerifyOptions& o) {
  const std::string suite = "ladder";
  Report rep = verify_commutators_full(12, 6);
  const std::size_t n = 20;
  const std::size_t big = n + 2;

  CheckBuilder az(suite, "[A_z, A_zbar] = +/-(1 + s P_0)", "exact, leading block", o.tol_exact);
  CheckBuilder qp(suite, "[Q, P] = (-1)^{eps+1} i (1 + s P_0)", "exact, leading block", o.tol_exact);
  CheckBuilder proj(suite, "Pi A^L Pi = A^L_{z;s}", "exact", o.tol_exact);
  CheckBuilder mir(suite, "conj(L matrices) = R matrices", "exact", o.tol_exact);
  CheckBuilder herm(suite, "Q and P Hermitian", "exact", o.tol_exact);
  for (unsigned s = 0; s <= 6; ++s) {
    const std::string ws = "s=" + std::to_string(s);
    BandedMatrix<Surd> one_sp0 = scaled_identity(n, Surd(1));
    one_sp0.add(0, 0, Surd(static_cast<long long>(s)));
    for (Sector e : {Sector::L, Sector::R}) {
      const std::string w = ws + ",e=" + sector_name(e);
      const Surd sign = e == Sector::L ? Surd(1) : Surd(-1);
      const auto a = build_A_z(s, big, e);
      const auto ad = build_A_zbar(s, big, e);
      const auto c1 = commutator(*a.exact, *ad.exact).leading_block(n);
      observe_matrix(az, c1 - sign * one_sp0, w);

      const auto q = build_Q(s, big, e);
      const auto p = build_P(s, big, e);
      const auto c2 = commutator(*q.exact, *p.exact).leading_block(n);
      observe_matrix(qp, c2 - (sign * Surd::imaginary_unit()) * one_sp0, w);
      observe_matrix(herm, q.exact->adjoint() - *q.exact, w + ",Q");
      observe_matrix(herm, p.exact->adjoint() - *p.exact, w + ",P");
    }
    const auto lower = sector_matrix(IndexOp::ladder(Ladder::AL), Sector::L, s, n);
    observe_matrix(proj, lower - *build_A_z(s, n, Sector::L).exact, ws);

    auto conj_m = [](const BandedMatrix<Surd>& m) { return m.map([](const Surd& v) { return v.conj(); }); };
    observe_matrix(mir, conj_m(*build_Q(s, n, Sector::L).exact) - *build_Q(s, n, Sector::R).exact, ws + ",Q");
    observe_matrix(mir, conj_m(*build_P(s, n, Sector::L).exact) - *build_P(s, n, Sector::R).exact, ws + ",P");
    observe_matrix(mir, conj_m(*build_A_zbar(s, n, Sector::L).exact) - *build_A_z(s, n, Sector::R).exact,
                   ws + ",A_z");
  }
  rep.checks.push_back(az.finish());
  rep.checks.push_back(qp.finish());
  rep.checks.push_back(proj.finish());
  rep.checks.push_back(mir.finish());
  rep.checks.push_back(herm.finish());

  CheckBuilder q2(suite, "A_{q^2} = Q^2 + (s+1/2) 1 + (s/2) P_0", "exact, leading block", o.tol_exact);
  CheckBuilder p2(suite, "A_{p^2} = P^2 + (s+1/2) 1 + (s/2) P_0", "exact, leading block", o.tol_exact);
  CheckBuilder hh(suite, "H_hat = (P^2 + Q^2)/2", "exact, leading block", o.tol_exact);
  CheckBuilder ah(suite, "A_H = H_hat + (s+1/2) 1 + (s/2) P_0", "exact", o.tol_exact);
  CheckBuilder half(suite, "A_H = (A_{p^2} + A_{q^2})/2", "exact", o.tol_exact);
  CheckBuilder spec(suite, "spec A_H = {n+2s+1}, H_hat first gap s/2+1", "exact", o.tol_exact);
  for (unsigned s = 0; s <= 6; ++s) {
    const std::string w = "s=" + std::to_string(s);
    const auto q = *build_Q(s, big, Sector::L).exact;
    const auto p = *build_P(s, big, Sector::L).exact;
    const auto qq = (q * q).leading_block(n);
    const auto pp = (p * p).leading_block(n);
    const auto shift = zero_point_shift(s, n);
    observe_matrix(q2, *build_Aq2(s, n).exact - qq - shift, w);
    observe_matrix(p2, *build_Ap2(s, n).exact - pp - shift, w);
    observe_matrix(hh, Surd(rational(1, 2)) * (pp + qq) - *build_Hhat(s, n).exact, w);
    observe_matrix(ah, *build_AH(s, n).exact - *build_Hhat(s, n).exact - shift, w);
    observe_matrix(half, Surd(rational(1, 2)) * (*build_Aq2(s, n).exact + *build_Ap2(s, n).exact) -
                             *build_AH(s, n).exact, w);
    const auto ahm = *build_AH(s, n).exact;
    const auto hhm = *build_Hhat(s, n).exact;
    for (std::size_t k = 0; k < n; ++k) {
      spec.observe_exact(ahm.at(k, k) - Surd(static_cast<long long>(k + 2 * s + 1)), w + ",k=" + std::to_string(k));
    }
    spec.observe_exact(hhm.at(1, 1) - hhm.at(0, 0) - Surd(rational(s + 2, 2)), w + ",first gap");
  }
  rep.checks.push_back(q2.finish());
  rep.checks.push_back(p2.finish());
  rep.checks.push_back(hh.finish());
  rep.checks.push_back(ah.finish());
  rep.checks.push_back(half.finish());
  rep.checks.push_back(spec.finish());
  return rep;
}

// ---------------------------------------------------------------------------

Report verify_nlpb(const VerifyOptions&) {
  Report rep = nlpb_verify(30);
  for (unsigned s = 0; s <= 4; ++s) rep.append(dual_hamiltonian_verify(30, s));
  return rep;
}

// ---------------------------------------------------------------------------
// quantize

Report verify_quantize(const VerifyOptions& o) {
  const std::string suite = "quantize";
  Report rep;
  const std::size_t n = 12;

  CheckBuilder oracle(suite, "closed-form monomial elements = plane quadrature", "relative", o.tol_quadrature);
  CheckBuilder band(suite, "support on n - n' = eps(b - a)", "off-band quadrature, absolute", 1e-12);
  CheckBuilder cov(suite, "A_{z^b zbar^a} = (A_{z^a zbar^b})^dagger", "exact", o.tol_exact);
  CheckBuilder f3(suite, "finite sum = 3F2 form where a_{-eps} >= s", "exact", o.tol_exact);
  for (Sector e : {Sector::L, Sector::R}) {
    for (unsigned s = 0; s <= 3; ++s) {
      for (unsigned a = 0; a <= 4; ++a) {
        for (unsigned b = 0; a + b <= 4; ++b) {
          const std::string w = std::string(sector_name(e)) + "," + tag({{"s", s}, {"a", a}, {"b", b}});
          const Monomial f{a, b};
          const auto num = quantize_numeric(f, s, e, n, quantization_rule(f, s, n));
          const int bd = monomial_band(a, b, e);
          const unsigned a_me = e == Sector::L ? b : a;
          for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
              const std::string wij = w + ",n=" + std::to_string(i) + ",n'=" + std::to_string(j);
              if (static_cast<int>(i) - static_cast<int>(j) != bd) {
                band.observe(std::abs(num.at(i, j)), wij);
                continue;
              }
              const Surd ex = monomial_element(a, b, s, e, i, j);
              const Complex ce = ex.to_complex();
              const Complex cn = num.at(i, j);
              oracle.observe(ce == Complex(0, 0) ? std::abs(cn) : std::abs(cn - ce) / std::abs(ce), wij);
              cov.observe_exact(monomial_element(b, a, s, e, j, i) - ex.conj(), wij);
              if (a_me >= s) f3.observe_exact(monomial_element_3f2(a, b, s, e, i, j) - ex, wij);
            }
          }
        }
      }
    }
  }
  rep.checks.push_back(oracle.finish());
  rep.checks.push_back(band.finish());
  rep.checks.push_back(cov.finish());
  rep.checks.push_back(f3.finish());

  {
    CheckBuilder id(suite, "A_1 = identity", "quadrature, absolute", 1e-12);
    CheckBuilder herm(suite, "A_f Hermitian for real f", "quadrature, absolute", 1e-12);
    CheckBuilder known(suite, "A_z, A_{|z|^2}, A_{q^2} closed forms", "exact", o.tol_exact);
    for (unsigned s = 0; s <= 3; ++s) {
      const std::string w = "s=" + std::to_string(s);
      Sampled one{[](double, double) { return Complex(1.0, 0.0); }, 0u, 0u};
      const auto i1 = quantize_numeric(one, s, Sector::L, n, quantization_rule(one, s, n));
      id.observe((i1.values - BandedMatrix<Complex>::identity(n)).max_abs(), w);

      // f = |z|^2 cos(2 theta) + |z| sin(theta) + |z|^4/3 is real.
      Sampled real_f{[](double u, double th) {
                       return Complex(u * std::cos(2 * th) + std::sqrt(u) * std::sin(th) + u * u / 3.0, 0.0);
                     },
                     2u, 2u};
      for (Sector e : {Sector::L, Sector::R}) {
        const auto af = quantize_numeric(real_f, s, e, n, quantization_rule(real_f, s, n));
        herm.observe((af.values - af.values.adjoint()).max_abs(), w + ",e=" + sector_name(e));
      }
      observe_matrix(known, *quantize_monomial_closed(1, 0, s, Sector::L, n).exact - *build_A_z(s, n, Sector::L).exact,
                     w + ",z");
      observe_matrix(known, *quantize_monomial_closed(1, 1, s, Sector::L, n).exact - *build_AH(s, n).exact,
                     w + ",|z|^2");
      const auto q2 = *quantize_monomial_closed(1, 1, s, Sector::L, n).exact +
                      Surd(rational(1, 2)) * (*quantize_monomial_closed(2, 0, s, Sector::L, n).exact +
                                              *quantize_monomial_closed(0, 2, s, Sector::L, n).exact);
      observe_matrix(known, q2 - *build_Aq2(s, n).exact, w + ",q^2");
    }
    rep.checks.push_back(id.finish());
    rep.checks.push_back(herm.finish());
    rep.checks.push_back(known.finish());
  }
  {
    CheckBuilder one(suite, "lower symbol of 1 is 1", "absolute", 1e-13);
    CheckBuilder ah(suite, "lower symbol of A_H at s = 0 is |z|^2 + 1", "relative", 1e-13);
    CheckBuilder pos(suite, "lower symbol of A_{q^2} >= 0", "inequality", 0.0);
    std::mt19937_64 rng(o.seed + 1);
    for (int i = 0; i < 10; ++i) {
      const Complex z = random_in_disc(rng, 2.5);
      const std::string w = "z=" + fmt(z);
      for (unsigned s = 0; s <= 3; ++s) {
        const std::size_t dim = cs_dimension(z, s, 1e-16) + 4;
        const auto idm = from_exact("1", s, Sector::L, BandedMatrix<Surd>::identity(dim));
        one.observe(std::abs(lower_symbol(idm, z, s, Sector::L) - 1.0), w + ",s=" + std::to_string(s));
        pos.observe_true(lower_symbol(build_Aq2(s, std::max<std::size_t>(dim, 3), Storage::ValuesOnly), z, s,
                                      Sector::L)
                                 .real() >= 0.0,
                         w + ",s=" + std::to_string(s));
      }
      const std::size_t dim = std::max<std::size_t>(cs_dimension(z, 0, 1e-16) + 4, 3);
      ah.observe(rel(lower_symbol(build_AH(0, dim, Storage::ValuesOnly), z, 0, Sector::L).real(), std::norm(z) + 1.0),
                 w);
    }
    rep.checks.push_back(one.finish());
    rep.checks.push_back(ah.finish());
    rep.checks.push_back(pos.finish());
  }
  {
    CheckBuilder gl(suite, "Gauss-Laguerre exact on u^k, k <= 2n-1", "relative", 1e-13);
    for (unsigned nr : {1u, 2u, 5u, 10u, 20u}) {
      const auto rule = gauss_laguerre_rule(nr);
      for (unsigned k = 0; k <= 2 * nr - 1; ++k) {
        long double sum = 0.0L;
        for (std::size_t j = 0; j < rule.nodes.size(); ++j) sum += rule.weights[j] * std::pow(rule.nodes[j], k);
        gl.observe(rel(static_cast<double>(sum), std::tgamma(k + 1.0)), tag({{"n_r", nr}, {"k", k}}));
      }
    }
    rep.checks.push_back(gl.finish());

    CheckBuilder li(suite, "Laguerre integral: first form = second form = quadrature", "relative", 1e-9);
    for (double lam : {0.0, 0.5, 1.0, 2.0, 2.5, 3.7}) {
      for (double alpha : {0.0, 1.0, 2.0}) {
        for (double beta : {0.0, 1.0, 1.5}) {
          for (unsigned r = 0; r <= 4; ++r) {
            for (unsigned s = 0; s <= 4; ++s) {
              const auto c = laguerre_integral_check(lam, alpha, beta, r, s);
              li.observe(c.max_rel_diff,
                         tag({{"lambda", lam}, {"alpha", alpha}, {"beta", beta}, {"r", r}, {"s", s}}));
            }
          }
        }
      }
    }
    rep.checks.push_back(li.finish());

    CheckBuilder red(suite, "Laguerre integral reductions", "relative", 1e-12);
    for (double alpha : {0.0, 1.0, 2.5}) {
      for (unsigned m = 0; m <= 6; ++m) {
        for (unsigned k = 0; k <= 6; ++k) {
          const double want = m == k ? std::tgamma(1 + alpha) * binomial(k + alpha, k) : 0.0;
          const double got = laguerre_integral(alpha, alpha, alpha, m, k);
          red.observe(std::fabs(got - want) / std::tgamma(1 + alpha) / binomial(k + alpha, k),
                      "orthogonality," + tag({{"alpha", alpha}, {"m", m}, {"n", k}}));
        }
      }
    }
    for (double lam : {0.0, 0.5, 2.0, 3.5}) {
      red.observe(rel(laguerre_integral(lam, 1.0, 2.0, 0, 0), std::tgamma(lam + 1)), "r=s=0," + tag({{"lambda", lam}}));
      for (unsigned r = 0; r <= 5; ++r) {
        const double alpha = 1.25;
        // Gamma(lambda+1) Gamma(alpha-lambda+r) / (r! Gamma(alpha-lambda))
        const double want = std::tgamma(lam + 1) * pochhammer(alpha - lam, r) / std::tgamma(r + 1.0);
        red.observe(std::fabs(laguerre_integral(lam, alpha, 0.3, r, 0) - want) / std::max(std::fabs(want), 1.0),
                    "s=0," + tag({{"lambda", lam}, {"r", r}}));
      }
    }
    rep.checks.push_back(red.finish());
  }
  return rep;
}

// ---------------------------------------------------------------------------
// spectral

Report verify_spectral(const VerifyOptions& o) {
  const std::string suite = "spectral";
  Report rep;
  {
    CheckBuilder cq(suite, "char_poly = monic_q", "exact coefficients", o.tol_exact);
    CheckBuilder qh(suite, "2^n monic_q = H_n(lambda;s)", "exact coefficients", o.tol_exact);
    CheckBuilder mon(suite, "q_n monic, H_n integer", "exact", o.tol_exact);
    for (unsigned s = 0; s <= 6; ++s) {
      for (unsigned k = 1; k <= 25; ++k) {
        const std::string w = tag({{"n", k}, {"s", s}});
        const PolyExact q = monic_q(k, s);
        const PolyExact h = assoc_hermite(k, s);
        if (k <= 20) cq.observe_true(char_poly(k, s) == q, w);
        Rational p2 = 1;
        for (unsigned i = 0; i < k; ++i) p2 *= 2;
        qh.observe_true(p2 * q == h, w);
        mon.observe_true(q.is_monic() && h.has_integer_coeffs(), w);
      }
    }
    rep.checks.push_back(cq.finish());
    rep.checks.push_back(qh.finish());
    rep.checks.push_back(mon.finish());

    // Classical Hermite: H_n = n! sum_m (-1)^m (2x)^{n-2m} / (m! (n-2m)!).
    CheckBuilder cl(suite, "H_n(lambda;0) = classical Hermite", "exact coefficients", o.tol_exact);
    for (unsigned k = 0; k <= 25; ++k) {
      std::vector<Rational> c(k + 1);
      for (unsigned m = 0; 2 * m <= k; ++m) {
        Rational v = Rational(factorial(k)) / (Rational(factorial(m)) * Rational(factorial(k - 2 * m)));
        for (unsigned i = 0; i < k - 2 * m; ++i) v *= 2;
        c[k - 2 * m] = m % 2 ? -v : v;
      }
      cl.observe_true(PolyExact(c) == assoc_hermite(k, 0), "n=" + std::to_string(k));
    }
    rep.checks.push_back(cl.finish());
  }
  {
    CheckBuilder sym(suite, "spectrum of Q_n symmetric about 0", "absolute", 1e-12);
    CheckBuilder root(suite, "q_n(eigenvalue) = 0", "relative to max(1, sum |a_k| |x|^k)", 1e-12);
    CheckBuilder inter(suite, "eigenvalues of Q_n interlace those of Q_{n+1}", "strict", 0.0);
    for (unsigned s = 0; s <= 4; ++s) {
      for (unsigned k = 1; k <= 15; ++k) {
        const std::string w = tag({{"n", k}, {"s", s}});
        const auto ev = eigenvalues(k, s);
        const auto ev1 = eigenvalues(k + 1, s);
        const PolyExact q = monic_q(k, s);
        for (std::size_t i = 0; i < ev.size(); ++i) {
          sym.observe(std::fabs(ev[i] + ev[ev.size() - 1 - i]), w);
          double scale = 0.0;
          double xk = 1.0;
          for (const auto& c : q.coeffs()) {
            scale += std::fabs(to_double(c)) * xk;
            xk *= std::fabs(ev[i]);
          }
          root.observe(std::fabs(q(ev[i])) / std::max(scale, 1.0), w);
          inter.observe_true(ev1[i] < ev[i] && ev[i] < ev1[i + 1], w + ",i=" + std::to_string(i));
        }
      }
    }
    rep.checks.push_back(sym.finish());
    rep.checks.push_back(root.finish());
    rep.checks.push_back(inter.finish());
  }
  {
    CheckBuilder orth(suite, "Golub-Welsch orthonormality of p_k", "absolute", 1e-11);
    CheckBuilder mass(suite, "Golub-Welsch weights positive, sum 1", "absolute", 1e-13);
    CheckBuilder hn(suite, "sum w H_k^2 = 2^k Gamma(k+s+1)/Gamma(s+1)", "relative", 1e-9);
    const unsigned nn = 40;
    for (unsigned s = 0; s <= 4; ++s) {
      const auto gw = golub_welsch(s, nn);
      long double total = 0.0L;
      bool positive = true;
      for (double w : gw.weights) {
        total += w;
        positive = positive && w > 0.0;
      }
      mass.observe(positive ? std::fabs(static_cast<double>(total - 1.0L)) : INFINITY, "s=" + std::to_string(s));
      std::vector<std::vector<double>> p;
      for (double x : gw.nodes) p.push_back(orthonormal_p(12, s, x));
      for (unsigned k = 0; k <= 12; ++k) {
        for (unsigned kp = 0; kp <= 12; ++kp) {
          long double g = 0.0L;
          for (std::size_t j = 0; j < nn; ++j) g += static_cast<long double>(gw.weights[j]) * p[j][k] * p[j][kp];
          orth.observe(std::fabs(static_cast<double>(g) - (k == kp ? 1.0 : 0.0)), tag({{"s", s}, {"k", k}, {"k'", kp}}));
        }
        const PolyExact h = assoc_hermite(k, s);
        long double g = 0.0L;
        for (std::size_t j = 0; j < nn; ++j) {
          const double v = h(gw.nodes[j]);
          g += static_cast<long double>(gw.weights[j]) * v * v;
        }
        const double want = std::exp(k * std::log(2.0) + std::lgamma(k + s + 1.0) - std::lgamma(s + 1.0));
        hn.observe(rel(static_cast<double>(g), want), tag({{"s", s}, {"k", k}}));
      }
    }
    rep.checks.push_back(orth.finish());
    rep.checks.push_back(mass.finish());
    rep.checks.push_back(hn.finish());
  }
  for (unsigned s = 0; s <= 4; ++s) {
    for (unsigned k = 0; k <= 4; ++k) rep.append(assoc_hermite_laguerre_check(k, s, o.tol_quadrature));
  }
  {
    CheckBuilder div(suite, "sum 1/sqrt(s+n) diverges", "partial sum over 1e4 terms > 190 and monotone", 0.0);
    for (unsigned s = 0; s <= 5; ++s) {
      const auto d = selfadjointness_divergence_test(s, 10000, s == 0 ? 190.0 : 0.0);
      div.observe_true(d.monotone && d.exceeds_threshold,
                       "s=" + std::to_string(s) + ",sum=" + fmt(d.partial_sums.back()));
    }
    rep.checks.push_back(div.finish());
  }
  return rep;
}

// ---------------------------------------------------------------------------
// physics

Report verify_physics(const VerifyOptions&) {
  const std::string suite = "physics";
  Report rep;
  const auto electron = PhysicalParams::electron_optical();
  {
    CheckBuilder zt(suite, "zeta map round trip", "relative", 1e-15);
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 50; ++i) {
      const double q = u(rng) * 1e-9;
      const double p = u(rng) * 1e-24;
      const auto back = zeta_inverse(electron, zeta_map(electron, q, p));
      zt.observe(std::max(rel(back.first, q), rel(back.second, p)), "q=" + fmt(q) + ",p=" + fmt(p));
    }
    zt.observe(std::abs(zeta_map(electron, 0.0, 0.0)), "q=p=0");
    rep.checks.push_back(zt.finish());
  }
  {
    CheckBuilder comp(suite, "hbar^2/(4 m ell^2) = m c^2 with ell = hbar/(2mc)", "relative", 4e-16);
    const double mc2 = electron.m * electron.c * electron.c;
    comp.observe(rel(kinetic_internal_energy(electron), mc2), "electron");
    const double want_gamma = 0.25 * electron.m * electron.omega * electron.omega * electron.ell * electron.ell;
    comp.observe(rel(internal_energy_factor(electron), mc2 + want_gamma), "factor");
    CheckBuilder gm(suite, "m omega^2 ell^2/4 = gamma hbar omega, gamma linear in omega", "relative", 1e-12);
    gm.observe(rel(want_gamma, gamma_ratio(electron) * electron.hbar * electron.omega),
               "gamma=" + fmt(gamma_ratio(electron)));
    gm.observe(rel(gamma_ratio(PhysicalParams::electron_optical(6e15)), 2.0 * gamma_ratio(electron)), "omega x2");
    rep.checks.push_back(comp.finish());
    rep.checks.push_back(gm.finish());
  }
  {
    CheckBuilder dim(suite, "dimensionless A_H = diag(n+2s+1)", "absolute", 1e-12);
    CheckBuilder gaps(suite, "gaps of A_H equal hbar omega", "relative", 1e-12);
    CheckBuilder comm(suite, "[Q, P] = i hbar (1 + s P_0)", "relative to hbar", 1e-12);
    const std::size_t n = 30;
    for (unsigned s = 0; s <= 4; ++s) {
      const std::string w = "s=" + std::to_string(s);
      const auto h = build_physical_AH(PhysicalParams::dimensionless(), s, n);
      dim.observe((h.op.values - build_AH(s, n).values).max_abs(), w);
      PhysicalParams natural = PhysicalParams::dimensionless();
      natural.m = 2.0;
      natural.omega = 3.0;
      natural.hbar = 0.5;
      natural.ell = std::sqrt(natural.hbar / (natural.m * natural.omega));
      const auto hn = build_physical_AH(natural, s, n);
      for (double g : hn.gaps) gaps.observe(rel(g, natural.hbar * natural.omega), w);
      const auto c = physical_commutator(electron, s, n);
      BandedMatrix<Complex> want(n);
      for (std::size_t k = 0; k < n; ++k) want.set(k, k, Complex(0, electron.hbar));
      want.add(0, 0, Complex(0, electron.hbar * s));
      comm.observe((c - want).max_abs() / electron.hbar, w);
    }
    rep.checks.push_back(dim.finish());
    rep.checks.push_back(gaps.finish());
    rep.checks.push_back(comm.finish());
  }
  {
    CheckBuilder tab(suite, "spectrum table", "exact columns", 0.0);
    CheckBuilder eq(suite, "physically equivalent only for s = 0", "boolean", 0.0);
    CheckBuilder inf(suite, "inf <A_{q^2}> = s + 1/2", "absolute", 1e-3);
    const auto rows = spectrum_compare({0, 1, 2, 3, 4}, 20);
    for (const auto& r : rows) {
      const std::string w = "s=" + std::to_string(r.s);
      const double s = r.s;
      tab.observe(std::max({std::fabs(r.ah_ground - (2 * s + 1)), std::fabs(r.hhat_ground - (s + 1) / 2),
                            std::fabs(r.hhat_first_gap - (s / 2 + 1)), std::fabs(r.hhat_upper_gap - 1.0),
                            std::fabs(r.ah_first_gap - 1.0)}),
                  w);
      eq.observe_true(r.equivalent == (r.s == 0), w);
      if (r.s <= 3) inf.observe(std::fabs(r.infimum - (s + 0.5)), w);
    }
    rep.checks.push_back(tab.finish());
    rep.checks.push_back(eq.finish());
    rep.checks.push_back(inf.finish());
  }
  return rep;
}

Report run_suite(Suite s, const VerifyOptions& o) {
  switch (s) {
    case Suite::Basis: return verify_basis(o);
    case Suite::Ladder: return verify_ladder(o);
    case Suite::Nlpb: return verify_nlpb(o);
    case Suite::Quantize: return verify_quantize(o);
    case Suite::Spectral: return verify_spectral(o);
    case Suite::Physics: return verify_physics(o);
    case Suite::All: break;
  }
  const std::vector<Suite> order = {Suite::Basis, Suite::Ladder, Suite::Nlpb,
                                    Suite::Quantize, Suite::Spectral, Suite::Physics};
  std::vector<Report> parts(order.size());
  const unsigned threads = std::max(1u, o.threads);
  for (std::size_t start = 0; start < order.size(); start += threads) {
    std::vector<std::future<Report>> running;
    for (std::size_t i = start; i < std::min(order.size(), start + threads); ++i) {
      running.push_back(std::async(std::launch::async, [&o, s = order[i]] { return run_suite(s, o); }));
    }
    for (std::size_t i = 0; i < running.size(); ++i) parts[start + i] = running[i].get();
  }
  Report all;
  for (const auto& p : parts) all.append(p);
  return all;
}

}  // namespace hermq
