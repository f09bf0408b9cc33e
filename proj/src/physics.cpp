#include "hermquant/physics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hermquant/quantize.hpp"
#include "hermquant/spectral.hpp"
#include "hermquant/tridiag.hpp"

namespace hermq {

namespace {

constexpr double kElectronMass = 9.1093837015e-31;  // kg
constexpr double kHbar = 1.054571817e-34;           // J s
constexpr double kLightSpeed = 299792458.0;         // m/s

bool positive(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

PhysicalParams PhysicalParams::dimensionless() { return PhysicalParams{}; }

PhysicalParams PhysicalParams::compton(double m, double omega, double hbar, double c) {
  PhysicalParams p{m, omega, hbar, c, hbar / (2.0 * m * c)};
  p.validate();
  return p;
}

PhysicalParams PhysicalParams::electron_optical(double omega) {
  return compton(kElectronMass, omega, kHbar, kLightSpeed);
}

void PhysicalParams::validate() const {
  if (!positive(m) || !positive(omega) || !positive(hbar) || !positive(c) || !positive(ell)) {
    throw std::invalid_argument("PhysicalParams: m, omega, hbar, c and ell must be positive and finite");
  }
}

Complex zeta_map(const PhysicalParams& p, double q, double mom) {
  const double r2 = std::sqrt(2.0);
  return {q / (p.ell * r2), mom * p.ell / (p.hbar * r2)};
}

std::pair<double, double> zeta_inverse(const PhysicalParams& p, Complex z) {
  const double r2 = std::sqrt(2.0);
  return {z.real() * p.ell * r2, z.imag() * p.hbar * r2 / p.ell};
}

double gamma_ratio(const PhysicalParams& p) { return p.hbar * p.omega / (16.0 * p.m * p.c * p.c); }

double kinetic_internal_energy(const PhysicalParams& p) { return p.hbar * p.hbar / (4.0 * p.m * p.ell * p.ell); }

double internal_energy_factor(const PhysicalParams& p) {
  return kinetic_internal_energy(p) + 0.25 * p.m * p.omega * p.omega * p.ell * p.ell;
}

std::vector<double> pentadiagonal_even_odd_eigenvalues(const BandedMatrix<Complex>& a) {
  for (const auto& [k, d] : a.diagonals()) {
    if (k != 0 && k != 2 && k != -2) throw std::invalid_argument("pentadiagonal_even_odd_eigenvalues: band");
  }
  const std::size_t n = a.dim();
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t parity = 0; parity < 2 && parity < n; ++parity) {
    SymTridiag t;
    for (std::size_t i = parity; i < n; i += 2) {
      t.diag.push_back(a.at(i, i).real());
      if (i + 2 < n) t.off.push_back(a.at(i, i + 2).real());
    }
    const auto ev = eigenvalues(t);
    out.insert(out.end(), ev.begin(), ev.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

PhysicalHamiltonian build_physical_AH(const PhysicalParams& p, unsigned s, std::size_t n) {
  p.validate();
  if (n < 3) throw std::invalid_argument("build_physical_AH: N must be >= 3");
  const double kin = p.hbar * p.hbar / (2.0 * p.m * p.ell * p.ell);
  const double pot = 0.5 * p.m * p.omega * p.omega * p.ell * p.ell;

  PhysicalHamiltonian h;
  h.op.name = "A_H(SI)";
  h.op.s = s;
  h.op.epsilon = Sector::L;
  h.op.values = Complex(kin) * build_Ap2(s, n, Storage::ValuesOnly).values +
                Complex(pot) * build_Aq2(s, n, Storage::ValuesOnly).values;
  h.op.values.prune();
  h.internal_factor = internal_energy_factor(p);
  h.levels = pentadiagonal_even_odd_eigenvalues(h.op.values);
  for (std::size_t k = 1; k < h.levels.size(); ++k) h.gaps.push_back(h.levels[k] - h.levels[k - 1]);
  h.ground = h.levels.front();
  return h;
}

BandedMatrix<Complex> physical_commutator(const PhysicalParams& p, unsigned s, std::size_t n) {
  p.validate();
  const std::size_t big = n + 2;
  const auto q = Complex(p.ell) * build_Q(s, big, Sector::L, Storage::ValuesOnly).values;
  const auto mom = Complex(p.hbar / p.ell) * build_P(s, big, Sector::L, Storage::ValuesOnly).values;
  BandedMatrix<Complex> c = q * mom - mom * q;
  return c.leading_block(n);
}

namespace {

// <c|Q^2|c> = |Q c|^2 with Q one size larger than c.
double q_squared(unsigned s, std::vector<Complex> c) {
  c.push_back(Complex(0.0, 0.0));
  const auto q = build_Q(s, c.size(), Sector::L, Storage::ValuesOnly);
  const auto v = q.values.apply(c);
  long double acc = 0.0L;
  for (const auto& x : v) acc += std::norm(x);
  return static_cast<double>(acc);
}

double min_section_eigenvalue(unsigned s, std::size_t n) {
  const auto a = build_Aq2(s, n, Storage::ValuesOnly).values;
  double best = 0.0;
  for (std::size_t parity = 0; parity < 2; ++parity) {
    SymTridiag t;
    for (std::size_t i = parity; i < n; i += 2) {
      t.diag.push_back(a.at(i, i).real());
      if (i + 2 < n) t.off.push_back(a.at(i, i + 2).real());
    }
    const double v = kth_eigenvalue(t, 0);
    best = parity == 0 ? v : std::min(best, v);
  }
  return best;
}

}  // namespace

InfimumScan infimum_scan(unsigned s, Complex z, std::vector<double> sigmas) {
  if (sigmas.empty()) sigmas = {1.0, 1e-1, 1e-2, 1e-3, 1e-4};
  std::sort(sigmas.begin(), sigmas.end(), std::greater<>());
  if (sigmas.size() < 2 || sigmas.back() <= 0.0) throw std::invalid_argument("infimum_scan: need >= 2 positive sigmas");

  InfimumScan r;
  r.s = s;
  r.z = z;
  r.sigmas = sigmas;
  for (double sigma : sigmas) {
    const Complex w = z / std::sqrt(sigma);
    const std::size_t dim = std::max<std::size_t>(cs_dimension(w, s, 1e-16) + 4, 3);
    const auto aq2 = build_Aq2(s, dim, Storage::ValuesOnly);
    const double lower = lower_symbol(aq2, w, s, Sector::L, 1e-14).real();
    const double q2 = q_squared(s, cs_coefficients(w, s, Sector::L, dim));
    r.cs_dims.push_back(dim);
    r.lower_symbols.push_back(lower);
    r.q2_expectations.push_back(q2);
    r.estimates.push_back(lower - q2);
  }
  // Richardson step assuming est(sigma) = E + A sigma + o(sigma).
  const std::size_t k = sigmas.size() - 1;
  const double s1 = sigmas[k - 1];
  const double s2 = sigmas[k];
  r.extrapolated = (s1 * r.estimates[k] - s2 * r.estimates[k - 1]) / (s1 - s2);

  // Odd sections of Q have the exact eigenvalue 0; bisection returns it to
  // rounding, so this is the bottom of the spectrum of Q^2 as seen numerically.
  const unsigned odd = 201;
  const double mid = kth_eigenvalue(jacobi_matrix(odd, s).tridiag(), odd / 2);
  r.q2_floor = mid * mid;
  r.infimum = r.extrapolated + r.q2_floor;

  // Finite sections: min eigenvalue approaches the infimum like 1/N.
  for (std::size_t n : {1000u, 2000u, 4000u, 8000u}) {
    r.section_dims.push_back(n);
    r.section_minima.push_back(min_section_eigenvalue(s, n));
  }
  const std::size_t m = r.section_minima.size();
  r.spectral_extrapolated = 2.0 * r.section_minima[m - 1] - r.section_minima[m - 2];
  return r;
}

std::vector<SpectrumRow> spectrum_compare(const std::vector<unsigned>& s_list, std::size_t n) {
  if (n < 3) throw std::invalid_argument("spectrum_compare: N must be >= 3");
  std::vector<SpectrumRow> rows;
  for (unsigned s : s_list) {
    const auto ah = build_AH(s, n);
    const auto hh = build_Hhat(s, n);
    std::vector<Rational> ah_levels;
    std::vector<Rational> hh_levels;
    for (std::size_t k = 0; k < n; ++k) {
      ah_levels.push_back(ah.exact->at(k, k).as_rational());
      hh_levels.push_back(hh.exact->at(k, k).as_rational());
    }
    std::sort(ah_levels.begin(), ah_levels.end());
    std::sort(hh_levels.begin(), hh_levels.end());

    SpectrumRow row;
    row.s = s;
    row.ah_ground = to_double(ah_levels[0]);
    row.hhat_ground = to_double(hh_levels[0]);
    row.ah_first_gap = to_double(ah_levels[1] - ah_levels[0]);
    row.hhat_first_gap = to_double(hh_levels[1] - hh_levels[0]);
    row.hhat_upper_gap = to_double(hh_levels[2] - hh_levels[1]);
    row.ground_shift = to_double(ah_levels[0] - hh_levels[0]);
    row.constant_shift = true;
    for (std::size_t k = 1; k < n; ++k) {
      if (ah_levels[k] - hh_levels[k] != ah_levels[0] - hh_levels[0]) row.constant_shift = false;
    }
    const InfimumScan scan = infimum_scan(s);
    row.infimum = scan.infimum;
    // The potential part A_H - P^2/2 = Q^2/2 + (s+1/2) 1 + (s/2) P_0 has the
    // same infimum as A_{q^2}.
    row.zero_point_cs = row.ah_ground - row.infimum;
    row.zero_point_canonical = row.hhat_ground;
    row.equivalent = row.constant_shift && std::fabs(row.zero_point_cs - row.zero_point_canonical) <= 1e-3;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace hermq
