// hermquant: command-line front end for the library.
//
// Exit codes: 0 ok, 1 verification failure, 2 domain/argument error, 3 I/O error.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hermquant/basis.hpp"
#include "hermquant/errors.hpp"
#include "hermquant/export.hpp"
#include "hermquant/operators.hpp"
#include "hermquant/physics.hpp"
#include "hermquant/quantize.hpp"
#include "hermquant/specfun.hpp"
#include "hermquant/spectral.hpp"
#include "hermquant/verify.hpp"

using namespace hermq;
using json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kDomain = 2;
constexpr int kIo = 3;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Global {
  std::string format = "json";
  std::string out;
  double tol = 0.0;  // 0: use per-command default
  std::size_t dim = 0;
  std::uint64_t seed = VerifyOptions{}.seed;

  Format fmt() const { return format == "csv" ? Format::Csv : Format::Json; }
};

Complex complex_arg(const std::string& text, const char* name) {
  const auto z = parse_complex(text);
  if (!z) throw std::invalid_argument(std::string(name) + ": expected a+bi, got '" + text + "'");
  return *z;
}

Sector sector_arg(const std::string& text) {
  if (text == "L") return Sector::L;
  if (text == "R") return Sector::R;
  throw std::invalid_argument("sector must be L or R");
}

std::vector<unsigned> list_arg(const std::string& text) {
  // "0,1,2" or "0..4"
  std::vector<unsigned> out;
  const auto dots = text.find("..");
  if (dots != std::string::npos) {
    const unsigned lo = std::stoul(text.substr(0, dots));
    const unsigned hi = std::stoul(text.substr(dots + 2));
    if (hi < lo) throw std::invalid_argument("empty range '" + text + "'");
    for (unsigned k = lo; k <= hi; ++k) out.push_back(k);
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoul(item));
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

unsigned thread_cap() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("HERMQUANT_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(v));
  }
  return n;
}

json complex_json(Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

json poly_json(const PolyExact& p) {
  json c = json::array();
  for (const auto& q : p.coeffs()) c.push_back(to_string(q));
  return c;
}

void poly_csv(std::ostream& os, const PolyExact& p) {
  os << "degree,coefficient\n";
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) os << k << "," << to_string(p.coeffs()[k]) << "\n";
}

// Single record: JSON object, or two-line CSV (keys, values).
void write_record(std::ostream& os, const std::vector<std::pair<std::string, Cell>>& kv, Format f) {
  Table t;
  std::vector<Cell> row;
  for (const auto& [k, v] : kv) {
    t.columns.push_back(k);
    row.push_back(v);
  }
  if (f == Format::Csv) {
    t.rows.push_back(row);
    write_table(os, t, f);
    return;
  }
  json obj = json::object();
  for (const auto& [k, v] : kv) {
    obj[k] = std::visit(
        [](const auto& x) -> json {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, Complex>) {
            return complex_json(x);
          } else if constexpr (std::is_same_v<T, double>) {
            return std::isfinite(x) ? json(x) : json(nullptr);
          } else {
            return x;
          }
        },
        v);
  }
  os << obj.dump(2) << "\n";
}

TruncatedOperator named_operator(const std::string& name, unsigned s, std::size_t n, Sector e) {
  if (name == "Az") return build_A_z(s, n, e);
  if (name == "Azbar") return build_A_zbar(s, n, e);
  if (name == "Q") return build_Q(s, n, e);
  if (name == "P") return build_P(s, n, e);
  if (name == "Aq2") return build_Aq2(s, n);
  if (name == "Ap2") return build_Ap2(s, n);
  if (name == "AH") return build_AH(s, n);
  if (name == "Hhat") return build_Hhat(s, n);
  throw std::invalid_argument("unknown operator '" + name + "' (Az, Azbar, Q, P, Aq2, Ap2, AH, Hhat)");
}

const std::vector<std::string> kOperatorNames = {"Az", "Azbar", "Q", "P", "Aq2", "Ap2", "AH", "Hhat"};

std::size_t dim_or(const Global& g, std::size_t fallback, std::size_t minimum = 1) {
  const std::size_t n = g.dim ? g.dim : fallback;
  if (n < minimum) throw std::invalid_argument("--dim must be >= " + std::to_string(minimum));
  return n;
}

PhysicalParams physical_params(const std::map<std::string, double>& v, bool compton) {
  PhysicalParams p;
  p.m = v.at("m");
  p.omega = v.at("omega");
  p.hbar = v.at("hbar");
  p.c = v.at("c");
  if (compton) return PhysicalParams::compton(p.m, p.omega, p.hbar, p.c);
  p.ell = v.at("ell");
  p.validate();
  return p;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Complex Hermite polynomials, sector bases and coherent-state quantization"};
  app.fallthrough();
  app.require_subcommand(1);

  Global g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", g.out, "Write output to this file instead of stdout");
  app.add_option("--tol", g.tol, "Tolerance override")->check(CLI::PositiveNumber);
  app.add_option("--dim", g.dim, "Truncation order N");
  app.add_option("--seed", g.seed, "Seed for randomized point sampling");

  int status = kOk;
  std::function<void(std::ostream&)> action;

  // ---- poly
  auto* poly = app.add_subcommand("poly", "Polynomial evaluation and exact coefficients");
  poly->require_subcommand(1);
  struct {
    unsigned r = 0, s = 0, n = 0;
    std::string z = "0", s_rat = "0";
    double alpha = 0.0, x = 0.0;
    bool monic = false;
  } pa;
  auto* hermite = poly->add_subcommand("hermite", "h^{r,s}(z) by the double sum");
  hermite->add_option("--r", pa.r)->required();
  hermite->add_option("--s", pa.s)->required();
  hermite->add_option("--z", pa.z, "a+bi")->required();
  hermite->callback([&] {
    action = [&](std::ostream& os) {
      const Complex z = complex_arg(pa.z, "--z");
      write_record(os, {{"r", static_cast<long long>(pa.r)}, {"s", static_cast<long long>(pa.s)}, {"z", z},
                        {"value", complex_hermite(pa.r, pa.s, z)}},
                   g.fmt());
    };
  });
  auto* lag = poly->add_subcommand("laguerre", "L_n^{(alpha)}(x)");
  lag->add_option("--n", pa.n)->required();
  lag->add_option("--alpha", pa.alpha)->required();
  lag->add_option("--x", pa.x)->required();
  lag->callback([&] {
    action = [&](std::ostream& os) {
      write_record(os, {{"n", static_cast<long long>(pa.n)}, {"alpha", pa.alpha}, {"x", pa.x},
                        {"value", laguerre(pa.n, pa.alpha, pa.x)}},
                   g.fmt());
    };
  });
  auto* ah = poly->add_subcommand("assoc-hermite", "Exact coefficients of H_n(lambda; s), or the monic q_n");
  ah->add_option("--n", pa.n)->required();
  ah->add_option("--s", pa.s_rat, "Nonnegative rational, e.g. 1 or 3/2")->required();
  ah->add_flag("--monic", pa.monic, "Monic q_n = 2^-n H_n");
  ah->callback([&] {
    action = [&](std::ostream& os) {
      Rational s;
      try {
        s = Rational(pa.s_rat);
      } catch (const std::exception&) {
        throw std::invalid_argument("--s: not a rational number '" + pa.s_rat + "'");
      }
      if (s < 0) throw std::invalid_argument("--s must be >= 0");
      const PolyExact p = pa.monic ? monic_q(pa.n, s) : assoc_hermite(pa.n, s);
      if (g.fmt() == Format::Csv) {
        poly_csv(os, p);
      } else {
        os << json{{"n", pa.n}, {"s", to_string(s)}, {"monic", pa.monic}, {"coefficients", poly_json(p)}}.dump(2)
           << "\n";
      }
    };
  });

  // ---- basis
  auto* basis = app.add_subcommand("basis", "Sector basis functions, normalization and distributions");
  basis->require_subcommand(1);
  struct {
    unsigned n = 0, s = 0;
    std::string z = "0", sector = "L";
    double t = 1.0;
  } ba;
  auto* phi_cmd = basis->add_subcommand("phi", "phi^e_{n;s}(z)");
  phi_cmd->add_option("--n", ba.n)->required();
  phi_cmd->add_option("--s", ba.s)->required();
  phi_cmd->add_option("--z", ba.z)->required();
  phi_cmd->add_option("--sector", ba.sector)->check(CLI::IsMember({"L", "R"}));
  phi_cmd->callback([&] {
    action = [&](std::ostream& os) {
      const Complex z = complex_arg(ba.z, "--z");
      write_record(os, {{"sector", ba.sector}, {"n", static_cast<long long>(ba.n)},
                        {"s", static_cast<long long>(ba.s)}, {"z", z},
                        {"value", phi(sector_arg(ba.sector), ba.n, ba.s, z)}},
                   g.fmt());
    };
  });
  auto* norm = basis->add_subcommand("norm", "N_s(t): closed form and series");
  norm->add_option("--s", ba.s)->required();
  norm->add_option("--t", ba.t)->required()->check(CLI::PositiveNumber);
  norm->callback([&] {
    action = [&](std::ostream& os) {
      write_record(os, {{"s", static_cast<long long>(ba.s)}, {"t", ba.t},
                        {"closed_form", normalization(ba.s, ba.t)},
                        {"series", normalization_series(ba.s, ba.t)},
                        {"scaled", scaled_normalization(ba.s, ba.t)}},
                   g.fmt());
    };
  });
  auto* dist = basis->add_subcommand("dist", "Gamma-like density and Poisson-like mass at (n, s, t)");
  dist->add_option("--n", ba.n)->required();
  dist->add_option("--s", ba.s)->required();
  dist->add_option("--t", ba.t)->required()->check(CLI::PositiveNumber);
  dist->callback([&] {
    action = [&](std::ostream& os) {
      write_record(os, {{"n", static_cast<long long>(ba.n)}, {"s", static_cast<long long>(ba.s)}, {"t", ba.t},
                        {"pdf", gamma_like_pdf(ba.n, ba.s, ba.t)},
                        {"pmf", poisson_like_pmf(ba.n, ba.s, ba.t)}},
                   g.fmt());
    };
  });

  // ---- kernel
  auto* kern = app.add_subcommand("kernel", "Reproducing kernel K^e_s(z, zbar')");
  struct {
    unsigned s = 0;
    std::string z = "0", zp = "0", sector = "L";
  } ka;
  kern->add_option("--s", ka.s)->required();
  kern->add_option("--z", ka.z)->required();
  kern->add_option("--zp", ka.zp, "z'")->required();
  kern->add_option("--sector", ka.sector)->check(CLI::IsMember({"L", "R"}));
  kern->callback([&] {
    action = [&](std::ostream& os) {
      const Complex z = complex_arg(ka.z, "--z");
      const Complex zp = complex_arg(ka.zp, "--zp");
      const Sector e = sector_arg(ka.sector);
      const KernelValue k = g.tol > 0 ? kernel(ka.s, z, zp, e, g.tol) : kernel(ka.s, z, zp, e);
      std::vector<std::pair<std::string, Cell>> kv{{"s", static_cast<long long>(ka.s)},
                                                   {"sector", ka.sector},
                                                   {"z", z},
                                                   {"zp", zp},
                                                   {"value", k.value},
                                                   {"truncation_n", static_cast<long long>(k.truncation_n)},
                                                   {"est_tail", k.est_tail}};
      if (ka.s <= 1 && e == Sector::L) {
        kv.emplace_back("closed_form", ka.s == 0 ? kernel_closed_s0(z, zp) : kernel_closed_s1(z, zp));
      }
      write_record(os, kv, g.fmt());
    };
  });

  // ---- quantize
  auto* quant = app.add_subcommand("quantize", "Matrix of A_{z^a zbar^b} on the first N basis vectors");
  struct {
    unsigned a = 0, b = 0, s = 0;
    std::string sector = "L";
    bool numeric = false;
  } qa;
  quant->add_option("--a", qa.a, "Power of z")->required();
  quant->add_option("--b", qa.b, "Power of zbar")->required();
  quant->add_option("--s", qa.s)->required();
  quant->add_option("--sector", qa.sector)->check(CLI::IsMember({"L", "R"}));
  quant->add_flag("--numeric", qa.numeric, "Phase-space quadrature instead of the closed form");
  quant->callback([&] {
    action = [&](std::ostream& os) {
      const std::size_t n = dim_or(g, 8);
      const Sector e = sector_arg(qa.sector);
      TruncatedOperator op;
      if (qa.numeric) {
        const PhaseSpaceFunction f = Monomial{qa.a, qa.b};
        op = quantize_numeric(f, qa.s, e, n, quantization_rule(f, qa.s, n));
      } else {
        op = quantize_monomial_closed(qa.a, qa.b, qa.s, e, n);
      }
      write_operator(os, op, g.fmt());
    };
  });

  // ---- spectrum
  auto* spec = app.add_subcommand("spectrum", "Associated Hermite spectra, spectral measure and A_H vs H_hat");
  spec->require_subcommand(1);
  struct {
    unsigned n = 10, s = 0, terms = 10000;
    std::string s_list = "0..4";
    double threshold = 0.0;
  } sa;
  auto* eig = spec->add_subcommand("eigen", "Eigenvalues of the N x N Jacobi matrix (zeros of q_N)");
  eig->add_option("--s", sa.s)->required();
  eig->callback([&] {
    action = [&](std::ostream& os) {
      const auto ev = eigenvalues(static_cast<unsigned>(dim_or(g, 10)), sa.s);
      Table t;
      t.columns = {"k", "eigenvalue"};
      for (std::size_t k = 0; k < ev.size(); ++k) t.rows.push_back({static_cast<long long>(k), ev[k]});
      write_table(os, t, g.fmt());
    };
  });
  auto* gw = spec->add_subcommand("measure", "Golub-Welsch nodes and weights of the spectral measure");
  gw->add_option("--s", sa.s)->required();
  gw->callback([&] {
    action = [&](std::ostream& os) {
      const auto m = golub_welsch(sa.s, static_cast<unsigned>(dim_or(g, 40)));
      Table t;
      t.columns = {"node", "weight"};
      for (std::size_t k = 0; k < m.nodes.size(); ++k) t.rows.push_back({m.nodes[k], m.weights[k]});
      write_table(os, t, g.fmt());
    };
  });
  auto* cp = spec->add_subcommand("charpoly", "Exact characteristic polynomial of the N x N Jacobi matrix");
  cp->add_option("--s", sa.s)->required();
  cp->callback([&] {
    action = [&](std::ostream& os) {
      const unsigned n = static_cast<unsigned>(dim_or(g, 10));
      const PolyExact p = char_poly(n, sa.s);
      if (g.fmt() == Format::Csv) {
        poly_csv(os, p);
      } else {
        os << json{{"n", n}, {"s", sa.s}, {"coefficients", poly_json(p)}}.dump(2) << "\n";
      }
    };
  });
  auto* div = spec->add_subcommand("divergence", "Partial sums of 1/c_k (self-adjointness criterion)");
  div->add_option("--s", sa.s)->required();
  div->add_option("--terms", sa.terms);
  div->add_option("--threshold", sa.threshold);
  div->callback([&] {
    action = [&](std::ostream& os) {
      const auto r = selfadjointness_divergence_test(sa.s, sa.terms, sa.threshold);
      Table t;
      t.columns = {"terms", "partial_sum", "rate_ratio"};
      for (std::size_t k = 0; k < r.checkpoints.size(); ++k) {
        t.rows.push_back({static_cast<long long>(r.checkpoints[k]), r.partial_sums[k], r.rate_ratio[k]});
      }
      if (g.fmt() == Format::Csv) {
        write_table(os, t, g.fmt());
      } else {
        json rows = json::array();
        for (std::size_t k = 0; k < r.checkpoints.size(); ++k) {
          rows.push_back({{"terms", r.checkpoints[k]}, {"partial_sum", r.partial_sums[k]},
                          {"rate_ratio", r.rate_ratio[k]}});
        }
        os << json{{"s", r.s},
                   {"monotone", r.monotone},
                   {"threshold", r.threshold},
                   {"exceeds_threshold", r.exceeds_threshold},
                   {"checkpoints", rows}}
                  .dump(2)
           << "\n";
      }
    };
  });
  auto* inf = spec->add_subcommand("infimum", "Lower-symbol infimum scan of A_{q^2}");
  inf->add_option("--s", sa.s)->required();
  inf->callback([&] {
    action = [&](std::ostream& os) {
      const InfimumScan r = infimum_scan(sa.s);
      Table t;
      t.columns = {"sigma", "cs_dim", "lower_symbol", "q2_expectation", "estimate"};
      for (std::size_t k = 0; k < r.sigmas.size(); ++k) {
        t.rows.push_back({r.sigmas[k], static_cast<long long>(r.cs_dims[k]), r.lower_symbols[k],
                          r.q2_expectations[k], r.estimates[k]});
      }
      if (g.fmt() == Format::Csv) {
        write_table(os, t, g.fmt());
        return;
      }
      json scan = json::array();
      for (std::size_t k = 0; k < r.sigmas.size(); ++k) {
        scan.push_back({{"sigma", r.sigmas[k]}, {"cs_dim", r.cs_dims[k]}, {"lower_symbol", r.lower_symbols[k]},
                        {"q2_expectation", r.q2_expectations[k]}, {"estimate", r.estimates[k]}});
      }
      json sections = json::array();
      for (std::size_t k = 0; k < r.section_dims.size(); ++k) {
        sections.push_back({{"dim", r.section_dims[k]}, {"min_eigenvalue", r.section_minima[k]}});
      }
      os << json{{"s", r.s},
                 {"infimum", r.infimum},
                 {"extrapolated", r.extrapolated},
                 {"q2_floor", r.q2_floor},
                 {"spectral_extrapolated", r.spectral_extrapolated},
                 {"scan", scan},
                 {"sections", sections}}
                .dump(2)
         << "\n";
    };
  });
  auto* cmp = spec->add_subcommand("compare", "A_H against H_hat: grounds, gaps, zero points");
  cmp->add_option("--s-list", sa.s_list, "e.g. 0..4 or 0,2,3");
  cmp->callback([&] {
    action = [&](std::ostream& os) {
      write_table(os, spectrum_table(spectrum_compare(list_arg(sa.s_list), dim_or(g, 20, 3))), g.fmt());
    };
  });

  // ---- physics
  auto* phys = app.add_subcommand("physics", "Dimensionful oscillator quantization");
  phys->require_subcommand(1);
  std::map<std::string, double> pv{{"m", 9.1093837015e-31}, {"omega", 3e15}, {"hbar", 1.054571817e-34},
                                   {"c", 299792458.0}, {"ell", 0.0}};
  struct {
    unsigned s = 0;
    double q = 0.0, p = 0.0;
  } xa;
  auto add_params = [&](CLI::App* sub) {
    sub->add_option("--m", pv["m"], "Mass (kg)");
    sub->add_option("--omega", pv["omega"], "Angular frequency (1/s)");
    sub->add_option("--hbar", pv["hbar"], "Reduced Planck constant (J s)");
    sub->add_option("--c", pv["c"], "Speed of light (m/s)");
    sub->add_option("--ell", pv["ell"], "Length scale (m); default: Compton choice hbar/(2mc)");
  };
  auto params = [&] { return physical_params(pv, pv["ell"] == 0.0); };
  auto* gam = phys->add_subcommand("gamma", "Ratio gamma = hbar omega / (16 m c^2) and internal energies");
  add_params(gam);
  gam->callback([&] {
    action = [&](std::ostream& os) {
      const PhysicalParams p = params();
      write_record(os, {{"m", p.m}, {"omega", p.omega}, {"ell", p.ell}, {"gamma", gamma_ratio(p)},
                        {"kinetic_internal_energy", kinetic_internal_energy(p)},
                        {"internal_energy_factor", internal_energy_factor(p)},
                        {"mc2", p.m * p.c * p.c}, {"hbar_omega", p.hbar * p.omega}},
                   g.fmt());
    };
  });
  auto* lev = phys->add_subcommand("levels", "Levels and gaps of A_H in SI units");
  add_params(lev);
  lev->add_option("--s", xa.s)->required();
  lev->callback([&] {
    action = [&](std::ostream& os) {
      const auto h = build_physical_AH(params(), xa.s, dim_or(g, 20, 3));
      Table t;
      t.columns = {"k", "energy", "gap_to_next"};
      for (std::size_t k = 0; k < h.levels.size(); ++k) {
        t.rows.push_back({static_cast<long long>(k), h.levels[k],
                          k < h.gaps.size() ? h.gaps[k] : std::numeric_limits<double>::quiet_NaN()});
      }
      write_table(os, t, g.fmt());
    };
  });
  auto* zeta = phys->add_subcommand("zeta", "Phase-space point (q, p) to z");
  add_params(zeta);
  zeta->add_option("--q", xa.q, "Position (m)")->required();
  zeta->add_option("--p", xa.p, "Momentum (kg m/s)")->required();
  zeta->callback([&] {
    action = [&](std::ostream& os) {
      const PhysicalParams p = params();
      write_record(os, {{"q", xa.q}, {"p", xa.p}, {"ell", p.ell}, {"z", zeta_map(p, xa.q, xa.p)}}, g.fmt());
    };
  });

  // ---- verify
  auto* ver = app.add_subcommand("verify", "Run identity sweeps; exit 1 if any check fails");
  struct {
    std::string suite = "all";
    double tol_exact = 0.0;
    double tol_reproduction = VerifyOptions{}.tol_reproduction;
  } va;
  ver->add_option("--suite", va.suite)
      ->check(CLI::IsMember({"all", "basis", "ladder", "nlpb", "quantize", "spectral", "physics"}));
  ver->add_option("--tol-exact", va.tol_exact, "Tolerance for exact-arithmetic checks")
      ->check(CLI::NonNegativeNumber);
  ver->add_option("--tol-reproduction", va.tol_reproduction, "Tolerance for 2D reproduction checks")
      ->check(CLI::PositiveNumber);
  ver->callback([&] {
    action = [&](std::ostream& os) {
      VerifyOptions o;
      if (g.tol > 0) o.tol_quadrature = g.tol;
      o.tol_exact = va.tol_exact;
      o.tol_reproduction = va.tol_reproduction;
      o.seed = g.seed;
      o.threads = thread_cap();
      const Report rep = run_suite(*parse_suite(va.suite), o);
      write_report(os, rep, g.fmt());
      std::size_t failed = 0;
      for (const auto& c : rep.checks) {
        if (!c.pass) {
          ++failed;
          std::cerr << "FAIL [" << c.suite << "] " << c.identity << ": residual " << c.max_residual << " > "
                    << c.tolerance << " at " << c.witness << "\n";
        }
      }
      std::cerr << rep.checks.size() - failed << "/" << rep.checks.size() << " checks passed\n";
      if (failed) status = kVerifyFailed;
    };
  });

  // ---- export
  auto* exp = app.add_subcommand("export", "Plot-ready data files");
  exp->require_subcommand(1);
  struct {
    std::string name = "Q", sector = "L", z = "0", s_list = "0..4";
    unsigned s = 0;
    GridSpec grid;
  } ea;
  auto add_grid = [&](CLI::App* sub) {
    sub->add_option("--lo", ea.grid.lo, "Grid lower bound (both axes)");
    sub->add_option("--hi", ea.grid.hi, "Grid upper bound (both axes)");
    sub->add_option("--points", ea.grid.points, "Points per axis")->check(CLI::PositiveNumber);
  };
  auto* eop = exp->add_subcommand("operator", "Matrix of a named operator");
  eop->add_option("--name", ea.name)->check(CLI::IsMember(kOperatorNames));
  eop->add_option("--s", ea.s)->required();
  eop->add_option("--sector", ea.sector)->check(CLI::IsMember({"L", "R"}));
  eop->callback([&] {
    action = [&](std::ostream& os) {
      write_operator(os, named_operator(ea.name, ea.s, dim_or(g, 10), sector_arg(ea.sector)), g.fmt());
    };
  });
  auto* ekg = exp->add_subcommand("kernel-grid", "K^e_s(z, zbar') over a grid of z', z fixed");
  ekg->add_option("--s", ea.s)->required();
  ekg->add_option("--z", ea.z, "Fixed first argument");
  ekg->add_option("--sector", ea.sector)->check(CLI::IsMember({"L", "R"}));
  add_grid(ekg);
  ekg->callback([&] {
    action = [&](std::ostream& os) {
      write_table(os, kernel_grid(ea.s, complex_arg(ea.z, "--z"), ea.grid, sector_arg(ea.sector)), g.fmt());
    };
  });
  auto* els = exp->add_subcommand("lower-symbol-scan", "<z|A|z> of a named operator over a grid");
  els->add_option("--name", ea.name)->check(CLI::IsMember(kOperatorNames));
  els->add_option("--s", ea.s)->required();
  els->add_option("--sector", ea.sector)->check(CLI::IsMember({"L", "R"}));
  add_grid(els);
  els->callback([&] {
    action = [&](std::ostream& os) {
      const auto op = named_operator(ea.name, ea.s, dim_or(g, 80), sector_arg(ea.sector));
      write_table(os, lower_symbol_scan(op, ea.grid, g.tol > 0 ? g.tol : 1e-14), g.fmt());
    };
  });
  auto* est = exp->add_subcommand("spectrum-table", "Spectrum comparison table");
  est->add_option("--s-list", ea.s_list, "e.g. 0..4 or 0,2,3");
  est->callback([&] {
    action = [&](std::ostream& os) {
      write_table(os, spectrum_table(spectrum_compare(list_arg(ea.s_list), dim_or(g, 20, 3))), g.fmt());
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kDomain;
  }

  try {
    std::ostringstream buf;
    action(buf);
    if (g.out.empty()) {
      std::cout << buf.str();
      std::cout.flush();
      if (!std::cout) throw IoError("cannot write to stdout");
    } else {
      std::ofstream f(g.out, std::ios::binary);
      if (!f) throw IoError("cannot open '" + g.out + "' for writing");
      f << buf.str();
      f.close();
      if (!f) throw IoError("write to '" + g.out + "' failed");
    }
  } catch (const IoError& e) {
    std::cerr << "hermquant: " << e.what() << "\n";
    return kIo;
  } catch (const std::exception& e) {
    // PoleError, TailError, IndexError, HintViolation, NonConvergence and bad arguments.
    std::cerr << "hermquant: " << e.what() << "\n";
    return kDomain;
  }
  return status;
}
