#include "hermquant/ladder.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace hermq {

using Kind = SectorIndex::Kind;

SectorIndex SectorIndex::lstar(unsigned n, unsigned s) {
  if (n == 0) throw IndexError("Lstar index needs n >= 1");
  return {Kind::Lstar, n, s};
}

SectorIndex SectorIndex::rstar(unsigned n, unsigned s) {
  if (n == 0) throw IndexError("Rstar index needs n >= 1");
  return {Kind::Rstar, n, s};
}

SectorIndex SectorIndex::ground(unsigned s) { return {Kind::G, 0, s}; }

SectorIndex SectorIndex::basis(Sector e, unsigned n, unsigned s) {
  if (n == 0) return ground(s);
  return e == Sector::L ? lstar(n, s) : rstar(n, s);
}

std::string SectorIndex::str() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Lstar: os << "phiL(n=" << n << ",s=" << s << ")"; break;
    case Kind::Rstar: os << "phiR(n=" << n << ",s=" << s << ")"; break;
    case Kind::G: os << "phi0(s=" << s << ")"; break;
  }
  return os.str();
}

// ---------------------------------------------------------------------------

WeightedIndexSum::WeightedIndexSum(const SectorIndex& idx, const Surd& c) { add(idx, c); }

Surd WeightedIndexSum::coeff(const SectorIndex& idx) const {
  auto it = terms_.find(idx);
  return it == terms_.end() ? Surd() : it->second;
}

void WeightedIndexSum::add(const SectorIndex& idx, const Surd& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(idx);
  if (it == terms_.end()) {
    terms_.emplace(idx, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

WeightedIndexSum& WeightedIndexSum::operator+=(const WeightedIndexSum& o) {
  for (const auto& [i, c] : o.terms_) add(i, c);
  return *this;
}

WeightedIndexSum& WeightedIndexSum::operator-=(const WeightedIndexSum& o) {
  for (const auto& [i, c] : o.terms_) add(i, -c);
  return *this;
}

WeightedIndexSum operator*(const Surd& c, const WeightedIndexSum& v) {
  WeightedIndexSum out;
  for (const auto& [i, x] : v.terms_) out.add(i, c * x);
  return out;
}

double WeightedIndexSum::max_abs() const {
  double m = 0.0;
  for (const auto& [i, c] : terms_) m = std::max(m, abs_value(c));
  return m;
}

std::string WeightedIndexSum::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.str() << " " << i.str();
  }
  return os.str();
}

// ---------------------------------------------------------------------------

const char* ladder_name(Ladder which) {
  switch (which) {
    case Ladder::AL: return "A^L";
    case Ladder::ALdag: return "A^L+";
    case Ladder::AR: return "A^R";
    case Ladder::ARdag: return "A^R+";
  }
  return "?";
}

namespace {

Surd root(unsigned k) { return Surd::sqrt(Rational(k)); }

// Lowering within its own sector: A^L on phi^L, A^R on phi^R.
WeightedIndexSum own_lower(Sector e, const SectorIndex& idx) {
  return WeightedIndexSum(SectorIndex::basis(e, idx.n - 1, idx.s), root(idx.s + idx.n));
}

// Raising within its own sector, from phi^e_{n;s} (n may be 0).
WeightedIndexSum own_raise(Sector e, unsigned n, unsigned s) {
  return WeightedIndexSum(SectorIndex::basis(e, n + 1, s), root(s + n + 1));
}

// A^R on phi^L_{n;s} (and mirror): sqrt(s) phi^L_{n+1;s-1}.
WeightedIndexSum cross_lower(Sector e, unsigned n, unsigned s) {
  if (s == 0) return {};
  return WeightedIndexSum(SectorIndex::basis(e, n + 1, s - 1), root(s));
}

// A^{R dag} on phi^L_{n;s}, n >= 1 (and mirror): sqrt(s+1) phi^L_{n-1;s+1}.
WeightedIndexSum cross_raise(Sector e, unsigned n, unsigned s) {
  return WeightedIndexSum(SectorIndex::basis(e, n - 1, s + 1), root(s + 1));
}

}  // namespace

WeightedIndexSum ladder_apply(Ladder which, const SectorIndex& idx) {
  const bool left_op = which == Ladder::AL || which == Ladder::ALdag;
  const bool raising = which == Ladder::ALdag || which == Ladder::ARdag;
  const Sector own = left_op ? Sector::L : Sector::R;
  const Sector other = mirror(own);

  if (idx.kind == Kind::G) {
    // phi_{0;s} belongs to both sectors.
    if (raising) return own_raise(own, 0, idx.s);
    // A^L phi_{0;s} = sqrt(s) phi^R_{1;s-1},  A^R phi_{0;s} = sqrt(s) phi^L_{1;s-1}
    return cross_lower(other, 0, idx.s);
  }
  const Sector idx_sector = idx.kind == Kind::Lstar ? Sector::L : Sector::R;
  if (idx_sector == own) return raising ? own_raise(own, idx.n, idx.s) : own_lower(own, idx);
  return raising ? cross_raise(other, idx.n, idx.s) : cross_lower(other, idx.n, idx.s);
}

// ---------------------------------------------------------------------------

IndexOp IndexOp::identity() {
  return IndexOp([](const SectorIndex& i) { return WeightedIndexSum(i); });
}

IndexOp IndexOp::ladder(Ladder which) {
  return IndexOp([which](const SectorIndex& i) { return ladder_apply(which, i); });
}

IndexOp IndexOp::mirror() {
  return IndexOp([](const SectorIndex& i) {
    SectorIndex j = i;
    if (i.kind == Kind::Lstar) j.kind = Kind::Rstar;
    if (i.kind == Kind::Rstar) j.kind = Kind::Lstar;
    return WeightedIndexSum(j);
  });
}

IndexOp IndexOp::number_L() { return ladder(Ladder::ALdag) * ladder(Ladder::AL); }
IndexOp IndexOp::number_R() { return ladder(Ladder::ARdag) * ladder(Ladder::AR); }

IndexOp IndexOp::scalar(const Surd& c) {
  return IndexOp([c](const SectorIndex& i) { return WeightedIndexSum(i, c); });
}

WeightedIndexSum IndexOp::operator()(const WeightedIndexSum& v) const {
  WeightedIndexSum out;
  for (const auto& [i, c] : v.terms()) out += c * f_(i);
  return out;
}

IndexOp operator*(const IndexOp& a, const IndexOp& b) {
  return IndexOp([a, b](const SectorIndex& i) { return a(b(i)); });
}

IndexOp operator+(const IndexOp& a, const IndexOp& b) {
  return IndexOp([a, b](const SectorIndex& i) { return a(i) + b(i); });
}

IndexOp operator-(const IndexOp& a, const IndexOp& b) {
  return IndexOp([a, b](const SectorIndex& i) { return a(i) - b(i); });
}

IndexOp commutator(const IndexOp& a, const IndexOp& b) { return a * b - b * a; }

std::vector<SectorIndex> index_grid(unsigned n_max, unsigned s_max) {
  std::vector<SectorIndex> out;
  for (unsigned s = 0; s <= s_max; ++s) {
    out.push_back(SectorIndex::ground(s));
    for (unsigned n = 1; n <= n_max; ++n) {
      out.push_back(SectorIndex::lstar(n, s));
      out.push_back(SectorIndex::rstar(n, s));
    }
  }
  return out;
}

BandedMatrix<Surd> sector_matrix(const IndexOp& op, Sector e, unsigned s, std::size_t n) {
  BandedMatrix<Surd> m(n);
  for (std::size_t k = 0; k < n; ++k) {
    const WeightedIndexSum col = op(SectorIndex::basis(e, static_cast<unsigned>(k), s));
    for (std::size_t j = 0; j < n; ++j) {
      const Surd c = col.coeff(SectorIndex::basis(e, static_cast<unsigned>(j), s));
      if (!c.is_zero()) m.set(j, k, c);
    }
  }
  return m;
}

// ---------------------------------------------------------------------------

namespace {

void observe_sum(CheckBuilder& cb, const WeightedIndexSum& diff, const std::string& witness) {
  double r = 0.0;
  if (!diff.empty()) r = std::max(diff.max_abs(), std::numeric_limits<double>::denorm_min());
  cb.observe(r, witness);
}

// Check op(x) == expected(x) on every index of the grid.
IdentityCheck check_on(const std::string& suite, const std::string& identity, const std::string& relation,
                       const std::vector<SectorIndex>& grid, const IndexOp& lhs, const IndexOp& rhs) {
  CheckBuilder cb(suite, identity, relation, 0.0);
  for (const auto& idx : grid) observe_sum(cb, lhs(idx) - rhs(idx), idx.str());
  return cb.finish();
}

bool valid_index(const SectorIndex& i) { return i.kind == Kind::G ? i.n == 0 : i.n >= 1; }

}  // namespace

Report verify_commutators_full(unsigned n_max, unsigned s_max) {
  const std::string suite = "ladder";
  const auto grid = index_grid(n_max, s_max);
  const IndexOp AL = IndexOp::ladder(Ladder::AL);
  const IndexOp ALd = IndexOp::ladder(Ladder::ALdag);
  const IndexOp AR = IndexOp::ladder(Ladder::AR);
  const IndexOp ARd = IndexOp::ladder(Ladder::ARdag);
  const IndexOp J = IndexOp::mirror();
  const IndexOp NL = IndexOp::number_L();
  const IndexOp NR = IndexOp::number_R();
  const IndexOp one = IndexOp::identity();
  const IndexOp zero = IndexOp::scalar(Surd());

  Report rep;
  rep.checks.push_back(check_on(suite, "[A^L, A^L+] = 1", "index-space composition", grid, commutator(AL, ALd), one));
  rep.checks.push_back(check_on(suite, "[A^R, A^R+] = 1", "index-space composition", grid, commutator(AR, ARd), one));
  rep.checks.push_back(check_on(suite, "[A^L, A^R] = 0", "mixed commutator", grid, commutator(AL, AR), zero));
  rep.checks.push_back(check_on(suite, "[A^L, A^R+] = 0", "mixed commutator", grid, commutator(AL, ARd), zero));
  rep.checks.push_back(check_on(suite, "[A^L+, A^R] = 0", "mixed commutator", grid, commutator(ALd, AR), zero));
  rep.checks.push_back(check_on(suite, "[A^L+, A^R+] = 0", "mixed commutator", grid, commutator(ALd, ARd), zero));
  rep.checks.push_back(check_on(suite, "[N^L, A^R] = 0", "number/ladder commutator", grid, commutator(NL, AR), zero));
  rep.checks.push_back(check_on(suite, "[N^L, A^R+] = 0", "number/ladder commutator", grid, commutator(NL, ARd), zero));
  rep.checks.push_back(check_on(suite, "[N^R, A^L] = 0", "number/ladder commutator", grid, commutator(NR, AL), zero));
  rep.checks.push_back(check_on(suite, "[N^R, A^L+] = 0", "number/ladder commutator", grid, commutator(NR, ALd), zero));
  rep.checks.push_back(check_on(suite, "J^2 = 1", "mirror symmetry", grid, J * J, one));
  rep.checks.push_back(check_on(suite, "J A^L J = A^R", "mirror symmetry", grid, J * AL * J, AR));
  rep.checks.push_back(check_on(suite, "J A^L+ J = A^R+", "mirror symmetry", grid, J * ALd * J, ARd));

  {
    CheckBuilder nl(suite, "N^L phi^L_{n;s} = (n+s) phi^L_{n;s}", "eigenvalue", 0.0);
    CheckBuilder nr(suite, "N^R phi^R_{n;s} = (n+s) phi^R_{n;s}", "eigenvalue", 0.0);
    CheckBuilder jm(suite, "J phi^L_{n;s} = phi^R_{n;s}", "mirror symmetry", 0.0);
    CheckBuilder nc(suite, "A^L A^L+ phi^L_{n;s} = (n+s+1) phi^L_{n;s}", "norm consistency", 0.0);
    for (unsigned s = 0; s <= s_max; ++s) {
      for (unsigned n = 0; n <= n_max; ++n) {
        const auto l = SectorIndex::basis(Sector::L, n, s);
        const auto r = SectorIndex::basis(Sector::R, n, s);
        const Surd ev(static_cast<long long>(n + s));
        observe_sum(nl, NL(l) - WeightedIndexSum(l, ev), l.str());
        observe_sum(nr, NR(r) - WeightedIndexSum(r, ev), r.str());
        observe_sum(jm, J(l) - WeightedIndexSum(r), l.str());
        observe_sum(nc, AL(ALd(l)) - WeightedIndexSum(l, Surd(static_cast<long long>(n + s + 1))), l.str());
      }
    }
    rep.checks.push_back(nl.finish());
    rep.checks.push_back(nr.finish());
    rep.checks.push_back(jm.finish());
    rep.checks.push_back(nc.finish());
  }

  {
    CheckBuilder down(suite, "A^L A^R phi_{0;s} = s phi_{0;s-1}", "ground-state ladder", 0.0);
    CheckBuilder up(suite, "A^R+ A^L+ phi_{0;s} = (s+1) phi_{0;s+1}", "ground-state ladder", 0.0);
    CheckBuilder cross(suite, "A^L phi_{0;s} = sqrt(s) phi^R_{1;s-1}, A^R phi_{0;s} = sqrt(s) phi^L_{1;s-1}",
                       "ground-state ladder", 0.0);
    for (unsigned s = 0; s <= s_max; ++s) {
      const auto g = SectorIndex::ground(s);
      WeightedIndexSum want_down;
      WeightedIndexSum want_l;
      WeightedIndexSum want_r;
      if (s > 0) {
        want_down = WeightedIndexSum(SectorIndex::ground(s - 1), Surd(static_cast<long long>(s)));
        want_l = WeightedIndexSum(SectorIndex::rstar(1, s - 1), Surd::sqrt(Rational(s)));
        want_r = WeightedIndexSum(SectorIndex::lstar(1, s - 1), Surd::sqrt(Rational(s)));
      }
      observe_sum(down, AL(AR(g)) - want_down, g.str());
      observe_sum(up, ARd(ALd(g)) - WeightedIndexSum(SectorIndex::ground(s + 1), Surd(static_cast<long long>(s + 1))),
                  g.str());
      observe_sum(cross, (AL(g) - want_l) + (AR(g) - want_r), g.str());
    }
    rep.checks.push_back(down.finish());
    rep.checks.push_back(up.finish());
    rep.checks.push_back(cross.finish());
  }

  {
    CheckBuilder ann(suite, "A^R K^L_0 = 0 and A^L K^R_0 = 0", "annihilation", 0.0);
    for (unsigned n = 0; n <= n_max; ++n) {
      const auto l = SectorIndex::basis(Sector::L, n, 0);
      const auto r = SectorIndex::basis(Sector::R, n, 0);
      observe_sum(ann, AR(l) + AL(r), l.str());
    }
    rep.checks.push_back(ann.finish());
  }

  {
    // <x | A^+ y> = conj <y | A x> on the grid.
    CheckBuilder adj(suite, "A^L+ and A^R+ are the adjoints of A^L and A^R", "matrix elements", 0.0);
    for (const auto& [lower, upper] : {std::pair{AL, ALd}, std::pair{AR, ARd}}) {
      for (const auto& y : grid) {
        const WeightedIndexSum uy = upper(y);
        for (const auto& [x, c] : uy.terms()) observe_sum(adj, WeightedIndexSum(y, c - lower(x).coeff(y).conj()), x.str());
        const WeightedIndexSum ly = lower(y);
        for (const auto& [x, c] : ly.terms()) observe_sum(adj, WeightedIndexSum(y, c - upper(x).coeff(y).conj()), x.str());
      }
    }
    rep.checks.push_back(adj.finish());
  }

  {
    CheckBuilder book(suite, "ladder images are valid indices", "bookkeeping", 0.0);
    for (Ladder w : {Ladder::AL, Ladder::ALdag, Ladder::AR, Ladder::ARdag}) {
      for (const auto& idx : grid) {
        const WeightedIndexSum img = ladder_apply(w, idx);
        for (const auto& [j, c] : img.terms()) {
          book.observe_true(valid_index(j), std::string(ladder_name(w)) + " " + idx.str());
        }
      }
    }
    rep.checks.push_back(book.finish());
  }
  return rep;
}

Report nlpb_verify(unsigned n_max) {
  const std::string suite = "nlpb";
  const IndexOp AL = IndexOp::ladder(Ladder::AL);
  const IndexOp ALd = IndexOp::ladder(Ladder::ALdag);
  const IndexOp AR = IndexOp::ladder(Ladder::AR);
  const IndexOp ARd = IndexOp::ladder(Ladder::ARdag);
  const IndexOp NL = IndexOp::number_L();
  const IndexOp NR = IndexOp::number_R();

  const IndexOp a = AL * AR * NL;
  const IndexOp b = ARd * ALd;
  const IndexOp a_dag = NL * ARd * ALd;
  const IndexOp b_dag = AL * AR;
  const SectorIndex g0 = SectorIndex::ground(0);

  Report rep;
  {
    CheckBuilder p1(suite, "(p1) a Phi_0 = 0", "annihilation", 0.0);
    observe_sum(p1, a(g0), g0.str());
    rep.checks.push_back(p1.finish());
    CheckBuilder p2(suite, "(p2) b+ Psi_0 = 0", "annihilation", 0.0);
    observe_sum(p2, b_dag(g0), g0.str());
    rep.checks.push_back(p2.finish());
  }

  // Phi_n = b^n Phi_0 / sqrt(eps_n!) with eps_n! = (n!)^3, so Phi_n = phi_{0;n}/sqrt(n!)
  // amounts to b^n phi_{0;0} = n! phi_{0;n}; likewise Psi_n = sqrt(n!) phi_{0;n}
  // amounts to (a+)^n phi_{0;0} = (n!)^2 phi_{0;n}.
  {
    CheckBuilder phi_form(suite, "Phi_n = phi_{0;n}/sqrt(n!)", "b^n Phi_0 = n! phi_{0;n}", 0.0);
    CheckBuilder psi_form(suite, "Psi_n = sqrt(n!) phi_{0;n}", "(a+)^n Psi_0 = (n!)^2 phi_{0;n}", 0.0);
    WeightedIndexSum bn(g0);
    WeightedIndexSum adn(g0);
    BigInt fact = 1;
    for (unsigned n = 0; n <= n_max; ++n) {
      if (n > 0) {
        bn = b(bn);
        adn = a_dag(adn);
        fact *= n;
      }
      const auto gn = SectorIndex::ground(n);
      observe_sum(phi_form, bn - WeightedIndexSum(gn, Surd(Rational(fact))), gn.str());
      observe_sum(psi_form, adn - WeightedIndexSum(gn, Surd(Rational(fact * fact))), gn.str());
    }
    rep.checks.push_back(phi_form.finish());
    rep.checks.push_back(psi_form.finish());
  }

  // a Phi_n = sqrt(n^3) Phi_{n-1}: with Phi_n = phi_{0;n}/sqrt(n!) both sides
  // carry the factor 1/sqrt((n-1)!), which is divided out:
  //   a phi_{0;n} / sqrt(n) = n^{3/2} phi_{0;n-1}.
  // b+ Psi_n = sqrt(n^3) Psi_{n-1} with Psi_n = sqrt(n!) phi_{0;n}, dividing by sqrt((n-1)!):
  //   sqrt(n) b+ phi_{0;n} = n^{3/2} phi_{0;n-1}.
  {
    CheckBuilder p3a(suite, "(p3) a Phi_n = sqrt(eps_n) Phi_{n-1}", "eps_n = n^3", 0.0);
    CheckBuilder p3b(suite, "(p3) b+ Psi_n = sqrt(eps_n) Psi_{n-1}", "eps_n = n^3", 0.0);
    for (unsigned n = 1; n <= n_max; ++n) {
      const auto gn = SectorIndex::ground(n);
      const auto gm = SectorIndex::ground(n - 1);
      const Surd rn = Surd::sqrt(Rational(n));
      const Surd n32 = Surd::sqrt(Rational(static_cast<long long>(n) * n * n));
      observe_sum(p3a, rn.inverse() * a(gn) - WeightedIndexSum(gm, n32), gn.str());
      observe_sum(p3b, rn * b_dag(gn) - WeightedIndexSum(gm, n32), gn.str());
    }
    rep.checks.push_back(p3a.finish());
    rep.checks.push_back(p3b.finish());
  }

  {
    // M = ba and M+ = a+ b+ against N^R (N^L)^2 on the full index grid.
    const unsigned grid_n = std::min(n_max, 12u);
    const auto grid = index_grid(grid_n, grid_n);
    const IndexOp target = NR * NL * NL;
    rep.checks.push_back(check_on(suite, "M = ba = N^R (N^L)^2", "operator identity on index grid", grid, b * a, target));
    rep.checks.push_back(
        check_on(suite, "M+ = a+ b+ = N^R (N^L)^2", "operator identity on index grid", grid, a_dag * b_dag, target));
    CheckBuilder eig(suite, "M phi_{0;n} = n^3 phi_{0;n}", "eigenvalue", 0.0);
    for (unsigned n = 0; n <= n_max; ++n) {
      const auto gn = SectorIndex::ground(n);
      observe_sum(eig, b(a(gn)) - WeightedIndexSum(gn, Surd(static_cast<long long>(n) * n * n)), gn.str());
    }
    rep.checks.push_back(eig.finish());
  }

  {
    // ||Psi_n|| / ||Phi_n|| = n!: squared ratio of coefficients is (n!)^2.
    CheckBuilder riesz(suite, "||Psi_n|| / ||Phi_n|| = n!", "unbounded ratio (not a Riesz basis)", 0.0);
    BigInt fact = 1;
    for (unsigned n = 1; n <= n_max; ++n) {
      fact *= n;
      const Rational phi2 = Rational(1) / Rational(fact);  // |1/sqrt(n!)|^2
      const Rational psi2 = Rational(fact);                // |sqrt(n!)|^2
      riesz.observe_exact(Surd(psi2 / phi2 - Rational(fact * fact)), "n=" + std::to_string(n));
    }
    rep.checks.push_back(riesz.finish());
  }

  {
    // Finite sections of F_Phi and F_Psi are linearly independent: Phi_k and
    // Psi_k are nonzero multiples of distinct basis vectors.
    CheckBuilder indep(suite, "(p4) finite sections of F_Phi, F_Psi are independent", "finite-section check only", 0.0);
    std::map<SectorIndex, unsigned> seen;
    WeightedIndexSum bn(g0);
    for (unsigned n = 0; n <= n_max; ++n) {
      if (n > 0) bn = b(bn);
      const bool single = bn.size() == 1;
      const bool fresh = single && seen.emplace(bn.terms().begin()->first, n).second;
      indep.observe_true(single && fresh, "n=" + std::to_string(n));
    }
    rep.checks.push_back(indep.finish());
  }
  return rep;
}

Report dual_hamiltonian_verify(unsigned n_max, unsigned s) {
  const std::string suite = "nlpb";
  const IndexOp AL = IndexOp::ladder(Ladder::AL);
  const IndexOp ALd = IndexOp::ladder(Ladder::ALdag);
  const IndexOp J = IndexOp::mirror();
  const IndexOp NL = IndexOp::number_L();
  const IndexOp NR = IndexOp::number_R();
  const IndexOp one = IndexOp::identity();

  const IndexOp h1 = NR;
  const IndexOp x1 = J * ALd;
  const IndexOp x1_dag = AL * J;
  const IndexOp h2 = AL * ALd;
  const IndexOp zero = IndexOp::scalar(Surd());

  std::vector<SectorIndex> grid;
  grid.push_back(SectorIndex::ground(s));
  for (unsigned n = 1; n <= n_max; ++n) {
    grid.push_back(SectorIndex::lstar(n, s));
    grid.push_back(SectorIndex::rstar(n, s));
  }

  const std::string tag = " (s=" + std::to_string(s) + ")";
  Report rep;
  rep.checks.push_back(check_on(suite, "h2 = A^L A^L+ = N^L + 1" + tag, "index-space composition", grid, h2, NL + one));
  rep.checks.push_back(
      check_on(suite, "x1+ (x1 h2 - h1 x1) = 0" + tag, "index-space composition", grid, x1_dag * (x1 * h2 - h1 * x1), zero));
  rep.checks.push_back(check_on(suite, "[h2, x1+ x1] = 0" + tag, "index-space composition", grid, commutator(h2, x1_dag * x1), zero));
  rep.checks.push_back(check_on(suite, "[x1 x1+, h1] = 0" + tag, "index-space composition", grid, commutator(x1 * x1_dag, h1), zero));
  rep.checks.push_back(
      check_on(suite, "(x1+ x1) h2 = x1+ h1 x1" + tag, "h2 = N^{-1} x1+ h1 x1", grid, (x1_dag * x1) * h2, x1_dag * h1 * x1));

  {
    CheckBuilder inv(suite, "N = x1+ x1 is invertible" + tag, "diagonal with nonzero eigenvalues", 0.0);
    CheckBuilder herm(suite, "h2 = h2+" + tag, "matrix elements", 0.0);
    for (const auto& x : grid) {
      const WeightedIndexSum nx = (x1_dag * x1)(x);
      inv.observe_true(nx.size() == 1 && nx.terms().begin()->first == x, x.str());
      const WeightedIndexSum hx = h2(x);
      for (const auto& [y, c] : hx.terms()) observe_sum(herm, WeightedIndexSum(y, c - h2(y).coeff(x).conj()), x.str());
    }
    rep.checks.push_back(inv.finish());
    rep.checks.push_back(herm.finish());
  }

  {
    CheckBuilder eig1(suite, "h1 phi^R_{n;s} = (n+s) phi^R_{n;s}" + tag, "eigenvalue", 0.0);
    CheckBuilder vec(suite, "phi^(2)_n = x1+ phi^R_{n;s} = sqrt(n+s) phi^L_{n-1;s}" + tag, "eigenvector map", 0.0);
    CheckBuilder eig2(suite, "h2 phi^(2)_n = (n+s) phi^(2)_n" + tag, "eigenvalue", 0.0);
    for (unsigned n = 0; n <= n_max; ++n) {
      const auto r = SectorIndex::basis(Sector::R, n, s);
      observe_sum(eig1, h1(r) - WeightedIndexSum(r, Surd(static_cast<long long>(n + s))), r.str());
      if (n == 0) continue;
      const WeightedIndexSum v = x1_dag(r);
      observe_sum(vec, v - WeightedIndexSum(SectorIndex::basis(Sector::L, n - 1, s), Surd::sqrt(Rational(n + s))), r.str());
      observe_sum(eig2, h2(v) - Surd(static_cast<long long>(n + s)) * v, r.str());
    }
    rep.checks.push_back(eig1.finish());
    rep.checks.push_back(vec.finish());
    rep.checks.push_back(eig2.finish());
  }
  return rep;
}

}  // namespace hermq
