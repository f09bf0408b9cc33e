#include "hermquant/exact.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace hermq {

namespace {

// m = k^2 * r with r square-free.
void square_free_split(std::uint64_t m, std::uint64_t& k, std::uint64_t& r) {
  k = 1;
  r = 1;
  for (std::uint64_t d = 2; d * d <= m; ++d) {
    unsigned e = 0;
    while (m % d == 0) {
      m /= d;
      ++e;
    }
    for (unsigned i = 0; i < e / 2; ++i) k *= d;
    if (e % 2) r *= d;
  }
  r *= m;
}

}  // namespace

BigInt factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return f;
}

Rational rational(long long num, long long den) { return Rational(num, den); }

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

// ---------------------------------------------------------------------------
// Surd

Surd::Surd(long long v) : Surd(Rational(v)) {}

Surd::Surd(const Rational& v) {
  if (v != 0) terms_.emplace(BigInt(1), GaussRational{v, 0});
}

Surd::Surd(const GaussRational& v) {
  if (!v.is_zero()) terms_.emplace(BigInt(1), v);
}

Surd Surd::sqrt(const Rational& q) {
  if (q < 0) throw std::domain_error("Surd::sqrt of a negative rational");
  if (q == 0) return {};
  const BigInt m = numerator(q) * denominator(q);
  if (m > BigInt(std::numeric_limits<std::int64_t>::max())) {
    throw std::domain_error("Surd::sqrt radicand too large: " + m.str());
  }
  std::uint64_t k = 0;
  std::uint64_t r = 0;
  square_free_split(m.convert_to<std::uint64_t>(), k, r);
  Surd out;
  out.terms_.emplace(BigInt(r), GaussRational{Rational(BigInt(k), denominator(q)), 0});
  return out;
}

Surd Surd::imaginary_unit() { return Surd(GaussRational{0, 1}); }

bool Surd::is_rational() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first == 1 && terms_.begin()->second.im == 0;
}

Rational Surd::as_rational() const {
  if (!is_rational()) throw std::domain_error("Surd is not rational: " + str());
  return terms_.empty() ? Rational(0) : terms_.begin()->second.re;
}

Surd Surd::conj() const {
  Surd out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, c.conj());
  return out;
}

Surd Surd::inverse() const {
  if (terms_.size() != 1) throw std::domain_error("Surd::inverse needs a single term: " + str());
  const auto& [m, c] = *terms_.begin();
  const Rational norm2 = c.re * c.re + c.im * c.im;
  const Rational scale = Rational(1) / (norm2 * Rational(m));
  Surd out;
  out.terms_.emplace(m, GaussRational{c.re * scale, -c.im * scale});
  return out;
}

std::complex<double> Surd::to_complex() const {
  std::complex<double> v{0.0, 0.0};
  for (const auto& [m, c] : terms_) {
    const double root = std::sqrt(m.convert_to<double>());
    v += std::complex<double>(to_double(c.re), to_double(c.im)) * root;
  }
  return v;
}

std::string Surd::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << to_string(c.re);
    if (c.im != 0) os << (c.im > 0 ? "+" : "") << to_string(c.im) << "i";
    os << ")";
    if (m != 1) os << "*sqrt(" << m.str() << ")";
  }
  return os.str();
}

void Surd::add_term(const BigInt& radicand, const GaussRational& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(radicand);
  if (it == terms_.end()) {
    terms_.emplace(radicand, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) terms_.erase(it);
}

Surd& Surd::operator+=(const Surd& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Surd& Surd::operator-=(const Surd& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, GaussRational{-c.re, -c.im});
  return *this;
}

Surd& Surd::operator*=(const Surd& o) {
  Surd out;
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) {
      const BigInt g = gcd(m1, m2);
      const BigInt r = (m1 / g) * (m2 / g);
      out.add_term(r, c1 * c2 * GaussRational{Rational(g), 0});
    }
  }
  terms_ = std::move(out.terms_);
  return *this;
}

Surd Surd::operator-() const {
  Surd out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, GaussRational{-c.re, -c.im});
  return out;
}

// ---------------------------------------------------------------------------
// PolyExact

PolyExact::PolyExact(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

PolyExact PolyExact::constant(const Rational& c) { return PolyExact({c}); }

PolyExact PolyExact::monomial(unsigned degree, const Rational& c) {
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return PolyExact(std::move(v));
}

void PolyExact::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational PolyExact::coeff(unsigned k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

Rational PolyExact::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

bool PolyExact::is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

bool PolyExact::has_integer_coeffs() const {
  for (const auto& c : coeffs_) {
    if (denominator(c) != 1) return false;
  }
  return true;
}

double PolyExact::operator()(double x) const {
  std::vector<double> c(coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = to_double(coeffs_[i]);
  if (degree() > 15) return compensated_horner(c, x);
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational PolyExact::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// p(x) -> p(x^2)
PolyExact PolyExact::compose_square() const {
  std::vector<Rational> v(coeffs_.empty() ? 0 : 2 * coeffs_.size() - 1, Rational(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) v[2 * k] = coeffs_[k];
  return PolyExact(std::move(v));
}

PolyExact& PolyExact::operator+=(const PolyExact& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

PolyExact& PolyExact::operator-=(const PolyExact& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

PolyExact operator*(const PolyExact& a, const PolyExact& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return PolyExact(std::move(v));
}

PolyExact operator*(const Rational& c, const PolyExact& p) {
  std::vector<Rational> v = p.coeffs_;
  for (auto& x : v) x *= c;
  return PolyExact(std::move(v));
}

PolyExact PolyExact::shifted() const {
  if (coeffs_.empty()) return {};
  std::vector<Rational> v;
  v.reserve(coeffs_.size() + 1);
  v.emplace_back(0);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return PolyExact(std::move(v));
}

std::vector<std::string> PolyExact::coeff_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(to_string(c));
  if (out.empty()) out.emplace_back("0");
  return out;
}

double compensated_horner(const std::vector<double>& coeffs, double x) {
  if (coeffs.empty()) return 0.0;
  double s = coeffs.back();
  double c = 0.0;
  for (std::size_t i = coeffs.size() - 1; i-- > 0;) {
    const double p = s * x;
    const double pi = std::fma(s, x, -p);
    const double t = p + coeffs[i];
    const double z = t - p;
    const double sigma = (p - (t - z)) + (coeffs[i] - z);
    s = t;
    c = c * x + (pi + sigma);
  }
  return s + c;
}

}  // namespace hermq
