#include "hermquant/operators.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hermq {

namespace {

void require_dim(std::size_t n, std::size_t min, const char* who) {
  if (n < min) throw std::invalid_argument(std::string(who) + ": dimension too small");
}

BandedMatrix<Complex> to_values(const BandedMatrix<Surd>& m) {
  return m.map([](const Surd& v) { return v.to_complex(); });
}

Surd sqrt_half(unsigned k) { return Surd::sqrt(rational(k, 2)); }

}  // namespace

TruncatedOperator TruncatedOperator::adjoint() const {
  TruncatedOperator out;
  out.name = name + "^dagger";
  out.s = s;
  out.epsilon = epsilon;
  out.values = values.adjoint();
  if (exact) out.exact = exact->adjoint();
  return out;
}

TruncatedOperator from_exact(std::string name, unsigned s, Sector e, BandedMatrix<Surd> m) {
  TruncatedOperator op;
  op.name = std::move(name);
  op.s = s;
  op.epsilon = e;
  m.prune();
  op.values = to_values(m);
  op.exact = std::move(m);
  return op;
}

namespace {

// Collects entries either exactly or as values only.
class Assembler {
 public:
  Assembler(std::size_t n, Storage storage) : storage_(storage), exact_(n), values_(n) {}

  template <class ExactFn>
  void set(std::size_t i, std::size_t j, ExactFn&& exact, Complex value) {
    if (storage_ == Storage::Exact) {
      exact_.set(i, j, exact());
    } else {
      values_.set(i, j, value);
    }
  }

  TruncatedOperator finish(std::string name, unsigned s, Sector e) {
    if (storage_ == Storage::Exact) return from_exact(std::move(name), s, e, std::move(exact_));
    TruncatedOperator op;
    op.name = std::move(name);
    op.s = s;
    op.epsilon = e;
    values_.prune();
    op.values = std::move(values_);
    return op;
  }

 private:
  Storage storage_;
  BandedMatrix<Surd> exact_;
  BandedMatrix<Complex> values_;
};

double dsqrt(double x) { return static_cast<double>(std::sqrt(static_cast<long double>(x))); }

}  // namespace

TruncatedOperator build_A_z(unsigned s, std::size_t n, Sector e, Storage storage) {
  require_dim(n, 2, "build_A_z");
  Assembler m(n, storage);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    auto ex = [&] { return Surd::sqrt(rational(static_cast<long long>(s + k + 1))); };
    const Complex v = dsqrt(static_cast<double>(s + k + 1));
    if (e == Sector::L) {
      m.set(k, k + 1, ex, v);
    } else {
      m.set(k + 1, k, ex, v);
    }
  }
  return m.finish("A_z", s, e);
}

TruncatedOperator build_A_zbar(unsigned s, std::size_t n, Sector e, Storage storage) {
  TruncatedOperator op = build_A_z(s, n, e, storage).adjoint();
  op.name = "A_zbar";
  return op;
}

TruncatedOperator build_Q(unsigned s, std::size_t n, Sector e, Storage storage) {
  require_dim(n, 2, "build_Q");
  Assembler m(n, storage);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    auto ex = [&] { return sqrt_half(static_cast<unsigned>(s + k + 1)); };
    const Complex v = dsqrt(0.5 * static_cast<double>(s + k + 1));
    m.set(k, k + 1, ex, v);
    m.set(k + 1, k, ex, v);
  }
  return m.finish("Q", s, e);
}

TruncatedOperator build_P(unsigned s, std::size_t n, Sector e, Storage storage) {
  require_dim(n, 2, "build_P");
  // (-1)^epsilon i with (-1)^L = -1, (-1)^R = +1.
  const bool left = e == Sector::L;
  const Complex pref = left ? Complex(0, -1) : Complex(0, 1);
  Assembler m(n, storage);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    auto ex = [&] {
      const Surd i = Surd::imaginary_unit();
      return (left ? -i : i) * sqrt_half(static_cast<unsigned>(s + k + 1));
    };
    const Complex c = pref * dsqrt(0.5 * static_cast<double>(s + k + 1));
    m.set(k, k + 1, ex, c);
    m.set(k + 1, k, [&] { return -ex(); }, -c);
  }
  return m.finish("P", s, e);
}

namespace {

TruncatedOperator quadratic(unsigned s, std::size_t n, int sign, const char* name, Storage storage) {
  Assembler m(n, storage);
  for (std::size_t k = 0; k < n; ++k) {
    m.set(k, k, [&] { return Surd(static_cast<long long>(k + 2 * s + 1)); }, static_cast<double>(k + 2 * s + 1));
  }
  for (std::size_t k = 0; k + 2 < n; ++k) {
    // c_{k+1} c_{k+2} = sqrt((k+1+s)(k+2+s))/2
    auto ex = [&] {
      Surd c = Surd::sqrt(rational(static_cast<long long>((k + 1 + s) * (k + 2 + s)), 4));
      return sign < 0 ? -c : c;
    };
    const double c = sign * 0.5 *
                     static_cast<double>(std::sqrt(static_cast<long double>(k + 1 + s) * static_cast<long double>(k + 2 + s)));
    m.set(k, k + 2, ex, c);
    m.set(k + 2, k, ex, c);
  }
  return m.finish(name, s, Sector::L);
}

}  // namespace

TruncatedOperator build_Aq2(unsigned s, std::size_t n, Storage storage) {
  require_dim(n, 3, "build_Aq2");
  return quadratic(s, n, +1, "A_q2", storage);
}

TruncatedOperator build_Ap2(unsigned s, std::size_t n, Storage storage) {
  require_dim(n, 3, "build_Ap2");
  return quadratic(s, n, -1, "A_p2", storage);
}

TruncatedOperator build_AH(unsigned s, std::size_t n, Storage storage) {
  require_dim(n, 3, "build_AH");
  Assembler m(n, storage);
  for (std::size_t k = 0; k < n; ++k) {
    m.set(k, k, [&] { return Surd(static_cast<long long>(k + 2 * s + 1)); }, static_cast<double>(k + 2 * s + 1));
  }
  return m.finish("A_H", s, Sector::L);
}

TruncatedOperator build_Hhat(unsigned s, std::size_t n, Storage storage) {
  require_dim(n, 3, "build_Hhat");
  Assembler m(n, storage);
  m.set(0, 0, [&] { return Surd(rational(s + 1, 2)); }, 0.5 * (s + 1));
  for (std::size_t k = 1; k < n; ++k) {
    m.set(k, k, [&] { return Surd(rational(static_cast<long long>(2 * (k + s) + 1), 2)); }, (k + s) + 0.5);
  }
  return m.finish("H_hat", s, Sector::L);
}

BandedMatrix<Surd> ground_projector(std::size_t n) {
  BandedMatrix<Surd> p(n);
  if (n) p.set(0, 0, Surd(1));
  return p;
}

BandedMatrix<Surd> commutator(const BandedMatrix<Surd>& a, const BandedMatrix<Surd>& b) {
  BandedMatrix<Surd> c = a * b - b * a;
  c.prune();
  return c;
}

}  // namespace hermq
