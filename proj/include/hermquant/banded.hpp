// Square matrices stored by diagonals.  Operators in this library are finite
// sections of banded infinite matrices, so diagonal storage keeps products of
// large sections cheap and makes the band structure explicit.
#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

#include "hermquant/exact.hpp"

namespace hermq {

inline double conj_value(double v) { return v; }
inline double abs_value(double v) { return v < 0 ? -v : v; }

template <class T>
class BandedMatrix {
 public:
  BandedMatrix() = default;
  explicit BandedMatrix(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }

  /// Diagonal offset k = j - i; positive offsets are above the main diagonal.
  const std::map<int, std::vector<T>>& diagonals() const { return diags_; }

  int band_low() const { return diags_.empty() ? 0 : std::min(0, -diags_.begin()->first); }
  int band_high() const { return diags_.empty() ? 0 : std::max(0, diags_.rbegin()->first); }

  T at(std::size_t i, std::size_t j) const {
    check(i, j);
    const int k = static_cast<int>(j) - static_cast<int>(i);
    auto it = diags_.find(k);
    if (it == diags_.end()) return T{};
    return it->second[std::min(i, j)];
  }

  void set(std::size_t i, std::size_t j, const T& v) {
    check(i, j);
    const int k = static_cast<int>(j) - static_cast<int>(i);
    auto it = diags_.find(k);
    if (it == diags_.end()) {
      if (v == T{}) return;
      it = diags_.emplace(k, std::vector<T>(diag_length(k), T{})).first;
    }
    it->second[std::min(i, j)] = v;
  }

  void add(std::size_t i, std::size_t j, const T& v) { set(i, j, at(i, j) + v); }

  BandedMatrix adjoint() const {
    BandedMatrix out(dim_);
    for (const auto& [k, d] : diags_) {
      std::vector<T> c(d.size());
      for (std::size_t i = 0; i < d.size(); ++i) c[i] = conj_value(d[i]);
      out.diags_.emplace(-k, std::move(c));
    }
    return out;
  }

  BandedMatrix leading_block(std::size_t n) const {
    if (n > dim_) throw std::out_of_range("leading_block larger than matrix");
    BandedMatrix out(n);
    for (const auto& [k, d] : diags_) {
      const std::size_t len = out.diag_length(k);
      if (len == 0) continue;
      out.diags_.emplace(k, std::vector<T>(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(len)));
    }
    return out;
  }

  /// Drop diagonals whose entries are all zero.
  void prune() {
    for (auto it = diags_.begin(); it != diags_.end();) {
      const bool zero = std::all_of(it->second.begin(), it->second.end(), [](const T& v) { return v == T{}; });
      it = zero ? diags_.erase(it) : std::next(it);
    }
  }

  template <class F>
  auto map(F f) const -> BandedMatrix<decltype(f(std::declval<T>()))> {
    using U = decltype(f(std::declval<T>()));
    BandedMatrix<U> out(dim_);
    for (const auto& [k, d] : diags_) {
      for (std::size_t i = 0; i < d.size(); ++i) {
        const std::size_t r = k >= 0 ? i : i - k;
        const std::size_t c = k >= 0 ? i + k : i;
        out.set(r, c, f(d[i]));
      }
    }
    return out;
  }

  std::vector<std::vector<T>> dense() const {
    std::vector<std::vector<T>> m(dim_, std::vector<T>(dim_, T{}));
    for (const auto& [k, d] : diags_) {
      for (std::size_t i = 0; i < d.size(); ++i) {
        const std::size_t r = k >= 0 ? i : i - k;
        const std::size_t c = k >= 0 ? i + k : i;
        m[r][c] = d[i];
      }
    }
    return m;
  }

  template <class V>
  std::vector<V> apply(const std::vector<V>& x) const {
    if (x.size() != dim_) throw std::invalid_argument("apply: dimension mismatch");
    std::vector<V> y(dim_, V{});
    for (const auto& [k, d] : diags_) {
      for (std::size_t i = 0; i < d.size(); ++i) {
        const std::size_t r = k >= 0 ? i : i - k;
        const std::size_t c = k >= 0 ? i + k : i;
        y[r] += d[i] * x[c];
      }
    }
    return y;
  }

  BandedMatrix& operator+=(const BandedMatrix& o) {
    same_dim(o);
    for (const auto& [k, d] : o.diags_) {
      auto it = diags_.find(k);
      if (it == diags_.end()) {
        diags_.emplace(k, d);
        continue;
      }
      for (std::size_t i = 0; i < d.size(); ++i) it->second[i] += d[i];
    }
    return *this;
  }

  BandedMatrix& operator-=(const BandedMatrix& o) {
    same_dim(o);
    for (const auto& [k, d] : o.diags_) {
      auto it = diags_.find(k);
      if (it == diags_.end()) it = diags_.emplace(k, std::vector<T>(d.size(), T{})).first;
      for (std::size_t i = 0; i < d.size(); ++i) it->second[i] -= d[i];
    }
    return *this;
  }

  friend BandedMatrix operator+(BandedMatrix a, const BandedMatrix& b) { return a += b; }
  friend BandedMatrix operator-(BandedMatrix a, const BandedMatrix& b) { return a -= b; }

  friend BandedMatrix operator*(const T& c, BandedMatrix a) {
    for (auto& [k, d] : a.diags_) {
      for (auto& v : d) v = c * v;
    }
    return a;
  }

  friend BandedMatrix operator*(const BandedMatrix& a, const BandedMatrix& b) {
    a.same_dim(b);
    BandedMatrix out(a.dim_);
    for (const auto& [ka, da] : a.diags_) {
      for (const auto& [kb, db] : b.diags_) {
        const int k = ka + kb;
        if (static_cast<std::size_t>(k < 0 ? -k : k) >= a.dim_) continue;
        auto it = out.diags_.find(k);
        if (it == out.diags_.end()) it = out.diags_.emplace(k, std::vector<T>(out.diag_length(k), T{})).first;
        // (A B)_{r,c} gets A_{r,m} B_{m,c} with m = r + ka, c = m + kb.
        for (std::size_t ia = 0; ia < da.size(); ++ia) {
          const long r = ka >= 0 ? static_cast<long>(ia) : static_cast<long>(ia) - ka;
          const long m = r + ka;
          const long c = m + kb;
          if (c < 0 || c >= static_cast<long>(a.dim_)) continue;
          const std::size_t ib = static_cast<std::size_t>(kb >= 0 ? m : c);
          const std::size_t io = static_cast<std::size_t>(k >= 0 ? r : c);
          it->second[io] += da[ia] * db[ib];
        }
      }
    }
    return out;
  }

  static BandedMatrix identity(std::size_t n) {
    BandedMatrix out(n);
    if (n) out.diags_.emplace(0, std::vector<T>(n, T(1)));
    return out;
  }

  /// Largest |entry|.
  double max_abs() const {
    double m = 0.0;
    for (const auto& [k, d] : diags_) {
      for (const auto& v : d) m = std::max(m, abs_value(v));
    }
    return m;
  }

 private:
  std::size_t diag_length(int k) const {
    const std::size_t a = static_cast<std::size_t>(k < 0 ? -k : k);
    return a >= dim_ ? 0 : dim_ - a;
  }
  void check(std::size_t i, std::size_t j) const {
    if (i >= dim_ || j >= dim_) throw std::out_of_range("BandedMatrix index out of range");
  }
  void same_dim(const BandedMatrix& o) const {
    if (o.dim_ != dim_) throw std::invalid_argument("BandedMatrix dimension mismatch");
  }

  std::size_t dim_ = 0;
  std::map<int, std::vector<T>> diags_;
};

}  // namespace hermq
