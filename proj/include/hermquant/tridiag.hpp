// Symmetric tridiagonal eigenvalues by Sturm-sequence bisection.
#pragma once

#include <cstddef>
#include <vector>

#include "hermquant/errors.hpp"

namespace hermq {

struct SymTridiag {
  std::vector<double> diag;  // size n
  std::vector<double> off;   // size n-1, off[i] couples i and i+1

  std::size_t size() const { return diag.size(); }
};

/// Number of eigenvalues strictly below x.
std::size_t sturm_count(const SymTridiag& t, double x);

/// k-th smallest eigenvalue (k = 0 is the minimum), bisected to a few ulps.
/// Throws NonConvergence if the bracket fails to shrink.
double kth_eigenvalue(const SymTridiag& t, std::size_t k);

/// All eigenvalues in ascending order.
std::vector<double> eigenvalues(const SymTridiag& t);

}  // namespace hermq
