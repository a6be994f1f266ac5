#pragma once

#include <cstddef>

#include "halcbc/bounds.hpp"
#include "halcbc/wce.hpp"

// Test-only reference implementations. These stay independent of the library
// code paths they check: the quadrature oracle integrates the kernel
// numerically instead of using the closed form, and the alternative bound
// evaluators accumulate in log space instead of multiplying factors.

namespace halcbc::test_support {

// Squared worst-case error assembled from midpoint-quadrature values of the
// kernel integrals on a per-axis grid:
//   II  = prod_j (1/G^2) sum_{u,v} (1 + gamma_j min(1-u', 1-v'))
//   I_n = prod_j (1/G)   sum_u    (1 + gamma_j min(1-x_nj, 1-u'))
//   e^2 = II - (2/N) sum_n I_n + (1/N^2) sum_{n,h} K(x_n, x_h)
// with u' = (u + 1/2)/G. Discretization error is O(1/G^2) away from the
// kernel kink plus O(1/G^2) from the cells straddling it.
double squared_wce_quadrature(const DoubleMatrix& points, const WeightSequence& weights,
                              std::size_t grid = 2000);

// Bound right-hand sides via exp/log1p accumulation.
double rms_bound_sq_alt(const BaseVector& bases, const WeightSequence& weights,
                        std::size_t n_points, std::size_t d);
double cbc_bound_sq_alt(const BaseVector& bases, const WeightSequence& weights,
                        std::size_t n_points, std::size_t d);

} // namespace halcbc::test_support
