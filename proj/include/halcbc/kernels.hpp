#pragma once

#include <cstddef>
#include <string>

namespace halcbc::kernels {

/**
 * Inner-loop kernels behind the error evaluator, in a scalar reference
 * flavor and an AVX2 flavor selected at runtime.
 *
 * Bit-exactness contract: every implementation performs the identical IEEE
 * operation sequence (4-lane striped accumulators, no FMA, lane combine
 * (acc0+acc2)+(acc1+acc3), then the scalar tail), so scalar and AVX2 return
 * bit-identical doubles. Backend choice therefore never changes results,
 * only speed. Equivalence is asserted bitwise in the test suite.
 */

// sum over k < n of a_row[k] * (c + g * min(w_n, w[k]))
using PairRowSumFn = double (*)(const double* a_row, const double* w, std::size_t n,
                                double w_n, double g, double c);

// sum over k < n of b[k] * (c0 + c1 * y[k] + c2 * y[k]^2), Horner form
using PolySumFn = double (*)(const double* b, const double* y, std::size_t n,
                             double c0, double c1, double c2);

// a_row[k] *= (1 + g * min(w_n, w[k]))
using PairRowScaleFn = void (*)(double* a_row, const double* w, std::size_t n,
                                double w_n, double g);

// b[k] *= (1 + hg * (1 - y[k]^2)) with hg = g/2 precomputed by the caller
using LinearScaleFn = void (*)(double* b, const double* y, std::size_t n, double hg);

struct Ops {
    PairRowSumFn pair_row_sum;
    PolySumFn poly_sum;
    PairRowScaleFn pair_row_scale;
    LinearScaleFn linear_scale;
};

enum class Backend { scalar, avx2 };

bool avx2_supported();

// Active backend: honors the HALTON_CBC_KERNEL environment variable
// ("scalar" or "avx2") on first use, otherwise picks the fastest supported.
Backend active_backend();
void force_backend(Backend backend); // tests and CLI override
const char* backend_name(Backend backend);

// Dispatched operation table for the active backend.
const Ops& ops();

// Direct access for equivalence tests.
const Ops& scalar_ops();
const Ops& avx2_ops(); // only valid when avx2_supported()

} // namespace halcbc::kernels
