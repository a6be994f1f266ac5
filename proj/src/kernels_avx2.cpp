#include "halcbc/kernels.hpp"

// AVX2 kernels. Operation sequence mirrors kernels_scalar.cpp exactly
// (4-lane accumulators, mul/add only, same lane combine), giving
// bit-identical results; vminpd(w, w_n) equals the scalar (w < w_n ? w : w_n).

#if defined(__AVX2__) && (defined(__x86_64__) || defined(_M_X64))

#include <immintrin.h>

namespace halcbc::kernels {

namespace {

inline double combine_lanes(__m256d acc, double tail) {
    const __m128d lo = _mm256_castpd256_pd128(acc);   // [acc0, acc1]
    const __m128d hi = _mm256_extractf128_pd(acc, 1); // [acc2, acc3]
    const __m128d sum = _mm_add_pd(lo, hi);           // [acc0+acc2, acc1+acc3]
    return (_mm_cvtsd_f64(sum) + _mm_cvtsd_f64(_mm_unpackhi_pd(sum, sum))) + tail;
}

double pair_row_sum_avx2(const double* a_row, const double* w, std::size_t n,
                         double w_n, double g, double c) {
    const __m256d wn_v = _mm256_set1_pd(w_n);
    const __m256d g_v = _mm256_set1_pd(g);
    const __m256d c_v = _mm256_set1_pd(c);
    __m256d acc = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        const __m256d wk = _mm256_loadu_pd(w + k);
        const __m256d a = _mm256_loadu_pd(a_row + k);
        const __m256d m = _mm256_min_pd(wk, wn_v);
        const __m256d term = _mm256_mul_pd(a, _mm256_add_pd(c_v, _mm256_mul_pd(g_v, m)));
        acc = _mm256_add_pd(acc, term);
    }
    double tail = 0.0;
    for (; k < n; ++k) {
        const double m = w[k] < w_n ? w[k] : w_n;
        tail += a_row[k] * (c + g * m);
    }
    return combine_lanes(acc, tail);
}

double poly_sum_avx2(const double* b, const double* y, std::size_t n,
                     double c0, double c1, double c2) {
    const __m256d c0_v = _mm256_set1_pd(c0);
    const __m256d c1_v = _mm256_set1_pd(c1);
    const __m256d c2_v = _mm256_set1_pd(c2);
    __m256d acc = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        const __m256d yk = _mm256_loadu_pd(y + k);
        const __m256d bk = _mm256_loadu_pd(b + k);
        const __m256d horner =
            _mm256_add_pd(c0_v, _mm256_mul_pd(yk, _mm256_add_pd(c1_v, _mm256_mul_pd(yk, c2_v))));
        acc = _mm256_add_pd(acc, _mm256_mul_pd(bk, horner));
    }
    double tail = 0.0;
    for (; k < n; ++k) tail += b[k] * (c0 + y[k] * (c1 + y[k] * c2));
    return combine_lanes(acc, tail);
}

void pair_row_scale_avx2(double* a_row, const double* w, std::size_t n,
                         double w_n, double g) {
    const __m256d wn_v = _mm256_set1_pd(w_n);
    const __m256d g_v = _mm256_set1_pd(g);
    const __m256d one = _mm256_set1_pd(1.0);
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        const __m256d wk = _mm256_loadu_pd(w + k);
        const __m256d a = _mm256_loadu_pd(a_row + k);
        const __m256d m = _mm256_min_pd(wk, wn_v);
        const __m256d factor = _mm256_add_pd(one, _mm256_mul_pd(g_v, m));
        _mm256_storeu_pd(a_row + k, _mm256_mul_pd(a, factor));
    }
    for (; k < n; ++k) {
        const double m = w[k] < w_n ? w[k] : w_n;
        a_row[k] *= 1.0 + g * m;
    }
}

void linear_scale_avx2(double* b, const double* y, std::size_t n, double hg) {
    const __m256d hg_v = _mm256_set1_pd(hg);
    const __m256d one = _mm256_set1_pd(1.0);
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        const __m256d yk = _mm256_loadu_pd(y + k);
        const __m256d bk = _mm256_loadu_pd(b + k);
        const __m256d factor = _mm256_add_pd(
            one, _mm256_mul_pd(hg_v, _mm256_sub_pd(one, _mm256_mul_pd(yk, yk))));
        _mm256_storeu_pd(b + k, _mm256_mul_pd(bk, factor));
    }
    for (; k < n; ++k) b[k] *= 1.0 + hg * (1.0 - y[k] * y[k]);
}

} // namespace

const Ops& avx2_ops() {
    static const Ops table{pair_row_sum_avx2, poly_sum_avx2, pair_row_scale_avx2,
                           linear_scale_avx2};
    return table;
}

} // namespace halcbc::kernels

#else // no AVX2 at compile time: keep the symbol, route to scalar

namespace halcbc::kernels {

const Ops& avx2_ops() { return scalar_ops(); }

} // namespace halcbc::kernels

#endif
