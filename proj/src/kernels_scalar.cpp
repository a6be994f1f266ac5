#include "halcbc/kernels.hpp"

// Scalar reference kernels. The 4-lane striping mirrors the AVX2 register
// layout so both backends execute the same IEEE operation sequence; see the
// bit-exactness contract in kernels.hpp. min() is written as (a < b ? a : b)
// with the row element first, matching vminpd operand order.

namespace halcbc::kernels {

namespace {

double pair_row_sum_scalar(const double* a_row, const double* w, std::size_t n,
                           double w_n, double g, double c) {
    double acc0 = 0.0, acc1 = 0.0, acc2 = 0.0, acc3 = 0.0;
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        const double m0 = w[k + 0] < w_n ? w[k + 0] : w_n;
        const double m1 = w[k + 1] < w_n ? w[k + 1] : w_n;
        const double m2 = w[k + 2] < w_n ? w[k + 2] : w_n;
        const double m3 = w[k + 3] < w_n ? w[k + 3] : w_n;
        acc0 += a_row[k + 0] * (c + g * m0);
        acc1 += a_row[k + 1] * (c + g * m1);
        acc2 += a_row[k + 2] * (c + g * m2);
        acc3 += a_row[k + 3] * (c + g * m3);
    }
    double tail = 0.0;
    for (; k < n; ++k) {
        const double m = w[k] < w_n ? w[k] : w_n;
        tail += a_row[k] * (c + g * m);
    }
    return ((acc0 + acc2) + (acc1 + acc3)) + tail;
}

double poly_sum_scalar(const double* b, const double* y, std::size_t n,
                       double c0, double c1, double c2) {
    double acc0 = 0.0, acc1 = 0.0, acc2v = 0.0, acc3 = 0.0;
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        acc0 += b[k + 0] * (c0 + y[k + 0] * (c1 + y[k + 0] * c2));
        acc1 += b[k + 1] * (c0 + y[k + 1] * (c1 + y[k + 1] * c2));
        acc2v += b[k + 2] * (c0 + y[k + 2] * (c1 + y[k + 2] * c2));
        acc3 += b[k + 3] * (c0 + y[k + 3] * (c1 + y[k + 3] * c2));
    }
    double tail = 0.0;
    for (; k < n; ++k) tail += b[k] * (c0 + y[k] * (c1 + y[k] * c2));
    return ((acc0 + acc2v) + (acc1 + acc3)) + tail;
}

void pair_row_scale_scalar(double* a_row, const double* w, std::size_t n,
                           double w_n, double g) {
    for (std::size_t k = 0; k < n; ++k) {
        const double m = w[k] < w_n ? w[k] : w_n;
        a_row[k] *= 1.0 + g * m;
    }
}

void linear_scale_scalar(double* b, const double* y, std::size_t n, double hg) {
    for (std::size_t k = 0; k < n; ++k) b[k] *= 1.0 + hg * (1.0 - y[k] * y[k]);
}

} // namespace

const Ops& scalar_ops() {
    static const Ops table{pair_row_sum_scalar, poly_sum_scalar, pair_row_scale_scalar,
                           linear_scale_scalar};
    return table;
}

} // namespace halcbc::kernels
