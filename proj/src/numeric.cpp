#include "halcbc/numeric.hpp"

namespace halcbc {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::int64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out))
        throw std::overflow_error("integer addition overflow");
    return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out))
        throw std::overflow_error("integer multiplication overflow");
    return out;
}

std::int64_t checked_pow(std::int64_t base, int exp) {
    if (base < 0 || exp < 0)
        throw std::invalid_argument("checked_pow: negative base or exponent");
    std::int64_t out = 1;
    for (int i = 0; i < exp; ++i) out = checked_mul(out, base);
    return out;
}

double pairwise_sum(std::span<const double> values) {
    const std::size_t n = values.size();
    if (n <= 16) {
        double s = 0.0;
        for (double v : values) s += v;
        return s;
    }
    const std::size_t half = n / 2;
    return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

} // namespace halcbc
