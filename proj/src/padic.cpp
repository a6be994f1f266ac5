#include "halcbc/padic.hpp"

#include <numeric>
#include <stdexcept>

namespace halcbc {

namespace {

void require_prime(std::int64_t p) {
    if (!is_prime(p))
        throw std::invalid_argument("base must be prime, got " + std::to_string(p));
}

void require_same_base(const PAdicDigits& x, const PAdicDigits& sigma) {
    if (x.base() != sigma.base())
        throw std::invalid_argument("base mismatch: " + std::to_string(x.base()) + " vs " +
                                    std::to_string(sigma.base()));
}

} // namespace

ExactPoint::ExactPoint(std::int64_t numerator, std::int64_t denominator) {
    if (denominator <= 0 || numerator < 0 || numerator >= denominator)
        throw std::invalid_argument("ExactPoint requires 0 <= num < den");
    const std::int64_t g = std::gcd(numerator, denominator);
    num = numerator / g;
    den = denominator / g;
}

ExactPoint ExactPoint::plus(const ExactPoint& other) const {
    const std::int64_t g = std::gcd(den, other.den);
    const std::int64_t scaled_den = checked_mul(den / g, other.den);
    const std::int64_t n =
        checked_add(checked_mul(num, other.den / g), checked_mul(other.num, den / g));
    return ExactPoint(n, scaled_den);
}

std::string ExactPoint::to_string() const {
    return std::to_string(num) + "/" + std::to_string(den);
}

PAdicDigits::PAdicDigits(std::int64_t base) : base_(base) { require_prime(base); }

PAdicDigits PAdicDigits::from_digits(std::int64_t base, std::vector<std::uint32_t> digits) {
    PAdicDigits out(base);
    for (std::uint32_t d : digits)
        if (d >= static_cast<std::uint32_t>(base))
            throw std::invalid_argument("digit out of range for base");
    out.digits_ = std::move(digits);
    out.canonicalize();
    return out;
}

PAdicDigits PAdicDigits::from_q(std::int64_t base, int m, std::int64_t numerator) {
    require_prime(base);
    if (m < 1) throw std::invalid_argument("from_q: m must be >= 1");
    const std::int64_t pm = checked_pow(base, m);
    if (numerator < 0 || numerator >= pm)
        throw std::invalid_argument("from_q: numerator out of [0, p^m)");
    // numerator/p^m = sum_r z_r p^-(r+1) with z_r the digit of numerator at p^(m-1-r).
    std::vector<std::uint32_t> digits(static_cast<std::size_t>(m));
    std::int64_t rest = numerator;
    for (int r = m - 1; r >= 0; --r) {
        digits[static_cast<std::size_t>(r)] = static_cast<std::uint32_t>(rest % base);
        rest /= base;
    }
    return from_digits(base, std::move(digits));
}

void PAdicDigits::canonicalize() {
    while (!digits_.empty() && digits_.back() == 0) digits_.pop_back();
}

double PAdicDigits::to_double() const {
    const double p = static_cast<double>(base_);
    double v = 0.0;
    for (std::size_t i = digits_.size(); i-- > 0;)
        v = (v + static_cast<double>(digits_[i])) / p;
    return v;
}

ExactPoint PAdicDigits::to_exact() const {
    if (digits_.empty()) return ExactPoint(0, 1);
    std::int64_t n = 0;
    for (std::uint32_t d : digits_)
        n = checked_add(checked_mul(n, base_), static_cast<std::int64_t>(d));
    const std::int64_t den = checked_pow(base_, static_cast<int>(digits_.size()));
    return ExactPoint(n, den);
}

std::int64_t PAdicDigits::numerator_in(int m) const {
    if (m < 0 || digits_.size() > static_cast<std::size_t>(m))
        throw std::invalid_argument("numerator_in: value has more than m digits");
    std::int64_t n = 0;
    for (std::size_t r = 0; r < digits_.size(); ++r) {
        const std::int64_t place = checked_pow(base_, m - 1 - static_cast<int>(r));
        n = checked_add(n, checked_mul(static_cast<std::int64_t>(digits_[r]), place));
    }
    return n;
}

PAdicDigits radical_inverse(std::int64_t p, std::int64_t n) {
    require_prime(p);
    if (n < 0) throw std::invalid_argument("radical_inverse: n must be nonnegative");
    std::vector<std::uint32_t> digits;
    while (n > 0) {
        digits.push_back(static_cast<std::uint32_t>(n % p));
        n /= p;
    }
    return PAdicDigits::from_digits(p, std::move(digits));
}

std::int64_t monna_inverse(const PAdicDigits& x) {
    std::int64_t out = 0;
    std::int64_t power = 1;
    const auto& d = x.digits();
    for (std::size_t r = 0; r < d.size(); ++r) {
        out = checked_add(out, checked_mul(static_cast<std::int64_t>(d[r]), power));
        if (r + 1 < d.size()) power = checked_mul(power, x.base());
    }
    return out;
}

PAdicDigits padic_shift(const PAdicDigits& x, const PAdicDigits& sigma) {
    require_same_base(x, sigma);
    const std::uint32_t p = static_cast<std::uint32_t>(x.base());
    const std::size_t len = std::max(x.digit_count(), sigma.digit_count());
    std::vector<std::uint32_t> out;
    out.reserve(len + 1);
    std::uint32_t carry = 0;
    for (std::size_t r = 0; r < len; ++r) {
        const std::uint32_t a = r < x.digit_count() ? x.digits()[r] : 0;
        const std::uint32_t b = r < sigma.digit_count() ? sigma.digits()[r] : 0;
        const std::uint32_t t = a + b + carry;
        out.push_back(t % p);
        carry = t / p;
    }
    if (carry != 0) out.push_back(carry);
    return PAdicDigits::from_digits(x.base(), std::move(out));
}

PAdicDigits simplified_shift(const PAdicDigits& x, const PAdicDigits& sigma, int m) {
    require_same_base(x, sigma);
    if (m < 1) throw std::invalid_argument("simplified_shift: m must be >= 1");
    // Digits below index m of the sum depend only on digits below index m of
    // the operands, but carries must keep propagating past both operand
    // lengths; only the carry out of index m-1 is dropped.
    const std::uint32_t p = static_cast<std::uint32_t>(x.base());
    const std::size_t operand_len = std::max(x.digit_count(), sigma.digit_count());
    std::vector<std::uint32_t> out;
    out.reserve(std::min<std::size_t>(static_cast<std::size_t>(m), operand_len + 1));
    std::uint32_t carry = 0;
    for (std::size_t r = 0; r < static_cast<std::size_t>(m); ++r) {
        if (r >= operand_len && carry == 0) break;
        const std::uint32_t a = r < x.digit_count() ? x.digits()[r] : 0;
        const std::uint32_t b = r < sigma.digit_count() ? sigma.digits()[r] : 0;
        const std::uint32_t t = a + b + carry;
        out.push_back(t % p);
        carry = t / p;
    }
    return PAdicDigits::from_digits(x.base(), std::move(out));
}

ExactPoint mid_simplified_shift(const PAdicDigits& x, const PAdicDigits& sigma, int m) {
    const PAdicDigits truncated = simplified_shift(x, sigma, m);
    const std::int64_t two_pm = checked_mul(2, checked_pow(x.base(), m));
    return truncated.to_exact().plus(ExactPoint(1, two_pm));
}

} // namespace halcbc
