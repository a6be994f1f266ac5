#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "halcbc/numeric.hpp"

namespace halcbc {

/**
 * Exact rational in [0,1), stored as numerator/denominator in lowest terms.
 *
 * This is the carrier for shifted coordinates. Mid-simplified shifts add the
 * cell-center offset 1/(2 p^m), which is not a base-p rational for odd p, so
 * digit vectors alone cannot represent them.
 */
struct ExactPoint {
    std::int64_t num = 0;
    std::int64_t den = 1;

    ExactPoint() = default;
    ExactPoint(std::int64_t numerator, std::int64_t denominator);

    // Exact sum; the result must stay below 1.
    ExactPoint plus(const ExactPoint& other) const;

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string to_string() const; // "num/den"

    friend bool operator==(const ExactPoint& a, const ExactPoint& b) {
        return a.num == b.num && a.den == b.den;
    }
};

/**
 * Finite base-p digit vector for a p-adic rational in [0,1).
 *
 * digits()[r] is the digit multiplying p^-(r+1): index 0 is the most
 * significant fractional digit. Carries in digit addition propagate from
 * index r to r+1, toward the less significant fractional positions.
 *
 * Canonical form strips trailing zero digits, so two values compare equal
 * iff their digit vectors are structurally equal. The base must be prime.
 */
class PAdicDigits {
public:
    explicit PAdicDigits(std::int64_t base); // zero in the given base
    static PAdicDigits from_digits(std::int64_t base, std::vector<std::uint32_t> digits);
    // Value numerator / base^m with 0 <= numerator < base^m.
    static PAdicDigits from_q(std::int64_t base, int m, std::int64_t numerator);

    std::int64_t base() const { return base_; }
    const std::vector<std::uint32_t>& digits() const { return digits_; }
    std::size_t digit_count() const { return digits_.size(); }
    bool is_zero() const { return digits_.empty(); }

    double to_double() const;
    ExactPoint to_exact() const;
    // Value scaled by base^m, as an integer. Requires digit_count() <= m.
    std::int64_t numerator_in(int m) const;

    friend bool operator==(const PAdicDigits& a, const PAdicDigits& b) {
        return a.base_ == b.base_ && a.digits_ == b.digits_;
    }

private:
    std::int64_t base_;
    std::vector<std::uint32_t> digits_;
    void canonicalize();
};

// Base-p digits of n mirrored across the radix point.
PAdicDigits radical_inverse(std::int64_t p, std::int64_t n);

// Inverse of the radical inverse: sum of digits()[r] * p^r. Checked.
std::int64_t monna_inverse(const PAdicDigits& x);

// Digit addition with carries toward less significant fractional positions.
// For finite digit vectors this equals integer addition of the preimages
// followed by digit extraction, but is computed digitwise so long shift
// vectors never hit integer overflow.
PAdicDigits padic_shift(const PAdicDigits& x, const PAdicDigits& sigma);

// First m digits of padic_shift(x, sigma); equals addition mod p^m on the
// preimages. Result lies in Q(p^m) = {a p^-m : 0 <= a < p^m}.
PAdicDigits simplified_shift(const PAdicDigits& x, const PAdicDigits& sigma, int m);

// simplified_shift plus the cell-center offset 1/(2 p^m). Always strictly
// inside (0,1).
ExactPoint mid_simplified_shift(const PAdicDigits& x, const PAdicDigits& sigma, int m);

} // namespace halcbc
