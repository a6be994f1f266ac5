#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "halcbc/padic.hpp"

namespace halcbc {

// Pairwise distinct primes, one per coordinate.
class BaseVector {
public:
    explicit BaseVector(std::vector<std::int64_t> primes);
    static BaseVector first_primes(std::size_t s);

    std::size_t dimension() const { return primes_.size(); }
    std::int64_t prime(std::size_t j) const { return primes_[j]; }
    const std::vector<std::int64_t>& primes() const { return primes_; }

    friend bool operator==(const BaseVector& a, const BaseVector& b) {
        return a.primes_ == b.primes_;
    }

private:
    std::vector<std::int64_t> primes_;
};

// Per-dimension shift sigma_j = numerators[j] / primes[j]^ms[j].
struct ShiftVector {
    BaseVector bases;
    std::vector<int> ms;
    std::vector<std::int64_t> numerators;

    ShiftVector(BaseVector bases, std::vector<int> ms, std::vector<std::int64_t> numerators);
    std::size_t dimension() const { return bases.dimension(); }
    PAdicDigits sigma_digits(std::size_t j) const;
};

enum class ShiftMode { full, simplified, mid_simplified };

ShiftMode parse_shift_mode(const std::string& name);
const char* shift_mode_name(ShiftMode mode);

// N x s grid of exact coordinates, row n = point n.
class PointSet {
public:
    PointSet(std::size_t count, std::size_t dimension);

    std::size_t count() const { return count_; }
    std::size_t dimension() const { return dim_; }

    const ExactPoint& at(std::size_t n, std::size_t j) const { return coords_[n * dim_ + j]; }
    ExactPoint& at(std::size_t n, std::size_t j) { return coords_[n * dim_ + j]; }

    std::vector<double> column_doubles(std::size_t j) const;
    // Row-major N x s doubles.
    std::vector<double> to_doubles() const;

private:
    std::size_t count_;
    std::size_t dim_;
    std::vector<ExactPoint> coords_;
};

// First N points of the Halton sequence in the given bases, exact.
PointSet halton_points(const BaseVector& bases, std::size_t n_points);

// Same points with the selected shift applied coordinate-wise.
PointSet shifted_halton_points(const BaseVector& bases, std::size_t n_points,
                               const ShiftVector& shift, ShiftMode mode);

// CSV export: header "n,x1,...,xs"; coordinates as "a/b" fractions or as
// decimal doubles with 17 significant digits.
void write_points_csv(std::ostream& out, const PointSet& points, bool as_fractions);

} // namespace halcbc
