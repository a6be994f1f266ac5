#include "halcbc/halton.hpp"

#include <cstdio>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>

namespace halcbc {

BaseVector::BaseVector(std::vector<std::int64_t> primes) : primes_(std::move(primes)) {
    if (primes_.empty()) throw std::invalid_argument("bases: need at least one prime");
    std::set<std::int64_t> seen;
    for (std::int64_t p : primes_) {
        if (!is_prime(p))
            throw std::invalid_argument("bases: " + std::to_string(p) + " is not prime");
        if (!seen.insert(p).second)
            throw std::invalid_argument("bases: duplicate prime " + std::to_string(p));
    }
}

BaseVector BaseVector::first_primes(std::size_t s) {
    std::vector<std::int64_t> primes;
    primes.reserve(s);
    for (std::int64_t candidate = 2; primes.size() < s; ++candidate)
        if (is_prime(candidate)) primes.push_back(candidate);
    return BaseVector(std::move(primes));
}

ShiftVector::ShiftVector(BaseVector bases_in, std::vector<int> ms_in,
                         std::vector<std::int64_t> numerators_in)
    : bases(std::move(bases_in)), ms(std::move(ms_in)), numerators(std::move(numerators_in)) {
    if (ms.size() != bases.dimension() || numerators.size() != bases.dimension())
        throw std::invalid_argument("shift: dimension mismatch");
    for (std::size_t j = 0; j < bases.dimension(); ++j) {
        if (ms[j] < 1) throw std::invalid_argument("shift: m must be >= 1");
        const std::int64_t pm = checked_pow(bases.prime(j), ms[j]);
        if (numerators[j] < 0 || numerators[j] >= pm)
            throw std::invalid_argument("shift: numerator out of [0, p^m) in dimension " +
                                        std::to_string(j + 1));
    }
}

PAdicDigits ShiftVector::sigma_digits(std::size_t j) const {
    return PAdicDigits::from_q(bases.prime(j), ms[j], numerators[j]);
}

ShiftMode parse_shift_mode(const std::string& name) {
    if (name == "full") return ShiftMode::full;
    if (name == "simplified") return ShiftMode::simplified;
    if (name == "mid-simplified" || name == "mid_simplified") return ShiftMode::mid_simplified;
    throw std::invalid_argument("unknown shift mode: " + name);
}

const char* shift_mode_name(ShiftMode mode) {
    switch (mode) {
        case ShiftMode::full: return "full";
        case ShiftMode::simplified: return "simplified";
        case ShiftMode::mid_simplified: return "mid-simplified";
    }
    return "?";
}

PointSet::PointSet(std::size_t count, std::size_t dimension)
    : count_(count), dim_(dimension), coords_(count * dimension) {
    if (count == 0 || dimension == 0)
        throw std::invalid_argument("point set: empty dimension or count");
}

std::vector<double> PointSet::column_doubles(std::size_t j) const {
    std::vector<double> out(count_);
    for (std::size_t n = 0; n < count_; ++n) out[n] = at(n, j).to_double();
    return out;
}

std::vector<double> PointSet::to_doubles() const {
    std::vector<double> out(count_ * dim_);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = coords_[i].to_double();
    return out;
}

PointSet halton_points(const BaseVector& bases, std::size_t n_points) {
    if (n_points == 0) throw std::invalid_argument("halton_points: need N >= 1");
    PointSet out(n_points, bases.dimension());
    for (std::size_t n = 0; n < n_points; ++n)
        for (std::size_t j = 0; j < bases.dimension(); ++j)
            out.at(n, j) = radical_inverse(bases.prime(j), static_cast<std::int64_t>(n)).to_exact();
    return out;
}

PointSet shifted_halton_points(const BaseVector& bases, std::size_t n_points,
                               const ShiftVector& shift, ShiftMode mode) {
    if (!(shift.bases == bases))
        throw std::invalid_argument("shifted_halton_points: shift bases differ from requested bases");
    if (n_points == 0) throw std::invalid_argument("shifted_halton_points: need N >= 1");
    PointSet out(n_points, bases.dimension());
    for (std::size_t j = 0; j < bases.dimension(); ++j) {
        const PAdicDigits sigma = shift.sigma_digits(j);
        for (std::size_t n = 0; n < n_points; ++n) {
            const PAdicDigits h = radical_inverse(bases.prime(j), static_cast<std::int64_t>(n));
            switch (mode) {
                case ShiftMode::full:
                    out.at(n, j) = padic_shift(h, sigma).to_exact();
                    break;
                case ShiftMode::simplified:
                    out.at(n, j) = simplified_shift(h, sigma, shift.ms[j]).to_exact();
                    break;
                case ShiftMode::mid_simplified:
                    out.at(n, j) = mid_simplified_shift(h, sigma, shift.ms[j]);
                    break;
            }
        }
    }
    return out;
}

void write_points_csv(std::ostream& out, const PointSet& points, bool as_fractions) {
    out << "n";
    for (std::size_t j = 1; j <= points.dimension(); ++j) out << ",x" << j;
    out << "\n";
    char buf[64];
    for (std::size_t n = 0; n < points.count(); ++n) {
        out << n;
        for (std::size_t j = 0; j < points.dimension(); ++j) {
            if (as_fractions) {
                out << ',' << points.at(n, j).to_string();
            } else {
                std::snprintf(buf, sizeof(buf), "%.17g", points.at(n, j).to_double());
                out << ',' << buf;
            }
        }
        out << "\n";
    }
}

} // namespace halcbc
