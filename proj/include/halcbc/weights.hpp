#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace halcbc {

/**
 * Non-increasing positive coordinate weights with gamma_1 <= 1.
 *
 * Constructed from an explicit list or materialized from a family:
 *   power_family(c, a):  gamma_j = c * j^-a   (c <= 1, a >= 0)
 *   geometric_family(r): gamma_j = r^j        (0 < r <= 1)
 */
class WeightSequence {
public:
    static WeightSequence explicit_list(std::vector<double> gammas);
    static WeightSequence power_family(double c, double a, std::size_t s);
    static WeightSequence geometric_family(double r, std::size_t s);

    // Test hook: skips validation so degenerate weights (e.g. zero) can be
    // exercised. Not part of the public contract.
    static WeightSequence unchecked(std::vector<double> gammas);

    // Accepts "1/j^2", "0.5/j^3", "0.9^j", or a comma-separated list.
    static WeightSequence parse(const std::string& text, std::size_t s);

    std::size_t dimension() const { return gammas_.size(); }
    double gamma(std::size_t j) const { return gammas_[j]; } // 0-based
    std::span<const double> gammas() const { return gammas_; }

    // First s weights; requires dimension() >= s.
    WeightSequence prefix(std::size_t s) const;

private:
    explicit WeightSequence(std::vector<double> gammas) : gammas_(std::move(gammas)) {}
    std::vector<double> gammas_;
};

} // namespace halcbc
