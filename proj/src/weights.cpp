#include "halcbc/weights.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace halcbc {

namespace {

void validate(const std::vector<double>& g) {
    if (g.empty()) throw std::invalid_argument("weights: empty sequence");
    if (!(g.front() <= 1.0))
        throw std::invalid_argument("weights: gamma_1 must be <= 1");
    double prev = 2.0;
    for (double v : g) {
        if (!(v > 0.0)) throw std::invalid_argument("weights: all gammas must be positive");
        if (v > prev) throw std::invalid_argument("weights: sequence must be non-increasing");
        prev = v;
    }
}

} // namespace

WeightSequence WeightSequence::explicit_list(std::vector<double> gammas) {
    validate(gammas);
    return WeightSequence(std::move(gammas));
}

WeightSequence WeightSequence::power_family(double c, double a, std::size_t s) {
    if (!(c > 0.0 && c <= 1.0)) throw std::invalid_argument("power_family: need 0 < c <= 1");
    if (!(a >= 0.0)) throw std::invalid_argument("power_family: need a >= 0");
    if (s == 0) throw std::invalid_argument("power_family: need s >= 1");
    std::vector<double> g(s);
    for (std::size_t j = 0; j < s; ++j)
        g[j] = c * std::pow(static_cast<double>(j + 1), -a);
    return WeightSequence(std::move(g));
}

WeightSequence WeightSequence::geometric_family(double r, std::size_t s) {
    if (!(r > 0.0 && r <= 1.0)) throw std::invalid_argument("geometric_family: need 0 < r <= 1");
    if (s == 0) throw std::invalid_argument("geometric_family: need s >= 1");
    std::vector<double> g(s);
    double v = 1.0;
    for (std::size_t j = 0; j < s; ++j) {
        v *= r;
        g[j] = v;
    }
    return WeightSequence(std::move(g));
}

WeightSequence WeightSequence::unchecked(std::vector<double> gammas) {
    return WeightSequence(std::move(gammas));
}

WeightSequence WeightSequence::parse(const std::string& text, std::size_t s) {
    // family "c/j^a" (c optional, defaults to 1)
    if (const auto caret = text.find("/j^"); caret != std::string::npos) {
        const std::string head = text.substr(0, caret);
        const double c = head.empty() || head == "1" ? 1.0 : std::stod(head);
        const double a = std::stod(text.substr(caret + 3));
        return power_family(c, a, s);
    }
    // family "r^j"
    if (text.size() > 2 && text.substr(text.size() - 2) == "^j")
        return geometric_family(std::stod(text.substr(0, text.size() - 2)), s);
    // explicit comma-separated list
    std::vector<double> g;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) g.push_back(std::stod(item));
    if (g.size() < s)
        throw std::invalid_argument("weights: list shorter than requested dimension");
    g.resize(s);
    return explicit_list(std::move(g));
}

WeightSequence WeightSequence::prefix(std::size_t s) const {
    if (s == 0 || s > gammas_.size())
        throw std::invalid_argument("weights: prefix dimension out of range");
    return WeightSequence(std::vector<double>(gammas_.begin(), gammas_.begin() + s));
}

} // namespace halcbc
