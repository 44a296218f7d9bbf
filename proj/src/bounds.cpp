#include "expander/bounds.hpp"

#include <cmath>
#include <string>

namespace expander {

namespace {

void require_degree(int d, int minimum) {
    if (d < minimum) {
        throw std::invalid_argument("degree must be at least " + std::to_string(minimum) +
                                    ", got " + std::to_string(d));
    }
}

}  // namespace

double ramanujan_threshold(int d) {
    require_degree(d, 2);
    return 2.0 * std::sqrt(static_cast<double>(d - 1)) / d;
}

double weak_lower_bound(int n, int d) {
    if (d == 2) {
        throw DegenerateBase("degree 2 makes the log base sqrt(d-1) equal to 1");
    }
    require_degree(d, 3);
    if (n < d + 1) {
        throw std::invalid_argument("a simple d-regular graph needs at least d+1 vertices");
    }
    double k = std::log(static_cast<double>(n)) /
               std::log(std::sqrt(static_cast<double>(d - 1)));
    // Snap k onto the integer when n is an exact power of sqrt(d-1), so the
    // rounding noise of the two logs cannot push r one step too high.
    const double snapped = std::round(k);
    if (std::abs(k - snapped) <= 1e-12) k = snapped;
    const int r = static_cast<int>(std::ceil(k)) + 1;  // smallest integer >= k + 1
    return ramanujan_threshold(d) * (1.0 - 1.0 / (2.0 * r));
}

double weak_optimal_threshold(int d) {
    require_degree(d, 2);
    return ramanujan_threshold(d) * (1.0 - 1.0 / (2.0 * d));
}

std::optional<double> strict_lower_bound(int d, std::optional<int> diameter) {
    require_degree(d, 2);
    if (!diameter) return std::nullopt;  // disconnected: no finite diameter
    if (*diameter < 1) {
        throw std::invalid_argument("diameter must be at least 1, got " +
                                    std::to_string(*diameter));
    }
    const int half = *diameter / 2;
    if (half == 0) return std::nullopt;  // m = 1 zeroes the divisor
    const double root = 2.0 * std::sqrt(static_cast<double>(d - 1));
    return root / d - (root - 1.0) / (d * static_cast<double>(half));
}

double log_graph_count(int n, int d) {
    if (d < 1) {
        throw std::invalid_argument("degree must be at least 1, got " + std::to_string(d));
    }
    if (n < 1 || (static_cast<long long>(n) * d) % 2 != 0) {
        throw std::invalid_argument("n*d must be even to form a d-regular graph");
    }
    const double nd = static_cast<double>(n) * static_cast<double>(d);
    return nd / 2.0 * (std::log(nd) - 1.0) + std::log(2.0) / 2.0 +
           (1.0 - static_cast<double>(d) * d) / 4.0;
}

double expected_cycle_count(int d, int k) {
    require_degree(d, 2);
    if (k < 3) {
        throw std::invalid_argument("cycle length must be at least 3, got " +
                                    std::to_string(k));
    }
    return std::pow(static_cast<double>(d - 1), k) / (2.0 * k);
}

BoundSet BoundSet::compute(int n, int d, std::optional<int> diameter) {
    BoundSet bounds;
    bounds.ramanujan = ramanujan_threshold(d);
    bounds.weak_lower = weak_lower_bound(n, d);
    bounds.weak_optimal = weak_optimal_threshold(d);
    bounds.strict_lower = strict_lower_bound(d, diameter);
    bounds.degree = d;
    bounds.vertex_count = n;
    bounds.diameter = diameter;
    return bounds;
}

Classification classify(double lambda2, const BoundSet& bounds) {
    if (!(lambda2 >= 0.0 && lambda2 <= 1.0)) {
        throw std::invalid_argument("lambda2 must lie in [0, 1]");
    }
    Classification result;
    result.lambda2 = lambda2;
    result.is_ramanujan = lambda2 < bounds.ramanujan;
    result.below_weak_optimal = lambda2 < bounds.weak_optimal;
    result.ramanujan_margin = lambda2 - bounds.ramanujan;
    result.weak_optimal_margin = lambda2 - bounds.weak_optimal;
    if (bounds.strict_lower) {
        result.above_strict = lambda2 > *bounds.strict_lower;
        result.strict_margin = lambda2 - *bounds.strict_lower;
    }
    return result;
}

}  // namespace expander
