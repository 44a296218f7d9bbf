#pragma once

#include <optional>
#include <stdexcept>

namespace expander {

// Degree 2 collapses the logarithm base sqrt(d - 1) to 1, so the size-aware
// lower bound has no meaning there.
struct DegenerateBase : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// 2*sqrt(d-1)/d: a d-regular graph with lambda2 below this line is Ramanujan.
double ramanujan_threshold(int d);

// Size-aware lower bound: with k = log_{sqrt(d-1)}(n) and r the smallest
// integer satisfying r - 1 >= k, returns ramanujan_threshold(d)*(1 - 1/(2r)).
// Approaches the Ramanujan threshold as n grows.
double weak_lower_bound(int n, int d);

// ramanujan_threshold(d) * (1 - 1/(2d)): the slightly lower line that every
// sufficiently large d-regular graph must eventually cross.
double weak_optimal_threshold(int d);

// Diameter-based lower bound 2*sqrt(d-1)/d - (2*sqrt(d-1) - 1)/(d*floor(m/2)).
// nullopt when the diameter is absent (disconnected graph) or m = 1, where
// floor(m/2) = 0 degenerates the correction term.
std::optional<double> strict_lower_bound(int d, std::optional<int> diameter);

// Natural log of the asymptotic number of d-regular graphs on n vertices:
// (nd/2)(ln(nd) - 1) + ln(2)/2 + (1 - d^2)/4.
double log_graph_count(int n, int d);

// Poisson mean (d-1)^k / (2k) for the number of k-cycles in a random
// d-regular graph.
double expected_cycle_count(int d, int k);

struct BoundSet {
    double ramanujan = 0.0;
    double weak_lower = 0.0;
    double weak_optimal = 0.0;
    std::optional<double> strict_lower;
    int degree = 0;
    int vertex_count = 0;
    std::optional<int> diameter;

    // Requires d >= 3 (weak_lower is degenerate below that).
    static BoundSet compute(int n, int d, std::optional<int> diameter);
};

// Margins are lambda2 minus the bound, so a negative margin means the value
// sits below that line. Comparisons are strict with no epsilon; callers can
// apply their own tolerance to the margins.
struct Classification {
    double lambda2 = 0.0;
    bool is_ramanujan = false;
    bool below_weak_optimal = false;
    std::optional<bool> above_strict;
    double ramanujan_margin = 0.0;
    double weak_optimal_margin = 0.0;
    std::optional<double> strict_margin;
};

Classification classify(double lambda2, const BoundSet& bounds);

}  // namespace expander
