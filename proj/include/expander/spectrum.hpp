#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "expander/graph.hpp"

namespace expander {

// The symmetric eigensolver reported failure. Should never happen for a valid
// adjacency matrix; treated as a defect rather than a recoverable condition.
struct ConvergenceFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SpectrumReport {
    std::vector<double> eigenvalues;  // divided by the degree, sorted descending
    double lambda2 = 0.0;
    int degree = 0;
    int vertex_count = 0;
};

// Eigenvalues of the adjacency matrix divided by d, sorted descending. The
// leading entry is the Perron value 1; everything lies in [-1, 1].
SpectrumReport normalized_spectrum(const RegularGraph& graph);

// Largest absolute normalized eigenvalue after discarding one copy of the
// Perron value 1. Connected bipartite graphs score 1 through their -1
// eigenvalue, which deliberately disqualifies them as expanders.
double lambda2(const RegularGraph& graph);

struct HistogramBin {
    double lower_edge;
    std::int64_t count;
};

// Uniform bins spanning [-1, 1] regardless of the data, so histograms from
// different runs are comparable. Bins are half-open [lo, hi) except the last,
// which closes at 1 so the Perron eigenvalue lands inside.
std::vector<HistogramBin> eigen_histogram(const std::vector<double>& normalized_eigenvalues,
                                          int bins);
std::vector<HistogramBin> eigen_histogram(const RegularGraph& graph, int bins);

}  // namespace expander
