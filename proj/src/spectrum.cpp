#include "expander/spectrum.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace expander {

SpectrumReport normalized_spectrum(const RegularGraph& graph) {
    const int n = graph.vertex_count();
    const int d = graph.degree();
    const auto& adj = graph.adjacency();

    Eigen::MatrixXd matrix(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            matrix(i, j) = static_cast<double>(adj(i, j));
        }
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(matrix, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw ConvergenceFailure("symmetric eigensolve did not converge");
    }

    SpectrumReport report;
    report.degree = d;
    report.vertex_count = n;
    report.eigenvalues.resize(n);
    // Eigen returns eigenvalues ascending; flip so the Perron value leads.
    for (int i = 0; i < n; ++i) {
        report.eigenvalues[i] = solver.eigenvalues()(n - 1 - i) / d;
    }
    report.lambda2 =
        std::max(std::abs(report.eigenvalues[1]), std::abs(report.eigenvalues[n - 1]));
    return report;
}

double lambda2(const RegularGraph& graph) { return normalized_spectrum(graph).lambda2; }

std::vector<HistogramBin> eigen_histogram(const std::vector<double>& normalized_eigenvalues,
                                          int bins) {
    if (bins < 1) throw std::invalid_argument("histogram needs at least one bin");
    const double width = 2.0 / bins;
    std::vector<HistogramBin> histogram(bins);
    for (int b = 0; b < bins; ++b) {
        histogram[b] = {-1.0 + b * width, 0};
    }
    for (double value : normalized_eigenvalues) {
        int b = static_cast<int>(std::floor((value + 1.0) / width));
        // The clamp folds value = 1 into the final bin and shields against
        // rounding jitter at the ends of [-1, 1].
        b = std::clamp(b, 0, bins - 1);
        ++histogram[b].count;
    }
    return histogram;
}

std::vector<HistogramBin> eigen_histogram(const RegularGraph& graph, int bins) {
    return eigen_histogram(normalized_spectrum(graph).eigenvalues, bins);
}

}  // namespace expander
