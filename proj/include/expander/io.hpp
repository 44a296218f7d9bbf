#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "expander/graph.hpp"
#include "expander/mcsa.hpp"
#include "expander/spectrum.hpp"

namespace expander {

// Input that is not a readable, well-formed, regular adjacency file.
struct BadGraphFile : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Shortest decimal form that parses back to exactly the same double.
std::string format_double(double value);

// Adjacency CSV: n rows of n comma-separated 0/1 cells, LF line endings, no
// header. Loading validates symmetry, zero diagonal, and constant row sums,
// and reports any violation as BadGraphFile.
std::string adjacency_to_csv(const RegularGraph& graph);
RegularGraph adjacency_from_csv(const std::string& text);
void save_adjacency_csv(const RegularGraph& graph, const std::filesystem::path& path);
RegularGraph load_adjacency_csv(const std::filesystem::path& path);

// Histogram CSV with header bin_lo,count.
std::string histogram_to_csv(const std::vector<HistogramBin>& bins);
void save_histogram_csv(const std::vector<HistogramBin>& bins,
                        const std::filesystem::path& path);

// Trace CSV with header step,best_lambda2,coldest_temperature,seconds.
std::string trace_to_csv(const std::vector<StepRecord>& steps);
void save_trace_csv(const std::vector<StepRecord>& steps,
                    const std::filesystem::path& path);

// Everything a finished run needs for provenance: the configuration echo, the
// per-step trace, and the headline result.
struct RunDocument {
    McsaConfig config;
    RunRecord record;
    double best_lambda = 0.0;
    double elapsed_seconds = 0.0;
};

nlohmann::json run_document_to_json(const RunDocument& document);
RunDocument run_document_from_json(const nlohmann::json& json);
void save_run_document(const RunDocument& document, const std::filesystem::path& path);
RunDocument load_run_document(const std::filesystem::path& path);

}  // namespace expander
