#include "expander/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

namespace expander {

std::string format_double(double value) {
    char buffer[32];
    const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
    if (result.ec != std::errc{}) {
        throw std::runtime_error("double formatting failed");
    }
    return std::string(buffer, result.ptr);
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    }
    out << content;
    if (!out) {
        throw std::runtime_error("write to " + path.string() + " failed");
    }
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw BadGraphFile("cannot open " + path.string() + " for reading");
    }
    std::ostringstream content;
    content << in.rdbuf();
    return std::move(content).str();
}

}  // namespace

std::string adjacency_to_csv(const RegularGraph& graph) {
    const int n = graph.vertex_count();
    const auto& adj = graph.adjacency();
    std::string text;
    text.reserve(static_cast<std::size_t>(n) * (2 * n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (j > 0) text += ',';
            text += adj(i, j) ? '1' : '0';
        }
        text += '\n';
    }
    return text;
}

RegularGraph adjacency_from_csv(const std::string& text) {
    std::vector<std::vector<std::uint8_t>> rows;
    std::size_t line_start = 0;
    while (line_start < text.size()) {
        std::size_t line_end = text.find('\n', line_start);
        if (line_end == std::string::npos) line_end = text.size();
        std::size_t content_end = line_end;
        if (content_end > line_start && text[content_end - 1] == '\r') --content_end;

        if (content_end > line_start) {
            std::vector<std::uint8_t> row;
            std::size_t cell_start = line_start;
            while (cell_start <= content_end) {
                std::size_t cell_end = text.find(',', cell_start);
                if (cell_end == std::string::npos || cell_end > content_end) {
                    cell_end = content_end;
                }
                const std::string_view cell(text.data() + cell_start, cell_end - cell_start);
                if (cell == "0") {
                    row.push_back(0);
                } else if (cell == "1") {
                    row.push_back(1);
                } else {
                    throw BadGraphFile("adjacency cell must be 0 or 1, got \"" +
                                       std::string(cell) + "\"");
                }
                if (cell_end == content_end) break;
                cell_start = cell_end + 1;
            }
            rows.push_back(std::move(row));
        } else if (line_end < text.size()) {
            throw BadGraphFile("adjacency file contains an empty line");
        }
        line_start = line_end + 1;
    }

    if (rows.empty()) {
        throw BadGraphFile("adjacency file is empty");
    }
    const std::size_t n = rows.size();
    AdjacencyMatrix adj(static_cast<int>(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) {
            throw BadGraphFile("adjacency row " + std::to_string(i) + " has " +
                               std::to_string(rows[i].size()) + " cells, expected " +
                               std::to_string(n));
        }
        for (std::size_t j = 0; j < n; ++j) {
            adj.set(static_cast<int>(i), static_cast<int>(j), rows[i][j]);
        }
    }
    try {
        return RegularGraph::from_adjacency(std::move(adj));
    } catch (const std::invalid_argument& error) {
        throw BadGraphFile(std::string("adjacency file is not a regular graph: ") +
                           error.what());
    }
}

void save_adjacency_csv(const RegularGraph& graph, const std::filesystem::path& path) {
    write_file(path, adjacency_to_csv(graph));
}

RegularGraph load_adjacency_csv(const std::filesystem::path& path) {
    return adjacency_from_csv(read_file(path));
}

std::string histogram_to_csv(const std::vector<HistogramBin>& bins) {
    std::string text = "bin_lo,count\n";
    for (const auto& bin : bins) {
        text += format_double(bin.lower_edge);
        text += ',';
        text += std::to_string(bin.count);
        text += '\n';
    }
    return text;
}

void save_histogram_csv(const std::vector<HistogramBin>& bins,
                        const std::filesystem::path& path) {
    write_file(path, histogram_to_csv(bins));
}

std::string trace_to_csv(const std::vector<StepRecord>& steps) {
    std::string text = "step,best_lambda2,coldest_temperature,seconds\n";
    for (const auto& record : steps) {
        text += std::to_string(record.step);
        text += ',';
        text += format_double(record.best_lambda);
        text += ',';
        text += format_double(record.coldest_temperature);
        text += ',';
        text += format_double(record.seconds);
        text += '\n';
    }
    return text;
}

void save_trace_csv(const std::vector<StepRecord>& steps,
                    const std::filesystem::path& path) {
    write_file(path, trace_to_csv(steps));
}

nlohmann::json run_document_to_json(const RunDocument& document) {
    const auto& config = document.config;
    nlohmann::json json;
    json["config"] = {
        {"vertices", config.vertices},
        {"degree", config.degree},
        {"chains", config.chains},
        {"min_cooling", config.min_cooling},
        {"max_cooling", config.max_cooling},
        {"t_min", config.t_min},
        {"trials_per_step", config.trials_per_step},
        {"warmup_switches", config.warmup_switches},
        {"stop_rule", to_string(config.stop_rule)},
        {"target", config.target},
        {"swap_rule", to_string(config.swap_rule)},
        {"ranking", to_string(config.ranking)},
        {"parallel", config.parallel},
        {"seed", config.seed},
    };
    nlohmann::json trace = nlohmann::json::array();
    for (const auto& step : document.record.steps) {
        trace.push_back({
            {"step", step.step},
            {"best_lambda2", step.best_lambda},
            {"coldest_temperature", step.coldest_temperature},
            {"seconds", step.seconds},
        });
    }
    json["trace"] = std::move(trace);
    json["stop_reason"] = document.record.stop_reason;
    json["total_steps"] = document.record.total_steps;
    json["seed"] = document.record.seed;
    json["best_lambda2"] = document.best_lambda;
    json["elapsed_seconds"] = document.elapsed_seconds;
    return json;
}

RunDocument run_document_from_json(const nlohmann::json& json) {
    RunDocument document{McsaConfig{}, RunRecord{}, 0.0, 0.0};
    const auto& config = json.at("config");
    document.config.vertices = config.at("vertices").get<int>();
    document.config.degree = config.at("degree").get<int>();
    document.config.chains = config.at("chains").get<int>();
    document.config.min_cooling = config.at("min_cooling").get<double>();
    document.config.max_cooling = config.at("max_cooling").get<double>();
    document.config.t_min = config.at("t_min").get<double>();
    document.config.trials_per_step = config.at("trials_per_step").get<int>();
    document.config.warmup_switches = config.at("warmup_switches").get<int>();
    document.config.stop_rule = stop_rule_from_string(config.at("stop_rule").get<std::string>());
    document.config.target = config.at("target").get<double>();
    document.config.swap_rule = swap_rule_from_string(config.at("swap_rule").get<std::string>());
    document.config.ranking = ranking_mode_from_string(config.at("ranking").get<std::string>());
    document.config.parallel = config.at("parallel").get<bool>();
    document.config.seed = config.at("seed").get<std::uint64_t>();

    for (const auto& step : json.at("trace")) {
        document.record.steps.push_back({
            step.at("step").get<int>(),
            step.at("best_lambda2").get<double>(),
            step.at("coldest_temperature").get<double>(),
            step.at("seconds").get<double>(),
        });
    }
    document.record.stop_reason = json.at("stop_reason").get<std::string>();
    document.record.total_steps = json.at("total_steps").get<int>();
    document.record.seed = json.at("seed").get<std::uint64_t>();
    document.best_lambda = json.at("best_lambda2").get<double>();
    document.elapsed_seconds = json.at("elapsed_seconds").get<double>();
    return document;
}

void save_run_document(const RunDocument& document, const std::filesystem::path& path) {
    write_file(path, run_document_to_json(document).dump(2) + "\n");
}

RunDocument load_run_document(const std::filesystem::path& path) {
    try {
        return run_document_from_json(nlohmann::json::parse(read_file(path)));
    } catch (const nlohmann::json::exception& error) {
        throw BadGraphFile(std::string("run record does not parse: ") + error.what());
    } catch (const std::invalid_argument& error) {
        // e.g. an enum name the library does not know
        throw BadGraphFile(std::string("run record does not parse: ") + error.what());
    }
}

}  // namespace expander
