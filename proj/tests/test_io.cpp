#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "expander/io.hpp"
#include "expander/mcsa.hpp"
#include "expander/rng.hpp"
#include "expander/switching.hpp"

using namespace expander;

namespace {

std::filesystem::path scratch_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("expander_io_test_" + name);
}

struct ScratchFile {
    std::filesystem::path path;
    explicit ScratchFile(const std::string& name) : path(scratch_path(name)) {}
    ~ScratchFile() { std::filesystem::remove(path); }
};

}  // namespace

TEST_CASE("format_double is shortest round-trip") {
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(-2.25) == "-2.25");
    for (double value : {1.0 / 3.0, 0.96737101086343569, 1e300, -1e-12, 0.0}) {
        CHECK(std::stod(format_double(value)) == value);
    }
}

TEST_CASE("adjacency CSV round-trips and has a stable layout") {
    const RegularGraph k4 = RegularGraph::circulant(4, 3);
    CHECK(adjacency_to_csv(k4) == "0,1,1,1\n1,0,1,1\n1,1,0,1\n1,1,1,0\n");
    CHECK(adjacency_from_csv(adjacency_to_csv(k4)) == k4);

    Rng rng(2);
    const RegularGraph random = random_regular_graph(18, 4, 300, rng).graph;
    CHECK(adjacency_from_csv(adjacency_to_csv(random)) == random);
}

TEST_CASE("adjacency CSV tolerates CRLF line endings") {
    const std::string crlf = "0,1,1,1\r\n1,0,1,1\r\n1,1,0,1\r\n1,1,1,0\r\n";
    CHECK(adjacency_from_csv(crlf) == RegularGraph::circulant(4, 3));
}

TEST_CASE("malformed adjacency text is reported as a bad file") {
    CHECK_THROWS_AS(adjacency_from_csv(""), BadGraphFile);
    CHECK_THROWS_AS(adjacency_from_csv("0,1\n1,0\n\n"), BadGraphFile);      // empty line
    CHECK_THROWS_AS(adjacency_from_csv("0,2\n2,0\n"), BadGraphFile);        // bad cell
    CHECK_THROWS_AS(adjacency_from_csv("0,x\nx,0\n"), BadGraphFile);        // bad cell
    CHECK_THROWS_AS(adjacency_from_csv("0,1\n1\n"), BadGraphFile);          // ragged row
    CHECK_THROWS_AS(adjacency_from_csv("0,1,1\n1,0,1\n"), BadGraphFile);    // not square
    CHECK_THROWS_AS(adjacency_from_csv("0,1\n0,1\n"), BadGraphFile);        // asymmetric
    CHECK_THROWS_AS(adjacency_from_csv("1,1\n1,1\n"), BadGraphFile);        // loops
    CHECK_THROWS_AS(adjacency_from_csv("0,1,0\n1,0,1\n0,1,0\n"), BadGraphFile);  // irregular
}

TEST_CASE("adjacency files save and load") {
    ScratchFile file("adjacency.csv");
    const RegularGraph graph = RegularGraph::circulant(10, 3);
    save_adjacency_csv(graph, file.path);
    CHECK(load_adjacency_csv(file.path) == graph);
    CHECK_THROWS_AS(load_adjacency_csv(scratch_path("missing.csv")), BadGraphFile);
}

TEST_CASE("histogram CSV layout") {
    const std::vector<HistogramBin> bins = {{-1.0, 3}, {0.0, 17}};
    CHECK(histogram_to_csv(bins) == "bin_lo,count\n-1,3\n0,17\n");
}

TEST_CASE("trace CSV layout") {
    const std::vector<StepRecord> steps = {{1, 0.75, 0.9, 0.5}, {2, 0.5, 0.81, 1.0}};
    CHECK(trace_to_csv(steps) ==
          "step,best_lambda2,coldest_temperature,seconds\n"
          "1,0.75,0.9,0.5\n"
          "2,0.5,0.81,1\n");
}

TEST_CASE("run documents survive a JSON round-trip without losing precision") {
    McsaConfig config;
    config.vertices = 20;
    config.degree = 3;
    config.chains = 3;
    config.t_min = 0.5;
    config.stop_rule = StopRule::target;
    config.target = 0.97;
    config.swap_rule = SwapRule::metropolis;
    config.ranking = RankingMode::argsort_chains;
    config.seed = 12345;
    const McsaResult result = coupled_annealing(config);

    const RunDocument document{config, result.record, result.best_lambda, 1.25};
    const RunDocument loaded = run_document_from_json(run_document_to_json(document));

    CHECK(loaded.config.vertices == config.vertices);
    CHECK(loaded.config.degree == config.degree);
    CHECK(loaded.config.chains == config.chains);
    CHECK(loaded.config.min_cooling == config.min_cooling);
    CHECK(loaded.config.max_cooling == config.max_cooling);
    CHECK(loaded.config.t_min == config.t_min);
    CHECK(loaded.config.trials_per_step == config.trials_per_step);
    CHECK(loaded.config.warmup_switches == config.warmup_switches);
    CHECK(loaded.config.stop_rule == config.stop_rule);
    CHECK(loaded.config.target == config.target);
    CHECK(loaded.config.swap_rule == config.swap_rule);
    CHECK(loaded.config.ranking == config.ranking);
    CHECK(loaded.config.parallel == config.parallel);
    CHECK(loaded.config.seed == config.seed);
    CHECK(loaded.record.stop_reason == result.record.stop_reason);
    CHECK(loaded.record.total_steps == result.record.total_steps);
    CHECK(loaded.record.seed == result.record.seed);
    CHECK(loaded.best_lambda == result.best_lambda);  // exact, not approximate
    CHECK(loaded.elapsed_seconds == 1.25);
    REQUIRE(loaded.record.steps.size() == result.record.steps.size());
    for (std::size_t i = 0; i < loaded.record.steps.size(); ++i) {
        CHECK(loaded.record.steps[i].step == result.record.steps[i].step);
        CHECK(loaded.record.steps[i].best_lambda == result.record.steps[i].best_lambda);
        CHECK(loaded.record.steps[i].coldest_temperature ==
              result.record.steps[i].coldest_temperature);
        CHECK(loaded.record.steps[i].seconds == result.record.steps[i].seconds);
    }

    ScratchFile file("run.json");
    save_run_document(document, file.path);
    const RunDocument from_disk = load_run_document(file.path);
    CHECK(from_disk.best_lambda == document.best_lambda);
    CHECK(from_disk.record.stop_reason == document.record.stop_reason);
}

TEST_CASE("broken run records are reported as bad files") {
    CHECK_THROWS_AS(load_run_document(scratch_path("missing.json")), BadGraphFile);

    ScratchFile garbage("garbage.json");
    {
        std::ofstream out(garbage.path);
        out << "{ this is not json";
    }
    CHECK_THROWS_AS(load_run_document(garbage.path), BadGraphFile);

    ScratchFile missing_keys("missing_keys.json");
    {
        std::ofstream out(missing_keys.path);
        out << "{\"config\": {}}";
    }
    CHECK_THROWS_AS(load_run_document(missing_keys.path), BadGraphFile);

    ScratchFile bad_enum("bad_enum.json");
    {
        McsaConfig config;
        config.vertices = 20;
        config.degree = 3;
        config.t_min = 0.9;
        const McsaResult result = coupled_annealing(config);
        const RunDocument document{config, result.record, result.best_lambda, 0.0};
        nlohmann::json json = run_document_to_json(document);
        json["config"]["stop_rule"] = "sometimes";
        std::ofstream out(bad_enum.path);
        out << json.dump();
    }
    CHECK_THROWS_AS(load_run_document(bad_enum.path), BadGraphFile);
}
