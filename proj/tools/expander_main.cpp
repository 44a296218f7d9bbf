#include "CLI11.hpp"

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <string>

#include "expander/bounds.hpp"
#include "expander/graph.hpp"
#include "expander/io.hpp"
#include "expander/mcsa.hpp"
#include "expander/spectrum.hpp"
#include "expander/switching.hpp"

namespace {

using expander::format_double;

std::uint64_t entropy_seed() {
    std::random_device device;
    return (static_cast<std::uint64_t>(device()) << 32) ^ device();
}

// Every randomized command announces the seed it ran with, so any published
// result can be reproduced by passing the same value back in.
std::uint64_t resolve_seed(const CLI::Option* option, std::uint64_t requested) {
    const std::uint64_t seed = option->count() ? requested : entropy_seed();
    std::cout << "seed " << seed << '\n';
    return seed;
}

struct GenerateArgs {
    int n = 0;
    int d = 0;
    int switches = 0;
    std::uint64_t seed = 0;
    std::string out = "adjacency.csv";
};

void run_generate(const GenerateArgs& args, const CLI::Option* seed_option) {
    expander::RegularGraph graph = expander::RegularGraph::circulant(args.n, args.d);
    if (args.switches > 0) {
        expander::Rng rng(resolve_seed(seed_option, args.seed));
        auto result = expander::random_regular_graph(args.n, args.d, args.switches, rng);
        graph = std::move(result.graph);
        std::cout << "accepted_switches " << result.accepted_switches << '\n';
    }
    expander::save_adjacency_csv(graph, args.out);
    std::cout << "edges " << graph.edge_count() << '\n';
    std::cout << "lambda2 " << format_double(expander::lambda2(graph)) << '\n';
    std::cout << "wrote " << args.out << '\n';
}

void print_classification(const expander::RegularGraph& graph, double lambda2_value) {
    const int n = graph.vertex_count();
    const int d = graph.degree();
    std::cout << "lambda2 " << format_double(lambda2_value) << '\n';
    if (d < 2) return;  // no thresholds exist for degree-1 matchings

    const double ramanujan = expander::ramanujan_threshold(d);
    std::cout << "ramanujan_threshold " << format_double(ramanujan) << " is_ramanujan "
              << (lambda2_value < ramanujan ? "true" : "false") << '\n';

    const double weak_optimal = expander::weak_optimal_threshold(d);
    std::cout << "weak_optimal_threshold " << format_double(weak_optimal)
              << " below_weak_optimal "
              << (lambda2_value < weak_optimal ? "true" : "false") << '\n';

    if (d >= 3) {
        std::cout << "weak_lower_bound " << format_double(expander::weak_lower_bound(n, d))
                  << '\n';
    }

    const auto diameter = graph.diameter();
    const auto strict = expander::strict_lower_bound(d, diameter);
    if (strict) {
        std::cout << "strict_lower_bound " << format_double(*strict) << " above_strict "
                  << (lambda2_value > *strict ? "true" : "false") << " diameter "
                  << *diameter << '\n';
    } else {
        std::cout << "strict_lower_bound unavailable\n";
    }
}

struct SpectrumArgs {
    std::string in;
    int bins = 40;
    std::string out = "histogram.csv";
};

void run_spectrum(const SpectrumArgs& args) {
    const expander::RegularGraph graph = expander::load_adjacency_csv(args.in);
    const auto report = expander::normalized_spectrum(graph);
    expander::save_histogram_csv(expander::eigen_histogram(report.eigenvalues, args.bins),
                                 args.out);
    print_classification(graph, report.lambda2);
    std::cout << "wrote " << args.out << '\n';
}

struct BoundsArgs {
    int d = 0;
    int n = 0;
    int m = 0;
    bool as_json = false;
};

void run_bounds(const BoundsArgs& args, const CLI::Option* n_option,
                const CLI::Option* m_option) {
    const double ramanujan = expander::ramanujan_threshold(args.d);
    const double weak_optimal = expander::weak_optimal_threshold(args.d);
    std::optional<double> weak_lower;
    if (n_option->count() && args.d >= 3) {
        weak_lower = expander::weak_lower_bound(args.n, args.d);
    }
    std::optional<double> strict;
    if (m_option->count()) {
        strict = expander::strict_lower_bound(args.d, args.m);
    }

    if (args.as_json) {
        nlohmann::json json;
        json["degree"] = args.d;
        json["ramanujan_threshold"] = ramanujan;
        json["weak_optimal_threshold"] = weak_optimal;
        json["weak_lower_bound"] = weak_lower ? nlohmann::json(*weak_lower)
                                              : nlohmann::json(nullptr);
        json["strict_lower_bound"] = strict ? nlohmann::json(*strict)
                                            : nlohmann::json(nullptr);
        if (n_option->count()) json["vertices"] = args.n;
        if (m_option->count()) json["diameter"] = args.m;
        std::cout << json.dump(2) << '\n';
        return;
    }

    std::cout << "ramanujan_threshold " << format_double(ramanujan) << '\n';
    std::cout << "weak_optimal_threshold " << format_double(weak_optimal) << '\n';
    if (weak_lower) {
        std::cout << "weak_lower_bound " << format_double(*weak_lower) << '\n';
    }
    if (m_option->count()) {
        if (strict) {
            std::cout << "strict_lower_bound " << format_double(*strict) << '\n';
        } else {
            std::cout << "strict_lower_bound unavailable\n";
        }
    }
}

struct McsaArgs {
    expander::McsaConfig config;
    std::string stop_at = "none";
    std::string swap_rule = "unconditional";
    std::string ranking = "ranked_temperatures";
    std::uint64_t seed = 0;
    std::string out_dir = ".";
};

void run_mcsa(McsaArgs& args, const CLI::Option* seed_option) {
    args.config.stop_rule = expander::stop_rule_from_string(args.stop_at);
    args.config.swap_rule = expander::swap_rule_from_string(args.swap_rule);
    args.config.ranking = expander::ranking_mode_from_string(args.ranking);
    args.config.seed = resolve_seed(seed_option, args.seed);
    args.config.validate();

    const std::filesystem::path out_dir(args.out_dir);
    std::filesystem::create_directories(out_dir);

    const auto started = std::chrono::steady_clock::now();
    expander::McsaResult result = expander::coupled_annealing(args.config);
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

    const auto adjacency_path = out_dir / "best_adjacency.csv";
    const auto record_path = out_dir / "run_record.json";
    const auto trace_path = out_dir / "trace.csv";
    expander::save_adjacency_csv(result.best_graph, adjacency_path);
    expander::save_run_document({args.config, result.record, result.best_lambda, elapsed},
                                record_path);
    expander::save_trace_csv(result.record.steps, trace_path);

    std::cout << "steps " << result.record.total_steps << '\n';
    std::cout << "stop_reason " << result.record.stop_reason << '\n';
    std::cout << "best_lambda2 " << format_double(result.best_lambda) << '\n';
    std::cout << "elapsed_seconds " << format_double(elapsed) << '\n';
    std::cout << "wrote " << adjacency_path.string() << '\n';
    std::cout << "wrote " << record_path.string() << '\n';
    std::cout << "wrote " << trace_path.string() << '\n';
}

struct SwitchExperimentArgs {
    int n = 0;
    int d = 0;
    int count = 499;
    std::uint64_t seed = 0;
    std::string out = "switch_experiment.csv";
};

void run_switch_experiment(const SwitchExperimentArgs& args,
                           const CLI::Option* seed_option) {
    if (args.count < 0) {
        throw std::invalid_argument("count must be nonnegative");
    }
    expander::Rng rng(resolve_seed(seed_option, args.seed));
    expander::RegularGraph graph = expander::RegularGraph::circulant(args.n, args.d);

    std::string csv = "index,lambda2\n";
    csv += "0," + format_double(expander::lambda2(graph)) + '\n';
    long long below = 0;
    const double threshold =
        args.d >= 2 ? expander::ramanujan_threshold(args.d) : 0.0;
    for (int index = 1; index <= args.count; ++index) {
        graph = expander::switch_edges(graph, rng).graph;
        const double value = expander::lambda2(graph);
        csv += std::to_string(index) + ',' + format_double(value) + '\n';
        if (args.d >= 2 && value < threshold) ++below;
    }

    std::ofstream out(args.out, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open " + args.out + " for writing");
    }
    out << csv;

    if (args.d >= 2 && args.count > 0) {
        std::cout << "below_ramanujan " << below << "/" << args.count << '\n';
        std::cout << "fraction_below_ramanujan "
                  << format_double(static_cast<double>(below) / args.count) << '\n';
    }
    std::cout << "wrote " << args.out << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Construct, randomize, and spectrally optimize regular graphs"};
    app.require_subcommand(1);

    GenerateArgs generate_args;
    auto* generate = app.add_subcommand(
        "generate", "Construct a d-regular graph, optionally randomized by edge switches");
    generate->add_option("--n", generate_args.n, "vertex count")->required();
    generate->add_option("--d", generate_args.d, "degree")->required();
    generate->add_option("--switches", generate_args.switches,
                         "randomizing switch attempts (default 0)");
    auto* generate_seed = generate->add_option("--seed", generate_args.seed, "rng seed");
    generate->add_option("--out", generate_args.out, "adjacency CSV path");
    generate->callback([&] { run_generate(generate_args, generate_seed); });

    SpectrumArgs spectrum_args;
    auto* spectrum = app.add_subcommand(
        "spectrum", "Eigenvalue histogram and threshold classification of a saved graph");
    spectrum->add_option("--in", spectrum_args.in, "adjacency CSV path")->required();
    spectrum->add_option("--bins", spectrum_args.bins, "histogram bin count (default 40)");
    spectrum->add_option("--out", spectrum_args.out, "histogram CSV path");
    spectrum->callback([&] { run_spectrum(spectrum_args); });

    BoundsArgs bounds_args;
    auto* bounds = app.add_subcommand("bounds", "Spectral thresholds for a given degree");
    bounds->add_option("--d", bounds_args.d, "degree")->required();
    auto* bounds_n = bounds->add_option("--n", bounds_args.n,
                                        "vertex count (enables the size-aware bound)");
    auto* bounds_m = bounds->add_option("--m", bounds_args.m,
                                        "graph diameter (enables the strict bound)");
    bounds->add_flag("--json", bounds_args.as_json, "emit JSON instead of text");
    bounds->callback([&] { run_bounds(bounds_args, bounds_n, bounds_m); });

    McsaArgs mcsa_args;
    auto* mcsa = app.add_subcommand(
        "mcsa", "Coupled simulated annealing searching for a low-lambda2 graph");
    mcsa->add_option("--n", mcsa_args.config.vertices, "vertex count")->required();
    mcsa->add_option("--d", mcsa_args.config.degree, "degree")->required();
    mcsa->add_option("--chains", mcsa_args.config.chains, "chain count (default 4)");
    mcsa->add_option("--min-cooling", mcsa_args.config.min_cooling,
                     "slowest cooling rate (default 0.90)");
    mcsa->add_option("--max-cooling", mcsa_args.config.max_cooling,
                     "fastest cooling rate (default 0.99)");
    mcsa->add_option("--t-min", mcsa_args.config.t_min,
                     "stop temperature (default 1e-3)");
    mcsa->add_option("--trials", mcsa_args.config.trials_per_step,
                     "annealing trials per chain per step (default 10)");
    mcsa->add_option("--warmup", mcsa_args.config.warmup_switches,
                     "warm-up switch attempts per chain (default 3x edge count)");
    mcsa->add_option("--stop-at", mcsa_args.stop_at,
                     "none, ramanujan, weak-optimal, or target (default none)");
    mcsa->add_option("--target", mcsa_args.config.target,
                     "lambda2 target used with --stop-at target");
    mcsa->add_option("--swap-rule", mcsa_args.swap_rule,
                     "unconditional or metropolis (default unconditional)");
    mcsa->add_option("--ranking", mcsa_args.ranking,
                     "ranked-temperatures or argsort-chains (default ranked-temperatures)");
    mcsa->add_flag("--parallel", mcsa_args.config.parallel,
                   "advance chains on separate threads");
    auto* mcsa_seed = mcsa->add_option("--seed", mcsa_args.seed, "rng seed");
    mcsa->add_option("--out-dir", mcsa_args.out_dir, "output directory (default .)");
    mcsa->callback([&] { run_mcsa(mcsa_args, mcsa_seed); });

    SwitchExperimentArgs switch_args;
    auto* switch_experiment = app.add_subcommand(
        "switch-experiment",
        "Track lambda2 across successive random edge switches from the constructor graph");
    switch_experiment->add_option("--n", switch_args.n, "vertex count")->required();
    switch_experiment->add_option("--d", switch_args.d, "degree")->required();
    switch_experiment->add_option("--count", switch_args.count,
                                  "switch attempts (default 499)");
    auto* switch_seed = switch_experiment->add_option("--seed", switch_args.seed, "rng seed");
    switch_experiment->add_option("--out", switch_args.out, "per-switch lambda2 CSV path");
    switch_experiment->callback([&] { run_switch_experiment(switch_args, switch_seed); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& error) {
        const int code = app.exit(error);
        return code == 0 ? 0 : 2;
    } catch (const expander::BadGraphFile& error) {
        std::cerr << "error: " << error.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& error) {
        std::cerr << "error: " << error.what() << '\n';
        return 2;
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << '\n';
        return 1;
    }
    return 0;
}
