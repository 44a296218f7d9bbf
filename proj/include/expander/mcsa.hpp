#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "expander/anneal.hpp"
#include "expander/graph.hpp"
#include "expander/rng.hpp"

namespace expander {

// When to end a run before the temperature floor: never, on reaching the
// Ramanujan threshold, the weak-optimal threshold, or an explicit target.
enum class StopRule { none, ramanujan, weak_optimal, target };

// Whether the random chain exchange always happens or passes a
// temperature-weighted coin flip.
enum class SwapRule { unconditional, metropolis };

// After every step the ensemble is reordered so slot k holds the k-th best
// chain, and slot order carries the neighbor widths. ranked_temperatures (the
// default) additionally sorts the current temperatures onto the ladder, so the
// best chain refines narrow and cold. argsort_chains lets each chain keep its
// own temperature through the reorder (pairings preserved); kept for
// comparison experiments.
enum class RankingMode { ranked_temperatures, argsort_chains };

std::string to_string(StopRule rule);
std::string to_string(SwapRule rule);
std::string to_string(RankingMode mode);
StopRule stop_rule_from_string(const std::string& name);
SwapRule swap_rule_from_string(const std::string& name);
RankingMode ranking_mode_from_string(const std::string& name);

// Cooling-rate settings that would leave the open interval (0, 1).
struct InvalidCooling : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct McsaConfig {
    int vertices = 0;
    int degree = 0;
    int chains = 4;
    double min_cooling = 0.90;
    double max_cooling = 0.99;
    double t_min = 1e-3;
    int trials_per_step = 10;
    int warmup_switches = -1;  // negative: use 3 * edge count
    StopRule stop_rule = StopRule::none;
    double target = 0.0;  // read only when stop_rule == target
    SwapRule swap_rule = SwapRule::unconditional;
    RankingMode ranking = RankingMode::ranked_temperatures;
    bool parallel = false;
    std::uint64_t seed = 0;

    int resolved_warmup() const;
    void validate() const;
};

struct StepRecord {
    int step;                    // 1-based
    double best_lambda;          // global best so far, monotone nonincreasing
    double coldest_temperature;  // min over chains after the step
    double seconds;              // wall clock since the run started
};

struct RunRecord {
    std::vector<StepRecord> steps;
    std::string stop_reason;  // "t_min", "ramanujan", "weak_optimal", or "target"
    int total_steps = 0;
    std::uint64_t seed = 0;
};

struct McsaResult {
    RegularGraph best_graph;
    double best_lambda;
    RunRecord record;
};

// Builds the chain ensemble: chain i (0-based slot) gets an independently
// warm-up-randomized graph, temperature 1, cooling rate
// min_cooling + i*(max_cooling - min_cooling)/chains, and neighbor width
// i + 1. The overload taking slot_rngs draws the warm-up switches from them,
// so a caller that keeps annealing from the same streams stays reproducible.
std::vector<AnnealChain> define_coupling(const McsaConfig& config);
std::vector<AnnealChain> define_coupling(const McsaConfig& config,
                                         std::vector<Rng>& slot_rngs);

// Internals of one step, exposed for tests.
struct StepDebug {
    std::vector<double> scores;                 // ranking keys, pre-ranking slot order
    std::vector<std::size_t> rank_order;        // rank_order[j] = old slot of new slot j
    std::vector<double> pre_swap_temperatures;  // after ranking, before the swap
    int swap_a = -1;
    int swap_b = -1;
    bool swapped = false;
};

// Advances every chain by one partial_anneal on its own rng (concurrently when
// config.parallel is set; results are bit-identical either way), reorders the
// ensemble by each chain's reported best lambda2 (ladder semantics per the
// RankingMode), and — with more than two chains — picks two distinct chains at
// random and exchanges everything but their neighbor widths. Returns the
// smallest best lambda2 across chains.
double perform_one_step(std::vector<AnnealChain>& chains, std::vector<Rng>& slot_rngs,
                        Rng& master_rng, const McsaConfig& config,
                        StepDebug* debug = nullptr);

// Full run: builds the ensemble, then steps until the hottest chain reaches
// t_min or the stop rule fires, whichever comes first.
McsaResult coupled_annealing(const McsaConfig& config);

}  // namespace expander
