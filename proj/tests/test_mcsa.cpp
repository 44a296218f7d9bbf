#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "expander/bounds.hpp"
#include "expander/mcsa.hpp"
#include "expander/rng.hpp"
#include "expander/spectrum.hpp"

using namespace expander;

namespace {

McsaConfig small_config() {
    McsaConfig config;
    config.vertices = 24;
    config.degree = 3;
    config.chains = 4;
    config.seed = 7;
    return config;
}

std::vector<Rng> slot_rngs_for(const McsaConfig& config) {
    std::vector<Rng> rngs;
    for (int i = 0; i < config.chains; ++i) {
        rngs.emplace_back(derive_seed(config.seed, static_cast<std::uint64_t>(i) + 1));
    }
    return rngs;
}

}  // namespace

TEST_CASE("enum names round-trip and accept hyphens") {
    CHECK(stop_rule_from_string("none") == StopRule::none);
    CHECK(stop_rule_from_string("weak-optimal") == StopRule::weak_optimal);
    CHECK(stop_rule_from_string(to_string(StopRule::ramanujan)) == StopRule::ramanujan);
    CHECK(stop_rule_from_string(to_string(StopRule::target)) == StopRule::target);
    CHECK(swap_rule_from_string(to_string(SwapRule::metropolis)) == SwapRule::metropolis);
    CHECK(swap_rule_from_string("unconditional") == SwapRule::unconditional);
    CHECK(ranking_mode_from_string("ranked-temperatures") == RankingMode::ranked_temperatures);
    CHECK(ranking_mode_from_string(to_string(RankingMode::argsort_chains)) ==
          RankingMode::argsort_chains);
    CHECK_THROWS_AS(stop_rule_from_string("sometimes"), std::invalid_argument);
    CHECK_THROWS_AS(swap_rule_from_string(""), std::invalid_argument);
    CHECK_THROWS_AS(ranking_mode_from_string("sorted"), std::invalid_argument);
}

TEST_CASE("config validation") {
    McsaConfig config = small_config();
    CHECK_NOTHROW(config.validate());

    SUBCASE("parity") {
        config.vertices = 7;
        CHECK_THROWS_AS(config.validate(), ParityViolation);
    }
    SUBCASE("chain count") {
        config.chains = 0;
        CHECK_THROWS_AS(config.validate(), std::invalid_argument);
        config.chains = 37;  // more than the 36 edges
        CHECK_THROWS_AS(config.validate(), std::invalid_argument);
        config.chains = 36;
        CHECK_NOTHROW(config.validate());
    }
    SUBCASE("cooling") {
        config.min_cooling = 0.99;
        config.max_cooling = 0.90;
        CHECK_THROWS_AS(config.validate(), InvalidCooling);
        config.min_cooling = 0.0;
        CHECK_THROWS_AS(config.validate(), InvalidCooling);
        config.min_cooling = 0.95;
        config.max_cooling = 1.0;
        CHECK_THROWS_AS(config.validate(), InvalidCooling);
        config.max_cooling = 0.95;  // equal rates are allowed
        CHECK_NOTHROW(config.validate());
    }
    SUBCASE("temperature floor and trials") {
        config.t_min = 0.0;
        CHECK_THROWS_AS(config.validate(), std::invalid_argument);
        config.t_min = 1e-3;
        config.trials_per_step = 0;
        CHECK_THROWS_AS(config.validate(), std::invalid_argument);
    }
    SUBCASE("target range is only enforced for the target rule") {
        config.target = 0.0;
        CHECK_NOTHROW(config.validate());
        config.stop_rule = StopRule::target;
        CHECK_THROWS_AS(config.validate(), std::invalid_argument);
        config.target = 0.8;
        CHECK_NOTHROW(config.validate());
    }
}

TEST_CASE("warmup defaults to three times the edge count") {
    McsaConfig config = small_config();
    CHECK(config.resolved_warmup() == 3 * 36);
    config.warmup_switches = 0;
    CHECK(config.resolved_warmup() == 0);
    config.warmup_switches = 42;
    CHECK(config.resolved_warmup() == 42);
}

TEST_CASE("define_coupling spaces the cooling rates and widths") {
    const McsaConfig config = small_config();
    const std::vector<AnnealChain> chains = define_coupling(config);
    REQUIRE(chains.size() == 4);
    const std::vector<double> expected_rates = {0.90, 0.9225, 0.945, 0.9675};
    for (std::size_t i = 0; i < chains.size(); ++i) {
        CHECK(chains[i].cooling_rate ==
              doctest::Approx(expected_rates[i]).epsilon(1e-12));
        CHECK(chains[i].neighbor_width == static_cast<int>(i) + 1);
        CHECK(chains[i].temperature == 1.0);
        CHECK(chains[i].graph.vertex_count() == 24);
        CHECK(chains[i].graph.degree() == 3);
        CHECK(chains[i].best_lambda ==
              doctest::Approx(lambda2(chains[i].graph)).epsilon(1e-12));
    }

    // Warm-up draws come from per-slot streams, so the starts differ.
    bool any_pair_differs = false;
    for (std::size_t i = 1; i < chains.size(); ++i) {
        any_pair_differs = any_pair_differs || !(chains[i].graph == chains[0].graph);
    }
    CHECK(any_pair_differs);

    // Same config, same ensemble.
    const std::vector<AnnealChain> again = define_coupling(config);
    for (std::size_t i = 0; i < chains.size(); ++i) {
        CHECK(again[i].graph == chains[i].graph);
    }

    std::vector<Rng> too_few;
    too_few.emplace_back(1);
    CHECK_THROWS_AS(define_coupling(config, too_few), std::invalid_argument);
}

TEST_CASE("one step ranks chains and keeps widths with the slots") {
    const McsaConfig config = small_config();
    std::vector<Rng> slot_rngs = slot_rngs_for(config);
    std::vector<AnnealChain> chains = define_coupling(config, slot_rngs);
    Rng master(derive_seed(config.seed, 0));

    StepDebug debug;
    const double step_best = perform_one_step(chains, slot_rngs, master, config, &debug);

    REQUIRE(debug.scores.size() == 4);
    REQUIRE(debug.rank_order.size() == 4);
    for (std::size_t j = 1; j < 4; ++j) {
        CHECK(debug.scores[debug.rank_order[j - 1]] <= debug.scores[debug.rank_order[j]]);
    }
    for (std::size_t j = 0; j < 4; ++j) {
        CHECK(chains[j].neighbor_width == static_cast<int>(j) + 1);
    }
    // Default mode sorts the temperatures onto the ladder before the swap.
    for (std::size_t j = 1; j < 4; ++j) {
        CHECK(debug.pre_swap_temperatures[j - 1] <= debug.pre_swap_temperatures[j]);
    }
    // With more than two chains the unconditional rule always trades a pair.
    CHECK(debug.swapped);
    CHECK(debug.swap_a != debug.swap_b);
    CHECK(debug.swap_a >= 0);
    CHECK(debug.swap_b < 4);

    // The swap moves temperatures between slots but never invents one.
    std::vector<double> before = debug.pre_swap_temperatures;
    std::vector<double> after;
    double reported_best = chains[0].best_lambda;
    for (const auto& chain : chains) {
        after.push_back(chain.temperature);
        reported_best = std::min(reported_best, chain.best_lambda);
    }
    std::sort(before.begin(), before.end());
    std::sort(after.begin(), after.end());
    CHECK(before == after);
    CHECK(step_best == doctest::Approx(reported_best).epsilon(1e-15));

    // Each chain cooled exactly once from temperature 1.
    const std::vector<double> expected_rates = {0.90, 0.9225, 0.945, 0.9675};
    std::vector<double> expected_temps = expected_rates;
    std::sort(expected_temps.begin(), expected_temps.end());
    for (std::size_t j = 0; j < 4; ++j) {
        CHECK(after[j] == doctest::Approx(expected_temps[j]).epsilon(1e-12));
    }
}

TEST_CASE("two chains never swap, and the ranking modes differ in temperature handling") {
    McsaConfig config = small_config();
    config.chains = 2;

    SUBCASE("ranked temperatures hands the colder one to the leader") {
        std::vector<Rng> slot_rngs = slot_rngs_for(config);
        std::vector<AnnealChain> chains = define_coupling(config, slot_rngs);
        Rng master(derive_seed(config.seed, 0));
        StepDebug debug;
        perform_one_step(chains, slot_rngs, master, config, &debug);
        CHECK_FALSE(debug.swapped);
        CHECK(debug.swap_a == -1);
        CHECK(debug.swap_b == -1);
        CHECK(chains[0].best_lambda <= chains[1].best_lambda);
        CHECK(chains[0].temperature <= chains[1].temperature);
        // Rates 0.90 and 0.945 from temperature 1: the leader gets 0.90.
        CHECK(chains[0].temperature == doctest::Approx(0.90).epsilon(1e-12));
        CHECK(chains[1].temperature == doctest::Approx(0.945).epsilon(1e-12));
    }
    SUBCASE("argsort keeps each chain's own temperature through the reorder") {
        config.ranking = RankingMode::argsort_chains;
        std::vector<Rng> slot_rngs = slot_rngs_for(config);
        std::vector<AnnealChain> chains = define_coupling(config, slot_rngs);
        const double rate_of_slot0 = chains[0].cooling_rate;
        const double rate_of_slot1 = chains[1].cooling_rate;
        Rng master(derive_seed(config.seed, 0));
        StepDebug debug;
        perform_one_step(chains, slot_rngs, master, config, &debug);
        CHECK(chains[0].best_lambda <= chains[1].best_lambda);
        const double winner_rate =
            debug.rank_order[0] == 0 ? rate_of_slot0 : rate_of_slot1;
        CHECK(chains[0].temperature == doctest::Approx(winner_rate).epsilon(1e-12));
        CHECK(chains[0].cooling_rate == doctest::Approx(winner_rate).epsilon(1e-12));
    }
}

TEST_CASE("metropolis swaps are weighted coin flips, not guarantees") {
    McsaConfig config = small_config();
    config.swap_rule = SwapRule::metropolis;
    std::vector<Rng> slot_rngs = slot_rngs_for(config);
    std::vector<AnnealChain> chains = define_coupling(config, slot_rngs);
    Rng master(derive_seed(config.seed, 0));
    for (int step = 0; step < 5; ++step) {
        StepDebug debug;
        perform_one_step(chains, slot_rngs, master, config, &debug);
        // The pair is still drawn every step; only the exchange is optional.
        CHECK(debug.swap_a >= 0);
        CHECK(debug.swap_b >= 0);
        CHECK(debug.swap_a != debug.swap_b);
    }
}

TEST_CASE("coupled annealing produces a monotone trace and a consistent result") {
    McsaConfig config = small_config();
    config.vertices = 20;
    config.t_min = 0.4;
    const McsaResult result = coupled_annealing(config);

    CHECK(result.record.stop_reason == "t_min");
    CHECK(result.record.total_steps == static_cast<int>(result.record.steps.size()));
    CHECK(result.record.seed == config.seed);
    CHECK(result.best_lambda == doctest::Approx(lambda2(result.best_graph)).epsilon(1e-12));
    CHECK(result.best_graph.vertex_count() == 20);
    CHECK(result.best_graph.degree() == 3);

    REQUIRE(!result.record.steps.empty());
    double previous_best = 2.0;
    double previous_seconds = 0.0;
    int expected_step = 1;
    for (const StepRecord& step : result.record.steps) {
        CHECK(step.step == expected_step++);
        CHECK(step.best_lambda <= previous_best);
        CHECK(step.seconds >= previous_seconds);
        CHECK(step.coldest_temperature > 0.0);
        previous_best = step.best_lambda;
        previous_seconds = step.seconds;
    }
    CHECK(result.best_lambda == result.record.steps.back().best_lambda);
}

TEST_CASE("stop rules end the run early with the matching reason") {
    McsaConfig config;
    config.vertices = 30;
    config.degree = 7;
    config.seed = 3;

    SUBCASE("ramanujan") {
        config.stop_rule = StopRule::ramanujan;
        const McsaResult result = coupled_annealing(config);
        CHECK(result.record.stop_reason == "ramanujan");
        CHECK(result.best_lambda < ramanujan_threshold(7));
    }
    SUBCASE("weak optimal") {
        config.vertices = 16;
        config.degree = 3;
        config.stop_rule = StopRule::weak_optimal;
        const McsaResult result = coupled_annealing(config);
        CHECK(result.record.stop_reason == "weak_optimal");
        CHECK(result.best_lambda < weak_optimal_threshold(3));
    }
    SUBCASE("target") {
        config.vertices = 20;
        config.degree = 3;
        config.stop_rule = StopRule::target;
        config.target = 0.99;
        const McsaResult result = coupled_annealing(config);
        CHECK(result.record.stop_reason == "target");
        CHECK(result.best_lambda < 0.99);
        CHECK(result.record.total_steps >= 1);
    }
}

TEST_CASE("a single chain runs the plain annealing loop") {
    McsaConfig config = small_config();
    config.vertices = 14;
    config.chains = 1;
    config.t_min = 0.3;
    const McsaResult result = coupled_annealing(config);
    CHECK(result.record.stop_reason == "t_min");
    CHECK(result.best_lambda <= 1.0);
    CHECK(result.best_graph.degree() == 3);
}

TEST_CASE("fixed seeds reproduce runs exactly, in both execution modes") {
    McsaConfig config = small_config();
    config.t_min = 0.5;
    const McsaResult first = coupled_annealing(config);
    const McsaResult second = coupled_annealing(config);
    CHECK(first.best_graph == second.best_graph);
    CHECK(first.best_lambda == second.best_lambda);
    REQUIRE(first.record.steps.size() == second.record.steps.size());
    for (std::size_t i = 0; i < first.record.steps.size(); ++i) {
        CHECK(first.record.steps[i].best_lambda == second.record.steps[i].best_lambda);
        CHECK(first.record.steps[i].coldest_temperature ==
              second.record.steps[i].coldest_temperature);
    }

    config.parallel = true;
    const McsaResult threaded = coupled_annealing(config);
    CHECK(threaded.best_graph == first.best_graph);
    CHECK(threaded.best_lambda == first.best_lambda);
    REQUIRE(threaded.record.steps.size() == first.record.steps.size());
    for (std::size_t i = 0; i < first.record.steps.size(); ++i) {
        CHECK(threaded.record.steps[i].best_lambda == first.record.steps[i].best_lambda);
    }

    McsaConfig other = config;
    other.seed = 8;
    CHECK_FALSE(coupled_annealing(other).best_graph == first.best_graph);
}
