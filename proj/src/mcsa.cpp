#include "expander/mcsa.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <thread>
#include <utility>

#include "expander/bounds.hpp"
#include "expander/spectrum.hpp"
#include "expander/switching.hpp"

namespace expander {

std::string to_string(StopRule rule) {
    switch (rule) {
        case StopRule::none: return "none";
        case StopRule::ramanujan: return "ramanujan";
        case StopRule::weak_optimal: return "weak_optimal";
        case StopRule::target: return "target";
    }
    throw std::invalid_argument("unknown stop rule");
}

std::string to_string(SwapRule rule) {
    switch (rule) {
        case SwapRule::unconditional: return "unconditional";
        case SwapRule::metropolis: return "metropolis";
    }
    throw std::invalid_argument("unknown swap rule");
}

std::string to_string(RankingMode mode) {
    switch (mode) {
        case RankingMode::ranked_temperatures: return "ranked_temperatures";
        case RankingMode::argsort_chains: return "argsort_chains";
    }
    throw std::invalid_argument("unknown ranking mode");
}

namespace {

// Accepts hyphenated spellings from the command line.
std::string underscored(std::string name) {
    std::replace(name.begin(), name.end(), '-', '_');
    return name;
}

}  // namespace

StopRule stop_rule_from_string(const std::string& name) {
    const std::string key = underscored(name);
    if (key == "none") return StopRule::none;
    if (key == "ramanujan") return StopRule::ramanujan;
    if (key == "weak_optimal") return StopRule::weak_optimal;
    if (key == "target") return StopRule::target;
    throw std::invalid_argument("unknown stop rule: " + name);
}

SwapRule swap_rule_from_string(const std::string& name) {
    const std::string key = underscored(name);
    if (key == "unconditional") return SwapRule::unconditional;
    if (key == "metropolis") return SwapRule::metropolis;
    throw std::invalid_argument("unknown swap rule: " + name);
}

RankingMode ranking_mode_from_string(const std::string& name) {
    const std::string key = underscored(name);
    if (key == "ranked_temperatures") return RankingMode::ranked_temperatures;
    if (key == "argsort_chains") return RankingMode::argsort_chains;
    throw std::invalid_argument("unknown ranking mode: " + name);
}

int McsaConfig::resolved_warmup() const {
    if (warmup_switches >= 0) return warmup_switches;
    return 3 * (vertices * degree / 2);
}

void McsaConfig::validate() const {
    check_parity(vertices, degree);
    if (chains < 1) {
        throw std::invalid_argument("need at least one chain");
    }
    if (static_cast<long long>(chains) >
        static_cast<long long>(vertices) * degree / 2) {
        throw std::invalid_argument(
            "chain count exceeds the edge count, so the widest neighbor move would "
            "switch more edges than the graph has");
    }
    if (!(min_cooling > 0.0 && min_cooling < 1.0) ||
        !(max_cooling > 0.0 && max_cooling < 1.0) || min_cooling > max_cooling) {
        throw InvalidCooling("cooling rates must satisfy 0 < min <= max < 1");
    }
    if (!(t_min > 0.0)) {
        throw std::invalid_argument("t_min must be positive");
    }
    if (trials_per_step < 1) {
        throw std::invalid_argument("trials per step must be positive");
    }
    if (stop_rule == StopRule::target && !(target > 0.0 && target <= 1.0)) {
        throw std::invalid_argument("target must lie in (0, 1]");
    }
}

std::vector<AnnealChain> define_coupling(const McsaConfig& config,
                                         std::vector<Rng>& slot_rngs) {
    config.validate();
    if (slot_rngs.size() != static_cast<std::size_t>(config.chains)) {
        throw std::invalid_argument("need exactly one rng per chain");
    }
    const double spacing = (config.max_cooling - config.min_cooling) / config.chains;
    const int warmup = config.resolved_warmup();
    std::vector<AnnealChain> chains;
    chains.reserve(config.chains);
    for (int i = 0; i < config.chains; ++i) {
        RegularGraph graph =
            random_regular_graph(config.vertices, config.degree, warmup, slot_rngs[i]).graph;
        chains.push_back(AnnealChain::start(std::move(graph), 1.0,
                                            config.min_cooling + spacing * i, i + 1));
    }
    return chains;
}

std::vector<AnnealChain> define_coupling(const McsaConfig& config) {
    std::vector<Rng> slot_rngs;
    slot_rngs.reserve(config.chains);
    for (int i = 0; i < config.chains; ++i) {
        slot_rngs.emplace_back(derive_seed(config.seed, static_cast<std::uint64_t>(i) + 1));
    }
    return define_coupling(config, slot_rngs);
}

namespace {

void advance_all(std::vector<AnnealChain>& chains, std::vector<Rng>& slot_rngs,
                 const McsaConfig& config) {
    const std::size_t count = chains.size();
    if (config.parallel && count > 1) {
        std::vector<std::thread> workers;
        workers.reserve(count);
        for (std::size_t i = 0; i < count; ++i) {
            workers.emplace_back([&chains, &slot_rngs, &config, i] {
                chains[i] = partial_anneal(std::move(chains[i]), config.trials_per_step,
                                           slot_rngs[i]);
            });
        }
        for (auto& worker : workers) worker.join();
    } else {
        for (std::size_t i = 0; i < count; ++i) {
            chains[i] = partial_anneal(std::move(chains[i]), config.trials_per_step,
                                       slot_rngs[i]);
        }
    }
}

// Everything moves except the neighbor width, which stays with the slot.
void swap_payload(AnnealChain& a, AnnealChain& b) {
    std::swap(a.graph, b.graph);
    std::swap(a.current_lambda, b.current_lambda);
    std::swap(a.best_graph, b.best_graph);
    std::swap(a.best_lambda, b.best_lambda);
    std::swap(a.temperature, b.temperature);
    std::swap(a.cooling_rate, b.cooling_rate);
}

}  // namespace

double perform_one_step(std::vector<AnnealChain>& chains, std::vector<Rng>& slot_rngs,
                        Rng& master_rng, const McsaConfig& config, StepDebug* debug) {
    if (chains.empty()) {
        throw std::invalid_argument("need at least one chain");
    }
    if (slot_rngs.size() != chains.size()) {
        throw std::invalid_argument("need exactly one rng per chain");
    }
    const std::size_t count = chains.size();

    advance_all(chains, slot_rngs, config);

    // The annealer's return value is its best pair, and that is what flows
    // into the next step: each chain restarts from its incumbent, so cold
    // steps refine the best solution instead of wherever the current walk
    // drifted while the chain was hot.
    for (auto& chain : chains) {
        chain.graph = chain.best_graph;
        chain.current_lambda = chain.best_lambda;
    }

    // Rank by the lambda2 each chain reports for the step (its best so far,
    // which is what the annealer returns), tie-broken by slot for determinism.
    std::vector<std::size_t> order(count);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&chains](std::size_t x, std::size_t y) {
        return chains[x].best_lambda < chains[y].best_lambda;
    });

    if (debug) {
        debug->scores.resize(count);
        for (std::size_t i = 0; i < count; ++i) debug->scores[i] = chains[i].best_lambda;
        debug->rank_order.assign(order.begin(), order.end());
    }

    // Reorder so slot k holds the k-th best chain. Widths are a property of
    // the slot, so the best solution continues with the narrowest move and the
    // stragglers explore widely.
    std::vector<AnnealChain> ranked;
    ranked.reserve(count);
    for (std::size_t idx : order) ranked.push_back(std::move(chains[idx]));
    for (std::size_t j = 0; j < count; ++j) {
        ranked[j].neighbor_width = static_cast<int>(j) + 1;
    }
    chains = std::move(ranked);

    if (config.ranking == RankingMode::ranked_temperatures) {
        // The ranked ladder also hands the coldest current temperature to the
        // best chain, the next-coldest to the runner-up, and so on; the
        // compatibility mode instead lets each chain keep its own temperature
        // through the reorder, preserving chain/temperature pairings.
        std::vector<double> temperatures(count);
        for (std::size_t i = 0; i < count; ++i) temperatures[i] = chains[i].temperature;
        std::sort(temperatures.begin(), temperatures.end());
        for (std::size_t j = 0; j < count; ++j) {
            chains[j].temperature = temperatures[j];
        }
    }

    if (debug) {
        debug->pre_swap_temperatures.resize(count);
        for (std::size_t i = 0; i < count; ++i) {
            debug->pre_swap_temperatures[i] = chains[i].temperature;
        }
        debug->swap_a = -1;
        debug->swap_b = -1;
        debug->swapped = false;
    }

    if (count > 2) {
        std::size_t a = master_rng.next_below(count);
        std::size_t b = master_rng.next_below(count - 1);
        if (b >= a) ++b;
        bool exchange = true;
        if (config.swap_rule == SwapRule::metropolis) {
            const double weight =
                std::min(1.0, std::exp((chains[a].current_lambda - chains[b].current_lambda) *
                                       (1.0 / chains[a].temperature -
                                        1.0 / chains[b].temperature)));
            exchange = weight > master_rng.next_unit();
        }
        if (exchange) swap_payload(chains[a], chains[b]);
        if (debug) {
            debug->swap_a = static_cast<int>(a);
            debug->swap_b = static_cast<int>(b);
            debug->swapped = exchange;
        }
    }

    double step_best = chains[0].best_lambda;
    for (std::size_t i = 1; i < count; ++i) {
        step_best = std::min(step_best, chains[i].best_lambda);
    }
    return step_best;
}

namespace {

double max_temperature(const std::vector<AnnealChain>& chains) {
    double value = chains[0].temperature;
    for (const auto& chain : chains) value = std::max(value, chain.temperature);
    return value;
}

double min_temperature(const std::vector<AnnealChain>& chains) {
    double value = chains[0].temperature;
    for (const auto& chain : chains) value = std::min(value, chain.temperature);
    return value;
}

}  // namespace

McsaResult coupled_annealing(const McsaConfig& config) {
    config.validate();

    Rng master_rng(derive_seed(config.seed, 0));
    std::vector<Rng> slot_rngs;
    slot_rngs.reserve(config.chains);
    for (int i = 0; i < config.chains; ++i) {
        slot_rngs.emplace_back(derive_seed(config.seed, static_cast<std::uint64_t>(i) + 1));
    }
    std::vector<AnnealChain> chains = define_coupling(config, slot_rngs);

    std::size_t best_at = 0;
    for (std::size_t i = 1; i < chains.size(); ++i) {
        if (chains[i].best_lambda < chains[best_at].best_lambda) best_at = i;
    }
    RegularGraph best_graph = chains[best_at].best_graph;
    double best_lambda = chains[best_at].best_lambda;

    RunRecord record;
    record.seed = config.seed;
    record.stop_reason = "t_min";

    const auto started = std::chrono::steady_clock::now();
    int step = 0;
    while (max_temperature(chains) > config.t_min) {
        ++step;
        perform_one_step(chains, slot_rngs, master_rng, config);

        std::size_t arg = 0;
        for (std::size_t i = 1; i < chains.size(); ++i) {
            if (chains[i].best_lambda < chains[arg].best_lambda) arg = i;
        }
        if (chains[arg].best_lambda < best_lambda) {
            best_lambda = chains[arg].best_lambda;
            best_graph = chains[arg].best_graph;
        }

        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
                .count();
        record.steps.push_back({step, best_lambda, min_temperature(chains), seconds});

        bool fired = false;
        switch (config.stop_rule) {
            case StopRule::none: break;
            case StopRule::ramanujan:
                fired = best_lambda < ramanujan_threshold(config.degree);
                break;
            case StopRule::weak_optimal:
                fired = best_lambda < weak_optimal_threshold(config.degree);
                break;
            case StopRule::target:
                fired = best_lambda < config.target;
                break;
        }
        if (fired) {
            record.stop_reason = to_string(config.stop_rule);
            break;
        }
    }
    record.total_steps = step;

    return McsaResult{std::move(best_graph), best_lambda, std::move(record)};
}

}  // namespace expander
