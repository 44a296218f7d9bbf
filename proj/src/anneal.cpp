#include "expander/anneal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "expander/spectrum.hpp"
#include "expander/switching.hpp"

namespace expander {

AnnealChain AnnealChain::start(RegularGraph initial, double temperature, double cooling_rate,
                               int neighbor_width) {
    if (!(temperature > 0.0)) {
        throw std::invalid_argument("temperature must be positive");
    }
    if (!(cooling_rate > 0.0 && cooling_rate < 1.0)) {
        throw std::invalid_argument("cooling rate must lie in (0, 1)");
    }
    if (neighbor_width < 1) {
        throw std::invalid_argument("neighbor width must be positive");
    }
    const double score = lambda2(initial);
    RegularGraph best = initial;
    return AnnealChain{std::move(initial), score,          temperature, cooling_rate,
                       neighbor_width,     std::move(best), score};
}

double acceptance_probability(double current, double candidate, double temperature) {
    if (!(temperature > 0.0)) {
        throw std::invalid_argument("temperature must be positive");
    }
    return std::min(1.0, std::exp((current - candidate) / temperature));
}

AnnealChain partial_anneal(AnnealChain chain, int trials, Rng& rng,
                           const TrialObserver& observer) {
    if (trials < 0) {
        throw std::invalid_argument("trial count must be nonnegative");
    }
    if (!(chain.temperature > 0.0)) {
        throw std::invalid_argument("temperature must be positive");
    }
    for (int t = 0; t < trials; ++t) {
        RegularGraph candidate = n_switch_neighbor(chain.graph, chain.neighbor_width, rng);
        const double candidate_lambda = lambda2(candidate);
        TrialEvent event{candidate_lambda, false, false};
        if (candidate_lambda < chain.best_lambda) {
            chain.best_graph = candidate;
            chain.best_lambda = candidate_lambda;
            event.improved_best = true;
        }
        if (candidate_lambda < chain.current_lambda) {
            event.accepted_current = true;
        } else {
            // Stochastic acceptance only on the non-improvement branch; the
            // improvement branch never burns a random draw.
            const double ap = acceptance_probability(chain.current_lambda, candidate_lambda,
                                                     chain.temperature);
            event.accepted_current = ap > rng.next_unit();
        }
        if (event.accepted_current) {
            chain.graph = std::move(candidate);
            chain.current_lambda = candidate_lambda;
        }
        if (observer) observer(event);
    }
    chain.temperature *= chain.cooling_rate;
    return chain;
}

}  // namespace expander
