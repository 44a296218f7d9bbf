#pragma once

#include <functional>

#include "expander/graph.hpp"
#include "expander/rng.hpp"

namespace expander {

// One simulated-annealing chain minimizing lambda2. The current solution may
// wander above the best one; the best pair is a separate store that only ever
// improves.
struct AnnealChain {
    RegularGraph graph;
    double current_lambda;
    double temperature;
    double cooling_rate;
    int neighbor_width;  // edge switches per proposed move
    RegularGraph best_graph;
    double best_lambda;

    // Scores the initial graph once and seeds the best store with it.
    static AnnealChain start(RegularGraph initial, double temperature, double cooling_rate,
                             int neighbor_width);
};

// Metropolis form min(1, exp((current - candidate) / temperature)):
// improvements always pass, regressions pass with weight shrinking in the gap
// and in the cold. Underflow saturates to 0.
double acceptance_probability(double current, double candidate, double temperature);

// One candidate evaluation inside partial_anneal, exposed so tests and tracing
// can watch every proposal.
struct TrialEvent {
    double candidate_lambda;
    bool improved_best;
    bool accepted_current;
};
using TrialObserver = std::function<void(const TrialEvent&)>;

// Runs `trials` proposals at the chain's temperature: each proposal is a
// neighbor_width-switch neighbor, scored by lambda2; strict improvements of
// the best store are kept, improvements of the current solution are accepted
// outright, and regressions are accepted stochastically. Cools exactly once
// after the loop (temperature *= cooling_rate), so cooling is per call, not
// per trial.
AnnealChain partial_anneal(AnnealChain chain, int trials, Rng& rng,
                           const TrialObserver& observer = {});

}  // namespace expander
