#pragma once

#include <cstdint>

#include "expander/graph.hpp"
#include "expander/rng.hpp"

namespace expander {

// Cycle lengths outside the exhaustively countable window [3, 6].
struct UnsupportedLength : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct SwitchOutcome {
    RegularGraph graph;
    bool accepted;  // false => graph is bit-identical to the input
};

// The two ways to reconnect a removed pair e1 = (a,b), e2 = (c,d) with a < b
// and c < d: crossed joins each edge's lower endpoint to the other's upper,
// giving (a,d) and (c,b); parallel joins the two lower and the two upper
// endpoints together, giving (a,c) and (b,d).
enum class Rewiring { crossed, parallel };

// Double edge switch on the edges at positions e1_index and e2_index of the
// ascending edge list: removes both edges and inserts the rewired pair. The
// move is kept only when the result is still d-regular with no loops and
// actually differs from the input; degenerate draws (shared endpoints, new
// edge already present) fail those checks and return the input unchanged.
SwitchOutcome switch_edges_at(const RegularGraph& graph, std::size_t e1_index,
                              std::size_t e2_index,
                              Rewiring rewiring = Rewiring::crossed);

// Random switch: the two edges are drawn uniformly without replacement and the
// rewiring is a fair coin flip. Offering both rewirings makes the move its own
// inverse in distribution (the chain satisfies detailed balance), so long
// switch sequences sample d-regular graphs uniformly instead of drifting.
SwitchOutcome switch_edges(const RegularGraph& graph, Rng& rng);

struct RandomizeResult {
    RegularGraph graph;
    int accepted_switches;
};

// Circulant start followed by exactly `switches` switch attempts (rejected
// attempts count toward the total).
RandomizeResult random_regular_graph(int n, int d, int switches, Rng& rng);

// Applies `width` switch attempts in sequence and returns the final graph.
// This is the neighbor move used by the annealer; wider moves perturb the
// spectrum more per proposal.
RegularGraph n_switch_neighbor(const RegularGraph& graph, int width, Rng& rng);

// Exact number of simple k-cycles for k in [3, 6]. k = 3 is trace(A^3)/6;
// longer cycles are counted by rooted path enumeration where the root is the
// cycle's smallest vertex and orientation is fixed, so each cycle is counted
// once.
std::int64_t count_cycles(const RegularGraph& graph, int k);

}  // namespace expander
