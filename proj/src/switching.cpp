#include "expander/switching.hpp"

#include <stdexcept>
#include <string>

namespace expander {

SwitchOutcome switch_edges_at(const RegularGraph& graph, std::size_t e1_index,
                              std::size_t e2_index, Rewiring rewiring) {
    const auto edges = graph.edge_list();
    if (e1_index >= edges.size() || e2_index >= edges.size()) {
        throw std::invalid_argument("edge index out of range");
    }
    if (e1_index == e2_index) {
        throw std::invalid_argument("switch needs two distinct edges");
    }
    const Edge e1 = edges[e1_index];
    const Edge e2 = edges[e2_index];

    AdjacencyMatrix candidate = graph.adjacency();
    candidate.set_symmetric(e1.first, e1.second, 0);
    candidate.set_symmetric(e2.first, e2.second, 0);
    if (rewiring == Rewiring::crossed) {
        candidate.set_symmetric(e1.first, e2.second, 1);
        candidate.set_symmetric(e2.first, e1.second, 1);
    } else {
        candidate.set_symmetric(e1.first, e2.first, 1);
        candidate.set_symmetric(e1.second, e2.second, 1);
    }

    // Edges sharing an endpoint can rewire back onto themselves; that leaves
    // the matrix untouched, which we report as a rejection.
    if (candidate != graph.adjacency() && !has_loops(candidate) &&
        regular_degree(candidate) == std::optional<int>(graph.degree())) {
        return {RegularGraph::from_adjacency(std::move(candidate)), true};
    }
    return {graph, false};
}

SwitchOutcome switch_edges(const RegularGraph& graph, Rng& rng) {
    const std::size_t edge_count = graph.edge_count();
    const std::size_t first = rng.next_below(edge_count);
    std::size_t second = rng.next_below(edge_count - 1);
    if (second >= first) ++second;
    const Rewiring rewiring =
        rng.next_below(2) == 0 ? Rewiring::crossed : Rewiring::parallel;
    return switch_edges_at(graph, first, second, rewiring);
}

RandomizeResult random_regular_graph(int n, int d, int switches, Rng& rng) {
    if (switches < 0) throw std::invalid_argument("switch count must be nonnegative");
    RegularGraph graph = RegularGraph::circulant(n, d);
    int accepted = 0;
    for (int k = 0; k < switches; ++k) {
        SwitchOutcome outcome = switch_edges(graph, rng);
        if (outcome.accepted) ++accepted;
        graph = std::move(outcome.graph);
    }
    return {std::move(graph), accepted};
}

RegularGraph n_switch_neighbor(const RegularGraph& graph, int width, Rng& rng) {
    if (width < 1) throw std::invalid_argument("neighbor width must be positive");
    RegularGraph current = graph;
    for (int k = 0; k < width; ++k) {
        current = switch_edges(current, rng).graph;
    }
    return current;
}

namespace {

// Closed walks of length 3 counted per ordered start, i.e. trace(A^3).
std::int64_t closed_triangle_walks(const RegularGraph& graph) {
    const auto& adj = graph.adjacency();
    const int n = graph.vertex_count();
    std::vector<std::vector<int>> neighbors(n);
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (adj(u, v)) neighbors[u].push_back(v);
        }
    }
    std::int64_t walks = 0;
    for (int i = 0; i < n; ++i) {
        for (int j : neighbors[i]) {
            for (int k : neighbors[j]) {
                walks += adj(k, i);
            }
        }
    }
    return walks;
}

struct CycleCounter {
    const AdjacencyMatrix& adj;
    int n;
    int k;
    int root = 0;
    int second = 0;
    std::int64_t count = 0;
    std::vector<char> on_path;

    // Extends root = v0, ..., v_depth = current; interior vertices stay above
    // the root so the root is the cycle minimum, and requiring
    // v1 < v_{k-1} picks one of the two orientations.
    void extend(int current, int depth) {
        if (depth == k - 1) {
            if (adj(current, root) && second < current) ++count;
            return;
        }
        for (int next = root + 1; next < n; ++next) {
            if (!adj(current, next) || on_path[next]) continue;
            on_path[next] = 1;
            if (depth == 0) second = next;
            extend(next, depth + 1);
            on_path[next] = 0;
        }
    }
};

}  // namespace

std::int64_t count_cycles(const RegularGraph& graph, int k) {
    if (k < 3 || k > 6) {
        throw UnsupportedLength("unsupported cycle length " + std::to_string(k) +
                                ", expected 3..6");
    }
    if (k == 3) return closed_triangle_walks(graph) / 6;

    const int n = graph.vertex_count();
    CycleCounter counter{graph.adjacency(), n, k, 0, 0, 0,
                         std::vector<char>(static_cast<std::size_t>(n), 0)};
    for (int root = 0; root + k <= n; ++root) {
        counter.root = root;
        counter.on_path[root] = 1;
        counter.extend(root, 0);
        counter.on_path[root] = 0;
    }
    return counter.count;
}

}  // namespace expander
