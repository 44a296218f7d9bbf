#include "expander/graph.hpp"

#include <queue>
#include <stdexcept>
#include <string>

namespace expander {

std::optional<int> regular_degree(const AdjacencyMatrix& adj) {
    const int n = adj.size();
    if (n == 0) return std::nullopt;
    int degree = 0;
    for (int j = 0; j < n; ++j) degree += adj(0, j);
    for (int i = 1; i < n; ++i) {
        int sum = 0;
        for (int j = 0; j < n; ++j) sum += adj(i, j);
        if (sum != degree) return std::nullopt;
    }
    return degree;
}

bool has_loops(const AdjacencyMatrix& adj) {
    for (int i = 0; i < adj.size(); ++i) {
        if (adj(i, i) != 0) return true;
    }
    return false;
}

bool is_symmetric(const AdjacencyMatrix& adj) {
    const int n = adj.size();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (adj(i, j) != adj(j, i)) return false;
        }
    }
    return true;
}

void check_parity(int n, int d) {
    if (d < 1) {
        throw std::invalid_argument("degree must be at least 1, got " + std::to_string(d));
    }
    if (d >= n) {
        throw DegreeTooLarge("degree " + std::to_string(d) +
                             " must be smaller than the vertex count " + std::to_string(n));
    }
    if ((static_cast<long long>(n) * d) % 2 != 0) {
        throw ParityViolation(
            "parity violation: 2|E| = n*d requires n*d even, got n = " + std::to_string(n) +
            ", d = " + std::to_string(d));
    }
}

RegularGraph RegularGraph::circulant(int n, int d) {
    check_parity(n, d);
    AdjacencyMatrix adj(n);
    for (int offset = 1; offset <= d / 2; ++offset) {
        for (int u = 0; u < n; ++u) {
            adj.set_symmetric(u, (u + offset) % n, 1);
        }
    }
    if (d % 2 == 1) {
        // n is even here, so u + n/2 pairs every vertex with its antipode.
        for (int u = 0; u < n; ++u) {
            adj.set_symmetric(u, (u + n / 2) % n, 1);
        }
    }
    return RegularGraph(n, d, std::move(adj));
}

RegularGraph RegularGraph::from_adjacency(AdjacencyMatrix adj) {
    if (!is_symmetric(adj)) {
        throw std::invalid_argument("adjacency matrix is not symmetric");
    }
    if (has_loops(adj)) {
        throw std::invalid_argument("adjacency matrix has a nonzero diagonal entry");
    }
    const auto degree = regular_degree(adj);
    if (!degree) {
        throw std::invalid_argument("adjacency matrix rows do not share a common sum");
    }
    check_parity(adj.size(), *degree);
    return RegularGraph(adj.size(), *degree, std::move(adj));
}

std::optional<RegularGraph> RegularGraph::try_adopt(AdjacencyMatrix adj) {
    if (!is_symmetric(adj) || has_loops(adj)) return std::nullopt;
    const auto degree = regular_degree(adj);
    if (!degree || *degree < 1 || *degree >= adj.size()) return std::nullopt;
    return RegularGraph(adj.size(), *degree, std::move(adj));
}

std::vector<Edge> RegularGraph::edge_list() const {
    std::vector<Edge> edges;
    edges.reserve(edge_count());
    for (int u = 0; u < n_; ++u) {
        for (int v = u + 1; v < n_; ++v) {
            if (adj_(u, v)) edges.emplace_back(u, v);
        }
    }
    return edges;
}

std::optional<int> RegularGraph::diameter() const {
    std::vector<int> dist(n_);
    std::queue<int> frontier;
    int diameter = 0;
    for (int source = 0; source < n_; ++source) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[source] = 0;
        frontier.push(source);
        int reached = 1;
        int eccentricity = 0;
        while (!frontier.empty()) {
            const int u = frontier.front();
            frontier.pop();
            for (int v = 0; v < n_; ++v) {
                if (adj_(u, v) && dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    eccentricity = dist[v];
                    ++reached;
                    frontier.push(v);
                }
            }
        }
        if (reached < n_) return std::nullopt;
        diameter = std::max(diameter, eccentricity);
    }
    return diameter;
}

int diameter_lower_bound(int n, int d) {
    if (d < 2) throw std::invalid_argument("diameter_lower_bound requires d >= 2");
    if (n < 1) throw std::invalid_argument("diameter_lower_bound requires n >= 1");
    // ceil(log_d(n)) computed in integers to avoid floating-point fence posts
    // at exact powers.
    int levels = 0;
    long long reach = 1;
    while (reach < n) {
        reach *= d;
        ++levels;
    }
    return 2 * levels;
}

}  // namespace expander
