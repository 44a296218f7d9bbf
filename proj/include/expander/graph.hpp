#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace expander {

using Edge = std::pair<int, int>;  // stored ascending, first < second

// n*d odd would make the edge count 2|E| = n*d fractional.
struct ParityViolation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A simple graph has at most n - 1 neighbors per vertex.
struct DegreeTooLarge : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Dense square 0/1 matrix, row-major.
class AdjacencyMatrix {
public:
    AdjacencyMatrix() = default;
    explicit AdjacencyMatrix(int n)
        : n_(n), cells_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {}

    int size() const { return n_; }

    std::uint8_t operator()(int i, int j) const { return cells_[index(i, j)]; }

    void set(int i, int j, std::uint8_t value) { cells_[index(i, j)] = value; }

    // Sets both (i,j) and (j,i).
    void set_symmetric(int i, int j, std::uint8_t value) {
        set(i, j, value);
        set(j, i, value);
    }

    bool operator==(const AdjacencyMatrix&) const = default;

private:
    std::size_t index(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(j);
    }

    int n_ = 0;
    std::vector<std::uint8_t> cells_;
};

// Common row sum if every row sums to the same value, nullopt otherwise.
std::optional<int> regular_degree(const AdjacencyMatrix& adj);

// True iff any diagonal entry is nonzero.
bool has_loops(const AdjacencyMatrix& adj);

bool is_symmetric(const AdjacencyMatrix& adj);

// Validates (n, d) for a simple d-regular graph on n vertices: n > d >= 1 and
// n*d even. Throws DegreeTooLarge, ParityViolation, or std::invalid_argument.
void check_parity(int n, int d);

// Simple undirected d-regular graph on n vertices, immutable after
// construction. Invariants: symmetric adjacency, zero diagonal, all row sums
// equal to the degree.
class RegularGraph {
public:
    // Deterministic circulant: vertex i is connected at offsets 1..d/2 in both
    // directions, plus the diametrically opposed vertex i + n/2 when d is odd
    // (the parity check forces n even in that case).
    static RegularGraph circulant(int n, int d);

    // Adopts an existing matrix after validating every invariant.
    static RegularGraph from_adjacency(AdjacencyMatrix adj);

    // Non-throwing variant used by the switching code: nullopt when the matrix
    // is not symmetric, has loops, or is not regular.
    static std::optional<RegularGraph> try_adopt(AdjacencyMatrix adj);

    int vertex_count() const { return n_; }
    int degree() const { return d_; }
    const AdjacencyMatrix& adjacency() const { return adj_; }

    bool has_edge(int u, int v) const { return adj_(u, v) != 0; }

    // All edges (u, v) with u < v in ascending lexicographic order.
    std::vector<Edge> edge_list() const;

    std::size_t edge_count() const {
        return static_cast<std::size_t>(n_) * static_cast<std::size_t>(d_) / 2;
    }

    // Longest shortest path over all vertex pairs; nullopt when disconnected.
    std::optional<int> diameter() const;

    bool operator==(const RegularGraph&) const = default;

private:
    RegularGraph(int n, int d, AdjacencyMatrix adj)
        : n_(n), d_(d), adj_(std::move(adj)) {}

    int n_ = 0;
    int d_ = 0;
    AdjacencyMatrix adj_;
};

// Tree-radius heuristic 2 * ceil(log_d(n)): twice the depth a d-ary tree needs
// to cover n vertices. Not a valid lower bound for dense graphs (K4 has
// diameter 1 but the heuristic gives 4); use diameter() for the real value.
int diameter_lower_bound(int n, int d);

}  // namespace expander
