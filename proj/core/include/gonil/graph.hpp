#ifndef GONIL_GRAPH_HPP
#define GONIL_GRAPH_HPP

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gonil/rational.hpp"

namespace gonil {

/// An edge {u, v}, stored with u < v. Vertices are 1-indexed.
struct Edge {
    int u = 0;
    int v = 0;
    bool operator==(const Edge&) const = default;
};

/// Finite simple undirected graph. The order of the edge list is
/// significant: edge alpha (0-based position) names the central basis
/// vector z_{alpha+1} of the associated Lie algebra.
class Graph {
public:
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    /// Text format: first significant line is the vertex count, every
    /// following significant line is one edge "i j". '#' starts a comment,
    /// blank lines are ignored. Errors carry 1-based line numbers.
    static Graph parse(std::string_view text);

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    bool has_edge(int i, int j) const;
    /// 0-based edge position for {i, j}, if present.
    std::optional<int> edge_index(int i, int j) const;

    /// Omega'_i: open neighborhood of vertex i.
    const std::set<int>& omega_prime(int i) const;
    /// Omega_i = Omega'_i + {i}.
    std::set<int> omega(int i) const;

    /// i <= j in the sense Omega'_i subset of Omega_j.
    bool preceq(int i, int j) const;

    bool is_isolated(int i) const { return omega_prime(i).empty(); }

    std::string to_text() const;

private:
    void check_vertex(int i) const;
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::set<int>> adj_;  // adj_[i] for vertex i, 1-indexed
};

enum class ClassKind { Complete, Empty };

/// Partition of the vertices into ~-equivalence classes, each tagged by
/// the induced-subgraph dichotomy, with the induced partial order.
struct ClassPartition {
    struct Cls {
        std::vector<int> vertices;  // sorted
        ClassKind kind = ClassKind::Empty;
    };
    std::vector<Cls> classes;
    /// Pairs (a, b) of class indices with class a preceq class b; includes
    /// the diagonal.
    std::vector<std::pair<int, int>> order;

    int class_of(int vertex) const;
};

/// Throws std::logic_error if some class violates the complete-or-edgeless
/// dichotomy (never expected; asserted loudly rather than silently used).
ClassPartition equivalence_classes(const Graph& g);

/// Result of the disjoint-union-of-cliques test.
struct ClusterDecomposition {
    bool is_cluster = false;
    std::vector<int> isolated;                // the class C_0, possibly empty
    std::vector<std::vector<int>> cliques;    // C_1..C_p, each of size >= 2
    /// When not a cluster graph: an edge joining non-equivalent vertices.
    std::optional<Edge> witness;
};

ClusterDecomposition cluster_decomposition(const Graph& g);

inline bool is_cluster_graph(const Graph& g) {
    return cluster_decomposition(g).is_cluster;
}

}  // namespace gonil

#endif
