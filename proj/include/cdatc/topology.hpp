#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace cdatc {

// Undirected communication graph. Node indices are 0-based internally;
// display and scenario files use 1-based labels.
//
// Construction validates the edge list (indices in range, no self-loops,
// no duplicates) and rejects disconnected graphs. Immutable afterwards,
// so a single instance is safe to share across concurrent runs.
class Topology {
public:
    Topology(int n_nodes, std::span<const std::pair<int, int>> edges);

    // Two fully connected triangles {1,2,3} and {5,6,7} bridged by node 4,
    // which links to all six other nodes (1-based labels).
    static Topology default_seven_node();

    int n_nodes() const { return n_nodes_; }
    std::size_t n_edges() const { return edges_.size(); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    // Ascending neighbor list; include_self=true contains k itself.
    const std::vector<int>& neighbors(int k, bool include_self) const;

    // |N_k| (self-inclusive cardinality).
    int cardinality(int k) const;

    bool adjacent(int a, int b) const;

private:
    int n_nodes_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> hood_incl_;
    std::vector<std::vector<int>> hood_excl_;
};

inline Topology build_topology(int n_nodes,
                               std::span<const std::pair<int, int>> edges) {
    return Topology(n_nodes, edges);
}

} // namespace cdatc
