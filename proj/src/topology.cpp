#include "cdatc/topology.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>

#include "cdatc/errors.hpp"

namespace cdatc {

Topology::Topology(int n_nodes, std::span<const std::pair<int, int>> edges)
    : n_nodes_(n_nodes) {
    if (n_nodes <= 0) {
        fail(ErrorCode::config_invalid, "node count must be positive, got " +
                                            std::to_string(n_nodes));
    }

    std::set<std::pair<int, int>> seen;
    hood_excl_.assign(static_cast<std::size_t>(n_nodes), {});
    for (const auto& [a, b] : edges) {
        if (a < 0 || a >= n_nodes || b < 0 || b >= n_nodes) {
            fail(ErrorCode::index_out_of_range,
                 "edge (" + std::to_string(a) + "," + std::to_string(b) +
                     ") references a node outside [0," +
                     std::to_string(n_nodes - 1) + "]");
        }
        if (a == b) {
            fail(ErrorCode::self_loop,
                 "self-loop at node " + std::to_string(a));
        }
        const auto key = std::minmax(a, b);
        if (!seen.insert(key).second) {
            fail(ErrorCode::duplicate_edge,
                 "duplicate edge (" + std::to_string(key.first) + "," +
                     std::to_string(key.second) + ")");
        }
        edges_.push_back(key);
        hood_excl_[static_cast<std::size_t>(a)].push_back(b);
        hood_excl_[static_cast<std::size_t>(b)].push_back(a);
    }

    hood_incl_.assign(static_cast<std::size_t>(n_nodes), {});
    for (int k = 0; k < n_nodes; ++k) {
        auto& excl = hood_excl_[static_cast<std::size_t>(k)];
        std::sort(excl.begin(), excl.end());
        auto& incl = hood_incl_[static_cast<std::size_t>(k)];
        incl = excl;
        incl.insert(std::lower_bound(incl.begin(), incl.end(), k), k);
    }

    // BFS connectivity check; diffusion over a disconnected graph cannot
    // reach a network-wide estimate.
    std::vector<char> visited(static_cast<std::size_t>(n_nodes), 0);
    std::queue<int> frontier;
    frontier.push(0);
    visited[0] = 1;
    int reached = 1;
    while (!frontier.empty()) {
        const int u = frontier.front();
        frontier.pop();
        for (int v : hood_excl_[static_cast<std::size_t>(u)]) {
            if (!visited[static_cast<std::size_t>(v)]) {
                visited[static_cast<std::size_t>(v)] = 1;
                ++reached;
                frontier.push(v);
            }
        }
    }
    if (reached != n_nodes) {
        fail(ErrorCode::disconnected_graph,
             "graph is disconnected: reached " + std::to_string(reached) +
                 " of " + std::to_string(n_nodes) + " nodes");
    }
}

Topology Topology::default_seven_node() {
    // 0-based translation of the 1-based labels 1..7.
    const std::vector<std::pair<int, int>> edges = {
        {0, 1}, {0, 2}, {1, 2},  // triangle {1,2,3}
        {4, 5}, {4, 6}, {5, 6},  // triangle {5,6,7}
        {3, 0}, {3, 1}, {3, 2}, {3, 4}, {3, 5}, {3, 6},  // bridge node 4
    };
    return Topology(7, edges);
}

const std::vector<int>& Topology::neighbors(int k, bool include_self) const {
    if (k < 0 || k >= n_nodes_) {
        fail(ErrorCode::index_out_of_range,
             "node " + std::to_string(k) + " outside [0," +
                 std::to_string(n_nodes_ - 1) + "]");
    }
    return include_self ? hood_incl_[static_cast<std::size_t>(k)]
                        : hood_excl_[static_cast<std::size_t>(k)];
}

int Topology::cardinality(int k) const {
    return static_cast<int>(neighbors(k, true).size());
}

bool Topology::adjacent(int a, int b) const {
    const auto& excl = neighbors(a, false);
    return std::binary_search(excl.begin(), excl.end(), b);
}

} // namespace cdatc
