#include "signedfj/graph.hpp"

#include <algorithm>
#include <queue>

namespace signedfj {

SignedGraph from_sign_matrix(const SignMatrix& signs) {
    const Eigen::Index n = signs.rows();
    if (signs.cols() != n) {
        throw ValidationError(ValidationIssue::DimensionMismatch);
    }
    SignedGraph g;
    g.node_count = static_cast<int>(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i; j < n; ++j) {
            if (signs(i, j) != signs(j, i)) {
                throw ValidationError(ValidationIssue::AsymmetricInput, i);
            }
            if (i != j && signs(i, j) != 0) {
                g.edges.push_back({static_cast<int>(i), static_cast<int>(j),
                                   signs(i, j) > 0 ? 1 : -1});
            }
        }
    }
    return g;
}

BalanceResult is_structurally_balanced(const SignedGraph& g) {
    const int n = g.node_count;
    BalanceResult result;
    result.side.assign(static_cast<std::size_t>(std::max(n, 0)), Side::A);

    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(n));
    for (const SignedEdge& e : g.edges) {
        adj[static_cast<std::size_t>(e.u)].emplace_back(e.v, e.sign);
        adj[static_cast<std::size_t>(e.v)].emplace_back(e.u, e.sign);
    }
    for (auto& neighbors : adj) {
        std::sort(neighbors.begin(), neighbors.end());
    }

    std::vector<bool> visited(static_cast<std::size_t>(n), false);
    for (int seed = 0; seed < n; ++seed) {
        if (visited[static_cast<std::size_t>(seed)]) {
            continue;
        }
        visited[static_cast<std::size_t>(seed)] = true;
        result.side[static_cast<std::size_t>(seed)] = Side::A;
        std::queue<int> frontier;
        frontier.push(seed);
        while (!frontier.empty()) {
            const int u = frontier.front();
            frontier.pop();
            for (const auto& [v, sign] : adj[static_cast<std::size_t>(u)]) {
                const Side u_side = result.side[static_cast<std::size_t>(u)];
                const Side required =
                    sign > 0 ? u_side : (u_side == Side::A ? Side::B : Side::A);
                if (!visited[static_cast<std::size_t>(v)]) {
                    visited[static_cast<std::size_t>(v)] = true;
                    result.side[static_cast<std::size_t>(v)] = required;
                    frontier.push(v);
                } else if (result.side[static_cast<std::size_t>(v)] != required) {
                    result.balanced = false;
                    result.conflict = SignedEdge{std::min(u, v), std::max(u, v), sign};
                    return result;
                }
            }
        }
    }
    result.balanced = true;
    return result;
}

}  // namespace signedfj
