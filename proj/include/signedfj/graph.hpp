#pragma once

#include "signedfj/types.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace signedfj {

struct SignedEdge {
    int u = 0;     ///< u < v
    int v = 0;
    int sign = 0;  ///< -1 or +1

    friend bool operator==(const SignedEdge&, const SignedEdge&) = default;
};

/// Undirected signed graph. Zero-sign pairs are absent edges; self-loops are
/// discarded on construction.
struct SignedGraph {
    int node_count = 0;
    std::vector<SignedEdge> edges;  ///< sorted by (u, v)
};

/// Throws ValidationError(AsymmetricInput) when the pattern is not symmetric.
SignedGraph from_sign_matrix(const SignMatrix& signs);

enum class Side : std::uint8_t { A, B };

struct BalanceResult {
    bool balanced = false;
    std::vector<Side> side;              ///< two-coloring attempt, one entry per node
    std::optional<SignedEdge> conflict;  ///< witness edge when unbalanced
};

/// Two-coloring sweep per connected component, seeded at the lowest-index
/// node of the component (side A). Positive edges propagate the same side,
/// negative edges the opposite side; the first conflict proves imbalance and
/// is returned as the witness. Deterministic for a given graph.
BalanceResult is_structurally_balanced(const SignedGraph& g);

}  // namespace signedfj
