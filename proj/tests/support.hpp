#pragma once

// Seeded random-instance generators shared by the unit and acceptance tests.

#include "signedfj/dynamics.hpp"
#include "signedfj/graph.hpp"

#include <random>

namespace signedfj::testing {

struct RandomInstance {
    OpinionMatrix y0;
    Vector theta;
};

/// Validated random instance: n in [2, max_n], m in [1, max_m], opinions
/// uniform on [-scale, scale] with exact zeros resampled, stubbornness
/// uniform on (theta_lo, theta_hi).
inline RandomInstance random_instance(std::mt19937& rng, int max_n, int max_m,
                                      double theta_lo, double theta_hi,
                                      double scale = 10.0, int min_m = 1) {
    std::uniform_int_distribution<int> pick_n(2, max_n);
    std::uniform_int_distribution<int> pick_m(min_m, max_m);
    const int n = pick_n(rng);
    const int m = pick_m(rng);
    std::uniform_real_distribution<double> entry(-scale, scale);
    std::uniform_real_distribution<double> stubbornness(theta_lo, theta_hi);

    RandomInstance inst;
    inst.y0.resize(n, m);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) {
            double x = entry(rng);
            while (x == 0.0) {
                x = entry(rng);
            }
            inst.y0(i, j) = x;
        }
    }
    inst.theta.resize(n);
    for (int i = 0; i < n; ++i) {
        inst.theta(i) = stubbornness(rng);
    }
    validate_inputs(inst.y0, inst.theta);
    return inst;
}

/// Random symmetric sign pattern on n in [1, max_n] nodes; each pair is an
/// edge with probability edge_prob, signed +1/-1 with equal odds.
inline SignedGraph random_signed_graph(std::mt19937& rng, int max_n,
                                       double edge_prob = 0.6) {
    std::uniform_int_distribution<int> pick_n(1, max_n);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    const int n = pick_n(rng);
    SignedGraph g;
    g.node_count = n;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (coin(rng) < edge_prob) {
                g.edges.push_back({i, j, coin(rng) < 0.5 ? 1 : -1});
            }
        }
    }
    return g;
}

}  // namespace signedfj::testing
