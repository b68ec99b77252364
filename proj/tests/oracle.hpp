#pragma once

// Reference implementations used only by tests. Everything here is written
// with plain loops over long double so it shares no arithmetic path with the
// Eigen-based engine it is checking.

#include "signedfj/graph.hpp"
#include "signedfj/types.hpp"

#include <optional>
#include <vector>

namespace signedfj::testing {

using LongMatrix = std::vector<std::vector<long double>>;

struct ReferenceResult {
    bool converged = false;
    long steps = 0;
    std::optional<long> lock_time;
    LongMatrix y;
    std::vector<std::vector<int>> w;
};

/// Same halting rule as the engine: stop once the sign pattern repeats and
/// the inf-norm step delta drops below tol.
ReferenceResult simulate_reference(const LongMatrix& y0,
                                   const std::vector<long double>& theta,
                                   long horizon, long double tol,
                                   long double zero_band);

/// Runs exactly `steps` updates with no early exit and returns the final
/// opinion matrix.
LongMatrix iterate_reference(const LongMatrix& y0,
                             const std::vector<long double>& theta,
                             long steps, long double zero_band);

/// Exhaustive bipartition search; ground truth for the two-coloring check.
bool brute_force_balanced(const SignedGraph& g);

LongMatrix to_long(const Eigen::MatrixXd& a);
std::vector<long double> to_long(const Eigen::VectorXd& v);
double max_abs_gap(const LongMatrix& a, const Eigen::MatrixXd& b);

}  // namespace signedfj::testing
