#pragma once

#include "signedfj/dynamics.hpp"

namespace signedfj {

/// v(0) = sgn(y0). Entries inside the zero band are rejected: a zero initial
/// opinion would leave that agent isolated with a pinned zero opinion.
Eigen::VectorXi initial_sign_vector(const Vector& y0, double zero_band);

/// Limit influence pattern for a single topic: the rank-1 pattern v(0) v(0)^T
/// (the matrix itself is this pattern scaled by 1/n).
SignMatrix single_topic_winf(const Vector& y0, double zero_band);

/// Closed-form transition limit [I + (I - Theta) v(0) v(0)^T / sum(theta)] Theta.
TransitionMatrix single_topic_minf(const Vector& y0, const Vector& theta,
                                   double zero_band);

/// Closed-form asymptotic opinions, single_topic_minf(y0, theta) * y0.
Vector single_topic_yinf(const Vector& y0, const Vector& theta, double zero_band);

/// True iff every sign pattern recorded by a single-topic run equals
/// v(0) v(0)^T, i.e. the pattern locked at step 1 and never moved.
/// Rejects runs with more than one topic.
bool single_topic_lock_holds(const SimulationResult& run, const Vector& y0,
                             double zero_band);

}  // namespace signedfj
