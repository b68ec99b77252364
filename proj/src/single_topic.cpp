#include "signedfj/single_topic.hpp"

namespace signedfj {

Eigen::VectorXi initial_sign_vector(const Vector& y0, double zero_band) {
    const Eigen::Index n = y0.size();
    if (n < 1) {
        throw ValidationError(ValidationIssue::DimensionMismatch);
    }
    Eigen::VectorXi v(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const int s = sign_of(y0(i), zero_band);
        if (s == 0) {
            throw ValidationError(ValidationIssue::ZeroEntry, i);
        }
        v(i) = s;
    }
    return v;
}

SignMatrix single_topic_winf(const Vector& y0, double zero_band) {
    const Eigen::VectorXi v = initial_sign_vector(y0, zero_band);
    return v * v.transpose();
}

TransitionMatrix single_topic_minf(const Vector& y0, const Vector& theta,
                                   double zero_band) {
    const Eigen::Index n = y0.size();
    if (theta.size() != n) {
        throw ValidationError(ValidationIssue::DimensionMismatch);
    }
    for (Eigen::Index i = 0; i < n; ++i) {
        if (!(theta(i) > 0.0) || !(theta(i) < 1.0)) {
            throw ValidationError(ValidationIssue::StubbornnessOutOfRange, i);
        }
    }
    const Vector v = initial_sign_vector(y0, zero_band).cast<double>();
    const Vector open_mind = Vector::Ones(n) - theta;

    // [I + (I - Theta) v v^T / sum(theta)] Theta
    TransitionMatrix core =
        TransitionMatrix::Identity(n, n) +
        (open_mind.cwiseProduct(v)) * v.transpose() / theta.sum();
    return core * theta.asDiagonal();
}

Vector single_topic_yinf(const Vector& y0, const Vector& theta, double zero_band) {
    return single_topic_minf(y0, theta, zero_band) * y0;
}

bool single_topic_lock_holds(const SimulationResult& run, const Vector& y0,
                             double zero_band) {
    if (run.y_limit.cols() != 1 || run.y_limit.rows() != y0.size()) {
        throw ValidationError(ValidationIssue::DimensionMismatch);
    }
    const SignMatrix expected = single_topic_winf(y0, zero_band);
    // Sign patterns are recorded only when they change, so a lock at step 1
    // shows up as exactly one event carrying the rank-1 pattern.
    if (run.influence_events.size() != 1) {
        return false;
    }
    const auto& [step, pattern] = run.influence_events.front();
    return step == 1 && pattern == expected && run.w_limit == expected;
}

}  // namespace signedfj
