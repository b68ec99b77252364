#include "signedfj/dynamics.hpp"

#include <cmath>
#include <sstream>
#include <utility>

namespace signedfj {

const char* to_string(ValidationIssue issue) noexcept {
    switch (issue) {
        case ValidationIssue::StubbornnessOutOfRange: return "stubbornness out of (0,1)";
        case ValidationIssue::ZeroRow: return "all-zero opinion row";
        case ValidationIssue::ZeroColumn: return "all-zero opinion column";
        case ValidationIssue::ZeroEntry: return "zero opinion entry";
        case ValidationIssue::DimensionMismatch: return "dimension mismatch";
        case ValidationIssue::NonFiniteEntry: return "non-finite entry";
        case ValidationIssue::AsymmetricInput: return "asymmetric sign matrix";
    }
    return "unknown validation issue";
}

namespace {

std::string describe(ValidationIssue issue, Eigen::Index index) {
    std::ostringstream os;
    os << to_string(issue);
    if (index >= 0) {
        os << " at index " << index;
    }
    return os.str();
}

void validate_config(const SimulationConfig& cfg) {
    if (cfg.horizon < 1 || !(cfg.tol_conv > 0.0) || cfg.sign_eps < 0.0 ||
        cfg.max_recorded_steps < 0) {
        throw std::invalid_argument("invalid simulation config");
    }
}

}  // namespace

ValidationError::ValidationError(ValidationIssue issue, Eigen::Index index)
    : std::runtime_error(describe(issue, index)), issue_(issue), index_(index) {}

double inf_norm(const Eigen::MatrixXd& a) {
    if (a.size() == 0) {
        return 0.0;
    }
    return a.cwiseAbs().rowwise().sum().maxCoeff();
}

int sign_of(double x, double zero_band) noexcept {
    if (std::abs(x) <= zero_band) {
        return 0;
    }
    return x > 0.0 ? 1 : -1;
}

void validate_inputs(const OpinionMatrix& y0, const Vector& theta) {
    const Eigen::Index n = y0.rows();
    const Eigen::Index m = y0.cols();
    if (n < 1 || m < 1 || theta.size() != n) {
        throw ValidationError(ValidationIssue::DimensionMismatch);
    }
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < m; ++j) {
            if (!std::isfinite(y0(i, j))) {
                throw ValidationError(ValidationIssue::NonFiniteEntry, i);
            }
        }
    }
    for (Eigen::Index i = 0; i < n; ++i) {
        if (!std::isfinite(theta(i))) {
            throw ValidationError(ValidationIssue::NonFiniteEntry, i);
        }
        if (!(theta(i) > 0.0) || !(theta(i) < 1.0)) {
            throw ValidationError(ValidationIssue::StubbornnessOutOfRange, i);
        }
    }
    for (Eigen::Index i = 0; i < n; ++i) {
        if ((y0.row(i).array() == 0.0).all()) {
            throw ValidationError(ValidationIssue::ZeroRow, i);
        }
    }
    for (Eigen::Index j = 0; j < m; ++j) {
        if ((y0.col(j).array() == 0.0).all()) {
            throw ValidationError(ValidationIssue::ZeroColumn, j);
        }
    }
}

SignMatrix influence_signs(const OpinionMatrix& y, double zero_band) {
    const Eigen::Index n = y.rows();
    SignMatrix signs(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i; j < n; ++j) {
            const int s = sign_of(y.row(i).dot(y.row(j)), zero_band);
            signs(i, j) = s;
            signs(j, i) = s;
        }
    }
    return signs;
}

OpinionMatrix opinion_step(const OpinionMatrix& y, const OpinionMatrix& y0,
                           const Vector& theta, const SignMatrix& w_signs) {
    const Eigen::Index n = y.rows();
    if (y0.rows() != n || y0.cols() != y.cols() || theta.size() != n ||
        w_signs.rows() != n || w_signs.cols() != n) {
        throw ValidationError(ValidationIssue::DimensionMismatch);
    }
    const Vector open_mind = Vector::Ones(n) - theta;
    const OpinionMatrix mixed =
        (w_signs.cast<double>() * y) / static_cast<double>(n);
    return open_mind.asDiagonal() * mixed + theta.asDiagonal() * y0;
}

SimulationResult simulate(const OpinionMatrix& y0, const Vector& theta,
                          const SimulationConfig& cfg) {
    validate_config(cfg);
    validate_inputs(y0, theta);

    SimulationResult result;
    result.opinions.push_back(y0);

    OpinionMatrix y = y0;
    SignMatrix w_prev;
    bool have_prev = false;

    for (long t = 0; t < cfg.horizon; ++t) {
        SignMatrix w = influence_signs(y, cfg.sign_eps);
        const bool w_stable = have_prev && w == w_prev;
        if (!w_stable) {
            result.lock_time = t + 1;
            if (std::ssize(result.influence_events) <= cfg.max_recorded_steps) {
                result.influence_events.emplace_back(t + 1, w);
            } else {
                result.trace_truncated = true;
            }
        }

        OpinionMatrix y_next = opinion_step(y, y0, theta, w);
        result.final_delta = inf_norm(y_next - y);
        y = std::move(y_next);
        w_prev = std::move(w);
        have_prev = true;

        if (t + 1 <= cfg.max_recorded_steps) {
            result.opinions.push_back(y);
        } else {
            result.trace_truncated = true;
        }

        result.steps = t + 1;
        if (w_stable && result.final_delta < cfg.tol_conv) {
            result.converged = true;
            break;
        }
    }

    result.y_limit = std::move(y);
    result.w_limit = std::move(w_prev);
    return result;
}

bool influence_locked_after(const SimulationResult& result, const OpinionMatrix& y0,
                            const Vector& theta, const SimulationConfig& cfg,
                            int extra_steps) {
    OpinionMatrix y = result.y_limit;
    for (int k = 0; k < extra_steps; ++k) {
        const SignMatrix w = influence_signs(y, cfg.sign_eps);
        if (!(w == result.w_limit)) {
            return false;
        }
        y = opinion_step(y, y0, theta, w);
    }
    return true;
}

}  // namespace signedfj
