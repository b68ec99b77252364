#include "signedfj/transition.hpp"

#include "signedfj/dynamics.hpp"
#include "signedfj/graph.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <cmath>
#include <utility>

namespace signedfj {

InitialGram initial_gram(const OpinionMatrix& y0) {
    const Eigen::Index n = y0.rows();
    InitialGram s0(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i; j < n; ++j) {
            const double g = y0.row(i).dot(y0.row(j));
            s0(i, j) = g;
            s0(j, i) = g;
        }
    }
    return s0;
}

TransitionStep transition_step(const TransitionMatrix& m, const InitialGram& s0,
                               const Vector& theta, double zero_band) {
    const Eigen::Index n = m.rows();
    if (m.cols() != n || s0.rows() != n || s0.cols() != n || theta.size() != n) {
        throw ValidationError(ValidationIssue::DimensionMismatch);
    }

    // W(t+1) = sgn(M S0 M^T); M S0 M^T is symmetric in exact arithmetic, so
    // one triangle is evaluated and mirrored.
    const Eigen::MatrixXd half = m * s0;
    SignMatrix w(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i; j < n; ++j) {
            const int s = sign_of(half.row(i).dot(m.row(j)), zero_band);
            w(i, j) = s;
            w(j, i) = s;
        }
    }

    const Vector open_mind = Vector::Ones(n) - theta;
    TransitionMatrix next =
        open_mind.asDiagonal() * ((w.cast<double>() * m) / static_cast<double>(n));
    next.diagonal() += theta;
    return {std::move(next), std::move(w)};
}

double equilibrium_residual(const TransitionMatrix& m, const InitialGram& s0,
                            const Vector& theta, double zero_band) {
    return inf_norm(m - transition_step(m, s0, theta, zero_band).next);
}

NormBoundReport check_norm_bound(std::span<const TransitionMatrix> from_t1,
                                 const Vector& theta) {
    NormBoundReport report;
    const double alpha = (Vector::Ones(theta.size()) - theta).maxCoeff();
    const double raw_bound = alpha + theta.maxCoeff();
    report.bound = raw_bound + kNormBoundSlack;
    long index = 0;
    for (const TransitionMatrix& m : from_t1) {
        const double norm = inf_norm(m);
        const double ratio = norm / raw_bound;
        if (ratio > report.worst_ratio) {
            report.worst_ratio = ratio;
            report.worst_norm = norm;
            report.worst_index = index;
        }
        if (norm > report.bound) {
            report.pass = false;
        }
        ++index;
    }
    return report;
}

InfluenceLimitReport winf_properties(const SignMatrix& w_signs) {
    const Eigen::Index n = w_signs.rows();
    if (w_signs.cols() != n || n < 1) {
        throw ValidationError(ValidationIssue::DimensionMismatch);
    }
    if (!(w_signs == w_signs.transpose().eval())) {
        throw ValidationError(ValidationIssue::AsymmetricInput);
    }

    InfluenceLimitReport report;
    report.diag_positive = (w_signs.diagonal().array() == 1).all();

    const Eigen::MatrixXd w = w_signs.cast<double>() / static_cast<double>(n);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(w, Eigen::EigenvaluesOnly);
    const Vector eigs = solver.eigenvalues();
    report.spectral_radius = eigs.cwiseAbs().maxCoeff();
    report.has_eigenvalue_one = ((eigs.array() - 1.0).abs() <= kEigOneTol).any();
    report.schur_stable = report.spectral_radius < 1.0 - kEigOneTol;
    report.ambiguous = !report.has_eigenvalue_one && !report.schur_stable;

    if (report.has_eigenvalue_one) {
        report.balanced = is_structurally_balanced(from_sign_matrix(w_signs)).balanced;
    }
    return report;
}

TransitionLimitReport minf_properties(const TransitionMatrix& m) {
    const Eigen::Index n = m.rows();
    if (m.cols() != n || n < 1) {
        throw ValidationError(ValidationIssue::DimensionMismatch);
    }

    TransitionLimitReport report;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const Vector sigma = svd.singularValues();
    const double largest = sigma(0);
    report.singular_value_ratio = largest > 0.0 ? sigma(n - 1) / largest : 0.0;
    report.nonsingular = report.singular_value_ratio >= kSingularRatioMin;

    report.column_dominant = true;
    for (Eigen::Index i = 0; i < n; ++i) {
        const double column_peak = m.col(i).cwiseAbs().maxCoeff();
        if (column_peak > std::abs(m(i, i)) + kColumnDominanceTol) {
            report.column_dominant = false;
            break;
        }
    }
    report.diag_positive = (m.diagonal().array() > 0.0).all();
    return report;
}

TransitionRun run_transition(const InitialGram& s0, const Vector& theta, long steps,
                             double zero_band, long max_recorded_steps) {
    const Eigen::Index n = s0.rows();
    TransitionRun run;
    TransitionMatrix m = TransitionMatrix::Identity(n, n);
    run.transitions.push_back(m);

    SignMatrix w;
    for (long t = 0; t < steps; ++t) {
        TransitionStep step = transition_step(m, s0, theta, zero_band);
        m = std::move(step.next);
        w = std::move(step.w_signs);
        if (t + 1 <= max_recorded_steps) {
            run.transitions.push_back(m);
        } else {
            run.trace_truncated = true;
        }
    }
    run.m_limit = std::move(m);
    run.w_limit = std::move(w);
    run.steps = steps;
    return run;
}

TransitionRun run_transition_to_tolerance(const InitialGram& s0, const Vector& theta,
                                          const SimulationConfig& cfg) {
    const Eigen::Index n = s0.rows();
    TransitionRun run;
    run.converged = false;
    TransitionMatrix m = TransitionMatrix::Identity(n, n);
    run.transitions.push_back(m);

    SignMatrix w_prev;
    bool have_prev = false;
    for (long t = 0; t < cfg.horizon; ++t) {
        TransitionStep step = transition_step(m, s0, theta, cfg.sign_eps);
        const bool stable = have_prev && step.w_signs == w_prev;
        const double delta = inf_norm(step.next - m);
        m = std::move(step.next);
        w_prev = std::move(step.w_signs);
        have_prev = true;
        run.steps = t + 1;
        if (run.steps <= cfg.max_recorded_steps) {
            run.transitions.push_back(m);
        } else {
            run.trace_truncated = true;
        }
        if (stable && delta < cfg.tol_conv) {
            run.converged = true;
            break;
        }
    }
    run.m_limit = std::move(m);
    run.w_limit = std::move(w_prev);
    return run;
}

}  // namespace signedfj
