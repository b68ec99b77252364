#pragma once

#include "signedfj/types.hpp"

#include <optional>
#include <span>
#include <vector>

namespace signedfj {

/// Eigenvalue-1 detection tolerance for the limit influence matrix.
inline constexpr double kEigOneTol = 1e-9;
/// sigma_min / sigma_max below this flags a singular transition limit.
inline constexpr double kSingularRatioMin = 1e-10;
/// Slack for the column-dominance comparison.
inline constexpr double kColumnDominanceTol = 1e-9;
/// Slack added on top of the theoretical norm bound.
inline constexpr double kNormBoundSlack = 1e-12;

/// S0 = Y0 Y0^T, computed on one triangle and mirrored (exactly symmetric).
InitialGram initial_gram(const OpinionMatrix& y0);

struct TransitionStep {
    TransitionMatrix next;  ///< M(t+1) = (I - Theta) (1/n) W M(t) + Theta
    SignMatrix w_signs;     ///< W(t+1) = sgn(M(t) S0 M(t)^T)
};

TransitionStep transition_step(const TransitionMatrix& m, const InitialGram& s0,
                               const Vector& theta, double zero_band);

/// ||M - [(I-Theta)(1/n) sgn(M S0 M^T) M + Theta]||_inf; zero at equilibrium.
double equilibrium_residual(const TransitionMatrix& m, const InitialGram& s0,
                            const Vector& theta, double zero_band);

struct NormBoundReport {
    bool pass = true;
    double bound = 0.0;        ///< max(1 - theta_i) + max(theta_i) + slack
    double worst_norm = 0.0;
    double worst_ratio = 0.0;  ///< worst ||M(t)||_inf over the unslacked bound
    long worst_index = -1;     ///< position within the checked range
};

/// Checks ||M(t)||_inf <= max(1-theta_i) + max(theta_i) for a trajectory
/// slice starting at t = 1 (the bound does not cover M(0) = I).
NormBoundReport check_norm_bound(std::span<const TransitionMatrix> from_t1,
                                 const Vector& theta);

struct InfluenceLimitReport {
    bool diag_positive = false;      ///< all diagonal signs are +1
    bool has_eigenvalue_one = false; ///< 1 in spectrum of (1/n) W within kEigOneTol
    bool schur_stable = false;       ///< spectral radius < 1 - kEigOneTol
    bool ambiguous = false;          ///< spectral radius inside the tolerance gap
    double spectral_radius = 0.0;
    std::optional<bool> balanced;    ///< evaluated only on the eigenvalue-1 branch
};

/// Spectral dichotomy of a converged influence pattern: either (1/n) W has an
/// eigenvalue in 1 (then its signed graph must be structurally balanced) or
/// it is Schur stable. Exactly one branch holds unless `ambiguous` is set.
InfluenceLimitReport winf_properties(const SignMatrix& w_signs);

struct TransitionLimitReport {
    bool nonsingular = false;
    bool column_dominant = false;       ///< each column peaks in magnitude on the diagonal
    bool diag_positive = false;
    double singular_value_ratio = 0.0;  ///< sigma_min / sigma_max
};

TransitionLimitReport minf_properties(const TransitionMatrix& m);

struct TransitionRun {
    std::vector<TransitionMatrix> transitions;  ///< M(0..k), capped like the opinion trace
    TransitionMatrix m_limit;                   ///< M(steps)
    SignMatrix w_limit;                         ///< W(steps)
    long steps = 0;                             ///< updates actually taken
    bool converged = true;  ///< false only for tolerance-driven runs that hit the horizon
    bool trace_truncated = false;
};

/// Drives the transition recursion from M(0) = I for a fixed number of steps.
TransitionRun run_transition(const InitialGram& s0, const Vector& theta, long steps,
                             double zero_band, long max_recorded_steps = 20'000);

/// Drives the transition recursion with the opinion engine's halting rule
/// applied to M itself: stop once the sign pattern repeats and the inf-norm
/// step delta on M drops below cfg.tol_conv. Hitting cfg.horizon reports
/// converged = false.
TransitionRun run_transition_to_tolerance(const InitialGram& s0, const Vector& theta,
                                          const SimulationConfig& cfg = {});

}  // namespace signedfj
