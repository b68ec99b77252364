#pragma once

#include "signedfj/types.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace signedfj {

/// Sign with a zero band: 0 if |x| <= zero_band, otherwise +1 or -1.
int sign_of(double x, double zero_band) noexcept;

/// Enforces the model's standing assumptions: every theta_i strictly inside
/// (0,1), Y0 free of all-zero rows and all-zero columns, dimensions agree,
/// all entries finite. Throws ValidationError on the first violation found.
void validate_inputs(const OpinionMatrix& y0, const Vector& theta);

/// W(t+1) sign pattern from Y(t): entry (i,j) is the sign of the inner
/// product of opinion rows i and j. Computed on one triangle and mirrored,
/// so the result is exactly symmetric regardless of rounding.
SignMatrix influence_signs(const OpinionMatrix& y, double zero_band);

/// One opinion update: (I - Theta) (1/n) W Y + Theta Y0.
OpinionMatrix opinion_step(const OpinionMatrix& y, const OpinionMatrix& y0,
                           const Vector& theta, const SignMatrix& w_signs);

struct SimulationResult {
    bool converged = false;
    long steps = 0;                 ///< index t* of the last computed state
    std::optional<long> lock_time;  ///< last step at which the sign pattern changed
    OpinionMatrix y_limit;          ///< Y(t*)
    SignMatrix w_limit;             ///< W(t*)
    double final_delta = 0.0;       ///< ||Y(t*) - Y(t*-1)||_inf

    /// Y(0..k) with k = min(t*, max_recorded_steps).
    std::vector<OpinionMatrix> opinions;
    /// (t, W(t)) recorded whenever the pattern differs from the previous
    /// step; each pattern holds until the next event.
    std::vector<std::pair<long, SignMatrix>> influence_events;
    bool trace_truncated = false;
};

/// Iterates the coupled opinion/influence recursion until the opinions settle
/// (inf-norm step delta below tol_conv while the sign pattern is unchanged
/// between consecutive steps) or the horizon is reached. Hitting the horizon
/// is reported via converged = false with the partial trajectory attached.
SimulationResult simulate(const OpinionMatrix& y0, const Vector& theta,
                          const SimulationConfig& cfg = {});

/// Continues the iteration for extra_steps past a converged state and reports
/// whether the sign pattern ever deviates from w_limit.
bool influence_locked_after(const SimulationResult& result, const OpinionMatrix& y0,
                            const Vector& theta, const SimulationConfig& cfg,
                            int extra_steps);

}  // namespace signedfj
