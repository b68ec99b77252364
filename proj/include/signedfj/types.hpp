#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace signedfj {

/// Row i of an OpinionMatrix holds agent i's opinions on the m topics.
using OpinionMatrix = Eigen::MatrixXd;

/// Influence sign pattern with entries in {-1, 0, +1}. The actual influence
/// weight agent i places on agent j is sign / n; keeping integer signs makes
/// pattern comparisons exact and avoids storing 1/n inexactly.
using SignMatrix = Eigen::MatrixXi;

/// Maps initial opinions to time-t opinions: Y(t) = M(t) Y(0).
using TransitionMatrix = Eigen::MatrixXd;

/// Gram matrix of the initial opinion rows, S0 = Y(0) Y(0)^T.
using InitialGram = Eigen::MatrixXd;

using Vector = Eigen::VectorXd;

enum class ValidationIssue : std::uint8_t {
    StubbornnessOutOfRange,
    ZeroRow,
    ZeroColumn,
    ZeroEntry,
    DimensionMismatch,
    NonFiniteEntry,
    AsymmetricInput,
};

const char* to_string(ValidationIssue issue) noexcept;

class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(ValidationIssue issue, Eigen::Index index = -1);

    ValidationIssue issue() const noexcept { return issue_; }
    /// Offending row/column/agent index; -1 when not applicable.
    Eigen::Index index() const noexcept { return index_; }

private:
    ValidationIssue issue_;
    Eigen::Index index_;
};

struct SimulationConfig {
    long horizon = 1'000'000;         ///< hard step cap; timeouts are flagged, never thrown
    double tol_conv = 1e-10;          ///< opinion convergence tolerance (inf norm)
    double sign_eps = 1e-12;          ///< zero band for sign evaluation
    long max_recorded_steps = 20'000; ///< trajectory snapshots kept in memory
};

/// Maximum absolute row sum. Eigen's lpNorm<Infinity> is coefficient-wise,
/// which is right for vectors but not for the operator norm used here.
double inf_norm(const Eigen::MatrixXd& a);

}  // namespace signedfj
