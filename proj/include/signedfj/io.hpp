#pragma once

#include "signedfj/dynamics.hpp"
#include "signedfj/graph.hpp"
#include "signedfj/transition.hpp"

#include <filesystem>
#include <map>
#include <string>

namespace signedfj {

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct Scenario {
    std::string name;
    OpinionMatrix y0;
    Vector theta;
    SimulationConfig config;
};

/// Reads a scenario file: {"name", "Y0": rows, "theta": array} plus optional
/// "horizon", "tol_conv", "sign_eps" (defaults applied when omitted).
/// Throws ParseError for malformed files, ValidationError for inputs that
/// violate the model assumptions.
Scenario load_scenario(const std::filesystem::path& file);

/// Writes a scenario back out; numbers round-trip bit-exactly.
void save_scenario(const Scenario& scenario, const std::filesystem::path& file);

enum class CheckStatus { Pass, Fail, Ambiguous };

const char* to_string(CheckStatus status) noexcept;

struct RunReport {
    std::string name;
    bool converged = false;
    long steps = 0;
    std::optional<long> lock_time;
    OpinionMatrix y_limit;
    SignMatrix w_limit;
    TransitionMatrix m_limit;
    std::map<std::string, CheckStatus> property_results;
    std::map<std::string, double> residuals;

    /// True when no check failed. Ambiguous results are reported but do not
    /// fail the run; they flag the spectral tolerance gap explicitly.
    bool all_pass() const;
};

/// Simulates the scenario, co-runs the transition recursion, evaluates the
/// full invariant suite, and (when out_dir is given) writes trajectory.csv,
/// influence.csv, summary.json and winf.dot into out_dir.
RunReport run_scenario(const Scenario& scenario,
                       const std::optional<std::filesystem::path>& out_dir = std::nullopt);

std::string to_dot(const SignedGraph& g);

void write_trajectory_csv(const SimulationResult& run, const std::filesystem::path& file);
void write_influence_csv(const SimulationResult& run, const std::filesystem::path& file);
void write_summary_json(const RunReport& report, const std::filesystem::path& file);
RunReport read_summary_json(const std::filesystem::path& file);

}  // namespace signedfj
