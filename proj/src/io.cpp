#include "signedfj/io.hpp"

#include "signedfj/single_topic.hpp"

#include <json.hpp>

#include <Eigen/Eigenvalues>

#include <array>
#include <charconv>
#include <fstream>
#include <system_error>

namespace signedfj {

namespace {

using nlohmann::json;

std::string format_double(double v) {
    std::array<char, 32> buf{};
    const auto [last, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    if (ec != std::errc{}) {
        throw std::runtime_error("number formatting failed");
    }
    return {buf.data(), last};
}

json matrix_to_json(const Eigen::MatrixXd& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            row.push_back(m(i, j));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

json sign_matrix_to_json(const SignMatrix& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            row.push_back(m(i, j));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Eigen::MatrixXd matrix_from_json(const json& rows, const char* field) {
    if (!rows.is_array() || rows.empty()) {
        throw ParseError(std::string("field '") + field + "' must be a non-empty array of rows");
    }
    const std::size_t n = rows.size();
    std::size_t m = 0;
    Eigen::MatrixXd out;
    for (std::size_t i = 0; i < n; ++i) {
        const json& row = rows[i];
        if (!row.is_array() || row.empty()) {
            throw ParseError(std::string("field '") + field + "', row " + std::to_string(i) +
                             " must be a non-empty array of numbers");
        }
        if (i == 0) {
            m = row.size();
            out.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(m));
        } else if (row.size() != m) {
            throw ParseError(std::string("field '") + field + "', row " + std::to_string(i) +
                             " has inconsistent length");
        }
        for (std::size_t j = 0; j < m; ++j) {
            if (!row[j].is_number()) {
                throw ParseError(std::string("field '") + field + "', row " + std::to_string(i) +
                                 " contains a non-numeric entry");
            }
            out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                row[j].get<double>();
        }
    }
    return out;
}

Vector vector_from_json(const json& arr, const char* field) {
    if (!arr.is_array() || arr.empty()) {
        throw ParseError(std::string("field '") + field + "' must be a non-empty array of numbers");
    }
    Vector out(static_cast<Eigen::Index>(arr.size()));
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (!arr[i].is_number()) {
            throw ParseError(std::string("field '") + field + "' contains a non-numeric entry");
        }
        out(static_cast<Eigen::Index>(i)) = arr[i].get<double>();
    }
    return out;
}

SignMatrix sign_matrix_from_json(const json& rows, const char* field) {
    const Eigen::MatrixXd raw = matrix_from_json(rows, field);
    SignMatrix out(raw.rows(), raw.cols());
    for (Eigen::Index i = 0; i < raw.rows(); ++i) {
        for (Eigen::Index j = 0; j < raw.cols(); ++j) {
            out(i, j) = static_cast<int>(raw(i, j));
        }
    }
    return out;
}

CheckStatus status_from_string(const std::string& s) {
    if (s == "pass") return CheckStatus::Pass;
    if (s == "fail") return CheckStatus::Fail;
    if (s == "ambiguous") return CheckStatus::Ambiguous;
    throw ParseError("unknown check status '" + s + "'");
}

CheckStatus as_status(bool ok) { return ok ? CheckStatus::Pass : CheckStatus::Fail; }

}  // namespace

const char* to_string(CheckStatus status) noexcept {
    switch (status) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Ambiguous: return "ambiguous";
    }
    return "unknown";
}

bool RunReport::all_pass() const {
    for (const auto& [name, status] : property_results) {
        if (status == CheckStatus::Fail) {
            return false;
        }
    }
    return true;
}

Scenario load_scenario(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) {
        throw ParseError("cannot open scenario file: " + file.string());
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError("scenario parse failure in " + file.string() + ": " + e.what());
    }
    if (!doc.is_object()) {
        throw ParseError("scenario file must hold a JSON object");
    }

    Scenario sc;
    sc.name = doc.value("name", file.stem().string());
    if (!doc.contains("Y0") || !doc.contains("theta")) {
        throw ParseError("scenario requires 'Y0' and 'theta' fields");
    }
    sc.y0 = matrix_from_json(doc["Y0"], "Y0");
    sc.theta = vector_from_json(doc["theta"], "theta");

    if (doc.contains("horizon")) {
        if (!doc["horizon"].is_number_integer() || doc["horizon"].get<long>() < 1) {
            throw ParseError("field 'horizon' must be a positive integer");
        }
        sc.config.horizon = doc["horizon"].get<long>();
    }
    if (doc.contains("tol_conv")) {
        if (!doc["tol_conv"].is_number() || !(doc["tol_conv"].get<double>() > 0.0)) {
            throw ParseError("field 'tol_conv' must be a positive number");
        }
        sc.config.tol_conv = doc["tol_conv"].get<double>();
    }
    if (doc.contains("sign_eps")) {
        if (!doc["sign_eps"].is_number() || doc["sign_eps"].get<double>() < 0.0) {
            throw ParseError("field 'sign_eps' must be a nonnegative number");
        }
        sc.config.sign_eps = doc["sign_eps"].get<double>();
    }

    validate_inputs(sc.y0, sc.theta);
    return sc;
}

void save_scenario(const Scenario& scenario, const std::filesystem::path& file) {
    json doc;
    doc["name"] = scenario.name;
    doc["theta"] = json::array();
    for (Eigen::Index i = 0; i < scenario.theta.size(); ++i) {
        doc["theta"].push_back(scenario.theta(i));
    }
    doc["Y0"] = matrix_to_json(scenario.y0);
    doc["horizon"] = scenario.config.horizon;
    doc["tol_conv"] = scenario.config.tol_conv;
    doc["sign_eps"] = scenario.config.sign_eps;

    std::ofstream out(file);
    if (!out) {
        throw std::runtime_error("cannot write scenario file: " + file.string());
    }
    out << doc.dump(2) << '\n';
}

std::string to_dot(const SignedGraph& g) {
    std::string dot = "graph influence_limit {\n  node [shape=circle];\n";
    for (int i = 0; i < g.node_count; ++i) {
        dot += "  " + std::to_string(i + 1) + ";\n";
    }
    for (const SignedEdge& e : g.edges) {
        dot += "  " + std::to_string(e.u + 1) + " -- " + std::to_string(e.v + 1) +
               (e.sign > 0 ? " [style=solid];\n" : " [style=dashed];\n");
    }
    dot += "}\n";
    return dot;
}

void write_trajectory_csv(const SimulationResult& run, const std::filesystem::path& file) {
    std::ofstream out(file);
    if (!out) {
        throw std::runtime_error("cannot write trajectory file: " + file.string());
    }
    out << "# opinion trajectory, long format; agents and topics are 1-based\n";
    out << "t,agent,topic,opinion\n";
    for (std::size_t t = 0; t < run.opinions.size(); ++t) {
        const OpinionMatrix& y = run.opinions[t];
        for (Eigen::Index i = 0; i < y.rows(); ++i) {
            for (Eigen::Index j = 0; j < y.cols(); ++j) {
                out << t << ',' << i + 1 << ',' << j + 1 << ','
                    << format_double(y(i, j)) << '\n';
            }
        }
    }
}

void write_influence_csv(const SimulationResult& run, const std::filesystem::path& file) {
    std::ofstream out(file);
    if (!out) {
        throw std::runtime_error("cannot write influence file: " + file.string());
    }
    out << "# influence sign pattern; actual weight is sign / n\n";
    out << "# rows are emitted only at steps where the pattern changed;\n";
    out << "# each pattern holds until the next recorded step\n";
    out << "t,i,j,sign\n";
    for (const auto& [t, w] : run.influence_events) {
        for (Eigen::Index i = 0; i < w.rows(); ++i) {
            for (Eigen::Index j = 0; j < w.cols(); ++j) {
                out << t << ',' << i + 1 << ',' << j + 1 << ',' << w(i, j) << '\n';
            }
        }
    }
}

void write_summary_json(const RunReport& report, const std::filesystem::path& file) {
    json doc;
    doc["name"] = report.name;
    doc["converged"] = report.converged;
    doc["steps"] = report.steps;
    if (report.lock_time) {
        doc["lock_time"] = *report.lock_time;
    } else {
        doc["lock_time"] = nullptr;
    }
    doc["y_limit"] = matrix_to_json(report.y_limit);
    doc["w_limit_signs"] = sign_matrix_to_json(report.w_limit);
    doc["m_limit"] = matrix_to_json(report.m_limit);
    doc["property_results"] = json::object();
    for (const auto& [name, status] : report.property_results) {
        doc["property_results"][name] = to_string(status);
    }
    doc["residuals"] = json::object();
    for (const auto& [name, value] : report.residuals) {
        doc["residuals"][name] = value;
    }

    std::ofstream out(file);
    if (!out) {
        throw std::runtime_error("cannot write summary file: " + file.string());
    }
    out << doc.dump(2) << '\n';
}

RunReport read_summary_json(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) {
        throw ParseError("cannot open summary file: " + file.string());
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError("summary parse failure in " + file.string() + ": " + e.what());
    }

    try {
        RunReport report;
        report.name = doc.value("name", "");
        report.converged = doc.value("converged", false);
        report.steps = doc.value("steps", 0L);
        if (doc.contains("lock_time") && !doc["lock_time"].is_null()) {
            report.lock_time = doc["lock_time"].get<long>();
        }
        report.y_limit = matrix_from_json(doc.at("y_limit"), "y_limit");
        report.w_limit = sign_matrix_from_json(doc.at("w_limit_signs"), "w_limit_signs");
        report.m_limit = matrix_from_json(doc.at("m_limit"), "m_limit");
        if (doc.contains("property_results")) {
            for (const auto& [name, status] : doc["property_results"].items()) {
                report.property_results[name] =
                    status_from_string(status.get<std::string>());
            }
        }
        if (doc.contains("residuals")) {
            for (const auto& [name, value] : doc["residuals"].items()) {
                report.residuals[name] = value.get<double>();
            }
        }
        return report;
    } catch (const json::exception& e) {
        throw ParseError("summary field failure in " + file.string() + ": " + e.what());
    }
}

RunReport run_scenario(const Scenario& scenario,
                       const std::optional<std::filesystem::path>& out_dir) {
    const SimulationConfig& cfg = scenario.config;
    const SimulationResult run = simulate(scenario.y0, scenario.theta, cfg);

    const InitialGram s0 = initial_gram(scenario.y0);
    // Step-matched run for the recursion-equivalence check; tolerance-driven
    // run for every limit diagnostic.
    const TransitionRun tr = run_transition(s0, scenario.theta, run.steps, cfg.sign_eps,
                                            cfg.max_recorded_steps);
    const TransitionRun trc = run_transition_to_tolerance(s0, scenario.theta, cfg);

    RunReport report;
    report.name = scenario.name;
    report.converged = run.converged;
    report.steps = run.steps;
    report.lock_time = run.lock_time;
    report.y_limit = run.y_limit;
    report.w_limit = run.w_limit;
    report.m_limit = trc.m_limit;

    auto& props = report.property_results;
    auto& residuals = report.residuals;

    props["converged"] = as_status(run.converged);
    residuals["final_step_delta"] = run.final_delta;

    // Transition equivalence M(t) Y(0) = Y(t) over the recorded overlap, plus
    // the final state (covered even when traces were truncated).
    double prop1_gap = inf_norm(tr.m_limit * scenario.y0 - run.y_limit);
    const std::size_t overlap = std::min(tr.transitions.size(), run.opinions.size());
    for (std::size_t t = 0; t < overlap; ++t) {
        prop1_gap = std::max(prop1_gap,
                             inf_norm(tr.transitions[t] * scenario.y0 - run.opinions[t]));
    }
    props["transition_equivalence"] = as_status(prop1_gap < 1e-12);
    residuals["transition_equivalence_gap"] = prop1_gap;

    if (trc.transitions.size() > 1) {
        const std::span<const TransitionMatrix> from_t1{trc.transitions.data() + 1,
                                                        trc.transitions.size() - 1};
        const NormBoundReport norms = check_norm_bound(from_t1, scenario.theta);
        props["transition_norm_bound"] = as_status(norms.pass);
        residuals["transition_norm_worst_ratio"] = norms.worst_ratio;
    }

    const double eq_residual = equilibrium_residual(trc.m_limit, s0, scenario.theta,
                                                    cfg.sign_eps);
    props["equilibrium_residual"] =
        as_status(trc.converged && eq_residual < 10.0 * cfg.tol_conv);
    residuals["equilibrium_residual"] = eq_residual;

    const double fp_residual =
        inf_norm(run.y_limit - opinion_step(run.y_limit, scenario.y0, scenario.theta,
                                            run.w_limit));
    props["fixed_point_residual"] = as_status(fp_residual < 10.0 * cfg.tol_conv);
    residuals["fixed_point_residual"] = fp_residual;

    const InfluenceLimitReport winf = winf_properties(run.w_limit);
    props["winf_diag_positive"] = as_status(winf.diag_positive);
    props["winf_dichotomy"] = winf.ambiguous
                                  ? CheckStatus::Ambiguous
                                  : as_status(winf.has_eigenvalue_one != winf.schur_stable);
    residuals["winf_spectral_radius"] = winf.spectral_radius;
    if (winf.has_eigenvalue_one) {
        props["balanced_on_eigenvalue_one"] = as_status(winf.balanced.value_or(false));
    }

    if ((run.w_limit.array() != 0).all()) {
        const bool locked = run.lock_time.has_value() &&
                            influence_locked_after(run, scenario.y0, scenario.theta,
                                                   cfg, 100);
        props["finite_time_lock"] = as_status(locked);
    }

    const TransitionLimitReport minf = minf_properties(trc.m_limit);
    props["minf_nonsingular"] = as_status(minf.nonsingular);
    props["minf_column_dominant"] = as_status(minf.column_dominant);
    props["minf_diag_positive"] = as_status(minf.diag_positive);
    residuals["minf_singular_value_ratio"] = minf.singular_value_ratio;

    if (scenario.y0.cols() == 1) {
        const Vector y0v = scenario.y0.col(0);
        props["single_topic_lock"] =
            as_status(single_topic_lock_holds(run, y0v, cfg.sign_eps));

        const Vector yinf = single_topic_yinf(y0v, scenario.theta, cfg.sign_eps);
        const double gap =
            (yinf - run.y_limit.col(0)).lpNorm<Eigen::Infinity>();
        props["closed_form_match"] = as_status(gap < 1e-8);
        residuals["closed_form_gap"] = gap;

        // Gershgorin stability of the locked update map (I - Theta)(1/n) W.
        const Eigen::Index n = y0v.size();
        const Vector open_mind = Vector::Ones(n) - scenario.theta;
        const Eigen::MatrixXd update_map =
            open_mind.asDiagonal() *
            (run.w_limit.cast<double>() / static_cast<double>(n));
        const double rho =
            Eigen::EigenSolver<Eigen::MatrixXd>(update_map, false)
                .eigenvalues().cwiseAbs().maxCoeff();
        props["update_map_contractive"] = as_status(rho <= open_mind.maxCoeff() + 1e-12);
        residuals["update_map_spectral_radius"] = rho;
    }

    if (out_dir) {
        std::filesystem::create_directories(*out_dir);
        write_trajectory_csv(run, *out_dir / "trajectory.csv");
        write_influence_csv(run, *out_dir / "influence.csv");
        write_summary_json(report, *out_dir / "summary.json");
        std::ofstream dot(*out_dir / "winf.dot");
        if (!dot) {
            throw std::runtime_error("cannot write dot file");
        }
        dot << to_dot(from_sign_matrix(run.w_limit));
    }
    return report;
}

}  // namespace signedfj
