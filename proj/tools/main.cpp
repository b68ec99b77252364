#include "signedfj/io.hpp"
#include "signedfj/single_topic.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 1;
constexpr int kExitNotConverged = 2;
constexpr int kExitCheckFailed = 3;

struct Overrides {
    std::optional<long> horizon;
    std::optional<double> tol_conv;
    std::optional<double> sign_eps;
};

signedfj::Scenario load_with_overrides(const std::string& file, const Overrides& ov) {
    signedfj::Scenario sc = signedfj::load_scenario(file);
    if (ov.horizon) sc.config.horizon = *ov.horizon;
    if (ov.tol_conv) sc.config.tol_conv = *ov.tol_conv;
    if (ov.sign_eps) sc.config.sign_eps = *ov.sign_eps;
    return sc;
}

int run_simulate(const std::string& file, std::string out_dir, const Overrides& ov) {
    const signedfj::Scenario sc = load_with_overrides(file, ov);
    if (out_dir.empty()) {
        out_dir = (std::filesystem::path("runs") / sc.name).string();
    }
    const signedfj::RunReport report =
        signedfj::run_scenario(sc, std::filesystem::path(out_dir));

    std::cout << "scenario:  " << report.name << '\n';
    std::cout << "agents:    " << sc.y0.rows() << ", topics: " << sc.y0.cols() << '\n';
    std::cout << "converged: " << (report.converged ? "yes" : "no")
              << " after " << report.steps << " steps\n";
    if (report.lock_time) {
        std::cout << "influence pattern locked at step " << *report.lock_time << '\n';
    } else {
        std::cout << "influence pattern never changed from its first value\n";
    }
    std::cout << "outputs:   " << out_dir << "/{trajectory.csv, influence.csv, "
              << "summary.json, winf.dot}\n";
    return report.converged ? kExitOk : kExitNotConverged;
}

int run_check(const std::string& file, const std::string& out_dir, const Overrides& ov) {
    const signedfj::Scenario sc = load_with_overrides(file, ov);
    const std::optional<std::filesystem::path> dir =
        out_dir.empty() ? std::nullopt
                        : std::optional<std::filesystem::path>(out_dir);
    const signedfj::RunReport report = signedfj::run_scenario(sc, dir);

    for (const auto& [name, status] : report.property_results) {
        std::printf("%-28s %s\n", name.c_str(), signedfj::to_string(status));
    }
    std::printf("--\n");
    for (const auto& [name, value] : report.residuals) {
        std::printf("%-28s %.3e\n", name.c_str(), value);
    }
    if (!report.converged) return kExitNotConverged;
    return report.all_pass() ? kExitOk : kExitCheckFailed;
}

int run_closed_form(const std::string& file, const Overrides& ov) {
    const signedfj::Scenario sc = load_with_overrides(file, ov);
    if (sc.y0.cols() != 1) {
        std::cerr << "closed-form requires a single-topic scenario (Y0 with one column)\n";
        return kExitBadInput;
    }
    const signedfj::Vector y0 = sc.y0.col(0);
    const Eigen::VectorXi v = signedfj::initial_sign_vector(y0, sc.config.sign_eps);
    const signedfj::SignMatrix w = signedfj::single_topic_winf(y0, sc.config.sign_eps);
    const signedfj::TransitionMatrix m =
        signedfj::single_topic_minf(y0, sc.theta, sc.config.sign_eps);
    const signedfj::Vector y = signedfj::single_topic_yinf(y0, sc.theta, sc.config.sign_eps);

    nlohmann::json doc;
    doc["name"] = sc.name;
    doc["initial_signs"] = std::vector<int>(v.data(), v.data() + v.size());
    doc["w_limit_signs"] = nlohmann::json::array();
    doc["m_limit"] = nlohmann::json::array();
    for (Eigen::Index i = 0; i < w.rows(); ++i) {
        nlohmann::json wrow = nlohmann::json::array();
        nlohmann::json mrow = nlohmann::json::array();
        for (Eigen::Index j = 0; j < w.cols(); ++j) {
            wrow.push_back(w(i, j));
            mrow.push_back(m(i, j));
        }
        doc["w_limit_signs"].push_back(std::move(wrow));
        doc["m_limit"].push_back(std::move(mrow));
    }
    doc["y_limit"] = std::vector<double>(y.data(), y.data() + y.size());
    std::cout << doc.dump(2) << '\n';
    return kExitOk;
}

int run_export_dot(const std::string& run_dir) {
    const std::filesystem::path dir(run_dir);
    const signedfj::RunReport report = signedfj::read_summary_json(dir / "summary.json");
    const signedfj::SignedGraph g = signedfj::from_sign_matrix(report.w_limit);
    const std::filesystem::path out = dir / "winf.dot";
    std::ofstream f(out);
    if (!f) {
        std::cerr << "cannot write " << out.string() << '\n';
        return kExitBadInput;
    }
    f << signedfj::to_dot(g);
    std::cout << "wrote " << out.string() << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Simulator for stubbornness-anchored opinion dynamics with "
                 "homophily-signed influence"};
    app.require_subcommand(1);

    std::string scenario_file;
    std::string out_dir;
    std::string run_dir;
    Overrides ov;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("scenario", scenario_file, "Scenario JSON file")
            ->required();
        cmd->add_option("--horizon", ov.horizon, "Maximum number of update steps");
        cmd->add_option("--tol", ov.tol_conv, "Convergence tolerance on the step delta");
        cmd->add_option("--sign-eps", ov.sign_eps,
                        "Half-width of the zero band used when taking signs");
    };

    CLI::App* simulate = app.add_subcommand(
        "simulate", "Run a scenario and write trajectory/influence/summary files");
    add_common(simulate);
    simulate->add_option("--out", out_dir, "Output directory (default: runs/<name>)");

    CLI::App* check = app.add_subcommand(
        "check", "Run a scenario and report every invariant check");
    add_common(check);
    check->add_option("--out", out_dir, "Also write run artifacts to this directory");

    CLI::App* closed_form = app.add_subcommand(
        "closed-form", "Print the single-topic closed-form limits without simulating");
    add_common(closed_form);

    CLI::App* export_dot = app.add_subcommand(
        "export-dot", "Regenerate winf.dot from an existing run directory");
    export_dot->add_option("run_dir", run_dir, "Run directory holding summary.json")
        ->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (simulate->parsed()) return run_simulate(scenario_file, out_dir, ov);
        if (check->parsed()) return run_check(scenario_file, out_dir, ov);
        if (closed_form->parsed()) return run_closed_form(scenario_file, ov);
        if (export_dot->parsed()) return run_export_dot(run_dir);
    } catch (const signedfj::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const signedfj::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    }
    return kExitOk;
}
