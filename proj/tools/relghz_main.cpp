// Command-line front end: scenario sweeps, reference checks and one-shot calculators.

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "relghz/kinematics.hpp"
#include "relghz/mermin.hpp"
#include "relghz/reference_cases.hpp"
#include "relghz/scenario.hpp"
#include "relghz/spin_state.hpp"

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitConfigError = 2;

double to_radians(double value, bool degrees) { return degrees ? value * std::numbers::pi / 180.0 : value; }

}  // namespace

int main(int argc, char** argv) {
    using namespace relghz;

    CLI::App app{"Wigner-rotated GHZ correlations and Mermin violation seen from a boosted frame"};
    app.require_subcommand(1);
    bool degrees = false;
    app.add_flag("--degrees", degrees, "Read every angle argument in degrees instead of radians");

    auto* sweep = app.add_subcommand("sweep", "Evaluate a scenario file over its parameter grid");
    std::string scenario_path;
    std::string out_path;
    std::string format = "csv";
    unsigned threads = std::max(1U, std::thread::hardware_concurrency());
    sweep->add_option("scenario", scenario_path, "Scenario file (JSON)")->required();
    sweep->add_option("--out", out_path, "Write results here instead of stdout");
    sweep->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    sweep->add_option("--threads", threads, "Worker threads for grid evaluation")->check(CLI::PositiveNumber);

    auto* verify = app.add_subcommand("verify", "Run the named reference checks");

    auto* wigner = app.add_subcommand("wigner", "Print the Wigner angle delta");
    double xi = 0.0, chi = 0.0, theta = 0.0;
    wigner->add_option("--xi", xi, "Particle rapidity")->required();
    wigner->add_option("--chi", chi, "Observer rapidity")->required();
    wigner->add_option("--theta", theta, "Particle polar angle")->required();

    auto* epsilon = app.add_subcommand("epsilon", "Mermin violation: closed form and state-vector value");
    std::vector<double> deltas;
    std::vector<double> phis;
    epsilon->add_option("--deltas", deltas, "delta1,delta2,delta3")->required()->expected(3)->delimiter(',');
    epsilon->add_option("--phis", phis, "phi1,phi2")->required()->expected(2)->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfigError;
    }

    try {
        if (*sweep) {
            const Scenario scenario = load_scenario(scenario_path, degrees);
            const ResultTable table = run_scenario(scenario, threads);
            const std::string text = format == "json" ? to_json(table) : to_csv(table);
            if (out_path.empty()) {
                std::cout << text;
            } else {
                std::ofstream out(out_path, std::ios::binary);
                if (!out) throw ConfigError(out_path + ": cannot open for writing");
                out << text;
            }
            return 0;
        }
        if (*verify) {
            const auto cases = run_reference_cases();
            std::cout << format_report(cases);
            for (const auto& c : cases) {
                if (!c.passed) return kExitVerifyFailed;
            }
            return 0;
        }
        if (*wigner) {
            std::cout << format_number(wigner_angle(xi, chi, to_radians(theta, degrees))) << '\n';
            return 0;
        }
        if (*epsilon) {
            for (auto& d : deltas) d = to_radians(d, degrees);
            for (auto& p : phis) p = to_radians(p, degrees);
            const std::array us{wigner_su2(deltas[0], phis[0]), wigner_su2(deltas[1], phis[1]),
                                wigner_su2(deltas[2], 0.0)};
            const auto labels = std::vector<FourMomentum>(3);
            const double brute = mermin_epsilon(apply_local_unitaries(ghz_state(3, labels), us, labels)).epsilon;
            std::cout << "closed_form " << format_number(mermin_epsilon_closed_form(deltas[0], deltas[1], deltas[2], phis[0], phis[1]))
                      << '\n'
                      << "state_vector " << format_number(brute) << '\n';
            return 0;
        }
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return kExitConfigError;
    } catch (const std::domain_error& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return kExitConfigError;
    }
    return 0;
}
