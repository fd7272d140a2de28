#pragma once

#include <filesystem>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "relghz/kinematics.hpp"

namespace relghz {

/// Invalid scenario input; the message names the offending path.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Linear grid over one parameter path: "chi", "particles[i].xi|theta|phi" or
/// "particles[*].xi|theta|phi" (all particles at once).
struct Sweep {
    std::string parameter;
    double start = 0.0;
    double stop = 0.0;
    int steps = 2;

    [[nodiscard]] double value(int step) const;
};

enum class Quantity { deltas, correlations, epsilon, epsilon_compensated };

struct Scenario {
    KinematicConfig config;
    std::vector<Sweep> sweeps;
    std::set<Quantity> outputs{Quantity::deltas, Quantity::correlations, Quantity::epsilon,
                               Quantity::epsilon_compensated};
};

/// Parses a scenario document. With `degrees`, every theta/phi value (fixed or swept) is
/// converted to radians here. Throws ConfigError.
Scenario parse_scenario(const nlohmann::json& doc, bool degrees = false);
Scenario load_scenario(const std::filesystem::path& path, bool degrees = false);

/// Assigns `value` to the field named by `parameter`. Throws ConfigError for unknown paths.
void set_parameter(KinematicConfig& cfg, const std::string& parameter, double value);

struct ResultTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

/// Evaluates the Cartesian product of the sweep grids, first sweep varying slowest.
/// Rows come back in grid order regardless of `threads`.
ResultTable run_scenario(const Scenario& scenario, unsigned threads = 1);

/// 12 significant digits, printf %.12g, with -0 printed as 0.
std::string format_number(double value);

std::string to_csv(const ResultTable& table);
std::string to_json(const ResultTable& table);

}  // namespace relghz
