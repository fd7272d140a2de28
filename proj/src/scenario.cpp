#include "relghz/scenario.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <regex>
#include <sstream>
#include <thread>

#include "relghz/mermin.hpp"
#include "relghz/observables.hpp"

namespace relghz {

namespace {

using nlohmann::json;

double number_at(const json& node, const std::string& path) {
    if (!node.is_number()) throw ConfigError(path + ": expected a number");
    const double v = node.get<double>();
    if (!std::isfinite(v)) throw ConfigError(path + ": value is not finite");
    return v;
}

struct ParameterRef {
    bool all_particles = false;
    std::size_t index = 0;
    std::string field;  // "chi" when not a particle field
};

ParameterRef parse_parameter(const std::string& parameter, std::size_t particle_count) {
    if (parameter == "chi") return {false, 0, "chi"};
    static const std::regex pattern(R"(particles\[(\*|[0-9]+)\]\.(xi|theta|phi))");
    std::smatch m;
    if (!std::regex_match(parameter, m, pattern)) throw ConfigError(parameter + ": unknown parameter path");
    ParameterRef ref;
    ref.field = m[2];
    if (m[1] == "*") {
        ref.all_particles = true;
    } else {
        ref.index = std::stoul(m[1]);
        if (ref.index >= particle_count) throw ConfigError(parameter + ": particle index out of range");
    }
    return ref;
}

bool is_angle(const std::string& parameter) {
    return parameter.ends_with(".theta") || parameter.ends_with(".phi");
}

std::string particle_path(std::size_t i, const char* field) {
    return "particles[" + std::to_string(i) + "]." + field;
}

}  // namespace

double Sweep::value(int step) const {
    return start + (stop - start) * static_cast<double>(step) / static_cast<double>(steps - 1);
}

void set_parameter(KinematicConfig& cfg, const std::string& parameter, double value) {
    const ParameterRef ref = parse_parameter(parameter, cfg.particles.size());
    if (ref.field == "chi") {
        cfg.chi = value;
        return;
    }
    const auto assign = [&](ParticleKinematics& p) {
        if (ref.field == "xi") p.xi = value;
        else if (ref.field == "theta") p.theta = value;
        else p.phi = value;
    };
    if (ref.all_particles) {
        for (auto& p : cfg.particles) assign(p);
    } else {
        assign(cfg.particles[ref.index]);
    }
}

Scenario parse_scenario(const json& doc, bool degrees) {
    if (!doc.is_object()) throw ConfigError("scenario: expected an object");
    const double angle_scale = degrees ? std::numbers::pi / 180.0 : 1.0;
    Scenario sc;

    if (!doc.contains("particles") || !doc["particles"].is_array()) throw ConfigError("particles: expected an array");
    const auto& particles = doc["particles"];
    if (particles.size() != 3) throw ConfigError("particles: expected exactly 3 particles");
    for (std::size_t i = 0; i < particles.size(); ++i) {
        const auto& p = particles[i];
        if (!p.is_object()) throw ConfigError("particles[" + std::to_string(i) + "]: expected an object");
        ParticleKinematics k;
        for (const char* field : {"xi", "theta", "phi"}) {
            const std::string path = particle_path(i, field);
            if (!p.contains(field)) throw ConfigError(path + ": missing");
            const double v = number_at(p[field], path);
            if (std::string_view(field) == "xi") k.xi = v;
            else if (std::string_view(field) == "theta") k.theta = v * angle_scale;
            else k.phi = v * angle_scale;
        }
        sc.config.particles.push_back(k);
    }
    sc.config.chi = doc.contains("chi") ? number_at(doc["chi"], "chi") : 0.0;

    if (doc.contains("sweeps")) {
        const auto& sweeps = doc["sweeps"];
        if (!sweeps.is_array()) throw ConfigError("sweeps: expected an array");
        for (std::size_t i = 0; i < sweeps.size(); ++i) {
            const auto& s = sweeps[i];
            const std::string where = "sweeps[" + std::to_string(i) + "]";
            if (!s.is_object() || !s.contains("parameter") || !s["parameter"].is_string()) {
                throw ConfigError(where + ".parameter: expected a string");
            }
            Sweep sw;
            sw.parameter = s["parameter"].get<std::string>();
            parse_parameter(sw.parameter, sc.config.particles.size());
            for (const auto& other : sc.sweeps) {
                if (other.parameter == sw.parameter) throw ConfigError(sw.parameter + ": swept twice");
            }
            const double scale = is_angle(sw.parameter) ? angle_scale : 1.0;
            if (!s.contains("start") || !s.contains("stop") || !s.contains("steps")) {
                throw ConfigError(where + ": needs start, stop and steps");
            }
            sw.start = number_at(s["start"], where + ".start") * scale;
            sw.stop = number_at(s["stop"], where + ".stop") * scale;
            if (!s["steps"].is_number_integer()) throw ConfigError(where + ".steps: expected an integer");
            sw.steps = s["steps"].get<int>();
            if (sw.steps < 2) throw ConfigError(where + ".steps: must be at least 2");
            if (sw.start > sw.stop) throw ConfigError(where + ": start must not exceed stop");
            sc.sweeps.push_back(sw);
        }
    }

    if (doc.contains("outputs")) {
        const auto& outputs = doc["outputs"];
        if (!outputs.is_array()) throw ConfigError("outputs: expected an array");
        sc.outputs.clear();
        for (const auto& o : outputs) {
            const std::string name = o.is_string() ? o.get<std::string>() : std::string{};
            if (name == "deltas") sc.outputs.insert(Quantity::deltas);
            else if (name == "correlations") sc.outputs.insert(Quantity::correlations);
            else if (name == "epsilon") sc.outputs.insert(Quantity::epsilon);
            else if (name == "epsilon_compensated") sc.outputs.insert(Quantity::epsilon_compensated);
            else throw ConfigError("outputs: unknown quantity '" + name + "'");
        }
    }

    // Validate every grid corner so bad values are reported up front with their path.
    try {
        sc.config.validate();
        for (const auto& sw : sc.sweeps) {
            for (double v : {sw.start, sw.stop}) {
                KinematicConfig probe = sc.config;
                set_parameter(probe, sw.parameter, v);
                probe.validate();
            }
        }
    } catch (const std::domain_error& e) {
        throw ConfigError(e.what());
    }
    return sc;
}

Scenario load_scenario(const std::filesystem::path& path, bool degrees) {
    std::ifstream in(path);
    if (!in) throw ConfigError(path.string() + ": cannot open");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
    return parse_scenario(doc, degrees);
}

ResultTable run_scenario(const Scenario& scenario, unsigned threads) {
    ResultTable table;
    for (const auto& sw : scenario.sweeps) table.columns.push_back(sw.parameter);
    const auto wants = [&](Quantity q) { return scenario.outputs.contains(q); };
    if (wants(Quantity::deltas)) table.columns.insert(table.columns.end(), {"delta1", "delta2", "delta3"});
    if (wants(Quantity::correlations)) table.columns.insert(table.columns.end(), {"e_xyy", "e_yxy", "e_yyx", "e_xxx"});
    if (wants(Quantity::epsilon)) table.columns.emplace_back("epsilon");
    if (wants(Quantity::epsilon_compensated)) table.columns.emplace_back("epsilon_compensated");

    std::size_t total = 1;
    for (const auto& sw : scenario.sweeps) total *= static_cast<std::size_t>(sw.steps);
    table.rows.resize(total);

    const auto evaluate = [&](std::size_t row) {
        KinematicConfig cfg = scenario.config;
        std::vector<double> out;
        // first sweep varies slowest
        std::size_t rest = row;
        std::vector<double> coords(scenario.sweeps.size());
        for (std::size_t k = scenario.sweeps.size(); k-- > 0;) {
            const auto& sw = scenario.sweeps[k];
            const auto steps = static_cast<std::size_t>(sw.steps);
            coords[k] = sw.value(static_cast<int>(rest % steps));
            rest /= steps;
        }
        for (std::size_t k = 0; k < coords.size(); ++k) set_parameter(cfg, scenario.sweeps[k].parameter, coords[k]);
        out = coords;

        if (wants(Quantity::deltas)) {
            for (std::size_t i = 0; i < 3; ++i) out.push_back(wigner_rotation(cfg, i).delta);
        }
        if (wants(Quantity::correlations) || wants(Quantity::epsilon)) {
            const MerminReport r = mermin_epsilon(boosted_ghz(cfg));
            if (wants(Quantity::correlations)) out.insert(out.end(), {r.e_xyy, r.e_yxy, r.e_yyx, r.e_xxx});
            if (wants(Quantity::epsilon)) out.push_back(r.epsilon);
        }
        if (wants(Quantity::epsilon_compensated)) out.push_back(compensated_mermin(cfg).epsilon);
        table.rows[row] = std::move(out);
    };

    const unsigned workers = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(total)));
    if (workers == 1) {
        for (std::size_t row = 0; row < total; ++row) evaluate(row);
        return table;
    }
    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t row = w; row < total; row += workers) evaluate(row);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return table;
}

std::string format_number(double value) {
    if (value == 0.0) value = 0.0;  // drops the sign of -0
    std::array<char, 64> buf{};
    std::snprintf(buf.data(), buf.size(), "%.12g", value);
    return buf.data();
}

std::string to_csv(const ResultTable& table) {
    std::ostringstream out;
    for (std::size_t c = 0; c < table.columns.size(); ++c) out << (c ? "," : "") << table.columns[c];
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << format_number(row[c]);
        out << '\n';
    }
    return out.str();
}

std::string to_json(const ResultTable& table) {
    // Hand-assembled so numbers use the same fixed formatting as the CSV.
    std::ostringstream out;
    out << "[\n";
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        out << "  {";
        for (std::size_t c = 0; c < table.columns.size(); ++c) {
            out << (c ? ", " : "") << json(table.columns[c]).dump() << ": " << format_number(table.rows[r][c]);
        }
        out << (r + 1 < table.rows.size() ? "},\n" : "}\n");
    }
    out << "]\n";
    return out.str();
}

}  // namespace relghz
