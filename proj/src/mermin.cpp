#include "relghz/mermin.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "relghz/observables.hpp"

namespace relghz {

MerminReport MerminReport::from_correlations(double e_xyy, double e_yxy, double e_yyx, double e_xxx) {
    MerminReport r;
    r.e_xyy = e_xyy;
    r.e_yxy = e_yxy;
    r.e_yyx = e_yyx;
    r.e_xxx = e_xxx;
    r.signed_value = e_xyy + e_yxy + e_yyx - e_xxx;
    r.epsilon = std::abs(r.signed_value);
    return r;
}

namespace {

template <typename Measure>
MerminReport measure_mermin(Measure&& measure) {
    using enum Axis;
    return MerminReport::from_correlations(measure(std::array{x, y, y}), measure(std::array{y, x, y}),
                                           measure(std::array{y, y, x}), measure(std::array{x, x, x}));
}

}  // namespace

MerminReport mermin_epsilon(const SpinState& state) {
    if (state.particle_count() != 3) throw std::domain_error("Mermin quantity needs exactly three particles");
    return measure_mermin([&](const std::array<Axis, 3>& labels) {
        const std::array dirs{axis_direction(labels[0]), axis_direction(labels[1]), axis_direction(labels[2])};
        return correlation(state, dirs);
    });
}

double mermin_epsilon_closed_form(double delta1, double delta2, double delta3, double phi1, double phi2) {
    const double c = std::cos(0.5 * delta1) * std::cos(0.5 * delta2) * std::cos(0.5 * delta3);
    const double s = std::sin(0.5 * delta1) * std::sin(0.5 * delta2) * std::sin(0.5 * delta3);
    // c^4 + s^4 - 2 c^2 s^2 cos 2x rewritten as (c^2 - s^2)^2 + 4 c^2 s^2 sin^2 x, which keeps
    // the zero-violation surface at zero instead of at sqrt(roundoff).
    const double radicand =
        std::pow(c * c - s * s, 2) + 4.0 * std::pow(c * s, 2) * std::pow(std::sin(phi1 + phi2), 2);
    return 4.0 * std::sqrt(std::max(radicand, 0.0));
}

MerminReport compensated_mermin(const KinematicConfig& cfg) {
    if (cfg.particles.size() != 3) throw std::domain_error("Mermin quantity needs exactly three particles");
    const SpinState state = boosted_ghz(cfg);
    const std::array rots{wigner_rotation(cfg, 0), wigner_rotation(cfg, 1), wigner_rotation(cfg, 2)};
    return measure_mermin([&](const std::array<Axis, 3>& labels) {
        const std::array dirs{rotated_direction(labels[0], rots[0]), rotated_direction(labels[1], rots[1]),
                              rotated_direction(labels[2], rots[2])};
        return correlation(state, dirs);
    });
}

LhvAssignment::LhvAssignment(std::array<int, 6> values) : values_(values) {
    for (int v : values_) {
        if (v != 1 && v != -1) throw std::domain_error("hidden-variable outcomes must be +1 or -1");
    }
}

int LhvAssignment::mermin_value() const {
    return x(0) * y(1) * y(2) + y(0) * x(1) * y(2) + y(0) * y(1) * x(2) - x(0) * x(1) * x(2);
}

std::vector<LhvAssignment> all_lhv_assignments() {
    std::vector<LhvAssignment> out;
    out.reserve(64);
    for (unsigned bits = 0; bits < 64; ++bits) {
        std::array<int, 6> v{};
        for (unsigned k = 0; k < 6; ++k) v[k] = ((bits >> k) & 1U) ? -1 : 1;
        out.emplace_back(v);
    }
    return out;
}

int lhv_maximum() {
    int best = 0;
    for (const auto& a : all_lhv_assignments()) best = std::max(best, std::abs(a.mermin_value()));
    return best;
}

GhzContradictionReport ghz_contradiction_check() {
    GhzContradictionReport report;
    report.all_force_xxx_minus_one = true;
    bool first = true;
    for (const auto& a : all_lhv_assignments()) {
        const bool satisfies = a.y(0) * a.y(1) * a.x(2) == -1 && a.y(0) * a.x(1) * a.y(2) == -1 &&
                               a.x(0) * a.y(1) * a.y(2) == -1;
        if (!satisfies) continue;
        ++report.satisfying_assignments;
        const int xxx = a.x(0) * a.x(1) * a.x(2);
        if (first) {
            report.forced_lhv_xxx = xxx;
            first = false;
        }
        if (xxx != -1) report.all_force_xxx_minus_one = false;
    }
    if (report.satisfying_assignments == 0) report.all_force_xxx_minus_one = false;

    const SpinState ghz = ghz_state(3, std::vector<FourMomentum>(3));
    const std::array dirs{Direction::x_axis(), Direction::x_axis(), Direction::x_axis()};
    report.quantum_xxx = correlation(ghz, dirs);
    return report;
}

double zero_violation_surface_delta3(double delta1, double delta2) {
    const double product = std::tan(0.5 * delta1) * std::tan(0.5 * delta2);
    if (!std::isfinite(product) || !(product > 0.0)) {
        throw std::domain_error("zero-violation surface needs tan(delta1/2) tan(delta2/2) > 0");
    }
    return 2.0 * std::atan(1.0 / product);
}

double zero_violation_surface_check(double delta1, double delta2, double phi1, double phi2) {
    return mermin_epsilon_closed_form(delta1, delta2, zero_violation_surface_delta3(delta1, delta2), phi1, phi2);
}

}  // namespace relghz
