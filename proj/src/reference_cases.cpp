#include "relghz/reference_cases.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "relghz/mermin.hpp"
#include "relghz/observables.hpp"
#include "relghz/scenario.hpp"
#include "relghz/spin_state.hpp"

namespace relghz {

namespace {

using std::numbers::pi;

class CaseList {
public:
    void check(std::string name, const std::function<double()>& measure, double expected, double tolerance) {
        CaseResult r{std::move(name), 0.0, expected, tolerance, false};
        try {
            r.measured = measure();
            r.passed = std::abs(r.measured - expected) <= tolerance;
        } catch (const std::exception&) {
            r.measured = std::nan("");
        }
        cases_.push_back(std::move(r));
    }

    /// Passes when measure() < bound.
    void below(std::string name, const std::function<double()>& measure, double bound) {
        CaseResult r{std::move(name), 0.0, 0.0, bound, false};
        try {
            r.measured = measure();
            r.passed = std::abs(r.measured) < bound;
        } catch (const std::exception&) {
            r.measured = std::nan("");
        }
        cases_.push_back(std::move(r));
    }

    std::vector<CaseResult> take() { return std::move(cases_); }

private:
    std::vector<CaseResult> cases_;
};

double lab_correlation(Axis a, Axis b, Axis c) {
    const SpinState ghz = ghz_state(3, std::vector<FourMomentum>(3));
    const std::array dirs{axis_direction(a), axis_direction(b), axis_direction(c)};
    return correlation(ghz, dirs);
}

double boosted_correlation(const KinematicConfig& cfg, Axis a, Axis b, Axis c) {
    const std::array dirs{axis_direction(a), axis_direction(b), axis_direction(c)};
    return correlation(boosted_ghz(cfg), dirs);
}

double brute_epsilon(double d1, double d2, double d3, double phi1, double phi2) {
    const std::array us{wigner_su2(d1, phi1), wigner_su2(d2, phi2), wigner_su2(d3, 0.0)};
    const auto momenta = std::vector<FourMomentum>(3);
    return mermin_epsilon(apply_local_unitaries(ghz_state(3, momenta), us, momenta)).epsilon;
}

}  // namespace

std::vector<CaseResult> run_reference_cases() {
    using enum Axis;
    CaseList list;

    list.check("lab GHZ E(yyx)", [] { return lab_correlation(y, y, x); }, -1.0, 1e-12);
    list.check("lab GHZ E(yxy)", [] { return lab_correlation(y, x, y); }, -1.0, 1e-12);
    list.check("lab GHZ E(xyy)", [] { return lab_correlation(x, y, y); }, -1.0, 1e-12);
    list.check("lab GHZ E(xxx)", [] { return lab_correlation(x, x, x); }, 1.0, 1e-12);

    // Boosted correlations in the xz-plane geometry (phi in {0, pi}), where E = -cos(delta) is exact.
    const KinematicConfig planar{{{1.0, pi / 2, 0.0}, {2.0, pi / 3, pi}, {0.5, 2 * pi / 3, 0.0}}, 1.5};
    const auto planar_delta = [&](std::size_t i) { return wigner_rotation(planar, i).delta; };
    list.check("boosted E(yyx) = -cos(delta3)", [&] { return boosted_correlation(planar, y, y, x); },
               -std::cos(planar_delta(2)), 1e-10);
    list.check("boosted E(yxy) = -cos(delta2)", [&] { return boosted_correlation(planar, y, x, y); },
               -std::cos(planar_delta(1)), 1e-10);
    list.check("boosted E(xyy) = -cos(delta1)", [&] { return boosted_correlation(planar, x, y, y); },
               -std::cos(planar_delta(0)), 1e-10);

    list.check("boosted GHZ uuu coefficient",
               [] {
                   const double d1 = 0.7, d2 = 1.9, d3 = 2.4, p1 = 0.3, p2 = -1.1;
                   const std::array us{wigner_su2(d1, p1), wigner_su2(d2, p2), wigner_su2(d3, 0.0)};
                   const auto m = std::vector<FourMomentum>(3);
                   const auto state = apply_local_unitaries(ghz_state(3, m), us, m);
                   return std::abs(state.amplitude(0) - ghz_boosted_coefficients(d1, d2, d3, p1, p2)[0]);
               },
               0.0, 1e-12);

    list.check("epsilon closed form, all delta = 0", [] { return mermin_epsilon_closed_form(0, 0, 0, 0.4, 1.3); },
               4.0, 1e-12);
    list.check("epsilon closed form, delta = pi/2, phi1+phi2 = 0",
               [] { return mermin_epsilon_closed_form(pi / 2, pi / 2, pi / 2, 0.7, -0.7); }, 0.0, 1e-10);
    list.check("epsilon closed form, delta = pi/2, phi1+phi2 = pi/2",
               [] { return mermin_epsilon_closed_form(pi / 2, pi / 2, pi / 2, pi / 4, pi / 4); }, 1.0, 1e-10);
    list.check("epsilon state vector, delta = pi/2, phi1+phi2 = pi/2",
               [] { return brute_epsilon(pi / 2, pi / 2, pi / 2, pi / 4, pi / 4); }, 1.0, 1e-10);
    list.check("lab-frame epsilon", [] { return mermin_epsilon(ghz_state(3, std::vector<FourMomentum>(3))).epsilon; },
               4.0, 1e-12);

    list.below("ultrarelativistic perpendicular epsilon",
               [] {
                   const KinematicConfig cfg{{{20.0, pi / 2, 0.0}, {20.0, pi / 2, 0.0}, {20.0, pi / 2, 0.0}}, 20.0};
                   return mermin_epsilon(boosted_ghz(cfg)).epsilon;
               },
               1e-6);
    list.check("zero-violation surface, delta1 = delta2 = pi/3, phi1+phi2 = pi",
               [] { return zero_violation_surface_check(pi / 3, pi / 3, 2.0, pi - 2.0); }, 0.0, 1e-10);
    list.check("zero-violation surface, state vector",
               [] {
                   const double d3 = zero_violation_surface_delta3(pi / 3, pi / 3);
                   return brute_epsilon(pi / 3, pi / 3, d3, 2.0, pi - 2.0);
               },
               0.0, 1e-10);

    list.check("hidden-variable bound", [] { return static_cast<double>(lhv_maximum()); }, 2.0, 0.0);
    list.check("GHZ argument: forced hidden-variable xxx",
               [] {
                   const auto r = ghz_contradiction_check();
                   return r.all_force_xxx_minus_one ? static_cast<double>(r.forced_lhv_xxx) : 0.0;
               },
               -1.0, 0.0);
    list.check("GHZ argument: quantum xxx", [] { return ghz_contradiction_check().quantum_xxx; }, 1.0, 1e-12);

    const KinematicConfig general{{{1.2, 0.9, 0.4}, {2.5, 2.0, -2.2}, {0.8, 1.4, 0.0}}, 1.7};
    const auto compensated = [&](Axis a, Axis b, Axis c) {
        const std::array labels{a, b, c};
        return compensated_correlation(general, labels);
    };
    list.check("compensated E(y'y'x')", [&] { return compensated(y, y, x); }, -1.0, 1e-10);
    list.check("compensated E(y'x'y')", [&] { return compensated(y, x, y); }, -1.0, 1e-10);
    list.check("compensated E(x'y'y')", [&] { return compensated(x, y, y); }, -1.0, 1e-10);
    list.check("compensated E(x'x'x')", [&] { return compensated(x, x, x); }, 1.0, 1e-10);
    list.check("compensated epsilon", [&] { return compensated_mermin(general).epsilon; }, 4.0, 1e-10);

    return list.take();
}

std::string format_report(const std::vector<CaseResult>& cases) {
    std::ostringstream out;
    std::size_t passed = 0;
    for (const auto& c : cases) {
        passed += c.passed ? 1 : 0;
        out << (c.passed ? "PASS" : "FAIL") << "  " << c.name << "  measured=" << format_number(c.measured)
            << " expected=" << format_number(c.expected) << " tol=" << format_number(c.tolerance) << '\n';
    }
    out << passed << "/" << cases.size() << " cases passed\n";
    return out.str();
}

}  // namespace relghz
