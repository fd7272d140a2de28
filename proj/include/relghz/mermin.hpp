#pragma once

#include <array>
#include <vector>

#include "relghz/kinematics.hpp"
#include "relghz/spin_state.hpp"

namespace relghz {

/// The four Mermin correlations and the violation |E(xyy) + E(yxy) + E(yyx) - E(xxx)|.
struct MerminReport {
    double e_xyy = 0.0;
    double e_yxy = 0.0;
    double e_yyx = 0.0;
    double e_xxx = 0.0;
    double signed_value = 0.0;
    double epsilon = 0.0;

    static MerminReport from_correlations(double e_xyy, double e_yxy, double e_yyx, double e_xxx);
};

/// Mermin quantity of a three-particle state measured along the fixed x/y axes.
MerminReport mermin_epsilon(const SpinState& state);

/// 4 sqrt((c1c2c3)^4 + (s1s2s3)^4 - 2 (c1c2c3 s1s2s3)^2 cos[2(phi1 + phi2)]), phi3 = 0.
///
/// Matches mermin_epsilon only where c1c2c3 s1s2s3 sin[2(phi1 + phi2)] = 0; elsewhere the
/// state-vector value is 4 |(c1c2c3)^2 - (s1s2s3)^2 cos[2(phi1 + phi2)]|.
double mermin_epsilon_closed_form(double delta1, double delta2, double delta3, double phi1, double phi2);

/// Mermin quantity of the boosted GHZ state measured along each particle's rotated axes.
MerminReport compensated_mermin(const KinematicConfig& cfg);

/// Predetermined +-1 outcomes (x1, y1, x2, y2, x3, y3).
class LhvAssignment {
public:
    /// Throws std::domain_error if any entry is not +-1.
    explicit LhvAssignment(std::array<int, 6> values);

    [[nodiscard]] int x(std::size_t particle) const { return values_.at(2 * particle); }
    [[nodiscard]] int y(std::size_t particle) const { return values_.at(2 * particle + 1); }

    /// x1y2y3 + y1x2y3 + y1y2x3 - x1x2x3
    [[nodiscard]] int mermin_value() const;

private:
    std::array<int, 6> values_;
};

/// All 64 deterministic assignments.
std::vector<LhvAssignment> all_lhv_assignments();

/// max |mermin_value| over all assignments; 2.
int lhv_maximum();

struct GhzContradictionReport {
    int satisfying_assignments = 0;     // y1y2x3 = y1x2y3 = x1y2y3 = -1
    bool all_force_xxx_minus_one = false;
    int forced_lhv_xxx = 0;
    double quantum_xxx = 0.0;
};

GhzContradictionReport ghz_contradiction_check();

/// delta3 = 2 arctan(1 / (tan(delta1/2) tan(delta2/2))) so that the three half-angle tangents multiply to 1.
/// Throws std::domain_error if the product of tangents is not positive and finite.
double zero_violation_surface_delta3(double delta1, double delta2);

/// mermin_epsilon_closed_form at (delta1, delta2, zero_violation_surface_delta3(delta1, delta2)).
double zero_violation_surface_check(double delta1, double delta2, double phi1, double phi2);

}  // namespace relghz
