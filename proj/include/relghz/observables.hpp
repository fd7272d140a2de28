#pragma once

#include <span>

#include "relghz/kinematics.hpp"
#include "relghz/linalg.hpp"
#include "relghz/spin_state.hpp"

namespace relghz {

/// Unit 3-vector naming a spin measurement axis.
class Direction {
public:
    /// Throws std::domain_error unless |(x,y,z)| = 1 to 1e-12.
    Direction(double x, double y, double z);
    explicit Direction(const Vec3& v) : Direction(v.x, v.y, v.z) {}

    static Direction x_axis() { return {1.0, 0.0, 0.0}; }
    static Direction y_axis() { return {0.0, 1.0, 0.0}; }
    static Direction z_axis() { return {0.0, 0.0, 1.0}; }

    [[nodiscard]] double x() const { return v_.x; }
    [[nodiscard]] double y() const { return v_.y; }
    [[nodiscard]] double z() const { return v_.z; }
    [[nodiscard]] const Vec3& vector() const { return v_; }

private:
    Vec3 v_;
};

enum class Axis { x, y, z };

Direction axis_direction(Axis axis);

struct SpinOperator {
    Mat2 matrix;
};

/// n.sigma in the up/down basis.
SpinOperator spin_operator(const Direction& dir);

/// <state| dir_0.sigma x dir_1.sigma x ... |state>.
///
/// Throws std::domain_error on a length mismatch and std::logic_error if the expectation
/// value has an imaginary part above 1e-10.
double correlation(const SpinState& state, std::span<const Direction> dirs);

/// Measurement direction a' with a'.sigma = u (a.sigma) u^dagger for the particle's Wigner rotation.
///
/// x and y use the closed forms
///   x' = (c^2 - s^2 cos 2phi, -s^2 sin 2phi, -2sc cos phi)
///   y' = (-s^2 sin 2phi, c^2 + s^2 cos 2phi, -2sc sin phi)
/// with c = cos(delta/2), s = sin(delta/2); z goes through conjugated_direction.
Direction rotated_direction(Axis axis, const WignerRotation& rot);

/// Bloch vector of u (a.sigma) u^dagger.
Direction conjugated_direction(const Direction& a, const Mat2& u);

/// Correlation of the boosted GHZ state of `cfg`, each particle measured along its rotated axis.
double compensated_correlation(const KinematicConfig& cfg, std::span<const Axis> labels);

}  // namespace relghz
