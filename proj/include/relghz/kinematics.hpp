#pragma once

#include <cstddef>
#include <vector>

#include "relghz/linalg.hpp"

namespace relghz {

/// Energy-momentum four-vector (e, px, py, pz) in units where the particle mass is the unit of energy.
struct FourMomentum {
    double e = 1.0;
    double px = 0.0;
    double py = 0.0;
    double pz = 0.0;

    [[nodiscard]] double invariant_mass_squared() const { return e * e - (px * px + py * py + pz * pz); }
    [[nodiscard]] Vec3 spatial() const { return {px, py, pz}; }
};

/// Rapidity and emission direction of one particle in the laboratory frame.
struct ParticleKinematics {
    double xi = 0.0;
    double theta = 0.0;
    double phi = 0.0;
};

/// All boost inputs: per-particle lab kinematics plus the observer rapidity chi along +z.
struct KinematicConfig {
    std::vector<ParticleKinematics> particles;
    double chi = 0.0;

    /// Throws std::domain_error naming the offending field.
    void validate() const;
};

/// Wigner rotation picked up by one particle's spin when viewed from the observer frame.
struct WignerRotation {
    double delta = 0.0;
    Vec3 axis;  // (0,0,0) when the axis is undefined (theta = 0 or pi)
    double phi = 0.0;
    Mat2 u = Mat2::identity();

    [[nodiscard]] double half_cos() const;
    [[nodiscard]] double half_sin() const;
};

/// (m cosh xi, m sinh xi sin theta cos phi, m sinh xi sin theta sin phi, m sinh xi cos theta)
FourMomentum four_momentum(double xi, double theta, double phi, double mass = 1.0);

/// Applies the pure boost with rapidity -chi along z (the lab-to-observer transformation).
FourMomentum boost_z(const FourMomentum& p, double chi);

/// Wigner angle delta in [0, pi] for a particle with rapidity xi at polar angle theta,
/// seen by an observer with rapidity chi along z.
double wigner_angle(double xi, double chi, double theta);

/// Unit axis -(z x p_hat)/|z x p_hat|, or (0,0,0) when sin theta = 0.
Vec3 wigner_axis(double theta, double phi);

/// Spinor representative: columns (cos d/2, e^{i phi} sin d/2) and (-e^{-i phi} sin d/2, cos d/2).
///
/// Conjugation u (a.sigma) u^dagger rotates a by -delta about wigner_axis(theta, phi),
/// which is the same spatial rotation as L(Lambda p)^-1 Lambda L(p).
Mat2 wigner_su2(double delta, double phi);

/// Bundles angle, axis and spinor representative for particle `index` of `cfg`.
/// Throws std::out_of_range for a bad index.
WignerRotation wigner_rotation(const KinematicConfig& cfg, std::size_t index);

/// Rotation by `angle` about unit `axis` (right-hand rule), applied to `v`.
Vec3 rotate_about(const Vec3& v, const Vec3& axis, double angle);

}  // namespace relghz
