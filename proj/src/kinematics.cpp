#include "relghz/kinematics.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>
#include <string>

namespace relghz {

namespace {

void require_finite_rapidity(double value, const char* name) {
    if (!std::isfinite(value) || value < 0.0) {
        throw std::domain_error(std::string(name) + " must be finite and non-negative");
    }
}

void require_polar_angle(double theta) {
    if (!std::isfinite(theta) || theta < 0.0 || theta > M_PI) {
        throw std::domain_error("theta must lie in [0, pi]");
    }
}

}  // namespace

void KinematicConfig::validate() const {
    if (particles.empty()) throw std::domain_error("configuration has no particles");
    if (!std::isfinite(chi) || chi < 0.0) throw std::domain_error("chi must be finite and non-negative");
    for (std::size_t i = 0; i < particles.size(); ++i) {
        const auto& p = particles[i];
        const std::string where = "particles[" + std::to_string(i) + "]";
        if (!std::isfinite(p.xi) || p.xi < 0.0) throw std::domain_error(where + ".xi must be finite and non-negative");
        if (!std::isfinite(p.theta) || p.theta < 0.0 || p.theta > M_PI) {
            throw std::domain_error(where + ".theta must lie in [0, pi]");
        }
        if (!std::isfinite(p.phi)) throw std::domain_error(where + ".phi must be finite");
    }
}

double WignerRotation::half_cos() const { return std::cos(0.5 * delta); }
double WignerRotation::half_sin() const { return std::sin(0.5 * delta); }

FourMomentum four_momentum(double xi, double theta, double phi, double mass) {
    require_finite_rapidity(xi, "xi");
    require_polar_angle(theta);
    if (!std::isfinite(mass) || mass <= 0.0) throw std::domain_error("mass must be positive");
    if (!std::isfinite(phi)) throw std::domain_error("phi must be finite");

    const double p = mass * std::sinh(xi);
    return {mass * std::cosh(xi), p * std::sin(theta) * std::cos(phi), p * std::sin(theta) * std::sin(phi),
            p * std::cos(theta)};
}

FourMomentum boost_z(const FourMomentum& p, double chi) {
    require_finite_rapidity(chi, "chi");
    const double ch = std::cosh(chi);
    const double sh = std::sinh(chi);
    return {p.e * ch - p.pz * sh, p.px, p.py, p.pz * ch - p.e * sh};
}

double wigner_angle(double xi, double chi, double theta) {
    require_finite_rapidity(xi, "xi");
    require_finite_rapidity(chi, "chi");
    require_polar_angle(theta);

    // The printed ratios
    //   cos delta = (A - B cos t + C cos^2 t) / (D - B cos t)
    //   sin delta = (B - C cos t) sin t / (D - B cos t)
    // with A = cosh xi + cosh chi, B = sinh xi sinh chi, C = (cosh xi - 1)(cosh chi - 1),
    // D = cosh xi cosh chi + 1 cancel catastrophically for large rapidities. They are evaluated
    // here through the identities
    //   D - B cos t   = cosh(xi - chi) + 1 + 2 B sin^2(t/2)
    //   B - C cos t   = 4 sh_a sh_b (cosh((xi - chi)/2) + 2 sh_a sh_b sin^2(t/2))
    //   1 - cos delta = C sin^2 t / (D - B cos t)
    // (sh_a = sinh(xi/2), sh_b = sinh(chi/2)), which only add non-negative terms.
    const double sh_a = std::sinh(0.5 * xi);
    const double sh_b = std::sinh(0.5 * chi);
    const double b = std::sinh(xi) * std::sinh(chi);
    const double c = 4.0 * sh_a * sh_a * sh_b * sh_b;

    const double half_sin_sq = std::pow(std::sin(0.5 * theta), 2);
    const double sin_t = std::sin(theta);
    const double denominator = std::cosh(xi - chi) + 1.0 + 2.0 * b * half_sin_sq;
    assert(denominator > 0.0);

    const double b_minus_c_cos = 4.0 * sh_a * sh_b * (std::cosh(0.5 * (xi - chi)) + 2.0 * sh_a * sh_b * half_sin_sq);
    const double sin_delta = b_minus_c_cos * sin_t / denominator;
    const double cos_delta = std::clamp(1.0 - c * sin_t * sin_t / denominator, -1.0, 1.0);
    return std::atan2(sin_delta, cos_delta);
}

Vec3 wigner_axis(double theta, double phi) {
    require_polar_angle(theta);
    const double st = std::sin(theta);
    if (st == 0.0) return {};
    // -(z x p_hat)/|z x p_hat| with z x p_hat = sin theta (-sin phi, cos phi, 0)
    return {std::sin(phi), -std::cos(phi), 0.0};
}

Mat2 wigner_su2(double delta, double phi) {
    const double c = std::cos(0.5 * delta);
    const double s = std::sin(0.5 * delta);
    const Complex phase = std::polar(1.0, phi);
    return {c, -std::conj(phase) * s, phase * s, c};
}

WignerRotation wigner_rotation(const KinematicConfig& cfg, std::size_t index) {
    if (index >= cfg.particles.size()) throw std::out_of_range("particle index out of range");
    const auto& p = cfg.particles[index];
    WignerRotation rot;
    rot.delta = wigner_angle(p.xi, cfg.chi, p.theta);
    rot.axis = wigner_axis(p.theta, p.phi);
    rot.phi = p.phi;
    rot.u = wigner_su2(rot.delta, p.phi);
    return rot;
}

Vec3 rotate_about(const Vec3& v, const Vec3& axis, double angle) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    return c * v + s * axis.cross(v) + ((1.0 - c) * axis.dot(v)) * axis;
}

}  // namespace relghz
