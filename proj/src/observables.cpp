#include "relghz/observables.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace relghz {

namespace {

constexpr double kUnitTolerance = 1e-12;
constexpr double kImaginaryTolerance = 1e-10;

}  // namespace

Direction::Direction(double x, double y, double z) : v_{x, y, z} {
    if (!(std::abs(v_.norm() - 1.0) <= kUnitTolerance)) throw std::domain_error("direction is not a unit vector");
}

Direction axis_direction(Axis axis) {
    switch (axis) {
        case Axis::x:
            return Direction::x_axis();
        case Axis::y:
            return Direction::y_axis();
        case Axis::z:
            break;
    }
    return Direction::z_axis();
}

SpinOperator spin_operator(const Direction& dir) { return {pauli_combination(dir.vector())}; }

double correlation(const SpinState& state, std::span<const Direction> dirs) {
    const std::size_t n = state.particle_count();
    if (dirs.size() != n) throw std::domain_error("need one direction per particle");

    std::vector<Complex> image(state.amplitudes().begin(), state.amplitudes().end());
    for (std::size_t i = 0; i < n; ++i) apply_single_particle(image, n, i, spin_operator(dirs[i]).matrix);

    Complex value = 0.0;
    const auto amps = state.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) value += std::conj(amps[i]) * image[i];
    if (std::abs(value.imag()) > kImaginaryTolerance) {
        throw std::logic_error("expectation value of a Hermitian observable has an imaginary part");
    }
    return value.real();
}

Direction conjugated_direction(const Direction& a, const Mat2& u) {
    const Vec3 v = bloch_components(u * pauli_combination(a.vector()) * u.adjoint());
    // renormalize away roundoff from the matrix products
    return Direction((1.0 / v.norm()) * v);
}

Direction rotated_direction(Axis axis, const WignerRotation& rot) {
    const double c = rot.half_cos();
    const double s = rot.half_sin();
    const double phi = rot.phi;
    switch (axis) {
        case Axis::x:
            return {c * c - s * s * std::cos(2.0 * phi), -s * s * std::sin(2.0 * phi), -2.0 * s * c * std::cos(phi)};
        case Axis::y:
            return {-s * s * std::sin(2.0 * phi), c * c + s * s * std::cos(2.0 * phi), -2.0 * s * c * std::sin(phi)};
        case Axis::z:
            break;
    }
    return conjugated_direction(Direction::z_axis(), rot.u);
}

double compensated_correlation(const KinematicConfig& cfg, std::span<const Axis> labels) {
    if (labels.size() != cfg.particles.size()) throw std::domain_error("need one axis label per particle");
    const SpinState state = boosted_ghz(cfg);
    std::vector<Direction> dirs;
    dirs.reserve(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) dirs.push_back(rotated_direction(labels[i], wigner_rotation(cfg, i)));
    return correlation(state, dirs);
}

}  // namespace relghz
