#include "relghz/spin_state.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace relghz {

namespace {

constexpr double kNormTolerance = 1e-12;
constexpr double kUnitaryTolerance = 1e-10;

std::size_t bit_of(std::size_t n, std::size_t particle) { return std::size_t{1} << (n - 1 - particle); }

}  // namespace

SpinState::SpinState(std::vector<Complex> amplitudes, std::vector<FourMomentum> momenta)
    : amplitudes_(std::move(amplitudes)), momenta_(std::move(momenta)) {
    const std::size_t n = momenta_.size();
    if (n == 0 || n >= 8 * sizeof(std::size_t)) throw std::domain_error("particle count out of range");
    if (amplitudes_.size() != (std::size_t{1} << n)) {
        throw std::domain_error("amplitude count " + std::to_string(amplitudes_.size()) + " is not 2^" +
                                std::to_string(n));
    }
    if (std::abs(norm_squared() - 1.0) > kNormTolerance) throw std::domain_error("spin state is not normalized");
}

double SpinState::norm_squared() const {
    double sum = 0.0;
    for (const auto& a : amplitudes_) sum += std::norm(a);
    return sum;
}

SpinState SpinState::basis(std::size_t n, std::size_t pattern) {
    std::vector<Complex> amps(std::size_t{1} << n);
    std::size_t index = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if ((pattern >> i) & 1U) index |= bit_of(n, i);
    }
    amps.at(index) = 1.0;
    return {std::move(amps), std::vector<FourMomentum>(n)};
}

void apply_single_particle(std::span<Complex> amplitudes, std::size_t n, std::size_t particle, const Mat2& op) {
    const std::size_t mask = bit_of(n, particle);
    for (std::size_t i = 0; i < amplitudes.size(); ++i) {
        if (i & mask) continue;
        const Complex up = amplitudes[i];
        const Complex down = amplitudes[i | mask];
        amplitudes[i] = op(0, 0) * up + op(0, 1) * down;
        amplitudes[i | mask] = op(1, 0) * up + op(1, 1) * down;
    }
}

SpinState ghz_state(std::size_t n, std::vector<FourMomentum> momenta) {
    if (n < 2) throw std::domain_error("GHZ state needs at least two particles");
    if (momenta.size() != n) throw std::domain_error("need one momentum label per particle");
    std::vector<Complex> amps(std::size_t{1} << n);
    amps.front() = M_SQRT1_2;
    amps.back() = M_SQRT1_2;
    return {std::move(amps), std::move(momenta)};
}

SpinState apply_local_unitaries(const SpinState& state, std::span<const Mat2> unitaries,
                                std::vector<FourMomentum> boosted_momenta) {
    const std::size_t n = state.particle_count();
    if (unitaries.size() != n) throw std::domain_error("need one unitary per particle");
    if (boosted_momenta.size() != n) throw std::domain_error("need one boosted momentum per particle");

    std::vector<Complex> amps(state.amplitudes().begin(), state.amplitudes().end());
    for (std::size_t i = 0; i < n; ++i) {
        if (unitarity_defect(unitaries[i]) > kUnitaryTolerance) {
            throw std::domain_error("matrix for particle " + std::to_string(i) + " is not unitary");
        }
        apply_single_particle(amps, n, i, unitaries[i]);
    }
    return {std::move(amps), std::move(boosted_momenta)};
}

std::array<Complex, 8> ghz_boosted_coefficients(double delta1, double delta2, double delta3, double phi1,
                                                double phi2) {
    const double c1 = std::cos(0.5 * delta1), s1 = std::sin(0.5 * delta1);
    const double c2 = std::cos(0.5 * delta2), s2 = std::sin(0.5 * delta2);
    const double c3 = std::cos(0.5 * delta3), s3 = std::sin(0.5 * delta3);
    const auto e = [](double angle) { return std::polar(1.0, angle); };

    std::array<Complex, 8> k = {
        c1 * c2 * c3 - e(-(phi1 + phi2)) * s1 * s2 * s3,
        e(-(phi1 + phi2)) * s1 * s2 * c3 + c1 * c2 * s3,
        e(-phi1) * s1 * c2 * s3 + e(phi2) * c1 * s2 * c3,
        -e(-phi1) * s1 * c2 * c3 + e(phi2) * c1 * s2 * s3,
        e(-phi2) * c1 * s2 * s3 + e(phi1) * s1 * c2 * c3,
        -e(-phi2) * c1 * s2 * c3 + e(phi1) * s1 * c2 * s3,
        e(phi1 + phi2) * s1 * s2 * c3 - c1 * c2 * s3,
        c1 * c2 * c3 + e(phi1 + phi2) * s1 * s2 * s3,
    };
    for (auto& v : k) v *= M_SQRT1_2;
    return k;
}

SpinState boosted_ghz(const KinematicConfig& cfg) {
    cfg.validate();
    const std::size_t n = cfg.particles.size();
    std::vector<FourMomentum> lab;
    std::vector<FourMomentum> boosted;
    std::vector<Mat2> unitaries;
    for (std::size_t i = 0; i < n; ++i) {
        const auto& p = cfg.particles[i];
        lab.push_back(four_momentum(p.xi, p.theta, p.phi));
        boosted.push_back(boost_z(lab.back(), cfg.chi));
        unitaries.push_back(wigner_rotation(cfg, i).u);
    }
    return apply_local_unitaries(ghz_state(n, std::move(lab)), unitaries, std::move(boosted));
}

Mat2 reduced_density_matrix(const SpinState& state, std::size_t particle) {
    const std::size_t n = state.particle_count();
    if (particle >= n) throw std::out_of_range("particle index out of range");
    const std::size_t mask = bit_of(n, particle);
    const auto amps = state.amplitudes();
    Mat2 rho{0.0, 0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if (i & mask) continue;
        const Complex up = amps[i];
        const Complex down = amps[i | mask];
        rho(0, 0) += up * std::conj(up);
        rho(0, 1) += up * std::conj(down);
        rho(1, 0) += down * std::conj(up);
        rho(1, 1) += down * std::conj(down);
    }
    return rho;
}

std::array<double, 2> reduced_density_spectrum(const SpinState& state, std::size_t particle) {
    const Mat2 rho = reduced_density_matrix(state, particle);
    const double a = rho(0, 0).real();
    const double d = rho(1, 1).real();
    const double half_gap = std::sqrt(0.25 * (a - d) * (a - d) + std::norm(rho(0, 1)));
    const double mean = 0.5 * (a + d);
    return {std::clamp(mean + half_gap, 0.0, 1.0), std::clamp(mean - half_gap, 0.0, 1.0)};
}

}  // namespace relghz
