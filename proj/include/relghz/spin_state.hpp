#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "relghz/kinematics.hpp"
#include "relghz/linalg.hpp"

namespace relghz {

/// Pure n-particle spin state over |up/down>^n with classical momentum labels.
///
/// Amplitude index bit (n-1-i) holds particle i (0 = up, 1 = down), so particle 0 is the
/// most significant bit and indices read left to right like the kets.
class SpinState {
public:
    /// Throws std::domain_error unless amplitudes.size() == 2^n, momenta.size() == n and
    /// the norm is 1 to 1e-12.
    SpinState(std::vector<Complex> amplitudes, std::vector<FourMomentum> momenta);

    [[nodiscard]] std::size_t particle_count() const { return momenta_.size(); }
    [[nodiscard]] std::span<const Complex> amplitudes() const { return amplitudes_; }
    [[nodiscard]] Complex amplitude(std::size_t index) const { return amplitudes_.at(index); }
    [[nodiscard]] std::span<const FourMomentum> momenta() const { return momenta_; }
    [[nodiscard]] double norm_squared() const;

    /// Product basis state; bit i of `pattern` set means particle i is down.
    static SpinState basis(std::size_t n, std::size_t pattern);

private:
    std::vector<Complex> amplitudes_;
    std::vector<FourMomentum> momenta_;
};

/// Applies `op` to the spin of `particle`, in place, on a raw 2^n amplitude vector.
void apply_single_particle(std::span<Complex> amplitudes, std::size_t n, std::size_t particle, const Mat2& op);

/// (|up...up> + |down...down>)/sqrt(2); n >= 2.
SpinState ghz_state(std::size_t n, std::vector<FourMomentum> momenta);

/// (u_0 x u_1 x ... x u_{n-1}) |state>, with the momentum labels replaced by `boosted_momenta`.
SpinState apply_local_unitaries(const SpinState& state, std::span<const Mat2> unitaries,
                                std::vector<FourMomentum> boosted_momenta);

/// Closed-form amplitudes of the boosted three-particle GHZ state (phi3 = 0), in the order
/// uuu, uud, udu, udd, duu, dud, ddu, ddd.
std::array<Complex, 8> ghz_boosted_coefficients(double delta1, double delta2, double delta3, double phi1,
                                                double phi2);

/// GHZ state of cfg's lab momenta as described in the observer frame.
SpinState boosted_ghz(const KinematicConfig& cfg);

/// Single-particle reduced density matrix.
Mat2 reduced_density_matrix(const SpinState& state, std::size_t particle);

/// Eigenvalues of reduced_density_matrix, sorted descending.
std::array<double, 2> reduced_density_spectrum(const SpinState& state, std::size_t particle);

}  // namespace relghz
