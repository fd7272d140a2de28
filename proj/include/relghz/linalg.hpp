#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

namespace relghz {

using Complex = std::complex<double>;

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    [[nodiscard]] double norm() const { return std::sqrt(x * x + y * y + z * z); }
    [[nodiscard]] double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    [[nodiscard]] Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    friend Vec3 operator*(double s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }
    friend Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend bool operator==(const Vec3&, const Vec3&) = default;
};

/// Row-major 2x2 complex matrix acting on a single spin in the (up, down) basis.
class Mat2 {
public:
    constexpr Mat2() = default;
    constexpr Mat2(Complex m00, Complex m01, Complex m10, Complex m11) : m_{m00, m01, m10, m11} {}

    static constexpr Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

    [[nodiscard]] constexpr Complex operator()(std::size_t row, std::size_t col) const {
        return m_[2 * row + col];
    }
    constexpr Complex& operator()(std::size_t row, std::size_t col) { return m_[2 * row + col]; }

    [[nodiscard]] Mat2 adjoint() const {
        return {std::conj(m_[0]), std::conj(m_[2]), std::conj(m_[1]), std::conj(m_[3])};
    }
    [[nodiscard]] Complex determinant() const { return m_[0] * m_[3] - m_[1] * m_[2]; }
    [[nodiscard]] Complex trace() const { return m_[0] + m_[3]; }

    friend Mat2 operator*(const Mat2& a, const Mat2& b) {
        return {a(0, 0) * b(0, 0) + a(0, 1) * b(1, 0), a(0, 0) * b(0, 1) + a(0, 1) * b(1, 1),
                a(1, 0) * b(0, 0) + a(1, 1) * b(1, 0), a(1, 0) * b(0, 1) + a(1, 1) * b(1, 1)};
    }
    friend Mat2 operator+(const Mat2& a, const Mat2& b) {
        return {a.m_[0] + b.m_[0], a.m_[1] + b.m_[1], a.m_[2] + b.m_[2], a.m_[3] + b.m_[3]};
    }
    friend Mat2 operator-(const Mat2& a, const Mat2& b) {
        return {a.m_[0] - b.m_[0], a.m_[1] - b.m_[1], a.m_[2] - b.m_[2], a.m_[3] - b.m_[3]};
    }
    friend Mat2 operator*(Complex s, const Mat2& a) {
        return {s * a.m_[0], s * a.m_[1], s * a.m_[2], s * a.m_[3]};
    }

    /// Largest entrywise modulus.
    [[nodiscard]] double max_abs() const {
        double r = 0.0;
        for (const auto& v : m_) r = std::max(r, std::abs(v));
        return r;
    }

private:
    std::array<Complex, 4> m_{};
};

namespace pauli {
inline constexpr Mat2 x{0.0, 1.0, 1.0, 0.0};
inline constexpr Mat2 y{0.0, Complex{0.0, -1.0}, Complex{0.0, 1.0}, 0.0};
inline constexpr Mat2 z{1.0, 0.0, 0.0, -1.0};
}  // namespace pauli

/// max |(m^dagger m - I)_ij|
inline double unitarity_defect(const Mat2& m) { return (m.adjoint() * m - Mat2::identity()).max_abs(); }

/// v.x sigma_x + v.y sigma_y + v.z sigma_z
inline Mat2 pauli_combination(const Vec3& v) {
    return Complex{v.x} * pauli::x + Complex{v.y} * pauli::y + Complex{v.z} * pauli::z;
}

/// Inverse of pauli_combination on the traceless Hermitian part: v_k = Re tr(sigma_k m) / 2.
inline Vec3 bloch_components(const Mat2& m) {
    return {0.5 * (pauli::x * m).trace().real(), 0.5 * (pauli::y * m).trace().real(),
            0.5 * (pauli::z * m).trace().real()};
}

}  // namespace relghz
