// Test-only reference computations, kept independent of the library's formula paths.
#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "relghz/kinematics.hpp"
#include "relghz/linalg.hpp"

namespace relghz::oracle {

using Real = long double;
using Matrix4 = Eigen::Matrix<Real, 4, 4>;
using Matrix3 = Eigen::Matrix<Real, 3, 3>;
using Vector3 = Eigen::Matrix<Real, 3, 1>;

/// Pure boost with rapidity `eta` along unit `n`, acting on (t, x, y, z).
inline Matrix4 boost_matrix(Real eta, const Vector3& n) {
    Matrix4 m = Matrix4::Identity();
    const Real ch = std::cosh(eta);
    const Real sh = std::sinh(eta);
    m(0, 0) = ch;
    for (int i = 0; i < 3; ++i) {
        m(0, i + 1) = sh * n(i);
        m(i + 1, 0) = sh * n(i);
        for (int j = 0; j < 3; ++j) m(i + 1, j + 1) += (ch - 1) * n(i) * n(j);
    }
    return m;
}

/// Inverse of the pure boost taking the rest four-velocity (1,0,0,0) to `u`.
inline Matrix4 boost_from(const Eigen::Matrix<Real, 4, 1>& u) {
    const Vector3 spatial = u.tail<3>();
    const Real q = spatial.norm();
    if (q == 0) return Matrix4::Identity();
    return boost_matrix(-std::asinh(q), spatial / q);
}

struct Rotation {
    Real angle = 0;        // in [0, pi]
    Vector3 axis;          // right-hand axis, zero when angle = 0
    Matrix3 matrix;
    Real boost_residual = 0;  // max |W_0mu|, |W_mu0| off the identity; 0 for a pure rotation
};

/// Residual rotation W = L(Lambda p)^-1 Lambda L(p) with Lambda = L(-chi z): the polar
/// decomposition of Lambda L(p) into the pure boost to Lambda p and a rotation.
inline Rotation wigner_from_boosts(double xi, double chi, double theta, double phi) {
    const Vector3 p_hat(std::sin(Real(theta)) * std::cos(Real(phi)), std::sin(Real(theta)) * std::sin(Real(phi)),
                        std::cos(Real(theta)));
    const Matrix4 particle = boost_matrix(xi, p_hat);
    const Matrix4 observer = boost_matrix(chi, Vector3(0, 0, -1));
    const Matrix4 composed = observer * particle;
    const Matrix4 w = boost_from(composed.col(0)) * composed;

    Rotation r;
    r.matrix = w.block<3, 3>(1, 1);
    r.boost_residual = std::max({std::abs(w(0, 0) - 1), w.row(0).tail<3>().cwiseAbs().maxCoeff(),
                                 w.col(0).tail<3>().cwiseAbs().maxCoeff()});
    const Matrix3& m = r.matrix;
    const Vector3 v(m(2, 1) - m(1, 2), m(0, 2) - m(2, 0), m(1, 0) - m(0, 1));
    r.angle = std::atan2(v.norm() / 2, (m.trace() - 1) / 2);
    r.axis = v.norm() > 0 ? Vector3(v / v.norm()) : Vector3::Zero();
    return r;
}

/// <psi| a1.sigma (x) a2.sigma (x) a3.sigma |psi> via an explicit 8x8 Kronecker product.
inline double dense_correlation(const std::vector<Complex>& psi, const std::array<Vec3, 3>& dirs) {
    using CMatrix = Eigen::MatrixXcd;
    CMatrix op = CMatrix::Identity(1, 1);
    for (const auto& d : dirs) {
        const Mat2 s = pauli_combination(d);
        CMatrix s2(2, 2);
        s2 << s(0, 0), s(0, 1), s(1, 0), s(1, 1);
        CMatrix next(op.rows() * 2, op.cols() * 2);
        for (Eigen::Index i = 0; i < op.rows(); ++i)
            for (Eigen::Index j = 0; j < op.cols(); ++j) next.block(2 * i, 2 * j, 2, 2) = op(i, j) * s2;
        op = next;
    }
    Eigen::VectorXcd v(static_cast<Eigen::Index>(psi.size()));
    for (std::size_t i = 0; i < psi.size(); ++i) v(static_cast<Eigen::Index>(i)) = psi[i];
    return v.dot(op * v).real();
}

// Exact boosted-GHZ results for arbitrary azimuths (phi3 = 0), derived by hand from the
// in-plane GHZ correlation tensor and cross-checked symbolically.
inline std::complex<double> half_angle_weight(double delta, double phi, double sign) {
    const double c = std::cos(delta / 2), s = std::sin(delta / 2);
    return c * c + sign * s * s * std::polar(1.0, 2 * phi);
}

/// E(yyx) = -cos(delta3) Re[(c1^2 + s1^2 e^{2i phi1})(c2^2 + s2^2 e^{2i phi2})]
inline double exact_e_yyx(const std::array<double, 3>& d, double phi1, double phi2) {
    return -std::cos(d[2]) * (half_angle_weight(d[0], phi1, 1) * half_angle_weight(d[1], phi2, 1)).real();
}

/// Signed Mermin sum: -4 [(c1c2c3)^2 - (s1s2s3)^2 cos 2(phi1 + phi2)].
inline double exact_mermin_signed(const std::array<double, 3>& d, double phi1, double phi2) {
    double c2 = 1, s2 = 1;
    for (double x : d) {
        c2 *= std::pow(std::cos(x / 2), 2);
        s2 *= std::pow(std::sin(x / 2), 2);
    }
    return -4 * (c2 - s2 * std::cos(2 * (phi1 + phi2)));
}

}  // namespace relghz::oracle
