#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "relghz/spin_state.hpp"

using namespace relghz;
using std::numbers::pi;

namespace {

std::vector<FourMomentum> labels(std::size_t n) { return std::vector<FourMomentum>(n); }

std::vector<Complex> random_amplitudes(std::mt19937_64& rng, std::size_t count) {
    std::normal_distribution<double> g;
    std::vector<Complex> a(count);
    double norm = 0.0;
    for (auto& v : a) {
        v = {g(rng), g(rng)};
        norm += std::norm(v);
    }
    for (auto& v : a) v /= std::sqrt(norm);
    return a;
}

double max_diff(std::span<const Complex> a, std::span<const Complex> b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

}  // namespace

TEST_CASE("ghz_state") {
    const auto three = ghz_state(3, labels(3));
    REQUIRE(three.amplitudes().size() == 8);
    CHECK(three.amplitude(0) == Complex{M_SQRT1_2});
    CHECK(three.amplitude(7) == Complex{M_SQRT1_2});
    for (std::size_t i = 1; i < 7; ++i) CHECK(three.amplitude(i) == Complex{});
    CHECK(std::abs(three.norm_squared() - 1.0) < 1e-15);

    const auto two = ghz_state(2, labels(2));
    CHECK(two.amplitude(0) == Complex{M_SQRT1_2});
    CHECK(two.amplitude(1) == Complex{});
    CHECK(two.amplitude(2) == Complex{});
    CHECK(two.amplitude(3) == Complex{M_SQRT1_2});

    CHECK_THROWS_AS(ghz_state(1, labels(1)), std::domain_error);
    CHECK_THROWS_AS(ghz_state(3, labels(2)), std::domain_error);
}

TEST_CASE("SpinState rejects malformed input") {
    CHECK_THROWS_AS(SpinState({1.0, 0.0, 0.0}, labels(2)), std::domain_error);
    CHECK_THROWS_AS(SpinState({1.0, 1.0}, labels(1)), std::domain_error);
    CHECK_NOTHROW(SpinState({0.6, Complex{0.0, 0.8}}, labels(1)));
}

TEST_CASE("basis ordering puts particle 0 in the most significant bit") {
    const auto s = SpinState::basis(3, 0b001);  // particle 0 down
    CHECK(s.amplitude(0b100) == Complex{1.0});
}

TEST_CASE("apply_local_unitaries") {
    const std::array ids{Mat2::identity(), Mat2::identity(), Mat2::identity()};
    const auto ghz = ghz_state(3, labels(3));
    CHECK(max_diff(apply_local_unitaries(ghz, ids, labels(3)).amplitudes(), ghz.amplitudes()) == 0.0);

    const std::vector<FourMomentum> boosted{{2.0, 0.0, 0.0, 1.7320508075688772}, {}, {}};
    const auto relabeled = apply_local_unitaries(ghz, ids, boosted);
    CHECK(relabeled.momenta()[0].e == 2.0);

    const double d1 = 0.9, d2 = 2.1, d3 = 1.3, p1 = 0.6, p2 = -2.4;
    const std::array us{wigner_su2(d1, p1), wigner_su2(d2, p2), wigner_su2(d3, 0.0)};
    const auto out = apply_local_unitaries(ghz, us, labels(3));
    const double c1 = std::cos(d1 / 2), c2 = std::cos(d2 / 2), c3 = std::cos(d3 / 2);
    const double s1 = std::sin(d1 / 2), s2 = std::sin(d2 / 2), s3 = std::sin(d3 / 2);
    const Complex first = (c1 * c2 * c3 - std::polar(1.0, -(p1 + p2)) * s1 * s2 * s3) / std::sqrt(2.0);
    CHECK(std::abs(out.amplitude(0) - first) < 1e-15);

    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> d(0.0, pi), ph(-pi, pi);
    for (int trial = 0; trial < 50; ++trial) {
        const SpinState s(random_amplitudes(rng, 16), labels(4));
        const std::array rs{wigner_su2(d(rng), ph(rng)), wigner_su2(d(rng), ph(rng)), wigner_su2(d(rng), ph(rng)),
                            wigner_su2(d(rng), ph(rng))};
        CHECK(std::abs(apply_local_unitaries(s, rs, labels(4)).norm_squared() - 1.0) < 1e-12);
    }

    const std::array bad{Mat2{1.0, 1.0, 0.0, 1.0}, Mat2::identity(), Mat2::identity()};
    CHECK_THROWS_AS(apply_local_unitaries(ghz, bad, labels(3)), std::domain_error);
    CHECK_THROWS_AS(apply_local_unitaries(ghz, std::span(ids).first(2), labels(3)), std::domain_error);
    CHECK_THROWS_AS(apply_local_unitaries(ghz, ids, labels(2)), std::domain_error);
}

TEST_CASE("ghz_boosted_coefficients") {
    const auto identity = ghz_boosted_coefficients(0, 0, 0, 0.4, -1.2);
    CHECK(std::abs(identity[0] - M_SQRT1_2) < 1e-16);
    CHECK(std::abs(identity[7] - M_SQRT1_2) < 1e-16);
    for (std::size_t i = 1; i < 7; ++i) CHECK(std::abs(identity[i]) < 1e-16);

    // c = 0, s = 1: only the first and last coefficients survive, -1/sqrt2 and +1/sqrt2.
    const auto flipped = ghz_boosted_coefficients(pi, pi, pi, 0.0, 0.0);
    CHECK(std::abs(flipped[0] + M_SQRT1_2) < 1e-15);
    CHECK(std::abs(flipped[7] - M_SQRT1_2) < 1e-15);
    for (std::size_t i = 1; i < 7; ++i) CHECK(std::abs(flipped[i]) < 1e-15);
}

TEST_CASE("ghz_boosted_coefficients equals the tensor-product path") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> d(0.0, pi), ph(-pi, pi);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double d1 = d(rng), d2 = d(rng), d3 = d(rng), p1 = ph(rng), p2 = ph(rng);
        const std::array us{wigner_su2(d1, p1), wigner_su2(d2, p2), wigner_su2(d3, 0.0)};
        const auto state = apply_local_unitaries(ghz_state(3, labels(3)), us, labels(3));
        const auto closed = ghz_boosted_coefficients(d1, d2, d3, p1, p2);
        worst = std::max(worst, max_diff(state.amplitudes(), closed));

        const auto shifted = ghz_boosted_coefficients(d1, d2, d3, p1 + 2 * pi, p2);
        CHECK(max_diff(shifted, closed) < 1e-12);
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("reduced_density_spectrum") {
    const auto ghz = ghz_state(3, labels(3));
    for (std::size_t i = 0; i < 3; ++i) {
        const auto ev = reduced_density_spectrum(ghz, i);
        CHECK(std::abs(ev[0] - 0.5) < 1e-15);
        CHECK(std::abs(ev[1] - 0.5) < 1e-15);
    }

    const auto product = SpinState::basis(3, 0);
    const auto pe = reduced_density_spectrum(product, 1);
    CHECK(pe[0] == 1.0);
    CHECK(pe[1] == 0.0);

    CHECK_THROWS_AS(reduced_density_spectrum(ghz, 3), std::out_of_range);

    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> d(0.0, pi), ph(-pi, pi);
    for (int trial = 0; trial < 100; ++trial) {
        const SpinState s(random_amplitudes(rng, 8), labels(3));
        const std::array us{wigner_su2(d(rng), ph(rng)), wigner_su2(d(rng), ph(rng)), wigner_su2(d(rng), ph(rng))};
        const auto t = apply_local_unitaries(s, us, labels(3));
        for (std::size_t i = 0; i < 3; ++i) {
            const auto before = reduced_density_spectrum(s, i);
            const auto after = reduced_density_spectrum(t, i);
            CHECK(before[0] >= before[1]);
            CHECK(std::abs(before[0] + before[1] - 1.0) < 1e-12);
            CHECK(std::abs(before[0] - after[0]) < 1e-12);
        }
    }
}

TEST_CASE("boosted_ghz") {
    const KinematicConfig cfg{{{1.0, 1.0, 0.3}, {2.0, 2.0, -1.0}, {0.5, 0.7, 0.0}}, 1.2};
    const auto s = boosted_ghz(cfg);
    CHECK(std::abs(s.norm_squared() - 1.0) < 1e-12);
    for (std::size_t i = 0; i < 3; ++i) {
        const auto& p = cfg.particles[i];
        const auto expected = boost_z(four_momentum(p.xi, p.theta, p.phi), cfg.chi);
        CHECK(s.momenta()[i].e == expected.e);
        CHECK(s.momenta()[i].pz == expected.pz);
        const auto ev = reduced_density_spectrum(s, i);
        CHECK(std::abs(ev[0] - 0.5) < 1e-12);
    }
}
