// Copyright 2026 The qdisrupt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <random>

#include "doctest.h"
#include "qdisrupt/channels.h"
#include "test_util.h"

namespace qdisrupt {
namespace {

using namespace std::complex_literals;

const DensityMatrix kRho1 = rho_initial();
const DensityMatrix kMixed = DensityMatrix::maximally_mixed();

ComplexMatrix2 twirl_by_quadrature(const ComplexMatrix2 &rho, double theta) {
    return testing::sphere_average([&](const UnitAxis &n) {
        ComplexMatrix2 u = rotation_unitary(n, Angle(theta));
        return u * rho * adjoint(u);
    });
}

ComplexMatrix2 random_measurement_by_quadrature(const ComplexMatrix2 &rho) {
    return testing::sphere_average([&](const UnitAxis &n) { return testing::measure_by_spinors(rho, n); });
}

McOptions options(std::uint64_t samples, std::uint64_t seed = 0, unsigned shards = 1) {
    return McOptions{samples, RngStream(seed), shards};
}

TEST_CASE("sphere quadrature oracle") {
    // Normalized measure: <1> = 1, <nz^2> = 1/3, <nx ny> = 0.
    ComplexMatrix2 m = testing::sphere_average(
        [](const UnitAxis &n) { return ComplexMatrix2{1.0, n.nz() * n.nz(), n.nx() * n.ny(), n.nx() * n.nx()}; });
    CHECK(std::abs(m.a00 - 1.0) < 1e-14);
    CHECK(std::abs(m.a01 - 1.0 / 3.0) < 1e-14);
    CHECK(std::abs(m.a10) < 1e-14);
    CHECK(std::abs(m.a11 - 1.0 / 3.0) < 1e-14);
}

TEST_CASE("apply_fixed_rotation") {
    std::mt19937_64 gen(1);
    CHECK(apply_fixed_rotation(kRho1, testing::random_axis(gen), Angle(0.0)).matrix() == kRho1.matrix());
    CHECK(max_abs_diff(apply_fixed_rotation(kRho1, UnitAxis::x(), Angle(kPi)), ComplexMatrix2::diag(0.0, 1.0)) <
          kExactTol);
    for (int i = 0; i < 50; ++i) {
        DensityMatrix out = apply_fixed_rotation(kMixed, testing::random_axis(gen), Angle(testing::random_angle(gen)));
        CHECK(max_abs_diff(out, kMixed) < kExactTol);
    }
    for (int i = 0; i < 200; ++i) {
        DensityMatrix rho = testing::random_state(gen);
        DensityMatrix out = apply_fixed_rotation(rho, testing::random_axis(gen), Angle(testing::random_angle(gen)));
        CHECK(std::abs(purity(out) - purity(rho)) < kExactTol);
        CHECK(std::abs(entropy(out) - entropy(rho)) < kExactTol);
    }
}

TEST_CASE("apply_meyer_mixture") {
    ComplexMatrix2 flip = rotation_unitary(UnitAxis::x(), Angle(kPi));
    SUBCASE("state commuting with F is unchanged") {
        DensityMatrix plus_x = from_bloch({1.0, 0.0, 0.0});
        CHECK(max_abs_diff(apply_meyer_mixture(plus_x, 0.5, flip), plus_x) < kExactTol);
        DensityMatrix partial = from_bloch({-0.4, 0.0, 0.0});
        CHECK(max_abs_diff(apply_meyer_mixture(partial, 0.3, flip), partial) < kExactTol);
    }
    SUBCASE("half flip of |0> is fully mixed") {
        CHECK(max_abs_diff(apply_meyer_mixture(kRho1, 0.5, flip), kMixed) < kExactTol);
    }
    SUBCASE("p = 1 is the identity") {
        std::mt19937_64 gen(2);
        DensityMatrix rho = testing::random_state(gen);
        CHECK(max_abs_diff(apply_meyer_mixture(rho, 1.0, testing::random_unitary(gen)), rho) < kExactTol);
    }
    SUBCASE("errors") {
        ComplexMatrix2 not_unitary{1.0, 1.0, 0.0, 1.0};
        try {
            apply_meyer_mixture(kRho1, 0.5, not_unitary);
            FAIL("expected NotUnitary");
        } catch (const InvariantError &e) {
            CHECK(e.kind() == InvariantError::Kind::kNotUnitary);
        }
        CHECK_THROWS_AS(apply_meyer_mixture(kRho1, 1.5, flip), InvariantError);
        CHECK_THROWS_AS(ChannelSpec::meyer_mixture(-0.1, flip), InvariantError);
        CHECK_THROWS_AS(ChannelSpec::meyer_mixture(0.5, not_unitary), InvariantError);
    }
}

TEST_CASE("twirl_analytic") {
    CHECK(max_abs_diff(twirl_analytic(Angle::degrees(120.0)), kMixed) < kExactTol);
    CHECK(max_abs_diff(twirl_analytic(Angle(0.0)), kRho1) == 0.0);
    CHECK(max_abs_diff(twirl_analytic(Angle::degrees(90.0)), ComplexMatrix2::diag(2.0 / 3.0, 1.0 / 3.0)) < kExactTol);
    // Quadrature oracle agrees on a grid of angles.
    for (int deg = 0; deg < 360; deg += 15) {
        double theta = deg * kPi / 180.0;
        CAPTURE(deg);
        CHECK(max_abs_diff(twirl_analytic(Angle(theta)), twirl_by_quadrature(kRho1, theta)) < kExactTol);
    }
}

TEST_CASE("twirl_general") {
    CHECK(twirl_contraction(kPi / 2) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(twirl_contraction(kPi) == doctest::Approx(-1.0 / 3.0).epsilon(1e-15));
    CHECK(max_abs_diff(twirl_general(kRho1, Angle::degrees(120.0)), kMixed) < kExactTol);

    std::mt19937_64 gen(4);
    for (int i = 0; i < 200; ++i) {
        Angle theta(testing::random_angle(gen));
        CHECK(max_abs_diff(twirl_general(kMixed, theta), kMixed) < kExactTol);
        CHECK(max_abs_diff(twirl_general(kRho1, theta), twirl_analytic(theta)) < kExactTol);

        DensityMatrix rho = testing::random_state(gen);
        CHECK(max_abs_diff(twirl_general(rho, theta), twirl_by_quadrature(rho, theta.radians())) < kExactTol);

        ComplexMatrix2 v = testing::random_unitary(gen);
        DensityMatrix rotated = conjugate(kRho1, v);
        ComplexMatrix2 expected = v * twirl_general(kRho1, theta).matrix() * adjoint(v);
        CHECK(max_abs_diff(twirl_general(rotated, theta), expected) < 1e-10);
    }
}

TEST_CASE("twirl_mc") {
    SUBCASE("agrees with the closed form") {
        for (double deg : {30.0, 90.0, 120.0, 150.0}) {
            Angle theta = Angle::degrees(deg);
            McEstimate est = twirl_mc(kRho1, theta, options(100000));
            CAPTURE(deg);
            CHECK(est.samples == 100000);
            CHECK(est.std_error > 0.0);
            CHECK(agrees_within(est, twirl_general(kRho1, theta).matrix()));
        }
    }
    SUBCASE("single sample is one fixed rotation") {
        McEstimate est = twirl_mc(kRho1, Angle::degrees(77.0), options(1, 99));
        RngStream rng(99);
        UnitAxis axis = sample_axis(rng);
        CHECK(est.mean == apply_fixed_rotation(kRho1, axis, Angle::degrees(77.0)).matrix());
        CHECK(est.std_error == 0.0);
    }
    SUBCASE("zero angle is exact") {
        std::mt19937_64 gen(6);
        DensityMatrix rho = testing::random_state(gen);
        McEstimate est = twirl_mc(rho, Angle(0.0), options(1000, 3));
        CHECK(est.mean == rho.matrix());
        CHECK(est.std_error == 0.0);
    }
    SUBCASE("zero samples rejected") {
        CHECK_THROWS_AS(twirl_mc(kRho1, Angle(1.0), options(0)), InvariantError);
    }
}

TEST_CASE("measure_fixed_axis") {
    CHECK(max_abs_diff(measure_fixed_axis(kRho1, UnitAxis::z()), kRho1) < kExactTol);
    CHECK(max_abs_diff(measure_fixed_axis(kRho1, UnitAxis::x()), kMixed) < kExactTol);
    CHECK(measure_fixed_axis(kMixed, UnitAxis::normalized(1.0, 2.0, 3.0)).matrix() == kMixed.matrix());

    SUBCASE("n_z = 1/2 gives outcome probabilities 3/4 and 1/4") {
        UnitAxis n(std::sqrt(3.0) / 2.0, 0.0, 0.5);
        DensityMatrix out = measure_fixed_axis(kRho1, n);
        auto [plus, minus] = spin_eigenstates(n);
        CHECK(std::abs(expectation(plus, out) - 0.75) < kExactTol);
        CHECK(std::abs(expectation(minus, out) - 0.25) < kExactTol);
        ComplexMatrix2 expected = Complex(0.75) * ComplexMatrix2::outer(plus) + Complex(0.25) * ComplexMatrix2::outer(minus);
        CHECK(max_abs_diff(out, expected) < kExactTol);
    }
    SUBCASE("matches the eigenstate sum, commutes with sigma.n, idempotent") {
        std::mt19937_64 gen(7);
        for (int i = 0; i < 500; ++i) {
            DensityMatrix rho = testing::random_state(gen);
            UnitAxis n = testing::random_axis(gen);
            DensityMatrix out = measure_fixed_axis(rho, n);
            CHECK(max_abs_diff(out, testing::measure_by_spinors(rho, n)) < kExactTol);
            CHECK(std::abs(out.matrix().trace() - 1.0) < kExactTol);
            ComplexMatrix2 s = pauli_dot(n);
            CHECK(max_abs_diff(out.matrix() * s, s * out.matrix()) < kExactTol);
            CHECK(max_abs_diff(measure_fixed_axis(out, n), out) < kExactTol);
        }
    }
}

TEST_CASE("random_measurement_analytic") {
    CHECK(max_abs_diff(random_measurement_analytic(kRho1), ComplexMatrix2::diag(2.0 / 3.0, 1.0 / 3.0)) < kExactTol);
    CHECK(max_abs_diff(random_measurement_analytic(kMixed), kMixed) < kExactTol);
    CHECK(max_abs_diff(random_measurement_by_quadrature(kRho1), ComplexMatrix2::diag(2.0 / 3.0, 1.0 / 3.0)) <
          kExactTol);

    std::mt19937_64 gen(10);
    for (int i = 0; i < 100; ++i) {
        ComplexMatrix2 v = testing::random_unitary(gen);
        DensityMatrix rotated = conjugate(kRho1, v);
        ComplexMatrix2 expected = v * ComplexMatrix2::diag(2.0 / 3.0, 1.0 / 3.0) * adjoint(v);
        CHECK(max_abs_diff(random_measurement_analytic(rotated), expected) < kExactTol);
        CHECK(max_abs_diff(random_measurement_by_quadrature(rotated), expected) < kExactTol);
    }
    // Covariance cross-checked by Monte Carlo on one rotated frame.
    ComplexMatrix2 v = testing::random_unitary(gen);
    McEstimate est = random_measurement_mc(conjugate(kRho1, v), options(100000, 12));
    CHECK(agrees_within(est, v * ComplexMatrix2::diag(2.0 / 3.0, 1.0 / 3.0) * adjoint(v)));
}

TEST_CASE("random_measurement_mc") {
    McEstimate est = random_measurement_mc(kRho1, options(100000));
    CHECK(agrees_within(est, ComplexMatrix2::diag(2.0 / 3.0, 1.0 / 3.0)));
    CHECK(est.std_error < 2e-3);

    McEstimate mixed = random_measurement_mc(kMixed, options(5000, 8));
    CHECK(mixed.mean == kMixed.matrix());
    CHECK(mixed.std_error == 0.0);

    McEstimate again = random_measurement_mc(kRho1, options(100000));
    CHECK(again.mean == est.mean);
    CHECK(again.std_error == est.std_error);

    McEstimate other_seed = random_measurement_mc(kRho1, options(100000, 1));
    CHECK(!(other_seed.mean == est.mean));
}

TEST_CASE("sharded Monte Carlo") {
    ChannelSpec spec = ChannelSpec::random_axis_rotation(Angle::degrees(90.0));
    McEstimate a = apply_channel_mc(spec, kRho1, options(20001, 5, 4));
    McEstimate b = apply_channel_mc(spec, kRho1, options(20001, 5, 4));
    CHECK(a.mean == b.mean);
    CHECK(a.std_error == b.std_error);
    CHECK(a.samples == 20001);
    CHECK(agrees_within(a, twirl_analytic(Angle::degrees(90.0))));

    McEstimate c = apply_channel_mc(spec, kRho1, options(20001, 5, 3));
    CHECK(!(c.mean == a.mean));

    // One shard is the plain sequential estimator.
    McEstimate sequential = twirl_mc(kRho1, Angle::degrees(90.0), options(20001, 5, 1));
    McEstimate single = apply_channel_mc(spec, kRho1, options(20001, 5, 1));
    CHECK(sequential.mean == single.mean);

    // More shards than samples still works.
    McEstimate tiny = apply_channel_mc(spec, kRho1, options(2, 5, 8));
    CHECK(tiny.samples == 2);
}

TEST_CASE("apply_channel") {
    ChannelSpec measure = ChannelSpec::random_basis_measurement();
    SUBCASE("iterated random measurement") {
        ChannelOutput one = apply_channel(ChannelSpec::iterated(measure, 1), kRho1, Mode::kAnalytic);
        CHECK(!one.estimate);
        CHECK(std::abs(decompose_polarized(one.state).w_polarized - 1.0 / 3.0) < kExactTol);
        ChannelOutput three = apply_channel(ChannelSpec::iterated(measure, 3), kRho1, Mode::kAnalytic);
        CHECK(std::abs(decompose_polarized(three.state).w_polarized - 1.0 / 27.0) < kExactTol);
        ComplexMatrix2 expected = Complex(1.0 / 27.0) * kRho1.matrix() + Complex(26.0 / 27.0) * kMixed.matrix();
        CHECK(max_abs_diff(three.state, expected) < kExactTol);
    }
    SUBCASE("two-axis flip") {
        ChannelSpec flip = ChannelSpec::two_axis_flip(UnitAxis::x(), UnitAxis::y());
        CHECK(max_abs_diff(apply_channel(flip, kRho1, Mode::kAnalytic).state, ComplexMatrix2::diag(0.0, 1.0)) <
              kExactTol);
        ChannelOutput mc = apply_channel(flip, kRho1, Mode::kMonteCarlo, options(1000));
        REQUIRE(mc.estimate);
        CHECK(max_abs_diff(mc.state, ComplexMatrix2::diag(0.0, 1.0)) < kExactTol);
        CHECK(mc.estimate->std_error < kExactTol);
        CHECK_THROWS_AS(ChannelSpec::two_axis_flip(UnitAxis::x(), UnitAxis::normalized(1.0, 1.0, 0.0)),
                        InvariantError);
    }
    SUBCASE("iteration count validated") {
        CHECK_THROWS_AS(ChannelSpec::iterated(measure, 0), InvariantError);
    }
    SUBCASE("Meyer mixture Monte Carlo") {
        ChannelSpec meyer = ChannelSpec::meyer_mixture(0.5, rotation_unitary(UnitAxis::x(), Angle(kPi)));
        ChannelOutput mc = apply_channel(meyer, kRho1, Mode::kMonteCarlo, options(100000));
        CHECK(agrees_within(*mc.estimate, kMixed));
    }
    SUBCASE("describe") {
        CHECK(ChannelSpec::random_axis_rotation(Angle::degrees(120.0)).describe() == "rotate 120 deg about a random axis");
        CHECK(ChannelSpec::iterated(measure, 2).describe() == "measure along a random axis, repeated 2 times");
    }
}

TEST_CASE("channel properties") {
    std::mt19937_64 gen(77);
    for (int trial = 0; trial < 1000; ++trial) {
        ChannelSpec spec = testing::random_channel(gen);
        DensityMatrix rho = testing::random_state(gen);
        DensityMatrix out = apply_channel_analytic(spec, rho);
        CAPTURE(spec.describe());
        CHECK_NOTHROW(validate_density(out.matrix()));
        CHECK(max_abs_diff(apply_channel_analytic(spec, kMixed), kMixed) < kExactTol);

        bool unitary = std::holds_alternative<ChannelSpec::FixedRotation>(spec.variant());
        if (unitary) {
            CHECK(std::abs(entropy(out) - entropy(rho)) < kExactTol);
        } else {
            CHECK(entropy(out) >= entropy(rho) - kExactTol);
        }

        McEstimate mc = apply_channel_mc(spec, rho, options(200, trial));
        CHECK_NOTHROW(validate_density(mc.mean));
    }
}

TEST_CASE("contraction factors and fixed points") {
    std::mt19937_64 gen(78);
    for (int trial = 0; trial < 200; ++trial) {
        DensityMatrix pure = testing::random_pure_state(gen);
        CHECK(max_abs_diff(twirl_general(pure, Angle(2.0 * kPi / 3.0)), kMixed) < kExactTol);

        DensityMatrix rho = testing::random_state(gen);
        Angle theta(testing::random_angle(gen));
        double r = to_bloch(rho).norm();
        CHECK(std::abs(to_bloch(twirl_general(rho, theta)).norm() - std::abs(twirl_contraction(theta.radians())) * r) <
              kExactTol);
        CHECK(std::abs(to_bloch(random_measurement_analytic(rho)).norm() - r / 3.0) < kExactTol);
    }
    // MC contraction of the twirl at a few angles on a tilted pure state.
    DensityMatrix tilted = from_bloch({0.6, 0.0, 0.8});
    for (double deg : {45.0, 135.0}) {
        Angle theta = Angle::degrees(deg);
        CHECK(agrees_within(twirl_mc(tilted, theta, options(100000, 21)), twirl_general(tilted, theta).matrix()));
    }
}

TEST_CASE("iterated decay") {
    ChannelSpec measure = ChannelSpec::random_basis_measurement();
    for (int n = 1; n <= 8; ++n) {
        DensityMatrix out = apply_channel_analytic(ChannelSpec::iterated(measure, n), kRho1);
        CHECK(std::abs(decompose_polarized(out).w_polarized - std::pow(3.0, -n)) < kExactTol);
    }
    for (int n = 1; n <= 5; ++n) {
        ChannelSpec spec = ChannelSpec::iterated(measure, n);
        McEstimate est = apply_channel_mc(spec, kRho1, options(100000, 100 + n));
        CAPTURE(n);
        CHECK(agrees_within(est, apply_channel_analytic(spec, kRho1).matrix()));
    }
}

}  // namespace
}  // namespace qdisrupt
