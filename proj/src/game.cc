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

#include "qdisrupt/game.h"

#include <cmath>
#include <cstdio>
#include <limits>

namespace qdisrupt {

namespace {

std::string short_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

}  // namespace

std::string GameOutcome::odds_string() const {
    return short_number(odds_q) + ":" + short_number(odds_p);
}

GameOutcome outcome_from_state(const DensityMatrix &post_channel_state) {
    GameOutcome out;
    out.post_channel_state = post_channel_state;
    double q = eigen_hermitian(post_channel_state).values[0];
    out.q_win_probability = q;
    if (1.0 - q < kExactTol) {
        out.odds_q = 1.0;
        out.odds_p = 0.0;
    } else if (q - 0.5 < kExactTol) {
        out.odds_q = 1.0;
        out.odds_p = 1.0;
    } else {
        out.odds_q = q / (1.0 - q);
        out.odds_p = 1.0;
    }
    return out;
}

GameOutcome play_game(const PStrategy &strategy, Mode mode, const McOptions &options,
                      const DensityMatrix &initial) {
    ChannelOutput result = apply_channel(strategy.spec, initial, mode, options);
    GameOutcome out = outcome_from_state(result.state);
    out.estimate = result.estimate;
    return out;
}

DensityMatrix unitary_eigenstate(const ComplexMatrix2 &unitary) {
    if (!is_unitary(unitary)) {
        throw InvariantError(InvariantError::Kind::kNotUnitary, "operator is not unitary");
    }
    // A unitary is normal, so its Hermitian and anti-Hermitian parts commute
    // with it and share its eigenvectors. Use whichever part separates them.
    ComplexMatrix2 u_dag = adjoint(unitary);
    ComplexMatrix2 real_part = Complex(0.5) * (unitary + u_dag);
    ComplexMatrix2 imag_part = Complex(0.0, -0.5) * (unitary - u_dag);
    HermitianEigen a = eigen_hermitian(real_part);
    HermitianEigen b = eigen_hermitian(imag_part);
    const HermitianEigen &pick = (a.values[0] - a.values[1]) >= (b.values[0] - b.values[1]) ? a : b;
    return DensityMatrix::pure(pick.vectors[0]);
}

GameOutcome play_case1(const ComplexMatrix2 &flip, Mode mode, double p, const McOptions &options) {
    PStrategy strategy{ChannelSpec::meyer_mixture(p, flip), "Rotate or leave as is"};
    return play_game(strategy, mode, options, unitary_eigenstate(flip));
}

GameOutcome play_two_axis_flip(const UnitAxis &q_axis, const UnitAxis &first, const UnitAxis &second) {
    ChannelSpec spec = ChannelSpec::two_axis_flip(first, second);
    DensityMatrix initial = from_bloch({q_axis.nx(), q_axis.ny(), q_axis.nz()});
    return outcome_from_state(apply_channel_analytic(spec, initial));
}

GameOutcome iterated_measurement_odds(int n) {
    ChannelSpec spec = ChannelSpec::iterated(ChannelSpec::random_basis_measurement(), n);
    return outcome_from_state(apply_channel_analytic(spec, rho_initial()));
}

AngleScanResult angle_scan(double theta_min, double theta_max, std::size_t steps, const DensityMatrix &initial) {
    if (steps < 2) {
        throw InvariantError(InvariantError::Kind::kInvalidArgument, "angle scan needs at least 2 steps");
    }
    if (!(theta_min < theta_max) || !std::isfinite(theta_min) || !std::isfinite(theta_max)) {
        throw InvariantError(InvariantError::Kind::kInvalidArgument, "angle scan needs theta_min < theta_max");
    }
    const DensityMatrix mixed = DensityMatrix::maximally_mixed();
    AngleScanResult out;
    out.angles.reserve(steps);
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < steps; ++i) {
        double theta = theta_min + (theta_max - theta_min) * static_cast<double>(i) / static_cast<double>(steps - 1);
        DensityMatrix twirled = twirl_general(initial, Angle(theta));
        double distance = trace_distance(twirled, mixed);
        out.angles.push_back(theta);
        out.purity.push_back(purity(twirled));
        out.distance_to_mixed.push_back(distance);
        if (distance < best) {
            best = distance;
            out.argmin_index = i;
        }
    }
    out.argmin_angle = out.angles[out.argmin_index];

    // Bisect the contraction factor on a bracketing cell next to the minimum.
    std::size_t i = out.argmin_index;
    for (std::size_t lo_index : {i == 0 ? i : i - 1, i}) {
        if (lo_index + 1 >= steps) {
            continue;
        }
        double lo = out.angles[lo_index];
        double hi = out.angles[lo_index + 1];
        double k_lo = twirl_contraction(lo);
        if (k_lo * twirl_contraction(hi) > 0.0) {
            continue;
        }
        while (hi - lo > kAngleRootTol) {
            double mid = 0.5 * (lo + hi);
            if (k_lo * twirl_contraction(mid) <= 0.0) {
                hi = mid;
            } else {
                lo = mid;
                k_lo = twirl_contraction(lo);
            }
        }
        out.refined_root = 0.5 * (lo + hi);
        break;
    }
    return out;
}

std::vector<OddsRow> odds_table(Mode mode, const McOptions &options) {
    ComplexMatrix2 flip = rotation_unitary(UnitAxis::x(), kPi);
    PStrategy meyer{ChannelSpec::meyer_mixture(0.5, flip), "Rotate or leave as is"};
    PStrategy twirl{ChannelSpec::random_axis_rotation(Angle::degrees(120.0)), "Rotate 120 deg; random axis"};
    PStrategy measure{ChannelSpec::random_basis_measurement(), "Measure; random axis"};

    std::vector<OddsRow> rows;
    rows.push_back({"[1]", meyer, play_case1(flip, mode, 0.5, options)});
    rows.push_back({"[2]", twirl, play_game(twirl, mode, options)});
    rows.push_back({"[3]", measure, play_game(measure, mode, options)});
    return rows;
}

}  // namespace qdisrupt
