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

#ifndef QDISRUPT_GAME_H_
#define QDISRUPT_GAME_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qdisrupt/channels.h"
#include "qdisrupt/qmat.h"

namespace qdisrupt {

// Penny-flip game: Q prepares the qubit, P applies a channel, Q then
// predicts the final state. Q's best prediction is the top eigenvector of
// the post-channel state, so Q wins with probability lambda_max.

struct PStrategy {
    ChannelSpec spec;
    std::string label;
};

struct GameOutcome {
    double q_win_probability = 1.0;
    /// Odds Q:P reduced so that odds_p == 1, except 1:0 when Q always wins.
    double odds_q = 1.0;
    double odds_p = 0.0;
    DensityMatrix post_channel_state;
    std::optional<McEstimate> estimate;  // Monte Carlo mode only

    /// "1:0", "1:1", "2:1", "1.25:1", ...
    std::string odds_string() const;
};

/// Builds the outcome for a post-channel state. Ties (lambda_max within
/// kExactTol of 1/2) are reported as 1:1.
GameOutcome outcome_from_state(const DensityMatrix &post_channel_state);

/// Q starts from `initial` (|0><0| unless Q has aligned to P's operator).
GameOutcome play_game(const PStrategy &strategy, Mode mode, const McOptions &options = {},
                      const DensityMatrix &initial = rho_initial());

/// An eigenstate of a unitary F, as a pure density matrix.
DensityMatrix unitary_eigenstate(const ComplexMatrix2 &unitary);

/// Meyer's case: Q knows F and prepares one of its eigenstates, so the
/// mixture p rho + (1 - p) F rho F^dagger leaves the state alone.
/// Throws kNotUnitary.
GameOutcome play_case1(const ComplexMatrix2 &flip, Mode mode, double p = 0.5, const McOptions &options = {});

/// P rotates by 180 degrees about `first` or `second` (orthogonal) at random;
/// Q's state is polarized along `q_axis`. Throws kInvalidAxes.
GameOutcome play_two_axis_flip(const UnitAxis &q_axis = UnitAxis::z(), const UnitAxis &first = UnitAxis::x(),
                               const UnitAxis &second = UnitAxis::y());

/// n random-basis measurements in a row; Q wins with 1/2 + 3^-n / 2.
GameOutcome iterated_measurement_odds(int n);

struct AngleScanResult {
    std::vector<double> angles;  // radians
    std::vector<double> purity;
    std::vector<double> distance_to_mixed;
    std::size_t argmin_index = 0;
    double argmin_angle = 0.0;
    /// Zero of the twirl contraction next to the grid minimum, bisected to
    /// kAngleRootTol. Empty when the contraction keeps one sign there.
    std::optional<double> refined_root;
};

inline constexpr double kAngleRootTol = 1e-9;

/// Evaluates the random-axis twirl of `initial` on `steps` evenly spaced
/// angles in [theta_min, theta_max] (radians). Throws kInvalidArgument
/// for steps < 2 or an empty range.
AngleScanResult angle_scan(double theta_min, double theta_max, std::size_t steps,
                           const DensityMatrix &initial = rho_initial());

struct OddsRow {
    std::string case_label;  // "[1]", "[2]", "[3]"
    PStrategy strategy;
    GameOutcome outcome;
};

/// The three cases: Meyer's 180 degree x flip against an aligned Q, the
/// 120 degree random-axis twirl, and a random-basis measurement.
std::vector<OddsRow> odds_table(Mode mode, const McOptions &options = {});

}  // namespace qdisrupt

#endif  // QDISRUPT_GAME_H_
