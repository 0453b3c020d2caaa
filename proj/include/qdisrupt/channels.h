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

#ifndef QDISRUPT_CHANNELS_H_
#define QDISRUPT_CHANNELS_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>

#include "qdisrupt/qmat.h"
#include "qdisrupt/rng.h"
#include "qdisrupt/rotations.h"

namespace qdisrupt {

/// A disruption strategy for the second player, as a qubit channel.
class ChannelSpec {
   public:
    struct FixedRotation {
        UnitAxis axis;
        Angle theta;
    };
    /// rho -> p rho + (1 - p) F rho F^dagger
    struct MeyerMixture {
        double p;
        ComplexMatrix2 flip;
    };
    /// Rotation by theta about a uniformly random axis.
    struct RandomAxisRotation {
        Angle theta;
    };
    struct FixedAxisMeasurement {
        UnitAxis axis;
    };
    struct RandomBasisMeasurement {};
    /// 180 degree rotation about one of two orthogonal axes, each with probability 1/2.
    struct TwoAxisFlip {
        UnitAxis first;
        UnitAxis second;
    };
    /// `inner` applied `count` times, with fresh randomness each time.
    struct Iterated {
        std::shared_ptr<const ChannelSpec> inner;
        int count;
    };

    using Variant = std::variant<FixedRotation, MeyerMixture, RandomAxisRotation, FixedAxisMeasurement,
                                 RandomBasisMeasurement, TwoAxisFlip, Iterated>;

    static ChannelSpec fixed_rotation(const UnitAxis &axis, const Angle &theta);
    /// Throws kInvalidArgument for p outside [0, 1] and kNotUnitary for F.
    static ChannelSpec meyer_mixture(double p, const ComplexMatrix2 &flip);
    static ChannelSpec random_axis_rotation(const Angle &theta);
    static ChannelSpec fixed_axis_measurement(const UnitAxis &axis);
    static ChannelSpec random_basis_measurement();
    /// Throws kInvalidAxes unless the axes are orthogonal.
    static ChannelSpec two_axis_flip(const UnitAxis &first, const UnitAxis &second);
    /// Throws kInvalidArgument for count < 1.
    static ChannelSpec iterated(const ChannelSpec &inner, int count);

    const Variant &variant() const {
        return variant_;
    }

    /// Short human-readable description, e.g. "rotate 120 deg about a random axis".
    std::string describe() const;

   private:
    explicit ChannelSpec(Variant v) : variant_(std::move(v)) {
    }
    Variant variant_;
};

enum class Mode { kAnalytic, kMonteCarlo };

/// Monte Carlo settings. With shards > 1, shard i draws from
/// rng.substream(i) and results are merged in shard order, so the output
/// depends only on (rng, samples, shards).
struct McOptions {
    std::uint64_t samples = 100000;
    RngStream rng{};
    unsigned shards = 1;
};

struct McEstimate {
    ComplexMatrix2 mean;
    /// Largest standard error over the 8 real components of the mean.
    double std_error = 0.0;
    std::uint64_t samples = 0;

    DensityMatrix state() const {
        return assume_density(mean);
    }
};

/// Largest difference over the 8 real components of a and b.
double max_component_diff(const ComplexMatrix2 &a, const ComplexMatrix2 &b);

/// True when every real component of the estimate lies within
/// `sigmas * std_error` of `reference`.
bool agrees_within(const McEstimate &estimate, const ComplexMatrix2 &reference, double sigmas = 4.0);

/// U rho U^dagger
DensityMatrix conjugate(const DensityMatrix &rho, const ComplexMatrix2 &u);

DensityMatrix apply_fixed_rotation(const DensityMatrix &rho, const UnitAxis &n, const Angle &theta);

/// Throws kNotUnitary / kInvalidArgument.
DensityMatrix apply_meyer_mixture(const DensityMatrix &rho, double p, const ComplexMatrix2 &flip);

/// Closed-form random-axis twirl of |0><0|:
/// diag(cos^2(t/2) + sin^2(t/2)/3, 2 sin^2(t/2)/3).
DensityMatrix twirl_analytic(const Angle &theta);

/// Bloch contraction of the random-axis twirl, (1 + 2 cos theta) / 3.
double twirl_contraction(double theta_radians);

/// Random-axis twirl of an arbitrary state: Bloch vector scaled by
/// twirl_contraction(theta).
DensityMatrix twirl_general(const DensityMatrix &rho, const Angle &theta);

McEstimate twirl_mc(const DensityMatrix &rho, const Angle &theta, const McOptions &options);

/// Non-selective projective measurement of sigma.n.
DensityMatrix measure_fixed_axis(const DensityMatrix &rho, const UnitAxis &n);

/// Measurement along a uniformly random axis: Bloch vector scaled by 1/3.
DensityMatrix random_measurement_analytic(const DensityMatrix &rho);

McEstimate random_measurement_mc(const DensityMatrix &rho, const McOptions &options);

/// Exact two-term mixture (sigma.a1 rho sigma.a1 + sigma.a2 rho sigma.a2) / 2.
DensityMatrix apply_two_axis_flip(const DensityMatrix &rho, const UnitAxis &first, const UnitAxis &second);

DensityMatrix apply_channel_analytic(const ChannelSpec &spec, const DensityMatrix &rho);

/// One random realization of the channel. Draw layout per realization:
/// random axes take kDrawsPerAxis draws, coin flips one draw, fixed channels none;
/// Iterated consumes its inner layout `count` times.
ComplexMatrix2 sample_channel(const ChannelSpec &spec, const ComplexMatrix2 &rho, RngStream &rng);

McEstimate apply_channel_mc(const ChannelSpec &spec, const DensityMatrix &rho, const McOptions &options);

struct ChannelOutput {
    DensityMatrix state;
    std::optional<McEstimate> estimate;  // set in Monte Carlo mode
};

ChannelOutput apply_channel(const ChannelSpec &spec, const DensityMatrix &rho, Mode mode,
                            const McOptions &options = {});

}  // namespace qdisrupt

#endif  // QDISRUPT_CHANNELS_H_
