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

#include "qdisrupt/channels.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <thread>
#include <vector>

namespace qdisrupt {

namespace {

// Running mean and squared deviations of the 8 real components of a 2x2
// complex matrix. A constant input stream leaves m2 at exactly zero.
class MatrixMoments {
   public:
    void add(const ComplexMatrix2 &x) {
        ++count_;
        double n = static_cast<double>(count_);
        for (int k = 0; k < 8; ++k) {
            double v = component(x, k);
            double delta = v - mean_[k];
            mean_[k] += delta / n;
            m2_[k] += delta * (v - mean_[k]);
        }
    }

    void merge(const MatrixMoments &other) {
        if (other.count_ == 0) {
            return;
        }
        if (count_ == 0) {
            *this = other;
            return;
        }
        double na = static_cast<double>(count_);
        double nb = static_cast<double>(other.count_);
        double total = na + nb;
        for (int k = 0; k < 8; ++k) {
            double delta = other.mean_[k] - mean_[k];
            mean_[k] += delta * nb / total;
            m2_[k] += other.m2_[k] + delta * delta * na * nb / total;
        }
        count_ += other.count_;
    }

    McEstimate estimate() const {
        McEstimate out;
        out.samples = count_;
        for (int k = 0; k < 4; ++k) {
            out.mean.at(k) = Complex(mean_[2 * k], mean_[2 * k + 1]);
        }
        if (count_ > 1) {
            double n = static_cast<double>(count_);
            for (double m2 : m2_) {
                out.std_error = std::max(out.std_error, std::sqrt(m2 / (n - 1.0) / n));
            }
        }
        return out;
    }

   private:
    static double component(const ComplexMatrix2 &x, int k) {
        const Complex &z = x.at(k / 2);
        return k % 2 == 0 ? z.real() : z.imag();
    }

    std::uint64_t count_ = 0;
    std::array<double, 8> mean_{};
    std::array<double, 8> m2_{};
};

template <typename SampleFn>
McEstimate run_mc(const McOptions &options, SampleFn sample) {
    if (options.samples < 1) {
        throw InvariantError(InvariantError::Kind::kInvalidArgument, "Monte Carlo needs at least one sample");
    }
    unsigned shards = std::max(1u, options.shards);
    if (shards == 1) {
        MatrixMoments moments;
        RngStream rng = options.rng;
        for (std::uint64_t i = 0; i < options.samples; ++i) {
            moments.add(sample(rng));
        }
        return moments.estimate();
    }

    std::vector<MatrixMoments> partial(shards);
    std::vector<std::thread> workers;
    workers.reserve(shards);
    std::uint64_t base = options.samples / shards;
    std::uint64_t extra = options.samples % shards;
    for (unsigned s = 0; s < shards; ++s) {
        std::uint64_t count = base + (s < extra ? 1 : 0);
        workers.emplace_back([&, s, count] {
            RngStream rng = options.rng.substream(s);
            for (std::uint64_t i = 0; i < count; ++i) {
                partial[s].add(sample(rng));
            }
        });
    }
    for (std::thread &w : workers) {
        w.join();
    }
    MatrixMoments total;
    for (const MatrixMoments &m : partial) {
        total.merge(m);
    }
    return total.estimate();
}

void require_unitary(const ComplexMatrix2 &flip) {
    if (!is_unitary(flip)) {
        throw InvariantError(InvariantError::Kind::kNotUnitary, "mixture operator F is not unitary");
    }
}

void require_probability(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw InvariantError(InvariantError::Kind::kInvalidArgument,
                             "mixture probability must lie in [0, 1], got " + std::to_string(p));
    }
}

ComplexMatrix2 conjugated(const ComplexMatrix2 &rho, const ComplexMatrix2 &u) {
    return u * rho * adjoint(u);
}

// Non-selective measurement of sigma.n written in the Bloch form
// (I + (r.n) sigma.n) / 2, which equals sum_{+-} P rho P with P = (I +- sigma.n)/2.
ComplexMatrix2 measured(const ComplexMatrix2 &rho, const UnitAxis &n) {
    double projection = 2.0 * rho.a01.real() * n.nx() - 2.0 * rho.a01.imag() * n.ny() +
                        (rho.a00.real() - rho.a11.real()) * n.nz();
    return ComplexMatrix2::diag(0.5, 0.5) + Complex(0.5 * projection) * pauli_dot(n);
}

ComplexMatrix2 depolarized(const ComplexMatrix2 &rho, double keep) {
    return Complex(keep) * rho + Complex(0.5 * (1.0 - keep)) * ComplexMatrix2::identity();
}

ComplexMatrix2 two_axis_flipped(const ComplexMatrix2 &rho, const UnitAxis &first, const UnitAxis &second) {
    return Complex(0.5) * (conjugated(rho, pauli_dot(first)) + conjugated(rho, pauli_dot(second)));
}

std::string fmt_number(double v) {
    std::ostringstream out;
    out.precision(6);
    out << v;
    return out.str();
}

std::string fmt_axis(const UnitAxis &n) {
    return "(" + fmt_number(n.nx()) + ", " + fmt_number(n.ny()) + ", " + fmt_number(n.nz()) + ")";
}

}  // namespace

ChannelSpec ChannelSpec::fixed_rotation(const UnitAxis &axis, const Angle &theta) {
    return ChannelSpec(FixedRotation{axis, theta});
}

ChannelSpec ChannelSpec::meyer_mixture(double p, const ComplexMatrix2 &flip) {
    require_probability(p);
    require_unitary(flip);
    return ChannelSpec(MeyerMixture{p, flip});
}

ChannelSpec ChannelSpec::random_axis_rotation(const Angle &theta) {
    return ChannelSpec(RandomAxisRotation{theta});
}

ChannelSpec ChannelSpec::fixed_axis_measurement(const UnitAxis &axis) {
    return ChannelSpec(FixedAxisMeasurement{axis});
}

ChannelSpec ChannelSpec::random_basis_measurement() {
    return ChannelSpec(RandomBasisMeasurement{});
}

ChannelSpec ChannelSpec::two_axis_flip(const UnitAxis &first, const UnitAxis &second) {
    if (std::abs(first.dot(second)) > kExactTol) {
        throw InvariantError(InvariantError::Kind::kInvalidAxes,
                             "two-axis flip needs orthogonal axes, got " + fmt_axis(first) + " and " +
                                 fmt_axis(second));
    }
    return ChannelSpec(TwoAxisFlip{first, second});
}

ChannelSpec ChannelSpec::iterated(const ChannelSpec &inner, int count) {
    if (count < 1) {
        throw InvariantError(InvariantError::Kind::kInvalidArgument,
                             "iteration count must be at least 1, got " + std::to_string(count));
    }
    return ChannelSpec(Iterated{std::make_shared<const ChannelSpec>(inner), count});
}

std::string ChannelSpec::describe() const {
    struct Visitor {
        std::string operator()(const FixedRotation &c) const {
            return "rotate " + fmt_number(c.theta.degrees()) + " deg about " + fmt_axis(c.axis);
        }
        std::string operator()(const MeyerMixture &c) const {
            return "leave as is with p = " + fmt_number(c.p) + ", otherwise apply F";
        }
        std::string operator()(const RandomAxisRotation &c) const {
            return "rotate " + fmt_number(c.theta.degrees()) + " deg about a random axis";
        }
        std::string operator()(const FixedAxisMeasurement &c) const {
            return "measure along " + fmt_axis(c.axis);
        }
        std::string operator()(const RandomBasisMeasurement &) const {
            return "measure along a random axis";
        }
        std::string operator()(const TwoAxisFlip &c) const {
            return "rotate 180 deg about " + fmt_axis(c.first) + " or " + fmt_axis(c.second) + " at random";
        }
        std::string operator()(const Iterated &c) const {
            return c.inner->describe() + ", repeated " + std::to_string(c.count) + " times";
        }
    };
    return std::visit(Visitor{}, variant_);
}

double max_component_diff(const ComplexMatrix2 &a, const ComplexMatrix2 &b) {
    double worst = 0.0;
    for (int k = 0; k < 4; ++k) {
        Complex d = a.at(k) - b.at(k);
        worst = std::max({worst, std::abs(d.real()), std::abs(d.imag())});
    }
    return worst;
}

bool agrees_within(const McEstimate &estimate, const ComplexMatrix2 &reference, double sigmas) {
    return max_component_diff(estimate.mean, reference) <= sigmas * estimate.std_error;
}

DensityMatrix conjugate(const DensityMatrix &rho, const ComplexMatrix2 &u) {
    return assume_density(conjugated(rho, u));
}

DensityMatrix apply_fixed_rotation(const DensityMatrix &rho, const UnitAxis &n, const Angle &theta) {
    return conjugate(rho, rotation_unitary(n, theta));
}

DensityMatrix apply_meyer_mixture(const DensityMatrix &rho, double p, const ComplexMatrix2 &flip) {
    require_probability(p);
    require_unitary(flip);
    return assume_density(Complex(p) * rho.matrix() + Complex(1.0 - p) * conjugated(rho, flip));
}

DensityMatrix twirl_analytic(const Angle &theta) {
    double c = std::cos(0.5 * theta.radians());
    double s = std::sin(0.5 * theta.radians());
    return assume_density(ComplexMatrix2::diag(c * c + s * s / 3.0, 2.0 * s * s / 3.0));
}

double twirl_contraction(double theta_radians) {
    return (1.0 + 2.0 * std::cos(theta_radians)) / 3.0;
}

DensityMatrix twirl_general(const DensityMatrix &rho, const Angle &theta) {
    return assume_density(depolarized(rho, twirl_contraction(theta.radians())));
}

McEstimate twirl_mc(const DensityMatrix &rho, const Angle &theta, const McOptions &options) {
    return run_mc(options, [&](RngStream &rng) { return conjugated(rho, rotation_unitary(sample_axis(rng), theta)); });
}

DensityMatrix measure_fixed_axis(const DensityMatrix &rho, const UnitAxis &n) {
    return assume_density(measured(rho, n));
}

DensityMatrix random_measurement_analytic(const DensityMatrix &rho) {
    return assume_density(depolarized(rho, 1.0 / 3.0));
}

McEstimate random_measurement_mc(const DensityMatrix &rho, const McOptions &options) {
    return run_mc(options, [&](RngStream &rng) { return measured(rho, sample_axis(rng)); });
}

DensityMatrix apply_two_axis_flip(const DensityMatrix &rho, const UnitAxis &first, const UnitAxis &second) {
    return apply_channel_analytic(ChannelSpec::two_axis_flip(first, second), rho);
}

DensityMatrix apply_channel_analytic(const ChannelSpec &spec, const DensityMatrix &rho) {
    using S = ChannelSpec;
    struct Visitor {
        const DensityMatrix &rho;
        DensityMatrix operator()(const S::FixedRotation &c) const {
            return apply_fixed_rotation(rho, c.axis, c.theta);
        }
        DensityMatrix operator()(const S::MeyerMixture &c) const {
            return apply_meyer_mixture(rho, c.p, c.flip);
        }
        DensityMatrix operator()(const S::RandomAxisRotation &c) const {
            return twirl_general(rho, c.theta);
        }
        DensityMatrix operator()(const S::FixedAxisMeasurement &c) const {
            return measure_fixed_axis(rho, c.axis);
        }
        DensityMatrix operator()(const S::RandomBasisMeasurement &) const {
            return random_measurement_analytic(rho);
        }
        DensityMatrix operator()(const S::TwoAxisFlip &c) const {
            return assume_density(two_axis_flipped(rho, c.first, c.second));
        }
        DensityMatrix operator()(const S::Iterated &c) const {
            DensityMatrix state = rho;
            for (int i = 0; i < c.count; ++i) {
                state = apply_channel_analytic(*c.inner, state);
            }
            return state;
        }
    };
    return std::visit(Visitor{rho}, spec.variant());
}

ComplexMatrix2 sample_channel(const ChannelSpec &spec, const ComplexMatrix2 &rho, RngStream &rng) {
    using S = ChannelSpec;
    struct Visitor {
        const ComplexMatrix2 &rho;
        RngStream &rng;
        ComplexMatrix2 operator()(const S::FixedRotation &c) const {
            return conjugated(rho, rotation_unitary(c.axis, c.theta));
        }
        ComplexMatrix2 operator()(const S::MeyerMixture &c) const {
            return rng.next_double() < c.p ? rho : conjugated(rho, c.flip);
        }
        ComplexMatrix2 operator()(const S::RandomAxisRotation &c) const {
            return conjugated(rho, rotation_unitary(sample_axis(rng), c.theta));
        }
        ComplexMatrix2 operator()(const S::FixedAxisMeasurement &c) const {
            return measured(rho, c.axis);
        }
        ComplexMatrix2 operator()(const S::RandomBasisMeasurement &) const {
            return measured(rho, sample_axis(rng));
        }
        ComplexMatrix2 operator()(const S::TwoAxisFlip &c) const {
            return conjugated(rho, pauli_dot(rng.next_double() < 0.5 ? c.first : c.second));
        }
        ComplexMatrix2 operator()(const S::Iterated &c) const {
            ComplexMatrix2 state = rho;
            for (int i = 0; i < c.count; ++i) {
                state = sample_channel(*c.inner, state, rng);
            }
            return state;
        }
    };
    return std::visit(Visitor{rho, rng}, spec.variant());
}

McEstimate apply_channel_mc(const ChannelSpec &spec, const DensityMatrix &rho, const McOptions &options) {
    return run_mc(options, [&](RngStream &rng) { return sample_channel(spec, rho.matrix(), rng); });
}

ChannelOutput apply_channel(const ChannelSpec &spec, const DensityMatrix &rho, Mode mode,
                            const McOptions &options) {
    if (mode == Mode::kAnalytic) {
        return {apply_channel_analytic(spec, rho), std::nullopt};
    }
    McEstimate estimate = apply_channel_mc(spec, rho, options);
    return {estimate.state(), estimate};
}

}  // namespace qdisrupt
