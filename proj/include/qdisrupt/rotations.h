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

#ifndef QDISRUPT_ROTATIONS_H_
#define QDISRUPT_ROTATIONS_H_

#include <utility>

#include "qdisrupt/qmat.h"
#include "qdisrupt/rng.h"

namespace qdisrupt {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

enum class AxisLabel { kX, kY, kZ };

/// Direction on the unit sphere.
class UnitAxis {
   public:
    /// Requires nx^2 + ny^2 + nz^2 = 1 within kExactTol; throws kInvalidAxis.
    UnitAxis(double nx, double ny, double nz);

    /// Rescales a nonzero finite vector onto the sphere; throws kInvalidAxis.
    static UnitAxis normalized(double x, double y, double z);
    static UnitAxis along(AxisLabel label);
    static UnitAxis x() {
        return along(AxisLabel::kX);
    }
    static UnitAxis y() {
        return along(AxisLabel::kY);
    }
    static UnitAxis z() {
        return along(AxisLabel::kZ);
    }

    double nx() const {
        return nx_;
    }
    double ny() const {
        return ny_;
    }
    double nz() const {
        return nz_;
    }
    double dot(const UnitAxis &other) const {
        return nx_ * other.nx_ + ny_ * other.ny_ + nz_ * other.nz_;
    }
    UnitAxis operator-() const {
        return UnitAxis(-nx_, -ny_, -nz_, Unchecked{});
    }

    friend bool operator==(const UnitAxis &, const UnitAxis &) = default;

   private:
    struct Unchecked {};
    UnitAxis(double nx, double ny, double nz, Unchecked) : nx_(nx), ny_(ny), nz_(nz) {
    }

    double nx_;
    double ny_;
    double nz_;
};

/// Rotation angle in radians, wrapped into [0, 2pi).
class Angle {
   public:
    Angle() = default;
    /// Throws kInvalidArgument for non-finite input.
    explicit Angle(double radians);

    static Angle degrees(double deg) {
        return Angle(deg * kPi / 180.0);
    }

    double radians() const {
        return theta_;
    }
    double degrees() const {
        return theta_ * 180.0 / kPi;
    }

   private:
    double theta_ = 0.0;
};

ComplexMatrix2 pauli(AxisLabel which);

/// sigma . n
ComplexMatrix2 pauli_dot(const UnitAxis &n);

/// U(n, theta) = exp(+i theta sigma.n / 2)
///   = [[c + i nz s, i(nx - i ny) s], [i(nx + i ny) s, c - i nz s]]
/// with c = cos(theta/2), s = sin(theta/2).
ComplexMatrix2 rotation_unitary(const UnitAxis &n, const Angle &theta);

/// Same as above without wrapping theta; used where the sign of U matters.
ComplexMatrix2 rotation_unitary(const UnitAxis &n, double theta_radians);

inline constexpr double kPoleEpsilon = 1e-9;

/// Spin-1/2 eigenstates along n: (sigma.n) beta_plus = +beta_plus and
/// (sigma.n) beta_minus = -beta_minus.
///
/// Away from the poles:
///   beta_plus  = (1 + nz,  nx + i ny) / sqrt(2 (1 + nz))
///   beta_minus = (1 - nz, -(nx + i ny)) / sqrt(2 (1 - nz))
/// Within kPoleEpsilon of nz = +-1 both are taken from the spherical-angle
/// form (cos t/2, e^{i phi} sin t/2), (sin t/2, -e^{i phi} cos t/2).
std::pair<Spinor, Spinor> spin_eigenstates(const UnitAxis &n);

/// Number of 64-bit draws sample_axis consumes from its stream.
inline constexpr int kDrawsPerAxis = 2;

/// Uniform direction on S^2: nz = 2u - 1, phi = 2 pi v.
UnitAxis sample_axis(RngStream &rng);

}  // namespace qdisrupt

#endif  // QDISRUPT_ROTATIONS_H_
