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

#include "qdisrupt/rotations.h"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qdisrupt {

namespace {

[[noreturn]] void bad_axis(double x, double y, double z, const char *why) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "invalid axis (" << x << ", " << y << ", " << z << "): " << why;
    throw InvariantError(InvariantError::Kind::kInvalidAxis, msg.str());
}

}  // namespace

UnitAxis::UnitAxis(double nx, double ny, double nz) : nx_(nx), ny_(ny), nz_(nz) {
    if (!std::isfinite(nx) || !std::isfinite(ny) || !std::isfinite(nz)) {
        bad_axis(nx, ny, nz, "non-finite component");
    }
    if (std::abs(nx * nx + ny * ny + nz * nz - 1.0) > kExactTol) {
        bad_axis(nx, ny, nz, "not unit length");
    }
}

UnitAxis UnitAxis::normalized(double x, double y, double z) {
    if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(z)) {
        bad_axis(x, y, z, "non-finite component");
    }
    double len = std::sqrt(x * x + y * y + z * z);
    if (len == 0.0) {
        bad_axis(x, y, z, "zero vector");
    }
    return UnitAxis(x / len, y / len, z / len, Unchecked{});
}

UnitAxis UnitAxis::along(AxisLabel label) {
    switch (label) {
        case AxisLabel::kX:
            return UnitAxis(1.0, 0.0, 0.0);
        case AxisLabel::kY:
            return UnitAxis(0.0, 1.0, 0.0);
        case AxisLabel::kZ:
            break;
    }
    return UnitAxis(0.0, 0.0, 1.0);
}

Angle::Angle(double radians) {
    if (!std::isfinite(radians)) {
        throw InvariantError(InvariantError::Kind::kInvalidArgument, "angle must be finite");
    }
    double wrapped = std::fmod(radians, 2.0 * kPi);
    if (wrapped < 0.0) {
        wrapped += 2.0 * kPi;
    }
    theta_ = wrapped >= 2.0 * kPi ? 0.0 : wrapped;
}

ComplexMatrix2 pauli(AxisLabel which) {
    using namespace std::complex_literals;
    switch (which) {
        case AxisLabel::kX:
            return {0.0, 1.0, 1.0, 0.0};
        case AxisLabel::kY:
            return {0.0, -1.0i, 1.0i, 0.0};
        case AxisLabel::kZ:
            break;
    }
    return {1.0, 0.0, 0.0, -1.0};
}

ComplexMatrix2 pauli_dot(const UnitAxis &n) {
    return {n.nz(), Complex(n.nx(), -n.ny()), Complex(n.nx(), n.ny()), -n.nz()};
}

ComplexMatrix2 rotation_unitary(const UnitAxis &n, const Angle &theta) {
    return rotation_unitary(n, theta.radians());
}

ComplexMatrix2 rotation_unitary(const UnitAxis &n, double theta_radians) {
    double c = std::cos(0.5 * theta_radians);
    double s = std::sin(0.5 * theta_radians);
    // i (nx -+ i ny) s = (+-ny + i nx) s
    return {
        Complex(c, n.nz() * s),
        Complex(n.ny() * s, n.nx() * s),
        Complex(-n.ny() * s, n.nx() * s),
        Complex(c, -n.nz() * s),
    };
}

std::pair<Spinor, Spinor> spin_eigenstates(const UnitAxis &n) {
    double nz = n.nz();
    Complex transverse(n.nx(), n.ny());
    if (std::abs(1.0 + nz) < kPoleEpsilon || std::abs(1.0 - nz) < kPoleEpsilon) {
        double polar = std::atan2(std::hypot(n.nx(), n.ny()), nz);
        Complex phase = std::polar(1.0, std::atan2(n.ny(), n.nx()));
        double c = std::cos(0.5 * polar);
        double s = std::sin(0.5 * polar);
        return {Spinor{c, phase * s}, Spinor{s, -phase * c}};
    }
    double plus_norm = std::sqrt(2.0 * (1.0 + nz));
    double minus_norm = std::sqrt(2.0 * (1.0 - nz));
    return {
        Spinor{(1.0 + nz) / plus_norm, transverse / plus_norm},
        Spinor{(1.0 - nz) / minus_norm, -transverse / minus_norm},
    };
}

UnitAxis sample_axis(RngStream &rng) {
    double nz = 2.0 * rng.next_double() - 1.0;
    double phi = 2.0 * kPi * rng.next_double();
    double rho = std::sqrt(std::max(0.0, 1.0 - nz * nz));
    return UnitAxis(rho * std::cos(phi), rho * std::sin(phi), nz);
}

}  // namespace qdisrupt
