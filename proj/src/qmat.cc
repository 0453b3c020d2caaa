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

#include "qdisrupt/qmat.h"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qdisrupt {

namespace {

std::string describe(const ComplexMatrix2 &m) {
    std::ostringstream out;
    out.precision(17);
    out << "[[" << m.a00 << ", " << m.a01 << "], [" << m.a10 << ", " << m.a11 << "]]";
    return out.str();
}

Spinor normalized(const Spinor &v) {
    double n = std::sqrt(v.norm2());
    return {v.c0 / n, v.c1 / n};
}

}  // namespace

ComplexMatrix2 ComplexMatrix2::outer(const Spinor &v) {
    return {v.c0 * std::conj(v.c0), v.c0 * std::conj(v.c1), v.c1 * std::conj(v.c0), v.c1 * std::conj(v.c1)};
}

bool ComplexMatrix2::is_finite() const {
    for (int k = 0; k < 4; ++k) {
        if (!std::isfinite(at(k).real()) || !std::isfinite(at(k).imag())) {
            return false;
        }
    }
    return true;
}

const Complex &ComplexMatrix2::at(int k) const {
    switch (k) {
        case 0:
            return a00;
        case 1:
            return a01;
        case 2:
            return a10;
        case 3:
            return a11;
    }
    throw std::out_of_range("ComplexMatrix2 index " + std::to_string(k));
}

Complex &ComplexMatrix2::at(int k) {
    return const_cast<Complex &>(static_cast<const ComplexMatrix2 &>(*this).at(k));
}

ComplexMatrix2 operator+(const ComplexMatrix2 &a, const ComplexMatrix2 &b) {
    return {a.a00 + b.a00, a.a01 + b.a01, a.a10 + b.a10, a.a11 + b.a11};
}

ComplexMatrix2 operator-(const ComplexMatrix2 &a, const ComplexMatrix2 &b) {
    return {a.a00 - b.a00, a.a01 - b.a01, a.a10 - b.a10, a.a11 - b.a11};
}

ComplexMatrix2 operator*(const ComplexMatrix2 &a, const ComplexMatrix2 &b) {
    return mat_mul(a, b);
}

ComplexMatrix2 operator*(Complex s, const ComplexMatrix2 &a) {
    return {s * a.a00, s * a.a01, s * a.a10, s * a.a11};
}

Spinor operator*(const ComplexMatrix2 &a, const Spinor &v) {
    return {a.a00 * v.c0 + a.a01 * v.c1, a.a10 * v.c0 + a.a11 * v.c1};
}

ComplexMatrix2 mat_mul(const ComplexMatrix2 &a, const ComplexMatrix2 &b) {
    return {
        a.a00 * b.a00 + a.a01 * b.a10,
        a.a00 * b.a01 + a.a01 * b.a11,
        a.a10 * b.a00 + a.a11 * b.a10,
        a.a10 * b.a01 + a.a11 * b.a11,
    };
}

ComplexMatrix2 adjoint(const ComplexMatrix2 &a) {
    return {std::conj(a.a00), std::conj(a.a10), std::conj(a.a01), std::conj(a.a11)};
}

Complex inner(const Spinor &u, const Spinor &v) {
    return std::conj(u.c0) * v.c0 + std::conj(u.c1) * v.c1;
}

double expectation(const Spinor &v, const ComplexMatrix2 &m) {
    return inner(v, m * v).real();
}

double max_abs_diff(const ComplexMatrix2 &a, const ComplexMatrix2 &b) {
    double worst = 0.0;
    for (int k = 0; k < 4; ++k) {
        worst = std::max(worst, std::abs(a.at(k) - b.at(k)));
    }
    return worst;
}

double diff_up_to_phase(const ComplexMatrix2 &a, const ComplexMatrix2 &b) {
    Complex overlap = 0.0;
    for (int k = 0; k < 4; ++k) {
        overlap += std::conj(b.at(k)) * a.at(k);
    }
    Complex phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex(1.0);
    return max_abs_diff(a, phase * b);
}

double diff_up_to_phase(const Spinor &a, const Spinor &b) {
    Complex overlap = inner(b, a);
    Complex phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex(1.0);
    return std::max(std::abs(a.c0 - phase * b.c0), std::abs(a.c1 - phase * b.c1));
}

bool is_hermitian(const ComplexMatrix2 &a, double tol) {
    return a.is_finite() && std::abs(a.a00.imag()) <= tol && std::abs(a.a11.imag()) <= tol &&
           std::abs(a.a01 - std::conj(a.a10)) <= tol;
}

bool is_unitary(const ComplexMatrix2 &a, double tol) {
    return a.is_finite() && max_abs_diff(a * adjoint(a), ComplexMatrix2::identity()) <= tol;
}

HermitianEigen eigen_hermitian(const ComplexMatrix2 &a) {
    if (!is_hermitian(a)) {
        throw InvariantError(InvariantError::Kind::kNotHermitian, "matrix is not Hermitian: " + describe(a));
    }
    double d0 = a.a00.real();
    double d1 = a.a11.real();
    Complex off = 0.5 * (a.a01 + std::conj(a.a10));
    double mean = 0.5 * (d0 + d1);
    double half_gap = 0.5 * (d0 - d1);
    double r = std::hypot(half_gap, std::abs(off));

    HermitianEigen out;
    out.values = {mean + r, mean - r};
    if (2.0 * r < kExactTol) {
        out.vectors = {Spinor{1.0, 0.0}, Spinor{0.0, 1.0}};
        return out;
    }
    // Pick the column of (A - lambda_min) with the larger norm for stability.
    Spinor top = d0 >= d1 ? Spinor{half_gap + r, std::conj(off)} : Spinor{off, r - half_gap};
    top = normalized(top);
    out.vectors = {top, Spinor{-std::conj(top.c1), std::conj(top.c0)}};
    return out;
}

DensityMatrix DensityMatrix::pure(const Spinor &v) {
    return DensityMatrix(ComplexMatrix2::outer(v));
}

DensityMatrix validate_density(const ComplexMatrix2 &m, double tol) {
    if (!m.is_finite()) {
        throw InvariantError(InvariantError::Kind::kNotFinite, "matrix has non-finite entries: " + describe(m));
    }
    if (!is_hermitian(m, tol)) {
        throw InvariantError(InvariantError::Kind::kNotHermitian, "density matrix is not Hermitian: " + describe(m));
    }
    if (std::abs(m.trace() - 1.0) > tol) {
        throw InvariantError(InvariantError::Kind::kTraceNotOne, "density matrix trace is not 1: " + describe(m));
    }
    HermitianEigen eig = eigen_hermitian(m);
    if (eig.values[1] < -tol) {
        throw InvariantError(InvariantError::Kind::kNotPositive,
                             "density matrix has a negative eigenvalue: " + describe(m));
    }
    return DensityMatrix(m);
}

DensityMatrix assume_density(const ComplexMatrix2 &m) {
    return DensityMatrix(m);
}

double purity(const DensityMatrix &rho) {
    return (rho.matrix() * rho.matrix()).trace().real();
}

double entropy(const DensityMatrix &rho) {
    double s = 0.0;
    for (double lambda : eigen_hermitian(rho).values) {
        if (lambda > 0.0) {
            s -= lambda * std::log(lambda);
        }
    }
    return s;
}

PolarizedDecomposition decompose_polarized(const DensityMatrix &rho) {
    HermitianEigen eig = eigen_hermitian(rho);
    double w_p = eig.values[0] - eig.values[1];
    return {w_p, 1.0 - w_p, DensityMatrix::pure(eig.vectors[0])};
}

double trace_distance(const DensityMatrix &a, const DensityMatrix &b) {
    HermitianEigen eig = eigen_hermitian(a.matrix() - b.matrix());
    return 0.5 * (std::abs(eig.values[0]) + std::abs(eig.values[1]));
}

double BlochVector::norm() const {
    return std::sqrt(x * x + y * y + z * z);
}

BlochVector to_bloch(const DensityMatrix &rho) {
    const ComplexMatrix2 &m = rho.matrix();
    return {2.0 * m.a01.real(), -2.0 * m.a01.imag(), m.a00.real() - m.a11.real()};
}

DensityMatrix from_bloch(const BlochVector &v) {
    if (!std::isfinite(v.x) || !std::isfinite(v.y) || !std::isfinite(v.z) || v.norm() > 1.0 + kExactTol) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "Bloch vector (" << v.x << ", " << v.y << ", " << v.z << ") lies outside the unit ball";
        throw InvariantError(InvariantError::Kind::kBlochOutOfBall, msg.str());
    }
    return assume_density({0.5 * (1.0 + v.z), Complex(0.5 * v.x, -0.5 * v.y), Complex(0.5 * v.x, 0.5 * v.y),
                           0.5 * (1.0 - v.z)});
}

}  // namespace qdisrupt
