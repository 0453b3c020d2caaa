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

#ifndef QDISRUPT_QMAT_H_
#define QDISRUPT_QMAT_H_

#include <array>
#include <complex>
#include <stdexcept>
#include <string>

namespace qdisrupt {

using Complex = std::complex<double>;

// Tolerance for closed-form 2x2 algebra.
inline constexpr double kExactTol = 1e-12;

// Raised when an input violates a documented invariant. `kind()` names it.
class InvariantError : public std::invalid_argument {
   public:
    enum class Kind {
        kNotHermitian,
        kTraceNotOne,
        kNotPositive,
        kNotFinite,
        kBlochOutOfBall,
        kNotUnitary,
        kInvalidAxis,
        kInvalidAxes,
        kInvalidArgument,
    };

    InvariantError(Kind kind, const std::string &what) : std::invalid_argument(what), kind_(kind) {
    }

    Kind kind() const {
        return kind_;
    }

   private:
    Kind kind_;
};

/// Two complex amplitudes. Not normalized unless the producer says so.
struct Spinor {
    Complex c0;
    Complex c1;

    double norm2() const {
        return std::norm(c0) + std::norm(c1);
    }
};

/// Row-major 2x2 complex matrix.
struct ComplexMatrix2 {
    Complex a00;
    Complex a01;
    Complex a10;
    Complex a11;

    static constexpr ComplexMatrix2 identity() {
        return {1.0, 0.0, 0.0, 1.0};
    }
    static constexpr ComplexMatrix2 zero() {
        return {0.0, 0.0, 0.0, 0.0};
    }
    static constexpr ComplexMatrix2 diag(Complex d0, Complex d1) {
        return {d0, 0.0, 0.0, d1};
    }
    /// |v><v|
    static ComplexMatrix2 outer(const Spinor &v);

    Complex trace() const {
        return a00 + a11;
    }
    Complex determinant() const {
        return a00 * a11 - a01 * a10;
    }
    bool is_finite() const;

    /// Entry by flat row-major index 0..3.
    const Complex &at(int k) const;
    Complex &at(int k);

    friend bool operator==(const ComplexMatrix2 &, const ComplexMatrix2 &) = default;
};

ComplexMatrix2 operator+(const ComplexMatrix2 &a, const ComplexMatrix2 &b);
ComplexMatrix2 operator-(const ComplexMatrix2 &a, const ComplexMatrix2 &b);
ComplexMatrix2 operator*(const ComplexMatrix2 &a, const ComplexMatrix2 &b);
ComplexMatrix2 operator*(Complex s, const ComplexMatrix2 &a);
Spinor operator*(const ComplexMatrix2 &a, const Spinor &v);

ComplexMatrix2 mat_mul(const ComplexMatrix2 &a, const ComplexMatrix2 &b);
ComplexMatrix2 adjoint(const ComplexMatrix2 &a);

/// <u|v>
Complex inner(const Spinor &u, const Spinor &v);
/// <v|m|v>, real part only; callers use it on Hermitian m.
double expectation(const Spinor &v, const ComplexMatrix2 &m);

/// Largest entry-wise modulus of a - b.
double max_abs_diff(const ComplexMatrix2 &a, const ComplexMatrix2 &b);
/// Max-modulus distance after removing the best global phase from b.
double diff_up_to_phase(const ComplexMatrix2 &a, const ComplexMatrix2 &b);
double diff_up_to_phase(const Spinor &a, const Spinor &b);

bool is_hermitian(const ComplexMatrix2 &a, double tol = kExactTol);
bool is_unitary(const ComplexMatrix2 &a, double tol = kExactTol);

struct HermitianEigen {
    std::array<double, 2> values;    // descending
    std::array<Spinor, 2> vectors;  // orthonormal, vectors[i] pairs with values[i]
};

/// Closed-form eigen-decomposition of a Hermitian 2x2 matrix. Degenerate
/// spectra return the computational basis. Throws kNotHermitian.
HermitianEigen eigen_hermitian(const ComplexMatrix2 &a);

/// A validated qubit state: Hermitian, unit trace, positive semidefinite.
class DensityMatrix {
   public:
    /// |0><0|
    DensityMatrix() : m_(ComplexMatrix2::diag(1.0, 0.0)) {
    }

    const ComplexMatrix2 &matrix() const {
        return m_;
    }
    operator const ComplexMatrix2 &() const {
        return m_;
    }

    static DensityMatrix maximally_mixed() {
        return DensityMatrix(ComplexMatrix2::diag(0.5, 0.5));
    }
    /// |v><v| for a normalized spinor.
    static DensityMatrix pure(const Spinor &v);

    friend DensityMatrix validate_density(const ComplexMatrix2 &m, double tol);
    friend DensityMatrix assume_density(const ComplexMatrix2 &m);

   private:
    explicit DensityMatrix(const ComplexMatrix2 &m) : m_(m) {
    }
    ComplexMatrix2 m_;
};

/// Checks Hermiticity, trace and positivity in that order.
DensityMatrix validate_density(const ComplexMatrix2 &m, double tol = kExactTol);

/// Wraps `m` without checks. Used by channel code whose outputs are states
/// by construction; the property suites verify this.
DensityMatrix assume_density(const ComplexMatrix2 &m);

/// The canonical pure state |0><0|.
inline DensityMatrix rho_initial() {
    return DensityMatrix();
}

double purity(const DensityMatrix &rho);

/// Von Neumann entropy in nats.
double entropy(const DensityMatrix &rho);

struct PolarizedDecomposition {
    double w_polarized;
    double w_unpolarized;
    DensityMatrix polarized;  // pure
};

/// rho = w_p * rho_p + w_u * I/2 with rho_p pure.
PolarizedDecomposition decompose_polarized(const DensityMatrix &rho);

double trace_distance(const DensityMatrix &a, const DensityMatrix &b);

struct BlochVector {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double norm() const;
};

BlochVector to_bloch(const DensityMatrix &rho);
/// Throws kBlochOutOfBall when |v| > 1 + tolerance.
DensityMatrix from_bloch(const BlochVector &v);

}  // namespace qdisrupt

#endif  // QDISRUPT_QMAT_H_
