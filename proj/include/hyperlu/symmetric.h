// Copyright 2026 The hyperlu Authors
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

#ifndef HYPERLU_SYMMETRIC_H
#define HYPERLU_SYMMETRIC_H

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "hyperlu/dense.h"
#include "hyperlu/rational.h"
#include "hyperlu/sign_state.h"

namespace hyperlu {

using Vec3 = std::array<double, 3>;

/// Coefficients in the normalized Dicke basis.
struct DickeCoeffs {
    int n = 0;
    std::vector<double> d;
    /// Common sign per Hamming weight when the input was a sign vector.
    std::optional<std::vector<int>> signs;

    static DickeCoeffs from_values(std::vector<double> d);
};

/// Throws NotSymmetric unless the sign depends only on the Hamming weight.
DickeCoeffs dicke_coeffs(const SignState &state);

/// Length-(n+1) sign pattern if sqrt(2^n) d_k = +-sqrt(C(n,k)) for every k
/// (exact when signs are known, within 1e-9 otherwise).
std::optional<std::vector<int>> is_hypergraph_dicke(const DickeCoeffs &coeffs);

/// Sizes m_1 < ... < m_r whose complete hypergraph has the given weight pattern.
/// Throws NotAHypergraphState if the weight-0 sign is negative.
std::vector<int> complete_sizes_from_pattern(const std::vector<int> &pattern);

/// p(z) = sum_k (-1)^k sqrt(C(n,k)) d_k z^k, coefficients in ascending order.
struct MajoranaPolynomial {
    int n = 0;
    std::vector<double> coeffs;
    /// For sign-vector input: coeffs[k] = integer_coeffs[k] / sqrt(2)^n exactly,
    /// with integer_coeffs[k] = (-1)^k eps_k C(n,k).
    std::optional<std::vector<BigInt>> integer_coeffs;
};

MajoranaPolynomial majorana_polynomial(const DickeCoeffs &coeffs);

struct PolyRoot {
    std::complex<double> value;
    int multiplicity = 1;
};

/// Roots of sum_k coeffs[k] z^k with multiplicity, sorted by (re, im).
/// Throws DegreeZero when no coefficient above the constant is nonzero.
std::vector<PolyRoot> polynomial_roots(const std::vector<double> &coeffs);
/// Same, using exact square-free factorization to find multiplicities.
std::vector<PolyRoot> polynomial_roots(const std::vector<BigInt> &coeffs);

/// Multiset as a flat list, each root repeated by its multiplicity.
std::vector<std::complex<double>> expand_roots(const std::vector<PolyRoot> &roots);

/// Inverse stereographic projection of conj(root) from the north pole:
/// 0 goes to the south pole (|1>), infinity to the north pole (|0>).
Vec3 root_to_bloch(std::complex<double> root);
std::vector<Vec3> roots_to_bloch(const std::vector<std::complex<double>> &roots);

struct MajoranaConfig {
    MajoranaPolynomial poly;
    std::vector<PolyRoot> roots;
    /// Degree deficit of p(z): each missing top coefficient is a root at infinity.
    int roots_at_infinity = 0;
    std::vector<Vec3> points;
};

MajoranaConfig majorana_config(const DickeCoeffs &coeffs);

/// Rotation of the Bloch sphere stored as a unit quaternion (w, x, y, z).
struct Rotation {
    double w = 1, x = 0, y = 0, z = 0;

    static Rotation identity();
    /// Angle (radians) about a unit axis.
    static Rotation about_axis(const Vec3 &axis, double angle);
    static Rotation half_turn(const Vec3 &axis);
    static Rotation from_matrix(const std::array<Vec3, 3> &m);

    std::array<Vec3, 3> matrix() const;
    Vec3 apply(const Vec3 &v) const;
    /// this * other (apply other first).
    Rotation compose(const Rotation &other) const;
    /// Rotation angle in [0, pi].
    double angle() const;
    /// Unit axis; (0,0,1) for the identity.
    Vec3 axis() const;
    /// Order if the angle is 2 pi / k for some k <= 24, else 0.
    int order(double tol = 1e-6) const;

    /// sign * (w I - i (x X + y Y + z Z)), an SU(2) lift.
    Gate1q lift(int sign = 1) const;

    /// Same rotation (q and -q are identified).
    bool same_as(const Rotation &other, double tol) const;
};

struct SymmetrySearch {
    std::vector<Rotation> rotations;
    double tolerance = 0;
    /// All points on one axis: every rotation about it is a symmetry.
    bool continuous_axis = false;
    std::vector<std::string> warnings;
};

/// All rotations mapping the point multiset onto itself within tol, identity
/// first. tol must be in [1e-12, 1e-6] (ArgOutOfRange otherwise). If the
/// result is not closed under composition, the search is repeated once at
/// 1e-7 and a warning is recorded.
SymmetrySearch find_point_symmetries(const std::vector<Vec3> &points, double tol = 1e-9);

constexpr int kMaxTensorQubits = 16;

/// Phase c with U^{(x)n} psi = c psi for one of the two lifts U of R, if any.
/// Throws NotSymmetric / TooLarge.
std::optional<std::complex<double>> tensor_symmetry_phase(const SignState &state, const Rotation &rotation, double tol = 1e-9);
bool verify_tensor_symmetry(const SignState &state, const Rotation &rotation, double tol = 1e-9);

/// Parity of C(w, m).
int binom_parity(int64_t w, int64_t m);

enum class XSymmetry { Plus, Minus, Neither };
const char *x_symmetry_name(XSymmetry s);

/// Whether the m-complete n-qubit state is fixed by X^{(x)n}, by -X^{(x)n}, or neither.
/// Throws ArgOutOfRange unless 1 <= m <= n.
XSymmetry x_symmetry_class(int n, int m);
/// Whether the m-complete n-qubit state is fixed by Y^{(x)n}.
bool y_symmetric(int n, int m);

/// Eigenvalue (+1 or -1) of P^{(x)n} on the state, found by exact dense
/// application of the Pauli P ('X', 'Y' or 'Z') to every qubit.
std::optional<int> dense_pauli_power_eigenvalue(const SignState &state, char pauli);

enum class Family615Kind { A, B, C, D };
enum class ExpectedSymmetry { PlusX, MinusX, PlusY };
const char *expected_symmetry_name(ExpectedSymmetry s);

struct Family615 {
    int n = 0;
    int m = 0;
    ExpectedSymmetry expected = ExpectedSymmetry::PlusX;
};

/// Instances of the parity families. Kind A needs m in 1..2^j - 1; kinds B
/// and C set m = 2^j and ignore the argument. Throws BadParams otherwise.
Family615 family_615(Family615Kind kind, int j, int l, int m = 0);

}  // namespace hyperlu

#endif
