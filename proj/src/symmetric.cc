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

#include "hyperlu/symmetric.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <random>

#include "hyperlu/error.h"

namespace hyperlu {

namespace {

using cd = std::complex<double>;
using cld = std::complex<long double>;
using QPoly = std::vector<Rational>;

double binomial(int n, int k) {
    double out = 1;
    for (int i = 1; i <= k; i++) {
        out = out * (n - k + i) / i;
    }
    return out;
}

BigInt binomial_exact(int n, int k) {
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

// ---- exact polynomial arithmetic over Q, ascending coefficients ----

void trim(QPoly &p) {
    while (!p.empty() && sgn(p.back()) == 0) {
        p.pop_back();
    }
}

int degree(const QPoly &p) {
    return static_cast<int>(p.size()) - 1;
}

QPoly derivative(const QPoly &p) {
    QPoly out;
    for (size_t k = 1; k < p.size(); k++) {
        out.push_back(p[k] * static_cast<long>(k));
    }
    trim(out);
    return out;
}

QPoly make_monic(QPoly p) {
    trim(p);
    if (!p.empty()) {
        Rational lead = p.back();
        for (auto &c : p) {
            c /= lead;
        }
    }
    return p;
}

// Quotient and remainder of a / b, b nonzero.
std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly &b) {
    trim(a);
    int db = degree(b);
    QPoly q(std::max(0, degree(a) - db + 1));
    while (degree(a) >= db && !a.empty()) {
        int shift = degree(a) - db;
        Rational f = a.back() / b.back();
        q[shift] = f;
        for (int k = 0; k <= db; k++) {
            a[shift + k] -= f * b[k];
        }
        trim(a);
    }
    trim(q);
    return {q, a};
}

QPoly gcd(QPoly a, QPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        QPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

QPoly subtract(QPoly a, const QPoly &b) {
    if (a.size() < b.size()) {
        a.resize(b.size());
    }
    for (size_t k = 0; k < b.size(); k++) {
        a[k] -= b[k];
    }
    trim(a);
    return a;
}

// Yun's algorithm: returns (factor, multiplicity) with square-free, pairwise coprime factors.
std::vector<std::pair<QPoly, int>> square_free_factors(const QPoly &f) {
    std::vector<std::pair<QPoly, int>> out;
    QPoly df = derivative(f);
    QPoly a = gcd(f, df);
    QPoly b = divmod(f, a).first;
    QPoly c = divmod(df, a).first;
    QPoly d = subtract(c, derivative(b));
    int i = 1;
    while (degree(b) >= 1) {
        QPoly g = gcd(b, d);
        if (degree(g) >= 1) {
            out.emplace_back(g, i);
        }
        b = divmod(b, g).first;
        c = divmod(d, g).first;
        d = subtract(c, derivative(b));
        i++;
    }
    return out;
}

// ---- numeric root finding ----

cld horner(const std::vector<cld> &p, cld z) {
    cld acc = 0;
    for (size_t k = p.size(); k-- > 0;) {
        acc = acc * z + p[k];
    }
    return acc;
}

std::pair<cld, cld> horner_with_derivative(const std::vector<cld> &p, cld z) {
    cld value = 0;
    cld slope = 0;
    for (size_t k = p.size(); k-- > 0;) {
        slope = slope * z + value;
        value = value * z + p[k];
    }
    return {value, slope};
}

bool aberth_pass(const std::vector<cld> &p, std::vector<cld> &z) {
    size_t d = z.size();
    for (int iter = 0; iter < 800; iter++) {
        long double worst = 0;
        for (size_t k = 0; k < d; k++) {
            auto [value, slope] = horner_with_derivative(p, z[k]);
            if (std::abs(value) == 0) {
                continue;
            }
            cld ratio = value / slope;
            cld sum = 0;
            for (size_t j = 0; j < d; j++) {
                if (j != k) {
                    sum += 1.0L / (z[k] - z[j]);
                }
            }
            cld step = ratio / (1.0L - ratio * sum);
            if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) {
                return false;
            }
            z[k] -= step;
            worst = std::max(worst, std::abs(step) / (1 + std::abs(z[k])));
        }
        if (worst < 1e-17L) {
            return true;
        }
    }
    return false;
}

// Roots of a polynomial assumed square-free (simple roots), by simultaneous iteration.
std::vector<cd> simple_roots(const std::vector<cld> &poly) {
    std::vector<cld> p = poly;
    int d = static_cast<int>(p.size()) - 1;
    cld lead = p.back();
    for (auto &c : p) {
        c /= lead;
    }
    if (d == 1) {
        return {cd(static_cast<double>((-p[0]).real()), static_cast<double>((-p[0]).imag()))};
    }
    long double bound = 0;
    for (int k = 1; k <= d; k++) {
        bound = std::max(bound, std::pow(std::abs(p[d - k]), 1.0L / k));
    }
    bound = std::max(bound * 2, 1e-3L);
    std::mt19937 rng(20260611);
    std::uniform_real_distribution<double> jitter(0, 2 * std::numbers::pi);
    std::vector<cld> z(d);
    bool ok = false;
    for (int attempt = 0; attempt < 10 && !ok; attempt++) {
        double offset = attempt == 0 ? 0.4 : jitter(rng);
        long double radius = bound * (attempt == 0 ? 0.5L : 0.25L + jitter(rng) / 8);
        for (int k = 0; k < d; k++) {
            z[k] = std::polar(radius, static_cast<long double>(2 * std::numbers::pi * k / d + offset));
        }
        ok = aberth_pass(p, z);
    }
    // Newton polish.
    for (auto &root : z) {
        for (int iter = 0; iter < 3; iter++) {
            auto [value, slope] = horner_with_derivative(p, root);
            if (std::abs(slope) == 0) {
                break;
            }
            cld next = root - value / slope;
            if (std::abs(horner(p, next)) <= std::abs(value)) {
                root = next;
            } else {
                break;
            }
        }
    }
    std::vector<cd> out;
    for (const auto &root : z) {
        out.emplace_back(static_cast<double>(root.real()), static_cast<double>(root.imag()));
    }
    return out;
}

void snap_and_sort(std::vector<PolyRoot> &roots, bool real_coefficients) {
    for (auto &r : roots) {
        if (real_coefficients && std::abs(r.value.imag()) <= 1e-14 * (1 + std::abs(r.value))) {
            r.value = r.value.real();
        }
    }
    std::sort(roots.begin(), roots.end(), [](const PolyRoot &a, const PolyRoot &b) {
        if (a.value.real() != b.value.real()) {
            return a.value.real() < b.value.real();
        }
        return a.value.imag() < b.value.imag();
    });
}

double dot(const Vec3 &a, const Vec3 &b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

Vec3 cross(const Vec3 &a, const Vec3 &b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double norm(const Vec3 &a) {
    return std::sqrt(dot(a, a));
}

Vec3 scaled(const Vec3 &a, double s) {
    return {a[0] * s, a[1] * s, a[2] * s};
}

Vec3 minus(const Vec3 &a, const Vec3 &b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

std::array<Vec3, 3> frame(const Vec3 &a, const Vec3 &b) {
    Vec3 u = scaled(a, 1 / norm(a));
    Vec3 v = minus(b, scaled(u, dot(u, b)));
    v = scaled(v, 1 / norm(v));
    return {u, v, cross(u, v)};
}

bool maps_onto(const std::vector<Vec3> &points, const Rotation &rotation, double tol) {
    std::vector<bool> used(points.size(), false);
    for (const auto &p : points) {
        Vec3 image = rotation.apply(p);
        bool found = false;
        for (size_t j = 0; j < points.size(); j++) {
            if (!used[j] && norm(minus(image, points[j])) <= tol) {
                used[j] = true;
                found = true;
                break;
            }
        }
        if (!found) {
            return false;
        }
    }
    return true;
}

constexpr double kSameRotation = 1e-6;

void add_unique(std::vector<Rotation> &set, const Rotation &r) {
    for (const auto &existing : set) {
        if (existing.same_as(r, kSameRotation)) {
            return;
        }
    }
    set.push_back(r);
}

bool closed(const std::vector<Rotation> &set) {
    for (const auto &a : set) {
        for (const auto &b : set) {
            Rotation ab = a.compose(b);
            bool found = std::any_of(set.begin(), set.end(), [&](const Rotation &c) { return c.same_as(ab, kSameRotation); });
            if (!found) {
                return false;
            }
        }
    }
    return true;
}

SymmetrySearch search(const std::vector<Vec3> &points, double tol) {
    SymmetrySearch out;
    out.tolerance = tol;
    out.rotations.push_back(Rotation::identity());
    const Vec3 &p0 = points[0];
    size_t best = 0;
    double best_cross = 0;
    for (size_t i = 1; i < points.size(); i++) {
        double c = norm(cross(p0, points[i]));
        if (c > best_cross) {
            best_cross = c;
            best = i;
        }
    }
    if (best_cross <= 1e-6) {
        out.continuous_axis = true;
        return out;
    }
    const Vec3 &p1 = points[best];
    auto from = frame(p0, p1);
    double target = dot(p0, p1);
    for (size_t i = 0; i < points.size(); i++) {
        for (size_t j = 0; j < points.size(); j++) {
            if (i == j || std::abs(dot(points[i], points[j]) - target) > 1e-6) {
                continue;
            }
            if (norm(cross(points[i], points[j])) <= 1e-6) {
                continue;
            }
            auto to = frame(points[i], points[j]);
            std::array<Vec3, 3> m{};
            for (int r = 0; r < 3; r++) {
                for (int c = 0; c < 3; c++) {
                    double acc = 0;
                    for (int k = 0; k < 3; k++) {
                        acc += to[k][r] * from[k][c];
                    }
                    m[r][c] = acc;
                }
            }
            Rotation candidate = Rotation::from_matrix(m);
            if (maps_onto(points, candidate, tol)) {
                add_unique(out.rotations, candidate);
            }
        }
    }
    return out;
}

}  // namespace

DickeCoeffs DickeCoeffs::from_values(std::vector<double> d) {
    if (d.empty()) {
        throw Error(ErrorCode::LengthMismatch, "Dicke coefficients need at least one entry");
    }
    DickeCoeffs out;
    out.n = static_cast<int>(d.size()) - 1;
    out.d = std::move(d);
    return out;
}

DickeCoeffs dicke_coeffs(const SignState &state) {
    int n = state.num_qubits();
    std::vector<int> signs(n + 1, 0);
    for (uint64_t index = 0; index < state.size(); index++) {
        int w = std::popcount(index);
        int s = state.sign(index);
        if (signs[w] == 0) {
            signs[w] = s;
        } else if (signs[w] != s) {
            throw Error(ErrorCode::NotSymmetric, "signs differ within Hamming weight " + std::to_string(w));
        }
    }
    DickeCoeffs out;
    out.n = n;
    for (int k = 0; k <= n; k++) {
        out.d.push_back(signs[k] * std::sqrt(binomial(n, k) / std::ldexp(1.0, n)));
    }
    out.signs = signs;
    return out;
}

std::optional<std::vector<int>> is_hypergraph_dicke(const DickeCoeffs &coeffs) {
    if (coeffs.signs) {
        return coeffs.signs;
    }
    int n = coeffs.n;
    std::vector<int> pattern;
    for (int k = 0; k <= n; k++) {
        double scaled_value = std::sqrt(std::ldexp(1.0, n)) * coeffs.d[k];
        double expected = std::sqrt(binomial(n, k));
        if (std::abs(std::abs(scaled_value) - expected) > 1e-9) {
            return std::nullopt;
        }
        pattern.push_back(scaled_value < 0 ? -1 : 1);
    }
    return pattern;
}

std::vector<int> complete_sizes_from_pattern(const std::vector<int> &pattern) {
    if (pattern.empty() || pattern[0] < 0) {
        throw Error(ErrorCode::NotAHypergraphState, "weight-0 sign must be +1");
    }
    std::vector<int> sizes;
    for (int k = 1; k < static_cast<int>(pattern.size()); k++) {
        int parity = 0;
        for (int j = 0; j <= k; j++) {
            if (pattern[j] < 0) {
                parity ^= binom_parity(k, j);
            }
        }
        if (parity) {
            sizes.push_back(k);
        }
    }
    return sizes;
}

MajoranaPolynomial majorana_polynomial(const DickeCoeffs &coeffs) {
    int n = coeffs.n;
    MajoranaPolynomial out;
    out.n = n;
    for (int k = 0; k <= n; k++) {
        double alt = k % 2 ? -1.0 : 1.0;
        out.coeffs.push_back(alt * std::sqrt(binomial(n, k)) * coeffs.d[k]);
    }
    if (coeffs.signs) {
        std::vector<BigInt> ints;
        for (int k = 0; k <= n; k++) {
            int alt = k % 2 ? -1 : 1;
            ints.push_back(binomial_exact(n, k) * (alt * (*coeffs.signs)[k]));
        }
        // Recompute floats from the exact values to avoid sqrt round trips.
        double scale = std::pow(2.0, -0.5 * n);
        for (int k = 0; k <= n; k++) {
            out.coeffs[k] = ints[k].get_d() * scale;
        }
        out.integer_coeffs = std::move(ints);
    }
    return out;
}

std::vector<PolyRoot> polynomial_roots(const std::vector<double> &coeffs) {
    std::vector<cld> p(coeffs.begin(), coeffs.end());
    while (!p.empty() && p.back() == cld(0)) {
        p.pop_back();
    }
    if (p.size() < 2) {
        throw Error(ErrorCode::DegreeZero, "polynomial has degree 0");
    }
    std::vector<cd> raw = simple_roots(p);
    // Multiple roots converge to nearby clusters.
    std::vector<PolyRoot> roots;
    std::vector<bool> taken(raw.size(), false);
    for (size_t i = 0; i < raw.size(); i++) {
        if (taken[i]) {
            continue;
        }
        cd sum = raw[i];
        int count = 1;
        taken[i] = true;
        for (size_t j = i + 1; j < raw.size(); j++) {
            if (!taken[j] && std::abs(raw[j] - raw[i]) <= 1e-6 * (1 + std::abs(raw[i]))) {
                taken[j] = true;
                sum += raw[j];
                count++;
            }
        }
        roots.push_back({sum / static_cast<double>(count), count});
    }
    snap_and_sort(roots, true);
    return roots;
}

std::vector<PolyRoot> polynomial_roots(const std::vector<BigInt> &coeffs) {
    QPoly f(coeffs.begin(), coeffs.end());
    trim(f);
    if (degree(f) < 1) {
        throw Error(ErrorCode::DegreeZero, "polynomial has degree 0");
    }
    std::vector<PolyRoot> roots;
    for (const auto &[factor, multiplicity] : square_free_factors(f)) {
        std::vector<cld> p;
        for (const auto &c : factor) {
            p.emplace_back(static_cast<long double>(c.get_d()));
        }
        for (cd r : simple_roots(p)) {
            roots.push_back({r, multiplicity});
        }
    }
    snap_and_sort(roots, true);
    return roots;
}

std::vector<std::complex<double>> expand_roots(const std::vector<PolyRoot> &roots) {
    std::vector<std::complex<double>> out;
    for (const auto &r : roots) {
        for (int k = 0; k < r.multiplicity; k++) {
            out.push_back(r.value);
        }
    }
    return out;
}

Vec3 root_to_bloch(std::complex<double> root) {
    if (!std::isfinite(root.real()) || !std::isfinite(root.imag())) {
        return {0, 0, 1};
    }
    std::complex<double> zeta = std::conj(root);
    double s = std::norm(zeta);
    return {2 * zeta.real() / (s + 1), 2 * zeta.imag() / (s + 1), (s - 1) / (s + 1)};
}

std::vector<Vec3> roots_to_bloch(const std::vector<std::complex<double>> &roots) {
    std::vector<Vec3> out;
    for (const auto &r : roots) {
        out.push_back(root_to_bloch(r));
    }
    return out;
}

MajoranaConfig majorana_config(const DickeCoeffs &coeffs) {
    MajoranaConfig out;
    out.poly = majorana_polynomial(coeffs);
    int deg = -1;
    for (int k = 0; k <= out.poly.n; k++) {
        bool nonzero = out.poly.integer_coeffs ? sgn((*out.poly.integer_coeffs)[k]) != 0 : out.poly.coeffs[k] != 0;
        if (nonzero) {
            deg = k;
        }
    }
    if (deg < 0) {
        throw Error(ErrorCode::DegreeZero, "zero state has no Majorana polynomial");
    }
    out.roots_at_infinity = out.poly.n - deg;
    if (deg >= 1) {
        if (out.poly.integer_coeffs) {
            out.roots = polynomial_roots(*out.poly.integer_coeffs);
        } else {
            out.roots = polynomial_roots(out.poly.coeffs);
        }
    }
    out.points = roots_to_bloch(expand_roots(out.roots));
    for (int k = 0; k < out.roots_at_infinity; k++) {
        out.points.push_back({0, 0, 1});
    }
    return out;
}

Rotation Rotation::identity() {
    return {};
}

Rotation Rotation::about_axis(const Vec3 &axis, double angle) {
    double len = norm(axis);
    if (len == 0) {
        throw Error(ErrorCode::ArgOutOfRange, "rotation axis must be nonzero");
    }
    double s = std::sin(angle / 2) / len;
    return {std::cos(angle / 2), axis[0] * s, axis[1] * s, axis[2] * s};
}

Rotation Rotation::half_turn(const Vec3 &axis) {
    return about_axis(axis, std::numbers::pi);
}

Rotation Rotation::from_matrix(const std::array<Vec3, 3> &m) {
    Rotation q;
    double trace = m[0][0] + m[1][1] + m[2][2];
    if (trace > 0) {
        double s = std::sqrt(trace + 1) * 2;
        q = {s / 4, (m[2][1] - m[1][2]) / s, (m[0][2] - m[2][0]) / s, (m[1][0] - m[0][1]) / s};
    } else if (m[0][0] > m[1][1] && m[0][0] > m[2][2]) {
        double s = std::sqrt(1 + m[0][0] - m[1][1] - m[2][2]) * 2;
        q = {(m[2][1] - m[1][2]) / s, s / 4, (m[0][1] + m[1][0]) / s, (m[0][2] + m[2][0]) / s};
    } else if (m[1][1] > m[2][2]) {
        double s = std::sqrt(1 + m[1][1] - m[0][0] - m[2][2]) * 2;
        q = {(m[0][2] - m[2][0]) / s, (m[0][1] + m[1][0]) / s, s / 4, (m[1][2] + m[2][1]) / s};
    } else {
        double s = std::sqrt(1 + m[2][2] - m[0][0] - m[1][1]) * 2;
        q = {(m[1][0] - m[0][1]) / s, (m[0][2] + m[2][0]) / s, (m[1][2] + m[2][1]) / s, s / 4};
    }
    double len = std::sqrt(q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z);
    q = {q.w / len, q.x / len, q.y / len, q.z / len};
    if (q.w < 0) {
        q = {-q.w, -q.x, -q.y, -q.z};
    }
    return q;
}

std::array<Vec3, 3> Rotation::matrix() const {
    return {{
        {1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)},
        {2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)},
        {2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)},
    }};
}

Vec3 Rotation::apply(const Vec3 &v) const {
    auto m = matrix();
    return {dot(m[0], v), dot(m[1], v), dot(m[2], v)};
}

Rotation Rotation::compose(const Rotation &o) const {
    return {
        w * o.w - x * o.x - y * o.y - z * o.z,
        w * o.x + x * o.w + y * o.z - z * o.y,
        w * o.y - x * o.z + y * o.w + z * o.x,
        w * o.z + x * o.y - y * o.x + z * o.w,
    };
}

double Rotation::angle() const {
    return 2 * std::acos(std::min(1.0, std::abs(w)));
}

Vec3 Rotation::axis() const {
    double len = std::sqrt(x * x + y * y + z * z);
    if (len < 1e-12) {
        return {0, 0, 1};
    }
    double s = (w < 0 ? -1 : 1) / len;
    return {x * s, y * s, z * s};
}

int Rotation::order(double tol) const {
    double a = angle();
    if (a <= tol) {
        return 1;
    }
    for (int k = 2; k <= 24; k++) {
        // Angle 2 pi j / k with gcd(j, k) = 1 also has order k; angle() lies in [0, pi].
        for (int j = 1; 2 * j <= k; j++) {
            if (std::gcd(j, k) == 1 && std::abs(a - 2 * std::numbers::pi * j / k) <= tol) {
                return k;
            }
        }
    }
    return 0;
}

Gate1q Rotation::lift(int sign) const {
    using C = std::complex<double>;
    double s = sign < 0 ? -1 : 1;
    return Gate1q::numeric({
        s * C(w, -z),
        s * C(-y, -x),
        s * C(y, -x),
        s * C(w, z),
    });
}

bool Rotation::same_as(const Rotation &o, double tol) const {
    double plus = std::max({std::abs(w - o.w), std::abs(x - o.x), std::abs(y - o.y), std::abs(z - o.z)});
    double neg = std::max({std::abs(w + o.w), std::abs(x + o.x), std::abs(y + o.y), std::abs(z + o.z)});
    return std::min(plus, neg) <= tol;
}

SymmetrySearch find_point_symmetries(const std::vector<Vec3> &points, double tol) {
    if (!(tol >= 1e-12 && tol <= 1e-6)) {
        throw Error(ErrorCode::ArgOutOfRange, "tolerance must lie in [1e-12, 1e-6]");
    }
    if (points.empty()) {
        throw Error(ErrorCode::ArgOutOfRange, "need at least one point");
    }
    SymmetrySearch out = search(points, tol);
    if (!closed(out.rotations) && tol < 1e-7) {
        out = search(points, 1e-7);
        out.warnings.push_back("rotation set not closed at the requested tolerance; searched again at 1e-7");
    }
    if (!closed(out.rotations)) {
        out.warnings.push_back("rotation set is not closed under composition");
    }
    return out;
}

std::optional<std::complex<double>> tensor_symmetry_phase(const SignState &state, const Rotation &rotation, double tol) {
    dicke_coeffs(state);
    int n = state.num_qubits();
    if (n > kMaxTensorQubits) {
        throw Error(ErrorCode::TooLarge, "tensor symmetry check supports at most " + std::to_string(kMaxTensorQubits) + " qubits");
    }
    DenseState psi = DenseState::from_signs(state);
    Gate1q u = rotation.lift(1);
    DenseState phi = psi;
    for (int a = 1; a <= n; a++) {
        phi = dense_apply_1q(phi, a, u);
    }
    // With a free global phase the two lifts (differing by (-1)^n) agree.
    auto x = psi.amplitudes();
    auto y = phi.amplitudes();
    std::complex<double> overlap = 0;
    for (size_t k = 0; k < x.size(); k++) {
        overlap += std::conj(x[k]) * y[k];
    }
    for (size_t k = 0; k < x.size(); k++) {
        if (std::abs(y[k] - overlap * x[k]) > tol) {
            return std::nullopt;
        }
    }
    if (std::abs(std::abs(overlap) - 1) > tol) {
        return std::nullopt;
    }
    return overlap;
}

bool verify_tensor_symmetry(const SignState &state, const Rotation &rotation, double tol) {
    return tensor_symmetry_phase(state, rotation, tol).has_value();
}

int binom_parity(int64_t w, int64_t m) {
    if (w < 0 || m < 0) {
        throw Error(ErrorCode::ArgOutOfRange, "binomial arguments must be nonnegative");
    }
    if (w < m) {
        return 0;
    }
    return ((w - m) & m) == 0 ? 1 : 0;
}

const char *x_symmetry_name(XSymmetry s) {
    switch (s) {
        case XSymmetry::Plus:
            return "+X";
        case XSymmetry::Minus:
            return "-X";
        default:
            return "none";
    }
}

namespace {

void check_nm(int n, int m) {
    if (m < 1 || m > n) {
        throw Error(ErrorCode::ArgOutOfRange, "need 1 <= m <= n");
    }
}

}  // namespace

XSymmetry x_symmetry_class(int n, int m) {
    check_nm(n, m);
    bool plus = true;
    bool minus = true;
    for (int w = 0; w <= n; w++) {
        int a = binom_parity(w, m);
        int b = binom_parity(n - w, m);
        plus = plus && a == b;
        minus = minus && a != b;
    }
    return plus ? XSymmetry::Plus : minus ? XSymmetry::Minus : XSymmetry::Neither;
}

bool y_symmetric(int n, int m) {
    check_nm(n, m);
    if (n % 4 != 0) {
        return false;
    }
    for (int w = 0; w <= n; w++) {
        if ((binom_parity(w, m) + w) % 2 != binom_parity(n - w, m)) {
            return false;
        }
    }
    return true;
}

std::optional<int> dense_pauli_power_eigenvalue(const SignState &state, char pauli) {
    int n = state.num_qubits();
    if (n > kMaxTensorQubits) {
        throw Error(ErrorCode::TooLarge, "dense Pauli check supports at most " + std::to_string(kMaxTensorQubits) + " qubits");
    }
    Gate1q gate = pauli == 'X' ? Gate1q::pauli_x() : pauli == 'Y' ? Gate1q::pauli_y() : pauli == 'Z' ? Gate1q::pauli_z() : Gate1q{};
    if (pauli != 'X' && pauli != 'Y' && pauli != 'Z') {
        throw Error(ErrorCode::ArgOutOfRange, std::string("unknown Pauli ") + pauli);
    }
    DenseState psi = DenseState::from_signs(state);
    DenseState phi = psi;
    for (int a = 1; a <= n; a++) {
        phi = dense_apply_1q(phi, a, gate);
    }
    if (phi.equals(psi)) {
        return 1;
    }
    if (phi.equals(psi.times(GaussInt{-1, 0}))) {
        return -1;
    }
    return std::nullopt;
}

const char *expected_symmetry_name(ExpectedSymmetry s) {
    switch (s) {
        case ExpectedSymmetry::PlusX:
            return "+X";
        case ExpectedSymmetry::MinusX:
            return "-X";
        default:
            return "+Y";
    }
}

Family615 family_615(Family615Kind kind, int j, int l, int m) {
    if (j < 1 || j > 20 || l < 0 || l > (1 << 20)) {
        throw Error(ErrorCode::BadParams, "need 1 <= j <= 20 and 0 <= l");
    }
    int64_t p = int64_t{1} << j;
    int64_t n = 0;
    Family615 out;
    switch (kind) {
        case Family615Kind::A:
            if (m < 1 || m > p - 1) {
                throw Error(ErrorCode::BadParams, "part (a) needs 1 <= m <= 2^j - 1");
            }
            n = (l + 1) * p + m - 1;
            out.expected = ExpectedSymmetry::PlusX;
            break;
        case Family615Kind::B:
            if (l % 2 == 0) {
                throw Error(ErrorCode::BadParams, "part (b) needs odd l");
            }
            m = static_cast<int>(p);
            n = (l + 1) * p + m - 1;
            out.expected = ExpectedSymmetry::PlusX;
            break;
        case Family615Kind::C:
            if (l % 2 != 0) {
                throw Error(ErrorCode::BadParams, "part (c) needs even l");
            }
            m = static_cast<int>(p);
            n = (l + 1) * p + m - 1;
            out.expected = ExpectedSymmetry::MinusX;
            break;
        case Family615Kind::D:
            if (l < 1) {
                throw Error(ErrorCode::BadParams, "part (d) needs l >= 1");
            }
            m = static_cast<int>(p) + 1;
            n = 2 * p * l;
            out.expected = ExpectedSymmetry::PlusY;
            break;
    }
    if (n > (int64_t{1} << 30)) {
        throw Error(ErrorCode::BadParams, "instance too large");
    }
    out.n = static_cast<int>(n);
    out.m = m;
    return out;
}

}  // namespace hyperlu
