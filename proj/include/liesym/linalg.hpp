#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <optional>

#include "liesym/errors.hpp"

// Small dense linear algebra for 3x3 (and 2x2) real matrices.
// Everything is by value, deterministic and allocation-free; eigensolvers
// use a fixed rotation order so repeated runs are bit-identical.

namespace liesym {

inline constexpr double kTolAlg = 1e-12;   // Lie-algebra axiom tolerance
inline constexpr double kTolPd = 1e-12;    // positive-definiteness / det tolerance
inline constexpr double kTolFrame = 1e-10; // orthonormal-frame tolerance
inline constexpr double kTolGeo = 1e-12;   // connection/curvature identity tolerance
inline constexpr double kTolSym = 1e-9;    // default local-symmetry decision tolerance

using Vec3 = std::array<double, 3>;

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
inline Vec3 operator*(double s, const Vec3& a) { return {s * a[0], s * a[1], s * a[2]}; }

inline double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
inline double max_abs(const Vec3& a) { return std::max({std::abs(a[0]), std::abs(a[1]), std::abs(a[2])}); }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// Row-major 3x3 matrix.
struct Mat3 {
    std::array<double, 9> a{};

    double& operator()(int i, int j) { return a[3 * i + j]; }
    double operator()(int i, int j) const { return a[3 * i + j]; }

    static Mat3 zero() { return Mat3{}; }
    static Mat3 identity() {
        Mat3 m;
        m(0, 0) = m(1, 1) = m(2, 2) = 1.0;
        return m;
    }
    static Mat3 diag(double x, double y, double z) {
        Mat3 m;
        m(0, 0) = x;
        m(1, 1) = y;
        m(2, 2) = z;
        return m;
    }
    static Mat3 from_rows(const Vec3& r0, const Vec3& r1, const Vec3& r2) {
        Mat3 m;
        for (int j = 0; j < 3; ++j) {
            m(0, j) = r0[j];
            m(1, j) = r1[j];
            m(2, j) = r2[j];
        }
        return m;
    }
    static Mat3 from_cols(const Vec3& c0, const Vec3& c1, const Vec3& c2) {
        Mat3 m;
        for (int i = 0; i < 3; ++i) {
            m(i, 0) = c0[i];
            m(i, 1) = c1[i];
            m(i, 2) = c2[i];
        }
        return m;
    }

    Vec3 col(int j) const { return {(*this)(0, j), (*this)(1, j), (*this)(2, j)}; }
    Vec3 row(int i) const { return {(*this)(i, 0), (*this)(i, 1), (*this)(i, 2)}; }
};

inline Mat3 operator+(const Mat3& x, const Mat3& y) {
    Mat3 r;
    for (int i = 0; i < 9; ++i) r.a[i] = x.a[i] + y.a[i];
    return r;
}
inline Mat3 operator-(const Mat3& x, const Mat3& y) {
    Mat3 r;
    for (int i = 0; i < 9; ++i) r.a[i] = x.a[i] - y.a[i];
    return r;
}
inline Mat3 operator*(double s, const Mat3& x) {
    Mat3 r;
    for (int i = 0; i < 9; ++i) r.a[i] = s * x.a[i];
    return r;
}
inline Mat3 operator*(const Mat3& x, const Mat3& y) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = 0;
            for (int k = 0; k < 3; ++k) s += x(i, k) * y(k, j);
            r(i, j) = s;
        }
    return r;
}
inline Vec3 operator*(const Mat3& x, const Vec3& v) {
    Vec3 r{};
    for (int i = 0; i < 3; ++i) r[i] = x(i, 0) * v[0] + x(i, 1) * v[1] + x(i, 2) * v[2];
    return r;
}

inline Mat3 transpose(const Mat3& m) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r(i, j) = m(j, i);
    return r;
}

inline double det(const Mat3& m) {
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
           m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

inline double max_abs(const Mat3& m) {
    double r = 0;
    for (double x : m.a) r = std::max(r, std::abs(x));
    return r;
}

inline Mat3 inverse(const Mat3& m) {
    const double d = det(m);
    if (std::abs(d) <= kTolPd) throw SingularBasisChange("matrix is numerically singular");
    Mat3 r;
    r(0, 0) = (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) / d;
    r(0, 1) = (m(0, 2) * m(2, 1) - m(0, 1) * m(2, 2)) / d;
    r(0, 2) = (m(0, 1) * m(1, 2) - m(0, 2) * m(1, 1)) / d;
    r(1, 0) = (m(1, 2) * m(2, 0) - m(1, 0) * m(2, 2)) / d;
    r(1, 1) = (m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0)) / d;
    r(1, 2) = (m(0, 2) * m(1, 0) - m(0, 0) * m(1, 2)) / d;
    r(2, 0) = (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0)) / d;
    r(2, 1) = (m(0, 1) * m(2, 0) - m(0, 0) * m(2, 1)) / d;
    r(2, 2) = (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)) / d;
    return r;
}

// Leading principal minors; used for the positive-definiteness check.
inline std::array<double, 3> leading_minors(const Mat3& g) {
    return {g(0, 0), g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0), det(g)};
}

inline bool is_positive_definite(const Mat3& g, double tol = kTolPd) {
    const auto m = leading_minors(g);
    return m[0] > tol && m[1] > tol && m[2] > tol;
}

// Lower-triangular Cholesky factor of an SPD matrix, g = L L^T.
inline Mat3 cholesky_lower(const Mat3& g, double tol = kTolPd) {
    if (!is_positive_definite(g, tol)) throw DegenerateMetric("metric is not positive definite");
    Mat3 l = Mat3::zero();
    l(0, 0) = std::sqrt(g(0, 0));
    l(1, 0) = g(1, 0) / l(0, 0);
    l(1, 1) = std::sqrt(g(1, 1) - l(1, 0) * l(1, 0));
    l(2, 0) = g(2, 0) / l(0, 0);
    l(2, 1) = (g(2, 1) - l(2, 0) * l(1, 0)) / l(1, 1);
    l(2, 2) = std::sqrt(g(2, 2) - l(2, 0) * l(2, 0) - l(2, 1) * l(2, 1));
    return l;
}

struct EigenSym3 {
    Vec3 values;  // ascending
    Mat3 vectors; // orthonormal columns, vectors.col(k) belongs to values[k]
};

// Cyclic Jacobi iteration for a symmetric 3x3 matrix. The rotation order is
// fixed, ties between eigenvalues are broken by comparing eigenvector
// coordinates lexicographically, and each eigenvector's sign is fixed by its
// first non-negligible coordinate, so the output is fully deterministic.
inline EigenSym3 eigen_sym3(const Mat3& s_in) {
    Mat3 s = s_in;
    // symmetrize defensively against round-off in the caller
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            const double v = 0.5 * (s(i, j) + s(j, i));
            s(i, j) = s(j, i) = v;
        }
    Mat3 v = Mat3::identity();
    const double scale = std::max(max_abs(s), 1e-300);

    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = std::sqrt(s(0, 1) * s(0, 1) + s(0, 2) * s(0, 2) + s(1, 2) * s(1, 2));
        if (off <= 1e-16 * scale) break;
        for (int p = 0; p < 2; ++p)
            for (int q = p + 1; q < 3; ++q) {
                if (std::abs(s(p, q)) <= 1e-18 * scale) continue;
                const double theta = 0.5 * std::atan2(2.0 * s(p, q), s(q, q) - s(p, p));
                const double c = std::cos(theta), sn = std::sin(theta);
                // rows/cols p,q of s
                for (int k = 0; k < 3; ++k) {
                    const double skp = s(k, p), skq = s(k, q);
                    s(k, p) = c * skp - sn * skq;
                    s(k, q) = sn * skp + c * skq;
                }
                for (int k = 0; k < 3; ++k) {
                    const double spk = s(p, k), sqk = s(q, k);
                    s(p, k) = c * spk - sn * sqk;
                    s(q, k) = sn * spk + c * sqk;
                }
                s(p, q) = s(q, p) = 0.5 * (s(p, q) + s(q, p));
                for (int k = 0; k < 3; ++k) {
                    const double vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - sn * vkq;
                    v(k, q) = sn * vkp + c * vkq;
                }
            }
    }

    std::array<int, 3> idx = {0, 1, 2};
    const Vec3 vals = {s(0, 0), s(1, 1), s(2, 2)};
    auto lex_less = [&](int i, int j) {
        for (int k = 0; k < 3; ++k) {
            if (v(k, i) < v(k, j)) return true;
            if (v(k, i) > v(k, j)) return false;
        }
        return false;
    };
    std::sort(idx.begin(), idx.end(), [&](int i, int j) {
        if (vals[i] != vals[j]) return vals[i] < vals[j];
        return lex_less(i, j);
    });

    EigenSym3 out;
    for (int k = 0; k < 3; ++k) {
        out.values[k] = vals[idx[k]];
        Vec3 col = {v(0, idx[k]), v(1, idx[k]), v(2, idx[k])};
        for (int i = 0; i < 3; ++i)
            if (std::abs(col[i]) > 1e-12) {
                if (col[i] < 0) col = -1.0 * col;
                break;
            }
        out.vectors(0, k) = col[0];
        out.vectors(1, k) = col[1];
        out.vectors(2, k) = col[2];
    }
    return out;
}

struct EigenSym2 {
    std::array<double, 2> values;
    // orthonormal eigenvectors as columns of a rotation: (c,-s; s,c) applied
    // to the input basis; values[k] belongs to column k
    double c = 1.0, s = 0.0;
};

// Closed-form eigendecomposition of a symmetric 2x2 matrix [[p,q],[q,r]].
// When q is negligible the input axes are kept (deterministic tie-break).
inline EigenSym2 eigen_sym2(double p, double q, double r) {
    EigenSym2 out;
    const double scale = std::max({std::abs(p), std::abs(q), std::abs(r), 1e-300});
    if (std::abs(q) <= 1e-15 * scale) {
        out.values = {p, r};
        return out;
    }
    const double theta = 0.5 * std::atan2(2.0 * q, p - r);
    out.c = std::cos(theta);
    out.s = std::sin(theta);
    // eigenvalue attached to (c, s) and to (-s, c)
    const double c = out.c, s = out.s;
    out.values[0] = c * (p * c + q * s) + s * (q * c + r * s);
    out.values[1] = s * (p * s - q * c) - c * (q * s - r * c);
    return out;
}

// Deterministic pseudo-random numbers (splitmix64). Used by property tests
// and the verification harness; seeded explicitly so runs are reproducible.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1)
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    int uniform_int(int lo, int hi) { // inclusive bounds
        return lo + static_cast<int>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

} // namespace liesym
