#pragma once

#include <cmath>
#include <vector>

#include "liesym/algebra.hpp"
#include "liesym/linalg.hpp"

// Geodesics on the universal cover of E_0(2), carrying the left-invariant
// metric diag(1,1,nu) in the canonical coordinates: the Euler-Arnold
// equation on the Lie algebra, reconstruction of the group curve, closed
// forms, the exponential chart at the identity, geodesic symmetries, and the
// descent of the symmetry to the quotient group E_0(2).
//
// Points of the cover are ([x;y], s) with unbounded angle s; the group law is
//   ([x;y],s) . ([x';y'],s') = ([x;y] + R(s)[x';y'], s+s'),
//   R(s) = [[cos s, sin s], [-sin s, cos s]].
// Tangent vectors are written in the orthonormal frame (e1,e2,e3) with
// e3 = X3/sqrt(nu), in which the brackets are
//   [e1,e2] = 0, [e2,e3] = -e1/sqrt(nu), [e3,e1] = -e2/sqrt(nu).

namespace liesym {

struct AlgebraVector {
    double v1 = 0.0, v2 = 0.0, v3 = 0.0;

    double norm2() const { return v1 * v1 + v2 * v2 + v3 * v3; }
};

// Point of the universal cover: unbounded angle.
struct CoverPoint {
    double x = 0.0, y = 0.0, s = 0.0;
};

// Point of E_0(2): angle normalized to (-pi, pi].
struct GroupPoint {
    double x = 0.0, y = 0.0, s = 0.0;
};

inline constexpr double kPi = 3.14159265358979323846;

// Twist rate of all the closed-form maps below.
inline double twist_rate(double nu) { return 1.0 - 1.0 / std::sqrt(nu); }

// ---------------------------------------------------------------------------
// Euler-Arnold equation.

// Generic form in an orthonormal frame: alpha_k' = <alpha, [alpha, e_k]>.
inline AlgebraVector euler_arnold_rhs_generic(const StructureTensor& st, const AlgebraVector& alpha) {
    const Vec3 av = {alpha.v1, alpha.v2, alpha.v3};
    AlgebraVector out;
    Vec3 e{};
    for (int k = 0; k < 3; ++k) {
        e = Vec3{};
        e[k] = 1.0;
        const double d = dot(av, bracket(st, av, e));
        if (k == 0) out.v1 = d;
        if (k == 1) out.v2 = d;
        if (k == 2) out.v3 = d;
    }
    return out;
}

// Specialization to the frame above: alpha' = (-a2 a3, a1 a3, 0)/sqrt(nu).
inline AlgebraVector euler_arnold_rhs(double nu, const AlgebraVector& alpha) {
    const double r = 1.0 / std::sqrt(nu);
    return {-r * alpha.v2 * alpha.v3, r * alpha.v1 * alpha.v3, 0.0};
}

// ---------------------------------------------------------------------------
// Closed-form geodesic through the identity.

namespace detail {

// E(z) = (sin z + i (cos z - 1)) / z, the profile of the geodesic spiral;
// E(0) = 1. The series branch keeps the removable singularity smooth.
struct Profile {
    double re, im;
};

inline Profile geodesic_profile(double z) {
    if (std::abs(z) <= 1e-4) {
        const double z2 = z * z;
        return {1.0 - z2 / 6.0 + z2 * z2 / 120.0, z * (-0.5 + z2 / 24.0 - z2 * z2 / 720.0)};
    }
    return {std::sin(z) / z, (std::cos(z) - 1.0) / z};
}

// 1/E(w) = (w/2) cot(w/2) + i w/2, used by the logarithm.
inline Profile inverse_profile(double w) {
    if (std::abs(w) <= 1e-4) {
        const double w2 = w * w;
        return {1.0 - w2 / 12.0 - w2 * w2 / 720.0, 0.5 * w};
    }
    return {0.5 * w * std::sin(w) / (1.0 - std::cos(w)), 0.5 * w};
}

} // namespace detail

// Geodesic through the identity with initial velocity v, evaluated at time t:
//   gamma_12(t) = (v1 + i v2) t E((1 - 1/sqrt(nu)) v3 t),  gamma_3(t) = v3 t.
// Reduces to the straight line (v1 t, v2 t, v3 t) when v3 = 0 or nu = 1 and
// is continuous in v3 across the branch.
inline CoverPoint closed_geodesic(double nu, const AlgebraVector& v, double t) {
    const double z = twist_rate(nu) * v.v3 * t;
    const auto e = detail::geodesic_profile(z);
    CoverPoint p;
    p.x = t * (v.v1 * e.re - v.v2 * e.im);
    p.y = t * (v.v2 * e.re + v.v1 * e.im);
    p.s = v.v3 * t;
    return p;
}

// ---------------------------------------------------------------------------
// Numerical integration of the joint system (alpha, gamma).

struct GeodesicSample {
    double t;
    CoverPoint point;
    AlgebraVector alpha;
};

struct GeodesicPath {
    std::vector<GeodesicSample> samples;

    // max |alpha(t)|^2 deviation from its initial value
    double energy_drift() const {
        if (samples.empty()) return 0.0;
        const double e0 = samples.front().alpha.norm2();
        double worst = 0.0;
        for (const auto& s : samples) worst = std::max(worst, std::abs(s.alpha.norm2() - e0));
        return worst;
    }
};

// Classical fixed-step RK4 for the joint system
//   alpha' = euler_arnold_rhs(nu, alpha),
//   gamma_12' = R(gamma_3) [alpha_1; alpha_2],  gamma_3' = alpha_3.
// A final partial step lands exactly on t_end.
inline GeodesicPath integrate_geodesic(double nu, const AlgebraVector& v, double t_end,
                                       double step) {
    if (!(step > 0.0) || !std::isfinite(step)) throw InvalidStep("step must be positive and finite");
    if (!(t_end >= 0.0) || !std::isfinite(t_end)) throw InvalidStep("t_end must be non-negative");
    if (!(nu > 0.0)) throw DomainExceeded("nu must be positive");
    if (!std::isfinite(v.v1) || !std::isfinite(v.v2) || !std::isfinite(v.v3))
        throw DomainExceeded("initial velocity must be finite");

    using State = std::array<double, 6>; // x, y, s, a1, a2, a3
    const double r = 1.0 / std::sqrt(nu);
    auto rhs = [r](const State& q) -> State {
        const double cs = std::cos(q[2]), sn = std::sin(q[2]);
        return {q[3] * cs + q[4] * sn, -q[3] * sn + q[4] * cs, q[5],
                -r * q[4] * q[5], r * q[3] * q[5], 0.0};
    };
    auto axpy = [](const State& q, double h, const State& d) -> State {
        State out;
        for (int i = 0; i < 6; ++i) out[i] = q[i] + h * d[i];
        return out;
    };

    State q = {0.0, 0.0, 0.0, v.v1, v.v2, v.v3};
    GeodesicPath path;
    double t = 0.0;
    path.samples.push_back({t, {q[0], q[1], q[2]}, {q[3], q[4], q[5]}});

    const auto n_full = static_cast<long>(std::floor(t_end / step + 1e-12));
    for (long i = 0; i <= n_full; ++i) {
        const double h = (i < n_full) ? step : t_end - static_cast<double>(n_full) * step;
        if (h <= 0.0) break;
        const State k1 = rhs(q);
        const State k2 = rhs(axpy(q, 0.5 * h, k1));
        const State k3 = rhs(axpy(q, 0.5 * h, k2));
        const State k4 = rhs(axpy(q, h, k3));
        for (int j = 0; j < 6; ++j) q[j] += (h / 6.0) * (k1[j] + 2.0 * (k2[j] + k3[j]) + k4[j]);
        t = (i < n_full) ? step * static_cast<double>(i + 1) : t_end;
        path.samples.push_back({t, {q[0], q[1], q[2]}, {q[3], q[4], q[5]}});
    }
    return path;
}

// ---------------------------------------------------------------------------
// Exponential chart at the identity.

// exp_e(v) = closed_geodesic(nu, v, 1). For nu != 1 the chart is restricted
// to |(1 - 1/sqrt(nu)) v3| < 2 pi, where it is invertible.
inline CoverPoint exp_e(double nu, const AlgebraVector& v) {
    if (!(nu > 0.0)) throw DomainExceeded("nu must be positive");
    if (!std::isfinite(v.v1) || !std::isfinite(v.v2) || !std::isfinite(v.v3))
        throw DomainExceeded("argument must be finite");
    if (std::abs(twist_rate(nu) * v.v3) >= 2.0 * kPi)
        throw DomainExceeded("v3 outside the injectivity range of exp_e");
    return closed_geodesic(nu, v, 1.0);
}

// Inverse of exp_e on its chart:
//   v3 = s,  (v1 + i v2) = (x + i y) ((w/2) cot(w/2) + i w/2),  w = (1-1/sqrt(nu)) s.
inline AlgebraVector log_e(double nu, const CoverPoint& p) {
    if (!(nu > 0.0)) throw DomainExceeded("nu must be positive");
    const double w = twist_rate(nu) * p.s;
    if (std::abs(w) >= 2.0 * kPi) throw DomainExceeded("angle outside the injectivity range of exp_e");
    const auto g = detail::inverse_profile(w);
    return {p.x * g.re - p.y * g.im, p.y * g.re + p.x * g.im, p.s};
}

// ---------------------------------------------------------------------------
// Group operations on the cover and the covering projection.

inline CoverPoint group_mul(const CoverPoint& p, const CoverPoint& q) {
    const double cs = std::cos(p.s), sn = std::sin(p.s);
    return {p.x + q.x * cs + q.y * sn, p.y - q.x * sn + q.y * cs, p.s + q.s};
}

inline CoverPoint group_inv(const CoverPoint& p) {
    const double cs = std::cos(p.s), sn = std::sin(p.s);
    // R(-s) [-x; -y]
    return {-p.x * cs + p.y * sn, -p.x * sn - p.y * cs, -p.s};
}

inline CoverPoint identity_point() { return {0.0, 0.0, 0.0}; }

// Reduce the angle into (-pi, pi], with the boundary mapped to +pi.
inline double normalize_angle(double s) {
    const double k = std::ceil((s - kPi) / (2.0 * kPi));
    double r = s - 2.0 * kPi * k;
    if (r <= -kPi) r = kPi; // guard the half-open convention against round-off
    return r;
}

inline GroupPoint project(const CoverPoint& p) { return {p.x, p.y, normalize_angle(p.s)}; }

inline CoverPoint lift(const GroupPoint& q, int k) {
    return {q.x, q.y, q.s + 2.0 * kPi * static_cast<double>(k)};
}

inline std::vector<CoverPoint> lifts(const GroupPoint& q, int k_min, int k_max) {
    std::vector<CoverPoint> out;
    for (int k = k_min; k <= k_max; ++k) out.push_back(lift(q, k));
    return out;
}

// ---------------------------------------------------------------------------
// Geodesic symmetries.

// Geodesic symmetry at the identity of the cover:
//   S_e([x;y], s) = (-R((1-1/sqrt(nu)) s) [x;y], -s).
// Fixes the identity, is an involution, and has differential -I at e.
inline CoverPoint symmetry_cover(double nu, const CoverPoint& p) {
    const double w = twist_rate(nu) * p.s;
    const double cs = std::cos(w), sn = std::sin(w);
    return {-p.x * cs - p.y * sn, p.x * sn - p.y * cs, -p.s};
}

// Symmetry based at an arbitrary point ([a;b], c):
//   S(([x;y], s)) = ([a;b] + R((1-1/sqrt(nu)) (s-c)) [a-x; b-y], 2c - s).
// Reduces to symmetry_cover when the base is the identity.
inline CoverPoint symmetry_based(double nu, const CoverPoint& base, const CoverPoint& p) {
    const double w = twist_rate(nu) * (p.s - base.s);
    const double cs = std::cos(w), sn = std::sin(w);
    const double dx = base.x - p.x, dy = base.y - p.y;
    return {base.x + dx * cs + dy * sn, base.y - dx * sn + dy * cs, 2.0 * base.s - p.s};
}

// ---------------------------------------------------------------------------
// Descent of the symmetry to E_0(2).

struct WellDefinedReport {
    bool consistent = true;
    std::vector<GroupPoint> images; // one per lift, in k order
};

inline double angle_distance(double s1, double s2) {
    double d = std::abs(normalize_angle(s1 - s2));
    return std::min(d, 2.0 * kPi - d);
}

// Evaluate the symmetry through every lift of q and project back; the images
// agree for every point exactly when 1/sqrt(nu) is a positive integer.
inline WellDefinedReport symmetry_welldefined(double nu, const GroupPoint& q, int k_min, int k_max,
                                              double tol = 1e-9) {
    WellDefinedReport rep;
    for (int k = k_min; k <= k_max; ++k)
        rep.images.push_back(project(symmetry_cover(nu, lift(q, k))));
    for (std::size_t i = 1; i < rep.images.size(); ++i) {
        const auto& a = rep.images.front();
        const auto& b = rep.images[i];
        if (std::abs(a.x - b.x) > tol || std::abs(a.y - b.y) > tol ||
            angle_distance(a.s, b.s) > tol)
            rep.consistent = false;
    }
    return rep;
}

// Symmetric-space criterion for (E_0(2), diag(1,1,nu)).
inline bool is_symmetric_space_E02(double nu, double tol = 1e-9) {
    if (!(nu > 0.0)) throw DomainExceeded("nu must be positive");
    const double r = 1.0 / std::sqrt(nu);
    const double n = std::round(r);
    return n >= 1.0 && std::abs(r - n) <= tol;
}

} // namespace liesym
