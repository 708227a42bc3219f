#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <string>

#include "liesym/algebra.hpp"
#include "liesym/linalg.hpp"

// Milnor frames: orthonormal bases that put a 3-dimensional metric Lie
// algebra into canonical bracket form.
//
// Unimodular canonical form:      [e1,e2] = a e3, [e2,e3] = c e1, [e3,e1] = b e2,
//                                 with at most one of (a,b,c) negative.
// Non-unimodular canonical form:  [e1,e2] = a e2 + b e3, [e1,e3] = c e2 + d e3,
//                                 [e2,e3] = 0, with a+d > 0, ac+bd = 0,
//                                 normalized so that a >= d and b >= c.

namespace liesym {

enum class FrameKind { Unimodular, NonUnimodular };

struct MilnorFrame {
    BasisChange p; // columns: the Milnor basis in input coordinates
    FrameKind kind = FrameKind::Unimodular;
    std::array<double, 4> constants{}; // (a,b,c,0) or (a,b,c,d)
    double canonical_residual = 0.0;   // max bracket deviation from the canonical pattern
    double orthonormal_residual = 0.0; // max |P^T g P - I| entry

    double a() const { return constants[0]; }
    double b() const { return constants[1]; }
    double c() const { return constants[2]; }
    double d() const { return constants[3]; }
};

namespace detail {

// Constants and pattern deviation of a unimodular candidate frame, all in
// coordinates where the metric is Euclidean. Columns of f are the candidate
// basis vectors.
struct UnimodularReadout {
    double a, b, c;
    double residual;
};

inline UnimodularReadout read_unimodular(const StructureTensor& st, const Mat3& f) {
    const Vec3 e1 = f.col(0), e2 = f.col(1), e3 = f.col(2);
    const Vec3 b12 = bracket(st, e1, e2);
    const Vec3 b23 = bracket(st, e2, e3);
    const Vec3 b31 = bracket(st, e3, e1);
    UnimodularReadout r{};
    r.a = dot(b12, e3);
    r.c = dot(b23, e1);
    r.b = dot(b31, e2);
    double res = 0.0;
    res = std::max(res, std::abs(dot(b12, e1)));
    res = std::max(res, std::abs(dot(b12, e2)));
    res = std::max(res, std::abs(dot(b23, e2)));
    res = std::max(res, std::abs(dot(b23, e3)));
    res = std::max(res, std::abs(dot(b31, e1)));
    res = std::max(res, std::abs(dot(b31, e3)));
    r.residual = res;
    return r;
}

struct NonUnimodularReadout {
    double a, b, c, d;
    double residual;
};

inline NonUnimodularReadout read_nonunimodular(const StructureTensor& st, const Mat3& f) {
    const Vec3 e1 = f.col(0), e2 = f.col(1), e3 = f.col(2);
    const Vec3 b12 = bracket(st, e1, e2);
    const Vec3 b13 = bracket(st, e1, e3);
    const Vec3 b23 = bracket(st, e2, e3);
    NonUnimodularReadout r{};
    r.a = dot(b12, e2);
    r.b = dot(b12, e3);
    r.c = dot(b13, e2);
    r.d = dot(b13, e3);
    double res = std::max(std::abs(dot(b12, e1)), std::abs(dot(b13, e1)));
    res = std::max(res, norm(b23));
    r.residual = res;
    return r;
}

} // namespace detail

// Construct a Milnor frame for a valid 3-dimensional metric Lie algebra.
//
// Unimodular branch: with the metric cross product in an orthonormalized
// basis, the map L with [u,v] = L(u x v) is symmetric; an orthonormal
// eigenbasis of L carries the frame and (a,b,c) are its eigenvalues. Axis
// permutations and sign flips are then chosen deterministically: the number
// of negative constants is minimized (at most one remains) and the tuple is
// ordered a >= b >= c, so the negative constant, if any, sits last.
//
// Non-unimodular branch: e1 is the unit vector orthogonal to the unimodular
// kernel u = {x : tr ad_x = 0}, signed so that tr ad_{e1} > 0; (e2,e3) is an
// orthonormal basis of u in which the columns of ad_{e1}|_u are orthogonal
// (an eigenbasis of (ad_{e1})^T ad_{e1}), which is what makes ac+bd vanish.
inline MilnorFrame milnor_frame(const MetricLieAlgebra& mla, double tol_alg = kTolAlg,
                                double tol_frame = kTolFrame) {
    // Scale-aware gates: inputs that went through ill-conditioned basis
    // changes carry round-off proportional to the squared constant scale.
    double scale = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) scale = std::max(scale, max_abs(mla.st.pair_bracket(i, j)));
    const double jacobi_gate = std::max(tol_alg, 1e-9 * (1.0 + scale) * (1.0 + scale));
    if (jacobi_residual(mla.st) > jacobi_gate)
        throw NotALieAlgebra("structure constants violate the Jacobi identity");
    mla.g.require_positive_definite();

    // Orthonormalize: g = L L^T, columns of B = L^{-T} form an orthonormal basis.
    const Mat3 l = cholesky_lower(mla.g.mat());
    const Mat3 b_on = inverse(transpose(l));
    const MetricLieAlgebra on = change_basis(mla, BasisChange{b_on});

    double on_scale = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) on_scale = std::max(on_scale, max_abs(on.st.pair_bracket(i, j)));
    const auto uni = unimodularity(on.st, std::max(tol_alg, 1e-9 * (1.0 + on_scale)));

    Mat3 f;
    MilnorFrame out;

    if (uni.is_unimodular) {
        // L matrix: columns are [f2,f3], [f3,f1], [f1,f2] in the
        // orthonormal basis (f1 x f2 = f3 and cyclic).
        Mat3 lmat;
        for (int k = 0; k < 3; ++k) {
            lmat(k, 0) = on.st.c(1, 2, k);
            lmat(k, 1) = -on.st.c(0, 2, k);
            lmat(k, 2) = on.st.c(0, 1, k);
        }
        const EigenSym3 eig = eigen_sym3(lmat);

        // Deterministic sign/order fixing over axis permutations and a
        // global flip: fewest negatives first, then lexicographically
        // largest (a,b,c), which sorts the tuple descending.
        static constexpr int kPerms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                             {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
        bool have = false;
        std::array<double, 3> best{};
        Mat3 best_f;
        const double zero_tol = 1e-10;
        for (const auto& perm : kPerms)
            for (int flip = 0; flip < 2; ++flip) {
                Mat3 cand = Mat3::from_cols(eig.vectors.col(perm[0]), eig.vectors.col(perm[1]),
                                            flip ? -1.0 * eig.vectors.col(perm[2])
                                                 : eig.vectors.col(perm[2]));
                const auto ro = detail::read_unimodular(on.st, cand);
                const std::array<double, 3> tup = {ro.a, ro.b, ro.c};
                int neg = 0;
                for (double x : tup)
                    if (x < -zero_tol) ++neg;
                if (neg > 1) continue;
                if (!have || tup > best) { // lexicographic
                    have = true;
                    best = tup;
                    best_f = cand;
                }
            }
        f = best_f;
        const auto ro = detail::read_unimodular(on.st, f);
        out.kind = FrameKind::Unimodular;
        out.constants = {ro.a, ro.b, ro.c, 0.0};
        out.canonical_residual = ro.residual;
    } else {
        // Unit normal of the unimodular kernel, oriented so tr ad_{e1} > 0.
        Vec3 tau = uni.traces;
        const double tn = norm(tau);
        Vec3 e1 = (1.0 / tn) * tau;

        // Orthonormal basis of the kernel.
        int k_min = 0;
        for (int k = 1; k < 3; ++k)
            if (std::abs(e1[k]) < std::abs(e1[k_min])) k_min = k;
        Vec3 axis{};
        axis[k_min] = 1.0;
        Vec3 w = axis - dot(axis, e1) * e1;
        Vec3 u2 = (1.0 / norm(w)) * w;
        Vec3 u3 = cross(e1, u2);

        // ad_{e1} restricted to the kernel.
        const Vec3 m2 = bracket(on.st, e1, u2);
        const Vec3 m3 = bracket(on.st, e1, u3);
        const double p = dot(m2, u2), q = dot(m2, u3);
        const double r = dot(m3, u2), s = dot(m3, u3);

        // Eigenbasis of the Gram matrix (ad_{e1})^T (ad_{e1}).
        const EigenSym2 eig = eigen_sym2(p * p + q * q, p * r + q * s, r * r + s * s);
        Vec3 e2 = eig.c * u2 + eig.s * u3;
        Vec3 e3 = -eig.s * u2 + eig.c * u3;

        auto ro = detail::read_nonunimodular(on.st, Mat3::from_cols(e1, e2, e3));
        if (ro.a < ro.d) std::swap(e2, e3); // (a,b,c,d) -> (d,c,b,a)
        ro = detail::read_nonunimodular(on.st, Mat3::from_cols(e1, e2, e3));
        if (ro.b < ro.c) e3 = -1.0 * e3; // (a,b,c,d) -> (a,-b,-c,d)

        f = Mat3::from_cols(e1, e2, e3);
        ro = detail::read_nonunimodular(on.st, f);
        out.kind = FrameKind::NonUnimodular;
        out.constants = {ro.a, ro.b, ro.c, ro.d};
        out.canonical_residual = std::max(ro.residual, std::abs(ro.a * ro.c + ro.b * ro.d));
    }

    out.p = BasisChange{b_on * f};
    const Mat3 gram = transpose(out.p.p) * mla.g.mat() * out.p.p;
    out.orthonormal_residual = max_abs(gram - Mat3::identity());
    if (out.orthonormal_residual > tol_frame)
        throw DegenerateMetric("frame failed the orthonormality check");
    return out;
}

// Isomorphism invariant D = 4(ad - bc)/(a+d)^2 of the non-unimodular family.
inline double milnor_D(double a, double b, double c, double d, double tol = kTolAlg) {
    const double tr = a + d;
    if (std::abs(tr) <= tol) throw DivisionByZero("milnor_D requires a+d != 0");
    return 4.0 * (a * d - b * c) / (tr * tr);
}

enum class AlgebraFamily { Abelian, E0tilde2, SU2, OtherUnimodular, GI, GD, Degenerate };

inline std::string to_string(AlgebraFamily f) {
    switch (f) {
        case AlgebraFamily::Abelian: return "Abelian";
        case AlgebraFamily::E0tilde2: return "E0tilde2";
        case AlgebraFamily::SU2: return "SU2";
        case AlgebraFamily::OtherUnimodular: return "OtherUnimodular";
        case AlgebraFamily::GI: return "GI";
        case AlgebraFamily::GD: return "GD";
        case AlgebraFamily::Degenerate: return "Degenerate";
    }
    return "?";
}

struct FamilyId {
    AlgebraFamily family;
    double d = 0.0; // the invariant D, set for the GD family
};

// Identify the algebra family from Milnor-frame constants: the sign pattern
// of (a,b,c) for unimodular frames, the invariant D for non-unimodular ones.
inline FamilyId identify_family(const MilnorFrame& frame, double tol = 1e-8) {
    if (frame.kind == FrameKind::Unimodular) {
        const double a = frame.a(), b = frame.b(), c = frame.c();
        const int zeros = (std::abs(a) <= tol) + (std::abs(b) <= tol) + (std::abs(c) <= tol);
        const int pos = (a > tol) + (b > tol) + (c > tol);
        if (zeros == 3) return {AlgebraFamily::Abelian};
        if (pos == 3) return {AlgebraFamily::SU2};
        if (pos == 2 && zeros == 1) return {AlgebraFamily::E0tilde2};
        return {AlgebraFamily::OtherUnimodular};
    }
    const double a = frame.a(), b = frame.b(), c = frame.c(), d = frame.d();
    if (a + d <= tol) return {AlgebraFamily::Degenerate};
    if (std::abs(b) <= tol && std::abs(c) <= tol && std::abs(a - d) <= tol)
        return {AlgebraFamily::GI};
    return {AlgebraFamily::GD, milnor_D(a, b, c, d)};
}

} // namespace liesym
