#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "liesym/curvature.hpp"
#include "liesym/milnor.hpp"

// Polynomial residual systems for local symmetry, the Ha-Lee normal-form
// metric classification, and the grid oracle tying the two decision routes
// together.

namespace liesym {

// Residuals of the local-symmetry polynomial system evaluated at a Milnor
// tuple. Local symmetry holds exactly when every value vanishes (and, in the
// non-unimodular case, the tuple is admissible: a+d != 0, ac+bd = 0).
struct SymmetryResiduals {
    std::vector<double> values;
    bool constraint_ok = true;

    double max_abs() const {
        double m = 0.0;
        for (double v : values) m = std::max(m, std::abs(v));
        return m;
    }
};

inline SymmetryResiduals unimodular_residuals(double a, double b, double c) {
    SymmetryResiduals out;
    out.values = {
        (a - b) * (a + b - c) * (a + b - c),
        (c - a) * (a - b + c) * (a - b + c),
        (c - b) * (a - b - c) * (a - b - c),
    };
    out.constraint_ok = true;
    return out;
}

inline SymmetryResiduals nonunimodular_residuals(double a, double b, double c, double d) {
    SymmetryResiduals out;
    const double q1 = a * a + b * b - a * d + b * c;
    const double q2 = c * c + d * d - a * d + c * b;
    out.values = {
        (b - c) * (a * a + b * b - c * c - d * d),
        (b + c) * q1,
        d * q1 * q1,
        a * q2,
        (b + c) * q2,
        a * c + b * d, // admissibility, zero for every Milnor tuple
    };
    out.constraint_ok = std::abs(a + d) > kTolAlg;
    return out;
}

// Remark-style normalization of a non-unimodular tuple: swap the last two
// axes when a < d, then flip the sign of the third axis when b < c. Both are
// orthonormal basis changes, so they preserve the metric geometry.
inline std::array<double, 4> normalize_nonunimodular(double a, double b, double c, double d) {
    if (a < d) {
        std::swap(a, d);
        std::swap(b, c);
    }
    if (b < c) {
        b = -b;
        c = -c;
    }
    return {a, b, c, d};
}

enum class FamilyTag { Flat, RoundSU2, GIfamily, GDfamily, G0family };

inline std::string to_string(FamilyTag t) {
    switch (t) {
        case FamilyTag::Flat: return "Flat";
        case FamilyTag::RoundSU2: return "RoundSU2";
        case FamilyTag::GIfamily: return "GIfamily";
        case FamilyTag::GDfamily: return "GDfamily";
        case FamilyTag::G0family: return "G0family";
    }
    return "?";
}

// Match a solution of the unimodular system to its family:
// (0,b,b), (a,a,0), (a,0,a) are flat, (a,a,a) is the round metric.
inline FamilyTag solution_family_unimodular(double a, double b, double c, double tol = kTolSym) {
    if (unimodular_residuals(a, b, c).max_abs() > tol)
        throw NotASolution("unimodular constants do not solve the symmetry system");
    const bool za = std::abs(a) <= tol, zb = std::abs(b) <= tol, zc = std::abs(c) <= tol;
    if (za && zb && zc) return FamilyTag::Flat;
    if (!za && !zb && !zc) return FamilyTag::RoundSU2; // forced a = b = c
    return FamilyTag::Flat; // one vanishing constant, two equal
}

// Non-unimodular solutions: (a,0,0,0) and (a,b,-b,a); the b = 0 boundary of
// the latter is the g_I family.
inline FamilyTag solution_family_nonunimodular(double a, double b, double c, double d,
                                               double tol = kTolSym) {
    const auto res = nonunimodular_residuals(a, b, c, d);
    if (!res.constraint_ok || res.max_abs() > tol)
        throw NotASolution("non-unimodular constants do not solve the symmetry system");
    if (std::abs(b) <= tol && std::abs(c) <= tol && std::abs(d) <= tol) return FamilyTag::G0family;
    if (std::abs(b) <= tol && std::abs(c) <= tol && std::abs(a - d) <= tol) return FamilyTag::GIfamily;
    return FamilyTag::GDfamily; // forced d = a, c = -b
}

// ---------------------------------------------------------------------------
// Ha-Lee normal-form metrics.

// A normal-form left-invariant metric on one of the named groups. Parameter
// conventions:
//   R3        no parameters (identity metric)
//   E0tilde2  diag(1, mu, nu),            0 < mu <= 1, nu > 0
//   SU2       diag(lambda, mu, nu),       lambda >= mu >= nu > 0
//   GI        diag(1, 1, nu),             nu > 0
//   G0        A1 = diag(1, mu, nu) when mu is given, else
//             A2 = [[1,1/2,0],[1/2,1,0],[0,0,nu]],  nu > 0
//   GD        [[1,1,0],[1,mu,0],[0,0,nu]], D > 1, 1 < mu <= D, nu > 0
struct HaLeeMetric {
    GroupName group = GroupName::R3;
    std::optional<double> mu;
    std::optional<double> nu;
    std::optional<double> lambda;
    std::optional<double> d; // the parameter D of the GD family
};

namespace detail {

inline double require_param(const std::optional<double>& v, const char* name) {
    if (!v) throw ParamOutOfRange(std::string("missing parameter ") + name);
    return *v;
}

} // namespace detail

// Build the metric Lie algebra described by a normal-form record, checking
// the printed parameter ranges.
inline MetricLieAlgebra build_halee(const HaLeeMetric& hl) {
    switch (hl.group) {
        case GroupName::R3:
            return {catalog::r3(), MetricMatrix::identity()};
        case GroupName::E0tilde2: {
            const double mu = detail::require_param(hl.mu, "mu");
            const double nu = detail::require_param(hl.nu, "nu");
            if (!(mu > 0.0 && mu <= 1.0)) throw ParamOutOfRange("E0tilde2 requires 0 < mu <= 1");
            if (!(nu > 0.0)) throw ParamOutOfRange("E0tilde2 requires nu > 0");
            return {catalog::e0tilde2(), MetricMatrix::diag(1.0, mu, nu)};
        }
        case GroupName::SU2: {
            const double lambda = detail::require_param(hl.lambda, "lambda");
            const double mu = detail::require_param(hl.mu, "mu");
            const double nu = detail::require_param(hl.nu, "nu");
            if (!(lambda >= mu && mu >= nu && nu > 0.0))
                throw ParamOutOfRange("SU2 requires lambda >= mu >= nu > 0");
            return {catalog::su2(), MetricMatrix::diag(lambda, mu, nu)};
        }
        case GroupName::GI: {
            const double nu = detail::require_param(hl.nu, "nu");
            if (!(nu > 0.0)) throw ParamOutOfRange("GI requires nu > 0");
            return {catalog::g_i(), MetricMatrix::diag(1.0, 1.0, nu)};
        }
        case GroupName::G0: {
            const double nu = detail::require_param(hl.nu, "nu");
            if (!(nu > 0.0)) throw ParamOutOfRange("G0 requires nu > 0");
            if (hl.mu) { // A1 form
                if (!(*hl.mu > 0.0)) throw ParamOutOfRange("G0 A1 form requires mu > 0");
                return {catalog::g0(), MetricMatrix::diag(1.0, *hl.mu, nu)};
            }
            Mat3 a2 = Mat3::identity(); // A2 form
            a2(0, 1) = a2(1, 0) = 0.5;
            a2(2, 2) = nu;
            return {catalog::g0(), MetricMatrix(a2)};
        }
        case GroupName::GD: {
            const double dpar = detail::require_param(hl.d, "D");
            const double mu = detail::require_param(hl.mu, "mu");
            const double nu = detail::require_param(hl.nu, "nu");
            if (!(dpar > 1.0)) throw ParamOutOfRange("GD normal forms require D > 1");
            if (!(mu > 1.0 && mu <= dpar)) throw ParamOutOfRange("GD requires 1 < mu <= D");
            if (!(nu > 0.0)) throw ParamOutOfRange("GD requires nu > 0");
            Mat3 g = Mat3::identity();
            g(0, 1) = g(1, 0) = 1.0;
            g(1, 1) = mu;
            g(2, 2) = nu;
            return {catalog::g_d(dpar), MetricMatrix(g)};
        }
    }
    throw ParamOutOfRange("unknown group");
}

// Witness frames for the locally symmetric normal forms: orthonormal bases
// (columns, in canonical coordinates) that carry the brackets into one of
// the symmetric families. Validated below rather than trusted.
inline std::optional<Mat3> halee_witness(const HaLeeMetric& hl) {
    switch (hl.group) {
        case GroupName::R3:
            return Mat3::identity();
        case GroupName::E0tilde2: {
            const double nu = *hl.nu;
            Mat3 p = Mat3::zero();
            p(0, 2) = 1.0;
            p(1, 1) = 1.0;
            p(2, 0) = 1.0 / std::sqrt(nu);
            return p;
        }
        case GroupName::SU2: {
            const double lambda = *hl.lambda;
            const double s = 1.0 / std::sqrt(lambda);
            return Mat3::diag(s, -s, -s);
        }
        case GroupName::GI: {
            const double nu = *hl.nu;
            Mat3 p = Mat3::zero();
            p(0, 1) = 1.0;
            p(1, 2) = 1.0;
            p(2, 0) = 1.0 / std::sqrt(nu);
            return p;
        }
        case GroupName::G0: {
            if (hl.mu) return std::nullopt; // A1 form is never symmetric
            const double nu = *hl.nu;
            Mat3 p = Mat3::zero();
            p(0, 2) = -2.0 / std::sqrt(3.0);
            p(1, 1) = 1.0;
            p(1, 2) = 1.0 / std::sqrt(3.0);
            p(2, 0) = 1.0 / std::sqrt(nu);
            return p;
        }
        case GroupName::GD: {
            const double dpar = *hl.d, nu = *hl.nu;
            Mat3 p = Mat3::zero();
            p(0, 1) = 1.0;
            p(0, 2) = -1.0 / std::sqrt(dpar - 1.0);
            p(1, 2) = 1.0 / std::sqrt(dpar - 1.0);
            p(2, 0) = 1.0 / std::sqrt(nu);
            return p;
        }
    }
    return std::nullopt;
}

// Orthonormality plus canonical-bracket residual of a claimed witness frame;
// this is the frame-existence system evaluated by substitution. The brackets
// are read off by transforming the algebra into the witness basis.
inline double witness_residual(const MetricLieAlgebra& mla, const Mat3& p) {
    const MetricLieAlgebra moved = change_basis(mla, BasisChange{p});
    double res = max_abs(moved.g.mat() - Mat3::identity());
    const StructureTensor& st = moved.st;
    const auto uni = unimodularity(mla.st, 1e-9);
    if (uni.is_unimodular) {
        // canonical form [e1,e2] = a e3, [e2,e3] = c e1, [e3,e1] = b e2
        for (auto [i, j, k] : {std::array<int, 3>{0, 1, 0}, {0, 1, 1}, {1, 2, 1},
                               {1, 2, 2}, {0, 2, 0}, {0, 2, 2}})
            res = std::max(res, std::abs(st.c(i, j, k)));
        res = std::max(res,
                       unimodular_residuals(st.c(0, 1, 2), -st.c(0, 2, 1), st.c(1, 2, 0)).max_abs());
    } else {
        // canonical form [e1,e2] = a e2 + b e3, [e1,e3] = c e2 + d e3, [e2,e3] = 0
        res = std::max(res, std::abs(st.c(0, 1, 0)));
        res = std::max(res, std::abs(st.c(0, 2, 0)));
        res = std::max(res, max_abs(st.pair_bracket(1, 2)));
        res = std::max(res, nonunimodular_residuals(st.c(0, 1, 1), st.c(0, 1, 2), st.c(0, 2, 1),
                                                    st.c(0, 2, 2))
                                .max_abs());
    }
    return res;
}

struct ClassificationVerdict {
    bool locally_symmetric = false;
    FrameKind kind = FrameKind::Unimodular;
    std::array<double, 4> milnor_constants{};
    double nabla_r_residual = 0.0;
    SymmetryResiduals residuals;
    FamilyId family{AlgebraFamily::Abelian};
    std::optional<Mat3> witness_p;
    double witness_defect = 0.0; // residual of the emitted witness, when present
};

// Classify a metric Lie algebra: Milnor frame, polynomial residuals, and the
// direct nabla R decision. `witness` is emitted for symmetric verdicts (the
// Milnor frame itself is such a witness for raw algebra inputs).
inline ClassificationVerdict classify(const MetricLieAlgebra& mla,
                                      std::optional<Mat3> witness = std::nullopt,
                                      double tol = kTolSym) {
    ClassificationVerdict v;
    const MilnorFrame frame = milnor_frame(mla);
    v.kind = frame.kind;
    v.milnor_constants = frame.constants;
    if (frame.kind == FrameKind::Unimodular)
        v.residuals = unimodular_residuals(frame.a(), frame.b(), frame.c());
    else
        v.residuals = nonunimodular_residuals(frame.a(), frame.b(), frame.c(), frame.d());

    const MetricLieAlgebra framed = change_basis(mla, frame.p);
    const ConnectionCoefficients conn = connection(framed.st);
    const CurvatureTensor r = curvature(conn, framed.st);
    v.nabla_r_residual = nabla_R(conn, r).max_abs();
    v.locally_symmetric = v.nabla_r_residual <= tol;
    v.family = identify_family(frame);

    if (v.locally_symmetric) {
        v.witness_p = witness ? witness : std::optional<Mat3>(frame.p.p);
        v.witness_defect = witness_residual(mla, *v.witness_p);
    }
    return v;
}

// Classify a Ha-Lee normal-form metric, emitting the closed-form witness
// frame for the symmetric cases.
inline ClassificationVerdict classify_halee(const HaLeeMetric& hl, double tol = kTolSym) {
    const MetricLieAlgebra mla = build_halee(hl);
    ClassificationVerdict v = classify(mla, std::nullopt, tol);
    if (v.locally_symmetric) {
        if (auto w = halee_witness(hl)) {
            v.witness_p = w;
            v.witness_defect = witness_residual(mla, *w);
        }
    }
    return v;
}

// ---------------------------------------------------------------------------
// Grid oracle: residual systems versus the direct nabla R computation.

struct GridSpec {
    double start = 0.0;
    double step = 0.5;
    int count = 7;
};

struct GridCounterexample {
    std::array<double, 4> constants;
    double poly_residual;
    double nabla_residual;
};

struct GridReport {
    int total = 0;
    int symmetric = 0;
    std::vector<GridCounterexample> counterexamples;

    bool consistent() const { return counterexamples.empty(); }
};

namespace detail {

inline double nabla_residual_unimodular(double a, double b, double c) {
    const StructureTensor st = catalog::unimodular_milnor(a, b, c);
    const ConnectionCoefficients conn = connection(st);
    return nabla_R(conn, curvature(conn, st)).max_abs();
}

inline double nabla_residual_nonunimodular(double a, double b, double c, double d) {
    const StructureTensor st = catalog::nonunimodular_milnor(a, b, c, d);
    const ConnectionCoefficients conn = connection(st);
    return nabla_R(conn, curvature(conn, st)).max_abs();
}

} // namespace detail

// Every unimodular grid point must satisfy: polynomial residuals vanish
// exactly when nabla R vanishes.
inline GridReport grid_verify_unimodular(const GridSpec& grid, double tol = kTolSym) {
    GridReport rep;
    for (int ia = 0; ia < grid.count; ++ia)
        for (int ib = 0; ib < grid.count; ++ib)
            for (int ic = 0; ic < grid.count; ++ic) {
                const double a = grid.start + grid.step * ia;
                const double b = grid.start + grid.step * ib;
                const double c = grid.start + grid.step * ic;
                const double poly = unimodular_residuals(a, b, c).max_abs();
                const double nab = detail::nabla_residual_unimodular(a, b, c);
                ++rep.total;
                const bool sym_poly = poly <= tol;
                const bool sym_nabla = nab <= tol;
                if (sym_nabla) ++rep.symmetric;
                if (sym_poly != sym_nabla)
                    rep.counterexamples.push_back({{a, b, c, 0.0}, poly, nab});
            }
    return rep;
}

// Admissible non-unimodular tuples are generated parametrically: for grid
// values (a, d) with a+d > 0 and scale t, (b,c) = t (a,-d)/|(a,d)| satisfies
// ac + bd = 0 identically.
inline GridReport grid_verify_nonunimodular(const GridSpec& grid, double tol = kTolSym) {
    GridReport rep;
    for (int ia = 0; ia < grid.count; ++ia)
        for (int id = 0; id < grid.count; ++id)
            for (int it = 0; it < grid.count; ++it) {
                const double a = grid.start + grid.step * ia;
                const double d = grid.start + grid.step * id;
                const double t = grid.start + grid.step * it;
                const double r = std::hypot(a, d);
                if (a + d <= kTolAlg || r <= kTolAlg) continue;
                const double b = t * a / r;
                const double c = -t * d / r;
                const auto n = normalize_nonunimodular(a, b, c, d);
                const double poly = nonunimodular_residuals(n[0], n[1], n[2], n[3]).max_abs();
                const double nab = detail::nabla_residual_nonunimodular(n[0], n[1], n[2], n[3]);
                ++rep.total;
                const bool sym_poly = poly <= tol;
                const bool sym_nabla = nab <= tol;
                if (sym_nabla) ++rep.symmetric;
                if (sym_poly != sym_nabla)
                    rep.counterexamples.push_back({n, poly, nab});
            }
    return rep;
}

} // namespace liesym
