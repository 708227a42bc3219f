#pragma once

#include <array>
#include <cmath>

#include "liesym/algebra.hpp"
#include "liesym/milnor.hpp"

// Levi-Civita connection, curvature tensor, and covariant derivative of the
// curvature for left-invariant metrics, computed in an orthonormal frame.
//
// Sign convention used throughout this library:
//     R(x,y) = nabla_{[x,y]} - nabla_x nabla_y + nabla_y nabla_x,
// the negative of the more common convention. All symmetry identities are
// convention-agnostic; only the sign of individual components flips.

namespace liesym {

// gamma[i][j][k] = <nabla_{e_i} e_j, e_k> in an orthonormal frame.
struct ConnectionCoefficients {
    std::array<std::array<std::array<double, 3>, 3>, 3> gamma{};

    double operator()(int i, int j, int k) const { return gamma[i][j][k]; }
};

// r[i][j][k][l] = <R(e_i,e_j) e_k, e_l>.
struct CurvatureTensor {
    std::array<std::array<std::array<std::array<double, 3>, 3>, 3>, 3> r{};

    double operator()(int i, int j, int k, int l) const { return r[i][j][k][l]; }
    double& at(int i, int j, int k, int l) { return r[i][j][k][l]; }

    double max_abs() const {
        double m = 0.0;
        for (const auto& a : r)
            for (const auto& b : a)
                for (const auto& c : b)
                    for (double x : c) m = std::max(m, std::abs(x));
        return m;
    }
};

// dr[m][i][j][k][l] = <(nabla_{e_m} R)(e_i,e_j) e_k, e_l>.
struct NablaR {
    std::array<CurvatureTensor, 3> dr{};

    double operator()(int m, int i, int j, int k, int l) const { return dr[m](i, j, k, l); }

    double max_abs() const {
        double v = 0.0;
        for (const auto& t : dr) v = std::max(v, t.max_abs());
        return v;
    }
};

// Koszul formula on frame vectors of a left-invariant metric with identity
// Gram matrix:  2 <nabla_{e_i} e_j, e_k> = C^k_{ij} - C^i_{jk} + C^j_{ki}.
// The caller must pass structure constants expressed in an orthonormal
// frame; pass the frame's metric to have that checked.
inline ConnectionCoefficients connection(const StructureTensor& st) {
    ConnectionCoefficients out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                out.gamma[i][j][k] = 0.5 * (st.c(i, j, k) - st.c(j, k, i) + st.c(k, i, j));
    return out;
}

inline ConnectionCoefficients connection(const MetricLieAlgebra& mla, double tol_frame = kTolFrame) {
    if (max_abs(mla.g.mat() - Mat3::identity()) > tol_frame)
        throw NotOrthonormal("connection requires the metric to be the identity in this frame");
    return connection(mla.st);
}

// R(e_i,e_j)e_k = nabla_{[e_i,e_j]} e_k - nabla_{e_i} nabla_{e_j} e_k
//                + nabla_{e_j} nabla_{e_i} e_k, expanded algebraically;
// frame fields are left-invariant so no coordinate derivatives appear.
inline CurvatureTensor curvature(const ConnectionCoefficients& conn, const StructureTensor& st) {
    CurvatureTensor out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l) {
                    double s = 0.0;
                    for (int m = 0; m < 3; ++m)
                        s += st.c(i, j, m) * conn(m, k, l) - conn(j, k, m) * conn(i, m, l) +
                             conn(i, k, m) * conn(j, m, l);
                    out.at(i, j, k, l) = s;
                }
    return out;
}

// Covariant derivative of R:
// (nabla_m R)(e_i,e_j)e_k = nabla_m(R(e_i,e_j)e_k) - R(nabla_m e_i, e_j)e_k
//                          - R(e_i, nabla_m e_j)e_k - R(e_i,e_j) nabla_m e_k.
inline NablaR nabla_R(const ConnectionCoefficients& conn, const CurvatureTensor& r) {
    NablaR out;
    for (int m = 0; m < 3; ++m)
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int k = 0; k < 3; ++k)
                    for (int l = 0; l < 3; ++l) {
                        double s = 0.0;
                        for (int p = 0; p < 3; ++p)
                            s += r(i, j, k, p) * conn(m, p, l) - conn(m, i, p) * r(p, j, k, l) -
                                 conn(m, j, p) * r(i, p, k, l) - conn(m, k, p) * r(i, j, p, l);
                        out.dr[m].at(i, j, k, l) = s;
                    }
    return out;
}

struct SymmetryDecision {
    bool locally_symmetric;
    double residual; // max-norm of nabla R in a Milnor frame
};

// Decide local symmetry (nabla R = 0) of a metric Lie algebra by computing
// nabla R in a Milnor frame.
inline SymmetryDecision is_locally_symmetric(const MetricLieAlgebra& mla, double tol = kTolSym) {
    const MilnorFrame frame = milnor_frame(mla);
    const MetricLieAlgebra framed = change_basis(mla, frame.p);
    const ConnectionCoefficients conn = connection(framed.st);
    const CurvatureTensor r = curvature(conn, framed.st);
    const double residual = nabla_R(conn, r).max_abs();
    return {residual <= tol, residual};
}

// Curvature of the unimodular canonical form directly from the six closed
// formulas; every other component follows from the index symmetries.
inline CurvatureTensor closed_form_R_unimodular(double a, double b, double c) {
    CurvatureTensor t;
    auto fill = [&t](int i, int j, int k, int l, double v) {
        t.at(i, j, k, l) = v;
        t.at(j, i, k, l) = -v;
        t.at(i, j, l, k) = -v;
        t.at(j, i, l, k) = v;
        t.at(k, l, i, j) = v;
        t.at(l, k, i, j) = -v;
        t.at(k, l, j, i) = -v;
        t.at(l, k, j, i) = v;
    };
    const double q12 = (2.0 * a * (a - b - c) + (a - b + c) * (a + b - c)) / 4.0;
    const double q13 = (2.0 * b * (a - b + c) + (a - b - c) * (a + b - c)) / 4.0;
    const double q23 = (2.0 * c * (a + b - c) + (a - b + c) * (a - b - c)) / 4.0;
    fill(0, 1, 0, 1, -q12); // R(e1,e2)e1 = -q12 e2
    fill(0, 2, 0, 2, q13);  // R(e1,e3)e1 =  q13 e3
    fill(1, 2, 1, 2, q23);  // R(e2,e3)e2 =  q23 e3
    return t;
}

// Curvature of the non-unimodular canonical form (valid on the Milnor
// constraint surface ac + bd = 0).
inline CurvatureTensor closed_form_R_nonunimodular(double a, double b, double c, double d) {
    CurvatureTensor t;
    auto fill = [&t](int i, int j, int k, int l, double v) {
        t.at(i, j, k, l) = v;
        t.at(j, i, k, l) = -v;
        t.at(i, j, l, k) = -v;
        t.at(j, i, l, k) = v;
        t.at(k, l, i, j) = v;
        t.at(l, k, i, j) = -v;
        t.at(k, l, j, i) = -v;
        t.at(l, k, j, i) = v;
    };
    const double q12 = a * a + 0.75 * b * b - 0.25 * c * c + 0.5 * b * c;
    const double q13 = d * d - 0.25 * b * b + 0.75 * c * c + 0.5 * b * c;
    const double q23 = 0.25 * (b + c) * (b + c) - a * d;
    fill(0, 1, 0, 1, -q12); // R(e1,e2)e1 = -q12 e2
    fill(0, 2, 0, 2, -q13); // R(e1,e3)e1 = -q13 e3
    fill(1, 2, 1, 2, q23);  // R(e2,e3)e2 =  q23 e3
    return t;
}

// Structural residuals used by the invariant suite.

inline double connection_torsion_residual(const ConnectionCoefficients& conn,
                                          const StructureTensor& st) {
    double worst = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                worst = std::max(worst, std::abs(conn(i, j, k) - conn(j, i, k) - st.c(i, j, k)));
    return worst;
}

inline double connection_metric_residual(const ConnectionCoefficients& conn) {
    double worst = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                worst = std::max(worst, std::abs(conn(i, j, k) + conn(i, k, j)));
    return worst;
}

inline double curvature_symmetry_residual(const CurvatureTensor& r) {
    double worst = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l) {
                    worst = std::max(worst, std::abs(r(i, j, k, l) + r(j, i, k, l)));
                    worst = std::max(worst, std::abs(r(i, j, k, l) + r(i, j, l, k)));
                    worst = std::max(worst, std::abs(r(i, j, k, l) - r(k, l, i, j)));
                }
    return worst;
}

inline double first_bianchi_residual(const CurvatureTensor& r) {
    double worst = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l)
                    worst = std::max(worst,
                                     std::abs(r(i, j, k, l) + r(j, k, i, l) + r(k, i, j, l)));
    return worst;
}

inline double curvature_max_diff(const CurvatureTensor& x, const CurvatureTensor& y) {
    double worst = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l)
                    worst = std::max(worst, std::abs(x(i, j, k, l) - y(i, j, k, l)));
    return worst;
}

} // namespace liesym
