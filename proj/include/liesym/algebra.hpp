#pragma once

#include <array>
#include <cmath>
#include <string>

#include "liesym/linalg.hpp"

// Three-dimensional metric Lie algebras: structure constants, inner products,
// validation, and basis changes.

namespace liesym {

// Structure constants C^k_{ij} of a 3-dimensional algebra, [e_i,e_j] = sum_k C^k_{ij} e_k.
// Only the pairs i<j are stored; the antisymmetric entries are derived on
// read, so C^k_{ij} = -C^k_{ji} holds exactly by construction.
class StructureTensor {
public:
    StructureTensor() = default;

    // c(i,j,k), all indices 0-based.
    double c(int i, int j, int k) const {
        if (i == j) return 0.0;
        if (i < j) return low_[pair_index(i, j)][k];
        return -low_[pair_index(j, i)][k];
    }

    // Set the coefficient of e_k in [e_i, e_j]; requires i < j.
    void set(int i, int j, int k, double value) { low_[pair_index(i, j)][k] = value; }

    // Vector [e_i, e_j] for i < j.
    Vec3 pair_bracket(int i, int j) const {
        if (i == j) return Vec3{};
        if (i < j) return low_[pair_index(i, j)];
        return -1.0 * low_[pair_index(j, i)];
    }

private:
    static int pair_index(int i, int j) { return i + j - 1; } // (0,1)->0 (0,2)->1 (1,2)->2
    std::array<Vec3, 3> low_{};
};

// Symmetric inner-product matrix <X_i, X_j>. Symmetry is enforced on write.
class MetricMatrix {
public:
    MetricMatrix() : m_(Mat3::identity()) {}
    explicit MetricMatrix(const Mat3& m) : m_(m) {
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                const double v = 0.5 * (m_(i, j) + m_(j, i));
                m_(i, j) = m_(j, i) = v;
            }
    }
    static MetricMatrix identity() { return MetricMatrix(Mat3::identity()); }
    static MetricMatrix diag(double x, double y, double z) { return MetricMatrix(Mat3::diag(x, y, z)); }

    double operator()(int i, int j) const { return m_(i, j); }
    const Mat3& mat() const { return m_; }

    bool positive_definite(double tol = kTolPd) const { return is_positive_definite(m_, tol); }

    void require_positive_definite(double tol = kTolPd) const {
        if (!positive_definite(tol)) throw DegenerateMetric("metric matrix is not positive definite");
    }

private:
    Mat3 m_;
};

// A Lie algebra together with an inner product.
struct MetricLieAlgebra {
    StructureTensor st;
    MetricMatrix g;
};

// Basis change: columns of p are the new basis vectors in old coordinates.
struct BasisChange {
    Mat3 p;

    void require_invertible(double tol = kTolPd) const {
        if (std::abs(det(p)) <= tol) throw SingularBasisChange("basis-change matrix has |det| <= tol");
    }
};

// Bilinear extension [u, v] of the structure constants.
inline Vec3 bracket(const StructureTensor& st, const Vec3& u, const Vec3& v) {
    Vec3 w{};
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            const double coeff = u[i] * v[j] - u[j] * v[i];
            if (coeff == 0.0) continue;
            const Vec3 b = st.pair_bracket(i, j);
            w = w + coeff * b;
        }
    return w;
}

// Max-norm of the Jacobi sum over all index combinations; zero for a valid
// Lie algebra.
inline double jacobi_residual(const StructureTensor& st) {
    double worst = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                for (int m = 0; m < 3; ++m) {
                    double s = 0.0;
                    for (int l = 0; l < 3; ++l)
                        s += st.c(i, j, l) * st.c(l, k, m) + st.c(j, k, l) * st.c(l, i, m) +
                             st.c(k, i, l) * st.c(l, j, m);
                    worst = std::max(worst, std::abs(s));
                }
    return worst;
}

struct Unimodularity {
    bool is_unimodular;
    Vec3 traces; // traces[i] = tr(ad_{e_i})
};

// tr(ad_{e_i}) = sum_k C^k_{ik}; the algebra is unimodular when every adjoint
// operator is trace-free.
inline Unimodularity unimodularity(const StructureTensor& st, double tol = kTolAlg) {
    Vec3 tr{};
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) tr[i] += st.c(i, k, k);
    return {max_abs(tr) <= tol, tr};
}

// Transform a metric Lie algebra by the basis change P:
//   g' = P^T g P, and C' are read off from [P e_i, P e_j] = sum_k C'^k_{ij} P e_k.
inline MetricLieAlgebra change_basis(const MetricLieAlgebra& mla, const BasisChange& bc) {
    bc.require_invertible();
    const Mat3 p = bc.p;
    const Mat3 p_inv = inverse(p);

    StructureTensor st;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            const Vec3 w = p_inv * bracket(mla.st, p.col(i), p.col(j));
            for (int k = 0; k < 3; ++k) st.set(i, j, k, w[k]);
        }
    const Mat3 g2 = transpose(p) * mla.g.mat() * p;
    return {st, MetricMatrix(g2)};
}

// ---------------------------------------------------------------------------
// Catalog of named algebras (brackets in the canonical basis X_1, X_2, X_3).

enum class GroupName { R3, E0tilde2, SU2, GI, G0, GD };

inline std::string to_string(GroupName g) {
    switch (g) {
        case GroupName::R3: return "R3";
        case GroupName::E0tilde2: return "E0tilde2";
        case GroupName::SU2: return "SU2";
        case GroupName::GI: return "GI";
        case GroupName::G0: return "G0";
        case GroupName::GD: return "GD";
    }
    return "?";
}

namespace catalog {

// abelian: all brackets vanish
inline StructureTensor r3() { return StructureTensor{}; }

// [X1,X2] = 0, [X3,X1] = -X2, [X3,X2] = X1
inline StructureTensor e0tilde2() {
    StructureTensor st;
    st.set(0, 2, 1, 1.0);  // [X1,X3] = X2
    st.set(1, 2, 0, -1.0); // [X2,X3] = -X1
    return st;
}

// [X1,X2] = X3, [X3,X1] = X2, [X3,X2] = -X1
inline StructureTensor su2() {
    StructureTensor st;
    st.set(0, 1, 2, 1.0);  // [X1,X2] = X3
    st.set(0, 2, 1, -1.0); // [X1,X3] = -X2
    st.set(1, 2, 0, 1.0);  // [X2,X3] = X1
    return st;
}

// [X1,X2] = 0, [X3,X1] = X1, [X3,X2] = X2
inline StructureTensor g_i() {
    StructureTensor st;
    st.set(0, 2, 0, -1.0); // [X1,X3] = -X1
    st.set(1, 2, 1, -1.0); // [X2,X3] = -X2
    return st;
}

// [X1,X2] = 0, [X3,X1] = X2, [X3,X2] = -D X1 + 2 X2
inline StructureTensor g_d(double d_param) {
    StructureTensor st;
    st.set(0, 2, 1, -1.0); // [X1,X3] = -X2
    st.set(1, 2, 0, d_param);
    st.set(1, 2, 1, -2.0); // [X2,X3] = D X1 - 2 X2
    return st;
}

inline StructureTensor g0() { return g_d(0.0); }

// Unimodular Milnor form: [e1,e2] = a e3, [e2,e3] = c e1, [e3,e1] = b e2.
inline StructureTensor unimodular_milnor(double a, double b, double c) {
    StructureTensor st;
    st.set(0, 1, 2, a);
    st.set(1, 2, 0, c);
    st.set(0, 2, 1, -b); // [e3,e1] = b e2
    return st;
}

// Non-unimodular Milnor form:
// [e1,e2] = a e2 + b e3, [e1,e3] = c e2 + d e3, [e2,e3] = 0.
inline StructureTensor nonunimodular_milnor(double a, double b, double c, double d) {
    StructureTensor st;
    st.set(0, 1, 1, a);
    st.set(0, 1, 2, b);
    st.set(0, 2, 1, c);
    st.set(0, 2, 2, d);
    return st;
}

inline StructureTensor by_name(GroupName name, double d_param = 0.0) {
    switch (name) {
        case GroupName::R3: return r3();
        case GroupName::E0tilde2: return e0tilde2();
        case GroupName::SU2: return su2();
        case GroupName::GI: return g_i();
        case GroupName::G0: return g0();
        case GroupName::GD: return g_d(d_param);
    }
    return r3();
}

} // namespace catalog

} // namespace liesym
