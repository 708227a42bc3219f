#include <catch2/catch.hpp>

#include "liesym/liesym.hpp"
#include "liesym/verify.hpp"

using namespace liesym;

TEST_CASE("connection of the abelian algebra vanishes") {
    const ConnectionCoefficients conn = connection(catalog::r3());
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) CHECK(conn(i, j, k) == 0.0);
}

TEST_CASE("bi-invariant case: nabla_x y = [x,y]/2") {
    const StructureTensor st = catalog::unimodular_milnor(1, 1, 1);
    const ConnectionCoefficients conn = connection(st);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                CHECK(conn(i, j, k) == Approx(0.5 * st.c(i, j, k)).margin(1e-14));
}

TEST_CASE("connection support in the flat cover frame") {
    const double nu = 2.0;
    const double r = 1.0 / std::sqrt(nu);
    // frame constants (a,b,c) = (0, -1/sqrt(nu), -1/sqrt(nu))
    const StructureTensor st = catalog::unimodular_milnor(0.0, -r, -r);
    const ConnectionCoefficients conn = connection(st);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) {
                const bool e3_slot = (i == 2) && ((j == 0 && k == 1) || (j == 1 && k == 0));
                if (e3_slot)
                    CHECK(std::abs(conn(i, j, k)) == Approx(r).margin(1e-14));
                else
                    CHECK(conn(i, j, k) == Approx(0.0).margin(1e-14));
            }
}

TEST_CASE("connection requires an orthonormal frame") {
    const MetricLieAlgebra mla{catalog::su2(), MetricMatrix::diag(2, 1, 1)};
    CHECK_THROWS_AS(connection(mla), NotOrthonormal);
    CHECK_NOTHROW(connection(MetricLieAlgebra{catalog::su2(), MetricMatrix::identity()}));
}

TEST_CASE("curvature of the flat unimodular family vanishes") {
    const StructureTensor st = catalog::unimodular_milnor(0.0, 1.7, 1.7);
    const CurvatureTensor r = curvature(connection(st), st);
    CHECK(r.max_abs() == Approx(0.0).margin(1e-14));
}

TEST_CASE("generic unimodular curvature component") {
    const double a = 1.3, b = 0.4, c = -0.2;
    const StructureTensor st = catalog::unimodular_milnor(a, b, c);
    const CurvatureTensor r = curvature(connection(st), st);
    const double want = (2 * a * (a - b - c) + (a - b + c) * (a + b - c)) / 4.0;
    CHECK(r(0, 1, 1, 0) == Approx(want).margin(1e-12)); // <R(e1,e2)e2, e1>

    // at (1,2,3): 2a(a-b-c) = -8 and (a-b+c)(a+b-c) = 2*0, so the value is -2
    const StructureTensor st2 = catalog::unimodular_milnor(1, 2, 3);
    const CurvatureTensor r2 = curvature(connection(st2), st2);
    CHECK(r2(0, 1, 1, 0) == Approx(-2.0).margin(1e-12));
}

TEST_CASE("round su(2) curvature is -1/4, not -1/2") {
    const StructureTensor st = catalog::unimodular_milnor(1, 1, 1);
    const CurvatureTensor r = curvature(connection(st), st);
    CHECK(r(0, 1, 1, 0) == Approx(-0.25).margin(1e-14));
    CHECK(std::abs(r(0, 1, 1, 0) - (-0.5)) > 0.2);
}

TEST_CASE("nabla R examples") {
    const StructureTensor ab = catalog::r3();
    CHECK(nabla_R(connection(ab), curvature(connection(ab), ab)).max_abs() == 0.0);

    const StructureTensor round = catalog::unimodular_milnor(1, 1, 1);
    const ConnectionCoefficients conn = connection(round);
    CHECK(nabla_R(conn, curvature(conn, round)).max_abs() == Approx(0.0).margin(1e-14));

    const StructureTensor odd = catalog::unimodular_milnor(1, 2, 3);
    const ConnectionCoefficients conn2 = connection(odd);
    CHECK(nabla_R(conn2, curvature(conn2, odd)).max_abs() > 1e-3);
}

TEST_CASE("is_locally_symmetric on normal-form metrics") {
    for (double nu : {0.5, 1.0, 2.0}) {
        const MetricLieAlgebra mla{catalog::e0tilde2(), MetricMatrix::diag(1, 1, nu)};
        const auto dec = is_locally_symmetric(mla);
        CHECK(dec.locally_symmetric);
        CHECK(dec.residual <= 1e-9);
    }
    const MetricLieAlgebra squeezed{catalog::e0tilde2(), MetricMatrix::diag(1, 0.5, 1)};
    CHECK_FALSE(is_locally_symmetric(squeezed).locally_symmetric);

    for (double nu : {0.3, 1.0, 4.0}) {
        const MetricLieAlgebra mla{catalog::g_i(), MetricMatrix::diag(1, 1, nu)};
        CHECK(is_locally_symmetric(mla).locally_symmetric);
    }
}

TEST_CASE("closed-form curvature matches the Koszul pipeline") {
    Rng rng(211);
    for (int n = 0; n < 50; ++n) {
        const double a = rng.uniform(-3, 3), b = rng.uniform(-3, 3), c = rng.uniform(-3, 3);
        const StructureTensor st = catalog::unimodular_milnor(a, b, c);
        const CurvatureTensor r = curvature(connection(st), st);
        CHECK(curvature_max_diff(r, closed_form_R_unimodular(a, b, c)) <= 1e-10);
    }
    for (int n = 0; n < 50; ++n) {
        double a, d;
        do {
            a = rng.uniform(-3, 3);
            d = rng.uniform(-3, 3);
        } while (a + d <= 0.1 || std::hypot(a, d) <= 0.1);
        const double t = rng.uniform(-3, 3), rr = std::hypot(a, d);
        const double b = t * a / rr, c = -t * d / rr;
        const StructureTensor st = catalog::nonunimodular_milnor(a, b, c, d);
        const CurvatureTensor r = curvature(connection(st), st);
        CHECK(curvature_max_diff(r, closed_form_R_nonunimodular(a, b, c, d)) <= 1e-10);
    }
}

TEST_CASE("closed-form values at pinned tuples") {
    // (0,b,b) family is flat
    CHECK(closed_form_R_unimodular(0, 0.9, 0.9).max_abs() == 0.0);

    // <R(e2,e3)e3, e2> at (1,0,0,1) equals +1
    const CurvatureTensor t = closed_form_R_nonunimodular(1, 0, 0, 1);
    CHECK(t(1, 2, 2, 1) == Approx(1.0).margin(1e-14));
}

TEST_CASE("connection axioms and curvature identities on random tuples") {
    Rng rng(223);
    for (int n = 0; n < 100; ++n) {
        StructureTensor st;
        if (n % 2 == 0) {
            st = catalog::unimodular_milnor(rng.uniform(-3, 3), rng.uniform(-3, 3),
                                            rng.uniform(-3, 3));
        } else {
            double a, d;
            do {
                a = rng.uniform(-3, 3);
                d = rng.uniform(-3, 3);
            } while (a + d <= 0.1 || std::hypot(a, d) <= 0.1);
            const double t = rng.uniform(-3, 3), rr = std::hypot(a, d);
            st = catalog::nonunimodular_milnor(a, t * a / rr, -t * d / rr, d);
        }
        const ConnectionCoefficients conn = connection(st);
        CHECK(connection_torsion_residual(conn, st) <= 1e-12);
        CHECK(connection_metric_residual(conn) <= 1e-12);
        const CurvatureTensor r = curvature(conn, st);
        CHECK(curvature_symmetry_residual(r) <= 1e-10);
        CHECK(first_bianchi_residual(r) <= 1e-10);
    }
}

TEST_CASE("local symmetry is invariant under basis changes") {
    Rng rng(227);
    const MetricLieAlgebra sym{catalog::e0tilde2(), MetricMatrix::diag(1, 1, 2)};
    const MetricLieAlgebra nonsym{catalog::su2(), MetricMatrix::diag(2, 1, 1)};
    for (int n = 0; n < 50; ++n) {
        const BasisChange bc{verify_detail::random_well_conditioned(rng)};
        CHECK(is_locally_symmetric(change_basis(sym, bc)).locally_symmetric);
        CHECK_FALSE(is_locally_symmetric(change_basis(nonsym, bc)).locally_symmetric);
    }
}
