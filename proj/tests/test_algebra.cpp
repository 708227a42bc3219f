#include <catch2/catch.hpp>

#include "liesym/liesym.hpp"
#include "liesym/verify.hpp"

using namespace liesym;

namespace {
constexpr double kEps = 1e-12;
}

TEST_CASE("bracket extends the catalog constants bilinearly") {
    const StructureTensor su2 = catalog::su2();
    const Vec3 e1{1, 0, 0}, e2{0, 1, 0}, e3{0, 0, 1};

    const Vec3 b12 = bracket(su2, e1, e2);
    CHECK(b12[0] == Approx(0.0).margin(kEps));
    CHECK(b12[1] == Approx(0.0).margin(kEps));
    CHECK(b12[2] == Approx(1.0).margin(kEps)); // [e1,e2] = e3

    const StructureTensor e0 = catalog::e0tilde2();
    const Vec3 b31 = bracket(e0, e3, e1); // [X3,X1] = -X2
    CHECK(b31[0] == Approx(0.0).margin(kEps));
    CHECK(b31[1] == Approx(-1.0).margin(kEps));
    CHECK(b31[2] == Approx(0.0).margin(kEps));
}

TEST_CASE("bracket is antisymmetric: [u,u] = 0") {
    Rng rng(7);
    const StructureTensor st = catalog::g_d(2.5);
    for (int n = 0; n < 20; ++n) {
        const Vec3 u{rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)};
        CHECK(max_abs(bracket(st, u, u)) == Approx(0.0).margin(kEps));
        const Vec3 v{rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)};
        const Vec3 sum = bracket(st, u, v) + bracket(st, v, u);
        CHECK(max_abs(sum) == Approx(0.0).margin(kEps));
    }
}

TEST_CASE("jacobi_residual vanishes on the catalog") {
    for (double d : {-1.0, 0.0, 1.0, 2.5}) CHECK(jacobi_residual(catalog::g_d(d)) == 0.0);
    CHECK(jacobi_residual(catalog::r3()) == 0.0);
    CHECK(jacobi_residual(catalog::su2()) == 0.0);
    CHECK(jacobi_residual(catalog::e0tilde2()) == 0.0);
    CHECK(jacobi_residual(catalog::g_i()) == 0.0);
}

TEST_CASE("jacobi_residual detects genuine violations") {
    // Rescaling one diagonal Milnor constant keeps the Jacobi identity (any
    // diagonal tuple is a Lie algebra)...
    CHECK(jacobi_residual(catalog::unimodular_milnor(1.1, 1.0, 1.0)) == 0.0);

    // ...but an off-diagonal perturbation breaks it. Brute-force evaluation
    // of the Jacobi sum at [e1,e2] = e3 + 0.1 e1, [e2,e3] = e1, [e3,e1] = e2
    // gives max residual 0.1 (the (1,2,3,2) slot).
    StructureTensor st = catalog::su2();
    st.set(0, 1, 0, 0.1);
    CHECK(jacobi_residual(st) == Approx(0.1).margin(kEps));
}

TEST_CASE("unimodularity traces") {
    const auto u_su2 = unimodularity(catalog::su2());
    CHECK(u_su2.is_unimodular);
    CHECK(max_abs(u_su2.traces) == 0.0);

    const auto u_gi = unimodularity(catalog::g_i());
    CHECK_FALSE(u_gi.is_unimodular);
    CHECK(u_gi.traces[0] == Approx(0.0).margin(kEps));
    CHECK(u_gi.traces[1] == Approx(0.0).margin(kEps));
    CHECK(u_gi.traces[2] == Approx(2.0).margin(kEps)); // tr ad_{X3} = 2

    const auto u_r3 = unimodularity(catalog::r3());
    CHECK(u_r3.is_unimodular);
}

TEST_CASE("change_basis identity and round trip") {
    const MetricLieAlgebra mla{catalog::su2(), MetricMatrix::diag(2.0, 1.0, 0.5)};
    const MetricLieAlgebra same = change_basis(mla, BasisChange{Mat3::identity()});
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                CHECK(same.st.c(i, j, k) == Approx(mla.st.c(i, j, k)).margin(kEps));

    Rng rng(11);
    for (int n = 0; n < 100; ++n) {
        const Mat3 p = verify_detail::random_well_conditioned(rng);
        const MetricLieAlgebra fwd = change_basis(mla, BasisChange{p});
        const MetricLieAlgebra back = change_basis(fwd, BasisChange{inverse(p)});
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                for (int k = 0; k < 3; ++k)
                    CHECK(back.st.c(i, j, k) == Approx(mla.st.c(i, j, k)).margin(1e-12));
        CHECK(max_abs(back.g.mat() - mla.g.mat()) < 1e-10);
    }
}

TEST_CASE("change_basis carries the cover frame to an orthonormal one") {
    const double nu = 4.0;
    const MetricLieAlgebra mla{catalog::e0tilde2(), MetricMatrix::diag(1.0, 1.0, nu)};
    Mat3 p = Mat3::identity();
    p(2, 2) = 1.0 / std::sqrt(nu); // columns X1, X2, X3/sqrt(nu)
    const MetricLieAlgebra moved = change_basis(mla, BasisChange{p});

    CHECK(max_abs(moved.g.mat() - Mat3::identity()) < 1e-12);
    // [e2,e3] = -(1/sqrt(nu)) e1 and [e3,e1] = -(1/sqrt(nu)) e2
    CHECK(moved.st.c(1, 2, 0) == Approx(-0.5).margin(kEps));
    CHECK(moved.st.c(1, 2, 1) == Approx(0.0).margin(kEps));
    CHECK(moved.st.c(0, 2, 1) == Approx(0.5).margin(kEps)); // [e3,e1] = +[e1,e3] flipped
    CHECK(max_abs(moved.st.pair_bracket(0, 1)) == Approx(0.0).margin(kEps));
}

TEST_CASE("change_basis rejects singular matrices") {
    const MetricLieAlgebra mla{catalog::su2(), MetricMatrix::identity()};
    Mat3 p = Mat3::identity();
    p(2, 2) = 0.0;
    CHECK_THROWS_AS(change_basis(mla, BasisChange{p}), SingularBasisChange);
}

TEST_CASE("unimodularity and Jacobi survive basis changes") {
    Rng rng(13);
    const MetricLieAlgebra uni{catalog::su2(), MetricMatrix::identity()};
    const MetricLieAlgebra non{catalog::g_i(), MetricMatrix::identity()};
    for (int n = 0; n < 50; ++n) {
        const BasisChange bc{verify_detail::random_well_conditioned(rng)};
        const auto moved_uni = change_basis(uni, bc);
        const auto moved_non = change_basis(non, bc);
        CHECK(unimodularity(moved_uni.st, 1e-9).is_unimodular);
        CHECK_FALSE(unimodularity(moved_non.st, 1e-9).is_unimodular);
        CHECK(jacobi_residual(moved_uni.st) < 1e-11);
        CHECK(jacobi_residual(moved_non.st) < 1e-11);
    }
}
