#include <catch2/catch.hpp>

#include <sstream>

#include "liesym/io.hpp"
#include "liesym/liesym.hpp"
#include "liesym/verify.hpp"

using namespace liesym;

TEST_CASE("euler_arnold_rhs") {
    const AlgebraVector flat = euler_arnold_rhs(2.0, {1.4, -0.3, 0.0});
    CHECK(flat.v1 == 0.0);
    CHECK(flat.v2 == 0.0);
    CHECK(flat.v3 == 0.0);

    const AlgebraVector r = euler_arnold_rhs(1.0, {1, 0, 1});
    CHECK(r.v1 == Approx(0.0).margin(1e-15));
    CHECK(r.v2 == Approx(1.0).margin(1e-15));
    CHECK(r.v3 == 0.0);

    const AlgebraVector axis = euler_arnold_rhs(3.7, {0, 0, 5});
    CHECK(axis.v1 == 0.0);
    CHECK(axis.v2 == 0.0);
    CHECK(axis.v3 == 0.0);
}

TEST_CASE("generic Euler-Arnold form agrees with the specialization") {
    Rng rng(301);
    for (int n = 0; n < 20; ++n) {
        const double nu = rng.uniform(0.2, 5.0);
        const double r = 1.0 / std::sqrt(nu);
        const StructureTensor st = catalog::unimodular_milnor(0.0, -r, -r);
        const AlgebraVector alpha{rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)};
        const AlgebraVector gen = euler_arnold_rhs_generic(st, alpha);
        const AlgebraVector special = euler_arnold_rhs(nu, alpha);
        CHECK(gen.v1 == Approx(special.v1).margin(1e-13));
        CHECK(gen.v2 == Approx(special.v2).margin(1e-13));
        CHECK(gen.v3 == Approx(special.v3).margin(1e-13));
    }
}

TEST_CASE("integrated geodesics: straight-line cases") {
    const GeodesicPath p1 = integrate_geodesic(3.0, {1, 0, 0}, 2.0, 1e-3);
    const auto& last1 = p1.samples.back();
    CHECK(last1.point.x == Approx(2.0).margin(1e-10));
    CHECK(last1.point.y == Approx(0.0).margin(1e-10));
    CHECK(last1.point.s == Approx(0.0).margin(1e-10));

    const GeodesicPath p2 = integrate_geodesic(1.0, {1, 2, 3}, 1.0, 1e-3);
    const auto& last2 = p2.samples.back();
    CHECK(last2.point.x == Approx(1.0).margin(1e-9));
    CHECK(last2.point.y == Approx(2.0).margin(1e-9));
    CHECK(last2.point.s == Approx(3.0).margin(1e-9));
}

TEST_CASE("integrator conserves alpha_3 and the energy") {
    const GeodesicPath p = integrate_geodesic(4.0, {1, 0.5, 1}, 10.0, 1e-3);
    double a3_drift = 0.0;
    for (const auto& s : p.samples) a3_drift = std::max(a3_drift, std::abs(s.alpha.v3 - 1.0));
    CHECK(a3_drift <= 1e-12);
    CHECK(p.energy_drift() <= 1e-9);
}

TEST_CASE("closed form is the integrator's limit") {
    const AlgebraVector v{1, 0, 1};
    const GeodesicPath p = integrate_geodesic(4.0, v, 1.0, 1e-3);
    const CoverPoint cf = closed_geodesic(4.0, v, 1.0);
    CHECK(p.samples.back().point.x == Approx(cf.x).margin(1e-8));
    CHECK(p.samples.back().point.y == Approx(cf.y).margin(1e-8));
    CHECK(p.samples.back().point.s == Approx(cf.s).margin(1e-8));
}

TEST_CASE("closed geodesic pinned values") {
    // v3 = 0: straight line in the plane
    const CoverPoint p1 = closed_geodesic(2.5, {0.3, -0.4, 0.0}, 2.0);
    CHECK(p1.x == Approx(0.6).margin(1e-14));
    CHECK(p1.y == Approx(-0.8).margin(1e-14));
    CHECK(p1.s == 0.0);

    // nu = 1: straight line in all coordinates
    const CoverPoint p2 = closed_geodesic(1.0, {1, 2, 3}, 1.0);
    CHECK(p2.x == Approx(1.0).margin(1e-14));
    CHECK(p2.y == Approx(2.0).margin(1e-14));
    CHECK(p2.s == Approx(3.0).margin(1e-14));

    // nu = 4, v = (1,0,2), t = pi: twist rate 1/2, so the spiral phase is
    // (1 - 1/2)*2*pi = pi. Cross-checked against RK4 below.
    const AlgebraVector v{1, 0, 2};
    const CoverPoint p3 = closed_geodesic(4.0, v, kPi);
    CHECK(p3.s == Approx(2.0 * kPi).margin(1e-14));
    CHECK(p3.x == Approx(0.0).margin(1e-12));
    CHECK(p3.y == Approx(-2.0).margin(1e-12));

    const GeodesicPath rk = integrate_geodesic(4.0, v, kPi, 1e-3);
    CHECK(rk.samples.back().point.x == Approx(p3.x).margin(1e-8));
    CHECK(rk.samples.back().point.y == Approx(p3.y).margin(1e-8));
    CHECK(rk.samples.back().point.s == Approx(p3.s).margin(1e-8));
}

TEST_CASE("closed geodesic is continuous as v3 -> 0") {
    const CoverPoint a = closed_geodesic(4.0, {1, 1, 1e-12}, 1.0);
    const CoverPoint b = closed_geodesic(4.0, {1, 1, 0.0}, 1.0);
    CHECK(std::abs(a.x - b.x) <= 1e-9);
    CHECK(std::abs(a.y - b.y) <= 1e-9);
    CHECK(std::abs(a.s - b.s) <= 1e-9);
}

TEST_CASE("integrator rejects bad steps") {
    CHECK_THROWS_AS(integrate_geodesic(1.0, {1, 0, 0}, 1.0, 0.0), InvalidStep);
    CHECK_THROWS_AS(integrate_geodesic(1.0, {1, 0, 0}, 1.0, -1e-3), InvalidStep);
}

TEST_CASE("exp and log") {
    // planar vectors map to planar points
    const CoverPoint p1 = exp_e(2.0, {0.7, -0.2, 0.0});
    CHECK(p1.x == Approx(0.7).margin(1e-14));
    CHECK(p1.y == Approx(-0.2).margin(1e-14));
    CHECK(p1.s == 0.0);

    // nu = 1: identity chart
    const CoverPoint p2 = exp_e(1.0, {0.3, 0.4, 0.5});
    CHECK(p2.x == Approx(0.3).margin(1e-14));
    CHECK(p2.y == Approx(0.4).margin(1e-14));
    CHECK(p2.s == Approx(0.5).margin(1e-14));

    // round trip
    const AlgebraVector v{0.3, -0.7, 1.1};
    const AlgebraVector back = log_e(4.0, exp_e(4.0, v));
    CHECK(back.v1 == Approx(v.v1).margin(1e-9));
    CHECK(back.v2 == Approx(v.v2).margin(1e-9));
    CHECK(back.v3 == Approx(v.v3).margin(1e-9));

    CHECK_THROWS_AS(exp_e(4.0, AlgebraVector{0, 0, 4.0 * kPi + 0.1}), DomainExceeded);
    CHECK_THROWS_AS(log_e(4.0, CoverPoint{1, 0, 4.0 * kPi + 0.1}), DomainExceeded);
}

TEST_CASE("exp_e equals the time-one geodesic") {
    Rng rng(307);
    for (int n = 0; n < 20; ++n) {
        const double nu = rng.uniform(0.2, 5.0);
        const double cap = twist_rate(nu) == 0.0 ? 5.0 : 0.9 * 2.0 * kPi / std::abs(twist_rate(nu));
        const AlgebraVector v{rng.uniform(-2, 2), rng.uniform(-2, 2),
                              rng.uniform(-std::min(cap, 5.0), std::min(cap, 5.0))};
        const CoverPoint a = exp_e(nu, v);
        const CoverPoint b = closed_geodesic(nu, v, 1.0);
        CHECK(a.x == b.x);
        CHECK(a.y == b.y);
        CHECK(a.s == b.s);
    }
}

TEST_CASE("symmetry at the identity of the cover") {
    const CoverPoint fixed = symmetry_cover(2.0, identity_point());
    CHECK(fixed.x == 0.0);
    CHECK(fixed.y == 0.0);
    CHECK(fixed.s == 0.0);

    // nu = 1: plain point reflection
    const CoverPoint p = symmetry_cover(1.0, {0.4, -1.2, 2.2});
    CHECK(p.x == Approx(-0.4).margin(1e-14));
    CHECK(p.y == Approx(1.2).margin(1e-14));
    CHECK(p.s == Approx(-2.2).margin(1e-14));

    // nu = 4, p = ([1;0], pi): phase pi/2
    const CoverPoint q = symmetry_cover(4.0, {1.0, 0.0, kPi});
    CHECK(q.x == Approx(0.0).margin(1e-14));
    CHECK(q.y == Approx(1.0).margin(1e-14));
    CHECK(q.s == Approx(-kPi).margin(1e-14));
}

TEST_CASE("symmetry_cover is an involution") {
    Rng rng(311);
    for (double nu : {0.25, 1.0, 2.0})
        for (int n = 0; n < 50; ++n) {
            const CoverPoint p{rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-3, 3)};
            const CoverPoint pp = symmetry_cover(nu, symmetry_cover(nu, p));
            CHECK(std::abs(pp.x - p.x) <= 1e-12);
            CHECK(std::abs(pp.y - p.y) <= 1e-12);
            CHECK(std::abs(pp.s - p.s) <= 1e-12);
        }
}

TEST_CASE("based symmetry") {
    Rng rng(313);
    // reduces to the identity-based symmetry
    for (int n = 0; n < 20; ++n) {
        const double nu = rng.uniform(0.2, 5.0);
        const CoverPoint p{rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-3, 3)};
        const CoverPoint a = symmetry_based(nu, identity_point(), p);
        const CoverPoint b = symmetry_cover(nu, p);
        CHECK(a.x == Approx(b.x).margin(1e-14));
        CHECK(a.y == Approx(b.y).margin(1e-14));
        CHECK(a.s == Approx(b.s).margin(1e-14));
    }

    // the base point is fixed
    const CoverPoint base{0.7, -0.1, 1.3};
    const CoverPoint fixed = symmetry_based(2.0, base, base);
    CHECK(fixed.x == Approx(base.x).margin(1e-14));
    CHECK(fixed.y == Approx(base.y).margin(1e-14));
    CHECK(fixed.s == Approx(base.s).margin(1e-14));

    // nu = 1 pinned example
    const CoverPoint img = symmetry_based(1.0, {1, 1, 0}, {2, 0, 1});
    CHECK(img.x == Approx(0.0).margin(1e-14));
    CHECK(img.y == Approx(2.0).margin(1e-14));
    CHECK(img.s == Approx(-1.0).margin(1e-14));
}

TEST_CASE("group operations") {
    Rng rng(317);
    for (int n = 0; n < 50; ++n) {
        const CoverPoint p{rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-6, 6)};
        const CoverPoint e = group_mul(p, group_inv(p));
        CHECK(std::abs(e.x) <= 1e-12);
        CHECK(std::abs(e.y) <= 1e-12);
        CHECK(std::abs(e.s) <= 1e-12);
    }

    // pure translations compose additively
    const CoverPoint t = group_mul({1, 2, 0}, {3, -1, 0});
    CHECK(t.x == Approx(4.0).margin(1e-14));
    CHECK(t.y == Approx(1.0).margin(1e-14));
    CHECK(t.s == 0.0);

    const CoverPoint r = group_mul({1, 0, kPi / 2}, {1, 0, 0});
    CHECK(r.x == Approx(1.0).margin(1e-14));
    CHECK(r.y == Approx(-1.0).margin(1e-14));
    CHECK(r.s == Approx(kPi / 2).margin(1e-14));
}

TEST_CASE("projection and lifts") {
    CHECK(project({0, 0, 3 * kPi}).s == Approx(kPi).margin(1e-12));
    CHECK(project({0, 0, kPi}).s == Approx(kPi).margin(1e-12));
    CHECK(project({0, 0, -kPi}).s == Approx(kPi).margin(1e-12));
    CHECK(project({0, 0, 0.3}).s == Approx(0.3).margin(1e-14));

    const auto ls = lifts({0.5, -0.5, 0.0}, -1, 1);
    REQUIRE(ls.size() == 3);
    CHECK(ls[0].s == Approx(-2 * kPi).margin(1e-14));
    CHECK(ls[1].s == 0.0);
    CHECK(ls[2].s == Approx(2 * kPi).margin(1e-14));

    Rng rng(331);
    for (int n = 0; n < 20; ++n) {
        const GroupPoint q{rng.uniform(-2, 2), rng.uniform(-2, 2),
                           normalize_angle(rng.uniform(-3, 3))};
        for (int k = -2; k <= 2; ++k) {
            const GroupPoint back = project(lift(q, k));
            CHECK(back.x == q.x);
            CHECK(back.y == q.y);
            CHECK(angle_distance(back.s, q.s) <= 1e-12);
        }
    }
}

TEST_CASE("symmetry descends exactly for integer 1/sqrt(nu)") {
    Rng rng(337);
    for (int n = 0; n < 10; ++n) {
        const GroupPoint q{rng.uniform(0.5, 2.0), rng.uniform(0.5, 2.0),
                           normalize_angle(rng.uniform(-3, 3))};
        CHECK(symmetry_welldefined(0.25, q, -3, 3).consistent);
        CHECK(symmetry_welldefined(1.0, q, -3, 3).consistent);
    }
    const GroupPoint q{1.0, 0.0, 1.0};
    CHECK_FALSE(symmetry_welldefined(2.0, q, -1, 1).consistent);
}

TEST_CASE("symmetric-space criterion") {
    CHECK(is_symmetric_space_E02(1.0 / 9.0));
    CHECK(is_symmetric_space_E02(0.25));
    CHECK(is_symmetric_space_E02(1.0));
    CHECK_FALSE(is_symmetric_space_E02(0.5));
    CHECK_FALSE(is_symmetric_space_E02(2.0));
    CHECK_FALSE(is_symmetric_space_E02(3.0));
    CHECK_FALSE(is_symmetric_space_E02(4.0)); // 1/sqrt(nu) = 1/2
}

TEST_CASE("geodesic CSV export") {
    const AlgebraVector v{1, 0, 1};
    const GeodesicPath path = integrate_geodesic(4.0, v, 1.0, 1e-2);
    std::ostringstream os;
    const double dev = write_geodesic_csv(os, 4.0, v, path);
    CHECK(dev <= 1e-8);

    std::istringstream is(os.str());
    std::string header;
    std::getline(is, header);
    CHECK(header == "t,x,y,s,alpha1,alpha2,alpha3,deviation");
    int rows = 0;
    for (std::string line; std::getline(is, line);) ++rows;
    CHECK(rows == static_cast<int>(path.samples.size()));

    // the plain export carries the sample columns only
    std::ostringstream os2;
    write_geodesic_csv(os2, path);
    std::istringstream is2(os2.str());
    std::getline(is2, header);
    CHECK(header == "t,x,y,s,alpha1,alpha2,alpha3");
}
