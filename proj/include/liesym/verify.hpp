#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "liesym/classification.hpp"
#include "liesym/curvature.hpp"
#include "liesym/geodesics.hpp"
#include "liesym/milnor.hpp"

// Verification harness: one check per acceptance criterion, each with a
// pinned tolerance, a deterministic seeded sample set, and a measured
// worst-case value. Shared by the `verify-paper` CLI command and the
// acceptance test binary.

namespace liesym {

struct CheckResult {
    std::string check_id;
    std::string module;      // owning module, usable as an --only filter
    std::string claim;
    bool pass = false;
    double measured = 0.0;   // worst observed value (see claim)
    double expected = 0.0;   // bound the measured value is compared against
    double tolerance = 0.0;  // decision tolerance used inside the check
    std::string detail;
};

struct VerifyOptions {
    std::uint64_t seed = 42;
    std::optional<double> tol_override; // replaces every decision tolerance
    std::string only;                   // substring filter on check ids
};

namespace verify_detail {

inline double tol_or(const VerifyOptions& opt, double pinned) {
    return opt.tol_override ? *opt.tol_override : pinned;
}

inline Mat3 random_spd(Rng& rng) {
    Mat3 b;
    for (int i = 0; i < 9; ++i) b.a[i] = rng.uniform(-1.0, 1.0);
    Mat3 g = transpose(b) * b;
    for (int i = 0; i < 3; ++i) g(i, i) += 0.5;
    return g;
}

inline double frobenius(const Mat3& m) {
    double s = 0.0;
    for (double x : m.a) s += x * x;
    return std::sqrt(s);
}

// Random invertible matrix with condition number below ~1e3.
inline Mat3 random_well_conditioned(Rng& rng) {
    for (;;) {
        Mat3 p;
        for (int i = 0; i < 9; ++i) p.a[i] = rng.uniform(-1.0, 1.0);
        if (std::abs(det(p)) < 0.05) continue;
        if (frobenius(p) * frobenius(inverse(p)) > 1e3) continue;
        return p;
    }
}

inline Vec3 cover_to_vec(const CoverPoint& p) { return {p.x, p.y, p.s}; }
inline CoverPoint vec_to_cover(const Vec3& v) { return {v[0], v[1], v[2]}; }

// Central finite-difference Jacobian of a map on cover coordinates.
template <typename F>
inline Mat3 fd_jacobian(F&& f, const CoverPoint& p, double h = 1e-5) {
    Mat3 j;
    const Vec3 base = cover_to_vec(p);
    for (int col = 0; col < 3; ++col) {
        Vec3 hi = base, lo = base;
        hi[col] += h;
        lo[col] -= h;
        const Vec3 fp = cover_to_vec(f(vec_to_cover(hi)));
        const Vec3 fm = cover_to_vec(f(vec_to_cover(lo)));
        for (int row = 0; row < 3; ++row) j(row, col) = (fp[row] - fm[row]) / (2.0 * h);
    }
    return j;
}

// Left-invariant metric at p, transported from the identity by left
// translation: M(p) = J^T diag(1,1,nu) J with J the differential of
// q -> p^{-1} q at p, itself obtained by finite differences of group_mul.
inline Mat3 metric_at(double nu, const CoverPoint& p) {
    const CoverPoint pinv = group_inv(p);
    const Mat3 j = fd_jacobian([&pinv](const CoverPoint& q) { return group_mul(pinv, q); }, p);
    return transpose(j) * Mat3::diag(1.0, 1.0, nu) * j;
}

} // namespace verify_detail

// -----------------------------------------------------------------------
// AC1: unimodular solution set on the grid {0, 0.5, ..., 3}^3.

inline CheckResult check_unimodular_grid(const VerifyOptions& opt) {
    using namespace verify_detail;
    CheckResult r;
    r.check_id = "AC1-unimodular-solution-set";
    r.module = "classification";
    r.claim = "On the grid {0,0.5,...,3}^3 the residual system vanishes exactly on the "
              "families (0,b,b),(a,a,0),(a,0,a),(a,a,a); nabla R <= 1e-9 there and >= 1e-3 "
              "elsewhere";
    const double tol = tol_or(opt, 1e-9);
    r.tolerance = tol;

    int mismatches = 0;
    double max_on = 0.0, min_off = 1e300;
    const double eq = 1e-12;
    for (int ia = 0; ia <= 6; ++ia)
        for (int ib = 0; ib <= 6; ++ib)
            for (int ic = 0; ic <= 6; ++ic) {
                const double a = 0.5 * ia, b = 0.5 * ib, c = 0.5 * ic;
                const bool member = (std::abs(a) <= eq && std::abs(b - c) <= eq) ||
                                    (std::abs(c) <= eq && std::abs(a - b) <= eq) ||
                                    (std::abs(b) <= eq && std::abs(a - c) <= eq) ||
                                    (std::abs(a - b) <= eq && std::abs(b - c) <= eq);
                const double poly = unimodular_residuals(a, b, c).max_abs();
                const double nab = detail::nabla_residual_unimodular(a, b, c);
                if ((poly <= tol) != member) ++mismatches;
                if (member) {
                    max_on = std::max(max_on, nab);
                    if (nab > tol) ++mismatches;
                } else {
                    min_off = std::min(min_off, nab);
                    if (nab < 1e-3) ++mismatches;
                }
            }
    r.measured = static_cast<double>(mismatches);
    r.expected = 0.0;
    r.pass = mismatches == 0;
    std::ostringstream d;
    d << "max nabla-R on solution set " << max_on << ", min off it " << min_off;
    r.detail = d.str();
    return r;
}

// -----------------------------------------------------------------------
// AC2: non-unimodular solution set on sampled admissible tuples.

inline CheckResult check_nonunimodular_samples(const VerifyOptions& opt) {
    using namespace verify_detail;
    CheckResult r;
    r.check_id = "AC2-nonunimodular-solution-set";
    r.module = "classification";
    r.claim = "For 200 admissible tuples (ac+bd=0, a+d>0) the residual system vanishes iff "
              "the normalized tuple lies in (a,b,-b,a) or (a,0,0,0), in agreement with nabla R";
    const double tol = tol_or(opt, 1e-9);
    r.tolerance = tol;
    Rng rng(opt.seed + 2);

    int mismatches = 0, solutions = 0;
    for (int n = 0; n < 200; ++n) {
        double a, b, c, d;
        if (n < 120) { // generic admissible tuples
            do {
                a = rng.uniform(-1.0, 2.5);
                d = rng.uniform(-1.0, 2.5);
            } while (a + d <= 0.1 || std::hypot(a, d) <= 0.1);
            const double t = rng.uniform(-2.0, 2.0);
            const double rr = std::hypot(a, d);
            b = t * a / rr;
            c = -t * d / rr;
        } else if (n < 160) { // (a, b, -b, a)
            a = rng.uniform(0.2, 2.5);
            d = a;
            b = rng.uniform(0.05, 2.0);
            c = -b;
        } else { // (a, 0, 0, 0)
            a = rng.uniform(0.2, 2.5);
            b = c = d = 0.0;
        }
        const auto nrm = normalize_nonunimodular(a, b, c, d);
        const bool member =
            (std::abs(nrm[0] - nrm[3]) <= tol && std::abs(nrm[1] + nrm[2]) <= tol) ||
            (std::abs(nrm[1]) <= tol && std::abs(nrm[2]) <= tol && std::abs(nrm[3]) <= tol);
        const double poly = nonunimodular_residuals(nrm[0], nrm[1], nrm[2], nrm[3]).max_abs();
        const double nab = detail::nabla_residual_nonunimodular(nrm[0], nrm[1], nrm[2], nrm[3]);
        const bool sym_poly = poly <= tol;
        const bool sym_nabla = nab <= tol;
        if (sym_poly != member || sym_nabla != member) ++mismatches;
        if (member) ++solutions;
    }
    r.measured = static_cast<double>(mismatches);
    r.expected = 0.0;
    r.pass = mismatches == 0;
    std::ostringstream d;
    d << solutions << " of 200 tuples in the solution families";
    r.detail = d.str();
    return r;
}

// -----------------------------------------------------------------------
// AC3: normal-form classification sweep.

inline CheckResult check_halee_sweep(const VerifyOptions& opt) {
    CheckResult r;
    r.check_id = "AC3-normal-form-sweep";
    r.module = "classification";
    r.claim = "classify_halee matches the classification: E0tilde2 symmetric iff mu=1; SU2 iff "
              "lambda=mu=nu; GI always; G0-A2 always; G0-A1 never; GD(D>1) iff mu=D";
    const double tol = verify_detail::tol_or(opt, kTolSym);
    r.tolerance = tol;

    int mismatches = 0, cases = 0;
    auto expect = [&](const HaLeeMetric& hl, bool want) {
        ++cases;
        const ClassificationVerdict v = classify_halee(hl, tol);
        if (v.locally_symmetric != want) ++mismatches;
        if (v.locally_symmetric && v.witness_p && v.witness_defect > kTolFrame) ++mismatches;
    };

    for (double mu : {0.25, 0.5, 0.75, 1.0})
        for (double nu : {0.5, 1.0, 2.0})
            expect({GroupName::E0tilde2, mu, nu, std::nullopt, std::nullopt}, mu == 1.0);
    for (auto [l, m, n] : std::initializer_list<std::array<double, 3>>{
             {1, 1, 1}, {2, 2, 2}, {2, 1, 1}, {2, 2, 1}})
        expect({GroupName::SU2, m, n, l, std::nullopt}, l == m && m == n);
    for (double nu : {0.3, 1.0, 4.0})
        expect({GroupName::GI, std::nullopt, nu, std::nullopt, std::nullopt}, true);
    for (double nu : {0.5, 1.0, 2.0}) // A2 form
        expect({GroupName::G0, std::nullopt, nu, std::nullopt, std::nullopt}, true);
    for (auto [mu, nu] : std::initializer_list<std::array<double, 2>>{{1, 1}, {0.5, 2}, {2, 0.7}})
        expect({GroupName::G0, mu, nu, std::nullopt, std::nullopt}, false); // A1 form
    for (double dd : {1.5, 2.0, 4.0})
        for (double nu : {0.5, 2.0})
            for (double mu : {(1.0 + dd) / 2.0, dd})
                expect({GroupName::GD, mu, nu, std::nullopt, dd}, mu == dd);

    r.measured = static_cast<double>(mismatches);
    r.expected = 0.0;
    r.pass = mismatches == 0;
    std::ostringstream d;
    d << cases << " parameter cases checked";
    r.detail = d.str();
    return r;
}

// -----------------------------------------------------------------------
// AC4: Koszul pipeline equals the closed-form curvature components.

inline CheckResult check_curvature_closed_forms(const VerifyOptions& opt) {
    using namespace verify_detail;
    CheckResult r;
    r.check_id = "AC4-curvature-closed-forms";
    r.module = "curvature";
    r.claim = "Koszul-pipeline curvature equals the closed-form components on 500 random "
              "tuples; the round family gives R(e1,e2)e2 = -(a^2/4) e1, not -(a^2/2) e1";
    const double tol = tol_or(opt, 1e-10);
    r.tolerance = tol;
    Rng rng(opt.seed + 4);

    double worst = 0.0;
    for (int n = 0; n < 250; ++n) {
        const double a = rng.uniform(-3.0, 3.0);
        const double b = rng.uniform(-3.0, 3.0);
        const double c = rng.uniform(-3.0, 3.0);
        const StructureTensor st = catalog::unimodular_milnor(a, b, c);
        const CurvatureTensor rk = curvature(connection(st), st);
        worst = std::max(worst, curvature_max_diff(rk, closed_form_R_unimodular(a, b, c)));
    }
    for (int n = 0; n < 250; ++n) {
        double a, d;
        do {
            a = rng.uniform(-3.0, 3.0);
            d = rng.uniform(-3.0, 3.0);
        } while (a + d <= 0.1 || std::hypot(a, d) <= 0.1);
        const double t = rng.uniform(-3.0, 3.0);
        const double rr = std::hypot(a, d);
        const double b = t * a / rr, c = -t * d / rr;
        const StructureTensor st = catalog::nonunimodular_milnor(a, b, c, d);
        const CurvatureTensor rk = curvature(connection(st), st);
        worst = std::max(worst, curvature_max_diff(rk, closed_form_R_nonunimodular(a, b, c, d)));
    }

    // Round family (a,a,a): the pipeline must give coefficient -a^2/4.
    bool anomaly_ok = true;
    for (double a : {0.7, 1.0, 1.7}) {
        const StructureTensor st = catalog::unimodular_milnor(a, a, a);
        const CurvatureTensor rk = curvature(connection(st), st);
        const double coeff = rk(0, 1, 1, 0); // <R(e1,e2)e2, e1>
        if (std::abs(coeff + a * a / 4.0) > tol) anomaly_ok = false;
        if (std::abs(coeff + a * a / 2.0) < 1e-3) anomaly_ok = false;
    }

    r.measured = worst;
    r.expected = tol;
    r.pass = worst <= tol && anomaly_ok;
    r.detail = anomaly_ok ? "round-family coefficient is -a^2/4"
                          : "round-family coefficient check failed";
    return r;
}

// -----------------------------------------------------------------------
// AC5: the invariant D on the solution families.

inline CheckResult check_invariant_D(const VerifyOptions& opt) {
    using namespace verify_detail;
    CheckResult r;
    r.check_id = "AC5-invariant-D";
    r.module = "milnor";
    r.claim = "milnor_D(a,b,-b,a) = 1+(b/a)^2 and milnor_D(a,0,0,0) = 0 for 50 random (a,b)";
    const double tol = tol_or(opt, 1e-12);
    r.tolerance = tol;
    Rng rng(opt.seed + 5);

    double worst = 0.0;
    for (int n = 0; n < 50; ++n) {
        const double a = rng.uniform(0.1, 3.0);
        const double b = rng.uniform(0.1, 3.0);
        const double d1 = milnor_D(a, b, -b, a);
        const double want = 1.0 + (b / a) * (b / a);
        worst = std::max(worst, std::abs(d1 - want) / want);
        worst = std::max(worst, std::abs(milnor_D(a, 0.0, 0.0, 0.0)));
    }
    r.measured = worst;
    r.expected = tol;
    r.pass = worst <= tol;
    return r;
}

// -----------------------------------------------------------------------
// AC6: closed-form geodesics against the RK4 integrator.

inline CheckResult check_geodesic_oracle(const VerifyOptions& opt) {
    CheckResult r;
    r.check_id = "AC6-geodesic-oracle";
    r.module = "geodesics";
    r.claim = "Closed-form geodesics match RK4 within 1e-8 over t in [0,10] for 50 random "
              "(nu, v); energy |alpha|^2 drift <= 1e-9";
    const double tol = verify_detail::tol_or(opt, 1e-8);
    r.tolerance = tol;
    Rng rng(opt.seed + 6);

    double worst_dev = 0.0, worst_energy = 0.0;
    for (int n = 0; n < 50; ++n) {
        const double nu = rng.uniform(0.2, 5.0);
        AlgebraVector v;
        do {
            v = {rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
        } while (v.norm2() > 4.0);
        const GeodesicPath path = integrate_geodesic(nu, v, 10.0, 1e-3);
        worst_energy = std::max(worst_energy, path.energy_drift());
        for (const auto& s : path.samples) {
            const CoverPoint cf = closed_geodesic(nu, v, s.t);
            worst_dev = std::max({worst_dev, std::abs(s.point.x - cf.x),
                                  std::abs(s.point.y - cf.y), std::abs(s.point.s - cf.s)});
        }
    }
    r.measured = worst_dev;
    r.expected = tol;
    r.pass = worst_dev <= tol && worst_energy <= verify_detail::tol_or(opt, 1e-9);
    std::ostringstream d;
    d << "energy drift " << worst_energy;
    r.detail = d.str();
    return r;
}

// -----------------------------------------------------------------------
// AC7: exp/log round trip.

inline CheckResult check_exp_log_roundtrip(const VerifyOptions& opt) {
    CheckResult r;
    r.check_id = "AC7-exp-log-roundtrip";
    r.module = "geodesics";
    r.claim = "log_e(exp_e(v)) = v within 1e-9 on 100 domain-valid samples across "
              "nu in {1/9, 1/4, 1, 2, 4}";
    const double tol = verify_detail::tol_or(opt, 1e-9);
    r.tolerance = tol;
    Rng rng(opt.seed + 7);

    double worst = 0.0;
    for (double nu : {1.0 / 9.0, 0.25, 1.0, 2.0, 4.0}) {
        const double lam = twist_rate(nu);
        const double v3_max = lam == 0.0 ? 6.0 : 0.9 * 2.0 * kPi / std::abs(lam);
        for (int n = 0; n < 20; ++n) {
            const AlgebraVector v = {rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0),
                                     rng.uniform(-v3_max, v3_max)};
            const AlgebraVector back = log_e(nu, exp_e(nu, v));
            worst = std::max({worst, std::abs(back.v1 - v.v1), std::abs(back.v2 - v.v2),
                              std::abs(back.v3 - v.v3)});
        }
    }
    r.measured = worst;
    r.expected = tol;
    r.pass = worst <= tol;
    return r;
}

// -----------------------------------------------------------------------
// AC8: geodesic-symmetry properties.

inline CheckResult check_symmetry_properties(const VerifyOptions& opt) {
    using namespace verify_detail;
    CheckResult r;
    r.check_id = "AC8-symmetry-properties";
    r.module = "geodesics";
    r.claim = "symmetry_cover is an involution (1e-12), fixes the identity exactly, has "
              "differential -I at e (1e-6), and pulls the left-invariant metric back to "
              "itself near the identity (1e-5)";
    const double tol_inv = tol_or(opt, 1e-12);
    const double tol_diff = tol_or(opt, 1e-6);
    const double tol_iso = tol_or(opt, 1e-5);
    r.tolerance = tol_iso;
    Rng rng(opt.seed + 8);

    double worst_inv = 0.0, worst_diff = 0.0, worst_iso = 0.0;
    bool identity_fixed = true;
    for (double nu : {0.25, 1.0, 2.0}) {
        const CoverPoint se = symmetry_cover(nu, identity_point());
        if (se.x != 0.0 || se.y != 0.0 || se.s != 0.0) identity_fixed = false;

        const Mat3 j0 = fd_jacobian([nu](const CoverPoint& q) { return symmetry_cover(nu, q); },
                                    identity_point());
        worst_diff = std::max(worst_diff, max_abs(j0 + Mat3::identity()));

        for (int n = 0; n < 100; ++n) {
            const CoverPoint p = {rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0),
                                  rng.uniform(-3.0, 3.0)};
            const CoverPoint pp = symmetry_cover(nu, symmetry_cover(nu, p));
            worst_inv = std::max({worst_inv, std::abs(pp.x - p.x), std::abs(pp.y - p.y),
                                  std::abs(pp.s - p.s)});
        }
        for (int n = 0; n < 100; ++n) {
            const CoverPoint p = {rng.uniform(-1e-6, 1e-6), rng.uniform(-1e-6, 1e-6),
                                  rng.uniform(-1.0, 1.0)};
            const Mat3 js =
                fd_jacobian([nu](const CoverPoint& q) { return symmetry_cover(nu, q); }, p);
            const Mat3 pulled = transpose(js) * metric_at(nu, symmetry_cover(nu, p)) * js;
            worst_iso = std::max(worst_iso, max_abs(pulled - metric_at(nu, p)));
        }
    }
    r.measured = worst_iso;
    r.expected = tol_iso;
    r.pass = identity_fixed && worst_inv <= tol_inv && worst_diff <= tol_diff &&
             worst_iso <= tol_iso;
    std::ostringstream d;
    d << "involution " << worst_inv << ", differential " << worst_diff << ", isometry "
      << worst_iso;
    r.detail = d.str();
    return r;
}

// -----------------------------------------------------------------------
// AC9: the symmetric-space criterion on E_0(2).

inline CheckResult check_symmetry_criterion(const VerifyOptions& opt) {
    CheckResult r;
    r.check_id = "AC9-symmetric-space-criterion";
    r.module = "geodesics";
    r.claim = "Symmetry descends through every lift (k in -3..3, 20 random points) exactly for "
              "nu in {1, 1/4, 1/9}, fails for nu in {0.5, 2, 3}; matches is_symmetric_space_E02";
    const double tol = verify_detail::tol_or(opt, 1e-9);
    r.tolerance = tol;
    Rng rng(opt.seed + 9);

    int mismatches = 0;
    for (double nu : {1.0, 0.25, 1.0 / 9.0, 0.5, 2.0, 3.0}) {
        bool all_consistent = true;
        for (int n = 0; n < 20; ++n) {
            const double radius = rng.uniform(0.5, 2.0);
            const double phi = rng.uniform(-kPi, kPi);
            const GroupPoint q = {radius * std::cos(phi), radius * std::sin(phi),
                                  rng.uniform(-3.0, 3.0)};
            const GroupPoint qn = {q.x, q.y, normalize_angle(q.s)};
            if (!symmetry_welldefined(nu, qn, -3, 3, tol).consistent) all_consistent = false;
        }
        if (all_consistent != is_symmetric_space_E02(nu)) ++mismatches;
    }
    r.measured = static_cast<double>(mismatches);
    r.expected = 0.0;
    r.pass = mismatches == 0;
    return r;
}

// -----------------------------------------------------------------------
// AC10: structural invariants and basis-change invariance.

inline CheckResult check_structural_invariants(const VerifyOptions& opt) {
    using namespace verify_detail;
    CheckResult r;
    r.check_id = "AC10-structural-invariants";
    r.module = "curvature";
    r.claim = "Connection is torsion-free and metric-compatible (1e-12); curvature has the "
              "pair/antisymmetry and first-Bianchi identities (1e-10); classification is "
              "invariant under 50 random basis changes per case";
    const double tol_conn = tol_or(opt, 1e-12);
    const double tol_curv = tol_or(opt, 1e-10);
    r.tolerance = tol_curv;
    Rng rng(opt.seed + 10);

    double worst_conn = 0.0, worst_curv = 0.0;
    for (int n = 0; n < 50; ++n) {
        StructureTensor st;
        if (n % 2 == 0) {
            st = catalog::unimodular_milnor(rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0),
                                            rng.uniform(-3.0, 3.0));
        } else {
            double a, d;
            do {
                a = rng.uniform(-3.0, 3.0);
                d = rng.uniform(-3.0, 3.0);
            } while (a + d <= 0.1 || std::hypot(a, d) <= 0.1);
            const double t = rng.uniform(-3.0, 3.0);
            const double rr = std::hypot(a, d);
            st = catalog::nonunimodular_milnor(a, t * a / rr, -t * d / rr, d);
        }
        const ConnectionCoefficients conn = connection(st);
        worst_conn = std::max({worst_conn, connection_torsion_residual(conn, st),
                               connection_metric_residual(conn)});
        const CurvatureTensor rk = curvature(conn, st);
        worst_curv = std::max({worst_curv, curvature_symmetry_residual(rk),
                               first_bianchi_residual(rk)});
    }

    // Classification invariance under random basis changes.
    int mismatches = 0;
    const std::vector<HaLeeMetric> cases = {
        {GroupName::R3, std::nullopt, std::nullopt, std::nullopt, std::nullopt},
        {GroupName::E0tilde2, 1.0, 2.0, std::nullopt, std::nullopt},
        {GroupName::E0tilde2, 0.5, 1.0, std::nullopt, std::nullopt},
        {GroupName::SU2, 1.0, 1.0, 1.0, std::nullopt},
        {GroupName::SU2, 1.0, 1.0, 2.0, std::nullopt},
        {GroupName::GI, std::nullopt, 3.0, std::nullopt, std::nullopt},
        {GroupName::G0, std::nullopt, 2.0, std::nullopt, std::nullopt},
        {GroupName::G0, 1.0, 1.0, std::nullopt, std::nullopt},
        {GroupName::GD, 2.0, 1.0, std::nullopt, 2.0},
        {GroupName::GD, 1.5, 1.0, std::nullopt, 2.0},
    };
    for (const auto& hl : cases) {
        const MetricLieAlgebra mla = build_halee(hl);
        const bool base = is_locally_symmetric(mla).locally_symmetric;
        for (int n = 0; n < 50; ++n) {
            const BasisChange bc{random_well_conditioned(rng)};
            const MetricLieAlgebra moved = change_basis(mla, bc);
            if (is_locally_symmetric(moved).locally_symmetric != base) ++mismatches;
        }
    }

    r.measured = std::max(worst_conn, worst_curv);
    r.expected = tol_curv;
    r.pass = worst_conn <= tol_conn && worst_curv <= tol_curv && mismatches == 0;
    std::ostringstream d;
    d << "connection residual " << worst_conn << ", curvature residual " << worst_curv << ", "
      << mismatches << " classification mismatches";
    r.detail = d.str();
    return r;
}

// -----------------------------------------------------------------------

inline std::vector<CheckResult> run_verification(const VerifyOptions& opt) {
    using Check = std::function<CheckResult(const VerifyOptions&)>;
    const std::vector<Check> checks = {
        check_unimodular_grid,    check_nonunimodular_samples, check_halee_sweep,
        check_curvature_closed_forms, check_invariant_D,       check_geodesic_oracle,
        check_exp_log_roundtrip,  check_symmetry_properties,   check_symmetry_criterion,
        check_structural_invariants,
    };
    std::vector<CheckResult> results;
    for (const auto& check : checks) {
        CheckResult res = check(opt);
        if (!opt.only.empty() && res.check_id.find(opt.only) == std::string::npos &&
            res.module.find(opt.only) == std::string::npos)
            continue;
        results.push_back(std::move(res));
    }
    return results;
}

} // namespace liesym
