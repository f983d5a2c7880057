#include <doctest.h>

#include <cmath>

#include "constangle/diffgeo.hpp"
#include "constangle/surface.hpp"
#include "test_util.hpp"

using namespace constangle;

namespace {

constexpr double kPi = Angle::kPi;

ParamSurface plane_patch() {
    ParamSurface S;
    S.domain = {-2, 2, -2, 2};
    S.eval = [](double u, double v) { return Vec3{u, v, 0}; };
    return S;
}

ParamSurface sphere_patch(double radius = 1.0) {
    ParamSurface S;
    S.domain = {-1.2, 1.2, -1.2, 1.2};
    S.eval = [radius](double u, double v) {
        return Vec3{radius * std::cos(u) * std::cos(v), radius * std::cos(u) * std::sin(v),
                    radius * std::sin(u)};
    };
    return S;
}

ParamSurface cylinder_patch(double rho) {
    ParamSurface S;
    S.domain = {-2, 2, -2, 2};
    S.eval = [rho](double u, double v) {
        return Vec3{rho * std::cos(v), rho * std::sin(v), u};
    };
    return S;
}

}  // namespace

TEST_CASE("fd jet of a plane has vanishing second derivatives") {
    const SurfaceJet j = jet(plane_patch(), 0.3, -0.4);
    CHECK(j.Fuu.norm() < 1e-9);
    CHECK(j.Fuv.norm() < 1e-9);
    CHECK(j.Fvv.norm() < 1e-9);
    CHECK((j.Fu - Vec3{1, 0, 0}).norm() < 1e-11);
    CHECK((j.Fv - Vec3{0, 1, 0}).norm() < 1e-11);
}

TEST_CASE("fd jet of the unit sphere satisfies Fuu = -F") {
    const SurfaceJet j = jet(sphere_patch(), 0.4, 0.9);
    CHECK((j.Fuu + j.F).norm() < 1e-7);
}

TEST_CASE("fd jet refuses stencils that leave the domain") {
    CHECK_THROWS_AS(jet(plane_patch(), 1.9999, 0.0), TooCloseToBoundary);
}

TEST_CASE("dini analytic vs fd jet at a spot check point") {
    const ParamSurface S = dini_surface(Angle(kPi / 3), 1.0, {0.15, 1.45, 0.0, 1.0});
    const SurfaceJet ja = jet(S, 0.8, 0.3);
    const SurfaceJet jf = jet_fd(S, 0.8, 0.3);
    CHECK((ja.Fuu - jf.Fuu).norm() < 1e-6);
    CHECK((ja.Fuv - jf.Fuv).norm() < 1e-6);
    CHECK((ja.Fvv - jf.Fvv).norm() < 1e-6);
}

TEST_CASE("fundamental forms of the classic patches") {
    // plane: second form vanishes
    const auto fp = fundamental_forms(jet(plane_patch(), 0.1, 0.2));
    CHECK(std::abs(fp.L) < 1e-9);
    CHECK(std::abs(fp.M) < 1e-9);
    CHECK(std::abs(fp.N2) < 1e-9);

    // unit sphere: |K| = 1
    const auto cs = curvatures(fundamental_forms(jet(sphere_patch(), 0.3, 0.7)));
    CHECK(std::abs(cs.K) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(cs.umbilic);

    // cylinder of radius rho: K = 0, |H| = 1/(2 rho)
    const double rho = 1.7;
    const auto cc = curvatures(fundamental_forms(jet(cylinder_patch(rho), 0.2, 0.4)));
    CHECK(std::abs(cc.K) < 1e-8);
    CHECK(std::abs(cc.H) == doctest::Approx(1.0 / (2 * rho)).epsilon(1e-7));
}

TEST_CASE("degenerate jets are rejected") {
    SurfaceJet j;
    j.Fu = {1, 0, 0};
    j.Fv = {2, 0, 0};  // parallel
    CHECK_THROWS_AS(fundamental_forms(j), DegeneratePoint);
}

TEST_CASE("dini gaussian curvature equals -c^2 tan^2 theta") {
    const double c = 2.0;
    const ParamSurface S = dini_surface(Angle(kPi / 4), c, dini_band_domain(c));
    test_util::Rng rng(37);
    for (int i = 0; i < 50; ++i) {
        const double u = rng.uniform(S.domain.u0, S.domain.u1);
        const double v = rng.uniform(S.domain.v0, S.domain.v1);
        const auto curv = curvatures(fundamental_forms(jet(S, u, v)));
        CHECK(curv.K == doctest::Approx(-4.0).epsilon(1e-10));
    }
}

TEST_CASE("catenoid is minimal, logspiral cylinder is flat") {
    const ParamSurface cat =
        rotational_surface(RotationalProfile::catenoid(1.0), {1.1, 3.0, 0.0, 2 * kPi});
    const ParamSurface cyl = logspiral_cylinder(Angle(0.8), 1.4, {0.5, 2.0, 0.0, 1.0});
    test_util::Rng rng(41);
    for (int i = 0; i < 50; ++i) {
        const auto ccat = curvatures(fundamental_forms(
            jet(cat, rng.uniform(1.1, 3.0), rng.uniform(0.0, 2 * kPi))));
        CHECK(std::abs(ccat.H) < 1e-10);
        const auto ccyl = curvatures(fundamental_forms(
            jet(cyl, rng.uniform(0.5, 2.0), rng.uniform(0.0, 1.0))));
        CHECK(std::abs(ccyl.K) < 1e-10);
    }
}

TEST_CASE("principal data is consistent: K = k1 k2, 2H = k1 + k2, directions orthogonal") {
    const ParamSurface S = dini_surface(Angle(1.0), 1.0, {0.15, 1.45, 0.0, 1.0});
    test_util::Rng rng(43);
    for (int i = 0; i < 30; ++i) {
        const double u = rng.uniform(0.2, 1.4);
        const double v = rng.uniform(0.1, 0.9);
        const auto f = fundamental_forms(jet(S, u, v));
        const auto r = curvatures(f);
        CHECK(r.K == doctest::Approx(r.k1 * r.k2).epsilon(1e-10));
        CHECK(2 * r.H == doctest::Approx(r.k1 + r.k2).epsilon(1e-10));
        REQUIRE(!r.umbilic);
        const double ip = f.E * r.dir1.du * r.dir2.du +
                          f.Fm * (r.dir1.du * r.dir2.dv + r.dir1.dv * r.dir2.du) +
                          f.G * r.dir1.dv * r.dir2.dv;
        CHECK(std::abs(ip) < 1e-10);
    }
}

TEST_CASE("dini shape operator matches the closed-form eigensystem") {
    const double theta = kPi / 3, c = 1.0;
    const ParamSurface S = dini_surface(Angle(theta), c, {0.15, 1.45, -0.5, 0.5});
    test_util::Rng rng(47);
    for (int i = 0; i < 25; ++i) {
        const double u = rng.uniform(0.2, 1.4);
        const double v = rng.uniform(-0.4, 0.4);
        const DiniGeometry g = dini_geometry(Angle(theta), c, u, v);
        const SurfaceJet j = jet(S, u, v);
        const auto f = fundamental_forms(j);
        const auto r = curvatures(f);

        // the grid normal may be the opposite of the frame normal; the shape
        // operator flips sign with it
        const Vec3 n_frame = dini_frame_to_cartesian(g.normal, Angle(theta), c, u, v);
        const double sgn = dot(n_frame, f.normal) > 0 ? 1.0 : -1.0;
        const double k_a = sgn * g.A11;
        const double k_b = sgn * g.lambda;
        CHECK(std::max(k_a, k_b) == doctest::Approx(r.k1).epsilon(1e-5));
        CHECK(std::min(k_a, k_b) == doctest::Approx(r.k2).epsilon(1e-5));

        // eigendirections align with e1, e2 (up to sign)
        const Vec3 d1 = r.dir1.du * j.Fu + r.dir1.dv * j.Fv;
        const Vec3 d2 = r.dir2.du * j.Fu + r.dir2.dv * j.Fv;
        const Vec3 e1 = dini_frame_to_cartesian(g.e1, Angle(theta), c, u, v);
        const Vec3 e2 = dini_frame_to_cartesian(g.e2, Angle(theta), c, u, v);
        const Vec3& dA = (k_a >= k_b) ? d1 : d2;  // direction paired with A11
        const Vec3& dB = (k_a >= k_b) ? d2 : d1;
        const double misalign1 = std::min(angle_between(dA, e1).radians(),
                                          kPi - angle_between(dA, e1).radians());
        const double misalign2 = std::min(angle_between(dB, e2).radians(),
                                          kPi - angle_between(dB, e2).radians());
        CHECK(misalign1 < 1e-4);
        CHECK(misalign2 < 1e-4);
    }
}

TEST_CASE("dini second form in the chart basis matches the closed forms") {
    const double theta = 0.9, c = 1.1;
    const Interval band = dini_admissible_band(c);
    const ParamSurface S =
        dini_surface(Angle(theta), c, {band.lo + 0.02, band.hi - 0.02, 0.0, 1.0});
    const double tt = std::tan(theta);
    test_util::Rng rng(53);
    for (int i = 0; i < 25; ++i) {
        const double u = rng.uniform(S.domain.u0, S.domain.u1);
        const double v = rng.uniform(0.05, 0.95);
        const DiniGeometry g = dini_geometry(Angle(theta), c, u, v);
        const SurfaceJet j = jet(S, u, v);
        const auto f = fundamental_forms(j);
        const Vec3 n_frame = dini_frame_to_cartesian(g.normal, Angle(theta), c, u, v);
        const double sgn = dot(n_frame, f.normal) > 0 ? 1.0 : -1.0;
        const double cu = c * u;
        CHECK(sgn * f.L == doctest::Approx(c * tt * std::cos(cu) / std::sin(cu)).epsilon(1e-5));
        CHECK(sgn * f.M ==
              doctest::Approx(c * tt * std::cos(cu) / std::cos(theta)).epsilon(1e-5));
        CHECK(sgn * f.N2 ==
              doctest::Approx(c * tt * tt * tt * std::sin(cu) * std::cos(cu)).epsilon(1e-5));
        CHECK(sgn * f.L == doctest::Approx(g.h11).epsilon(1e-5));
        CHECK(sgn * f.M == doctest::Approx(g.h12).epsilon(1e-5));
        CHECK(sgn * f.N2 == doctest::Approx(g.h22).epsilon(1e-5));
    }
}

TEST_CASE("fd curvatures converge to analytic at 2nd order in the step") {
    const ParamSurface S = dini_surface(Angle(1.0), 1.0, {0.15, 1.45, -2.0, 2.0});
    const double u = 0.8, v = 0.1;
    const double K_exact = curvatures(fundamental_forms(jet(S, u, v))).K;
    auto K_err = [&](double h) {
        FdSteps steps;
        steps.first = h;
        steps.second = h;
        return std::abs(curvatures(fundamental_forms(jet_fd(S, u, v, steps))).K - K_exact);
    };
    const double e1 = K_err(2e-2);
    const double e2 = K_err(1e-2);
    CHECK(e1 / e2 > 3.0);
    CHECK(e1 / e2 < 5.5);
}

TEST_CASE("cylindrical covariant derivative: the table") {
    // nabla_{dphi} dphi = -r dr
    const Vec3 res = christoffel_cyl({2.0, 0.7, -1.0}, {0, 1, 0},
                                     {Vec3{0, 1, 0}, Vec3{0, 0, 0}});
    CHECK((res - Vec3{-2, 0, 0}).norm() == 0.0);

    // nabla_{dr} dz = 0
    const Vec3 res2 = christoffel_cyl({1.5, 0.2, 0.4}, {1, 0, 0},
                                      {Vec3{0, 0, 1}, Vec3{0, 0, 0}});
    CHECK(res2.norm() == 0.0);

    CHECK_THROWS_AS(christoffel_cyl({0.0, 0.0, 0.0}, {1, 0, 0},
                                    CylVectorJet{Vec3{0, 0, 1}, Vec3{0, 0, 0}}),
                    AxisPoint);
}

TEST_CASE("covariant derivative of the rotation field is k cross X") {
    test_util::Rng rng(59);
    for (int i = 0; i < 40; ++i) {
        const CylPoint p{rng.uniform(0.3, 3.0), rng.uniform(-3.0, 3.0), rng.uniform(-2.0, 2.0)};
        const Vec3 X{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
        // rotation field = dphi, constant cylindrical components
        const Vec3 res = christoffel_cyl(p, X, {Vec3{0, 1, 0}, Vec3{0, 0, 0}});
        const Vec3 lhs = cyl_components_to_cartesian(p, res);
        const Vec3 Xc = cyl_components_to_cartesian(p, X);
        const Vec3 rhs = cross(Vec3{0, 0, 1}, Xc);
        CHECK((lhs - rhs).norm() < 1e-13);
    }
}

TEST_CASE("cylindrical covariant derivative reproduces the flat connection") {
    // a smooth cylindrical vector field
    auto W = [](const CylPoint& p) {
        return Vec3{std::sin(p.phi) * p.z, p.r * p.r * 0.2, std::cos(p.r) + 0.3 * p.z};
    };
    test_util::Rng rng(61);
    for (int i = 0; i < 25; ++i) {
        const CylPoint p{rng.uniform(0.5, 2.5), rng.uniform(-2.0, 2.0), rng.uniform(-1.0, 1.0)};
        const Vec3 X{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};

        // route 1: component derivative along X in coordinate space + the table
        const double t = 1e-6;
        const CylPoint pp{p.r + t * X.x, p.phi + t * X.y, p.z + t * X.z};
        const CylPoint pm{p.r - t * X.x, p.phi - t * X.y, p.z - t * X.z};
        const Vec3 dW = (W(pp) - W(pm)) / (2 * t);
        const Vec3 covariant = christoffel_cyl(p, X, {W(p), dW});
        const Vec3 route1 = cyl_components_to_cartesian(p, covariant);

        // route 2: plain Cartesian directional derivative of the pushforward field
        auto Wc = [&](const Vec3& q) {
            const CylPoint qc = cart_to_cyl(q);
            return cyl_components_to_cartesian(qc, W(qc));
        };
        const Vec3 Xc = cyl_components_to_cartesian(p, X);
        const Vec3 pc = cyl_to_cart(p);
        const double h = 1e-6;
        const Vec3 route2 = (Wc(pc + Xc * h) - Wc(pc - Xc * h)) / (2 * h);

        CHECK((route1 - route2).norm() < 1e-8);
    }
}
