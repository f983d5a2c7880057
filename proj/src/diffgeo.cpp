#include "constangle/diffgeo.hpp"

#include <algorithm>
#include <cmath>

namespace constangle {

SurfaceJet jet(const ParamSurface& S, double u, double v, FdSteps steps) {
    if (S.has_analytic_jet()) return S.analytic_jet(u, v);
    return jet_fd(S, u, v, steps);
}

SurfaceJet jet_fd(const ParamSurface& S, double u, double v, FdSteps steps) {
    const double scale = std::max({1.0, std::abs(u), std::abs(v)});
    const double h1 = steps.first * scale;
    const double h2 = steps.second * scale;
    const double reach = 2 * h2;  // widest stencil offset
    const auto& d = S.domain;
    if (u - reach < d.u0 || u + reach > d.u1 || v - reach < d.v0 || v + reach > d.v1) {
        throw TooCloseToBoundary("finite-difference stencil leaves the domain");
    }

    const auto& f = S.eval;
    SurfaceJet j;
    j.F = f(u, v);
    j.Fu = (f(u + h1, v) - f(u - h1, v)) / (2 * h1);
    j.Fv = (f(u, v + h1) - f(u, v - h1)) / (2 * h1);
    // 5-point pure second partials (4th order); 4-corner mixed, Richardson
    // extrapolated to 4th order so the cross term keeps up with the pure ones.
    j.Fuu = (-f(u + 2 * h2, v) + 16.0 * f(u + h2, v) - 30.0 * f(u, v) +
             16.0 * f(u - h2, v) - f(u - 2 * h2, v)) /
            (12 * h2 * h2);
    j.Fvv = (-f(u, v + 2 * h2) + 16.0 * f(u, v + h2) - 30.0 * f(u, v) +
             16.0 * f(u, v - h2) - f(u, v - 2 * h2)) /
            (12 * h2 * h2);
    auto corners = [&](double h) {
        return (f(u + h, v + h) - f(u + h, v - h) - f(u - h, v + h) + f(u - h, v - h)) /
               (4 * h * h);
    };
    j.Fuv = (4.0 * corners(h2) - corners(2 * h2)) / 3.0;
    return j;
}

FundamentalForms fundamental_forms(const SurfaceJet& j) {
    FundamentalForms f;
    f.E = dot(j.Fu, j.Fu);
    f.Fm = dot(j.Fu, j.Fv);
    f.G = dot(j.Fv, j.Fv);
    const Vec3 n = cross(j.Fu, j.Fv);
    const double nn = n.norm();
    if (!(nn > 1e-300)) throw DegeneratePoint("Fu x Fv vanishes: not an immersion here");
    f.normal = n / nn;
    f.L = dot(j.Fuu, f.normal);
    f.M = dot(j.Fuv, f.normal);
    f.N2 = dot(j.Fvv, f.normal);
    return f;
}

CurvatureReport curvatures(const FundamentalForms& f) {
    const double den = f.E * f.G - f.Fm * f.Fm;
    if (!(den > 1e-14)) throw DegeneratePoint("first form is degenerate");

    CurvatureReport r;
    r.K = (f.L * f.N2 - f.M * f.M) / den;
    r.H = (f.E * f.N2 - 2 * f.Fm * f.M + f.G * f.L) / (2 * den);
    const double disc = std::max(0.0, r.H * r.H - r.K);
    const double root = std::sqrt(disc);
    r.k1 = r.H + root;
    r.k2 = r.H - root;

    if (std::abs(r.k1 - r.k2) < 1e-9) {
        r.umbilic = true;  // every direction is principal; none is reported
        return r;
    }

    // Shape operator in the chart basis: W = I^{-1} II.
    const double W11 = (f.G * f.L - f.Fm * f.M) / den;
    const double W12 = (f.G * f.M - f.Fm * f.N2) / den;
    const double W21 = (f.E * f.M - f.Fm * f.L) / den;
    const double W22 = (f.E * f.N2 - f.Fm * f.M) / den;

    auto eigen_dir = [&](double k) {
        // (W - k I) x = 0; pick the better-conditioned row.
        ChartDir d;
        const double a1 = std::hypot(W12, k - W11);
        const double a2 = std::hypot(k - W22, W21);
        if (a1 >= a2) {
            d.du = W12;
            d.dv = k - W11;
        } else {
            d.du = k - W22;
            d.dv = W21;
        }
        const double len2 = f.E * d.du * d.du + 2 * f.Fm * d.du * d.dv + f.G * d.dv * d.dv;
        const double len = std::sqrt(std::max(len2, 1e-300));
        d.du /= len;
        d.dv /= len;
        return d;
    };
    r.dir1 = eigen_dir(r.k1);
    r.dir2 = eigen_dir(r.k2);
    return r;
}

Vec3 christoffel_cyl(const CylPoint& p, const Vec3& X, const CylVectorJet& W) {
    if (!(p.r > 0.0)) throw AxisPoint{};
    const Vec3& w = W.value;
    const Vec3& dw = W.deriv_along;
    return {dw.x - p.r * X.y * w.y,
            dw.y + (X.x * w.y + X.y * w.x) / p.r,
            dw.z};
}

Vec3 cyl_components_to_cartesian(const CylPoint& p, const Vec3& comps) {
    const double cp = std::cos(p.phi);
    const double sp = std::sin(p.phi);
    return {comps.x * cp - comps.y * p.r * sp,
            comps.x * sp + comps.y * p.r * cp,
            comps.z};
}

bool immersion_check(const ParamSurface& S, int nu, int nv, double min_cross_norm) {
    if (nu < 2 || nv < 2) throw DegenerateGrid("immersion check needs a grid of at least 2x2");
    const auto& d = S.domain;
    for (int i = 0; i < nu; ++i) {
        const double u = d.u0 + (i + 1) * (d.u1 - d.u0) / (nu + 1);
        for (int jdx = 0; jdx < nv; ++jdx) {
            const double v = d.v0 + (jdx + 1) * (d.v1 - d.v0) / (nv + 1);
            const SurfaceJet J = jet(S, u, v);
            if (cross(J.Fu, J.Fv).norm() <= min_cross_norm) return false;
        }
    }
    return true;
}

}  // namespace constangle
