#include "constangle/surface.hpp"

#include <algorithm>
#include <cmath>

namespace constangle {

namespace {

void require_band(double theta) {
    if (!(theta > 0.0 && theta < Angle::kPi / 2)) {
        throw DomainViolation("generator requires theta in (0, pi/2)");
    }
}

void require_off_axis(const SurfaceDomain& d) {
    if (!(d.u0 > 0.0)) throw DomainTouchesAxis("u-interval must stay in (0, inf)");
    if (!(d.u1 > d.u0) || !(d.v1 > d.v0)) {
        throw InvalidRange("domain rectangle must be nondegenerate");
    }
}

}  // namespace

SurfaceJet cyl_jet_to_cartesian(const CylJet& j) {
    const double cp = std::cos(j.phi);
    const double sp = std::sin(j.phi);

    SurfaceJet out;
    out.F = {j.r * cp, j.r * sp, j.z};
    out.Fu = {j.r_u * cp - j.r * sp * j.phi_u, j.r_u * sp + j.r * cp * j.phi_u, j.z_u};
    out.Fv = {j.r_v * cp - j.r * sp * j.phi_v, j.r_v * sp + j.r * cp * j.phi_v, j.z_v};
    out.Fuu = {j.r_uu * cp - 2 * j.r_u * sp * j.phi_u - j.r * cp * j.phi_u * j.phi_u -
                   j.r * sp * j.phi_uu,
               j.r_uu * sp + 2 * j.r_u * cp * j.phi_u - j.r * sp * j.phi_u * j.phi_u +
                   j.r * cp * j.phi_uu,
               j.z_uu};
    out.Fuv = {j.r_uv * cp - j.r_u * sp * j.phi_v - j.r_v * sp * j.phi_u -
                   j.r * cp * j.phi_u * j.phi_v - j.r * sp * j.phi_uv,
               j.r_uv * sp + j.r_u * cp * j.phi_v + j.r_v * cp * j.phi_u -
                   j.r * sp * j.phi_u * j.phi_v + j.r * cp * j.phi_uv,
               j.z_uv};
    out.Fvv = {j.r_vv * cp - 2 * j.r_v * sp * j.phi_v - j.r * cp * j.phi_v * j.phi_v -
                   j.r * sp * j.phi_vv,
               j.r_vv * sp + 2 * j.r_v * cp * j.phi_v - j.r * sp * j.phi_v * j.phi_v +
                   j.r * cp * j.phi_vv,
               j.z_vv};
    return out;
}

// ---------------------------------------------------------------------------
// RotationalProfile
// ---------------------------------------------------------------------------

RotationalProfile RotationalProfile::from_function(std::function<double(double)> fn) {
    RotationalProfile p;
    p.f = fn;
    p.df = [fn](double u) {
        const double h = 1e-6 * std::max(1.0, std::abs(u));
        return (fn(u + h) - fn(u - h)) / (2 * h);
    };
    p.d2f = [fn](double u) {
        const double h = 1e-4 * std::max(1.0, std::abs(u));
        return (fn(u + h) - 2 * fn(u) + fn(u - h)) / (h * h);
    };
    return p;
}

RotationalProfile RotationalProfile::catenoid(double waist) {
    if (!(waist > 0.0)) throw InvalidRange("catenoid waist must be positive");
    RotationalProfile p;
    p.f = [waist](double u) { return waist * std::acosh(u / waist); };
    p.df = [waist](double u) { return waist / std::sqrt(u * u - waist * waist); };
    p.d2f = [waist](double u) {
        const double q = u * u - waist * waist;
        return -waist * u / (q * std::sqrt(q));
    };
    return p;
}

RotationalProfile RotationalProfile::constant(double z0) {
    RotationalProfile p;
    p.f = [z0](double) { return z0; };
    p.df = [](double) { return 0.0; };
    p.d2f = [](double) { return 0.0; };
    return p;
}

RotationalProfile RotationalProfile::cone(double slope) {
    RotationalProfile p;
    p.f = [slope](double u) { return slope * u; };
    p.df = [slope](double) { return slope; };
    p.d2f = [](double) { return 0.0; };
    return p;
}

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

ParamSurface halfplane(double phi0, SurfaceDomain domain) {
    require_off_axis(domain);
    const double cp = std::cos(phi0);
    const double sp = std::sin(phi0);

    ParamSurface s;
    s.family = SurfaceFamily::Halfplane;
    s.theta = 0.0;
    s.domain = domain;
    s.eval = [cp, sp](double u, double v) { return Vec3{u * cp, u * sp, v}; };
    s.analytic_jet = [cp, sp](double u, double v) {
        SurfaceJet j;
        j.F = {u * cp, u * sp, v};
        j.Fu = {cp, sp, 0};
        j.Fv = {0, 0, 1};
        return j;
    };
    return s;
}

ParamSurface rotational_surface(RotationalProfile profile, SurfaceDomain domain) {
    require_off_axis(domain);

    ParamSurface s;
    s.family = SurfaceFamily::Rotational;
    s.theta = Angle::kPi / 2;
    s.domain = domain;
    s.eval = [profile](double u, double v) {
        return Vec3{u * std::cos(v), u * std::sin(v), profile.f(u)};
    };
    s.analytic_jet = [profile](double u, double v) {
        const double cv = std::cos(v);
        const double sv = std::sin(v);
        SurfaceJet j;
        j.F = {u * cv, u * sv, profile.f(u)};
        j.Fu = {cv, sv, profile.df(u)};
        j.Fv = {-u * sv, u * cv, 0};
        j.Fuu = {0, 0, profile.d2f(u)};
        j.Fuv = {-sv, cv, 0};
        j.Fvv = {-u * cv, -u * sv, 0};
        return j;
    };
    return s;
}

ParamSurface logspiral_cylinder(Angle theta, double c, SurfaceDomain domain) {
    require_band(theta.radians());
    if (!(c > 0.0)) throw InvalidRange("logspiral cylinder requires c > 0");
    require_off_axis(domain);

    const double th = theta.radians();
    const double ct = std::cos(th);
    const double tt = std::tan(th);
    const double logc = std::log(c);

    auto cyl_jet = [ct, tt, logc](double u, double v) {
        CylJet j;
        j.r = u * ct;
        j.r_u = ct;
        j.phi = logc - tt * std::log(u);
        j.phi_u = -tt / u;
        j.phi_uu = tt / (u * u);
        j.z = v;
        j.z_v = 1;
        return j;
    };

    ParamSurface s;
    s.family = SurfaceFamily::LogSpiralCylinder;
    s.theta = th;
    s.c = c;
    s.domain = domain;
    s.eval = [cyl_jet](double u, double v) {
        const CylJet j = cyl_jet(u, v);
        return cyl_to_cart({j.r, j.phi, j.z});
    };
    s.analytic_jet = [cyl_jet](double u, double v) {
        return cyl_jet_to_cartesian(cyl_jet(u, v));
    };
    return s;
}

Interval dini_admissible_band(double c, double band_margin) {
    if (c == 0.0) throw InvalidRange("dini surface requires c != 0");
    if (!(band_margin > 0.0 && band_margin < Angle::kPi / 4)) {
        throw InvalidRange("band margin must lie in (0, pi/4)");
    }
    const double lo = band_margin / c;
    const double hi = (Angle::kPi / 2 - band_margin) / c;
    return {std::min(lo, hi), std::max(lo, hi)};
}

SurfaceDomain dini_band_domain(double c, double v0, double v1, double band_margin) {
    const Interval band = dini_admissible_band(c, band_margin);
    const double inset = 0.05 * band.length();
    return {band.lo + inset, band.hi - inset, v0, v1};
}

CylJet dini_cyl_jet(Angle theta, double c, double u, double v, bool signed_radius) {
    const double th = theta.radians();
    const double ct = std::cos(th);
    const double tt = std::tan(th);
    const double cu = c * u;
    const double scu = std::sin(cu);
    const double ccu = std::cos(cu);

    CylJet j;
    j.r = ct * scu / c;
    j.r_u = ct * ccu;
    j.r_uu = -c * ct * scu;
    j.phi = -c * v * tt / ct - tt * std::log(std::tan(cu / 2));
    j.phi_u = -c * tt / scu;
    j.phi_uu = c * c * tt * ccu / (scu * scu);
    j.phi_v = -c * tt / ct;
    j.z = v - ct * ccu / c;
    j.z_u = ct * scu;
    j.z_uu = c * ct * ccu;
    j.z_v = 1;
    if (signed_radius) {
        j.r = -j.r;
        j.r_u = -j.r_u;
        j.r_uu = -j.r_uu;
    }
    return j;
}

ParamSurface dini_surface(Angle theta, double c, SurfaceDomain domain, double band_margin) {
    require_band(theta.radians());
    const Interval band = dini_admissible_band(c, band_margin);
    if (!(domain.u1 > domain.u0) || !(domain.v1 > domain.v0)) {
        throw InvalidRange("domain rectangle must be nondegenerate");
    }
    if (!(domain.u0 >= band.lo && domain.u1 <= band.hi)) {
        throw DomainViolation("dini u-interval must keep cu inside (margin, pi/2 - margin)");
    }
    if (c < 0.0) {
        // Inside the band, sin(cu) > 0, so r = cos(theta) sin(cu)/c < 0.
        throw SignError("dini generator requires c > 0 (negative c makes r < 0)");
    }

    ParamSurface s;
    s.family = SurfaceFamily::Dini;
    s.theta = theta.radians();
    s.c = c;
    s.domain = domain;
    s.eval = [theta, c](double u, double v) {
        const CylJet j = dini_cyl_jet(theta, c, u, v);
        return cyl_to_cart({j.r, j.phi, j.z});
    };
    s.analytic_jet = [theta, c](double u, double v) {
        return cyl_jet_to_cartesian(dini_cyl_jet(theta, c, u, v));
    };
    return s;
}

HelicoidalForm helicoidal_form(Angle theta, double c) {
    require_band(theta.radians());
    if (c == 0.0) throw InvalidRange("helicoidal form requires c != 0");
    const double th = theta.radians();
    const double ct = std::cos(th);
    const double tt = std::tan(th);

    HelicoidalForm h;
    h.pitch = -ct / (c * tt);
    h.profile = [ct, c](double r) {
        const double x = c * r / ct;
        if (!(x > 0.0 && x < 1.0)) {
            throw DomainViolation("helicoidal profile radius out of (0, cos(theta)/c)");
        }
        const double cu = std::asin(x);
        return -(ct / c) * (std::log(std::tan(cu / 2)) + std::cos(cu));
    };
    return h;
}

DiniGeometry dini_geometry(Angle theta, double c, double u, double v, double band_margin) {
    require_band(theta.radians());
    const Interval band = dini_admissible_band(c, band_margin);
    if (!(u >= band.lo && u <= band.hi)) {
        throw DomainViolation("u outside the admissible dini band");
    }
    const double th = theta.radians();
    const double st = std::sin(th);
    const double ct = std::cos(th);
    const double tt = std::tan(th);
    const double cu = c * u;
    const double scu = std::sin(cu);
    const double ccu = std::cos(cu);

    DiniGeometry g;
    g.psi = cu;
    g.mu = -ct * scu / c;
    g.radius = std::abs(g.mu);
    g.lambda = -c * tt * std::tan(cu);
    g.a = -std::tan(cu) / ct;
    g.b = 1.0 / ccu;
    g.e1 = {-ct * ccu, st / g.mu, ct * scu};
    g.e2 = {scu, 0.0, ccu};
    g.normal = {st * ccu, ct / g.mu, -st * scu};
    g.cos_phi_hat = -st * scu;
    g.cos_eta = ct * scu;
    g.A11 = -st * ccu / g.mu;
    g.A22 = g.lambda;
    g.h11 = c * tt * ccu / scu;
    g.h12 = c * tt * ccu / ct;
    g.h22 = c * tt * tt * tt * scu * ccu;
    (void)v;  // the inner geometry depends on u only
    return g;
}

Vec3 dini_frame_to_cartesian(const Vec3& comps, Angle theta, double c, double u, double v) {
    const CylJet j = dini_cyl_jet(theta, c, u, v);
    const double cp = std::cos(j.phi);
    const double sp = std::sin(j.phi);
    // Half-turn between charts: radial component flips, angular scale is |mu| = j.r.
    const double ar = -comps.x;
    const double aphi = comps.y;
    const double az = comps.z;
    return Vec3{ar * cp - aphi * j.r * sp, ar * sp + aphi * j.r * cp, az};
}

}  // namespace constangle
