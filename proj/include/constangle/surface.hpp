#pragma once
// Parametric surfaces making constant angle with the rotation field about
// the z-axis: halfplane, rotational surface, right cylinder over a
// logarithmic spiral, and Dini's surface, plus the helicoidal form and the
// analytic inner geometry of the Dini family.

#include <functional>

#include "constangle/curves.hpp"
#include "constangle/geometry.hpp"

namespace constangle {

// Position and first/second partials of an immersion, Cartesian.
struct SurfaceJet {
    Vec3 F, Fu, Fv, Fuu, Fuv, Fvv;
};

// The same data in cylindrical components (r, phi, z).
struct CylJet {
    double r = 0, phi = 0, z = 0;
    double r_u = 0, r_v = 0, phi_u = 0, phi_v = 0, z_u = 0, z_v = 0;
    double r_uu = 0, r_uv = 0, r_vv = 0;
    double phi_uu = 0, phi_uv = 0, phi_vv = 0;
    double z_uu = 0, z_uv = 0, z_vv = 0;
};

// Chain rule through x = r cos(phi), y = r sin(phi).
SurfaceJet cyl_jet_to_cartesian(const CylJet& j);

enum class SurfaceFamily { Halfplane, Rotational, LogSpiralCylinder, Dini, Custom };

struct SurfaceDomain {
    double u0 = 0, u1 = 1, v0 = 0, v1 = 1;
};

struct ParamSurface {
    SurfaceFamily family = SurfaceFamily::Custom;
    double theta = 0.0;  // nominal constant angle, where the family has one
    double c = 0.0;      // family constant, where the family has one
    SurfaceDomain domain;
    std::function<Vec3(double, double)> eval;
    std::function<SurfaceJet(double, double)> analytic_jet;  // empty => finite differences

    bool has_analytic_jet() const { return static_cast<bool>(analytic_jet); }

    // Copy with the analytic jet stripped, forcing finite-difference paths.
    ParamSurface without_analytic_jet() const {
        ParamSurface s = *this;
        s.analytic_jet = nullptr;
        return s;
    }
};

// Profile z = f(r) of a rotational surface, with derivatives for the
// analytic jet.
struct RotationalProfile {
    std::function<double(double)> f;
    std::function<double(double)> df;
    std::function<double(double)> d2f;

    // Wraps a bare function; derivatives by central differences.
    static RotationalProfile from_function(std::function<double(double)> fn);
    // u = waist * cosh(z / waist), i.e. f(u) = waist * arcosh(u / waist); u > waist.
    static RotationalProfile catenoid(double waist);
    static RotationalProfile constant(double z0);
    static RotationalProfile cone(double slope);
};

// F(u, v) = (u cos(phi0), u sin(phi0), v); boundary on the z-axis excluded.
ParamSurface halfplane(double phi0, SurfaceDomain domain);

// F(u, v) = (u cos v, u sin v, f(u)).
ParamSurface rotational_surface(RotationalProfile profile, SurfaceDomain domain);

// Right cylinder over a logarithmic spiral, cylindrical components
// (u cos(theta), log c - tan(theta) log u, v); theta in (0, pi/2), c > 0.
ParamSurface logspiral_cylinder(Angle theta, double c, SurfaceDomain domain);

// Dini's surface, cylindrical components
//   r = cos(theta) sin(cu) / c,
//   phi = -c v tan(theta)/cos(theta) - tan(theta) log(tan(cu/2)),
//   z = v - cos(theta) cos(cu) / c.
// The u-interval must keep cu inside (band_margin, pi/2 - band_margin):
// cu -> 0 runs into the axis and cu -> pi/2 into the cuspidal rim where one
// principal curvature diverges.
ParamSurface dini_surface(Angle theta, double c, SurfaceDomain domain,
                          double band_margin = 0.1);

// Admissible u-interval of the Dini generator for a given c (open band,
// callers should stay strictly inside).
Interval dini_admissible_band(double c, double band_margin = 0.1);

// Domain rectangle inset 5% into the admissible band, v in [v0, v1].
SurfaceDomain dini_band_domain(double c, double v0 = 0.0, double v1 = 1.0,
                               double band_margin = 0.1);

// Dini's surface as a helicoidal surface (r, phi) -> (r cos phi, r sin phi,
// pitch * phi + profile(r)).
struct HelicoidalForm {
    double pitch = 0.0;
    std::function<double(double)> profile;  // Lambda(r)
};
HelicoidalForm helicoidal_form(Angle theta, double c);

// Closed-form inner geometry of the Dini family at (u, v). Frame components
// are cylindrical in the derivation chart, whose radial coordinate is the
// signed mu = -cos(theta) sin(cu)/c (negative for c > 0); the embedded
// surface uses radius |mu| and sits a half-turn about the axis away.
struct DiniGeometry {
    double psi = 0;     // cu
    double mu = 0;      // signed; the chart radius
    double radius = 0;  // |mu|, the embedded cylindrical radius
    double lambda = 0;  // second principal curvature
    double a = 0, b = 0;  // e2 = a du + b dv in the (u, v) chart
    Vec3 e1, e2, normal;  // cylindrical components (r, phi, z), derivation chart
    double cos_phi_hat = 0;  // cos of angle(normal, k), stated branch
    double cos_eta = 0;      // cos of angle(e1, k), stated branch
    double A11 = 0, A22 = 0;  // shape operator diagonal in {e1, e2}
    double h11 = 0, h12 = 0, h22 = 0;  // second form on (du, dv), chart basis
};
DiniGeometry dini_geometry(Angle theta, double c, double u, double v,
                           double band_margin = 0.1);

// Pushforward of derivation-chart cylindrical components to a Cartesian
// vector at the embedded point F(u, v). The half-turn between the charts
// negates the radial component.
Vec3 dini_frame_to_cartesian(const Vec3& comps, Angle theta, double c, double u, double v);

// Cylindrical 2-jet of the Dini parametrization; signed_radius selects the
// derivation chart (r = mu < 0) instead of the embedded one.
CylJet dini_cyl_jet(Angle theta, double c, double u, double v, bool signed_radius = false);

}  // namespace constangle
