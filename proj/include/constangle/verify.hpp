#pragma once
// Constant-angle verification for curves and surfaces against Killing
// fields, the Dini PDE residual checks, the parametric-curve property
// checks, and the four-family classifier.

#include <array>
#include <vector>

#include "constangle/curves.hpp"
#include "constangle/diffgeo.hpp"
#include "constangle/killing.hpp"
#include "constangle/surface.hpp"

namespace constangle {

struct AngleReport {
    std::size_t samples = 0;
    double theta_mean = 0.0;     // radians; folded into [0, pi/2] for surfaces
    double theta_max_dev = 0.0;  // max |angle_i - theta_mean|
    bool fold_applied = false;
};

// Folded angles angle(V, normal) at the interior samples of a nu x nv grid.
// Folding to min(a, pi - a) removes the mesh-orientation artifact: theta and
// pi - theta describe the same geometry. Reductions over the grid run in a
// fixed row-major order so reports are bit-stable.
std::vector<double> surface_angles(const ParamSurface& S, const KillingField& V,
                                   int nu, int nv);
AngleReport surface_angle_report(const ParamSurface& S, const KillingField& V,
                                 int nu, int nv);

// Oriented angles angle(tangent, V) along the polyline; tangents come from
// symmetric finite differences (5-point on uniform grids of >= 5 samples),
// so only samples with a full interior stencil are reported. No folding:
// curve orientation is part of the parametrization.
std::vector<double> curve_angles(const Polyline3& c, const KillingField& V);
AngleReport curve_angle_report(const Polyline3& c, const KillingField& V);

// LHS - RHS of the nine second-derivative equations of the Dini derivation,
// evaluated with the closed-form cylindrical jet. The equations live in the
// derivation chart, whose radial coordinate is the signed mu (< 0 for c > 0);
// all nine vanish identically there.
std::array<double, 9> dini_pde_residuals(Angle theta, double c, double u, double v);
// Same equations against an externally supplied cylindrical jet (which lets
// perturbed surfaces be fed in and detected).
std::array<double, 9> dini_pde_residuals(const CylJet& j, Angle theta, double c, double u);

// v-parameter curve of a Dini surface at u = u0: distance to the axis must
// be constant and z, phi affine in v. pitch = 2 pi * slope_z / slope_phi
// (signed); max_dev is the worst fit residual.
struct HelixCheck {
    double radius = 0.0;
    double pitch = 0.0;
    double max_dev = 0.0;
};
HelixCheck helix_property_check(const ParamSurface& S, double u0, int samples = 257);

// u-parameter curve at v = v0: lies on the sphere centered at (0, 0, v0);
// also measures how far |Fu| strays from unit speed.
struct SphereCheck {
    double center_z = 0.0;
    double radius = 0.0;
    double max_dev = 0.0;
    double unit_speed_max_dev = 0.0;
};
SphereCheck sphere_property_check(const ParamSurface& S, double v0, int samples = 257);

struct FamilyLabel {
    enum class Tag { Halfplane, Rotational, LogSpiralCylinder, Dini, NotConstantAngle, Unknown };
    Tag tag = Tag::Unknown;
    double theta_hat = 0.0;  // estimated constant angle (all but NotConstantAngle)
    double c_hat = 0.0;      // estimated family constant (LogSpiralCylinder, Dini)
};

const char* to_string(FamilyLabel::Tag tag);

struct ClassifyConfig {
    int nu = 32, nv = 32;
    // Angle constancy tolerance; <= 0 picks 1e-4 for analytic jets and 1e-3
    // for finite-difference jets.
    double tol_angle = 0.0;
    // |K| below this (absolute) counts as flat; relative K spread below this
    // counts as constant negative curvature.
    double tol_K = 1e-3;
};

// Decision pipeline: angle constancy -> band edges (halfplane / rotational)
// -> curvature signature (flat cylinder over a spiral / constant negative =
// Dini, with c recovered from K = -c^2 tan^2 theta). Ambiguous cases land on
// Unknown rather than a guess.
FamilyLabel classify_surface(const ParamSurface& S,
                             const KillingField& V = KillingField::rotation_z(),
                             ClassifyConfig cfg = {});

}  // namespace constangle
