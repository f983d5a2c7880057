#pragma once
// Numerical 2-jets, fundamental forms, shape operator and curvatures, and
// the Levi-Civita table of the warped cylindrical metric dr^2 + dz^2 + r^2 dphi^2.

#include "constangle/geometry.hpp"
#include "constangle/surface.hpp"

namespace constangle {

struct FundamentalForms {
    double E = 0, Fm = 0, G = 0;   // first form
    double L = 0, M = 0, N2 = 0;   // second form w.r.t. the unit normal
    Vec3 normal;                   // unit, Fu x Fv orientation
};

// Direction in the (u, v) chart.
struct ChartDir {
    double du = 0, dv = 0;
};

struct CurvatureReport {
    double K = 0, H = 0;
    double k1 = 0, k2 = 0;    // principal curvatures, k1 >= k2
    ChartDir dir1, dir2;      // principal directions, unit under the first form
    bool umbilic = false;     // k1 == k2 within 1e-9: directions left unset
};

// Finite-difference steps, scaled internally by max(1, |u|, |v|). The second
// step is much coarser than the first: second differences lose half the
// significant digits to cancellation.
struct FdSteps {
    double first = 1e-5;
    double second = 1e-3;
};

// 2-jet of the surface at (u, v): the analytic jet when the surface carries
// one, finite differences otherwise (central first partials, 5-point pure and
// 4-corner mixed second partials).
SurfaceJet jet(const ParamSurface& S, double u, double v, FdSteps steps = {});

// Always finite differences, regardless of an available analytic jet.
// Throws TooCloseToBoundary when the stencil would leave the domain.
SurfaceJet jet_fd(const ParamSurface& S, double u, double v, FdSteps steps = {});

FundamentalForms fundamental_forms(const SurfaceJet& j);

CurvatureReport curvatures(const FundamentalForms& f);

// A cylindrical vector field along a direction: components (r, phi, z) of the
// field at the point and of its directional derivative along X.
struct CylVectorJet {
    Vec3 value;        // (W^r, W^phi, W^z)
    Vec3 deriv_along;  // (X(W^r), X(W^phi), X(W^z))
};

// Covariant derivative nabla_X W in the warped cylindrical metric. The only
// nonzero symbols are Gamma^phi_{r phi} = 1/r and Gamma^r_{phi phi} = -r.
Vec3 christoffel_cyl(const CylPoint& p, const Vec3& X, const CylVectorJet& W);

// Pushforward of cylindrical components to a Cartesian vector at p.
Vec3 cyl_components_to_cartesian(const CylPoint& p, const Vec3& comps);

// True when the finite-difference (or analytic) partials are linearly
// independent at every interior grid sample.
bool immersion_check(const ParamSurface& S, int nu, int nv,
                     double min_cross_norm = 1e-10);

}  // namespace constangle
