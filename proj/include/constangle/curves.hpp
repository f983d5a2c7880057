#pragma once
// Generators for constant-angle curves: planar curves against the unit
// circle, planar curves against the rotation field about the z-axis, and
// spatial curves built from the cylindrical quadrature with a free turning
// function omega.

#include <functional>
#include <vector>

#include "constangle/geometry.hpp"

namespace constangle {

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    double length() const { return hi - lo; }
};

struct PolySample {
    double s = 0.0;  // arc-length parameter
    Vec3 point;
};

// Sampled space curve. s is strictly increasing; for curves produced by the
// generators below it is (approximate) arc length.
struct Polyline3 {
    std::vector<PolySample> samples;
    bool closed = false;

    std::size_t size() const { return samples.size(); }
    const PolySample& operator[](std::size_t i) const { return samples[i]; }
};

// Turning function omega(s) for the spatial quadrature. The named variants
// carry closed-form antiderivatives of cos(omega) and sin(omega); those fix
// the integration constants the way the corresponding special-case claims
// (cone / sphere / planar spiral containment) expect.
struct OmegaSpec {
    enum class Kind { Constant, Affine, ArcCos, Custom };

    Kind kind = Kind::Constant;
    double w0 = 0.0;                      // Constant
    double m = 0.0, n = 0.0;              // Affine: omega(s) = m s + n, m != 0
    std::function<double(double)> fn;     // Custom

    static OmegaSpec constant(double w0);
    static OmegaSpec affine(double m, double n);
    static OmegaSpec arc_cos();
    static OmegaSpec custom(std::function<double(double)> fn);

    double operator()(double s) const;

    bool has_closed_antiderivatives() const { return kind != Kind::Custom; }
    // Antiderivative of cos(omega) / sin(omega) with zero constant of
    // integration; precondition: has_closed_antiderivatives().
    double cos_antiderivative(double s) const;
    double sin_antiderivative(double s) const;
};

// The three planar families that make constant angle with the rotation field.
struct PlanarCurveKind {
    enum class Tag { Circle, Line, LogSpiral };

    Tag tag = Tag::Circle;
    double r0 = 1.0;         // Circle: radius > 0
    double direction = 0.0;  // Line: direction angle of the ray through the origin
    double theta = 0.0;      // LogSpiral: constant angle in (0, pi/2)
    double phi0 = 0.0;       // LogSpiral: phase

    static PlanarCurveKind circle(double r0);
    static PlanarCurveKind line(double direction);
    static PlanarCurveKind log_spiral(double theta, double phi0);
};

// Planar curve making constant angle theta with the unit circle parameterized
// by the turning function sigma. Both antiderivatives are evaluated by
// cumulative composite Simpson from the left endpoint (constants zero); the
// tangent of the result makes angle theta with (-sin sigma, cos sigma) at
// every sample up to quadrature + differentiation error.
Polyline3 curve_vs_circle(const std::function<double(double)>& sigma, Angle theta,
                          Interval s_range, int n);

// Closed-form planar curves of the circle / line / log-spiral classification,
// arc-length parameterized over `range`.
Polyline3 planar_killing_curve(const PlanarCurveKind& kind, Interval range, int n);

// Spatial constant-angle curve in cylindrical quadrature form:
//   r(s) = r0 + sin(theta) int cos(omega),  z(s) = sin(theta) int sin(omega),
//   phi(s) = cos(theta) int ds / r(s),
// all cumulative composite Simpson on a uniform grid. Named omega variants
// seed r and z with their closed-form antiderivative values at the left
// endpoint; Custom omega starts both at zero. phi always starts at zero
// (the curve is canonical up to vertical translation and rotation).
// Throws RadiusNonPositive if r(s) <= 0 is reached: the phi integrand 1/r
// crosses a nonintegrable singularity there.
Polyline3 spatial_killing_curve(const OmegaSpec& omega, Angle theta, double r0,
                                Interval s_range, int n);

// max over segments of |chord/ds - 1|; near zero for finely sampled
// unit-speed curves.
double arclength_defect(const Polyline3& c);

}  // namespace constangle
