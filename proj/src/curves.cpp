#include "constangle/curves.hpp"

#include <algorithm>
#include <cmath>

#include "constangle/quadrature.hpp"

namespace constangle {

namespace {

void require_range(const Interval& r, int n, int min_n) {
    if (!(r.hi > r.lo) || !std::isfinite(r.lo) || !std::isfinite(r.hi)) {
        throw InvalidRange("parameter range must satisfy lo < hi");
    }
    if (n < min_n) {
        throw InvalidRange("sample count must be at least " + std::to_string(min_n));
    }
}

std::vector<double> uniform_nodes(const Interval& r, int n) {
    std::vector<double> s(static_cast<std::size_t>(n));
    const double h = r.length() / (n - 1);
    for (int i = 0; i < n; ++i) s[static_cast<std::size_t>(i)] = r.lo + h * i;
    s.back() = r.hi;
    return s;
}

constexpr double kArcCosClip = 1e-6;  // keeps arccos away from its endpoint singularities

}  // namespace

// ---------------------------------------------------------------------------
// OmegaSpec
// ---------------------------------------------------------------------------

OmegaSpec OmegaSpec::constant(double w0) {
    OmegaSpec o;
    o.kind = Kind::Constant;
    o.w0 = w0;
    return o;
}

OmegaSpec OmegaSpec::affine(double m, double n) {
    if (m == 0.0) throw InvalidRange("affine omega requires m != 0");
    OmegaSpec o;
    o.kind = Kind::Affine;
    o.m = m;
    o.n = n;
    return o;
}

OmegaSpec OmegaSpec::arc_cos() {
    OmegaSpec o;
    o.kind = Kind::ArcCos;
    return o;
}

OmegaSpec OmegaSpec::custom(std::function<double(double)> fn) {
    OmegaSpec o;
    o.kind = Kind::Custom;
    o.fn = std::move(fn);
    return o;
}

double OmegaSpec::operator()(double s) const {
    switch (kind) {
        case Kind::Constant: return w0;
        case Kind::Affine: return m * s + n;
        case Kind::ArcCos:
            return std::acos(std::clamp(s, -1.0 + kArcCosClip, 1.0 - kArcCosClip));
        case Kind::Custom: return fn(s);
    }
    return 0.0;
}

double OmegaSpec::cos_antiderivative(double s) const {
    switch (kind) {
        case Kind::Constant: return s * std::cos(w0);
        case Kind::Affine: return std::sin(m * s + n) / m;
        case Kind::ArcCos: {
            // cos(arccos s) = s
            const double t = std::clamp(s, -1.0 + kArcCosClip, 1.0 - kArcCosClip);
            return 0.5 * t * t;
        }
        case Kind::Custom: break;
    }
    throw InvalidRange("custom omega has no closed-form antiderivative");
}

double OmegaSpec::sin_antiderivative(double s) const {
    switch (kind) {
        case Kind::Constant: return s * std::sin(w0);
        case Kind::Affine: return -std::cos(m * s + n) / m;
        case Kind::ArcCos: {
            // sin(arccos s) = sqrt(1 - s^2)
            const double t = std::clamp(s, -1.0 + kArcCosClip, 1.0 - kArcCosClip);
            return 0.5 * (t * std::sqrt(1.0 - t * t) + std::asin(t));
        }
        case Kind::Custom: break;
    }
    throw InvalidRange("custom omega has no closed-form antiderivative");
}

// ---------------------------------------------------------------------------
// PlanarCurveKind
// ---------------------------------------------------------------------------

PlanarCurveKind PlanarCurveKind::circle(double r0) {
    if (!(r0 > 0.0)) throw InvalidRange("circle radius must be positive");
    PlanarCurveKind k;
    k.tag = Tag::Circle;
    k.r0 = r0;
    return k;
}

PlanarCurveKind PlanarCurveKind::line(double direction) {
    PlanarCurveKind k;
    k.tag = Tag::Line;
    k.direction = direction;
    return k;
}

PlanarCurveKind PlanarCurveKind::log_spiral(double theta, double phi0) {
    if (!(theta > 0.0 && theta < Angle::kPi / 2)) {
        throw DomainViolation("log spiral angle must lie in (0, pi/2)");
    }
    PlanarCurveKind k;
    k.tag = Tag::LogSpiral;
    k.theta = theta;
    k.phi0 = phi0;
    return k;
}

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

Polyline3 curve_vs_circle(const std::function<double(double)>& sigma, Angle theta,
                          Interval s_range, int n) {
    require_range(s_range, n, 3);
    const auto s = uniform_nodes(s_range, n);
    const double h = s_range.length() / (n - 1);

    std::vector<double> cs(s.size()), sn(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        const double w = sigma(s[i]);
        cs[i] = std::cos(w);
        sn[i] = std::sin(w);
    }
    const auto C = cumulative_simpson(cs, h);
    const auto S = cumulative_simpson(sn, h);

    const double ct = std::cos(theta.radians());
    const double st = std::sin(theta.radians());
    Polyline3 out;
    out.samples.resize(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        out.samples[i] = {s[i], Vec3{st * C[i] - ct * S[i], ct * C[i] + st * S[i], 0.0}};
    }
    return out;
}

Polyline3 planar_killing_curve(const PlanarCurveKind& kind, Interval range, int n) {
    require_range(range, n, 2);
    const auto s = uniform_nodes(range, n);

    Polyline3 out;
    out.samples.resize(s.size());
    switch (kind.tag) {
        case PlanarCurveKind::Tag::Circle: {
            for (std::size_t i = 0; i < s.size(); ++i) {
                const double a = s[i] / kind.r0;
                out.samples[i] = {s[i], Vec3{kind.r0 * std::cos(a), kind.r0 * std::sin(a), 0.0}};
            }
            out.closed = std::abs(range.length() - 2 * Angle::kPi * kind.r0) < 1e-12;
            break;
        }
        case PlanarCurveKind::Tag::Line: {
            const double cd = std::cos(kind.direction);
            const double sd = std::sin(kind.direction);
            for (std::size_t i = 0; i < s.size(); ++i) {
                out.samples[i] = {s[i], Vec3{s[i] * cd, s[i] * sd, 0.0}};
            }
            break;
        }
        case PlanarCurveKind::Tag::LogSpiral: {
            // Arc-length form: r(s) = s sin(theta), phi(s) = cot(theta) ln(s sin(theta)) + phi0.
            const double st = std::sin(kind.theta);
            const double cot = std::cos(kind.theta) / st;
            for (std::size_t i = 0; i < s.size(); ++i) {
                const double r = s[i] * st;
                if (!(r > 0.0)) throw OriginOnCurve("log spiral requires s sin(theta) > 0");
                const double phi = cot * std::log(r) + kind.phi0;
                out.samples[i] = {s[i], Vec3{r * std::cos(phi), r * std::sin(phi), 0.0}};
            }
            break;
        }
    }
    for (const auto& smp : out.samples) {
        if (std::hypot(smp.point.x, smp.point.y) < 1e-12) {
            throw OriginOnCurve("curve sample on the z-axis where the field vanishes");
        }
    }
    return out;
}

Polyline3 spatial_killing_curve(const OmegaSpec& omega, Angle theta, double r0,
                                Interval s_range, int n) {
    require_range(s_range, n, 3);
    const double th = theta.radians();
    if (!(th > 0.0 && th < Angle::kPi / 2)) {
        throw DomainViolation("spatial generator requires theta in (0, pi/2)");
    }
    const auto s = uniform_nodes(s_range, n);
    const double h = s_range.length() / (n - 1);
    const double st = std::sin(th);
    const double ct = std::cos(th);

    std::vector<double> cw(s.size()), sw(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        const double w = omega(s[i]);
        cw[i] = std::cos(w);
        sw[i] = std::sin(w);
    }
    const auto Ic = cumulative_simpson(cw, h);
    const auto Is = cumulative_simpson(sw, h);

    // Named variants realize the closed-form antiderivative constants; the
    // cumulative quadrature then only contributes the increment past s_0.
    double r_base = r0;
    double z_base = 0.0;
    if (omega.has_closed_antiderivatives()) {
        r_base += st * omega.cos_antiderivative(s_range.lo);
        z_base += st * omega.sin_antiderivative(s_range.lo);
    }

    std::vector<double> r(s.size()), inv_r(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        r[i] = r_base + st * Ic[i];
        if (!(r[i] > 0.0)) throw RadiusNonPositive(s[i]);
        inv_r[i] = 1.0 / r[i];
    }
    const auto Iphi = cumulative_simpson(inv_r, h);

    Polyline3 out;
    out.samples.resize(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        const double phi = ct * Iphi[i];
        const double z = z_base + st * Is[i];
        out.samples[i] = {s[i], cyl_to_cart({r[i], phi, z})};
    }
    return out;
}

double arclength_defect(const Polyline3& c) {
    if (c.size() < 2) throw InvalidRange("arclength defect needs at least 2 samples");
    double worst = 0.0;
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        const double ds = c[i + 1].s - c[i].s;
        const double chord = (c[i + 1].point - c[i].point).norm();
        worst = std::max(worst, std::abs(chord / ds - 1.0));
    }
    return worst;
}

}  // namespace constangle
