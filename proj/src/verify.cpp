#include "constangle/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace constangle {

namespace {

constexpr double kVanishTol = 1e-14;

[[noreturn]] void throw_vanishing(const Vec3& p, const char* what) {
    throw KillingFieldVanishes(std::string("field vanishes at sampled ") + what + " point (" +
                               std::to_string(p.x) + ", " + std::to_string(p.y) + ", " +
                               std::to_string(p.z) + ")");
}

AngleReport summarize(const std::vector<double>& angles, bool folded) {
    AngleReport r;
    r.samples = angles.size();
    r.fold_applied = folded;
    if (angles.empty()) return r;
    r.theta_mean = std::accumulate(angles.begin(), angles.end(), 0.0) /
                   static_cast<double>(angles.size());
    for (double a : angles) r.theta_max_dev = std::max(r.theta_max_dev, std::abs(a - r.theta_mean));
    return r;
}

// Least-squares fit y = a x + b; returns {a, b}.
std::pair<double, double> affine_fit(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double den = n * sxx - sx * sx;
    const double a = (n * sxy - sx * sy) / den;
    const double b = (sy - a * sx) / n;
    return {a, b};
}

double max_fit_residual(const std::vector<double>& x, const std::vector<double>& y,
                        double a, double b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        worst = std::max(worst, std::abs(y[i] - (a * x[i] + b)));
    }
    return worst;
}

// atan2 angles accumulated into a continuous branch.
std::vector<double> unwrap(const std::vector<double>& phi) {
    std::vector<double> out(phi.size());
    if (phi.empty()) return out;
    out[0] = phi[0];
    for (std::size_t i = 1; i < phi.size(); ++i) {
        double d = phi[i] - phi[i - 1];
        while (d > Angle::kPi) d -= 2 * Angle::kPi;
        while (d < -Angle::kPi) d += 2 * Angle::kPi;
        out[i] = out[i - 1] + d;
    }
    return out;
}

}  // namespace

std::vector<double> surface_angles(const ParamSurface& S, const KillingField& V,
                                   int nu, int nv) {
    if (nu < 3 || nv < 3) throw DegenerateGrid("angle report needs at least 3x3 interior samples");
    const auto& d = S.domain;
    std::vector<double> angles;
    angles.reserve(static_cast<std::size_t>(nu) * nv);
    for (int i = 0; i < nu; ++i) {
        const double u = d.u0 + (i + 1) * (d.u1 - d.u0) / (nu + 1);
        for (int jdx = 0; jdx < nv; ++jdx) {
            const double v = d.v0 + (jdx + 1) * (d.v1 - d.v0) / (nv + 1);
            const SurfaceJet J = jet(S, u, v);
            const Vec3 field = V.eval(J.F);
            if (field.norm() < kVanishTol) {
                throw_vanishing(J.F, "surface");
            }
            const Vec3 n = cross(J.Fu, J.Fv);
            const double a = angle_between(field, n).radians();
            angles.push_back(std::min(a, Angle::kPi - a));
        }
    }
    return angles;
}

AngleReport surface_angle_report(const ParamSurface& S, const KillingField& V,
                                 int nu, int nv) {
    return summarize(surface_angles(S, V, nu, nv), /*folded=*/true);
}

std::vector<double> curve_angles(const Polyline3& c, const KillingField& V) {
    const std::size_t n = c.size();
    if (n < 3) throw InvalidRange("curve angle report needs at least 3 samples");

    bool uniform = true;
    const double h0 = c[1].s - c[0].s;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (std::abs((c[i + 1].s - c[i].s) - h0) > 1e-9 * std::abs(h0)) {
            uniform = false;
            break;
        }
    }

    std::vector<double> angles;
    auto eval_angle = [&](const Vec3& tangent, const Vec3& p) {
        const Vec3 field = V.eval(p);
        if (field.norm() < kVanishTol) {
            throw_vanishing(p, "curve");
        }
        angles.push_back(angle_between(tangent, field).radians());
    };

    if (uniform && n >= 5) {
        for (std::size_t i = 2; i + 2 < n; ++i) {
            const Vec3 t = (c[i - 2].point - 8.0 * c[i - 1].point + 8.0 * c[i + 1].point -
                            c[i + 2].point) /
                           (12.0 * h0);
            eval_angle(t, c[i].point);
        }
    } else {
        for (std::size_t i = 1; i + 1 < n; ++i) {
            const Vec3 t = (c[i + 1].point - c[i - 1].point) / (c[i + 1].s - c[i - 1].s);
            eval_angle(t, c[i].point);
        }
    }
    return angles;
}

AngleReport curve_angle_report(const Polyline3& c, const KillingField& V) {
    return summarize(curve_angles(c, V), /*folded=*/false);
}

std::array<double, 9> dini_pde_residuals(const CylJet& j, Angle theta, double c, double u) {
    const double th = theta.radians();
    const double ct = std::cos(th);
    const double st = std::sin(th);
    const double tt = std::tan(th);
    const double cu = c * u;
    const double scu = std::sin(cu);
    const double ccu = std::cos(cu);

    std::array<double, 9> res{};
    res[0] = (j.r_uu - j.r * j.phi_u * j.phi_u) -
             (c * scu / ct + c * st * st * ccu * ccu / (ct * scu));
    res[1] = (j.phi_uu + 2 * (j.r_u / j.r) * j.phi_u) - (-c * c * tt * ccu / (scu * scu));
    res[2] = j.z_uu - c * ct * ccu;
    res[3] = (j.r_uv - j.r * j.phi_u * j.phi_v) - c * tt * tt;
    res[4] = (j.phi_uv + (j.r_u * j.phi_v + j.r_v * j.phi_u) / j.r) -
             (-c * c * tt * ccu / (scu * ct));
    res[5] = j.z_uv;
    res[6] = (j.r_vv - j.r * j.phi_v * j.phi_v) - c * tt * tt * scu / ct;
    res[7] = j.phi_vv + 2 * (j.r_v / j.r) * j.phi_v;
    res[8] = j.z_vv;
    return res;
}

std::array<double, 9> dini_pde_residuals(Angle theta, double c, double u, double v) {
    const Interval band = dini_admissible_band(c);
    if (!(u >= band.lo && u <= band.hi)) {
        throw DomainViolation("u outside the admissible dini band");
    }
    const CylJet j = dini_cyl_jet(theta, c, u, v, /*signed_radius=*/true);
    return dini_pde_residuals(j, theta, c, u);
}

HelixCheck helix_property_check(const ParamSurface& S, double u0, int samples) {
    if (S.family != SurfaceFamily::Dini) {
        throw DomainViolation("helix property check expects a dini surface");
    }
    if (!(u0 >= S.domain.u0 && u0 <= S.domain.u1)) {
        throw DomainViolation("u0 outside the surface domain");
    }
    if (samples < 3) throw InvalidRange("need at least 3 samples");

    std::vector<double> vs(samples), dist(samples), zs(samples), phis(samples);
    for (int i = 0; i < samples; ++i) {
        const double v = S.domain.v0 + i * (S.domain.v1 - S.domain.v0) / (samples - 1);
        const Vec3 p = S.eval(u0, v);
        vs[i] = v;
        dist[i] = std::hypot(p.x, p.y);
        zs[i] = p.z;
        phis[i] = std::atan2(p.y, p.x);
    }
    const auto phi_unwrapped = unwrap(phis);

    HelixCheck out;
    out.radius = std::accumulate(dist.begin(), dist.end(), 0.0) / samples;
    double dev_r = 0.0;
    for (double di : dist) dev_r = std::max(dev_r, std::abs(di - out.radius));

    const auto [az, bz] = affine_fit(vs, zs);
    const auto [ap, bp] = affine_fit(vs, phi_unwrapped);
    out.pitch = 2 * Angle::kPi * az / ap;
    out.max_dev = std::max({dev_r, max_fit_residual(vs, zs, az, bz),
                            max_fit_residual(vs, phi_unwrapped, ap, bp)});
    return out;
}

SphereCheck sphere_property_check(const ParamSurface& S, double v0, int samples) {
    if (S.family != SurfaceFamily::Dini) {
        throw DomainViolation("sphere property check expects a dini surface");
    }
    if (!(v0 >= S.domain.v0 && v0 <= S.domain.v1)) {
        throw DomainViolation("v0 outside the surface domain");
    }
    if (samples < 3) throw InvalidRange("need at least 3 samples");

    SphereCheck out;
    out.center_z = v0;
    const Vec3 center{0, 0, v0};
    std::vector<double> dist(samples);
    for (int i = 0; i < samples; ++i) {
        const double u = S.domain.u0 + i * (S.domain.u1 - S.domain.u0) / (samples - 1);
        dist[i] = (S.eval(u, v0) - center).norm();
    }
    out.radius = std::accumulate(dist.begin(), dist.end(), 0.0) / samples;
    for (double di : dist) out.max_dev = std::max(out.max_dev, std::abs(di - out.radius));

    for (int i = 1; i + 1 < samples; ++i) {
        const double u = S.domain.u0 + i * (S.domain.u1 - S.domain.u0) / (samples - 1);
        const SurfaceJet J = jet(S, u, v0);
        out.unit_speed_max_dev = std::max(out.unit_speed_max_dev, std::abs(J.Fu.norm() - 1.0));
    }
    return out;
}

const char* to_string(FamilyLabel::Tag tag) {
    switch (tag) {
        case FamilyLabel::Tag::Halfplane: return "halfplane";
        case FamilyLabel::Tag::Rotational: return "rotational";
        case FamilyLabel::Tag::LogSpiralCylinder: return "logspiral_cylinder";
        case FamilyLabel::Tag::Dini: return "dini";
        case FamilyLabel::Tag::NotConstantAngle: return "not_constant_angle";
        case FamilyLabel::Tag::Unknown: return "unknown";
    }
    return "unknown";
}

namespace {

// c of the logspiral cylinder, from a spiral fit of a u-line of the grid:
// phi is affine in log r with intercept log c + tan(theta) log cos(theta).
double fit_logspiral_c(const ParamSurface& S, double theta_hat, int nu) {
    const double v_mid = 0.5 * (S.domain.v0 + S.domain.v1);
    std::vector<double> logr(nu), phi(nu);
    for (int i = 0; i < nu; ++i) {
        const double u = S.domain.u0 + (i + 1) * (S.domain.u1 - S.domain.u0) / (nu + 1);
        const Vec3 p = S.eval(u, v_mid);
        logr[i] = std::log(std::hypot(p.x, p.y));
        phi[i] = std::atan2(p.y, p.x);
    }
    const auto phi_unwrapped = unwrap(phi);
    const auto [slope, intercept] = affine_fit(logr, phi_unwrapped);
    (void)slope;  // ~ -tan(theta); the angle estimate from the report is better
    return std::exp(intercept - std::tan(theta_hat) * std::log(std::cos(theta_hat)));
}

}  // namespace

FamilyLabel classify_surface(const ParamSurface& S, const KillingField& V, ClassifyConfig cfg) {
    if (cfg.nu < 5 || cfg.nv < 5) throw DegenerateGrid("classifier needs at least a 5x5 grid");
    double tol_angle = cfg.tol_angle;
    if (!(tol_angle > 0.0)) tol_angle = S.has_analytic_jet() ? 1e-4 : 1e-3;

    const auto angles = surface_angles(S, V, cfg.nu, cfg.nv);
    const AngleReport rep = summarize(angles, true);

    FamilyLabel label;
    if (rep.theta_max_dev > tol_angle) {
        label.tag = FamilyLabel::Tag::NotConstantAngle;
        return label;
    }
    label.theta_hat = rep.theta_mean;
    if (rep.theta_mean < tol_angle) {
        label.tag = FamilyLabel::Tag::Halfplane;
        return label;
    }
    if (std::abs(rep.theta_mean - Angle::kPi / 2) < tol_angle) {
        label.tag = FamilyLabel::Tag::Rotational;
        return label;
    }

    // Curvature signature over the same grid.
    std::vector<double> Ks;
    Ks.reserve(static_cast<std::size_t>(cfg.nu) * cfg.nv);
    const auto& d = S.domain;
    for (int i = 0; i < cfg.nu; ++i) {
        const double u = d.u0 + (i + 1) * (d.u1 - d.u0) / (cfg.nu + 1);
        for (int jdx = 0; jdx < cfg.nv; ++jdx) {
            const double v = d.v0 + (jdx + 1) * (d.v1 - d.v0) / (cfg.nv + 1);
            Ks.push_back(curvatures(fundamental_forms(jet(S, u, v))).K);
        }
    }
    const double K_mean = std::accumulate(Ks.begin(), Ks.end(), 0.0) /
                          static_cast<double>(Ks.size());
    double K_abs_max = 0.0, K_spread = 0.0;
    for (double k : Ks) {
        K_abs_max = std::max(K_abs_max, std::abs(k));
        K_spread = std::max(K_spread, std::abs(k - K_mean));
    }

    if (K_abs_max < cfg.tol_K) {
        label.tag = FamilyLabel::Tag::LogSpiralCylinder;
        label.c_hat = fit_logspiral_c(S, label.theta_hat, cfg.nu);
        return label;
    }
    if (K_mean < 0.0 && K_spread < cfg.tol_K * std::abs(K_mean)) {
        label.tag = FamilyLabel::Tag::Dini;
        label.c_hat = std::sqrt(-K_mean) / std::tan(label.theta_hat);
        return label;
    }
    label.tag = FamilyLabel::Tag::Unknown;
    return label;
}

}  // namespace constangle
