// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances are fixed here, not tuned at runtime.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "constangle/cli.hpp"
#include "constangle/verify.hpp"
#include "test_util.hpp"

using namespace constangle;

namespace {

constexpr double kPi = Angle::kPi;
int g_failures = 0;

void criterion(int id, const std::string& name, const std::function<bool()>& body) {
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string(" (exception: ") + e.what() + ")";
    }
    std::printf("[%s] criterion %2d: %s%s\n", ok ? "PASS" : "FAIL", id, name.c_str(),
                note.c_str());
    if (!ok) ++g_failures;
}

struct Draw {
    double theta;
    double c;
};

std::vector<Draw> draws(int count, std::uint64_t seed) {
    test_util::Rng rng(seed);
    std::vector<Draw> out;
    for (int i = 0; i < count; ++i) {
        out.push_back({rng.uniform(0.2, 1.3), rng.uniform(0.3, 3.0)});
    }
    return out;
}

ParamSurface family_surface(int which, const Draw& d) {
    switch (which) {
        case 0: return halfplane(d.theta, {0.5, 2.0, -1.0, 1.0});
        case 1:
            return rotational_surface(RotationalProfile::catenoid(d.c),
                                      {1.1 * d.c, 3.0 * d.c, 0.0, 2 * kPi});
        case 2: return logspiral_cylinder(Angle(d.theta), d.c, {0.5, 2.0, 0.0, 1.0});
        default: return dini_surface(Angle(d.theta), d.c, dini_band_domain(d.c));
    }
}

double nominal_angle(int which, const Draw& d) {
    switch (which) {
        case 0: return 0.0;
        case 1: return kPi / 2;
        default: return d.theta;
    }
}

double max_dev_from(const ParamSurface& S, double nominal, int nu, int nv) {
    double worst = 0.0;
    for (double a : surface_angles(S, KillingField::rotation_z(), nu, nv)) {
        worst = std::max(worst, std::abs(a - nominal));
    }
    return worst;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream is(p, std::ios::binary);
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

std::filesystem::path temp_file(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "constangle_acceptance";
    std::filesystem::create_directories(dir);
    return dir / name;
}

}  // namespace

int main() {
    criterion(1, "all four families hold their nominal angle (analytic and fd jets)", [] {
        for (const Draw& d : draws(10, 1001)) {
            for (int which = 0; which < 4; ++which) {
                const ParamSurface S = family_surface(which, d);
                const double nominal = nominal_angle(which, d);
                if (max_dev_from(S, nominal, 32, 32) >= 1e-6) return false;
                if (max_dev_from(S.without_analytic_jet(), nominal, 32, 32) >= 1e-3) {
                    return false;
                }
            }
        }
        return true;
    });

    criterion(2, "dini gaussian curvature K = -c^2 tan^2(theta) to 1e-4 relative", [] {
        auto check = [](double theta, double c) {
            const ParamSurface S = dini_surface(Angle(theta), c, dini_band_domain(c));
            const double expect = c * c * std::tan(theta) * std::tan(theta);
            const auto& dom = S.domain;
            for (int i = 0; i < 32; ++i) {
                const double u = dom.u0 + (i + 1) * (dom.u1 - dom.u0) / 33;
                for (int j = 0; j < 32; ++j) {
                    const double v = dom.v0 + (j + 1) * (dom.v1 - dom.v0) / 33;
                    const double K = curvatures(fundamental_forms(jet(S, u, v))).K;
                    if (std::abs(K + expect) / expect >= 1e-4) return false;
                }
            }
            return true;
        };
        for (const Draw& d : draws(10, 1002)) {
            if (!check(d.theta, d.c)) return false;
        }
        return check(kPi / 4, 2.0);  // the worked instance, K = -4
    });

    criterion(3, "catenoid is minimal (|H| < 1e-6) and meets the field at pi/2", [] {
        const ParamSurface S =
            rotational_surface(RotationalProfile::catenoid(1.0), {1.1, 3.0, 0.0, 2 * kPi});
        const auto& dom = S.domain;
        for (int i = 0; i < 32; ++i) {
            const double u = dom.u0 + (i + 1) * (dom.u1 - dom.u0) / 33;
            for (int j = 0; j < 32; ++j) {
                const double v = dom.v0 + (j + 1) * (dom.v1 - dom.v0) / 33;
                if (std::abs(curvatures(fundamental_forms(jet(S, u, v))).H) >= 1e-6) {
                    return false;
                }
            }
        }
        return max_dev_from(S, kPi / 2, 32, 32) < 1e-6;
    });

    criterion(4, "flat cases: |K| < 1e-8, halfplane totally geodesic", [] {
        const ParamSurface hp = halfplane(0.3, {0.5, 2.0, -1.0, 1.0});
        const ParamSurface cyl = logspiral_cylinder(Angle(0.7), 1.2, {0.5, 2.0, 0.0, 1.0});
        for (const ParamSurface* S : {&hp, &cyl}) {
            const auto& dom = S->domain;
            for (int i = 0; i < 16; ++i) {
                const double u = dom.u0 + (i + 1) * (dom.u1 - dom.u0) / 17;
                for (int j = 0; j < 16; ++j) {
                    const double v = dom.v0 + (j + 1) * (dom.v1 - dom.v0) / 17;
                    const auto f = fundamental_forms(jet(*S, u, v));
                    if (std::abs(curvatures(f).K) >= 1e-8) return false;
                    if (S == &hp &&
                        (std::abs(f.L) >= 1e-8 || std::abs(f.M) >= 1e-8 ||
                         std::abs(f.N2) >= 1e-8)) {
                        return false;
                    }
                }
            }
        }
        return true;
    });

    criterion(5, "all nine dini pde residuals < 1e-9 on a 10x10 grid", [] {
        for (const Draw& d : draws(5, 1005)) {
            const Interval band = dini_admissible_band(d.c);
            for (int i = 0; i < 10; ++i) {
                const double u = band.lo + (i + 0.5) * band.length() / 10;
                for (int j = 0; j < 10; ++j) {
                    const double v = -1.0 + (j + 0.5) * 0.2;
                    for (double r : dini_pde_residuals(Angle(d.theta), d.c, u, v)) {
                        if (std::abs(r) >= 1e-9) return false;
                    }
                }
            }
        }
        return true;
    });

    criterion(6, "helix and sphere properties of the dini parameter curves", [] {
        for (const Draw& d : draws(5, 1006)) {
            const ParamSurface S =
                dini_surface(Angle(d.theta), d.c, dini_band_domain(d.c, -1.0, 1.0));
            const double u0 = 0.5 * (S.domain.u0 + S.domain.u1);
            const HelixCheck h = helix_property_check(S, u0);
            const double radius_expect = std::cos(d.theta) * std::sin(d.c * u0) / d.c;
            const double pitch_expect = 2 * kPi * std::cos(d.theta) / (d.c * std::tan(d.theta));
            if (std::abs(h.radius - radius_expect) / radius_expect >= 1e-8) return false;
            if (std::abs(std::abs(h.pitch) - pitch_expect) / pitch_expect >= 1e-8) return false;

            const SphereCheck sc = sphere_property_check(S, 0.25);
            if (std::abs(sc.radius - std::cos(d.theta) / d.c) >= 1e-10) return false;
        }
        // worked instance: theta = pi/3, c = 1 gives radius 1/2
        const ParamSurface S = dini_surface(Angle(kPi / 3), 1.0, dini_band_domain(1.0));
        return std::abs(sphere_property_check(S, 0.5).radius - 0.5) < 1e-10;
    });

    criterion(7, "curve families: spiral point, convergence order, sphere and cone", [] {
        // log spiral through r = e at phi = 1 (theta = pi/4, phi0 = 0)
        const double s_star = std::exp(1.0) / std::sin(kPi / 4);
        const Polyline3 spiral = planar_killing_curve(PlanarCurveKind::log_spiral(kPi / 4, 0.0),
                                                      {s_star, s_star + 1.0}, 9);
        const Vec3 p = spiral[0].point;
        if (std::abs(std::hypot(p.x, p.y) - std::exp(1.0)) >= 1e-10) return false;
        if (std::abs(std::atan2(p.y, p.x) - 1.0) >= 1e-10) return false;

        // angle-condition error drops by >= 6x when n doubles
        const OmegaSpec omega = OmegaSpec::custom([](double s) { return std::sin(0.8 * s); });
        auto max_dev = [&](int n) {
            const Polyline3 c = spatial_killing_curve(omega, Angle(0.9), 1.5, {0.0, 3.0}, n);
            double worst = 0.0;
            for (double a : curve_angles(c, KillingField::rotation_z())) {
                worst = std::max(worst, std::abs(a - 0.9));
            }
            return worst;
        };
        if (max_dev(41) / max_dev(81) < 6.0) return false;

        // affine omega: on the sphere of radius sin(theta)/|m| at n = 10^4
        const double theta = kPi / 6, m = 0.5;
        const Polyline3 sphere_curve = spatial_killing_curve(
            OmegaSpec::affine(m, 0.0), Angle(theta), 0.0, {0.4, 2 * kPi - 0.4}, 10001);
        const double radius = std::sin(theta) / m;
        for (const auto& smp : sphere_curve.samples) {
            if (std::abs(smp.point.norm() - radius) >= 1e-6) return false;
        }

        // constant omega: on the cone x^2 + y^2 = cotan^2(w0) z^2
        const double w0 = kPi / 4;
        const Polyline3 cone_curve = spatial_killing_curve(OmegaSpec::constant(w0),
                                                           Angle(kPi / 4), 0.0, {0.3, 5.0}, 4001);
        const double cot2 = 1.0 / (std::tan(w0) * std::tan(w0));
        for (const auto& smp : cone_curve.samples) {
            const Vec3& q = smp.point;
            if (std::abs(q.x * q.x + q.y * q.y - cot2 * q.z * q.z) >= 1e-6) return false;
        }
        return true;
    });

    criterion(8, "killing algebra: basis residuals < 1e-8, (x,0,0) detected", [] {
        test_util::Rng rng(1008);
        for (int b = 0; b < 6; ++b) {
            const KillingField V = KillingField::basis(b);
            for (int i = 0; i < 100; ++i) {
                const Vec3 p = rng.vec3(-2, 2);
                const Vec3 Y = rng.vec3(-1, 1);
                const Vec3 Z = rng.vec3(-1, 1);
                if (std::abs(killing_residual(V, p, Y, Z)) >= 1e-8) return false;
            }
        }
        auto stretch = [](const Vec3& q) { return Vec3{q.x, 0, 0}; };
        return std::abs(killing_residual(stretch, {0.5, 1.0, -2.0}, {1, 0, 0}, {1, 0, 0})) >=
               1.0;
    });

    criterion(9, "classifier round trip over 20 draws, off-axis sphere rejected", [] {
        const auto ds = draws(20, 1009);
        for (int i = 0; i < 20; ++i) {
            const int which = i % 4;
            const FamilyLabel label = classify_surface(family_surface(which, ds[i]));
            switch (which) {
                case 0:
                    if (label.tag != FamilyLabel::Tag::Halfplane) return false;
                    if (std::abs(label.theta_hat - 0.0) >= 1e-4) return false;
                    break;
                case 1:
                    if (label.tag != FamilyLabel::Tag::Rotational) return false;
                    if (std::abs(label.theta_hat - kPi / 2) >= 1e-4) return false;
                    break;
                case 2:
                    if (label.tag != FamilyLabel::Tag::LogSpiralCylinder) return false;
                    if (std::abs(label.theta_hat - ds[i].theta) >= 1e-4) return false;
                    if (std::abs(label.c_hat - ds[i].c) >= 1e-3) return false;
                    break;
                default:
                    if (label.tag != FamilyLabel::Tag::Dini) return false;
                    if (std::abs(label.theta_hat - ds[i].theta) >= 1e-4) return false;
                    if (std::abs(label.c_hat - ds[i].c) >= 1e-3) return false;
            }
        }
        ParamSurface sphere;
        sphere.domain = {-1.0, 1.0, -1.0, 1.0};
        sphere.eval = [](double u, double v) {
            return Vec3{2.5 + std::cos(u) * std::cos(v), std::cos(u) * std::sin(v),
                        std::sin(u)};
        };
        return classify_surface(sphere).tag == FamilyLabel::Tag::NotConstantAngle;
    });

    criterion(10, "cli outputs are byte-identical over 5 repetitions", [] {
        struct Job {
            std::string name;
            std::vector<std::string> args;
        };
        const std::vector<Job> jobs = {
            {"det.obj",
             {"surface", "--family", "dini", "--theta", "pi/3", "--c", "1", "--nu", "48",
              "--nv", "48"}},
            {"det.csv",
             {"curve", "--kind", "spatial", "--theta", "0.9", "--omega", "affine:0.7,0.1",
              "--r0", "1", "--s0", "0", "--s1", "4", "--n", "501"}},
            {"det.json",
             {"report", "--family", "dini", "--theta", "pi/4", "--c", "2", "--nu", "16",
              "--nv", "16"}},
        };
        for (const Job& job : jobs) {
            std::string first;
            for (int rep = 0; rep < 5; ++rep) {
                const auto path = temp_file(job.name);
                auto args = job.args;
                args.push_back("--out");
                args.push_back(path.string());
                if (cli::run(args) != 0) return false;
                const std::string bytes = slurp(path);
                if (bytes.empty()) return false;
                if (rep == 0) {
                    first = bytes;
                } else if (bytes != first) {
                    return false;
                }
            }
        }
        return true;
    });

    if (g_failures == 0) {
        std::printf("acceptance: all criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) failed\n", g_failures);
    return 1;
}
