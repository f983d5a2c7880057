#include "constangle/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <numeric>
#include <optional>

#include "constangle/diffgeo.hpp"
#include "constangle/mesh.hpp"
#include "constangle/verify.hpp"

namespace constangle::cli {

namespace {

double parse_double_strict(const std::string& s) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end == nullptr || *end != '\0' || s.empty()) {
        throw CLI::ValidationError("not a number: '" + s + "'");
    }
    return v;
}

struct FieldArgs {
    std::string name = "rotZ";
    std::vector<double> coeffs;

    KillingField make() const {
        if (!coeffs.empty()) {
            if (coeffs.size() != 6) {
                throw CLI::ValidationError("--coeffs needs exactly 6 values");
            }
            KillingField f;
            for (int i = 0; i < 6; ++i) f.coeff[static_cast<std::size_t>(i)] = coeffs[i];
            return f;
        }
        if (name == "dx") return KillingField::translation_x();
        if (name == "dy") return KillingField::translation_y();
        if (name == "dz") return KillingField::translation_z();
        if (name == "rotZ") return KillingField::rotation_z();
        if (name == "rotX") return KillingField::rotation_x();
        if (name == "rotY") return KillingField::rotation_y();
        throw CLI::ValidationError("unknown field '" + name +
                                   "' (use dx, dy, dz, rotX, rotY, rotZ or --coeffs)");
    }

    void add_to(CLI::App* cmd) {
        cmd->add_option("--field", name, "Killing field: dx, dy, dz, rotX, rotY, rotZ");
        cmd->add_option("--coeffs", coeffs,
                        "Killing coefficients over (dx, dy, dz, rotZ, rotX, rotY)");
    }
};

struct SurfaceArgs {
    std::string family;
    std::string theta_str = "pi/4";
    double c = 1.0;
    double phi0 = 0.0;
    std::string profile = "catenoid";
    double scale = 1.0;
    double margin = 0.1;
    std::optional<double> u0, u1, v0, v1;

    void add_to(CLI::App* cmd) {
        cmd->add_option("--family", family, "halfplane, rotational, logspiral or dini")
            ->required();
        cmd->add_option("--theta", theta_str, "constant angle in radians (pi/4, 0.5, ...)");
        cmd->add_option("--c", c, "family constant (logspiral, dini)");
        cmd->add_option("--phi0", phi0, "halfplane azimuth");
        cmd->add_option("--profile", profile, "rotational profile: catenoid, plane, cone");
        cmd->add_option("--scale", scale, "rotational profile scale");
        cmd->add_option("--margin", margin, "dini band margin in cu");
        auto opt = [&](const char* n, std::optional<double>& slot, const char* help) {
            cmd->add_option_function<double>(n, [&slot](double x) { slot = x; }, help);
        };
        opt("--u0", u0, "domain u lower bound");
        opt("--u1", u1, "domain u upper bound");
        opt("--v0", v0, "domain v lower bound");
        opt("--v1", v1, "domain v upper bound");
    }

    double theta() const {
        const double th = parse_angle(theta_str);
        if (!(th >= 0.0 && th <= Angle::kPi / 2)) {
            throw CLI::ValidationError("--theta must lie in [0, pi/2]");
        }
        return th;
    }

    SurfaceDomain domain_or(SurfaceDomain dflt) const {
        SurfaceDomain d = dflt;
        if (u0) d.u0 = *u0;
        if (u1) d.u1 = *u1;
        if (v0) d.v0 = *v0;
        if (v1) d.v1 = *v1;
        return d;
    }

    ParamSurface make() const {
        if (family == "halfplane") {
            return halfplane(phi0, domain_or({0.5, 2.0, -1.0, 1.0}));
        }
        if (family == "rotational") {
            if (!(scale > 0.0)) throw CLI::ValidationError("--scale must be positive");
            if (profile == "catenoid") {
                return rotational_surface(RotationalProfile::catenoid(scale),
                                          domain_or({1.1 * scale, 3.0 * scale, 0.0,
                                                     2 * Angle::kPi}));
            }
            if (profile == "plane") {
                return rotational_surface(RotationalProfile::constant(0.0),
                                          domain_or({0.5, 2.0, 0.0, 2 * Angle::kPi}));
            }
            if (profile == "cone") {
                return rotational_surface(RotationalProfile::cone(scale),
                                          domain_or({0.5, 2.0, 0.0, 2 * Angle::kPi}));
            }
            throw CLI::ValidationError("unknown profile '" + profile + "'");
        }
        const double th = theta();
        if (!(th > 0.0 && th < Angle::kPi / 2)) {
            throw CLI::ValidationError("--theta must lie strictly inside (0, pi/2) for " +
                                       family);
        }
        if (family == "logspiral") {
            if (!(c > 0.0)) throw CLI::ValidationError("--c must be positive for logspiral");
            return logspiral_cylinder(Angle(th), c, domain_or({0.5, 2.0, 0.0, 1.0}));
        }
        if (family == "dini") {
            if (c == 0.0) throw CLI::ValidationError("--c must be nonzero for dini");
            return dini_surface(Angle(th), c, domain_or(dini_band_domain(c, 0.0, 1.0, margin)),
                                margin);
        }
        throw CLI::ValidationError("unknown family '" + family + "'");
    }

    // Numeric flags echoed into JSON reports.
    std::vector<std::pair<std::string, double>> echo() const {
        std::vector<std::pair<std::string, double>> e;
        if (family == "halfplane") {
            e.emplace_back("phi0_rad", phi0);
        } else if (family == "rotational") {
            e.emplace_back("scale", scale);
        } else {
            e.emplace_back("theta_rad", theta());
            e.emplace_back("c", c);
        }
        return e;
    }
};

SurfaceReport compute_report(const ParamSurface& S, const KillingField& V, int nu, int nv,
                             bool classify) {
    const AngleReport rep = surface_angle_report(S, V, nu, nv);

    std::vector<double> Ks, Hs;
    Ks.reserve(static_cast<std::size_t>(nu) * nv);
    Hs.reserve(Ks.capacity());
    const auto& d = S.domain;
    for (int i = 0; i < nu; ++i) {
        const double u = d.u0 + (i + 1) * (d.u1 - d.u0) / (nu + 1);
        for (int j = 0; j < nv; ++j) {
            const double v = d.v0 + (j + 1) * (d.v1 - d.v0) / (nv + 1);
            const auto curv = curvatures(fundamental_forms(jet(S, u, v)));
            Ks.push_back(curv.K);
            Hs.push_back(curv.H);
        }
    }
    const double n = static_cast<double>(Ks.size());
    SurfaceReport out;
    out.theta_mean_rad = rep.theta_mean;
    out.theta_max_dev_rad = rep.theta_max_dev;
    out.K_mean = std::accumulate(Ks.begin(), Ks.end(), 0.0) / n;
    double var = 0.0;
    for (double k : Ks) var += (k - out.K_mean) * (k - out.K_mean);
    out.K_stddev = std::sqrt(var / n);
    out.H_mean = std::accumulate(Hs.begin(), Hs.end(), 0.0) / n;
    out.grid_nu = nu;
    out.grid_nv = nv;

    if (classify) {
        ClassifyConfig cfg;
        cfg.nu = std::max(nu, 5);
        cfg.nv = std::max(nv, 5);
        const FamilyLabel label = classify_surface(S, V, cfg);
        out.family = to_string(label.tag);
        if (label.tag == FamilyLabel::Tag::LogSpiralCylinder ||
            label.tag == FamilyLabel::Tag::Dini) {
            out.has_c_hat = true;
            out.c_hat = label.c_hat;
        }
    } else {
        switch (S.family) {
            case SurfaceFamily::Halfplane: out.family = "halfplane"; break;
            case SurfaceFamily::Rotational: out.family = "rotational"; break;
            case SurfaceFamily::LogSpiralCylinder: out.family = "logspiral_cylinder"; break;
            case SurfaceFamily::Dini: out.family = "dini"; break;
            case SurfaceFamily::Custom: out.family = "custom"; break;
        }
    }
    return out;
}

OmegaSpec parse_omega(const std::string& spec) {
    if (spec == "arccos") return OmegaSpec::arc_cos();
    const auto colon = spec.find(':');
    const std::string head = spec.substr(0, colon);
    const std::string tail = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (head == "const") return OmegaSpec::constant(parse_double_strict(tail));
    if (head == "affine") {
        const auto comma = tail.find(',');
        if (comma == std::string::npos) {
            throw CLI::ValidationError("affine omega needs 'affine:m,n'");
        }
        return OmegaSpec::affine(parse_double_strict(tail.substr(0, comma)),
                                 parse_double_strict(tail.substr(comma + 1)));
    }
    throw CLI::ValidationError("unknown omega spec '" + spec +
                               "' (const:w0, affine:m,n or arccos)");
}

}  // namespace

double parse_angle(const std::string& token) {
    if (token == "pi") return Angle::kPi;
    if (token == "pi/2") return Angle::kPi / 2;
    if (token == "pi/3") return Angle::kPi / 3;
    if (token == "pi/4") return Angle::kPi / 4;
    if (token == "pi/6") return Angle::kPi / 6;
    return parse_double_strict(token);
}

int run(const std::vector<std::string>& args) {
    CLI::App app{"constant-angle curve and surface kernel"};
    app.require_subcommand(1);

    // ---- curve ----
    auto* curve = app.add_subcommand("curve", "generate a constant-angle curve as CSV");
    std::string kind = "logspiral";
    std::string curve_theta = "pi/4";
    double r0 = 1.0, direction = 0.0, phi0 = 0.0, sigma_scale = 1.0;
    std::string omega_spec = "const:0";
    double s0 = 0.2, s1 = 5.0;
    int cn = 401;
    std::string curve_out;
    curve->add_option("--kind", kind, "circle, line, logspiral, vs-circle or spatial");
    curve->add_option("--theta", curve_theta, "constant angle");
    curve->add_option("--r0", r0, "circle radius / spatial radial constant");
    curve->add_option("--direction", direction, "line direction angle");
    curve->add_option("--phi0", phi0, "log spiral phase");
    curve->add_option("--sigma-scale", sigma_scale, "vs-circle: sigma(s) = scale * s");
    curve->add_option("--omega", omega_spec, "spatial: const:w0, affine:m,n or arccos");
    curve->add_option("--s0", s0, "parameter range start");
    curve->add_option("--s1", s1, "parameter range end");
    curve->add_option("--n", cn, "sample count");
    curve->add_option("--out", curve_out, "output CSV path")->required();

    // ---- surface ----
    auto* surface = app.add_subcommand("surface", "generate a surface mesh as OBJ");
    SurfaceArgs surf_args;
    surf_args.add_to(surface);
    int mesh_nu = 64, mesh_nv = 64;
    bool channels = false;
    FieldArgs surf_field;
    std::string surf_out;
    surface->add_option("--nu", mesh_nu, "grid size in u");
    surface->add_option("--nv", mesh_nv, "grid size in v");
    surface->add_flag("--channels", channels, "emit per-vertex K/H/angle CSV next to the OBJ");
    surf_field.add_to(surface);
    surface->add_option("--out", surf_out, "output OBJ path")->required();

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "angle report of a surface against a field");
    SurfaceArgs verify_args;
    verify_args.add_to(verify);
    FieldArgs verify_field;
    verify_field.add_to(verify);
    int verify_nu = 32, verify_nv = 32;
    bool as_json = false;
    std::string verify_out = "-";
    verify->add_option("--nu", verify_nu, "grid size in u");
    verify->add_option("--nv", verify_nv, "grid size in v");
    verify->add_flag("--json", as_json, "emit the full JSON report");
    verify->add_option("--out", verify_out, "output path or - for stdout");

    // ---- classify ----
    auto* classify = app.add_subcommand("classify", "classify a generated surface");
    SurfaceArgs classify_args;
    classify_args.add_to(classify);
    FieldArgs classify_field;
    classify_field.add_to(classify);
    int classify_nu = 32, classify_nv = 32;
    std::string classify_out = "-";
    classify->add_option("--nu", classify_nu, "grid size in u");
    classify->add_option("--nv", classify_nv, "grid size in v");
    classify->add_option("--out", classify_out, "output path or - for stdout");

    // ---- report ----
    auto* report = app.add_subcommand("report", "full JSON report (angles, curvature, family)");
    SurfaceArgs report_args;
    report_args.add_to(report);
    FieldArgs report_field;
    report_field.add_to(report);
    int report_nu = 32, report_nv = 32;
    std::string report_out = "-";
    report->add_option("--nu", report_nu, "grid size in u");
    report->add_option("--nv", report_nv, "grid size in v");
    report->add_option("--out", report_out, "output path or - for stdout");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);

        if (curve->parsed()) {
            Polyline3 poly;
            if (kind == "circle") {
                poly = planar_killing_curve(PlanarCurveKind::circle(r0), {s0, s1}, cn);
            } else if (kind == "line") {
                poly = planar_killing_curve(PlanarCurveKind::line(direction), {s0, s1}, cn);
            } else if (kind == "logspiral") {
                poly = planar_killing_curve(
                    PlanarCurveKind::log_spiral(parse_angle(curve_theta), phi0), {s0, s1}, cn);
            } else if (kind == "vs-circle") {
                poly = curve_vs_circle([sigma_scale](double s) { return sigma_scale * s; },
                                       Angle(parse_angle(curve_theta)), {s0, s1}, cn);
            } else if (kind == "spatial") {
                poly = spatial_killing_curve(parse_omega(omega_spec),
                                             Angle(parse_angle(curve_theta)), r0, {s0, s1}, cn);
            } else {
                throw CLI::ValidationError("unknown curve kind '" + kind + "'");
            }
            write_csv(poly, curve_out);
        } else if (surface->parsed()) {
            const ParamSurface S = surf_args.make();
            MeshData mesh = grid_mesh(S, mesh_nu, mesh_nv);
            if (channels) {
                fill_channels(mesh, S, surf_field.make());
                write_channels_csv(mesh, surf_out + ".channels.csv");
            }
            write_obj(mesh, surf_out);
        } else if (verify->parsed()) {
            const ParamSurface S = verify_args.make();
            const KillingField V = verify_field.make();
            if (as_json) {
                SurfaceReport rep = compute_report(S, V, verify_nu, verify_nv,
                                                   /*classify=*/false);
                rep.echo = verify_args.echo();
                write_report_json(rep, verify_out);
            } else {
                const AngleReport rep = surface_angle_report(S, V, verify_nu, verify_nv);
                std::cout << "theta_mean_rad " << rep.theta_mean << '\n'
                          << "theta_max_dev_rad " << rep.theta_max_dev << '\n';
            }
        } else if (classify->parsed()) {
            const ParamSurface S = classify_args.make();
            ClassifyConfig cfg;
            cfg.nu = classify_nu;
            cfg.nv = classify_nv;
            const FamilyLabel label = classify_surface(S, classify_field.make(), cfg);
            nlohmann::json j;
            j["family"] = to_string(label.tag);
            if (label.tag == FamilyLabel::Tag::NotConstantAngle) {
                j["theta_hat_rad"] = nullptr;
            } else {
                j["theta_hat_rad"] = label.theta_hat;
            }
            if (label.tag == FamilyLabel::Tag::LogSpiralCylinder ||
                label.tag == FamilyLabel::Tag::Dini) {
                j["c_hat"] = label.c_hat;
            } else {
                j["c_hat"] = nullptr;
            }
            const std::string text = j.dump(2) + '\n';
            if (classify_out.empty() || classify_out == "-") {
                std::cout << text;
            } else {
                std::ofstream os(classify_out, std::ios::binary);
                if (!os) throw IoError("cannot open for writing: " + classify_out);
                os << text;
            }
        } else if (report->parsed()) {
            const ParamSurface S = report_args.make();
            SurfaceReport rep = compute_report(S, report_field.make(), report_nu, report_nv,
                                               /*classify=*/true);
            rep.echo = report_args.echo();
            write_report_json(rep, report_out);
        }
        return 0;
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const GeomError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
}

int run(int argc, const char* const* argv) {
    std::vector<std::string> args;
    args.reserve(static_cast<std::size_t>(argc > 0 ? argc - 1 : 0));
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args);
}

}  // namespace constangle::cli
