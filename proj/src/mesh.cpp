#include "constangle/mesh.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>

#include "constangle/diffgeo.hpp"
#include "constangle/geometry.hpp"

namespace constangle {

namespace {

std::string fmt17(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::ofstream open_or_throw(const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw IoError("cannot open for writing: " + path);
    return os;
}

}  // namespace

MeshData grid_mesh(const ParamSurface& S, int nu, int nv) {
    if (nu < 2 || nv < 2) throw DegenerateGrid("mesh grid must be at least 2x2");
    MeshData m;
    m.nu = nu;
    m.nv = nv;
    m.vertices.reserve(static_cast<std::size_t>(nu) * nv);
    m.us.reserve(m.vertices.capacity());
    m.vs.reserve(m.vertices.capacity());
    const auto& d = S.domain;
    for (int j = 0; j < nv; ++j) {
        const double v = d.v0 + j * (d.v1 - d.v0) / (nv - 1);
        for (int i = 0; i < nu; ++i) {
            const double u = d.u0 + i * (d.u1 - d.u0) / (nu - 1);
            m.vertices.push_back(S.eval(u, v));
            m.us.push_back(u);
            m.vs.push_back(v);
        }
    }
    m.faces.reserve(2 * static_cast<std::size_t>(nu - 1) * (nv - 1));
    for (int j = 0; j + 1 < nv; ++j) {
        for (int i = 0; i + 1 < nu; ++i) {
            const int a = j * nu + i;
            const int b = a + 1;
            const int c = a + nu;
            const int dd = c + 1;
            m.faces.push_back({a, b, dd});
            m.faces.push_back({a, dd, c});
        }
    }
    return m;
}

void fill_channels(MeshData& mesh, const ParamSurface& S, const KillingField& V) {
    const std::size_t n = mesh.vertices.size();
    mesh.channel_K.resize(n);
    mesh.channel_H.resize(n);
    mesh.channel_angle.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const SurfaceJet J = jet(S, mesh.us[i], mesh.vs[i]);
        const auto forms = fundamental_forms(J);
        const auto curv = curvatures(forms);
        mesh.channel_K[i] = curv.K;
        mesh.channel_H[i] = curv.H;
        const double a = angle_between(V.eval(J.F), forms.normal).radians();
        mesh.channel_angle[i] = std::min(a, Angle::kPi - a);
    }
}

void write_csv(const Polyline3& c, std::ostream& os) {
    os << "s,x,y,z\n";
    for (const auto& smp : c.samples) {
        os << fmt17(smp.s) << ',' << fmt17(smp.point.x) << ',' << fmt17(smp.point.y) << ','
           << fmt17(smp.point.z) << '\n';
    }
}

void write_csv(const Polyline3& c, const std::string& path) {
    auto os = open_or_throw(path);
    write_csv(c, os);
    if (!os) throw IoError("write failed: " + path);
}

void write_obj(const MeshData& mesh, std::ostream& os) {
    for (const auto& v : mesh.vertices) {
        os << "v " << fmt17(v.x) << ' ' << fmt17(v.y) << ' ' << fmt17(v.z) << '\n';
    }
    for (const auto& f : mesh.faces) {
        os << "f " << f[0] + 1 << ' ' << f[1] + 1 << ' ' << f[2] + 1 << '\n';
    }
}

void write_obj(const MeshData& mesh, const std::string& path) {
    auto os = open_or_throw(path);
    write_obj(mesh, os);
    if (!os) throw IoError("write failed: " + path);
}

void write_channels_csv(const MeshData& mesh, const std::string& path) {
    auto os = open_or_throw(path);
    os << "u,v,K,H,angle_rad\n";
    for (std::size_t i = 0; i < mesh.vertices.size(); ++i) {
        os << fmt17(mesh.us[i]) << ',' << fmt17(mesh.vs[i]) << ',' << fmt17(mesh.channel_K[i])
           << ',' << fmt17(mesh.channel_H[i]) << ',' << fmt17(mesh.channel_angle[i]) << '\n';
    }
    if (!os) throw IoError("write failed: " + path);
}

void write_report_json(const SurfaceReport& report, std::ostream& os) {
    nlohmann::json j;  // keys end up alphabetically ordered
    j["theta_mean_rad"] = report.theta_mean_rad;
    j["theta_max_dev_rad"] = report.theta_max_dev_rad;
    j["K_mean"] = report.K_mean;
    j["K_stddev"] = report.K_stddev;
    j["H_mean"] = report.H_mean;
    j["family"] = report.family;
    if (report.has_c_hat) {
        j["c_hat"] = report.c_hat;
    } else {
        j["c_hat"] = nullptr;
    }
    j["grid_nu"] = report.grid_nu;
    j["grid_nv"] = report.grid_nv;
    for (const auto& [key, value] : report.echo) j[key] = value;
    os << j.dump(2) << '\n';
}

void write_report_json(const SurfaceReport& report, const std::string& path_or_dash) {
    if (path_or_dash.empty() || path_or_dash == "-") {
        write_report_json(report, std::cout);
        return;
    }
    auto os = open_or_throw(path_or_dash);
    write_report_json(report, os);
    if (!os) throw IoError("write failed: " + path_or_dash);
}

}  // namespace constangle
