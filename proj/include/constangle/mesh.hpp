#pragma once
// Grid meshing of parametric surfaces and the file exporters (CSV polylines,
// OBJ meshes, JSON reports). All writers emit byte-identical output for
// identical inputs.

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "constangle/curves.hpp"
#include "constangle/killing.hpp"
#include "constangle/surface.hpp"

namespace constangle {

struct MeshData {
    int nu = 0, nv = 0;
    std::vector<Vec3> vertices;                // nu * nv, u fastest
    std::vector<std::array<int, 3>> faces;     // 0-based; 1-based on OBJ emission
    // Optional per-vertex scalar channels (empty or vertex-sized).
    std::vector<double> channel_K, channel_H, channel_angle;
    std::vector<double> us, vs;  // parameter values per vertex
};

// Samples the closed domain rectangle on a uniform nu x nv grid and splits
// every quad along its (u,v) -> (u+1,v+1) diagonal.
MeshData grid_mesh(const ParamSurface& S, int nu, int nv);

// Fills the K, H and folded-angle channels at every vertex.
void fill_channels(MeshData& mesh, const ParamSurface& S, const KillingField& V);

// Header `s,x,y,z`, one row per sample, 17 significant digits.
void write_csv(const Polyline3& c, std::ostream& os);
void write_csv(const Polyline3& c, const std::string& path);

// `v x y z` lines then 1-based `f i j k` lines.
void write_obj(const MeshData& mesh, std::ostream& os);
void write_obj(const MeshData& mesh, const std::string& path);

// Sibling CSV for the scalar channels (`u,v,K,H,angle_rad`).
void write_channels_csv(const MeshData& mesh, const std::string& path);

// Flat JSON report with a fixed, alphabetically ordered key set.
struct SurfaceReport {
    double theta_mean_rad = 0.0;
    double theta_max_dev_rad = 0.0;
    double K_mean = 0.0;
    double K_stddev = 0.0;
    double H_mean = 0.0;
    std::string family;
    bool has_c_hat = false;
    double c_hat = 0.0;
    int grid_nu = 0, grid_nv = 0;
    std::vector<std::pair<std::string, double>> echo;  // numeric flags echoed back
};

void write_report_json(const SurfaceReport& report, std::ostream& os);
void write_report_json(const SurfaceReport& report, const std::string& path_or_dash);

}  // namespace constangle
