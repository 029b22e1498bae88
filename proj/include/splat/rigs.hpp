#pragma once

#include "splat/io.hpp"

namespace splat {

enum class RigKind { Orbit, Hemisphere, Cluster };

struct RigConfig {
    int width = 64, height = 64;
    double focal = 70.0;
    double orbit_elevation_deg = 20.0;
    // Cluster rig: this fraction of the views is packed into a small cap so
    // that near-duplicate candidates are abundant; the rest spread out.
    double cluster_fraction = 0.7;
    double cluster_cap_deg = 12.0;
    std::string id_prefix = "view";
};

// Camera rings/lattices looking at a target point. Orbit: equal-azimuth ring;
// hemisphere: Fibonacci lattice on the upper hemisphere; cluster: hemisphere
// with most views concentrated in one cap. Deterministic per seed.
std::vector<CameraView> make_rig(RigKind kind, int n_views, double radius, const Vec3& target,
                                 std::uint64_t seed, const RigConfig& cfg = {});

RigKind parse_rig_kind(const std::string& s);

enum class SceneKind { Boxes, Blobs };

// Synthetic ground-truth scenes: blobs = random centered ellipsoids; boxes =
// Gaussians flattened onto the faces of a cube.
Scene make_reference_scene(SceneKind kind, int n_gaussians, std::uint64_t seed);

SceneKind parse_scene_kind(const std::string& s);

// Renders every view, writes images/*.ppm plus a manifest mapping each view
// id to its camera and image path (train/test split recorded per view).
void write_dataset(const Scene& scene, const std::vector<CameraView>& train_views,
                   const std::vector<CameraView>& test_views, const std::filesystem::path& dir);

}  // namespace splat
