#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "uavscale/resolution.hpp"
#include "uavscale/types.hpp"

namespace uavscale {

/// One cuboid placed on the scene reference plane.
struct VehiclePlacement {
    double ground_x_m = 0.0;
    double ground_y_m = 0.0;
    double yaw_rad = 0.0;  ///< rotation of the length axis about the vertical
    VehiclePrior dims{};
};

/// Exact forward model of a scene of vehicle cuboids under a pinhole camera.
///
/// World frame: x east, y north, z up. The reference plane z = 0 passes
/// through the vehicle roofs (bodies extend down to z = -height); the camera
/// sits at (0, 0, altitude_m), so altitude is measured to the roof plane and
/// the nadir ground truth scale is exactly altitude_m / f.
struct SceneSpec {
    double altitude_m = 100.0;
    double pitch_rad = -kPi / 2.0;
    CameraIntrinsics intrinsics = make_centered_intrinsics(1000.0, 320.0, 240.0);
    std::vector<VehiclePlacement> vehicles;
    std::uint64_t rng_seed = 0;
    double dim_noise_sigma = 0.0;    ///< log-normal sigma on each dimension
    double outlier_fraction = 0.0;   ///< fraction of boxes replaced by scale outliers
};

void validate(const SceneSpec& scene);

struct SyntheticScene {
    std::vector<OrientedDetection> detections;
    ScaleReport truth;  ///< ground-truth nadir-equivalent scale, altitude, resolution
};

/// Projects all 8 cuboid corners and returns the minimum-area rectangle of
/// their convex hull as an OBB detection (confidence 1). Returns nullopt when
/// the vehicle is behind the camera or not fully inside the frame.
std::optional<OrientedDetection> project_cuboid(const SceneSpec& scene,
                                                const VehiclePlacement& vehicle);

/// Projects every vehicle in the scene, applying dimension noise and scale
/// outliers per the scene spec. Deterministic for a fixed rng_seed.
SyntheticScene generate_scene(const SceneSpec& scene);

/// Orthographic variant: detections are exact planar footprints sampled at
/// GSD = altitude_m / f, with no perspective or height effects.
SyntheticScene generate_orthophoto_scene(const SceneSpec& scene);

/// Appends `count` vehicles whose centers project uniformly over the frame
/// (margin_frac inset per side), with uniform random yaw. Placements draw
/// from a stream derived from rng_seed that is independent of the noise and
/// outlier streams.
void populate_uniform(SceneSpec& scene, std::size_t count, double margin_frac = 0.05);

/// Ray through pixel (u, v) intersected with the reference plane; nullopt if
/// the ray does not hit it in front of the camera.
std::optional<Vec2> pixel_to_ground(const SceneSpec& scene, double u, double v);

}  // namespace uavscale
