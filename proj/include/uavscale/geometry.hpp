#pragma once

#include <array>

#include "uavscale/types.hpp"

namespace uavscale {

/// Viewing elevation angle of the ray through pixel (u, v).
/// sin(alpha) = |v_ray . n_up| / ||v_ray|| with v_ray = [u-cx, v-cy, f] and
/// n_up = [0, -cos(pitch), -sin(pitch)]. alpha = pi/2 at nadir.
/// Throws std::invalid_argument for invalid intrinsics/pose or an
/// out-of-bounds pixel, std::domain_error for a ray parallel to the ground.
double viewing_elevation(const CameraIntrinsics& intr, const CameraPose& pose,
                         double u, double v);

/// Angle between the detection's long edge and the radial direction from the
/// principal point, folded into [0, pi/2]. Within 1 px of the principal point
/// the radial direction degenerates and the image +y axis is used instead
/// (the tilt-induced foreshortening at the center acts along image vertical).
double relative_orientation(const CameraIntrinsics& intr, const OrientedDetection& det);

ViewingGeometry viewing_geometry(const CameraIntrinsics& intr, const CameraPose& pose,
                                 const OrientedDetection& det);

/// Effective projected dimensions under the decoupled stereoscopic model:
///   T_rad = (D sin(alpha) + H cos(alpha)) cos(g),  T_tan = D sin(g),
///   D_eff = sqrt(T_rad^2 + T_tan^2)
/// with g = gamma for the length axis and g = pi/2 - gamma for the
/// perpendicular width axis.
EffectiveDims effective_dims(const VehiclePrior& prior, const ViewingGeometry& geom);

/// Nadir-equivalent scale candidates, s = D_eff sin(alpha) / d_pix.
/// Throws std::domain_error when the detection has non-positive pixel
/// dimensions (degenerate detection; callers skip the instance).
InstanceScale instance_scale(const OrientedDetection& det, const EffectiveDims& dims,
                             const ViewingGeometry& geom);

/// Baseline that maps box edges directly to vehicle dimensions, with no
/// viewing-angle or height terms. Kept for ablation comparison and for
/// orthophoto inputs, where boxes are true planar footprints.
InstanceScale naive_instance_scale(const OrientedDetection& det, const VehiclePrior& prior);

/// Builds a detection from 4 corner points (any winding / starting corner):
/// center = corner centroid, length/width = mean of the two opposite edge
/// pairs, edge_dir = direction of the longer pair. Robust to slightly
/// non-rectangular quads.
OrientedDetection obb_from_corners(const std::array<Vec2, 4>& corners, double confidence,
                                   std::string category = "small-vehicle");

}  // namespace uavscale
