#include "uavscale/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace uavscale {

double viewing_elevation(const CameraIntrinsics& intr, const CameraPose& pose,
                         double u, double v) {
    validate(intr);
    validate(pose);
    if (!(intr.effective_focal() > 0.0))
        throw std::invalid_argument("invalid intrinsics: effective focal <= 0");
    if (!intr.contains(u, v))
        throw std::invalid_argument("viewing_elevation: pixel outside image bounds");

    const double f = intr.effective_focal();
    const double x = u - intr.cx;
    const double y = v - intr.cy;
    // v_ray . n_up with n_up = [0, -cos(theta), -sin(theta)] (unit length)
    const double dot = -y * std::cos(pose.pitch_rad) - f * std::sin(pose.pitch_rad);
    const double sin_alpha = std::abs(dot) / std::sqrt(x * x + y * y + f * f);
    if (!(sin_alpha > 1e-12))
        throw std::domain_error("viewing_elevation: ray parallel to ground plane");
    return std::asin(std::min(sin_alpha, 1.0));
}

double relative_orientation(const CameraIntrinsics& intr, const OrientedDetection& det) {
    validate(intr);
    Vec2 v_rad{det.center_u - intr.cx, det.center_v - intr.cy};
    if (v_rad.norm() < 1.0) v_rad = Vec2{0.0, 1.0};
    const double denom = v_rad.norm() * det.edge_dir.norm();
    const double cos_gamma = std::min(std::abs(v_rad.dot(det.edge_dir)) / denom, 1.0);
    return std::acos(cos_gamma);
}

ViewingGeometry viewing_geometry(const CameraIntrinsics& intr, const CameraPose& pose,
                                 const OrientedDetection& det) {
    return ViewingGeometry{viewing_elevation(intr, pose, det.center_u, det.center_v),
                           relative_orientation(intr, det)};
}

namespace {

// T_rad = (D sin(a) + H cos(a)) cos(g), T_tan = D sin(g)
void axis_components(double dim_m, double height_m, double sin_a, double cos_a,
                     double axis_angle, double& t_rad, double& t_tan) {
    t_rad = (dim_m * sin_a + height_m * cos_a) * std::cos(axis_angle);
    t_tan = dim_m * std::sin(axis_angle);
}

}  // namespace

EffectiveDims effective_dims(const VehiclePrior& prior, const ViewingGeometry& geom) {
    validate(prior);
    const double sin_a = std::sin(geom.alpha_rad);
    const double cos_a = std::cos(geom.alpha_rad);

    EffectiveDims dims;
    axis_components(prior.length_m, prior.height_m, sin_a, cos_a, geom.gamma_rad,
                    dims.t_rad_l, dims.t_tan_l);
    // The width axis is perpendicular to the length axis.
    const double gamma_w = kPi / 2.0 - geom.gamma_rad;
    axis_components(prior.width_m, prior.height_m, sin_a, cos_a, gamma_w,
                    dims.t_rad_w, dims.t_tan_w);
    dims.l_eff_m = std::hypot(dims.t_rad_l, dims.t_tan_l);
    dims.w_eff_m = std::hypot(dims.t_rad_w, dims.t_tan_w);
    return dims;
}

InstanceScale instance_scale(const OrientedDetection& det, const EffectiveDims& dims,
                             const ViewingGeometry& geom) {
    if (!(det.len_pix > 0.0) || !(det.wid_pix > 0.0))
        throw std::domain_error("degenerate detection: non-positive pixel dimensions");
    const double sin_a = std::sin(geom.alpha_rad);
    InstanceScale s;
    s.s_len = dims.l_eff_m * sin_a / det.len_pix;
    s.s_wid = dims.w_eff_m * sin_a / det.wid_pix;
    s.s_fused = 0.5 * (s.s_len + s.s_wid);
    return s;
}

InstanceScale naive_instance_scale(const OrientedDetection& det, const VehiclePrior& prior) {
    validate(prior);
    if (!(det.len_pix > 0.0) || !(det.wid_pix > 0.0))
        throw std::domain_error("degenerate detection: non-positive pixel dimensions");
    InstanceScale s;
    s.s_len = prior.length_m / det.len_pix;
    s.s_wid = prior.width_m / det.wid_pix;
    s.s_fused = 0.5 * (s.s_len + s.s_wid);
    return s;
}

OrientedDetection obb_from_corners(const std::array<Vec2, 4>& corners, double confidence,
                                   std::string category) {
    const Vec2 center = 0.25 * (corners[0] + corners[1] + corners[2] + corners[3]);
    // Opposite edge pairs of the quad P0P1P2P3: (P0->P1, P3->P2) and (P1->P2, P0->P3).
    const Vec2 e_a = 0.5 * ((corners[1] - corners[0]) + (corners[2] - corners[3]));
    const Vec2 e_b = 0.5 * ((corners[2] - corners[1]) + (corners[3] - corners[0]));
    const double len_a = e_a.norm();
    const double len_b = e_b.norm();
    const Vec2 dir = len_a >= len_b ? e_a : e_b;
    return make_detection(center.x, center.y, std::max(len_a, len_b),
                          std::min(len_a, len_b), dir, confidence, std::move(category));
}

}  // namespace uavscale
