#include "uavscale/types.hpp"

#include <cmath>

namespace uavscale {

CameraIntrinsics make_centered_intrinsics(double focal_px, double image_width,
                                          double image_height) {
    CameraIntrinsics intr;
    intr.fx = focal_px;
    intr.fy = focal_px;
    intr.cx = 0.5 * image_width;
    intr.cy = 0.5 * image_height;
    intr.image_width = image_width;
    intr.image_height = image_height;
    validate(intr);
    return intr;
}

void validate(const CameraIntrinsics& intr) {
    if (!(intr.fx > 0.0) || !(intr.fy > 0.0))
        throw std::invalid_argument("invalid intrinsics: focal lengths must be positive");
    if (!(intr.image_width > 0.0) || !(intr.image_height > 0.0))
        throw std::invalid_argument("invalid intrinsics: image size must be positive");
    if (intr.cx < 0.0 || intr.cx > intr.image_width || intr.cy < 0.0 ||
        intr.cy > intr.image_height)
        throw std::invalid_argument("invalid intrinsics: principal point outside image");
    if (!std::isfinite(intr.fx) || !std::isfinite(intr.fy) || !std::isfinite(intr.cx) ||
        !std::isfinite(intr.cy))
        throw std::invalid_argument("invalid intrinsics: non-finite parameter");
}

void validate(const CameraPose& pose) {
    if (!std::isfinite(pose.pitch_rad) || pose.pitch_rad <= -kPi || pose.pitch_rad >= 0.0)
        throw std::invalid_argument("invalid pose: pitch must lie in (-pi, 0)");
}

void validate(const VehiclePrior& prior) {
    if (!(prior.length_m > prior.width_m) || !(prior.width_m > 0.0))
        throw std::invalid_argument("invalid prior: need length > width > 0");
    if (!(prior.height_m >= 0.0) || !std::isfinite(prior.height_m))
        throw std::invalid_argument("invalid prior: height must be >= 0");
}

namespace {

Vec2 canonical_sign(Vec2 d) {
    if (d.x < 0.0 || (d.x == 0.0 && d.y < 0.0)) return {-d.x, -d.y};
    return d;
}

}  // namespace

OrientedDetection make_detection(double center_u, double center_v, double len_pix,
                                 double wid_pix, Vec2 edge_dir, double confidence,
                                 std::string category) {
    if (!std::isfinite(center_u) || !std::isfinite(center_v) || !std::isfinite(len_pix) ||
        !std::isfinite(wid_pix) || !std::isfinite(edge_dir.x) || !std::isfinite(edge_dir.y))
        throw std::invalid_argument("detection: non-finite field");
    if (!(len_pix > 0.0) || !(wid_pix > 0.0))
        throw std::invalid_argument("detection: pixel dimensions must be positive");
    if (!(confidence >= 0.0) || !(confidence <= 1.0))
        throw std::invalid_argument("detection: confidence outside [0, 1]");
    const double n = edge_dir.norm();
    if (!(n > 0.0)) throw std::invalid_argument("detection: zero edge direction");

    Vec2 dir{edge_dir.x / n, edge_dir.y / n};
    if (len_pix < wid_pix) {
        std::swap(len_pix, wid_pix);
        dir = Vec2{-dir.y, dir.x};  // rotate 90 degrees onto the long edge
    }
    OrientedDetection det;
    det.center_u = center_u;
    det.center_v = center_v;
    det.len_pix = len_pix;
    det.wid_pix = wid_pix;
    det.edge_dir = canonical_sign(dir);
    det.confidence = confidence;
    det.category = std::move(category);
    return det;
}

}  // namespace uavscale
