#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace uavscale {

/// 2D vector in image-plane pixel coordinates (+x right, +y down).
struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    double norm() const { return std::hypot(x, y); }
    double dot(const Vec2& o) const { return x * o.x + y * o.y; }
};

inline Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, const Vec2& v) { return {s * v.x, s * v.y}; }

constexpr double kPi = 3.14159265358979323846;

inline double deg2rad(double deg) { return deg * kPi / 180.0; }
inline double rad2deg(double rad) { return rad * 180.0 / kPi; }

/// Pinhole camera parameters. The estimator only ever uses the effective
/// focal length (fx + fy)/2; anisotropic focal lengths are not modeled.
struct CameraIntrinsics {
    double fx = 0.0;            ///< focal length, pixels
    double fy = 0.0;            ///< focal length, pixels
    double cx = 0.0;            ///< principal point x, pixels
    double cy = 0.0;            ///< principal point y, pixels
    double image_width = 0.0;   ///< pixels
    double image_height = 0.0;  ///< pixels

    double effective_focal() const { return 0.5 * (fx + fy); }

    bool contains(double u, double v) const {
        return u >= 0.0 && u <= image_width && v >= 0.0 && v <= image_height;
    }
};

/// Simple square-pixel intrinsics with the principal point at the image center.
CameraIntrinsics make_centered_intrinsics(double focal_px, double image_width,
                                          double image_height);

void validate(const CameraIntrinsics& intr);

/// Camera orientation. Only pitch is modeled; roll is assumed zero
/// (gimbal-stabilized) and yaw is irrelevant to scale.
struct CameraPose {
    double pitch_rad = -kPi / 2.0;  ///< -pi/2 = nadir; valid range (-pi, 0)

    static CameraPose nadir() { return CameraPose{-kPi / 2.0}; }
};

void validate(const CameraPose& pose);

/// Metric priors for the anchor vehicle class.
struct VehiclePrior {
    double length_m = 4.4;
    double width_m = 1.9;
    double height_m = 1.6;
};

void validate(const VehiclePrior& prior);

/// One oriented bounding box detection. len_pix >= wid_pix always holds;
/// edge_dir is the unit direction of the long edge with a canonical sign
/// (x > 0, or y >= 0 when x == 0).
struct OrientedDetection {
    double center_u = 0.0;
    double center_v = 0.0;
    double len_pix = 0.0;
    double wid_pix = 0.0;
    Vec2 edge_dir{1.0, 0.0};
    double confidence = 1.0;
    std::string category = "small-vehicle";
};

/// Normalizing factory: swaps length/width (rotating edge_dir by 90 degrees)
/// when needed, renormalizes edge_dir and fixes its sign.
/// Throws std::invalid_argument for non-finite or non-positive dimensions,
/// a zero direction vector, or confidence outside [0, 1].
OrientedDetection make_detection(double center_u, double center_v, double len_pix,
                                 double wid_pix, Vec2 edge_dir, double confidence,
                                 std::string category = "small-vehicle");

/// Per-instance viewing angles.
struct ViewingGeometry {
    double alpha_rad = kPi / 2.0;  ///< elevation angle, (0, pi/2], pi/2 = nadir
    double gamma_rad = 0.0;        ///< orientation vs radial direction, [0, pi/2]
};

/// Effective projected vehicle dimensions with their radial/tangential parts.
struct EffectiveDims {
    double l_eff_m = 0.0;
    double w_eff_m = 0.0;
    double t_rad_l = 0.0;
    double t_tan_l = 0.0;
    double t_rad_w = 0.0;
    double t_tan_w = 0.0;
};

/// Nadir-equivalent scale candidates for one detection.
struct InstanceScale {
    double s_len = 0.0;    ///< meters/pixel from the length edge
    double s_wid = 0.0;    ///< meters/pixel from the width edge
    double s_fused = 0.0;  ///< (s_len + s_wid)/2
    std::size_t detection_index = 0;
};

}  // namespace uavscale
