#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "uavscale/aggregate.hpp"
#include "uavscale/types.hpp"

namespace uavscale {

enum class ScaleStatus { ok, insufficient_anchors };

/// Aggregated scale estimate for one image. Numeric fields are absent when
/// the image was skipped for lack of anchors.
struct ScaleReport {
    ScaleStatus status = ScaleStatus::insufficient_anchors;
    std::optional<double> global_scale;    ///< nadir-equivalent scale, m/px
    std::optional<double> altitude_m;      ///< relative altitude, global_scale * f
    std::optional<double> avg_resolution;  ///< m/px, global_scale / |sin(pitch)|
    std::size_t n_detections = 0;
    std::size_t n_valid = 0;
    std::size_t n_inliers = 0;
};

/// Converts an aggregated scale into altitude and average ground resolution.
ScaleReport resolve_scale(const AggregationResult& agg, const CameraIntrinsics& intr,
                          const CameraPose& pose);

/// Satellite-map pixel rectangle the crop windows must stay inside.
struct MapBounds {
    std::int64_t x = 0;
    std::int64_t y = 0;
    std::int64_t width = 0;
    std::int64_t height = 0;
};

struct CropWindow {
    std::int64_t x = 0;
    std::int64_t y = 0;
    std::int64_t size = 0;
};

/// Scale-adaptive satellite crop geometry. crop_size_px keeps the exact
/// fractional value footprint_m / gsd_sat; windows carry the rounded size.
struct CropPlan {
    double footprint_m = 0.0;   ///< metric footprint of the UAV image width
    double crop_size_px = 0.0;  ///< matching satellite patch size, fractional
    double stride_px = 0.0;     ///< 0.5 * crop_size_px
    double gsd_sat = 0.0;
    bool clamped = false;  ///< crop exceeded a map dimension; single clamped window
    std::vector<CropWindow> windows;  ///< row-major sliding-window grid
};

/// Tiles the map bounds with square windows at 50% stride, clamping the final
/// row/column to abut the map edge. When the crop exceeds a map dimension a
/// single centered clamped window is emitted and `clamped` is set.
/// Throws std::invalid_argument when the report is not ok, gsd_sat <= 0, or
/// the bounds are empty.
CropPlan plan_crops(const ScaleReport& report, double uav_width_px,
                    const MapBounds& bounds, double gsd_sat);

/// Localization success rule: ground distance strictly below sqrt(2) times
/// the UAV field-of-view radius.
bool localization_success(Vec2 pred_center_m, Vec2 true_center_m, double fov_radius_m);

}  // namespace uavscale
