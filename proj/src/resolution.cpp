#include "uavscale/resolution.hpp"

#include <algorithm>
#include <cmath>

namespace uavscale {

ScaleReport resolve_scale(const AggregationResult& agg, const CameraIntrinsics& intr,
                          const CameraPose& pose) {
    validate(intr);
    validate(pose);
    ScaleReport report;
    report.status = ScaleStatus::ok;
    report.global_scale = agg.global_scale;
    report.altitude_m = agg.global_scale * intr.effective_focal();
    report.avg_resolution = agg.global_scale / std::abs(std::sin(pose.pitch_rad));
    report.n_valid = agg.n_valid;
    report.n_inliers = agg.n_inliers;
    return report;
}

namespace {

// Window origins along one axis: multiples of the stride while the window
// fits strictly inside, then a final origin clamped to abut the edge.
std::vector<std::int64_t> axis_origins(std::int64_t axis_len, std::int64_t size,
                                       double stride) {
    std::vector<std::int64_t> origins;
    for (std::int64_t k = 0;; ++k) {
        const auto p = static_cast<std::int64_t>(std::llround(static_cast<double>(k) * stride));
        if (p + size >= axis_len) break;
        origins.push_back(p);
    }
    const std::int64_t last = axis_len - size;
    if (origins.empty() || origins.back() != last) origins.push_back(last);
    return origins;
}

}  // namespace

CropPlan plan_crops(const ScaleReport& report, double uav_width_px,
                    const MapBounds& bounds, double gsd_sat) {
    if (report.status != ScaleStatus::ok || !report.avg_resolution)
        throw std::invalid_argument("plan_crops: report has no scale estimate");
    if (!(gsd_sat > 0.0)) throw std::invalid_argument("plan_crops: gsd_sat must be > 0");
    if (!(uav_width_px > 0.0))
        throw std::invalid_argument("plan_crops: uav_width_px must be > 0");
    if (bounds.width <= 0 || bounds.height <= 0)
        throw std::invalid_argument("plan_crops: empty map bounds");

    CropPlan plan;
    plan.gsd_sat = gsd_sat;
    plan.footprint_m = *report.avg_resolution * uav_width_px;
    plan.crop_size_px = plan.footprint_m / gsd_sat;
    plan.stride_px = 0.5 * plan.crop_size_px;

    const auto size = static_cast<std::int64_t>(std::llround(plan.crop_size_px));
    if (size > bounds.width || size > bounds.height) {
        const std::int64_t clamped_size = std::min({size, bounds.width, bounds.height});
        plan.clamped = true;
        plan.windows.push_back(CropWindow{bounds.x + (bounds.width - clamped_size) / 2,
                                          bounds.y + (bounds.height - clamped_size) / 2,
                                          clamped_size});
        return plan;
    }

    const auto xs = axis_origins(bounds.width, size, 0.5 * static_cast<double>(size));
    const auto ys = axis_origins(bounds.height, size, 0.5 * static_cast<double>(size));
    for (const auto y : ys)
        for (const auto x : xs)
            plan.windows.push_back(CropWindow{bounds.x + x, bounds.y + y, size});
    return plan;
}

bool localization_success(Vec2 pred_center_m, Vec2 true_center_m, double fov_radius_m) {
    if (!(fov_radius_m > 0.0))
        throw std::invalid_argument("localization_success: radius must be > 0");
    return (pred_center_m - true_center_m).norm() < std::sqrt(2.0) * fov_radius_m;
}

}  // namespace uavscale
