#pragma once

#include <cstddef>
#include <vector>

#include "uavscale/types.hpp"

namespace uavscale {

/// Reliability filter settings.
struct FilterConfig {
    double conf_threshold = 0.5;  ///< detections kept iff confidence > threshold
    std::size_t min_count = 5;    ///< minimum surviving anchors for estimation
};

void validate(const FilterConfig& cfg);

struct FilterResult {
    std::vector<OrientedDetection> kept;
    bool sufficient = false;  ///< kept.size() >= min_count
};

/// Keeps detections with confidence strictly greater than the threshold.
/// An insufficient anchor count is a skip outcome, not an error.
FilterResult filter_detections(const std::vector<OrientedDetection>& dets,
                               const FilterConfig& cfg);

struct AggregationResult {
    double global_scale = 0.0;  ///< mean of inlier scales, meters/pixel
    double q1 = 0.0;
    double q3 = 0.0;
    double iqr = 0.0;
    double inlier_low = 0.0;   ///< q1 - 1.5 iqr
    double inlier_high = 0.0;  ///< q3 + 1.5 iqr
    std::vector<std::size_t> inlier_indices;  ///< indices into the input list, ascending
    std::size_t n_valid = 0;
    std::size_t n_inliers = 0;
};

/// Quantile by linear interpolation on sorted order statistics:
/// h = p (n-1), value = x[floor(h)] + (h - floor(h)) (x[ceil(h)] - x[floor(h)]).
double quantile_linear(const std::vector<double>& sorted_values, double p);

/// Robust aggregation: inliers are values inside [Q1 - 1.5 IQR, Q3 + 1.5 IQR]
/// (closed interval); the global scale is their arithmetic mean. The result is
/// independent of input ordering. Throws std::invalid_argument on empty input.
AggregationResult iqr_aggregate(const std::vector<double>& scales);

}  // namespace uavscale
