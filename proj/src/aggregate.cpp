#include "uavscale/aggregate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace uavscale {

void validate(const FilterConfig& cfg) {
    if (!(cfg.conf_threshold >= 0.0) || !(cfg.conf_threshold <= 1.0))
        throw std::invalid_argument("filter config: conf_threshold outside [0, 1]");
    if (cfg.min_count < 1)
        throw std::invalid_argument("filter config: min_count must be >= 1");
}

FilterResult filter_detections(const std::vector<OrientedDetection>& dets,
                               const FilterConfig& cfg) {
    validate(cfg);
    FilterResult out;
    for (const auto& d : dets)
        if (d.confidence > cfg.conf_threshold) out.kept.push_back(d);
    out.sufficient = out.kept.size() >= cfg.min_count;
    return out;
}

double quantile_linear(const std::vector<double>& sorted_values, double p) {
    const std::size_t n = sorted_values.size();
    if (n == 0) throw std::invalid_argument("quantile of empty list");
    const double h = p * static_cast<double>(n - 1);
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const auto hi = static_cast<std::size_t>(std::ceil(h));
    return sorted_values[lo] + (h - std::floor(h)) * (sorted_values[hi] - sorted_values[lo]);
}

AggregationResult iqr_aggregate(const std::vector<double>& scales) {
    if (scales.empty()) throw std::invalid_argument("iqr_aggregate: empty input");

    std::vector<double> sorted(scales);
    std::sort(sorted.begin(), sorted.end());

    AggregationResult res;
    res.n_valid = scales.size();
    res.q1 = quantile_linear(sorted, 0.25);
    res.q3 = quantile_linear(sorted, 0.75);
    res.iqr = res.q3 - res.q1;
    res.inlier_low = res.q1 - 1.5 * res.iqr;
    res.inlier_high = res.q3 + 1.5 * res.iqr;

    // Sum in sorted order so the mean is permutation invariant.
    double sum = 0.0;
    std::size_t count = 0;
    for (double v : sorted) {
        if (v >= res.inlier_low && v <= res.inlier_high) {
            sum += v;
            ++count;
        }
    }
    for (std::size_t i = 0; i < scales.size(); ++i)
        if (scales[i] >= res.inlier_low && scales[i] <= res.inlier_high)
            res.inlier_indices.push_back(i);

    res.n_inliers = count;
    if (sorted.front() == sorted.back()) {
        res.global_scale = sorted.front();  // identical values aggregate exactly
    } else {
        res.global_scale = sum / static_cast<double>(count);
    }
    return res;
}

}  // namespace uavscale
