#pragma once

// MSE / PSNR quality metrics. PSNR uses MAX = 255 (8-bit samples).
// A zero-MSE comparison reports +infinity dB; that is the only case in which
// the infinity marker appears.

#include <cmath>
#include <limits>
#include <vector>

#include "pavc/frame.hpp"

namespace pavc {

inline constexpr double kPsnrInfinite = std::numeric_limits<double>::infinity();
inline constexpr double kSampleMax = 255.0;

struct QualityReport {
    double mse = 0.0;
    double psnr_db = kPsnrInfinite;
    std::vector<double> per_frame_psnr;

    bool lossless() const noexcept { return mse == 0.0; }
};

inline double mse(const Frame& a, const Frame& b) {
    require_same_shape(a, b, "mse");
    double sum = 0.0;
    const std::size_t n = a.pixels.size();
    for (std::size_t i = 0; i < n; ++i) {
        double d = static_cast<double>(a.pixels[i]) - static_cast<double>(b.pixels[i]);
        sum += d * d;
    }
    return sum / static_cast<double>(n);
}

inline double psnr_from_mse(double mean_squared_error) {
    if (mean_squared_error <= 0.0) return kPsnrInfinite;
    return 10.0 * std::log10(kSampleMax * kSampleMax / mean_squared_error);
}

inline double psnr(const Frame& a, const Frame& b) { return psnr_from_mse(mse(a, b)); }

// Aggregate PSNR over a sequence pair. The aggregate is one log transform of
// the mean per-frame MSE, not a mean of per-frame decibel values: averaging
// decibels overweights near-lossless frames. Per-frame PSNRs are retained for
// inspection.
inline QualityReport sequence_psnr(const VideoSequence& original,
                                   const VideoSequence& reconstructed) {
    if (original.size() != reconstructed.size())
        throw shape_error("sequence_psnr: frame counts differ, " +
                          std::to_string(original.size()) + " vs " +
                          std::to_string(reconstructed.size()));
    if (original.empty())
        throw shape_error("sequence_psnr: empty sequences");

    QualityReport report;
    report.per_frame_psnr.reserve(original.size());
    double mse_sum = 0.0;
    for (std::size_t i = 0; i < original.size(); ++i) {
        double m = mse(original.frames[i], reconstructed.frames[i]);
        mse_sum += m;
        report.per_frame_psnr.push_back(psnr_from_mse(m));
    }
    report.mse = mse_sum / static_cast<double>(original.size());
    report.psnr_db = psnr_from_mse(report.mse);
    return report;
}

} // namespace pavc
