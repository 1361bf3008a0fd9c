#pragma once

// Hand-designed photometric features for condition classification. The
// feature set targets exactly what the augmentations change: global lightness
// (darkness levels), thin bright near-vertical ridges (rain streaks), and
// high-frequency content (rain blur). All features are densities or
// normalized moments, so frames of different sizes remain comparable.

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include "pavc/errors.hpp"
#include "pavc/frame.hpp"

namespace pavc {

inline constexpr int kLightnessBins = 16;

struct FeatureVector {
    double mean_lightness = 0.0;
    std::array<double, kLightnessBins> lightness_histogram{}; // sums to 1
    double edge_density = 0.0;          // fraction of high-gradient pixels
    double vertical_streak_energy = 0.0; // bright-ridge response, column direction
    double high_freq_energy = 0.0;       // mean |Laplacian|

    static constexpr int dimension() { return 5 + kLightnessBins; }

    std::vector<double> flatten() const {
        std::vector<double> v;
        v.reserve(dimension());
        v.push_back(mean_lightness);
        v.push_back(edge_density);
        v.push_back(vertical_streak_energy);
        v.push_back(high_freq_energy);
        v.push_back(histogram_entropy());
        for (double b : lightness_histogram) v.push_back(b);
        return v;
    }

    double histogram_entropy() const {
        double e = 0.0;
        for (double p : lightness_histogram)
            if (p > 0.0) e -= p * std::log2(p);
        return e;
    }
};

inline FeatureVector extract_features(const Frame& frame) {
    if (frame.channels != 3)
        throw shape_error("extract_features: 3-channel frame required, got " +
                          frame.shape_string());
    const int w = frame.width, h = frame.height;
    const std::size_t n = static_cast<std::size_t>(w) * h;

    // Lightness plane, L = (max+min)/2 as in the HSL used by the augmenter.
    std::vector<float> light(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint8_t* px = &frame.pixels[i * 3];
        const auto mx = std::max({px[0], px[1], px[2]});
        const auto mn = std::min({px[0], px[1], px[2]});
        light[i] = static_cast<float>((mx + mn) / (2.0f * 255.0f));
    }

    FeatureVector f;
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sum += light[i];
        int bin = std::min(kLightnessBins - 1,
                           static_cast<int>(light[i] * kLightnessBins));
        f.lightness_histogram[bin] += 1.0;
    }
    f.mean_lightness = sum / static_cast<double>(n);
    for (double& b : f.lightness_histogram) b /= static_cast<double>(n);

    constexpr double kEdgeThreshold = 0.10;
    auto L = [&](int x, int y) { return static_cast<double>(light[static_cast<std::size_t>(y) * w + x]); };

    double edges = 0.0, ridge = 0.0, lap = 0.0;
    std::size_t interior = 0;
    for (int y = 1; y + 1 < h; ++y) {
        for (int x = 2; x + 2 < w; ++x) {
            const double v = L(x, y);
            const double gx = L(x + 1, y) - L(x - 1, y);
            const double gy = L(x, y + 1) - L(x, y - 1);
            if (std::abs(gx) + std::abs(gy) > kEdgeThreshold) edges += 1.0;
            // Ridge: brighter than both horizontal neighbors two columns out.
            // Steps (object edges) have only one darker side and score zero.
            const double r = std::min(v - L(x - 2, y), v - L(x + 2, y));
            if (r > 0.0) ridge += r;
            lap += std::abs(4.0 * v - L(x - 1, y) - L(x + 1, y) - L(x, y - 1) - L(x, y + 1));
            ++interior;
        }
    }
    if (interior > 0) {
        f.edge_density = edges / static_cast<double>(interior);
        f.vertical_streak_energy = ridge / static_cast<double>(interior);
        f.high_freq_energy = lap / static_cast<double>(interior);
    }
    return f;
}

} // namespace pavc
