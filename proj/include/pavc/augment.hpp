#pragma once

// Synthesis of the six non-sunny conditions from sunny frames.
//
// Darkness levels scale the L channel of the HSL color space; rain levels
// overlay seeded near-vertical bright streaks and apply a light box blur.
// Both transforms are photometric: geometry and annotations are untouched.
// Everything is a pure function of (inputs, seed).

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pavc/condition.hpp"
#include "pavc/errors.hpp"
#include "pavc/frame.hpp"
#include "pavc/rng.hpp"

namespace pavc {

enum class DarknessLevel { light, medium, heavy };
enum class RainLevel { drizzle, moderate, torrential };

struct AugmentParams {
    // L-channel multipliers; must decrease with severity.
    double darkness_scale_light = 0.65;
    double darkness_scale_medium = 0.40;
    double darkness_scale_heavy = 0.20;

    // Streak counts are absolute per frame; the defaults are calibrated for
    // the 640x640 reference size. Counts must increase with severity.
    int streak_count_drizzle = 40;
    int streak_count_moderate = 150;
    int streak_count_torrential = 400;

    int streak_length_min = 8;  // pixels
    int streak_length_max = 20; // pixels
    double streak_alpha = 0.8;  // blend weight toward the streak color
    double streak_angle_band_deg = 15.0; // streaks fall within +-band of vertical

    int blur_radius_drizzle = 1;
    int blur_radius_moderate = 1;
    int blur_radius_torrential = 2;

    std::uint64_t seed = 0;

    double darkness_scale(DarknessLevel level) const {
        switch (level) {
            case DarknessLevel::light: return darkness_scale_light;
            case DarknessLevel::medium: return darkness_scale_medium;
            case DarknessLevel::heavy: return darkness_scale_heavy;
        }
        throw validation_error("invalid darkness level");
    }

    int streak_count(RainLevel level) const {
        switch (level) {
            case RainLevel::drizzle: return streak_count_drizzle;
            case RainLevel::moderate: return streak_count_moderate;
            case RainLevel::torrential: return streak_count_torrential;
        }
        throw validation_error("invalid rain level");
    }

    int blur_radius(RainLevel level) const {
        switch (level) {
            case RainLevel::drizzle: return blur_radius_drizzle;
            case RainLevel::moderate: return blur_radius_moderate;
            case RainLevel::torrential: return blur_radius_torrential;
        }
        throw validation_error("invalid rain level");
    }

    void validate() const {
        if (!(darkness_scale_light > darkness_scale_medium &&
              darkness_scale_medium > darkness_scale_heavy))
            throw validation_error("darkness scales must satisfy light > medium > heavy");
        for (double s : {darkness_scale_light, darkness_scale_medium, darkness_scale_heavy})
            if (!(s > 0.0 && s <= 1.0))
                throw validation_error("darkness scales must lie in (0,1]");
        if (!(streak_count_drizzle < streak_count_moderate &&
              streak_count_moderate < streak_count_torrential))
            throw validation_error("streak counts must satisfy drizzle < moderate < torrential");
        if (streak_count_drizzle < 0) throw validation_error("streak counts must be >= 0");
        if (streak_length_min <= 0 || streak_length_max < streak_length_min)
            throw validation_error("streak length range is invalid");
        if (!(streak_alpha > 0.0 && streak_alpha <= 1.0))
            throw validation_error("streak_alpha must lie in (0,1]");
    }
};

// ---------------------------------------------------------------------------
// HSL conversion (standard hexcone formulas), double precision throughout.
// Rounding to 8-bit happens only once, at the end of an augmentation, so the
// per-pixel darkening stays monotone.

struct Hsl {
    double h; // [0, 6): hue sector position
    double s; // [0, 1]
    double l; // [0, 1]
};

inline Hsl rgb_to_hsl(double r, double g, double b) {
    const double max = std::max({r, g, b});
    const double min = std::min({r, g, b});
    const double l = (max + min) / 2.0;
    if (max == min) return {0.0, 0.0, l};

    const double c = max - min;
    const double s = c / (1.0 - std::abs(2.0 * l - 1.0));
    double h;
    if (max == r)
        h = std::fmod((g - b) / c + 6.0, 6.0);
    else if (max == g)
        h = (b - r) / c + 2.0;
    else
        h = (r - g) / c + 4.0;
    return {h, s, l};
}

inline void hsl_to_rgb(const Hsl& hsl, double& r, double& g, double& b) {
    const double c = (1.0 - std::abs(2.0 * hsl.l - 1.0)) * hsl.s;
    const double x = c * (1.0 - std::abs(std::fmod(hsl.h, 2.0) - 1.0));
    const double m = hsl.l - c / 2.0;
    double rp = 0, gp = 0, bp = 0;
    switch (static_cast<int>(hsl.h)) {
        case 0: rp = c; gp = x; break;
        case 1: rp = x; gp = c; break;
        case 2: gp = c; bp = x; break;
        case 3: gp = x; bp = c; break;
        case 4: rp = x; bp = c; break;
        default: rp = c; bp = x; break;
    }
    r = rp + m;
    g = gp + m;
    b = bp + m;
}

inline std::uint8_t to_u8(double v) {
    return static_cast<std::uint8_t>(std::lround(std::clamp(v, 0.0, 1.0) * 255.0));
}

// Mean of the HSL lightness channel, in [0,1]. Used by tests and features.
inline double mean_lightness(const Frame& frame) {
    if (frame.channels != 3)
        throw shape_error("mean_lightness: 3-channel frame required, got " +
                          frame.shape_string());
    double sum = 0.0;
    const std::size_t n = static_cast<std::size_t>(frame.width) * frame.height;
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint8_t* px = &frame.pixels[i * 3];
        const auto mx = std::max({px[0], px[1], px[2]});
        const auto mn = std::min({px[0], px[1], px[2]});
        sum += (mx + mn) / (2.0 * 255.0);
    }
    return sum / static_cast<double>(n);
}

// ---------------------------------------------------------------------------

inline Frame apply_darkness(const Frame& frame, DarknessLevel level, const AugmentParams& params) {
    params.validate();
    if (frame.channels != 3)
        throw shape_error("apply_darkness: 3-channel frame required, got " +
                          frame.shape_string());
    const double scale = params.darkness_scale(level);
    if (scale == 1.0) return frame;

    Frame out = frame;
    const std::size_t n = static_cast<std::size_t>(frame.width) * frame.height;
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint8_t* px = &frame.pixels[i * 3];
        Hsl hsl = rgb_to_hsl(px[0] / 255.0, px[1] / 255.0, px[2] / 255.0);
        hsl.l *= scale;
        double r, g, b;
        hsl_to_rgb(hsl, r, g, b);
        out.pixels[i * 3 + 0] = to_u8(r);
        out.pixels[i * 3 + 1] = to_u8(g);
        out.pixels[i * 3 + 2] = to_u8(b);
    }
    return out;
}

// One rain streak: a bright near-vertical segment.
struct Streak {
    double x0, y0; // top endpoint
    double x1, y1; // bottom endpoint
};

// The streak set is a pure function of (params, level, seed, frame size);
// apply_rain uses exactly this geometry, so tests can re-rasterize it.
inline std::vector<Streak> generate_streaks(int width, int height, RainLevel level,
                                            const AugmentParams& params, std::uint64_t seed) {
    params.validate();
    std::vector<Streak> streaks;
    const int count = params.streak_count(level);
    streaks.reserve(static_cast<std::size_t>(count));
    Pcg32 rng(derive_seed(seed), stream_id(0x5261494Eu /* "RaiN" */, static_cast<std::uint32_t>(level)));
    const double band = params.streak_angle_band_deg * 3.14159265358979323846 / 180.0;
    for (int i = 0; i < count; ++i) {
        const double x0 = rng.next_double(0.0, width - 1.0);
        const double y0 = rng.next_double(0.0, height - 1.0);
        const double len = rng.next_double(params.streak_length_min, params.streak_length_max);
        const double angle = rng.next_double(-band, band); // off vertical
        streaks.push_back({x0, y0, x0 + len * std::sin(angle), y0 + len * std::cos(angle)});
    }
    return streaks;
}

// Pixel positions covered by one streak (DDA along the major axis).
inline std::vector<std::pair<int, int>> rasterize_streak(const Streak& s, int width, int height) {
    std::vector<std::pair<int, int>> points;
    const double dx = s.x1 - s.x0;
    const double dy = s.y1 - s.y0;
    const int steps = static_cast<int>(std::ceil(std::max(std::abs(dx), std::abs(dy)))) + 1;
    for (int i = 0; i < steps; ++i) {
        const double t = (steps == 1) ? 0.0 : static_cast<double>(i) / (steps - 1);
        const int x = static_cast<int>(std::lround(s.x0 + t * dx));
        const int y = static_cast<int>(std::lround(s.y0 + t * dy));
        if (x >= 0 && x < width && y >= 0 && y < height)
            points.emplace_back(x, y);
    }
    return points;
}

// Separable box blur with clamped edges; radius 0 is the identity.
inline Frame box_blur(const Frame& frame, int radius) {
    if (radius <= 0) return frame;
    const int w = frame.width, h = frame.height, ch = frame.channels;
    const int window = 2 * radius + 1;
    std::vector<int> tmp(frame.pixels.size());
    Frame out = frame;

    // horizontal pass
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            for (int c = 0; c < ch; ++c) {
                int sum = 0;
                for (int k = -radius; k <= radius; ++k) {
                    int xx = std::clamp(x + k, 0, w - 1);
                    sum += frame.at(xx, y, c);
                }
                tmp[(static_cast<std::size_t>(y) * w + x) * ch + c] = sum;
            }
        }
    }
    // vertical pass, with rounding at the final division
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            for (int c = 0; c < ch; ++c) {
                int sum = 0;
                for (int k = -radius; k <= radius; ++k) {
                    int yy = std::clamp(y + k, 0, h - 1);
                    sum += tmp[(static_cast<std::size_t>(yy) * w + x) * ch + c];
                }
                const int denom = window * window;
                out.at(x, y, c) = static_cast<std::uint8_t>((sum + denom / 2) / denom);
            }
        }
    }
    return out;
}

inline Frame apply_rain(const Frame& frame, RainLevel level, const AugmentParams& params) {
    params.validate();
    if (frame.channels != 3)
        throw shape_error("apply_rain: 3-channel frame required, got " + frame.shape_string());

    Frame out = frame;
    // Streak color: a light rain-gray. Alpha-blend toward it.
    constexpr double kStreakColor = 220.0 / 255.0;
    const double a = params.streak_alpha;
    for (const Streak& s : generate_streaks(frame.width, frame.height, level, params, params.seed)) {
        for (auto [x, y] : rasterize_streak(s, frame.width, frame.height)) {
            for (int c = 0; c < 3; ++c) {
                const double v = out.at(x, y, c) / 255.0;
                out.at(x, y, c) = to_u8(v * (1.0 - a) + kStreakColor * a);
            }
        }
    }
    return box_blur(out, params.blur_radius(level));
}

// ---------------------------------------------------------------------------
// Whole-dataset augmentation: 7 conditions from sunny inputs. Annotations ride
// along untouched (the transforms are photometric). Per-image seeds derive
// from (seed, condition, image index), so any subset can be regenerated
// independently and in any order.

struct LabeledFrame {
    Frame frame;
    std::string annotation; // verbatim annotation file contents, may be empty
};

inline std::uint64_t per_image_seed(std::uint64_t master, ConditionLabel condition,
                                    std::uint32_t image_index) {
    std::uint64_t s = master ^ (0xA0A0A0A0A0A0A0A0ULL + condition_code(condition));
    std::uint64_t mixed = splitmix64(s);
    s = mixed ^ image_index;
    return splitmix64(s);
}

inline LabeledFrame augment_one(const LabeledFrame& input, ConditionLabel condition,
                                AugmentParams params, std::uint64_t master_seed,
                                std::uint32_t image_index) {
    params.seed = per_image_seed(master_seed, condition, image_index);
    switch (condition) {
        case ConditionLabel::sunny: return input;
        case ConditionLabel::light_dark:
            return {apply_darkness(input.frame, DarknessLevel::light, params), input.annotation};
        case ConditionLabel::medium_dark:
            return {apply_darkness(input.frame, DarknessLevel::medium, params), input.annotation};
        case ConditionLabel::heavy_dark:
            return {apply_darkness(input.frame, DarknessLevel::heavy, params), input.annotation};
        case ConditionLabel::drizzle:
            return {apply_rain(input.frame, RainLevel::drizzle, params), input.annotation};
        case ConditionLabel::moderate_rain:
            return {apply_rain(input.frame, RainLevel::moderate, params), input.annotation};
        case ConditionLabel::torrential_rain:
            return {apply_rain(input.frame, RainLevel::torrential, params), input.annotation};
    }
    throw validation_error("invalid condition label");
}

inline std::map<ConditionLabel, std::vector<LabeledFrame>>
augment_dataset(const std::vector<LabeledFrame>& sunny_inputs, const AugmentParams& params,
                std::uint64_t seed) {
    if (sunny_inputs.empty())
        throw validation_error("augment_dataset: empty input dataset");
    std::map<ConditionLabel, std::vector<LabeledFrame>> out;
    for (ConditionLabel condition : all_conditions()) {
        auto& list = out[condition];
        list.reserve(sunny_inputs.size());
        for (std::size_t i = 0; i < sunny_inputs.size(); ++i)
            list.push_back(augment_one(sunny_inputs[i], condition, params, seed,
                                       static_cast<std::uint32_t>(i)));
    }
    return out;
}

} // namespace pavc
