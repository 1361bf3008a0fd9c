#pragma once

// The seven weather/lighting condition classes, integer-encoded 0-6.
// The code doubles as the on-wire condition byte.

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "pavc/errors.hpp"

namespace pavc {

enum class ConditionLabel : std::uint8_t {
    sunny = 0,
    light_dark = 1,
    medium_dark = 2,
    heavy_dark = 3,
    drizzle = 4,
    moderate_rain = 5,
    torrential_rain = 6,
};

inline constexpr int kConditionCount = 7;

inline constexpr std::array<ConditionLabel, kConditionCount> all_conditions() {
    return {ConditionLabel::sunny,       ConditionLabel::light_dark,
            ConditionLabel::medium_dark, ConditionLabel::heavy_dark,
            ConditionLabel::drizzle,     ConditionLabel::moderate_rain,
            ConditionLabel::torrential_rain};
}

inline constexpr std::uint8_t condition_code(ConditionLabel c) noexcept {
    return static_cast<std::uint8_t>(c);
}

inline ConditionLabel condition_from_code(int code) {
    if (code < 0 || code >= kConditionCount)
        throw validation_error("condition code must be 0-6, got " + std::to_string(code));
    return static_cast<ConditionLabel>(code);
}

inline std::string_view condition_name(ConditionLabel c) {
    switch (c) {
        case ConditionLabel::sunny: return "sunny";
        case ConditionLabel::light_dark: return "light-dark";
        case ConditionLabel::medium_dark: return "medium-dark";
        case ConditionLabel::heavy_dark: return "heavy-dark";
        case ConditionLabel::drizzle: return "drizzle";
        case ConditionLabel::moderate_rain: return "moderate-rain";
        case ConditionLabel::torrential_rain: return "torrential-rain";
    }
    throw validation_error("invalid condition label");
}

inline ConditionLabel condition_from_name(std::string_view name) {
    for (ConditionLabel c : all_conditions())
        if (condition_name(c) == name) return c;
    throw validation_error("unknown condition name '" + std::string(name) +
                           "' (expected one of sunny, light-dark, medium-dark, heavy-dark, "
                           "drizzle, moderate-rain, torrential-rain)");
}

} // namespace pavc
