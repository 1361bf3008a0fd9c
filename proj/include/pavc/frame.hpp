#pragma once

// Raster frame and video-sequence types. Frames are immutable-by-convention
// value types: every operation in the library returns a new Frame rather than
// mutating in place, so instances can be shared freely across threads.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pavc/errors.hpp"

namespace pavc {

struct Frame {
    int width = 0;
    int height = 0;
    int channels = 0;                 // 1 (grayscale) or 3 (RGB)
    std::vector<std::uint8_t> pixels; // row-major, interleaved samples
    int index = 0;                    // ordinal position within its sequence

    Frame() = default;

    Frame(int w, int h, int c, std::uint8_t fill = 0)
        : width(w), height(h), channels(c),
          pixels(static_cast<std::size_t>(w) * h * c, fill) {
        validate();
    }

    Frame(int w, int h, int c, std::vector<std::uint8_t> px)
        : width(w), height(h), channels(c), pixels(std::move(px)) {
        validate();
    }

    std::size_t sample_count() const noexcept { return pixels.size(); }

    std::uint8_t at(int x, int y, int c) const {
        return pixels[(static_cast<std::size_t>(y) * width + x) * channels + c];
    }
    std::uint8_t& at(int x, int y, int c) {
        return pixels[(static_cast<std::size_t>(y) * width + x) * channels + c];
    }

    bool same_shape(const Frame& other) const noexcept {
        return width == other.width && height == other.height && channels == other.channels;
    }

    std::string shape_string() const {
        return std::to_string(width) + "x" + std::to_string(height) + "x" +
               std::to_string(channels);
    }

    void validate() const {
        if (width <= 0 || height <= 0)
            throw validation_error("frame dimensions must be positive, got " + shape_string());
        if (channels != 1 && channels != 3)
            throw validation_error("frame channels must be 1 or 3, got " +
                                   std::to_string(channels));
        if (pixels.size() != static_cast<std::size_t>(width) * height * channels)
            throw validation_error("pixel buffer size " + std::to_string(pixels.size()) +
                                   " does not match " + shape_string());
    }
};

inline void require_same_shape(const Frame& a, const Frame& b, const char* op) {
    if (!a.same_shape(b))
        throw shape_error(std::string(op) + ": frame shapes differ, " + a.shape_string() +
                          " vs " + b.shape_string());
}

struct VideoSequence {
    std::vector<Frame> frames;
    double frame_rate = 30.0; // frames/second

    VideoSequence() = default;

    VideoSequence(std::vector<Frame> fs, double fps) : frames(std::move(fs)), frame_rate(fps) {
        validate();
    }

    std::size_t size() const noexcept { return frames.size(); }
    bool empty() const noexcept { return frames.empty(); }

    int width() const { return frames.empty() ? 0 : frames.front().width; }
    int height() const { return frames.empty() ? 0 : frames.front().height; }
    int channels() const { return frames.empty() ? 0 : frames.front().channels; }

    // Raw payload bytes a sender would transmit without any encoding.
    std::uint64_t raw_byte_size() const {
        std::uint64_t total = 0;
        for (const auto& f : frames) total += f.pixels.size();
        return total;
    }

    void validate() const {
        if (frame_rate <= 0.0)
            throw validation_error("frame_rate must be positive");
        for (std::size_t i = 0; i < frames.size(); ++i) {
            frames[i].validate();
            if (!frames[i].same_shape(frames.front()))
                throw validation_error("frame " + std::to_string(i) + " shape " +
                                       frames[i].shape_string() + " differs from frame 0 shape " +
                                       frames.front().shape_string());
            if (frames[i].index != static_cast<int>(i))
                throw validation_error("frame indices must be contiguous from 0; frame " +
                                       std::to_string(i) + " carries index " +
                                       std::to_string(frames[i].index));
        }
    }
};

} // namespace pavc
