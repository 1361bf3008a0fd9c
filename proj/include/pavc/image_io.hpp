#pragma once

// Dataset image I/O. Frames are stored as binary netpbm rasters: P6 (PPM) for
// RGB, P5 (PGM) for grayscale, maxval 255. The format is losslessly
// round-trippable bit for bit, so all loss in the pipeline stays attributable
// to the video codec. Lossy formats (JPEG) are rejected at load time.
//
// A video sequence on disk is a directory of numbered frames plus a JSON
// manifest: {"frame_rate": <fps>, "frames": ["frame_000000.ppm", ...]} with
// paths relative to the manifest file.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pavc/errors.hpp"
#include "pavc/frame.hpp"

namespace pavc {

namespace fs = std::filesystem;

inline void save_frame(const Frame& frame, const fs::path& path) {
    frame.validate();
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot open for writing: " + path.string());
    out << (frame.channels == 3 ? "P6" : "P5") << "\n"
        << frame.width << " " << frame.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(frame.pixels.data()),
              static_cast<std::streamsize>(frame.pixels.size()));
    if (!out) throw io_error("short write: " + path.string());
}

inline Frame load_frame(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open: " + path.string());

    char m0 = 0, m1 = 0;
    in.get(m0);
    in.get(m1);
    if (static_cast<unsigned char>(m0) == 0xFF && static_cast<unsigned char>(m1) == 0xD8)
        throw parse_error("JPEG is lossy and rejected for dataset storage; use PPM/PGM",
                          path.string());
    if (m0 != 'P' || (m1 != '6' && m1 != '5'))
        throw parse_error("unsupported image format (expected binary PPM P6 or PGM P5)",
                          path.string());
    const int channels = (m1 == '6') ? 3 : 1;

    auto next_token = [&in, &path]() {
        std::string tok;
        char c;
        while (in.get(c)) {
            if (c == '#') { // comment runs to end of line
                while (in.get(c) && c != '\n') {}
                continue;
            }
            if (std::isspace(static_cast<unsigned char>(c))) {
                if (!tok.empty()) break;
                continue;
            }
            tok.push_back(c);
        }
        if (tok.empty()) throw parse_error("truncated netpbm header", path.string());
        return tok;
    };

    int width = 0, height = 0, maxval = 0;
    try {
        width = std::stoi(next_token());
        height = std::stoi(next_token());
        maxval = std::stoi(next_token());
    } catch (const std::logic_error&) {
        throw parse_error("bad netpbm header field", path.string());
    }
    if (width <= 0 || height <= 0)
        throw parse_error("bad dimensions in netpbm header", path.string());
    if (maxval != 255)
        throw parse_error("only maxval 255 (8-bit) rasters are supported", path.string());

    std::vector<std::uint8_t> pixels(static_cast<std::size_t>(width) * height * channels);
    in.read(reinterpret_cast<char*>(pixels.data()), static_cast<std::streamsize>(pixels.size()));
    if (in.gcount() != static_cast<std::streamsize>(pixels.size()))
        throw parse_error("truncated pixel data", path.string());
    return Frame(width, height, channels, std::move(pixels));
}

// Frame file name for index i: <stem>_<%06d>.ppm
inline std::string frame_file_name(const std::string& stem, int index) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "_%06d.ppm", index);
    return stem + buf;
}

inline void save_sequence(const VideoSequence& seq, const fs::path& dir,
                          const std::string& stem = "frame") {
    seq.validate();
    fs::create_directories(dir);
    nlohmann::json manifest;
    manifest["frame_rate"] = seq.frame_rate;
    auto& list = manifest["frames"] = nlohmann::json::array();
    for (std::size_t i = 0; i < seq.size(); ++i) {
        std::string name = frame_file_name(stem, static_cast<int>(i));
        save_frame(seq.frames[i], dir / name);
        list.push_back(name);
    }
    std::ofstream out(dir / "manifest.json");
    if (!out) throw io_error("cannot write manifest in " + dir.string());
    out << manifest.dump(2) << "\n";
}

inline VideoSequence load_sequence(const fs::path& manifest_path) {
    std::ifstream in(manifest_path);
    if (!in) throw io_error("cannot open manifest: " + manifest_path.string());
    nlohmann::json manifest;
    try {
        in >> manifest;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("invalid manifest JSON: ") + e.what(),
                          manifest_path.string());
    }
    if (!manifest.contains("frame_rate") || !manifest.contains("frames"))
        throw parse_error("manifest must carry frame_rate and frames", manifest_path.string());

    VideoSequence seq;
    seq.frame_rate = manifest.at("frame_rate").get<double>();
    const fs::path base = manifest_path.parent_path();
    int index = 0;
    for (const auto& entry : manifest.at("frames")) {
        Frame f = load_frame(base / entry.get<std::string>());
        f.index = index++;
        seq.frames.push_back(std::move(f));
    }
    seq.validate();
    return seq;
}

} // namespace pavc
