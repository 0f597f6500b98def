#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sparsedn/errors.hpp"

namespace sparsedn {

/// 8-bit grayscale image, row-major. Doubles as the pixel surface
/// P(x,y,z) with z = value at (x,y).
class GrayImage {
public:
    GrayImage() = default;

    GrayImage(int width, int height, std::uint8_t fill = 0)
        : width_(width), height_(height),
          pixels_(checked_size(width, height), fill) {}

    GrayImage(int width, int height, std::vector<std::uint8_t> pixels)
        : width_(width), height_(height), pixels_(std::move(pixels)) {
        if (pixels_.size() != checked_size(width, height))
            throw std::invalid_argument("pixel buffer size does not match dimensions");
    }

    int width() const { return width_; }
    int height() const { return height_; }
    std::size_t pixel_count() const { return pixels_.size(); }

    std::uint8_t at(int x, int y) const { return pixels_[index(x, y)]; }
    std::uint8_t& at(int x, int y) { return pixels_[index(x, y)]; }

    const std::vector<std::uint8_t>& pixels() const { return pixels_; }
    std::vector<std::uint8_t>& pixels() { return pixels_; }

    std::size_t index(int x, int y) const {
        return static_cast<std::size_t>(y) * width_ + x;
    }

    bool operator==(const GrayImage&) const = default;

private:
    static std::size_t checked_size(int width, int height) {
        if (width < 1 || height < 1)
            throw std::invalid_argument("image dimensions must be positive");
        return static_cast<std::size_t>(width) * height;
    }

    int width_ = 0;
    int height_ = 0;
    std::vector<std::uint8_t> pixels_;
};

struct Rgb {
    std::uint8_t r = 0, g = 0, b = 0;
    bool operator==(const Rgb&) const = default;
};

/// 8-bit RGB image, row-major interleaved.
class RgbImage {
public:
    RgbImage() = default;

    RgbImage(int width, int height, Rgb fill = {})
        : width_(width), height_(height) {
        if (width < 1 || height < 1)
            throw std::invalid_argument("image dimensions must be positive");
        pixels_.assign(static_cast<std::size_t>(width) * height, fill);
    }

    int width() const { return width_; }
    int height() const { return height_; }
    std::size_t pixel_count() const { return pixels_.size(); }

    Rgb at(int x, int y) const { return pixels_[index(x, y)]; }
    Rgb& at(int x, int y) { return pixels_[index(x, y)]; }

    const std::vector<Rgb>& pixels() const { return pixels_; }
    std::vector<Rgb>& pixels() { return pixels_; }

    std::size_t index(int x, int y) const {
        return static_cast<std::size_t>(y) * width_ + x;
    }

    bool operator==(const RgbImage&) const = default;

private:
    int width_ = 0;
    int height_ = 0;
    std::vector<Rgb> pixels_;
};

/// BT.601 luma conversion. Each pixel maps to
/// round(0.299 R + 0.587 G + 0.114 B), halves rounding away from zero.
inline GrayImage rgb_to_gray(const RgbImage& img) {
    GrayImage out(img.width(), img.height());
    const auto& src = img.pixels();
    auto& dst = out.pixels();
    for (std::size_t i = 0; i < src.size(); ++i) {
        double luma = 0.299 * src[i].r + 0.587 * src[i].g + 0.114 * src[i].b;
        long long v = std::llround(luma);
        if (v < 0) v = 0;
        if (v > 255) v = 255;
        dst[i] = static_cast<std::uint8_t>(v);
    }
    return out;
}

/// Total intensity mass: the exact integer sum of all pixel values.
inline std::int64_t image_energy(const GrayImage& img) {
    std::int64_t sum = 0;
    for (std::uint8_t v : img.pixels()) sum += v;
    return sum;
}

} // namespace sparsedn
