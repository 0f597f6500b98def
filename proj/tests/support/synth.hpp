#pragma once

// Small builders for synthetic test images.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>

#include "sparsedn/image.hpp"

namespace test_synth {

// Flat background plus a quantized Gaussian bump, clamped to [0,255].
inline sparsedn::GrayImage planted_bump(int w, int h, int bg, double amp,
                                        double cx, double cy, double sigma) {
    sparsedn::GrayImage img(w, h, static_cast<std::uint8_t>(bg));
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            double r2 = (x - cx) * (x - cx) + (y - cy) * (y - cy);
            long v = std::lround(bg + amp * std::exp(-r2 / (2.0 * sigma * sigma)));
            img.at(x, y) = static_cast<std::uint8_t>(std::clamp(v, 0L, 255L));
        }
    return img;
}

inline sparsedn::GrayImage random_image(int w, int h, std::uint32_t seed,
                                        int lo = 0, int hi = 255) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> val(lo, hi);
    sparsedn::GrayImage img(w, h);
    for (auto& p : img.pixels()) p = static_cast<std::uint8_t>(val(rng));
    return img;
}

} // namespace test_synth
