#pragma once

// Deterministic synthetic corpus for the acceptance suite: sparse 256x256
// scenes (dark background, one dome-topped white patch, a few flat gray
// patches) plus a planted Gaussian bump acting as the structured noise the
// pipeline is meant to detect and relocate.

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "sparsedn/image.hpp"

namespace test_fixtures {

struct CorpusMember {
    sparsedn::GrayImage clean; // scene without the planted bump
    sparsedn::GrayImage noisy; // scene + bump
    int background = 0;
    double bump_amplitude = 0.0;
    double bump_sigma = 0.0;
    double bump_cx = 0.0;
    double bump_cy = 0.0;
};

inline void paint_disc_dome(sparsedn::GrayImage& img, double cx, double cy,
                            double sigma_c) {
    // White patch: values 251..255, shaped as a gentle Gaussian dome so the
    // slice descent sees Gaussian caps near the top. Cut where the dome
    // rounds below 251.
    double radius = sigma_c * std::sqrt(2.0 * std::log(4.5 / 0.5));
    int x0 = std::max(0, int(cx - radius) - 1), x1 = std::min(img.width() - 1, int(cx + radius) + 1);
    int y0 = std::max(0, int(cy - radius) - 1), y1 = std::min(img.height() - 1, int(cy + radius) + 1);
    for (int y = y0; y <= y1; ++y)
        for (int x = x0; x <= x1; ++x) {
            double r2 = (x - cx) * (x - cx) + (y - cy) * (y - cy);
            if (r2 > radius * radius) continue;
            long v = std::lround(250.5 + 4.5 * std::exp(-r2 / (2.0 * sigma_c * sigma_c)));
            img.at(x, y) = static_cast<std::uint8_t>(std::clamp(v, 251L, 255L));
        }
}

inline void paint_flat_disc(sparsedn::GrayImage& img, int cx, int cy, int radius,
                            std::uint8_t value) {
    for (int y = std::max(0, cy - radius); y <= std::min(img.height() - 1, cy + radius); ++y)
        for (int x = std::max(0, cx - radius); x <= std::min(img.width() - 1, cx + radius); ++x)
            if ((x - cx) * (x - cx) + (y - cy) * (y - cy) <= radius * radius)
                img.at(x, y) = value;
}

inline void paint_rect(sparsedn::GrayImage& img, int x0, int y0, int x1, int y1,
                       std::uint8_t value) {
    for (int y = y0; y <= y1; ++y)
        for (int x = x0; x <= x1; ++x) img.at(x, y) = value;
}

inline void add_bump(sparsedn::GrayImage& img, double cx, double cy, double amp,
                     double sigma) {
    for (int y = 0; y < img.height(); ++y)
        for (int x = 0; x < img.width(); ++x) {
            double r2 = (x - cx) * (x - cx) + (y - cy) * (y - cy);
            double g = amp * std::exp(-r2 / (2.0 * sigma * sigma));
            long v = std::lround(img.at(x, y) + g);
            img.at(x, y) = static_cast<std::uint8_t>(std::clamp(v, 0L, 255L));
        }
}

/// Member `index` (0..9) of the corpus. Fully deterministic.
inline CorpusMember make_member(int index) {
    const int kSize = 256;
    CorpusMember m;
    m.background = 20 + (index * 9) % 41;               // 20..60
    sparsedn::GrayImage img(kSize, kSize,
                            static_cast<std::uint8_t>(m.background));

    // dome-topped white patch (values 251..255, 15-26% of the frame)
    double disc_cx = 80 + (index % 3) * 8;
    double disc_cy = 88 + ((index / 3) % 2) * 8;
    double sigma_c = 27 + (index % 9);
    paint_disc_dome(img, disc_cx, disc_cy, sigma_c);

    // near-white plateau; joins the slice descent early and breaks the
    // Gaussian match right below the white cap
    paint_rect(img, 176, 180, 252, 248, 249);

    // flat gray patches, one per sweep band
    const std::uint8_t levels[5] = {205, 215, 225, 235, 245};
    for (int k = 0; k < 5; ++k)
        paint_flat_disc(img, 18 + 34 * k, 228, 12, levels[k]);

    m.clean = img;

    // planted bump: the structured "noise" sitting on the dark background
    m.bump_amplitude = 60.0 + 4.0 * index;              // 60..96
    m.bump_sigma = 8.0 + 0.3 * index;                   // 8..10.7
    m.bump_cx = 210.0;
    m.bump_cy = 48.0 + (index % 4);
    m.noisy = img;
    add_bump(m.noisy, m.bump_cx, m.bump_cy, m.bump_amplitude, m.bump_sigma);
    return m;
}

} // namespace test_fixtures
