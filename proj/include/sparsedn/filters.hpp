#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "sparsedn/errors.hpp"
#include "sparsedn/image.hpp"

namespace sparsedn {

enum class KernelKind { mean, median, gaussian };

/// Sliding-window filter description. `sigma` applies to gaussian only.
struct KernelSpec {
    KernelKind kind = KernelKind::mean;
    int size = 3;       // odd, >= 3
    double sigma = 1.0; // > 0 for gaussian

    void validate() const {
        if (size < 3 || size % 2 == 0)
            throw std::invalid_argument("kernel size must be odd and >= 3");
        if (kind == KernelKind::gaussian && sigma <= 0.0)
            throw std::invalid_argument("gaussian sigma must be positive");
    }
};

namespace filter_detail {

inline int clamp_coord(int v, int hi) { return std::clamp(v, 0, hi); }

} // namespace filter_detail

/// Classic spatial filtering with border replication. Mean and Gaussian
/// results are rounded to nearest; median picks a window member directly.
inline GrayImage spatial_filter(const GrayImage& img, const KernelSpec& spec) {
    spec.validate();
    if (img.width() < spec.size || img.height() < spec.size)
        throw ImageTooSmall("image smaller than the filter window");

    const int r = spec.size / 2;
    const int n = spec.size * spec.size;
    GrayImage out(img.width(), img.height());

    std::vector<double> kernel;
    if (spec.kind == KernelKind::gaussian) {
        kernel.resize(n);
        double sum = 0.0;
        for (int dy = -r; dy <= r; ++dy)
            for (int dx = -r; dx <= r; ++dx) {
                double w = std::exp(-(dx * dx + dy * dy) / (2.0 * spec.sigma * spec.sigma));
                kernel[(dy + r) * spec.size + (dx + r)] = w;
                sum += w;
            }
        for (double& w : kernel) w /= sum;
    }

    std::vector<std::uint8_t> window(n);
    for (int y = 0; y < img.height(); ++y) {
        for (int x = 0; x < img.width(); ++x) {
            switch (spec.kind) {
            case KernelKind::mean: {
                std::int64_t sum = 0;
                for (int dy = -r; dy <= r; ++dy)
                    for (int dx = -r; dx <= r; ++dx)
                        sum += img.at(filter_detail::clamp_coord(x + dx, img.width() - 1),
                                      filter_detail::clamp_coord(y + dy, img.height() - 1));
                out.at(x, y) = static_cast<std::uint8_t>(
                    std::llround(static_cast<double>(sum) / n));
                break;
            }
            case KernelKind::median: {
                int k = 0;
                for (int dy = -r; dy <= r; ++dy)
                    for (int dx = -r; dx <= r; ++dx)
                        window[k++] = img.at(filter_detail::clamp_coord(x + dx, img.width() - 1),
                                             filter_detail::clamp_coord(y + dy, img.height() - 1));
                std::nth_element(window.begin(), window.begin() + n / 2, window.end());
                out.at(x, y) = window[n / 2];
                break;
            }
            case KernelKind::gaussian: {
                double acc = 0.0;
                for (int dy = -r; dy <= r; ++dy)
                    for (int dx = -r; dx <= r; ++dx)
                        acc += kernel[(dy + r) * spec.size + (dx + r)] *
                               img.at(filter_detail::clamp_coord(x + dx, img.width() - 1),
                                      filter_detail::clamp_coord(y + dy, img.height() - 1));
                long long v = std::llround(acc);
                out.at(x, y) = static_cast<std::uint8_t>(std::clamp(v, 0LL, 255LL));
                break;
            }
            }
        }
    }
    return out;
}

} // namespace sparsedn
