#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "sparsedn/errors.hpp"
#include "sparsedn/image.hpp"

namespace sparsedn {

/// Full-reference quality battery for one image pair.
struct QualityReport {
    double mse = 0.0;
    double psnr_db = 0.0;
    double psnr_roi_db = 0.0;
    double ssim = 0.0;
    double uiqi = 0.0;
    double energy_retention = 0.0;
};

/// Boolean region-of-interest mask matching the compared images.
struct RoiMask {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> member; // 0/1, row-major

    bool at(int x, int y) const {
        return member[static_cast<std::size_t>(y) * width + x] != 0;
    }
    std::int64_t count() const {
        std::int64_t n = 0;
        for (auto m : member) n += m;
        return n;
    }
};

namespace metrics_detail {

inline void require_same_dims(const GrayImage& a, const GrayImage& b) {
    if (a.width() != b.width() || a.height() != b.height())
        throw DimensionMismatch();
}

inline double psnr_from_mse(double mse) {
    if (mse == 0.0) return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(255.0 * 255.0 / mse);
}

} // namespace metrics_detail

/// Mean squared error; the squared-difference sum is exact integer math.
inline double mse(const GrayImage& a, const GrayImage& b) {
    metrics_detail::require_same_dims(a, b);
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < a.pixel_count(); ++i) {
        std::int64_t d = std::int64_t(a.pixels()[i]) - b.pixels()[i];
        sum += d * d;
    }
    return static_cast<double>(sum) / static_cast<double>(a.pixel_count());
}

/// 10 log10(255^2 / MSE); +infinity for identical images.
inline double psnr(const GrayImage& a, const GrayImage& b) {
    return metrics_detail::psnr_from_mse(mse(a, b));
}

/// PSNR restricted to mask-member pixels.
inline double psnr_roi(const GrayImage& a, const GrayImage& b, const RoiMask& mask) {
    metrics_detail::require_same_dims(a, b);
    if (mask.width != a.width() || mask.height != a.height())
        throw DimensionMismatch();
    std::int64_t sum = 0, n = 0;
    for (std::size_t i = 0; i < a.pixel_count(); ++i) {
        if (!mask.member[i]) continue;
        std::int64_t d = std::int64_t(a.pixels()[i]) - b.pixels()[i];
        sum += d * d;
        ++n;
    }
    if (n == 0) throw EmptyMask();
    return metrics_detail::psnr_from_mse(static_cast<double>(sum) /
                                         static_cast<double>(n));
}

/// The crucial (non-white) region: reference pixels at or below T.
inline RoiMask crucial_mask(const GrayImage& reference, int threshold) {
    if (threshold < 0 || threshold > 255) throw ThresholdOutOfRange();
    RoiMask mask;
    mask.width = reference.width();
    mask.height = reference.height();
    mask.member.resize(reference.pixel_count());
    std::int64_t n = 0;
    for (std::size_t i = 0; i < reference.pixel_count(); ++i) {
        bool in = reference.pixels()[i] <= threshold;
        mask.member[i] = in ? 1 : 0;
        n += in;
    }
    if (n == 0) throw EmptyMask();
    return mask;
}

/// Mean local SSIM over 11x11 Gaussian-weighted windows (sigma 1.5),
/// C1 = (0.01*255)^2, C2 = (0.03*255)^2. Windows are fully interior
/// (valid positions only); both dimensions must be at least 11.
inline double ssim(const GrayImage& a, const GrayImage& b) {
    metrics_detail::require_same_dims(a, b);
    constexpr int kWin = 11;
    constexpr double kC1 = 6.5025;   // (0.01 * 255)^2
    constexpr double kC2 = 58.5225;  // (0.03 * 255)^2
    if (a.width() < kWin || a.height() < kWin)
        throw ImageTooSmall("ssim needs at least 11x11 images");

    // normalized separable Gaussian window
    double w1d[kWin];
    double wsum = 0.0;
    for (int i = 0; i < kWin; ++i) {
        double d = i - (kWin - 1) / 2.0;
        w1d[i] = std::exp(-d * d / (2.0 * 1.5 * 1.5));
        wsum += w1d[i];
    }
    for (double& w : w1d) w /= wsum;

    double total = 0.0;
    std::int64_t windows = 0;
    for (int wy = 0; wy + kWin <= a.height(); ++wy) {
        for (int wx = 0; wx + kWin <= a.width(); ++wx) {
            double mu_a = 0, mu_b = 0, aa = 0, bb = 0, ab = 0;
            for (int dy = 0; dy < kWin; ++dy) {
                for (int dx = 0; dx < kWin; ++dx) {
                    double w = w1d[dy] * w1d[dx];
                    double pa = a.at(wx + dx, wy + dy);
                    double pb = b.at(wx + dx, wy + dy);
                    mu_a += w * pa;
                    mu_b += w * pb;
                    aa += w * pa * pa;
                    bb += w * pb * pb;
                    ab += w * pa * pb;
                }
            }
            double var_a = aa - mu_a * mu_a;
            double var_b = bb - mu_b * mu_b;
            double cov = ab - mu_a * mu_b;
            double num = (2.0 * mu_a * mu_b + kC1) * (2.0 * cov + kC2);
            double den = (mu_a * mu_a + mu_b * mu_b + kC1) * (var_a + var_b + kC2);
            total += num / den;
            ++windows;
        }
    }
    return total / static_cast<double>(windows);
}

/// Mean local Q-index over sliding 8x8 windows with sample (n-1) statistics.
/// Zero-denominator windows contribute 1 when the windows are identical,
/// otherwise 0.
inline double uiqi(const GrayImage& a, const GrayImage& b) {
    metrics_detail::require_same_dims(a, b);
    constexpr int kWin = 8;
    constexpr std::int64_t kN = kWin * kWin;
    if (a.width() < kWin || a.height() < kWin)
        throw ImageTooSmall("uiqi needs at least 8x8 images");

    double total = 0.0;
    std::int64_t windows = 0;
    for (int wy = 0; wy + kWin <= a.height(); ++wy) {
        for (int wx = 0; wx + kWin <= a.width(); ++wx) {
            std::int64_t sa = 0, sb = 0, saa = 0, sbb = 0, sab = 0;
            bool identical = true;
            for (int dy = 0; dy < kWin; ++dy) {
                for (int dx = 0; dx < kWin; ++dx) {
                    std::int64_t pa = a.at(wx + dx, wy + dy);
                    std::int64_t pb = b.at(wx + dx, wy + dy);
                    sa += pa;
                    sb += pb;
                    saa += pa * pa;
                    sbb += pb * pb;
                    sab += pa * pb;
                    identical = identical && pa == pb;
                }
            }
            // Q in exact integer arithmetic:
            //   Q = 4*nab*sa*sb / ((naa+nbb) * (sa^2+sb^2))
            // where naa = N*saa - sa^2 etc. are the (N-1)-scaled variances.
            std::int64_t naa = kN * saa - sa * sa;
            std::int64_t nbb = kN * sbb - sb * sb;
            std::int64_t nab = kN * sab - sa * sb;
            std::int64_t den_var = naa + nbb;
            std::int64_t den_mu = sa * sa + sb * sb;
            if (den_var == 0 || den_mu == 0) {
                total += identical ? 1.0 : 0.0;
            } else {
                double num = 4.0 * static_cast<double>(nab) * static_cast<double>(sa) *
                             static_cast<double>(sb);
                double den = static_cast<double>(den_var) * static_cast<double>(den_mu);
                total += num / den;
            }
            ++windows;
        }
    }
    return total / static_cast<double>(windows);
}

/// image_energy(after) / image_energy(before).
inline double energy_retention(const GrayImage& before, const GrayImage& after) {
    metrics_detail::require_same_dims(before, after);
    std::int64_t e_before = image_energy(before);
    if (e_before == 0) throw ZeroEnergyReference();
    return static_cast<double>(image_energy(after)) / static_cast<double>(e_before);
}

} // namespace sparsedn
