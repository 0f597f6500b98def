#pragma once

#include <cmath>
#include <cstdint>

#include "sparsedn/image.hpp"

namespace sparsedn {

/// Additive white Gaussian noise parameters. `seed` fully determines the
/// noise field: the generator is counter-based, so the variate for pixel
/// (x, y) depends only on (seed, y * width + x).
struct AwgnParams {
    double sigma = 0.0;
    double mean = 0.0;
    std::uint64_t seed = 0;
};

namespace noise_detail {

// splitmix64: output k of the stream seeded with `seed`.
inline std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t k) {
    std::uint64_t z = seed + (k + 1) * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Uniform in the open interval (0,1), 53-bit resolution.
inline double uniform_open01(std::uint64_t bits) {
    return (static_cast<double>(bits >> 11) + 0.5) * 0x1p-53;
}

// Acklam's rational approximation to the standard normal quantile.
// Relative error below 1.15e-9 over (0,1); fixed coefficients keep the
// stream reproducible across platforms.
inline double inverse_normal_cdf(double p) {
    static constexpr double a[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                    -2.759285104469687e+02, 1.383577518672690e+02,
                                    -3.066479806614716e+01, 2.506628277459239e+00};
    static constexpr double b[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                    -1.556989798598866e+02, 6.680131188771972e+01,
                                    -1.328068155288572e+01};
    static constexpr double c[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                    -2.400758277161838e+00, -2.549732539343734e+00,
                                    4.374664141464968e+00,  2.938163982698783e+00};
    static constexpr double d[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                                    2.445134137142996e+00, 3.754408661907416e+00};
    constexpr double p_low = 0.02425;

    if (p < p_low) {
        double q = std::sqrt(-2.0 * std::log(p));
        return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    if (p > 1.0 - p_low) {
        double q = std::sqrt(-2.0 * std::log(1.0 - p));
        return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    double q = p - 0.5;
    double r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

} // namespace noise_detail

/// Standard normal variate for stream position k under `seed`.
inline double normal_variate(std::uint64_t seed, std::uint64_t k) {
    return noise_detail::inverse_normal_cdf(
        noise_detail::uniform_open01(noise_detail::splitmix64_at(seed, k)));
}

/// Adds i.i.d. Normal(mean, sigma^2) noise per pixel, rounds, then clamps
/// to [0,255]. Identical (img, params) always produce identical output.
inline GrayImage awgn_apply(const GrayImage& img, const AwgnParams& params) {
    if (params.sigma < 0)
        throw std::invalid_argument("sigma must be non-negative");
    GrayImage out(img.width(), img.height());
    const auto& src = img.pixels();
    auto& dst = out.pixels();
    for (std::size_t i = 0; i < src.size(); ++i) {
        double n = params.mean + params.sigma * normal_variate(params.seed, i);
        long long v = std::llround(src[i] + n);
        if (v < 0) v = 0;
        if (v > 255) v = 255;
        dst[i] = static_cast<std::uint8_t>(v);
    }
    return out;
}

} // namespace sparsedn
