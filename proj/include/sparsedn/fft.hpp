#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

#include "sparsedn/errors.hpp"
#include "sparsedn/image.hpp"

namespace sparsedn {

namespace fft_detail {

inline int next_pow2(int n) {
    int p = 1;
    while (p < n) p <<= 1;
    return p;
}

// Iterative radix-2 Cooley-Tukey, forward transform (e^{-2*pi*i*k*n/N}).
inline void fft1d(std::complex<double>* data, int n) {
    for (int i = 1, j = 0; i < n; ++i) {
        int bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(data[i], data[j]);
    }
    for (int len = 2; len <= n; len <<= 1) {
        double angle = -2.0 * std::numbers::pi / len;
        std::complex<double> wlen(std::cos(angle), std::sin(angle));
        for (int i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (int k = 0; k < len / 2; ++k) {
                std::complex<double> u = data[i + k];
                std::complex<double> v = data[i + k + len / 2] * w;
                data[i + k] = u + v;
                data[i + k + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
}

} // namespace fft_detail

/// 2D forward DFT of the image, zero-padded to the next power-of-two
/// square. Returned row-major, DC at (0,0), size n x n.
inline std::vector<std::complex<double>> fft2d(const GrayImage& img, int& n_out) {
    int n = fft_detail::next_pow2(std::max(img.width(), img.height()));
    std::vector<std::complex<double>> grid(static_cast<std::size_t>(n) * n);
    for (int y = 0; y < img.height(); ++y)
        for (int x = 0; x < img.width(); ++x)
            grid[static_cast<std::size_t>(y) * n + x] = double(img.at(x, y));

    for (int y = 0; y < n; ++y) fft_detail::fft1d(grid.data() + std::size_t(y) * n, n);

    std::vector<std::complex<double>> column(n);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) column[y] = grid[std::size_t(y) * n + x];
        fft_detail::fft1d(column.data(), n);
        for (int y = 0; y < n; ++y) grid[std::size_t(y) * n + x] = column[y];
    }
    n_out = n;
    return grid;
}

/// Centered log-magnitude spectrum rescaled to [0,255], plus the
/// pre-rescale log range for the sidecar metadata.
struct LogSpectrum {
    GrayImage image;    // n x n, DC shifted to (n/2, n/2)
    double log_min = 0; // min of log(1 + |F|) before rescaling
    double log_max = 0;
};

inline LogSpectrum fft_log_magnitude(const GrayImage& img) {
    int n = 0;
    auto grid = fft2d(img, n);

    std::vector<double> logmag(grid.size());
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (int y = 0; y < n; ++y)
        for (int x = 0; x < n; ++x) {
            // fftshift: move DC to the center
            int sx = (x + n / 2) % n, sy = (y + n / 2) % n;
            double v = std::log1p(std::abs(grid[std::size_t(y) * n + x]));
            logmag[std::size_t(sy) * n + sx] = v;
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }

    LogSpectrum out;
    out.log_min = lo;
    out.log_max = hi;
    out.image = GrayImage(n, n);
    for (std::size_t i = 0; i < logmag.size(); ++i) {
        double scaled = hi > lo ? (logmag[i] - lo) / (hi - lo) * 255.0 : 0.0;
        out.image.pixels()[i] = static_cast<std::uint8_t>(std::llround(scaled));
    }
    return out;
}

} // namespace sparsedn
