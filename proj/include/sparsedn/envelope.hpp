#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "sparsedn/errors.hpp"
#include "sparsedn/image.hpp"

namespace sparsedn {

/// Heights of the pixel surface above a horizontal slice plane, row-major.
/// All heights are non-negative; at depth 0 the plane sits at the peak and
/// every height is zero.
struct TruncatedSurface {
    int width = 0;
    int height = 0;
    std::vector<double> heights;

    double at(int x, int y) const {
        return heights[static_cast<std::size_t>(y) * width + x];
    }
};

/// Axis-aligned scaled 2D Gaussian, the ideal envelope model.
struct GaussianModel2D {
    double amplitude = 0.0;
    double center_x = 0.0;
    double center_y = 0.0;
    double sigma_x = 1.0;
    double sigma_y = 1.0;

    double eval(double x, double y) const {
        double dx = (x - center_x) / sigma_x;
        double dy = (y - center_y) / sigma_y;
        return amplitude * std::exp(-0.5 * (dx * dx + dy * dy));
    }

    // Separable exponential factors; eval(x,y) = amplitude * col[x] * row[y].
    std::vector<double> col_factors(int width) const {
        std::vector<double> f(width);
        for (int x = 0; x < width; ++x) {
            double dx = (x - center_x) / sigma_x;
            f[x] = std::exp(-0.5 * dx * dx);
        }
        return f;
    }
    std::vector<double> row_factors(int height) const {
        std::vector<double> f(height);
        for (int y = 0; y < height; ++y) {
            double dy = (y - center_y) / sigma_y;
            f[y] = std::exp(-0.5 * dy * dy);
        }
        return f;
    }
};

/// Acceptance rule for the per-depth envelope comparison.
struct SliceMatchConfig {
    double match_threshold = 0.85; // minimum 1 - NRMSE score counted as a match
    int min_support = 16;          // nonzero heights required before fitting
};

struct DepthScore {
    int depth = 0;
    double score = 0.0;
};

/// Result of the slice descent: the deepest depth d_temp at which the
/// above-slice surface still matched the ideal Gaussian.
struct EnvelopeEstimate {
    int width = 0;
    int height = 0;
    int h_initial = 0;  // maximum intensity, start of the descent
    int d_temp = 0;     // last matching depth below the peak
    int base_level = 0; // h_initial - d_temp
    GaussianModel2D model;
    std::vector<DepthScore> trace; // one entry per visited depth, from 0
};

/// Maximum pixel intensity (the peak of the surface).
inline int surface_max(const GrayImage& img) {
    return *std::max_element(img.pixels().begin(), img.pixels().end());
}

namespace envelope_detail {

inline void slice_into(const GrayImage& img, int level, TruncatedSurface& out) {
    out.width = img.width();
    out.height = img.height();
    out.heights.resize(img.pixel_count());
    const auto& px = img.pixels();
    for (std::size_t i = 0; i < px.size(); ++i) {
        int h = int(px[i]) - level;
        out.heights[i] = h > 0 ? h : 0;
    }
}

// Height-weighted moment fit. Returns nullopt when fewer than min_support
// heights are nonzero.
inline std::optional<GaussianModel2D> fit_moments(const TruncatedSurface& s,
                                                  int min_support) {
    double mass = 0.0, sx = 0.0, sy = 0.0, sxx = 0.0, syy = 0.0;
    double amp = 0.0;
    long long support = 0;
    std::size_t i = 0;
    for (int y = 0; y < s.height; ++y) {
        for (int x = 0; x < s.width; ++x, ++i) {
            double h = s.heights[i];
            if (h <= 0.0) continue;
            ++support;
            mass += h;
            sx += h * x;
            sy += h * y;
            sxx += h * double(x) * x;
            syy += h * double(y) * y;
            if (h > amp) amp = h;
        }
    }
    if (support < min_support) return std::nullopt;

    GaussianModel2D m;
    m.amplitude = amp;
    m.center_x = sx / mass;
    m.center_y = sy / mass;
    double vx = sxx / mass - m.center_x * m.center_x;
    double vy = syy / mass - m.center_y * m.center_y;
    // Floor the spreads at half a pixel so single-pixel peaks stay finite.
    m.sigma_x = std::max(0.5, std::sqrt(std::max(vx, 0.0)));
    m.sigma_y = std::max(0.5, std::sqrt(std::max(vy, 0.0)));
    return m;
}

inline double score_against(const TruncatedSurface& s, const GaussianModel2D& m) {
    if (m.amplitude <= 0.0) return 0.0;
    std::vector<double> col = m.col_factors(s.width);
    std::vector<double> row = m.row_factors(s.height);
    double sq = 0.0;
    std::size_t i = 0;
    for (int y = 0; y < s.height; ++y) {
        double ry = m.amplitude * row[y];
        for (int x = 0; x < s.width; ++x, ++i) {
            double e = s.heights[i] - ry * col[x];
            sq += e * e;
        }
    }
    double rmse = std::sqrt(sq / (double(s.width) * s.height));
    double score = 1.0 - rmse / m.amplitude;
    return std::clamp(score, 0.0, 1.0);
}

} // namespace envelope_detail

/// Surface above the slice plane at depth d below the peak:
/// heights(x,y) = max(0, A(x,y) - (h_initial - d)).
inline TruncatedSurface slice_above(const GrayImage& img, int d) {
    int h_initial = surface_max(img);
    if (d < 0 || d > h_initial)
        throw DepthOutOfRange("slice depth " + std::to_string(d) +
                              " outside [0, " + std::to_string(h_initial) + "]");
    TruncatedSurface out;
    envelope_detail::slice_into(img, h_initial - d, out);
    return out;
}

/// Moment-matched Gaussian: height-weighted centroid and spreads, amplitude
/// equal to the tallest height. Spreads are floored at 0.5 px.
inline GaussianModel2D fit_gaussian(const TruncatedSurface& surface,
                                    int min_support = 16) {
    auto m = envelope_detail::fit_moments(surface, min_support);
    if (!m)
        throw InsufficientSupport("fewer than " + std::to_string(min_support) +
                                  " nonzero heights");
    return *m;
}

/// 1 - NRMSE between the surface and the model sampled on the grid, where
/// NRMSE = RMSE / amplitude, clamped to [0,1].
inline double match_score(const TruncatedSurface& surface,
                          const GaussianModel2D& model) {
    bool any = std::any_of(surface.heights.begin(), surface.heights.end(),
                           [](double h) { return h > 0.0; });
    if (!any) throw DegenerateSurface();
    return envelope_detail::score_against(surface, model);
}

/// Pushes the slice plane down one intensity unit at a time from the peak.
/// Every depth that fits and scores at least match_threshold records d_temp;
/// the first failing depth after a match ends the descent. Depths with too
/// little support to fit are skipped (scored 0 in the trace) without ending
/// the loop, as are failing depths before the first match -- near the peak
/// the quantized surface is a plateau that no Gaussian matches.
inline EnvelopeEstimate detect_base(const GrayImage& img,
                                    const SliceMatchConfig& cfg = {}) {
    int h_initial = surface_max(img);
    if (h_initial <= 0) throw NoGaussianEnvelope();

    EnvelopeEstimate est;
    est.width = img.width();
    est.height = img.height();
    est.h_initial = h_initial;

    TruncatedSurface s;
    bool matched = false;
    for (int d = 0; d <= h_initial; ++d) {
        envelope_detail::slice_into(img, h_initial - d, s);
        auto model = envelope_detail::fit_moments(s, cfg.min_support);
        if (!model) {
            est.trace.push_back({d, 0.0});
            continue;
        }
        double score = envelope_detail::score_against(s, *model);
        est.trace.push_back({d, score});
        if (score >= cfg.match_threshold) {
            matched = true;
            est.d_temp = d;
            est.model = *model;
        } else if (matched) {
            break;
        }
    }
    if (!matched) throw NoGaussianEnvelope();
    est.base_level = est.h_initial - est.d_temp;
    return est;
}

} // namespace sparsedn
