#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "sparsedn/envelope.hpp"
#include "sparsedn/errors.hpp"
#include "sparsedn/image.hpp"

namespace sparsedn {

/// Per-pixel absolute deviation between the actual above-base surface and
/// the fitted envelope.
struct ErrorField {
    int width = 0;
    int height = 0;
    std::vector<double> err; // row-major, >= 0

    double at(int x, int y) const {
        return err[static_cast<std::size_t>(y) * width + x];
    }
};

/// How the actual surface height above the base is measured.
/// `clamped` treats pixels below the base plane as height 0; `absolute`
/// is the literal |z - base| reading, kept for comparison.
enum class DeviationRule { clamped, absolute };

struct RedistributionReport {
    double error_acc = 0.0;      // accumulated budget, in intensity units
    std::int64_t distributed = 0; // whole units actually added
    double leftover = 0.0;        // error_acc - distributed
    std::int64_t modified_pixels = 0;
    int threshold = 0;
    bool no_envelope = false;
};

struct DenoiseResult {
    GrayImage output;
    GrayImage cleaned; // pre-redistribution
    std::optional<EnvelopeEstimate> estimate;
    RedistributionReport report;
};

/// Err(x,y) = |P_actual - P_normal| with P_actual the surface height above
/// the base level and P_normal the fitted model sampled at (x,y).
inline ErrorField compute_error_field(const GrayImage& img,
                                      const EnvelopeEstimate& estimate,
                                      DeviationRule rule = DeviationRule::clamped) {
    if (img.width() != estimate.width || img.height() != estimate.height)
        throw DimensionMismatch();
    ErrorField field;
    field.width = img.width();
    field.height = img.height();
    field.err.resize(img.pixel_count());

    const double base = estimate.base_level;
    const GaussianModel2D& m = estimate.model;
    std::vector<double> col = m.col_factors(img.width());
    std::vector<double> row = m.row_factors(img.height());

    std::size_t i = 0;
    for (int y = 0; y < img.height(); ++y) {
        double ry = m.amplitude * row[y];
        for (int x = 0; x < img.width(); ++x, ++i) {
            double actual = img.pixels()[i] - base;
            if (rule == DeviationRule::clamped)
                actual = std::max(0.0, actual);
            else
                actual = std::fabs(actual);
            double normal = std::max(0.0, ry * col[x]);
            field.err[i] = std::fabs(actual - normal);
        }
    }
    return field;
}

/// Error_acc: the exact double sum of the field.
inline double accumulate_error(const ErrorField& field) {
    double sum = 0.0;
    for (double e : field.err) sum += e;
    return sum;
}

/// Subtracts the fitted envelope from the image:
/// cleaned = clamp(round(A - P_normal), 0, 255).
inline GrayImage strip_noise(const GrayImage& img, const EnvelopeEstimate& estimate) {
    if (img.width() != estimate.width || img.height() != estimate.height)
        throw DimensionMismatch();
    GrayImage out(img.width(), img.height());
    const GaussianModel2D& m = estimate.model;
    std::vector<double> col = m.col_factors(img.width());
    std::vector<double> row = m.row_factors(img.height());

    std::size_t i = 0;
    for (int y = 0; y < img.height(); ++y) {
        double ry = m.amplitude * row[y];
        for (int x = 0; x < img.width(); ++x, ++i) {
            double normal = std::max(0.0, ry * col[x]);
            long long v = std::llround(img.pixels()[i] - normal);
            v = std::clamp(v, 0LL, 255LL);
            out.pixels()[i] = static_cast<std::uint8_t>(v);
        }
    }
    return out;
}

/// Pays the integer part of the budget into pixels brighter than T,
/// brightest first (row-major on ties), each capped at 255. The fractional
/// part of the budget always remains in `leftover`.
inline std::pair<GrayImage, RedistributionReport>
redistribute(const GrayImage& cleaned, double error_acc, int threshold) {
    if (threshold < 0 || threshold > 255) throw ThresholdOutOfRange();
    if (error_acc < 0.0) throw std::invalid_argument("error_acc must be >= 0");

    GrayImage out = cleaned;
    RedistributionReport report;
    report.threshold = threshold;
    report.error_acc = error_acc;

    // Eligible pixel indices bucketed by intensity; buckets preserve
    // row-major order, so the visit order contract is free.
    std::vector<std::vector<std::uint32_t>> buckets(256);
    const auto& px = cleaned.pixels();
    for (std::size_t i = 0; i < px.size(); ++i)
        if (px[i] > threshold) buckets[px[i]].push_back(static_cast<std::uint32_t>(i));

    std::int64_t remaining = static_cast<std::int64_t>(std::floor(error_acc));
    const std::int64_t budget = remaining;
    for (int v = 255; v > threshold && remaining > 0; --v) {
        for (std::uint32_t idx : buckets[v]) {
            if (remaining == 0) break;
            std::int64_t give = std::min<std::int64_t>(remaining, 255 - v);
            if (give > 0) {
                out.pixels()[idx] = static_cast<std::uint8_t>(v + give);
                ++report.modified_pixels;
                remaining -= give;
            }
        }
    }
    report.distributed = budget - remaining;
    report.leftover = error_acc - static_cast<double>(report.distributed);
    return {std::move(out), report};
}

/// Full pipeline: detect the envelope base, build the error budget, strip
/// the envelope, redistribute the budget above T. A missing envelope is a
/// flagged no-op result, not an error.
inline DenoiseResult denoise(const GrayImage& noisy, int threshold,
                             const SliceMatchConfig& cfg = {},
                             DeviationRule rule = DeviationRule::clamped) {
    if (threshold < 0 || threshold > 255) throw ThresholdOutOfRange();
    try {
        EnvelopeEstimate est = detect_base(noisy, cfg);
        ErrorField field = compute_error_field(noisy, est, rule);
        double acc = accumulate_error(field);
        GrayImage cleaned = strip_noise(noisy, est);
        auto [output, report] = redistribute(cleaned, acc, threshold);
        return {std::move(output), std::move(cleaned), std::move(est), report};
    } catch (const NoGaussianEnvelope&) {
        RedistributionReport report;
        report.threshold = threshold;
        report.no_envelope = true;
        return {noisy, noisy, std::nullopt, report};
    }
}

} // namespace sparsedn
