#pragma once

#include <stdexcept>
#include <string>

namespace sparsedn {

/// Base class for all errors thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// --- file I/O ---

/// Input bytes are not a well-formed file of the claimed format.
struct MalformedFile : Error {
    using Error::Error;
};

/// The file is syntactically valid but uses a depth or feature this
/// library does not handle (e.g. 16-bit samples, interlaced PNG).
struct UnsupportedDepth : Error {
    using Error::Error;
};

/// Could not open, read or write a file on disk.
struct FileError : Error {
    using Error::Error;
};

// --- geometry / arguments ---

struct DimensionMismatch : Error {
    DimensionMismatch() : Error("image dimensions do not match") {}
    using Error::Error;
};

struct DepthOutOfRange : Error {
    using Error::Error;
};

struct ThresholdOutOfRange : Error {
    ThresholdOutOfRange() : Error("threshold T must lie in [0,255]") {}
    using Error::Error;
};

struct ImageTooSmall : Error {
    using Error::Error;
};

struct EmptyMask : Error {
    EmptyMask() : Error("ROI mask has no member pixels") {}
    using Error::Error;
};

struct ZeroEnergyReference : Error {
    ZeroEnergyReference() : Error("reference image has zero energy") {}
    using Error::Error;
};

// --- envelope detection ---

/// Too few nonzero surface heights to attempt a fit.
struct InsufficientSupport : Error {
    using Error::Error;
};

/// All surface heights are zero; no model comparison is possible.
struct DegenerateSurface : Error {
    DegenerateSurface() : Error("surface has no nonzero heights") {}
    using Error::Error;
};

/// No slice depth ever produced an acceptable Gaussian match.
struct NoGaussianEnvelope : Error {
    NoGaussianEnvelope() : Error("no Gaussian envelope detected") {}
    using Error::Error;
};

} // namespace sparsedn
