#pragma once

#include <zlib.h>

#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <variant>
#include <vector>

#include "sparsedn/errors.hpp"
#include "sparsedn/image.hpp"

namespace sparsedn {

using LoadedImage = std::variant<GrayImage, RgbImage>;

namespace png_detail {

inline constexpr std::uint8_t kSignature[8] = {137, 80, 78, 71, 13, 10, 26, 10};

inline std::uint32_t be32(const std::uint8_t* p) {
    return (std::uint32_t(p[0]) << 24) | (std::uint32_t(p[1]) << 16) |
           (std::uint32_t(p[2]) << 8) | std::uint32_t(p[3]);
}

inline void put_be32(std::vector<std::uint8_t>& out, std::uint32_t v) {
    out.push_back(static_cast<std::uint8_t>(v >> 24));
    out.push_back(static_cast<std::uint8_t>(v >> 16));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
    out.push_back(static_cast<std::uint8_t>(v));
}

inline void put_chunk(std::vector<std::uint8_t>& out, const char type[4],
                      const std::vector<std::uint8_t>& data) {
    put_be32(out, static_cast<std::uint32_t>(data.size()));
    std::size_t start = out.size();
    out.insert(out.end(), type, type + 4);
    out.insert(out.end(), data.begin(), data.end());
    uLong crc = ::crc32(0L, out.data() + start, static_cast<uInt>(4 + data.size()));
    put_be32(out, static_cast<std::uint32_t>(crc));
}

inline std::vector<std::uint8_t> zlib_deflate(const std::vector<std::uint8_t>& raw) {
    uLongf bound = compressBound(static_cast<uLong>(raw.size()));
    std::vector<std::uint8_t> out(bound);
    if (compress2(out.data(), &bound, raw.data(), static_cast<uLong>(raw.size()),
                  Z_DEFAULT_COMPRESSION) != Z_OK)
        throw Error("zlib deflate failed");
    out.resize(bound);
    return out;
}

inline std::vector<std::uint8_t> zlib_inflate(const std::vector<std::uint8_t>& comp,
                                              std::size_t expected) {
    std::vector<std::uint8_t> out(expected);
    uLongf got = static_cast<uLongf>(expected);
    int rc = uncompress(out.data(), &got, comp.data(), static_cast<uLong>(comp.size()));
    if (rc != Z_OK || got != expected)
        throw MalformedFile("PNG: bad compressed image data");
    return out;
}

inline int paeth(int a, int b, int c) {
    int p = a + b - c;
    int pa = std::abs(p - a), pb = std::abs(p - b), pc = std::abs(p - c);
    if (pa <= pb && pa <= pc) return a;
    if (pb <= pc) return b;
    return c;
}

// Reverses one scanline filter in place; prev is the reconstructed row above
// (null for the first row). bpp is bytes per pixel.
inline void unfilter_row(std::uint8_t filter, std::uint8_t* row,
                         const std::uint8_t* prev, int stride, int bpp) {
    auto left = [&](int i) { return i >= bpp ? row[i - bpp] : 0; };
    auto up = [&](int i) { return prev ? prev[i] : 0; };
    auto upleft = [&](int i) { return (prev && i >= bpp) ? prev[i - bpp] : 0; };
    switch (filter) {
    case 0:
        break;
    case 1:
        for (int i = 0; i < stride; ++i) row[i] = static_cast<std::uint8_t>(row[i] + left(i));
        break;
    case 2:
        for (int i = 0; i < stride; ++i) row[i] = static_cast<std::uint8_t>(row[i] + up(i));
        break;
    case 3:
        for (int i = 0; i < stride; ++i)
            row[i] = static_cast<std::uint8_t>(row[i] + (left(i) + up(i)) / 2);
        break;
    case 4:
        for (int i = 0; i < stride; ++i)
            row[i] = static_cast<std::uint8_t>(row[i] + paeth(left(i), up(i), upleft(i)));
        break;
    default:
        throw MalformedFile("PNG: unknown scanline filter");
    }
}

inline std::vector<std::uint8_t> encode(int width, int height, int color_type,
                                        const std::uint8_t* raster, int bpp) {
    std::vector<std::uint8_t> out(kSignature, kSignature + 8);

    std::vector<std::uint8_t> ihdr;
    put_be32(ihdr, static_cast<std::uint32_t>(width));
    put_be32(ihdr, static_cast<std::uint32_t>(height));
    ihdr.push_back(8); // bit depth
    ihdr.push_back(static_cast<std::uint8_t>(color_type));
    ihdr.push_back(0); // compression
    ihdr.push_back(0); // filter method
    ihdr.push_back(0); // no interlace
    put_chunk(out, "IHDR", ihdr);

    const std::size_t stride = static_cast<std::size_t>(width) * bpp;
    std::vector<std::uint8_t> raw;
    raw.reserve((stride + 1) * height);
    for (int y = 0; y < height; ++y) {
        raw.push_back(0); // filter type None
        raw.insert(raw.end(), raster + y * stride, raster + (y + 1) * stride);
    }
    put_chunk(out, "IDAT", zlib_deflate(raw));
    put_chunk(out, "IEND", {});
    return out;
}

} // namespace png_detail

/// Decodes an 8-bit non-interlaced PNG. Grayscale (color type 0) yields a
/// GrayImage, truecolor (type 2) an RgbImage; anything else is rejected.
inline LoadedImage load_png(const std::vector<std::uint8_t>& bytes) {
    using namespace png_detail;
    if (bytes.size() < 8 || std::memcmp(bytes.data(), kSignature, 8) != 0)
        throw MalformedFile("PNG: bad signature");

    std::size_t pos = 8;
    bool seen_ihdr = false, seen_iend = false;
    int width = 0, height = 0, color_type = 0;
    std::vector<std::uint8_t> idat;

    while (pos + 12 <= bytes.size() && !seen_iend) {
        std::uint32_t len = be32(&bytes[pos]);
        if (pos + 12 + static_cast<std::size_t>(len) > bytes.size())
            throw MalformedFile("PNG: truncated chunk");
        const std::uint8_t* type = &bytes[pos + 4];
        const std::uint8_t* data = &bytes[pos + 8];
        std::uint32_t stored_crc = be32(&bytes[pos + 8 + len]);
        uLong crc = ::crc32(0L, type, 4 + len);
        if (static_cast<std::uint32_t>(crc) != stored_crc)
            throw MalformedFile("PNG: chunk CRC mismatch");

        if (std::memcmp(type, "IHDR", 4) == 0) {
            if (seen_ihdr || len != 13) throw MalformedFile("PNG: bad IHDR");
            seen_ihdr = true;
            width = static_cast<int>(be32(data));
            height = static_cast<int>(be32(data + 4));
            int bit_depth = data[8];
            color_type = data[9];
            int compression = data[10], filter = data[11], interlace = data[12];
            if (width < 1 || height < 1 ||
                static_cast<std::int64_t>(width) * height > (1LL << 26))
                throw MalformedFile("PNG: bad dimensions");
            if (compression != 0 || filter != 0)
                throw MalformedFile("PNG: unknown compression/filter method");
            if (bit_depth != 8)
                throw UnsupportedDepth("PNG: only 8-bit samples supported");
            if (color_type != 0 && color_type != 2)
                throw UnsupportedDepth("PNG: only grayscale and RGB supported");
            if (interlace != 0)
                throw UnsupportedDepth("PNG: interlaced images not supported");
        } else if (std::memcmp(type, "IDAT", 4) == 0) {
            if (!seen_ihdr) throw MalformedFile("PNG: IDAT before IHDR");
            idat.insert(idat.end(), data, data + len);
        } else if (std::memcmp(type, "IEND", 4) == 0) {
            seen_iend = true;
        }
        // Ancillary chunks are skipped.
        pos += 12 + static_cast<std::size_t>(len);
    }
    if (!seen_ihdr || idat.empty() || !seen_iend)
        throw MalformedFile("PNG: missing required chunks");

    const int bpp = color_type == 2 ? 3 : 1;
    const std::size_t stride = static_cast<std::size_t>(width) * bpp;
    std::vector<std::uint8_t> raw = zlib_inflate(idat, (stride + 1) * height);

    std::vector<std::uint8_t> raster(stride * height);
    const std::uint8_t* prev = nullptr;
    for (int y = 0; y < height; ++y) {
        std::uint8_t filter = raw[y * (stride + 1)];
        std::uint8_t* dst = raster.data() + y * stride;
        std::memcpy(dst, &raw[y * (stride + 1) + 1], stride);
        unfilter_row(filter, dst, prev, static_cast<int>(stride), bpp);
        prev = dst;
    }

    if (color_type == 0)
        return GrayImage(width, height, std::move(raster));

    RgbImage img(width, height);
    for (std::size_t i = 0; i < img.pixel_count(); ++i)
        img.pixels()[i] = {raster[3 * i], raster[3 * i + 1], raster[3 * i + 2]};
    return img;
}

inline std::vector<std::uint8_t> save_png(const GrayImage& img) {
    return png_detail::encode(img.width(), img.height(), 0, img.pixels().data(), 1);
}

inline std::vector<std::uint8_t> save_png(const RgbImage& img) {
    std::vector<std::uint8_t> raster;
    raster.reserve(img.pixel_count() * 3);
    for (const Rgb& p : img.pixels()) {
        raster.push_back(p.r);
        raster.push_back(p.g);
        raster.push_back(p.b);
    }
    return png_detail::encode(img.width(), img.height(), 2, raster.data(), 3);
}

} // namespace sparsedn
