#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sparsedn/errors.hpp"
#include "sparsedn/image.hpp"
#include "sparsedn/pgm.hpp"
#include "sparsedn/png.hpp"

namespace sparsedn {

enum class ImageFormat { pgm, png };

/// Picks the format from a file extension (".pgm" / ".png", case-insensitive).
inline std::optional<ImageFormat> format_for_path(const std::filesystem::path& path) {
    std::string ext = path.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (ext == ".pgm") return ImageFormat::pgm;
    if (ext == ".png") return ImageFormat::png;
    return std::nullopt;
}

/// Decodes by content sniffing: P5 magic or PNG signature.
inline LoadedImage load_image(const std::vector<std::uint8_t>& bytes) {
    if (bytes.size() >= 2 && bytes[0] == 'P' && bytes[1] == '5')
        return load_pgm(bytes);
    if (bytes.size() >= 8 &&
        std::equal(png_detail::kSignature, png_detail::kSignature + 8, bytes.begin()))
        return load_png(bytes);
    throw MalformedFile("unrecognized image format (expected P5 PGM or PNG)");
}

inline std::vector<std::uint8_t> save_image(const GrayImage& img, ImageFormat format) {
    return format == ImageFormat::pgm ? save_pgm(img) : save_png(img);
}

inline std::vector<std::uint8_t> save_image(const RgbImage& img, ImageFormat format) {
    if (format == ImageFormat::pgm)
        throw UnsupportedDepth("PGM cannot store RGB images");
    return save_png(img);
}

/// Collapses a decoded image to grayscale (RGB goes through rgb_to_gray).
inline GrayImage to_gray(const LoadedImage& img) {
    if (const auto* gray = std::get_if<GrayImage>(&img)) return *gray;
    return rgb_to_gray(std::get<RgbImage>(img));
}

inline std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FileError("cannot open " + path.string());
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    if (in.bad()) throw FileError("read failed: " + path.string());
    return bytes;
}

/// Writes via a temp file in the same directory, then renames into place.
inline void write_file_atomic(const std::filesystem::path& path,
                              const std::vector<std::uint8_t>& bytes) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw FileError("cannot create " + tmp.string());
        out.write(reinterpret_cast<const char*>(bytes.data()),
                  static_cast<std::streamsize>(bytes.size()));
        if (!out) throw FileError("write failed: " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw FileError("rename failed: " + path.string() + " (" + ec.message() + ")");
}

inline GrayImage load_gray_file(const std::filesystem::path& path) {
    return to_gray(load_image(read_file(path)));
}

inline void save_gray_file(const std::filesystem::path& path, const GrayImage& img) {
    auto format = format_for_path(path);
    if (!format)
        throw std::invalid_argument("unknown output extension (use .pgm or .png): " +
                                    path.string());
    write_file_atomic(path, save_image(img, *format));
}

} // namespace sparsedn
