#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sparsedn/errors.hpp"
#include "sparsedn/image.hpp"

namespace sparsedn {

namespace pgm_detail {

struct Cursor {
    const std::uint8_t* data;
    std::size_t size;
    std::size_t pos = 0;

    bool eof() const { return pos >= size; }
    std::uint8_t peek() const { return data[pos]; }

    // Skips whitespace and '#' comments (comment runs to end of line).
    void skip_separators() {
        while (!eof()) {
            std::uint8_t c = peek();
            if (c == '#') {
                while (!eof() && peek() != '\n') ++pos;
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n' ||
                       c == '\f' || c == '\v') {
                ++pos;
            } else {
                break;
            }
        }
    }

    int next_int() {
        skip_separators();
        if (eof() || peek() < '0' || peek() > '9')
            throw MalformedFile("PGM: expected integer in header");
        long v = 0;
        while (!eof() && peek() >= '0' && peek() <= '9') {
            v = v * 10 + (peek() - '0');
            if (v > 1'000'000'000) throw MalformedFile("PGM: header value out of range");
            ++pos;
        }
        return static_cast<int>(v);
    }
};

} // namespace pgm_detail

/// Decodes a binary (P5) PGM. Only 8-bit data (maxval <= 255) is accepted.
inline GrayImage load_pgm(const std::vector<std::uint8_t>& bytes) {
    pgm_detail::Cursor cur{bytes.data(), bytes.size()};
    if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '5')
        throw MalformedFile("PGM: missing P5 magic");
    cur.pos = 2;

    int width = cur.next_int();
    int height = cur.next_int();
    int maxval = cur.next_int();
    if (width < 1 || height < 1)
        throw MalformedFile("PGM: non-positive dimensions");
    if (static_cast<std::int64_t>(width) * height > (1LL << 26))
        throw MalformedFile("PGM: unreasonable dimensions");
    if (maxval > 255)
        throw UnsupportedDepth("PGM: only 8-bit (maxval <= 255) supported");
    if (maxval < 1)
        throw MalformedFile("PGM: invalid maxval");

    // Exactly one whitespace byte separates the header from the raster.
    if (cur.eof()) throw MalformedFile("PGM: truncated header");
    std::uint8_t sep = bytes[cur.pos++];
    if (sep != ' ' && sep != '\t' && sep != '\r' && sep != '\n')
        throw MalformedFile("PGM: missing raster separator");

    std::size_t need = static_cast<std::size_t>(width) * height;
    if (bytes.size() - cur.pos < need)
        throw MalformedFile("PGM: truncated pixel payload");

    std::vector<std::uint8_t> pixels(bytes.begin() + cur.pos,
                                     bytes.begin() + cur.pos + need);
    return GrayImage(width, height, std::move(pixels));
}

/// Encodes binary P5 with maxval 255. Layout is fixed:
/// "P5\n<w> <h>\n255\n" followed by the raw raster.
inline std::vector<std::uint8_t> save_pgm(const GrayImage& img) {
    std::string header = "P5\n" + std::to_string(img.width()) + " " +
                         std::to_string(img.height()) + "\n255\n";
    std::vector<std::uint8_t> out(header.begin(), header.end());
    out.insert(out.end(), img.pixels().begin(), img.pixels().end());
    return out;
}

} // namespace sparsedn
