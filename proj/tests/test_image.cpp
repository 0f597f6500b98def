#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "sparsedn/image.hpp"

using namespace sparsedn;

namespace {

// Independent weighted-sum oracle for the gray conversion.
int gray_oracle(int r, int g, int b) {
    double v = 0.299 * r + 0.587 * g + 0.114 * b;
    return static_cast<int>(std::floor(v + 0.5));
}

RgbImage single_pixel(int r, int g, int b) {
    RgbImage img(1, 1);
    img.at(0, 0) = {static_cast<std::uint8_t>(r), static_cast<std::uint8_t>(g),
                    static_cast<std::uint8_t>(b)};
    return img;
}

} // namespace

TEST_CASE("rgb_to_gray endpoints") {
    CHECK(rgb_to_gray(single_pixel(255, 255, 255)).at(0, 0) == 255);
    CHECK(rgb_to_gray(single_pixel(0, 0, 0)).at(0, 0) == 0);
}

TEST_CASE("rgb_to_gray pure red matches weighted-sum oracle") {
    // round(0.299 * 255) = round(76.245) = 76
    CHECK(gray_oracle(255, 0, 0) == 76);
    CHECK(rgb_to_gray(single_pixel(255, 0, 0)).at(0, 0) == 76);
}

TEST_CASE("rgb_to_gray is identity on gray triplets") {
    for (int g = 0; g <= 255; ++g)
        CHECK(rgb_to_gray(single_pixel(g, g, g)).at(0, 0) == g);
}

TEST_CASE("rgb_to_gray is monotone in each channel") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> chan(0, 254);
    for (int trial = 0; trial < 200; ++trial) {
        int r = chan(rng), g = chan(rng), b = chan(rng);
        int base = rgb_to_gray(single_pixel(r, g, b)).at(0, 0);
        CHECK(rgb_to_gray(single_pixel(r + 1, g, b)).at(0, 0) >= base);
        CHECK(rgb_to_gray(single_pixel(r, g + 1, b)).at(0, 0) >= base);
        CHECK(rgb_to_gray(single_pixel(r, g, b + 1)).at(0, 0) >= base);
    }
}

TEST_CASE("rgb_to_gray matches oracle on random triplets") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> chan(0, 255);
    for (int trial = 0; trial < 500; ++trial) {
        int r = chan(rng), g = chan(rng), b = chan(rng);
        CHECK(rgb_to_gray(single_pixel(r, g, b)).at(0, 0) == gray_oracle(r, g, b));
    }
}

TEST_CASE("image_energy basics") {
    CHECK(image_energy(GrayImage(4, 4, 0)) == 0);
    CHECK(image_energy(GrayImage(2, 2, 255)) == 1020);
}

TEST_CASE("image_energy matches double-loop oracle") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> val(0, 255);
    GrayImage img(16, 16);
    for (auto& p : img.pixels()) p = static_cast<std::uint8_t>(val(rng));

    std::int64_t expected = 0;
    for (int y = 0; y < img.height(); ++y)
        for (int x = 0; x < img.width(); ++x)
            expected += img.at(x, y);
    CHECK(image_energy(img) == expected);
}

TEST_CASE("image_energy is additive over row partitions") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> val(0, 255);
    GrayImage img(9, 12);
    for (auto& p : img.pixels()) p = static_cast<std::uint8_t>(val(rng));

    for (int split = 1; split < img.height(); ++split) {
        GrayImage top(img.width(), split);
        GrayImage bottom(img.width(), img.height() - split);
        for (int y = 0; y < img.height(); ++y)
            for (int x = 0; x < img.width(); ++x) {
                if (y < split)
                    top.at(x, y) = img.at(x, y);
                else
                    bottom.at(x, y - split) = img.at(x, y);
            }
        CHECK(image_energy(top) + image_energy(bottom) == image_energy(img));
    }
}

TEST_CASE("image constructors validate dimensions") {
    CHECK_THROWS_AS(GrayImage(0, 4), std::invalid_argument);
    CHECK_THROWS_AS(GrayImage(4, 0), std::invalid_argument);
    CHECK_THROWS_AS(GrayImage(2, 2, std::vector<std::uint8_t>{1, 2, 3}),
                    std::invalid_argument);
}
