#include <doctest.h>

#include <filesystem>
#include <random>
#include <string>

#include "numstego/errors.hpp"
#include "numstego/image_io.hpp"
#include "test_helpers.hpp"

using namespace numstego;

namespace {

std::vector<std::uint8_t> bytes(const std::string& header,
                                std::initializer_list<std::uint8_t> px = {}) {
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.insert(out.end(), px);
  return out;
}

}  // namespace

TEST_CASE("read minimal PGM") {
  auto img = read_pgm(bytes("P5\n2 1\n255\n", {0x00, 0xFF}));
  CHECK(img.width() == 2);
  CHECK(img.height() == 1);
  CHECK(img[0] == 0);
  CHECK(img[1] == 255);
}

TEST_CASE("reader tolerates comments and arbitrary whitespace") {
  auto img = read_pgm(bytes("P5 # made by hand\n# another\n 2\t2\r\n#c\n255 ", {1, 2, 3, 4}));
  CHECK(img == GrayImage(2, 2, std::vector<std::uint8_t>{1, 2, 3, 4}));
  // Pixel data starting with whitespace-valued bytes is not swallowed.
  auto ws = read_pgm(bytes("P5\n2 1\n255\n", {'\n', ' '}));
  CHECK(ws[0] == '\n');
  CHECK(ws[1] == ' ');
}

TEST_CASE("reader errors") {
  CHECK_THROWS_AS(read_pgm(bytes("P2\n1 1\n255\n", {0})), FormatError);
  CHECK_THROWS_AS(read_pgm(bytes("")), FormatError);
  CHECK_THROWS_AS(read_pgm(bytes("P5\n1 1\n65535\n", {0, 0})), UnsupportedDepthError);
  CHECK_THROWS_AS(read_pgm(bytes("P5\n1 1\n15\n", {0})), UnsupportedDepthError);
  CHECK_THROWS_AS(read_pgm(bytes("P5\n2 2\n255\n", {1, 2, 3})), TruncationError);
  CHECK_THROWS_AS(read_pgm(bytes("P5\n2 ")), TruncationError);
  CHECK_THROWS_AS(read_pgm(bytes("P5\nx 2\n255\n")), FormatError);
  CHECK_THROWS_AS(read_pgm(bytes("P5\n0 2\n255\n")), FormatError);
  CHECK_THROWS_AS(read_pgm(bytes("P5\n1 1\n255")), FormatError);
}

TEST_CASE("writer emits the canonical header") {
  CHECK(write_pgm(GrayImage(1, 1)) == bytes("P5\n1 1\n255\n", {0}));
  GrayImage img(3, 2, std::vector<std::uint8_t>{9, 8, 7, 6, 5, 4});
  CHECK(write_pgm(img) == write_pgm(img));
  CHECK(write_pgm(img) == bytes("P5\n3 2\n255\n", {9, 8, 7, 6, 5, 4}));
}

TEST_CASE("write then read is the identity") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 20; ++i) {
    auto img = testing::random_image(1 + rng() % 40, 1 + rng() % 40, rng);
    CHECK(read_pgm(write_pgm(img)) == img);
  }
}

TEST_CASE("file helpers") {
  const auto dir = std::filesystem::temp_directory_path() / "numstego_io_test";
  std::filesystem::create_directories(dir);
  GrayImage img(2, 2, std::vector<std::uint8_t>{0, 64, 128, 255});
  write_pgm_file(dir / "a.pgm", img);
  CHECK(read_pgm_file(dir / "a.pgm") == img);
  CHECK_THROWS_AS(read_pgm_file(dir / "missing.pgm"), IoError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("GrayImage shape checks") {
  CHECK_THROWS_AS(GrayImage(0, 1), ShapeError);
  CHECK_THROWS_AS(GrayImage(2, 2, std::vector<std::uint8_t>{1, 2, 3}), ShapeError);
  GrayImage img(3, 2, std::vector<std::uint8_t>{0, 1, 2, 3, 4, 5});
  CHECK(img.at(2, 1) == 5);
}
