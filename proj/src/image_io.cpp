#include "numstego/image_io.hpp"

#include <cctype>
#include <fstream>
#include <iterator>
#include <limits>

#include "numstego/errors.hpp"

namespace numstego {

GrayImage::GrayImage(std::size_t width, std::size_t height, std::uint8_t fill)
    : GrayImage(width, height, std::vector<std::uint8_t>(width * height, fill)) {}

GrayImage::GrayImage(std::size_t width, std::size_t height,
                     std::vector<std::uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  if (width == 0 || height == 0)
    throw ShapeError("image dimensions must be positive");
  if (pixels_.size() != width * height)
    throw ShapeError("pixel count " + std::to_string(pixels_.size()) +
                     " does not match " + std::to_string(width) + "x" +
                     std::to_string(height));
}

namespace {

class HeaderReader {
 public:
  explicit HeaderReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else if (std::isspace(bytes_[pos_])) {
        ++pos_;
      } else {
        return;
      }
    }
  }

  std::size_t number(const char* what) {
    skip_space_and_comments();
    if (pos_ >= bytes_.size())
      throw TruncationError(std::string("PGM header ends before ") + what);
    if (!std::isdigit(bytes_[pos_]))
      throw FormatError(std::string("PGM header: expected ") + what);
    std::size_t value = 0;
    while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
      if (value > std::numeric_limits<std::uint32_t>::max())
        throw FormatError(std::string("PGM header: ") + what + " too large");
      value = value * 10 + (bytes_[pos_++] - '0');
    }
    return value;
  }

  std::size_t pos() const noexcept { return pos_; }
  void advance(std::size_t n) { pos_ += n; }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

GrayImage read_pgm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '5')
    throw FormatError("not a binary PGM file (expected magic P5)");
  HeaderReader header(bytes);
  header.advance(2);
  const std::size_t width = header.number("width");
  const std::size_t height = header.number("height");
  const std::size_t maxval = header.number("maxval");
  if (width == 0 || height == 0)
    throw FormatError("PGM dimensions must be positive");
  if (maxval != 255)
    throw UnsupportedDepthError("unsupported PGM maxval " +
                                std::to_string(maxval) + " (only 255)");
  if (header.pos() >= bytes.size() || !std::isspace(bytes[header.pos()]))
    throw FormatError("PGM header: missing whitespace after maxval");
  header.advance(1);

  const std::size_t count = width * height;
  const std::size_t available = bytes.size() - header.pos();
  if (available < count)
    throw TruncationError("PGM pixel data truncated: expected " +
                          std::to_string(count) + " bytes, found " +
                          std::to_string(available));
  auto first = bytes.begin() + static_cast<std::ptrdiff_t>(header.pos());
  return GrayImage(width, height,
                   std::vector<std::uint8_t>(first, first + static_cast<std::ptrdiff_t>(count)));
}

std::vector<std::uint8_t> write_pgm(const GrayImage& image) {
  const std::string header = "P5\n" + std::to_string(image.width()) + " " +
                             std::to_string(image.height()) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.insert(out.end(), image.pixels().begin(), image.pixels().end());
  return out;
}

std::vector<std::uint8_t> read_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string() + " for reading");
  std::vector<std::uint8_t> data((std::istreambuf_iterator<char>(in)),
                                 std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("error reading " + path.string());
  return data;
}

void write_bytes(const std::filesystem::path& path,
                 std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("error writing " + path.string());
}

GrayImage read_pgm_file(const std::filesystem::path& path) {
  return read_pgm(read_bytes(path));
}

void write_pgm_file(const std::filesystem::path& path, const GrayImage& image) {
  write_bytes(path, write_pgm(image));
}

}  // namespace numstego
