#include "numstego/stego_engine.hpp"

#include <openssl/evp.h>

#include <array>
#include <limits>
#include <numeric>
#include <utility>

#include "numstego/errors.hpp"

namespace numstego {

namespace {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

std::uint64_t key_seed(std::span<const std::uint8_t> key) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  if (EVP_Digest(key.data(), key.size(), digest.data(), &length, EVP_sha256(),
                 nullptr) != 1 ||
      length < 8)
    throw StegoError("SHA-256 digest failed");
  std::uint64_t seed = 0;
  for (int i = 0; i < 8; ++i) seed = (seed << 8) | digest[i];
  return seed;
}

// Per-value embedding behaviour of one plane over the 8-bit range.
struct PlaneLut {
  std::array<bool, 256> usable{};
  std::array<bool, 256> digit{};
  std::array<std::uint8_t, 256> with_zero{};
  std::array<std::uint8_t, 256> with_one{};

  PlaneLut(const BitplaneMap& map, PlaneIndex plane) {
    for (PixelValue v = 0; v < 256; ++v) {
      digit[v] = extract_digit(v, map, plane);
      usable[v] = embeddable(v, map, plane);
      if (usable[v]) {
        with_zero[v] = static_cast<std::uint8_t>(embed_digit(v, false, map, plane));
        with_one[v] = static_cast<std::uint8_t>(embed_digit(v, true, map, plane));
      }
    }
  }

  std::size_t count(const GrayImage& image) const {
    std::size_t n = 0;
    for (auto v : image.pixels()) n += usable[v] ? 1 : 0;
    return n;
  }
};

}  // namespace

std::vector<std::uint8_t> frame(std::span<const std::uint8_t> payload) {
  if (payload.size() > std::numeric_limits<std::uint32_t>::max())
    throw RangeError("payload of " + std::to_string(payload.size()) +
                     " bytes exceeds the 32-bit length header");
  const auto length = static_cast<std::uint32_t>(payload.size());
  std::vector<std::uint8_t> bits;
  bits.reserve(kHeaderBits + 8 * payload.size());
  for (int i = 31; i >= 0; --i) bits.push_back((length >> i) & 1U);
  for (auto byte : payload)
    for (int i = 7; i >= 0; --i) bits.push_back((byte >> i) & 1U);
  return bits;
}

Bytes unframe(std::span<const std::uint8_t> bits) {
  if (bits.size() < kHeaderBits)
    throw TruncationError("bitstream shorter than the 32-bit length header");
  std::uint64_t length = 0;
  for (std::size_t i = 0; i < kHeaderBits; ++i)
    length = (length << 1) | (bits[i] & 1U);
  if (bits.size() - kHeaderBits < 8 * length)
    throw TruncationError("header announces " + std::to_string(length) +
                          " bytes, bitstream holds " +
                          std::to_string((bits.size() - kHeaderBits) / 8));
  Bytes out(length, 0);
  for (std::size_t i = 0; i < 8 * length; ++i)
    out[i / 8] = static_cast<std::uint8_t>((out[i / 8] << 1) |
                                           (bits[kHeaderBits + i] & 1U));
  return out;
}

std::vector<std::size_t> pixel_order(std::size_t width, std::size_t height,
                                     const std::optional<Bytes>& key) {
  const std::size_t count = width * height;
  if (count == 0) throw RangeError("image must contain at least one pixel");
  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), std::size_t{0});
  if (!key) return order;
  SplitMix64 rng(key_seed(*key));
  for (std::size_t i = count - 1; i > 0; --i) {
    const auto j = static_cast<std::size_t>(rng.next() % (i + 1));
    std::swap(order[i], order[j]);
  }
  return order;
}

BitplaneMap image_map(const StegoParams& params) {
  BitplaneMap map(build_weight_table(params.scheme, kImageBitDepth));
  map.check_plane(params.plane);
  return map;
}

std::size_t capacity(const GrayImage& image, const StegoParams& params) {
  return PlaneLut(image_map(params), params.plane).count(image);
}

EmbedResult embed(const GrayImage& cover, std::span<const std::uint8_t> payload,
                  const StegoParams& params) {
  const PlaneLut lut(image_map(params), params.plane);
  const auto bits = frame(payload);
  const std::size_t available = lut.count(cover);
  if (bits.size() > available) throw CapacityError(bits.size(), available);

  EmbedResult result{cover, {}};
  EmbedReport& report = result.report;
  report.capacity_bits = available;
  for (auto index : pixel_order(cover.width(), cover.height(), params.key)) {
    if (report.bits_embedded == bits.size()) break;
    ++report.pixels_visited;
    const std::uint8_t v = cover[index];
    if (!lut.usable[v]) {
      ++report.pixels_skipped;
      continue;
    }
    result.stego[index] =
        bits[report.bits_embedded++] ? lut.with_one[v] : lut.with_zero[v];
  }
  report.distortion = psnr(cover, result.stego);
  return result;
}

Bytes extract(const GrayImage& stego, const StegoParams& params) {
  const PlaneLut lut(image_map(params), params.plane);
  const std::size_t available = lut.count(stego);

  std::vector<std::uint8_t> bits;
  std::size_t wanted = kHeaderBits;
  for (auto index : pixel_order(stego.width(), stego.height(), params.key)) {
    const std::uint8_t v = stego[index];
    if (!lut.usable[v]) continue;
    bits.push_back(lut.digit[v] ? 1 : 0);
    if (bits.size() == kHeaderBits) {
      std::uint64_t length = 0;
      for (auto b : bits) length = (length << 1) | b;
      wanted = kHeaderBits + 8 * length;
      if (wanted > available)
        throw TruncationError("header announces " + std::to_string(length) +
                              " bytes (" + std::to_string(wanted) +
                              " bits) but only " + std::to_string(available) +
                              " embeddable pixels exist");
      bits.reserve(wanted);
    }
    if (bits.size() == wanted) return unframe(bits);
  }
  throw TruncationError("image holds only " + std::to_string(bits.size()) +
                        " embeddable bits, fewer than the 32-bit header");
}

}  // namespace numstego
