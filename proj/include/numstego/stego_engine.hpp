#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "numstego/image_io.hpp"
#include "numstego/metrics.hpp"
#include "numstego/number_systems.hpp"
#include "numstego/plane_codec.hpp"

namespace numstego {

/// Images are always 8 bits deep.
inline constexpr unsigned kImageBitDepth = 8;

inline constexpr std::size_t kHeaderBits = 32;

using Bytes = std::vector<std::uint8_t>;

struct StegoParams {
  WeightScheme scheme;
  PlaneIndex plane;
  // Stego-key; when present it selects a pseudorandom pixel traversal.
  std::optional<Bytes> key;

  static Bytes key_from_string(std::string_view s) {
    return Bytes(s.begin(), s.end());
  }
};

struct EmbedReport {
  std::size_t bits_embedded = 0;
  std::size_t pixels_visited = 0;
  std::size_t pixels_skipped = 0;
  std::size_t capacity_bits = 0;
  DistortionReport distortion;
};

struct EmbedResult {
  GrayImage stego;
  EmbedReport report;
};

/// 32-bit big-endian length header then the payload, one 0/1 entry per bit,
/// most significant bit of every byte first.
std::vector<std::uint8_t> frame(std::span<const std::uint8_t> payload);

/// Inverse of frame. Throws TruncationError when `bits` is shorter than the
/// header announces.
Bytes unframe(std::span<const std::uint8_t> bits);

/// Row-major order without a key. With a key: Fisher-Yates shuffle driven by
/// SplitMix64 seeded with the first 8 bytes (big-endian) of SHA-256(key).
std::vector<std::size_t> pixel_order(std::size_t width, std::size_t height,
                                     const std::optional<Bytes>& key);

/// Table and map for the scheme at 8 bits; throws RangeError when the
/// plane does not exist.
BitplaneMap image_map(const StegoParams& params);

std::size_t capacity(const GrayImage& image, const StegoParams& params);

EmbedResult embed(const GrayImage& cover, std::span<const std::uint8_t> payload,
                  const StegoParams& params);

Bytes extract(const GrayImage& stego, const StegoParams& params);

}  // namespace numstego
