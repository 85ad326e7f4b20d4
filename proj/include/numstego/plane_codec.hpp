#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "numstego/image_io.hpp"
#include "numstego/number_systems.hpp"

namespace numstego {

/// A virtual bit plane, 0 = least significant.
struct PlaneIndex {
  std::size_t value = 0;

  constexpr PlaneIndex() = default;
  constexpr explicit PlaneIndex(std::size_t v) : value(v) {}
  friend constexpr bool operator==(PlaneIndex, PlaneIndex) = default;
};

/// The k-bit -> n-bit mapping: every value's canonical digit string, and
/// membership over the set of those strings. A string is valid exactly when
/// it is the canonical string of the value it composes to.
class BitplaneMap {
 public:
  explicit BitplaneMap(WeightTable table);

  const WeightTable& table() const noexcept { return table_; }
  std::size_t n() const noexcept { return table_.n(); }

  const DigitVector& canonical(PixelValue v) const;
  bool is_valid(const DigitVector& digits) const;
  std::size_t valid_count() const noexcept { return forward_.size(); }

  void check_plane(PlaneIndex plane) const;

 private:
  WeightTable table_;
  std::vector<DigitVector> forward_;
};

BitplaneMap build_map(const WeightTable& table);

struct BitMatrix {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<std::uint8_t> bits;  // row-major, values 0/1

  std::uint8_t at(std::size_t x, std::size_t y) const {
    return bits.at(y * width + x);
  }
};

/// The plane's digit of every pixel's canonical decomposition.
BitMatrix extract_plane(const GrayImage& image, const BitplaneMap& map,
                        PlaneIndex plane);

/// True iff the plane's digit of canonical(v) can be set to either 0 or 1
/// and still yield a valid string. The rule is symmetric, so encoder and
/// decoder agree on which pixels carry data.
bool embeddable(PixelValue v, const BitplaneMap& map, PlaneIndex plane);

/// Writes `bit` into the plane digit of canonical(v) and composes the
/// result. Throws ContractError when v is not embeddable on this plane.
PixelValue embed_digit(PixelValue v, bool bit, const BitplaneMap& map,
                       PlaneIndex plane);

bool extract_digit(PixelValue v, const BitplaneMap& map, PlaneIndex plane);

}  // namespace numstego
