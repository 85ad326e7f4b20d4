#include "numstego/plane_codec.hpp"

#include "numstego/errors.hpp"

namespace numstego {

BitplaneMap::BitplaneMap(WeightTable table) : table_(std::move(table)) {
  forward_.reserve(std::size_t{table_.max_value()} + 1);
  for (PixelValue v = 0; v <= table_.max_value(); ++v)
    forward_.push_back(decompose(v, table_));
}

const DigitVector& BitplaneMap::canonical(PixelValue v) const {
  if (v > table_.max_value())
    throw RangeError("value " + std::to_string(v) + " exceeds " +
                     std::to_string(table_.max_value()));
  return forward_[v];
}

bool BitplaneMap::is_valid(const DigitVector& digits) const {
  if (digits.size() != n()) return false;
  const PixelValue v = compose(digits, table_);
  return v <= table_.max_value() && forward_[v] == digits;
}

void BitplaneMap::check_plane(PlaneIndex plane) const {
  if (plane.value >= n())
    throw RangeError("plane " + std::to_string(plane.value) +
                     " out of range for " +
                     std::string(to_string(table_.scheme().kind())) +
                     " (n = " + std::to_string(n()) + ")");
}

BitplaneMap build_map(const WeightTable& table) { return BitplaneMap(table); }

BitMatrix extract_plane(const GrayImage& image, const BitplaneMap& map,
                        PlaneIndex plane) {
  map.check_plane(plane);
  BitMatrix out{image.width(), image.height(), {}};
  out.bits.reserve(image.size());
  for (auto v : image.pixels())
    out.bits.push_back(map.canonical(v).test(plane.value) ? 1 : 0);
  return out;
}

bool embeddable(PixelValue v, const BitplaneMap& map, PlaneIndex plane) {
  map.check_plane(plane);
  DigitVector flipped = map.canonical(v);
  flipped.set(plane.value, !flipped.test(plane.value));
  return map.is_valid(flipped);
}

PixelValue embed_digit(PixelValue v, bool bit, const BitplaneMap& map,
                       PlaneIndex plane) {
  if (!embeddable(v, map, plane))
    throw ContractError("value " + std::to_string(v) +
                        " is not embeddable on plane " +
                        std::to_string(plane.value));
  DigitVector digits = map.canonical(v);
  digits.set(plane.value, bit);
  return compose(digits, map.table());
}

bool extract_digit(PixelValue v, const BitplaneMap& map, PlaneIndex plane) {
  map.check_plane(plane);
  return map.canonical(v).test(plane.value);
}

}  // namespace numstego
