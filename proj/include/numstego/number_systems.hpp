#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace numstego {

using PixelValue = std::uint32_t;

enum class SchemeKind { Binary, Fibonacci, Prime, Natural };

/// A weight function selecting one of the four decompositions. `p` is the
/// Fibonacci order; it is forced to 1 for every other kind.
class WeightScheme {
 public:
  explicit WeightScheme(SchemeKind kind = SchemeKind::Binary, unsigned p = 1);

  static WeightScheme binary() { return WeightScheme(SchemeKind::Binary); }
  static WeightScheme fibonacci(unsigned p = 1) {
    return WeightScheme(SchemeKind::Fibonacci, p);
  }
  static WeightScheme prime() { return WeightScheme(SchemeKind::Prime); }
  static WeightScheme natural() { return WeightScheme(SchemeKind::Natural); }

  SchemeKind kind() const noexcept { return kind_; }
  unsigned p() const noexcept { return p_; }

  // Minimum index distance between two set digits minus one; 0 means any
  // subset is allowed.
  unsigned gap() const noexcept {
    return kind_ == SchemeKind::Fibonacci ? p_ : 0;
  }

  friend bool operator==(const WeightScheme&, const WeightScheme&) = default;

 private:
  SchemeKind kind_;
  unsigned p_;
};

std::string_view to_string(SchemeKind kind);
/// Accepts "binary", "fibonacci", "prime", "natural".
std::optional<SchemeKind> parse_scheme(std::string_view name);

/// Binary digits over a weight table, index 0 = least significant plane.
class DigitVector {
 public:
  DigitVector() = default;
  explicit DigitVector(std::size_t n) : digits_(n, 0) {}
  explicit DigitVector(std::vector<std::uint8_t> digits);

  std::size_t size() const noexcept { return digits_.size(); }
  bool test(std::size_t i) const { return digits_.at(i) != 0; }
  void set(std::size_t i, bool bit) { digits_.at(i) = bit ? 1 : 0; }
  std::span<const std::uint8_t> digits() const noexcept { return digits_; }

  /// Indices of the set digits, ascending.
  std::vector<std::size_t> set_indices() const;

  // Most-significant-plane first, e.g. "0101".
  std::string to_string() const;

  friend bool operator==(const DigitVector&, const DigitVector&) = default;
  // Lexicographic order reading the most significant plane first.
  friend bool operator<(const DigitVector& a, const DigitVector& b);

 private:
  std::vector<std::uint8_t> digits_;
};

class WeightTable {
 public:
  WeightTable(WeightScheme scheme, unsigned k, std::vector<PixelValue> weights);

  const WeightScheme& scheme() const noexcept { return scheme_; }
  unsigned k() const noexcept { return k_; }
  std::size_t n() const noexcept { return weights_.size(); }
  std::span<const PixelValue> weights() const noexcept { return weights_; }
  PixelValue weight(std::size_t plane) const { return weights_.at(plane); }
  PixelValue max_value() const noexcept { return (PixelValue{1} << k_) - 1; }

 private:
  WeightScheme scheme_;
  unsigned k_;
  std::vector<PixelValue> weights_;
};

inline constexpr unsigned kMinBitDepth = 1;
inline constexpr unsigned kMaxBitDepth = 16;

/// First `count` weights of the scheme's sequence, strictly ascending.
/// Fibonacci drops the repeated leading ones of F_p(0) = F_p(1) = 1.
std::vector<PixelValue> weight_sequence(const WeightScheme& scheme,
                                        std::size_t count);

/// Closed-form lower bound on the plane count used to seed the coverage
/// search: the natural scheme uses ceil((-1 + sqrt(2^(k+3) + 9)) / 2), every
/// other scheme the smallest n whose gap-respecting maximum (the plain weight
/// sum for binary and prime) reaches 2^k - 1.
std::size_t plane_count_guess(const WeightScheme& scheme, unsigned k);

/// Table with the smallest n for which every value in [0, 2^k - 1] has a
/// canonical decomposition. Throws RangeError for k outside [1, 16].
WeightTable build_weight_table(const WeightScheme& scheme, unsigned k);

/// Canonical (lexicographically greatest valid) representation of `v`,
/// computed greedily from the largest weight down. Throws RangeError when
/// v > 2^k - 1.
DigitVector decompose(PixelValue v, const WeightTable& table);

/// Sum of the weights whose digits are set.
PixelValue compose(const DigitVector& digits, const WeightTable& table);

/// True iff no two set digits lie within index distance p of each other.
bool zeckendorf_valid(const DigitVector& digits, unsigned p);

/// zeckendorf_valid for Fibonacci tables, always true otherwise.
bool satisfies_scheme(const DigitVector& digits, const WeightScheme& scheme);

}  // namespace numstego
