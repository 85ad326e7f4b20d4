#include "numstego/number_systems.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "numstego/errors.hpp"

namespace numstego {

namespace {

constexpr std::size_t kMaxPlanes = 4096;

std::optional<DigitVector> greedy_decompose(PixelValue v,
                                            std::span<const PixelValue> weights,
                                            unsigned gap) {
  DigitVector digits(weights.size());
  PixelValue rest = v;
  // Signed so that skipping `gap` planes below index 0 terminates the loop.
  for (std::ptrdiff_t i = static_cast<std::ptrdiff_t>(weights.size()) - 1;
       i >= 0 && rest > 0; --i) {
    if (weights[i] <= rest) {
      digits.set(static_cast<std::size_t>(i), true);
      rest -= weights[i];
      i -= gap;
    }
  }
  if (rest != 0) return std::nullopt;
  return digits;
}

bool covers(std::span<const PixelValue> weights, unsigned gap,
            PixelValue max_value) {
  for (PixelValue v = 0; v <= max_value; ++v)
    if (!greedy_decompose(v, weights, gap)) return false;
  return true;
}

bool is_prime(PixelValue c) {
  if (c < 2) return false;
  for (PixelValue d = 2; d * d <= c; ++d)
    if (c % d == 0) return false;
  return true;
}

void check_bit_depth(unsigned k) {
  if (k < kMinBitDepth || k > kMaxBitDepth)
    throw RangeError("bit depth " + std::to_string(k) + " outside [" +
                     std::to_string(kMinBitDepth) + ", " +
                     std::to_string(kMaxBitDepth) + "]");
}

}  // namespace

WeightScheme::WeightScheme(SchemeKind kind, unsigned p)
    : kind_(kind), p_(kind == SchemeKind::Fibonacci ? p : 1) {
  if (p == 0) throw RangeError("Fibonacci order p must be >= 1");
}

std::string_view to_string(SchemeKind kind) {
  switch (kind) {
    case SchemeKind::Binary: return "binary";
    case SchemeKind::Fibonacci: return "fibonacci";
    case SchemeKind::Prime: return "prime";
    case SchemeKind::Natural: return "natural";
  }
  return "unknown";
}

std::optional<SchemeKind> parse_scheme(std::string_view name) {
  for (auto kind : {SchemeKind::Binary, SchemeKind::Fibonacci,
                    SchemeKind::Prime, SchemeKind::Natural})
    if (to_string(kind) == name) return kind;
  return std::nullopt;
}

DigitVector::DigitVector(std::vector<std::uint8_t> digits)
    : digits_(std::move(digits)) {
  for (auto& d : digits_) d = d ? 1 : 0;
}

std::vector<std::size_t> DigitVector::set_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < digits_.size(); ++i)
    if (digits_[i]) out.push_back(i);
  return out;
}

std::string DigitVector::to_string() const {
  std::string s;
  s.reserve(digits_.size());
  for (auto it = digits_.rbegin(); it != digits_.rend(); ++it)
    s.push_back(*it ? '1' : '0');
  return s;
}

bool operator<(const DigitVector& a, const DigitVector& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.digits_.rbegin(), a.digits_.rend(),
                                      b.digits_.rbegin(), b.digits_.rend());
}

WeightTable::WeightTable(WeightScheme scheme, unsigned k,
                         std::vector<PixelValue> weights)
    : scheme_(scheme), k_(k), weights_(std::move(weights)) {
  check_bit_depth(k);
  if (weights_.empty()) throw RangeError("weight table must have n >= 1");
  if (weights_.front() == 0) throw RangeError("weights must be positive");
  if (std::adjacent_find(weights_.begin(), weights_.end(),
                         std::greater_equal<>()) != weights_.end())
    throw RangeError("weights must be strictly ascending");
}

std::vector<PixelValue> weight_sequence(const WeightScheme& scheme,
                                        std::size_t count) {
  std::vector<PixelValue> out;
  out.reserve(count);
  switch (scheme.kind()) {
    case SchemeKind::Binary:
      if (count > 32) throw RangeError("binary weights overflow 32 bits");
      for (std::size_t i = 0; i < count; ++i) out.push_back(PixelValue{1} << i);
      break;
    case SchemeKind::Natural:
      for (std::size_t i = 0; i < count; ++i)
        out.push_back(static_cast<PixelValue>(i + 1));
      break;
    case SchemeKind::Prime:
      if (count > 0) out.push_back(1);
      for (PixelValue c = 2; out.size() < count; ++c)
        if (is_prime(c)) out.push_back(c);
      break;
    case SchemeKind::Fibonacci: {
      // F(i) = F(i-1) + F(i-p-1), F(0) = 1, F(negative) = 0.
      const std::size_t lag = scheme.p() + 1;
      std::vector<std::uint64_t> f;
      while (out.size() < count) {
        const std::size_t i = f.size();
        std::uint64_t next = 1;
        if (i > 0) next = f[i - 1] + (i >= lag ? f[i - lag] : 0);
        if (next > std::numeric_limits<PixelValue>::max())
          throw RangeError("Fibonacci weights overflow 32 bits");
        f.push_back(next);
        if (out.empty() || out.back() != next)
          out.push_back(static_cast<PixelValue>(next));
      }
      break;
    }
  }
  return out;
}

std::size_t plane_count_guess(const WeightScheme& scheme, unsigned k) {
  check_bit_depth(k);
  if (scheme.kind() == SchemeKind::Natural) {
    const double root = std::sqrt(std::ldexp(1.0, static_cast<int>(k) + 3) + 9);
    return static_cast<std::size_t>(std::ceil((-1.0 + root) / 2.0));
  }
  // Largest value the top n weights can reach when set digits must be more
  // than `gap` apart: every (gap+1)-th weight from the top. With gap 0 this is
  // the plain sum of the first n weights.
  const std::uint64_t target = (std::uint64_t{1} << k) - 1;
  const std::size_t stride = scheme.gap() + 1;
  std::vector<PixelValue> w = weight_sequence(scheme, std::min<std::size_t>(k + 1, 32));
  for (std::size_t n = 1;; ++n) {
    if (n > w.size()) w = weight_sequence(scheme, w.size() * 2);
    std::uint64_t reach = 0;
    for (std::size_t i = n; i > 0 && reach < target; i -= std::min(i, stride))
      reach += w[i - 1];
    if (reach >= target) return n;
  }
}

WeightTable build_weight_table(const WeightScheme& scheme, unsigned k) {
  check_bit_depth(k);
  const PixelValue max_value = (PixelValue{1} << k) - 1;
  const unsigned gap = scheme.gap();

  std::size_t n = std::max<std::size_t>(plane_count_guess(scheme, k), 1);
  std::vector<PixelValue> w = weight_sequence(scheme, n);
  if (covers(w, gap, max_value)) {
    while (n > 1 && covers(std::span(w).first(n - 1), gap, max_value)) --n;
    w.resize(n);
  } else {
    do {
      if (++n > kMaxPlanes)
        throw RangeError("no plane count up to " + std::to_string(kMaxPlanes) +
                         " covers the value range");
      w = weight_sequence(scheme, n);
    } while (!covers(w, gap, max_value));
  }
  return WeightTable(scheme, k, std::move(w));
}

DigitVector decompose(PixelValue v, const WeightTable& table) {
  if (v > table.max_value())
    throw RangeError("value " + std::to_string(v) + " exceeds " +
                     std::to_string(table.max_value()));
  auto digits = greedy_decompose(v, table.weights(), table.scheme().gap());
  // Unreachable for tables from build_weight_table (coverage is verified).
  if (!digits)
    throw RangeError("value " + std::to_string(v) +
                     " has no representation over this table");
  return *std::move(digits);
}

PixelValue compose(const DigitVector& digits, const WeightTable& table) {
  if (digits.size() != table.n())
    throw ContractError("digit count " + std::to_string(digits.size()) +
                        " does not match table size " +
                        std::to_string(table.n()));
  PixelValue sum = 0;
  for (std::size_t i = 0; i < digits.size(); ++i)
    if (digits.test(i)) sum += table.weight(i);
  return sum;
}

bool zeckendorf_valid(const DigitVector& digits, unsigned p) {
  std::optional<std::size_t> last;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (!digits.test(i)) continue;
    if (last && i - *last <= p) return false;
    last = i;
  }
  return true;
}

bool satisfies_scheme(const DigitVector& digits, const WeightScheme& scheme) {
  return scheme.kind() != SchemeKind::Fibonacci ||
         zeckendorf_valid(digits, scheme.p());
}

}  // namespace numstego
