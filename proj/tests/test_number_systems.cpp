#include <doctest.h>

#include <set>

#include "numstego/errors.hpp"
#include "numstego/number_systems.hpp"
#include "oracles.hpp"
#include "test_helpers.hpp"

using namespace numstego;
using testing::from_indices;
using testing::to_mask;

namespace {

std::vector<PixelValue> weights_of(const WeightTable& t) {
  return {t.weights().begin(), t.weights().end()};
}

std::size_t index_of(const WeightTable& t, PixelValue w) {
  auto ws = t.weights();
  return static_cast<std::size_t>(std::find(ws.begin(), ws.end(), w) - ws.begin());
}

}  // namespace

TEST_CASE("weight tables at k = 8") {
  auto binary = build_weight_table(WeightScheme::binary(), 8);
  CHECK(binary.n() == 8);
  CHECK(weights_of(binary) ==
        std::vector<PixelValue>{1, 2, 4, 8, 16, 32, 64, 128});

  auto fib = build_weight_table(WeightScheme::fibonacci(), 8);
  CHECK(fib.n() == 12);
  CHECK(weights_of(fib) == std::vector<PixelValue>{1, 2, 3, 5, 8, 13, 21, 34,
                                                   55, 89, 144, 233});

  auto prime = build_weight_table(WeightScheme::prime(), 8);
  CHECK(prime.n() == 15);
  CHECK(weights_of(prime) == std::vector<PixelValue>{1, 2, 3, 5, 7, 11, 13, 17,
                                                     19, 23, 29, 31, 37, 41, 43});

  auto natural = build_weight_table(WeightScheme::natural(), 8);
  CHECK(natural.n() == 23);
  CHECK(weights_of(natural) == oracle::naturals(23));
}

TEST_CASE("closed-form plane bounds agree with the coverage search at k = 8") {
  for (const auto& scheme : testing::kAllSchemes) {
    CAPTURE(to_string(scheme.kind()));
    CHECK(plane_count_guess(scheme, 8) == build_weight_table(scheme, 8).n());
  }
}

TEST_CASE("plane counts match the exhaustive oracle for small k") {
  for (unsigned k = 1; k <= 5; ++k) {
    CAPTURE(k);
    CHECK(build_weight_table(WeightScheme::binary(), k).n() ==
          oracle::smallest_covering_n(oracle::powers_of_two, 0, k));
    CHECK(build_weight_table(WeightScheme::fibonacci(), k).n() ==
          oracle::smallest_covering_n(oracle::fibonacci_distinct, 1, k));
    CHECK(build_weight_table(WeightScheme::prime(), k).n() ==
          oracle::smallest_covering_n(oracle::primes_with_one, 0, k));
    CHECK(build_weight_table(WeightScheme::natural(), k).n() ==
          oracle::smallest_covering_n(oracle::naturals, 0, k));
  }
}

TEST_CASE("generalized Fibonacci orders") {
  // F_2: 1, 1, 1, 2, 3, 4, 6, 9, 13, ... with the repeated ones collapsed.
  CHECK(weight_sequence(WeightScheme::fibonacci(2), 10) ==
        std::vector<PixelValue>{1, 2, 3, 4, 6, 9, 13, 19, 28, 41});
  CHECK(weight_sequence(WeightScheme::fibonacci(3), 8) ==
        std::vector<PixelValue>{1, 2, 3, 4, 5, 7, 10, 14});

  // Every table must still cover its range and round-trip.
  for (unsigned p = 2; p <= 4; ++p) {
    auto t = build_weight_table(WeightScheme::fibonacci(p), 8);
    for (PixelValue v = 0; v <= 255; ++v) {
      auto d = decompose(v, t);
      CHECK(zeckendorf_valid(d, p));
      CHECK(compose(d, t) == v);
    }
  }
}

TEST_CASE("weights strictly ascending for all schemes and depths") {
  for (unsigned k = 1; k <= 12; ++k)
    for (const auto& scheme : testing::kAllSchemes) {
      const auto table = build_weight_table(scheme, k);
      auto w = table.weights();
      CHECK(std::adjacent_find(w.begin(), w.end(), std::greater_equal<>()) ==
            w.end());
    }
}

TEST_CASE("k = 16 builds") {
  CHECK(build_weight_table(WeightScheme::binary(), 16).n() == 16);
  auto natural = build_weight_table(WeightScheme::natural(), 16);
  // n(n+1)/2 >= 65535 first holds at n = 362.
  CHECK(natural.n() == 362);
}

TEST_CASE("bit depth out of range") {
  CHECK_THROWS_AS(build_weight_table(WeightScheme::binary(), 0), RangeError);
  CHECK_THROWS_AS(build_weight_table(WeightScheme::prime(), 17), RangeError);
  CHECK_THROWS_AS(WeightScheme(SchemeKind::Fibonacci, 0), RangeError);
}

TEST_CASE("non-Fibonacci schemes normalize p") {
  CHECK(WeightScheme(SchemeKind::Prime, 5).p() == 1);
  CHECK(WeightScheme(SchemeKind::Fibonacci, 3).p() == 3);
  CHECK(WeightScheme(SchemeKind::Natural, 7) == WeightScheme::natural());
}

TEST_CASE("decompose examples") {
  auto natural = build_weight_table(WeightScheme::natural(), 8);
  auto fib = build_weight_table(WeightScheme::fibonacci(), 8);
  auto prime = build_weight_table(WeightScheme::prime(), 8);

  for (const auto& scheme : testing::kAllSchemes) {
    auto t = build_weight_table(scheme, 8);
    CHECK(decompose(0, t) == DigitVector(t.n()));
  }

  // 7 + 8 + ... + 23 = 255
  DigitVector expected(natural.n());
  for (std::size_t i = 6; i < 23; ++i) expected.set(i, true);
  CHECK(decompose(255, natural) == expected);

  CHECK(decompose(100, fib) ==
        from_indices(12, {index_of(fib, 89), index_of(fib, 8), index_of(fib, 3)}));

  DigitVector p255(prime.n());
  for (PixelValue w : {43, 41, 37, 31, 29, 23, 19, 17, 13, 2})
    p255.set(index_of(prime, w), true);
  CHECK(decompose(255, prime) == p255);

  CHECK_THROWS_AS(decompose(256, prime), RangeError);
}

TEST_CASE("compose examples") {
  auto natural = build_weight_table(WeightScheme::natural(), 8);
  auto fib = build_weight_table(WeightScheme::fibonacci(), 8);
  CHECK(compose(DigitVector(23), natural) == 0);
  CHECK(compose(from_indices(23, {0}), natural) == 1);
  CHECK(compose(from_indices(12, {9, 4, 2}), fib) == 100);
  CHECK_THROWS_AS(compose(DigitVector(5), natural), ContractError);
}

TEST_CASE("zeckendorf_valid") {
  CHECK(zeckendorf_valid(DigitVector(12), 1));
  CHECK(zeckendorf_valid(from_indices(12, {9, 4, 2}), 1));
  // weights 2 and 3 sit at adjacent indices 1 and 2
  CHECK_FALSE(zeckendorf_valid(from_indices(12, {1, 2}), 1));
  CHECK(zeckendorf_valid(from_indices(12, {1, 3}), 1));
  CHECK_FALSE(zeckendorf_valid(from_indices(12, {1, 3}), 2));
  CHECK(satisfies_scheme(from_indices(23, {1, 2}), WeightScheme::natural()));
}

TEST_CASE("decompose equals the brute-force lexicographic maximum") {
  // k = 8 for the cheaper tables; Natural's 2^23 sweep lives in the
  // acceptance suite.
  const std::pair<WeightScheme, std::vector<std::uint32_t>> cases[] = {
      {WeightScheme::binary(), oracle::powers_of_two(8)},
      {WeightScheme::fibonacci(), oracle::fibonacci_distinct(12)},
      {WeightScheme::prime(), oracle::primes_with_one(15)},
  };
  for (const auto& [scheme, weights] : cases) {
    auto t = build_weight_table(scheme, 8);
    REQUIRE(weights_of(t) == weights);
    auto best = oracle::lexmax_subsets(weights, scheme.gap(), 255);
    for (PixelValue v = 0; v <= 255; ++v) {
      CAPTURE(v);
      REQUIRE(best[v].has_value());
      CHECK(to_mask(decompose(v, t)) == *best[v]);
    }
  }
  // Natural at k = 5: n = 8.
  auto t = build_weight_table(WeightScheme::natural(), 5);
  auto best = oracle::lexmax_subsets(oracle::naturals(t.n()), 0, 31);
  for (PixelValue v = 0; v <= 31; ++v) CHECK(to_mask(decompose(v, t)) == *best[v]);
}

TEST_CASE("round trip is exhaustive at k = 8 and k = 10") {
  for (unsigned k : {8u, 10u})
    for (const auto& scheme : testing::kAllSchemes) {
      auto t = build_weight_table(scheme, k);
      for (PixelValue v = 0; v <= t.max_value(); ++v) {
        auto d = decompose(v, t);
        CHECK(d.size() == t.n());
        CHECK(satisfies_scheme(d, scheme));
        REQUIRE(compose(d, t) == v);
      }
    }
}

TEST_CASE("DigitVector ordering reads the top plane first") {
  auto a = from_indices(4, {3});
  auto b = from_indices(4, {0, 1, 2});
  CHECK(b < a);
  CHECK(a.to_string() == "1000");
  CHECK(b.to_string() == "0111");
}

TEST_CASE("scheme names") {
  for (const auto& scheme : testing::kAllSchemes)
    CHECK(parse_scheme(to_string(scheme.kind())) == scheme.kind());
  CHECK_FALSE(parse_scheme("lucas").has_value());
}
