#pragma once

#include <optional>
#include <string>
#include <vector>

#include "numstego/image_io.hpp"
#include "numstego/number_systems.hpp"

namespace numstego {

struct DistortionReport {
  double mse = 0.0;
  // nullopt stands for infinite PSNR (identical images).
  std::optional<double> psnr_db;

  bool infinite() const noexcept { return !psnr_db.has_value(); }
  /// "inf" or the value with `precision` decimals.
  std::string psnr_string(int precision = 4) const;
};

double mse(const GrayImage& a, const GrayImage& b);
DistortionReport psnr(const GrayImage& a, const GrayImage& b);

struct PlaneCount {
  WeightScheme scheme;
  std::size_t n = 0;
};

/// Plane counts of all four schemes at bit-depth k, in the order binary,
/// fibonacci, prime, natural.
std::vector<PlaneCount> plane_report(unsigned k, unsigned fibonacci_p = 1);

}  // namespace numstego
