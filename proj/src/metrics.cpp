#include "numstego/metrics.hpp"

#include <cmath>
#include <cstdio>

#include "numstego/errors.hpp"

namespace numstego {

std::string DistortionReport::psnr_string(int precision) const {
  if (infinite()) return "inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, *psnr_db);
  return buf;
}

double mse(const GrayImage& a, const GrayImage& b) {
  if (a.width() != b.width() || a.height() != b.height())
    throw ShapeError("image dimensions differ: " + std::to_string(a.width()) +
                     "x" + std::to_string(a.height()) + " vs " +
                     std::to_string(b.width()) + "x" +
                     std::to_string(b.height()));
  if (a.size() == 0) return 0.0;
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::int64_t d = std::int64_t{a[i]} - std::int64_t{b[i]};
    sum += static_cast<std::uint64_t>(d * d);
  }
  return static_cast<double>(sum) / static_cast<double>(a.size());
}

DistortionReport psnr(const GrayImage& a, const GrayImage& b) {
  DistortionReport report;
  report.mse = mse(a, b);
  if (report.mse > 0.0)
    report.psnr_db = 10.0 * std::log10(255.0 * 255.0 / report.mse);
  return report;
}

std::vector<PlaneCount> plane_report(unsigned k, unsigned fibonacci_p) {
  std::vector<PlaneCount> rows;
  for (const auto& scheme :
       {WeightScheme::binary(), WeightScheme::fibonacci(fibonacci_p),
        WeightScheme::prime(), WeightScheme::natural()})
    rows.push_back({scheme, build_weight_table(scheme, k).n()});
  return rows;
}

}  // namespace numstego
