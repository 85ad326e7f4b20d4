#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "numstego/cli.hpp"
#include "numstego/errors.hpp"
#include "numstego/image_io.hpp"
#include "numstego/metrics.hpp"
#include "numstego/number_systems.hpp"
#include "numstego/plane_codec.hpp"
#include "numstego/stego_engine.hpp"

namespace py = pybind11;
using namespace numstego;

namespace {

Bytes to_bytes(const py::bytes& b) {
  std::string s = b;
  return Bytes(s.begin(), s.end());
}

py::bytes from_bytes(const Bytes& b) {
  return py::bytes(reinterpret_cast<const char*>(b.data()), b.size());
}

WeightScheme make_scheme(const std::string& name, unsigned p) {
  auto kind = parse_scheme(name);
  if (!kind) throw RangeError("unknown scheme '" + name + "'");
  return WeightScheme(*kind, p);
}

StegoParams make_params(const std::string& scheme, std::size_t plane,
                        unsigned p, const std::optional<py::bytes>& key) {
  StegoParams params{make_scheme(scheme, p), PlaneIndex(plane), std::nullopt};
  if (key) params.key = to_bytes(*key);
  return params;
}

std::optional<double> psnr_value(const DistortionReport& r) { return r.psnr_db; }

}  // namespace

PYBIND11_MODULE(_numstego, m) {
  m.doc() = "Number-decomposition LSB steganography";

  auto base = py::register_exception<StegoError>(m, "StegoError");
  py::register_exception<RangeError>(m, "RangeError", base.ptr());
  py::register_exception<FormatError>(m, "FormatError", base.ptr());
  py::register_exception<TruncationError>(m, "TruncationError", base.ptr());
  py::register_exception<CapacityError>(m, "CapacityError", base.ptr());
  py::register_exception<ShapeError>(m, "ShapeError", base.ptr());
  py::register_exception<ContractError>(m, "ContractError", base.ptr());

  py::class_<WeightTable>(m, "WeightTable")
      .def_property_readonly("scheme",
                             [](const WeightTable& t) {
                               return std::string(to_string(t.scheme().kind()));
                             })
      .def_property_readonly("p", [](const WeightTable& t) { return t.scheme().p(); })
      .def_property_readonly("k", &WeightTable::k)
      .def_property_readonly("n", &WeightTable::n)
      .def_property_readonly("weights", [](const WeightTable& t) {
        return std::vector<PixelValue>(t.weights().begin(), t.weights().end());
      });

  m.def("build_weight_table",
        [](const std::string& scheme, unsigned k, unsigned p) {
          return build_weight_table(make_scheme(scheme, p), k);
        },
        py::arg("scheme"), py::arg("k") = 8, py::arg("p") = 1);

  // Digit vectors cross the boundary as lists of 0/1, index 0 = plane 0.
  m.def("decompose",
        [](PixelValue v, const WeightTable& t) {
          const auto digits = decompose(v, t);
          return std::vector<int>(digits.digits().begin(), digits.digits().end());
        },
        py::arg("v"), py::arg("table"));
  m.def("compose",
        [](const std::vector<int>& digits, const WeightTable& t) {
          return compose(DigitVector(std::vector<std::uint8_t>(digits.begin(), digits.end())), t);
        },
        py::arg("digits"), py::arg("table"));
  m.def("zeckendorf_valid",
        [](const std::vector<int>& digits, unsigned p) {
          return zeckendorf_valid(
              DigitVector(std::vector<std::uint8_t>(digits.begin(), digits.end())), p);
        },
        py::arg("digits"), py::arg("p") = 1);

  m.def("read_pgm", [](const py::bytes& data) {
    auto img = read_pgm(to_bytes(data));
    return py::make_tuple(img.width(), img.height(),
                          py::bytes(reinterpret_cast<const char*>(img.pixels().data()), img.size()));
  });
  m.def("write_pgm", [](std::size_t w, std::size_t h, const py::bytes& pixels) {
    return from_bytes(write_pgm(GrayImage(w, h, to_bytes(pixels))));
  });

  m.def("psnr", [](std::size_t w, std::size_t h, const py::bytes& a, const py::bytes& b) {
    return psnr_value(psnr(GrayImage(w, h, to_bytes(a)), GrayImage(w, h, to_bytes(b))));
  }, "PSNR in dB, or None for identical images");

  m.def("plane_report", [](unsigned k, unsigned p) {
    std::vector<std::pair<std::string, std::size_t>> rows;
    for (const auto& r : plane_report(k, p))
      rows.emplace_back(std::string(to_string(r.scheme.kind())), r.n);
    return rows;
  }, py::arg("k") = 8, py::arg("p") = 1);

  m.def("pixel_order",
        [](std::size_t w, std::size_t h, const std::optional<py::bytes>& key) {
          std::optional<Bytes> k;
          if (key) k = to_bytes(*key);
          return pixel_order(w, h, k);
        },
        py::arg("width"), py::arg("height"), py::arg("key") = py::none());

  m.def("capacity",
        [](std::size_t w, std::size_t h, const py::bytes& pixels,
           const std::string& scheme, std::size_t plane, unsigned p,
           const std::optional<py::bytes>& key) {
          return capacity(GrayImage(w, h, to_bytes(pixels)),
                          make_params(scheme, plane, p, key));
        },
        py::arg("width"), py::arg("height"), py::arg("pixels"),
        py::arg("scheme"), py::arg("plane") = 0, py::arg("p") = 1,
        py::arg("key") = py::none());

  m.def("embed",
        [](std::size_t w, std::size_t h, const py::bytes& pixels,
           const py::bytes& payload, const std::string& scheme,
           std::size_t plane, unsigned p, const std::optional<py::bytes>& key) {
          auto result = embed(GrayImage(w, h, to_bytes(pixels)), to_bytes(payload),
                              make_params(scheme, plane, p, key));
          py::dict report;
          report["bits_embedded"] = result.report.bits_embedded;
          report["pixels_visited"] = result.report.pixels_visited;
          report["pixels_skipped"] = result.report.pixels_skipped;
          report["capacity_bits"] = result.report.capacity_bits;
          report["mse"] = result.report.distortion.mse;
          report["psnr_db"] = psnr_value(result.report.distortion);
          Bytes stego(result.stego.pixels().begin(), result.stego.pixels().end());
          return py::make_tuple(from_bytes(stego), report);
        },
        py::arg("width"), py::arg("height"), py::arg("pixels"),
        py::arg("payload"), py::arg("scheme"), py::arg("plane") = 0,
        py::arg("p") = 1, py::arg("key") = py::none());

  m.def("extract",
        [](std::size_t w, std::size_t h, const py::bytes& pixels,
           const std::string& scheme, std::size_t plane, unsigned p,
           const std::optional<py::bytes>& key) {
          return from_bytes(extract(GrayImage(w, h, to_bytes(pixels)),
                                    make_params(scheme, plane, p, key)));
        },
        py::arg("width"), py::arg("height"), py::arg("pixels"),
        py::arg("scheme"), py::arg("plane") = 0, py::arg("p") = 1,
        py::arg("key") = py::none());

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, "Run a CLI command; returns (exit_code, stdout, stderr).");
}
