#include "numstego/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <optional>
#include <random>
#include <sstream>

#include "numstego/errors.hpp"
#include "numstego/image_io.hpp"
#include "numstego/metrics.hpp"
#include "numstego/stego_engine.hpp"

namespace numstego::cli {

namespace {

struct Options {
  std::string scheme;
  unsigned p = 1;
  std::size_t plane = 0;
  std::optional<std::string> key;
  std::string in;
  std::string out;
  std::string payload;
  unsigned long long seed = kDefaultSeed;
};

void add_scheme_flags(CLI::App* cmd, Options& o, bool with_plane) {
  cmd->add_option("--scheme", o.scheme,
                  "Decomposition: binary, fibonacci, prime or natural")
      ->required()
      ->check(CLI::IsMember({"binary", "fibonacci", "prime", "natural"}));
  cmd->add_option("--p", o.p, "Fibonacci order")->check(CLI::PositiveNumber);
  if (with_plane)
    cmd->add_option("--plane", o.plane, "Virtual bit plane, 0 = least significant");
  cmd->add_option("--key", o.key, "Stego-key selecting the pixel order");
}

StegoParams params_from(const Options& o) {
  StegoParams params{WeightScheme(*parse_scheme(o.scheme), o.p),
                     PlaneIndex(o.plane), std::nullopt};
  if (o.key) params.key = StegoParams::key_from_string(*o.key);
  return params;
}

// Anything wrong with an input file is an I/O or format failure, including
// a PGM whose pixel data is cut short.
GrayImage load_image(const std::string& path) {
  try {
    return read_pgm_file(path);
  } catch (const IoError&) {
    throw;
  } catch (const StegoError& e) {
    throw FormatError(path + ": " + e.what());
  }
}

void print_report(std::ostream& out, const StegoParams& params,
                  const BitplaneMap& map, const EmbedReport& r) {
  out << "scheme=" << to_string(params.scheme.kind()) << '\n'
      << "p=" << params.scheme.p() << '\n'
      << "plane=" << params.plane.value << '\n'
      << "weight=" << map.table().weight(params.plane.value) << '\n'
      << "capacity_bits=" << r.capacity_bits << '\n'
      << "bits_embedded=" << r.bits_embedded << '\n'
      << "pixels_visited=" << r.pixels_visited << '\n'
      << "pixels_skipped=" << r.pixels_skipped << '\n'
      << "mse=" << std::fixed << std::setprecision(6) << r.distortion.mse
      << '\n'
      << "psnr_db=" << r.distortion.psnr_string() << '\n';
}

int cmd_embed(const Options& o, std::ostream& out) {
  const auto params = params_from(o);
  const auto map = image_map(params);
  const auto cover = load_image(o.in);
  const auto payload = read_bytes(o.payload);
  const auto result = embed(cover, payload, params);
  write_pgm_file(o.out, result.stego);
  print_report(out, params, map, result.report);
  return kOk;
}

int cmd_extract(const Options& o, std::ostream& out) {
  const auto params = params_from(o);
  image_map(params);
  const auto stego = load_image(o.in);
  const auto payload = extract(stego, params);
  write_bytes(o.out, payload);
  out << "bytes_extracted=" << payload.size() << '\n';
  return kOk;
}

int cmd_capacity(const Options& o, std::ostream& out) {
  const auto params = params_from(o);
  image_map(params);
  const auto image = load_image(o.in);
  out << "capacity_bits=" << capacity(image, params) << '\n';
  return kOk;
}

int cmd_planes(const Options& o, std::ostream& out) {
  out << std::left << std::setw(11) << "scheme" << "n\n";
  for (const auto& row : plane_report(kImageBitDepth, o.p))
    out << std::left << std::setw(11) << to_string(row.scheme.kind()) << row.n
        << '\n';
  return kOk;
}

int cmd_analyze(const Options& o, std::ostream& out) {
  const auto cover = load_image(o.in);
  Bytes payload;
  if (!o.payload.empty()) {
    payload = read_bytes(o.payload);
  } else {
    std::mt19937_64 rng(o.seed);
    payload.resize(kAnalyzePayloadBytes);
    for (auto& b : payload) b = static_cast<std::uint8_t>(rng() & 0xFF);
  }
  const std::size_t needed = frame(payload).size();

  out << "# cover " << cover.width() << "x" << cover.height()
      << ", payload " << payload.size() << " bytes (" << needed
      << " framed bits)\n";
  out << std::left << std::setw(11) << "scheme" << std::setw(4) << "p"
      << std::setw(7) << "plane" << std::setw(8) << "weight" << std::setw(15)
      << "capacity_bits" << std::setw(10) << "status" << std::setw(12)
      << "mse" << "psnr_db\n";
  for (auto kind : {SchemeKind::Binary, SchemeKind::Fibonacci,
                    SchemeKind::Prime, SchemeKind::Natural}) {
    StegoParams params{WeightScheme(kind, o.p), PlaneIndex(0), std::nullopt};
    if (o.key) params.key = StegoParams::key_from_string(*o.key);
    const auto table = build_weight_table(params.scheme, kImageBitDepth);
    for (std::size_t plane = 0; plane < table.n(); ++plane) {
      params.plane = PlaneIndex(plane);
      const std::size_t cap = capacity(cover, params);
      out << std::left << std::setw(11) << to_string(kind) << std::setw(4)
          << params.scheme.p() << std::setw(7) << plane << std::setw(8)
          << table.weight(plane) << std::setw(15) << cap;
      if (cap < needed) {
        out << std::setw(10) << "overflow" << std::setw(12) << "-" << "-\n";
        continue;
      }
      const auto result = embed(cover, payload, params);
      std::ostringstream mse_text;
      mse_text << std::fixed << std::setprecision(6)
               << result.report.distortion.mse;
      out << std::setw(10) << "ok" << std::setw(12) << mse_text.str()
          << result.report.distortion.psnr_string() << '\n';
    }
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Number-decomposition LSB steganography for 8-bit PGM images",
               "numstego"};
  app.require_subcommand(1);
  Options o;

  auto* embed_cmd = app.add_subcommand("embed", "Hide a payload file in a cover image");
  add_scheme_flags(embed_cmd, o, true);
  embed_cmd->add_option("--in", o.in, "Cover PGM")->required();
  embed_cmd->add_option("--payload", o.payload, "Payload file")->required();
  embed_cmd->add_option("--out", o.out, "Stego PGM to write")->required();

  auto* extract_cmd = app.add_subcommand("extract", "Recover a payload from a stego image");
  add_scheme_flags(extract_cmd, o, true);
  extract_cmd->add_option("--in", o.in, "Stego PGM")->required();
  extract_cmd->add_option("--out", o.out, "Payload file to write")->required();

  auto* capacity_cmd = app.add_subcommand("capacity", "Count embeddable pixels");
  add_scheme_flags(capacity_cmd, o, true);
  capacity_cmd->add_option("--in", o.in, "Image PGM")->required();

  auto* planes_cmd = app.add_subcommand("planes", "Plane count of each scheme for 8-bit pixels");
  planes_cmd->add_option("--p", o.p, "Fibonacci order")->check(CLI::PositiveNumber);

  auto* analyze_cmd = app.add_subcommand("analyze", "Capacity and PSNR sweep over every scheme and plane");
  analyze_cmd->add_option("--in", o.in, "Cover PGM")->required();
  analyze_cmd->add_option("--payload", o.payload, "Payload file (default: pseudorandom)");
  analyze_cmd->add_option("--seed", o.seed, "Seed of the default payload");
  analyze_cmd->add_option("--p", o.p, "Fibonacci order")->check(CLI::PositiveNumber);
  analyze_cmd->add_option("--key", o.key, "Stego-key selecting the pixel order");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*embed_cmd) return cmd_embed(o, out);
    if (*extract_cmd) return cmd_extract(o, out);
    if (*capacity_cmd) return cmd_capacity(o, out);
    if (*planes_cmd) return cmd_planes(o, out);
    if (*analyze_cmd) return cmd_analyze(o, out);
  } catch (const RangeError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return kCapacity;
  } catch (const TruncationError& e) {
    err << "error: " << e.what() << '\n';
    return kCapacity;
  } catch (const StegoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoOrFormat;
  }
  return kUsage;
}

}  // namespace numstego::cli
