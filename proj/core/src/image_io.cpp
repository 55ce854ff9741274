#include "fresnelpr/image_io.hpp"

#include <png.h>

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <memory>
#include <numbers>
#include <string>

#include "fresnelpr/errors.hpp"

namespace fresnelpr {
namespace {

using FilePtr = std::unique_ptr<std::FILE, decltype(&std::fclose)>;

FilePtr open_file(const std::filesystem::path& path, const char* mode) {
  FilePtr f(std::fopen(path.c_str(), mode), &std::fclose);
  if (!f) throw ConfigError("cannot open " + path.string());
  return f;
}

// Next whitespace-delimited token of a PNM header, skipping '#' comments.
std::string pnm_token(std::istream& in) {
  std::string tok;
  char ch;
  while (in.get(ch)) {
    if (ch == '#') {
      std::string skip;
      std::getline(in, skip);
      if (!tok.empty()) break;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(ch))) {
      if (!tok.empty()) break;
      continue;
    }
    tok.push_back(ch);
  }
  return tok;
}

GrayImage read_pgm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open " + path.string());
  if (pnm_token(in) != "P5") throw ConfigError(path.string() + ": not a binary graymap (P5)");
  GrayImage img;
  try {
    img.width = std::stoul(pnm_token(in));
    img.height = std::stoul(pnm_token(in));
    if (std::stoul(pnm_token(in)) != 255) throw ConfigError(path.string() + ": only maxval 255 is supported");
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const ConfigError*>(&e)) throw;
    throw ConfigError(path.string() + ": malformed graymap header");
  }
  img.pixels.resize(img.width * img.height);
  in.read(reinterpret_cast<char*>(img.pixels.data()), static_cast<std::streamsize>(img.pixels.size()));
  if (in.gcount() != static_cast<std::streamsize>(img.pixels.size())) {
    throw ConfigError(path.string() + ": truncated pixel data");
  }
  return img;
}

GrayImage read_png(const std::filesystem::path& path) {
  FilePtr f = open_file(path, "rb");
  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (png == nullptr) throw std::runtime_error("png_create_read_struct failed");
  png_infop info = png_create_info_struct(png);
  GrayImage img;
  std::vector<png_bytep> rows;
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw ConfigError(path.string() + ": unreadable PNG");
  }
  png_init_io(png, f.get());
  png_read_info(png, info);
  const auto color = png_get_color_type(png, info);
  const auto depth = png_get_bit_depth(png, info);
  if (color != PNG_COLOR_TYPE_GRAY || depth != 8) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw ConfigError(path.string() + ": PNG must be 8-bit grayscale");
  }
  img.width = png_get_image_width(png, info);
  img.height = png_get_image_height(png, info);
  img.pixels.resize(img.width * img.height);
  rows.resize(img.height);
  for (std::size_t r = 0; r < img.height; ++r) rows[r] = img.pixels.data() + r * img.width;
  png_read_image(png, rows.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);
  return img;
}

void check_image(const GrayImage& image) {
  if (image.pixels.size() != image.width * image.height || image.pixels.empty()) {
    throw ConfigError("gray image: pixel buffer does not match dimensions");
  }
}

}  // namespace

GrayImage read_grayscale(const std::filesystem::path& path) {
  std::array<unsigned char, 8> sig{};
  {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open " + path.string());
    in.read(reinterpret_cast<char*>(sig.data()), sig.size());
    if (in.gcount() < 2) throw ConfigError(path.string() + ": file too short");
  }
  if (sig[0] == 'P' && sig[1] == '5') return read_pgm(path);
  if (png_sig_cmp(sig.data(), 0, sig.size()) == 0) return read_png(path);
  throw ConfigError(path.string() + ": unsupported format (expected P5 graymap or grayscale PNG)");
}

void write_pgm(const std::filesystem::path& path, const GrayImage& image) {
  check_image(image);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path.string());
  out << "P5\n" << image.width << ' ' << image.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(image.pixels.data()), static_cast<std::streamsize>(image.pixels.size()));
  if (!out) throw ConfigError("write failed: " + path.string());
}

void write_png(const std::filesystem::path& path, const GrayImage& image) {
  check_image(image);
  FilePtr f = open_file(path, "wb");
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (png == nullptr) throw std::runtime_error("png_create_write_struct failed");
  png_infop info = png_create_info_struct(png);
  std::vector<png_bytep> rows(image.height);
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw ConfigError("write failed: " + path.string());
  }
  png_init_io(png, f.get());
  png_set_IHDR(png, info, static_cast<png_uint_32>(image.width), static_cast<png_uint_32>(image.height), 8,
               PNG_COLOR_TYPE_GRAY, PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  for (std::size_t r = 0; r < image.height; ++r) {
    rows[r] = const_cast<png_bytep>(image.pixels.data() + r * image.width);
  }
  png_write_image(png, rows.data());
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
}

Image load_amplitude(const std::filesystem::path& path, bool intensity_input) {
  const GrayImage g = read_grayscale(path);
  if (g.width != g.height) {
    throw ConfigError(path.string() + ": image must be square, got " + std::to_string(g.width) + "x" +
                      std::to_string(g.height));
  }
  Image out(g.width);
  auto v = out.values();
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double level = static_cast<double>(g.pixels[i]) / 255.0;
    v[i] = intensity_input ? std::sqrt(level) : level;
  }
  return out;
}

GrayImage rescale_to_gray(const Image& values) {
  GrayImage g{values.side(), values.side(), std::vector<std::uint8_t>(values.size(), 0)};
  const auto v = values.values();
  if (v.empty()) return g;
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  const double span = *hi - *lo;
  if (!(span > 0.0)) return g;
  for (std::size_t i = 0; i < v.size(); ++i) {
    g.pixels[i] = static_cast<std::uint8_t>(std::lround(255.0 * (v[i] - *lo) / span));
  }
  return g;
}

std::uint8_t phase_to_gray(double phase) {
  const double t = (phase + std::numbers::pi) / (2.0 * std::numbers::pi) * 256.0;
  return static_cast<std::uint8_t>(std::clamp(std::floor(t), 0.0, 255.0));
}

void export_phase(const Image& phase, const std::filesystem::path& base) {
  static_assert(std::endian::native == std::endian::little, "raw phase writer assumes a little-endian host");
  const std::size_t side = phase.side();
  const auto v = phase.values();

  std::filesystem::path raw = base;
  raw += ".raw";
  std::ofstream out(raw, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + raw.string());
  out.write("PHI1", 4);
  const auto side32 = static_cast<std::uint32_t>(side);
  out.write(reinterpret_cast<const char*>(&side32), sizeof side32);
  // float(pi - eps) may round up to a value above pi; keep the half-open range.
  const float top = std::nextafter(static_cast<float>(std::numbers::pi), 0.0f);
  std::vector<float> buf(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const float f = static_cast<float>(v[i]);
    buf[i] = static_cast<double>(f) >= std::numbers::pi ? top : f;
  }
  out.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size() * sizeof(float)));
  if (!out) throw ConfigError("write failed: " + raw.string());

  GrayImage vis{side, side, std::vector<std::uint8_t>(v.size())};
  for (std::size_t i = 0; i < v.size(); ++i) vis.pixels[i] = phase_to_gray(v[i]);
  std::filesystem::path png = base;
  png += ".png";
  write_png(png, vis);
}

Image read_phase_raw(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open " + path.string());
  char magic[4];
  std::uint32_t side = 0;
  in.read(magic, 4);
  in.read(reinterpret_cast<char*>(&side), sizeof side);
  if (!in || std::memcmp(magic, "PHI1", 4) != 0) throw ConfigError(path.string() + ": not a PHI1 phase file");
  std::vector<float> buf(static_cast<std::size_t>(side) * side);
  in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(buf.size() * sizeof(float)));
  if (in.gcount() != static_cast<std::streamsize>(buf.size() * sizeof(float))) {
    throw ConfigError(path.string() + ": truncated phase data");
  }
  return Image(side, std::vector<double>(buf.begin(), buf.end()));
}

}  // namespace fresnelpr
