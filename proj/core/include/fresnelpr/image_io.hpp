#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "fresnelpr/field_grid.hpp"

namespace fresnelpr {

/// 8-bit single-channel raster, row-major.
struct GrayImage {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<std::uint8_t> pixels;
};

/// Binary P5 graymap (maxval 255) or 8-bit grayscale PNG, chosen by file
/// signature. Throws ConfigError for anything else.
GrayImage read_grayscale(const std::filesystem::path& path);

void write_pgm(const std::filesystem::path& path, const GrayImage& image);
void write_png(const std::filesystem::path& path, const GrayImage& image);

/// Square grayscale image as amplitudes. With `intensity_input` the pixel is
/// taken as intensity, amplitude = sqrt(pixel / 255); otherwise pixel / 255.
Image load_amplitude(const std::filesystem::path& path, bool intensity_input = true);

/// Linear min/max rescale to [0, 255]; a constant map becomes all zero.
GrayImage rescale_to_gray(const Image& values);

/// Phase in [-pi, pi) mapped to floor((phi + pi) / (2 pi) * 256), clamped to 255.
std::uint8_t phase_to_gray(double phase);

/// Writes `<base>.raw` and `<base>.png`. The raw file is the magic "PHI1",
/// a little-endian u32 side, then side^2 little-endian float32 values row-major.
void export_phase(const Image& phase, const std::filesystem::path& base);

/// Reads a raw phase file written by export_phase().
Image read_phase_raw(const std::filesystem::path& path);

}  // namespace fresnelpr
