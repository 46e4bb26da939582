#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "sodsteg/raster.hpp"

namespace sodsteg {

// 8-bit grayscale cover or stego image.
using Image = Raster<std::uint8_t>;

// Per-pixel stego minus cover, every entry in {-1, 0, +1}.
using DiffMap = Raster<std::int8_t>;

// Parses a P2 (ASCII) or P5 (binary) graymap with maxval 255. Header
// comments are skipped. Color formats and other bit depths are rejected.
Image decode_pgm(std::string_view bytes);

// Always emits binary P5.
std::string encode_pgm(const Image& img);

Image load_image(const std::filesystem::path& path);
void save_image(const Image& img, const std::filesystem::path& path);

DiffMap diff(const Image& cover, const Image& stego);

// Real-valued view of the pixel function.
Raster<double> to_real(const Image& img);

// Whole-file helpers shared by every on-disk format. Writes go to a sibling
// temporary file that is then renamed over the destination.
std::string read_file(const std::filesystem::path& path);
void write_file_atomic(const std::filesystem::path& path, std::string_view bytes);

}  // namespace sodsteg
