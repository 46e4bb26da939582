#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "sodsteg/image.hpp"
#include "sodsteg/kernel.hpp"
#include "sodsteg/raster.hpp"

namespace sodsteg {

using ResponseMap = Raster<double>;

// How samples outside the image are synthesized. mirror reflects about the
// edge pixel without repeating it (-1 -> 1); replicate repeats the edge.
enum class Border { mirror, replicate };

const char* to_string(Border border) noexcept;
Border parse_border(std::string_view name);

// Maps an out-of-range coordinate back into [0, extent).
int border_index(int i, int extent, Border border) noexcept;

// Correlation-style application: the kernel is laid over the window without
// flipping, response(x, y) = sum k(r, c) * P(x + c - n, y + r - n).
ResponseMap convolve(const Raster<double>& src, const Kernel& k, Border border = Border::mirror);
ResponseMap convolve(const Image& img, const Kernel& k, Border border = Border::mirror);

// ".f32" raster: uint32 width, uint32 height, then width*height float32
// samples, all little-endian.
std::string encode_f32(const Raster<double>& map);
Raster<double> decode_f32(std::string_view bytes);
void save_f32(const Raster<double>& map, const std::filesystem::path& path);
Raster<double> load_f32(const std::filesystem::path& path);

}  // namespace sodsteg
