#include "sodsteg/convolution.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <vector>

#include "sodsteg/error.hpp"

namespace sodsteg {

const char* to_string(Border border) noexcept { return border == Border::mirror ? "mirror" : "replicate"; }

Border parse_border(std::string_view name) {
    if (name == "mirror") return Border::mirror;
    if (name == "replicate") return Border::replicate;
    throw Error(Errc::invalid_argument, "unknown border policy '" + std::string(name) + "'");
}

int border_index(int i, int extent, Border border) noexcept {
    if (i >= 0 && i < extent) return i;
    if (border == Border::replicate || extent == 1) return std::clamp(i, 0, extent - 1);
    // Reflection is periodic with period 2 * (extent - 1).
    const int period = 2 * (extent - 1);
    int m = i % period;
    if (m < 0) m += period;
    return m < extent ? m : period - m;
}

namespace {

struct Tap {
    int dx;
    int dy;
    double weight;
};

}  // namespace

ResponseMap convolve(const Raster<double>& src, const Kernel& k, Border border) {
    const int w = src.width;
    const int h = src.height;
    if (w <= 0 || h <= 0) throw Error(Errc::bad_dimensions, "cannot convolve an empty raster");
    if (k.size() > 2 * std::min(w, h) + 1) {
        throw Error(Errc::kernel_too_large, "kernel of size " + std::to_string(k.size()) + " exceeds " +
                                                std::to_string(w) + "x" + std::to_string(h) + " image");
    }
    const int n = k.n;

    // Responses are accumulated as sum w * (P(neighbor) - P(center)) plus
    // (sum of weights) * P(center); derivative kernels sum to exactly zero,
    // so flat windows yield exactly 0.
    std::vector<Tap> taps;
    for (int r = 0; r < k.size(); ++r)
        for (int c = 0; c < k.size(); ++c) {
            if (k.coeffs(r, c) == 0 || (r == n && c == n)) continue;
            taps.push_back({c - n, r - n, k.coeffs(r, c).get_d()});
        }
    const double weight_sum = k.coeffs.sum().get_d();

    // Column lookup for x + dx in [-n, w + n).
    std::vector<int> col(static_cast<std::size_t>(w + 2 * n));
    for (int x = -n; x < w + n; ++x) col[static_cast<std::size_t>(x + n)] = border_index(x, w, border);
    const int interior_begin = std::min(n, w);
    const int interior_end = std::max(interior_begin, w - n);

    ResponseMap out(w, h);
    for (int y = 0; y < h; ++y) {
        double* acc = &out.data[out.index(0, y)];
        const double* center = &src.data[src.index(0, y)];
        for (const Tap& t : taps) {
            const double* row = &src.data[src.index(0, border_index(y + t.dy, h, border))];
            const double wt = t.weight;
            for (int x = 0; x < interior_begin; ++x) acc[x] += wt * (row[col[x + t.dx + n]] - center[x]);
            for (int x = interior_begin; x < interior_end; ++x) acc[x] += wt * (row[x + t.dx] - center[x]);
            for (int x = interior_end; x < w; ++x) acc[x] += wt * (row[col[x + t.dx + n]] - center[x]);
        }
        if (weight_sum != 0.0) {
            for (int x = 0; x < w; ++x) acc[x] += weight_sum * center[x];
        }
    }
    return out;
}

ResponseMap convolve(const Image& img, const Kernel& k, Border border) { return convolve(to_real(img), k, border); }

namespace {

void put_u32(std::string& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

std::uint32_t get_u32(std::string_view in, std::size_t at) {
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(static_cast<unsigned char>(in[at + i])) << (8 * i);
    return v;
}

}  // namespace

std::string encode_f32(const Raster<double>& map) {
    std::string out;
    out.reserve(8 + 4 * map.size());
    put_u32(out, static_cast<std::uint32_t>(map.width));
    put_u32(out, static_cast<std::uint32_t>(map.height));
    for (double v : map.data) put_u32(out, std::bit_cast<std::uint32_t>(static_cast<float>(v)));
    return out;
}

Raster<double> decode_f32(std::string_view bytes) {
    if (bytes.size() < 8) throw Error(Errc::truncated_payload, "f32 raster: missing header");
    const std::uint32_t w = get_u32(bytes, 0);
    const std::uint32_t h = get_u32(bytes, 4);
    if (w == 0 || h == 0 || w > (1u << 20) || h > (1u << 20)) {
        throw Error(Errc::bad_dimensions, "f32 raster: bad dimensions");
    }
    Raster<double> map(static_cast<int>(w), static_cast<int>(h));
    if (bytes.size() != 8 + 4 * map.size()) throw Error(Errc::truncated_payload, "f32 raster: payload size mismatch");
    for (std::size_t i = 0; i < map.size(); ++i) map.data[i] = std::bit_cast<float>(get_u32(bytes, 8 + 4 * i));
    return map;
}

void save_f32(const Raster<double>& map, const std::filesystem::path& path) {
    write_file_atomic(path, encode_f32(map));
}

Raster<double> load_f32(const std::filesystem::path& path) { return decode_f32(read_file(path)); }

}  // namespace sodsteg
