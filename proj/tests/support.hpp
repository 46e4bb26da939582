#pragma once

#include <unistd.h>

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <initializer_list>
#include <random>
#include <string>

#include "sodsteg/image.hpp"
#include "sodsteg/rational.hpp"

namespace sodsteg::test {

inline Rational q(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline RationalMatrix matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    std::vector<Rational> entries;
    int cols = 0;
    for (const auto& row : rows) {
        cols = static_cast<int>(row.size());
        entries.insert(entries.end(), row.begin(), row.end());
    }
    return RationalMatrix(static_cast<int>(rows.size()), cols, std::move(entries));
}

inline RationalMatrix row_vector(std::initializer_list<Rational> row) { return matrix({row}); }

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
public:
    explicit TempDir(const std::string& tag) {
        static int counter = 0;
        path_ = std::filesystem::temp_directory_path() /
                ("sodsteg_" + tag + "_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

private:
    std::filesystem::path path_;
};

inline Image noise_image(int w, int h, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> dist(0, 255);
    Image img(w, h);
    for (auto& v : img.data) v = static_cast<std::uint8_t>(dist(rng));
    return img;
}

// Left half flat at 128, right half uniform noise.
inline Image half_flat_half_noise(int w, int h, std::uint32_t seed) {
    Image img = noise_image(w, h, seed);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w / 2; ++x) img.at(x, y) = 128;
    return img;
}

// Smooth texture: blurred noise plus a gentle gradient, loosely photo-like.
inline Image textured_image(int w, int h, std::uint32_t seed) {
    Image noise = noise_image(w, h, seed);
    Image img(w, h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            int acc = 0;
            int count = 0;
            for (int dy = -1; dy <= 1; ++dy)
                for (int dx = -1; dx <= 1; ++dx) {
                    const int xx = std::clamp(x + dx, 0, w - 1);
                    const int yy = std::clamp(y + dy, 0, h - 1);
                    acc += noise.at(xx, yy);
                    ++count;
                }
            const int base = (x * 100) / w + (y * 50) / h;
            img.at(x, y) = static_cast<std::uint8_t>(std::clamp(base + acc / count / 2, 0, 255));
        }
    return img;
}

}  // namespace sodsteg::test
