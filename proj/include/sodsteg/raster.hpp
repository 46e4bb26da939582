#pragma once

#include <cstddef>
#include <vector>

namespace sodsteg {

// Row-major 2-D grid; (x, y) is (column, row) with y growing downward.
template <typename T>
struct Raster {
    int width = 0;
    int height = 0;
    std::vector<T> data;

    Raster() = default;
    Raster(int w, int h, T fill = T{})
        : width(w), height(h), data(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), fill) {}

    std::size_t size() const noexcept { return data.size(); }
    std::size_t index(int x, int y) const noexcept {
        return static_cast<std::size_t>(y) * static_cast<std::size_t>(width) + static_cast<std::size_t>(x);
    }

    T& at(int x, int y) noexcept { return data[index(x, y)]; }
    const T& at(int x, int y) const noexcept { return data[index(x, y)]; }

    bool same_shape(int w, int h) const noexcept { return width == w && height == h; }
    template <typename U>
    bool same_shape(const Raster<U>& other) const noexcept {
        return width == other.width && height == other.height;
    }

    bool operator==(const Raster&) const = default;
};

}  // namespace sodsteg
