#pragma once

#include "sodsteg/convolution.hpp"
#include "sodsteg/image.hpp"
#include "sodsteg/kernel.hpp"

namespace sodsteg {

// Magnitudes of the three second partial derivatives at every pixel, each
// the maximum of the absolute single-scale responses over n = 1..N.
struct HessianField {
    ResponseMap pxx;
    ResponseMap pyy;
    ResponseMap pxy;
    Family family = Family::ky;
    int N = 1;
};

// Scale defaults retained for each family.
constexpr int default_scale(Family family) noexcept { return family == Family::ky ? 4 : 12; }

HessianField build_field(const Raster<double>& src, Family family, int N, Border border = Border::mirror);
HessianField build_field(const Image& img, Family family, int N, Border border = Border::mirror);

}  // namespace sodsteg
