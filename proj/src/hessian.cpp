#include "sodsteg/hessian.hpp"

#include <algorithm>
#include <cmath>

#include "sodsteg/error.hpp"

namespace sodsteg {

namespace {

void accumulate_max_abs(ResponseMap& acc, const ResponseMap& response) {
    for (std::size_t i = 0; i < acc.size(); ++i) acc.data[i] = std::max(acc.data[i], std::abs(response.data[i]));
}

}  // namespace

HessianField build_field(const Raster<double>& src, Family family, int N, Border border) {
    if (N < 1) throw Error(Errc::invalid_argument, "maximum scale N must be >= 1, got " + std::to_string(N));
    if (N > std::min(src.width, src.height)) {
        throw Error(Errc::kernel_too_large, "scale N=" + std::to_string(N) + " is too large for a " +
                                                std::to_string(src.width) + "x" + std::to_string(src.height) +
                                                " image");
    }
    HessianField field{ResponseMap(src.width, src.height), ResponseMap(src.width, src.height),
                       ResponseMap(src.width, src.height), family, N};
    for (int n = 1; n <= N; ++n) {
        accumulate_max_abs(field.pxx, convolve(src, family_kernel(family, KernelKind::x2, n), border));
        accumulate_max_abs(field.pyy, convolve(src, family_kernel(family, KernelKind::y2, n), border));
        accumulate_max_abs(field.pxy, convolve(src, family_kernel(family, KernelKind::xy, n), border));
    }
    return field;
}

HessianField build_field(const Image& img, Family family, int N, Border border) {
    return build_field(to_real(img), family, N, border);
}

}  // namespace sodsteg
