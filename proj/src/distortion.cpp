#include "sodsteg/distortion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sodsteg/error.hpp"

namespace sodsteg {

namespace {

void check_parameters(double p, double wet_cost) {
    if (!(p < 0.0) || !std::isfinite(p)) {
        throw Error(Errc::invalid_argument, "Holder exponent p must be a finite negative number");
    }
    if (!(wet_cost > 0.0) || !std::isfinite(wet_cost)) {
        throw Error(Errc::invalid_argument, "wet cost must be a finite positive number");
    }
}

}  // namespace

double pixel_cost(double dxx, double dyy, double dxy, double p, double wet_cost) {
    const double a = std::abs(dxx);
    const double b = std::abs(dyy);
    const double c = std::abs(dxy);
    const double smallest = std::min({a, b, c});
    if (smallest == 0.0) return wet_cost;
    // Factor out the smallest magnitude: each ratio is >= 1, so every term of
    // the sum lies in (0, 1] and the sum stays within [1, 3].
    const double s = std::pow(a / smallest, p) + std::pow(b / smallest, p) + std::pow(c / smallest, p);
    const double rho = std::pow(s, -1.0 / p) / smallest;
    return std::min(rho, wet_cost);
}

CostMap cost_map(const HessianField& field, double p, double wet_cost) {
    check_parameters(p, wet_cost);
    if (!field.pxx.same_shape(field.pyy) || !field.pxx.same_shape(field.pxy)) {
        throw Error(Errc::dimension_mismatch, "Hessian field maps are not aligned");
    }
    CostMap out{Raster<double>(field.pxx.width, field.pxx.height), wet_cost, p};
    for (std::size_t i = 0; i < out.costs.size(); ++i) {
        out.costs.data[i] = pixel_cost(field.pxx.data[i], field.pyy.data[i], field.pxy.data[i], p, wet_cost);
    }
    return out;
}

Image cost_visualization(const CostMap& costs) {
    Image out(costs.width(), costs.height());
    if (costs.costs.size() == 0) return out;
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (double c : costs.costs.data) {
        const double v = -std::log(c);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    const double span = hi - lo;
    for (std::size_t i = 0; i < out.size(); ++i) {
        const double v = -std::log(costs.costs.data[i]);
        const double t = span > 0.0 ? (v - lo) / span : 0.0;
        out.data[i] = static_cast<std::uint8_t>(std::lround(255.0 * t));
    }
    return out;
}

}  // namespace sodsteg
