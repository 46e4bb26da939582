#pragma once

#include "sodsteg/hessian.hpp"
#include "sodsteg/raster.hpp"

namespace sodsteg {

constexpr double default_holder_exponent = -1.0;
constexpr double default_wet_cost = 1e10;

// Per-pixel cost of a +-1 change. Costs lie in (0, wet_cost]; wet_cost
// marks pixels the embedder should leave alone.
struct CostMap {
    Raster<double> costs;
    double wet_cost = default_wet_cost;
    double p = default_holder_exponent;

    int width() const noexcept { return costs.width; }
    int height() const noexcept { return costs.height; }
    bool is_wet(std::size_t i) const noexcept { return costs.data[i] == wet_cost; }
};

// (dxx^p + dyy^p + dxy^p)^(-1/p) for p < 0 on magnitudes; any zero
// magnitude gives wet_cost, and the result never exceeds wet_cost.
double pixel_cost(double dxx, double dyy, double dxy, double p, double wet_cost);

CostMap cost_map(const HessianField& field, double p = default_holder_exponent,
                 double wet_cost = default_wet_cost);

// 8-bit rendering of -log(cost), affinely stretched to [0, 255]; bright
// pixels are cheap to change.
Image cost_visualization(const CostMap& costs);

}  // namespace sodsteg
