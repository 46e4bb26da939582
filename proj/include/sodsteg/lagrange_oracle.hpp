#pragma once

#include "sodsteg/kernel.hpp"
#include "sodsteg/raster.hpp"

namespace sodsteg {

// Brute-force reference: evaluates the requested second partial derivative
// at the window center of the bivariate Lagrange interpolant through every
// sample, by direct summation over the basis products. It shares no code
// with the kernel generators. window.at(c, r) is the sample at x = c - n,
// y = r - n (y grows downward).
double oracle_second_derivative(const Raster<double>& window, KernelKind kind);

}  // namespace sodsteg
