#pragma once

#include <string>
#include <string_view>

#include "sodsteg/rational.hpp"

namespace sodsteg {

enum class GradientOperator { sobel, prewitt, central_difference, intermediate_difference };

enum class KernelKind { first_x, first_y, x2, y2, xy };

// Ky: gradient-variation kernels. Ko: derivatives of the Lagrange
// interpolant of the window.
enum class Family { ky, ko };

const char* to_string(GradientOperator op) noexcept;
const char* to_string(KernelKind kind) noexcept;
const char* to_string(Family family) noexcept;
GradientOperator parse_gradient_operator(std::string_view name);
KernelKind parse_kernel_kind(std::string_view name);
Family parse_family(std::string_view name);

bool is_second_order(KernelKind kind) noexcept;

// Square (2n+1) x (2n+1) kernel of exact coefficients. Row r, column c
// weighs the pixel at offset (x + c - n, y + r - n); y grows downward.
struct Kernel {
    int n = 0;
    KernelKind kind = KernelKind::x2;
    RationalMatrix coeffs;

    int size() const noexcept { return 2 * n + 1; }
    const Rational& at(int row_offset, int col_offset) const { return coeffs(row_offset + n, col_offset + n); }

    friend bool operator==(const Kernel&, const Kernel&) = default;
};

// 3x3 horizontal gradient kernels (kind first_x).
Kernel classic_gradient(GradientOperator op);

// Tabulated second-order kernels induced by the gradient operators; kind is
// x2 or xy (y2 is the rotation of x2). xy kernels are expressed with y
// growing downward.
Kernel classic_second_order(GradientOperator op, KernelKind kind);

// Builds the same kernels from classic_gradient by kernel convolution: x2
// is K composed with K, xy is K composed with rotate_90(K). All-zero outer
// rings are stripped.
Kernel compose_second_order(GradientOperator op, KernelKind kind);

Kernel ky_x2(int n);
Kernel ky_xy(int n);
Kernel ko_x2(int n);
Kernel ko_xy(int n);

// Quarter turn clockwise. x2 <-> y2, first_x <-> first_y; xy stays xy.
Kernel rotate_90(const Kernel& k);

// 1 x (2n+1) stencils weighing f(-n..n) to give the exact first (resp.
// second) derivative at 0 of the degree-2n interpolating polynomial.
RationalMatrix lagrange_d1(int n);
RationalMatrix lagrange_d2(int n);

// Family dispatch used by the Hessian field: kind x2, y2 or xy at scale n.
Kernel family_kernel(Family family, KernelKind kind, int n);

// Text dump: header "kind n size", then one row per line.
std::string dump_kernel(const Kernel& k);
Kernel parse_kernel(std::string_view text);

}  // namespace sodsteg
