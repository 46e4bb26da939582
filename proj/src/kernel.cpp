#include "sodsteg/kernel.hpp"

#include <cstdlib>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sodsteg/error.hpp"

namespace sodsteg {

// ---------------------------------------------------------------------------
// Rational helpers

Rational parse_rational(const std::string& text) {
    Rational q;
    if (text.empty() || q.set_str(text, 10) != 0) {
        throw Error(Errc::invalid_argument, "not a rational number: '" + text + "'");
    }
    if (q.get_den() == 0) throw Error(Errc::invalid_argument, "zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

std::string format_rational(const Rational& q) { return q.get_str(10); }

RationalMatrix::RationalMatrix(int rows, int cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != static_cast<std::size_t>(rows) * cols) {
        throw Error(Errc::invalid_argument, "rational matrix entry count does not match its shape");
    }
    for (auto& e : entries_) e.canonicalize();
}

Rational RationalMatrix::sum() const {
    Rational s = 0;
    for (const auto& e : entries_) s += e;
    return s;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

RationalMatrix RationalMatrix::operator-() const {
    RationalMatrix out = *this;
    for (auto& e : out.entries_) e = -e;
    return out;
}

RationalMatrix& RationalMatrix::operator*=(const Rational& s) {
    for (auto& e : entries_) e *= s;
    return *this;
}

RationalMatrix RationalMatrix::flip_rows() const {
    RationalMatrix out(rows_, cols_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) out(r, c) = (*this)(rows_ - 1 - r, c);
    return out;
}

RationalMatrix outer_product(const RationalMatrix& column, const RationalMatrix& row) {
    const auto& u = column.entries();
    const auto& v = row.entries();
    RationalMatrix out(static_cast<int>(u.size()), static_cast<int>(v.size()));
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out(static_cast<int>(i), static_cast<int>(j)) = u[i] * v[j];
    return out;
}

RationalMatrix full_convolution(const RationalMatrix& a, const RationalMatrix& b) {
    RationalMatrix out(a.rows() + b.rows() - 1, a.cols() + b.cols() - 1);
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (a(i, j) == 0) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l) out(i + k, j + l) += a(i, j) * b(k, l);
        }
    return out;
}

// ---------------------------------------------------------------------------
// Names

const char* to_string(GradientOperator op) noexcept {
    switch (op) {
        case GradientOperator::sobel: return "sobel";
        case GradientOperator::prewitt: return "prewitt";
        case GradientOperator::central_difference: return "central";
        case GradientOperator::intermediate_difference: return "intermediate";
    }
    return "?";
}

const char* to_string(KernelKind kind) noexcept {
    switch (kind) {
        case KernelKind::first_x: return "first_x";
        case KernelKind::first_y: return "first_y";
        case KernelKind::x2: return "x2";
        case KernelKind::y2: return "y2";
        case KernelKind::xy: return "xy";
    }
    return "?";
}

const char* to_string(Family family) noexcept { return family == Family::ky ? "ky" : "ko"; }

GradientOperator parse_gradient_operator(std::string_view name) {
    for (auto op : {GradientOperator::sobel, GradientOperator::prewitt, GradientOperator::central_difference,
                    GradientOperator::intermediate_difference}) {
        if (name == to_string(op)) return op;
    }
    throw Error(Errc::invalid_argument, "unknown gradient operator '" + std::string(name) + "'");
}

KernelKind parse_kernel_kind(std::string_view name) {
    for (auto kind : {KernelKind::first_x, KernelKind::first_y, KernelKind::x2, KernelKind::y2, KernelKind::xy}) {
        if (name == to_string(kind)) return kind;
    }
    throw Error(Errc::invalid_argument, "unknown kernel kind '" + std::string(name) + "'");
}

Family parse_family(std::string_view name) {
    if (name == "ky") return Family::ky;
    if (name == "ko") return Family::ko;
    throw Error(Errc::invalid_argument, "unknown kernel family '" + std::string(name) + "'");
}

bool is_second_order(KernelKind kind) noexcept {
    return kind == KernelKind::x2 || kind == KernelKind::y2 || kind == KernelKind::xy;
}

// ---------------------------------------------------------------------------
// Construction

namespace {

void require_scale(int n) {
    if (n < 1) throw Error(Errc::invalid_argument, "kernel scale n must be >= 1, got " + std::to_string(n));
}

Kernel make_kernel(KernelKind kind, RationalMatrix coeffs) {
    if (coeffs.rows() != coeffs.cols() || coeffs.rows() % 2 == 0) {
        throw Error(Errc::invalid_argument, "kernels must be odd-sized squares");
    }
    return Kernel{(coeffs.rows() - 1) / 2, kind, std::move(coeffs)};
}

Kernel from_rows(KernelKind kind, std::initializer_list<std::initializer_list<Rational>> rows) {
    std::vector<Rational> entries;
    int size = static_cast<int>(rows.size());
    for (const auto& row : rows) entries.insert(entries.end(), row.begin(), row.end());
    return make_kernel(kind, RationalMatrix(size, size, std::move(entries)));
}

Rational q(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Kernel with a single non-zero row (the middle one).
Kernel middle_row_kernel(KernelKind kind, const RationalMatrix& row) {
    const int size = row.cols();
    RationalMatrix m(size, size);
    for (int c = 0; c < size; ++c) m(size / 2, c) = row(0, c);
    return make_kernel(kind, std::move(m));
}

// Strips the outermost ring while it is entirely zero, keeping the kernel
// odd-sized and centered.
RationalMatrix trim_zero_rings(RationalMatrix m) {
    while (m.rows() > 1) {
        const int last = m.rows() - 1;
        bool zero = true;
        for (int i = 0; i <= last && zero; ++i) {
            zero = m(0, i) == 0 && m(last, i) == 0 && m(i, 0) == 0 && m(i, last) == 0;
        }
        if (!zero) break;
        RationalMatrix inner(m.rows() - 2, m.cols() - 2);
        for (int r = 0; r < inner.rows(); ++r)
            for (int c = 0; c < inner.cols(); ++c) inner(r, c) = m(r + 1, c + 1);
        m = std::move(inner);
    }
    return m;
}

// Coefficients (ascending powers) of the Lagrange basis polynomial for node
// `node` over the integer nodes -n..n.
std::vector<Rational> lagrange_basis(int n, int node) {
    std::vector<Rational> poly{Rational(1)};
    for (int k = -n; k <= n; ++k) {
        if (k == node) continue;
        const Rational scale = q(1, node - k);
        std::vector<Rational> next(poly.size() + 1);
        for (std::size_t p = 0; p < poly.size(); ++p) {
            next[p + 1] += poly[p] * scale;
            next[p] -= poly[p] * scale * k;
        }
        poly = std::move(next);
    }
    return poly;
}

RationalMatrix lagrange_stencil(int n, int order) {
    require_scale(n);
    Rational factorial = 1;
    for (int i = 2; i <= order; ++i) factorial *= i;
    RationalMatrix row(1, 2 * n + 1);
    for (int i = -n; i <= n; ++i) {
        const auto poly = lagrange_basis(n, i);
        row(0, i + n) = poly[static_cast<std::size_t>(order)] * factorial;
    }
    return row;
}

}  // namespace

Kernel classic_gradient(GradientOperator op) {
    switch (op) {
        case GradientOperator::sobel:
            return from_rows(KernelKind::first_x, {{-1, 0, 1}, {-2, 0, 2}, {-1, 0, 1}});
        case GradientOperator::prewitt:
            return from_rows(KernelKind::first_x, {{-1, 0, 1}, {-1, 0, 1}, {-1, 0, 1}});
        case GradientOperator::central_difference:
            return from_rows(KernelKind::first_x, {{0, 0, 0}, {q(-1, 2), 0, q(1, 2)}, {0, 0, 0}});
        case GradientOperator::intermediate_difference:
            return from_rows(KernelKind::first_x, {{0, 0, 0}, {0, -1, 1}, {0, 0, 0}});
    }
    throw Error(Errc::invalid_argument, "unknown gradient operator");
}

Kernel classic_second_order(GradientOperator op, KernelKind kind) {
    if (kind == KernelKind::y2) return rotate_90(classic_second_order(op, KernelKind::x2));
    if (kind != KernelKind::x2 && kind != KernelKind::xy) {
        throw Error(Errc::invalid_argument, "classic second-order kernels exist for x2, y2 and xy only");
    }
    const bool x2 = kind == KernelKind::x2;
    switch (op) {
        case GradientOperator::sobel:
            if (x2)
                return from_rows(kind, {{1, 0, -2, 0, 1},
                                        {4, 0, -8, 0, 4},
                                        {6, 0, -12, 0, 6},
                                        {4, 0, -8, 0, 4},
                                        {1, 0, -2, 0, 1}});
            return from_rows(kind, {{1, 2, 0, -2, -1},
                                    {2, 4, 0, -4, -2},
                                    {0, 0, 0, 0, 0},
                                    {-2, -4, 0, 4, 2},
                                    {-1, -2, 0, 2, 1}});
        case GradientOperator::prewitt:
            if (x2)
                return from_rows(kind, {{1, 0, -2, 0, 1},
                                        {2, 0, -4, 0, 2},
                                        {3, 0, -6, 0, 3},
                                        {2, 0, -4, 0, 2},
                                        {1, 0, -2, 0, 1}});
            return from_rows(kind, {{1, 1, 0, -1, -1},
                                    {1, 1, 0, -1, -1},
                                    {0, 0, 0, 0, 0},
                                    {-1, -1, 0, 1, 1},
                                    {-1, -1, 0, 1, 1}});
        case GradientOperator::central_difference:
            if (x2)
                return from_rows(kind, {{0, 0, 0, 0, 0},
                                        {0, 0, 0, 0, 0},
                                        {q(1, 4), 0, q(-1, 2), 0, q(1, 4)},
                                        {0, 0, 0, 0, 0},
                                        {0, 0, 0, 0, 0}});
            return from_rows(kind, {{q(1, 4), 0, q(-1, 4)}, {0, 0, 0}, {q(-1, 4), 0, q(1, 4)}});
        case GradientOperator::intermediate_difference:
            if (x2)
                return from_rows(kind, {{0, 0, 0, 0, 0},
                                        {0, 0, 0, 0, 0},
                                        {0, 0, 1, -2, 1},
                                        {0, 0, 0, 0, 0},
                                        {0, 0, 0, 0, 0}});
            return from_rows(kind, {{0, 0, 0}, {0, 1, -1}, {0, -1, 1}});
    }
    throw Error(Errc::invalid_argument, "unknown gradient operator");
}

Kernel compose_second_order(GradientOperator op, KernelKind kind) {
    if (kind == KernelKind::y2) return rotate_90(compose_second_order(op, KernelKind::x2));
    if (kind != KernelKind::x2 && kind != KernelKind::xy) {
        throw Error(Errc::invalid_argument, "second-order composition exists for x2, y2 and xy only");
    }
    const Kernel k = classic_gradient(op);
    const Kernel other = kind == KernelKind::x2 ? k : rotate_90(k);
    return make_kernel(kind, trim_zero_rings(full_convolution(k.coeffs, other.coeffs)));
}

Kernel ky_x2(int n) {
    require_scale(n);
    RationalMatrix row(1, 2 * n + 1);
    row(0, 0) = q(1, 2 * n);
    row(0, n) = q(-2, 2 * n);
    row(0, 2 * n) = q(1, 2 * n);
    return middle_row_kernel(KernelKind::x2, row);
}

Kernel ky_xy(int n) {
    require_scale(n);
    const int size = 2 * n + 1;
    RationalMatrix m(size, size);
    for (int i = -n; i <= n; ++i) {
        for (int j = -n; j <= n; ++j) {
            if (i == 0 || j == 0) continue;
            if (std::abs(i) != n && std::abs(j) != n) continue;
            const long sign = (i > 0) == (j > 0) ? 1 : -1;
            m(i + n, j + n) = q(sign, 4L * std::abs(i) * std::abs(j));
        }
    }
    return make_kernel(KernelKind::xy, std::move(m));
}

RationalMatrix lagrange_d1(int n) { return lagrange_stencil(n, 1); }
RationalMatrix lagrange_d2(int n) { return lagrange_stencil(n, 2); }

Kernel ko_x2(int n) { return middle_row_kernel(KernelKind::x2, lagrange_d2(n)); }

Kernel ko_xy(int n) {
    const RationalMatrix d1 = lagrange_d1(n);
    return make_kernel(KernelKind::xy, outer_product(d1, d1));
}

Kernel rotate_90(const Kernel& k) {
    const int size = k.size();
    RationalMatrix m(size, size);
    for (int r = 0; r < size; ++r)
        for (int c = 0; c < size; ++c) m(r, c) = k.coeffs(size - 1 - c, r);
    KernelKind kind = k.kind;
    switch (k.kind) {
        case KernelKind::first_x: kind = KernelKind::first_y; break;
        case KernelKind::first_y: kind = KernelKind::first_x; break;
        case KernelKind::x2: kind = KernelKind::y2; break;
        case KernelKind::y2: kind = KernelKind::x2; break;
        case KernelKind::xy: break;
    }
    return Kernel{k.n, kind, std::move(m)};
}

Kernel family_kernel(Family family, KernelKind kind, int n) {
    switch (kind) {
        case KernelKind::x2: return family == Family::ky ? ky_x2(n) : ko_x2(n);
        case KernelKind::y2: return rotate_90(family_kernel(family, KernelKind::x2, n));
        case KernelKind::xy: return family == Family::ky ? ky_xy(n) : ko_xy(n);
        default: break;
    }
    throw Error(Errc::invalid_argument, std::string("family kernels have no kind ") + to_string(kind));
}

// ---------------------------------------------------------------------------
// Text dump

std::string dump_kernel(const Kernel& k) {
    std::ostringstream out;
    out << to_string(k.kind) << ' ' << k.n << ' ' << k.size() << '\n';
    for (int r = 0; r < k.size(); ++r) {
        for (int c = 0; c < k.size(); ++c) {
            if (c) out << ' ';
            out << format_rational(k.coeffs(r, c));
        }
        out << '\n';
    }
    return out.str();
}

Kernel parse_kernel(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string kind_name;
    int n = 0;
    int size = 0;
    if (!(in >> kind_name >> n >> size)) throw Error(Errc::invalid_argument, "kernel dump: bad header");
    if (n < 0 || size != 2 * n + 1) throw Error(Errc::invalid_argument, "kernel dump: size must equal 2n+1");
    const KernelKind kind = parse_kernel_kind(kind_name);
    std::vector<Rational> entries;
    entries.reserve(static_cast<std::size_t>(size) * size);
    std::string token;
    while (in >> token) entries.push_back(parse_rational(token));
    if (entries.size() != static_cast<std::size_t>(size) * size) {
        throw Error(Errc::invalid_argument, "kernel dump: expected " + std::to_string(size * size) + " entries");
    }
    return Kernel{n, kind, RationalMatrix(size, size, std::move(entries))};
}

}  // namespace sodsteg
