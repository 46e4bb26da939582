#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace sodsteg {

using Rational = mpq_class;

// Parses "num/den" or "num"; the result is canonical.
Rational parse_rational(const std::string& text);

// Canonical text: "-1/12", integers without a denominator.
std::string format_rational(const Rational& q);

// Dense matrix of exact rationals, row-major.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows) * cols) {}
    RationalMatrix(int rows, int cols, std::vector<Rational> entries);

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }

    Rational& operator()(int r, int c) { return entries_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Rational& operator()(int r, int c) const { return entries_[static_cast<std::size_t>(r) * cols_ + c]; }

    const std::vector<Rational>& entries() const noexcept { return entries_; }

    Rational sum() const;
    RationalMatrix transpose() const;
    RationalMatrix operator-() const;
    RationalMatrix& operator*=(const Rational& s);

    // Entry order of the rows reversed (top row becomes bottom row).
    RationalMatrix flip_rows() const;

    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> entries_;
};

// Column vector times row vector.
RationalMatrix outer_product(const RationalMatrix& column, const RationalMatrix& row);

// Full 2-D linear convolution, C[r][c] = sum A[i][j] * B[r-i][c-j];
// the result is (ra+rb-1) x (ca+cb-1).
RationalMatrix full_convolution(const RationalMatrix& a, const RationalMatrix& b);

}  // namespace sodsteg
