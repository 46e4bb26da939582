#include <doctest.h>

#include <cmath>
#include <random>

#include "sodsteg/error.hpp"
#include "sodsteg/lagrange_oracle.hpp"

using namespace sodsteg;

namespace {

Raster<double> sampled(int n, double (*f)(double, double)) {
    Raster<double> w(2 * n + 1, 2 * n + 1);
    for (int j = -n; j <= n; ++j)
        for (int i = -n; i <= n; ++i) w.at(i + n, j + n) = f(i, j);
    return w;
}

}  // namespace

TEST_CASE("oracle on constant and polynomial windows") {
    for (int n = 1; n <= 5; ++n) {
        for (auto kind : {KernelKind::x2, KernelKind::y2, KernelKind::xy}) {
            CHECK(std::abs(oracle_second_derivative(sampled(n, [](double, double) { return 42.0; }), kind)) <= 1e-9);
        }
        CHECK(oracle_second_derivative(sampled(n, [](double x, double) { return x * x; }), KernelKind::x2) ==
              doctest::Approx(2.0).epsilon(1e-12));
        CHECK(oracle_second_derivative(sampled(n, [](double, double y) { return y * y; }), KernelKind::y2) ==
              doctest::Approx(2.0).epsilon(1e-12));
        CHECK(oracle_second_derivative(sampled(n, [](double x, double y) { return x * y; }), KernelKind::xy) ==
              doctest::Approx(1.0).epsilon(1e-12));
        CHECK(std::abs(oracle_second_derivative(sampled(n, [](double x, double) { return x * x; }), KernelKind::xy)) <=
              1e-12);
    }
}

TEST_CASE("oracle agrees with the tabulated five-point stencil") {
    // Independent of the kernel generator: the stencil is written out here.
    const double stencil[5] = {-1.0 / 12, 4.0 / 3, -5.0 / 2, 4.0 / 3, -1.0 / 12};
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> dist(0.0, 255.0);
    for (int trial = 0; trial < 200; ++trial) {
        Raster<double> w(5, 5);
        for (auto& v : w.data) v = dist(rng);
        double expected = 0.0;
        for (int i = 0; i < 5; ++i) expected += stencil[i] * w.at(i, 2);
        const double got = oracle_second_derivative(w, KernelKind::x2);
        CHECK(std::abs(got - expected) <= 1e-9 * std::max(1.0, std::abs(expected)));
    }
}

TEST_CASE("oracle rejects even or non-square windows") {
    CHECK_THROWS_AS(oracle_second_derivative(Raster<double>(4, 4), KernelKind::x2), Error);
    CHECK_THROWS_AS(oracle_second_derivative(Raster<double>(3, 5), KernelKind::x2), Error);
    CHECK_THROWS_AS(oracle_second_derivative(Raster<double>(3, 3), KernelKind::first_x), Error);
}
