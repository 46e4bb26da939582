#include "sodsteg/lagrange_oracle.hpp"

#include "sodsteg/error.hpp"

namespace sodsteg {

namespace {

// l_i(t) = prod_{k != i} (t - k) / (i - k)
double basis(int n, int i, double t) {
    double p = 1.0;
    for (int k = -n; k <= n; ++k)
        if (k != i) p *= (t - k) / static_cast<double>(i - k);
    return p;
}

// l_i'(t) = sum_{k != i} 1/(i - k) prod_{l != i,k} (t - l) / (i - l)
double basis_d1(int n, int i, double t) {
    double s = 0.0;
    for (int k = -n; k <= n; ++k) {
        if (k == i) continue;
        double p = 1.0 / (i - k);
        for (int l = -n; l <= n; ++l)
            if (l != i && l != k) p *= (t - l) / static_cast<double>(i - l);
        s += p;
    }
    return s;
}

// l_i''(t) = sum_{k != i} 1/(i - k) sum_{l != i,k} 1/(i - l) prod_{m != i,k,l} (t - m) / (i - m)
double basis_d2(int n, int i, double t) {
    double s = 0.0;
    for (int k = -n; k <= n; ++k) {
        if (k == i) continue;
        double inner = 0.0;
        for (int l = -n; l <= n; ++l) {
            if (l == i || l == k) continue;
            double p = 1.0 / (i - l);
            for (int m = -n; m <= n; ++m)
                if (m != i && m != k && m != l) p *= (t - m) / static_cast<double>(i - m);
            inner += p;
        }
        s += inner / (i - k);
    }
    return s;
}

}  // namespace

double oracle_second_derivative(const Raster<double>& window, KernelKind kind) {
    if (window.width != window.height || window.width % 2 == 0 || window.width < 3) {
        throw Error(Errc::invalid_argument, "oracle window must be an odd square of side >= 3");
    }
    const int n = window.width / 2;
    double sum = 0.0;
    // Full double sum over the window: i runs along x (columns), j along y.
    for (int j = -n; j <= n; ++j) {
        for (int i = -n; i <= n; ++i) {
            const double p = window.at(i + n, j + n);
            double w = 0.0;
            switch (kind) {
                case KernelKind::x2: w = basis(n, j, 0.0) * basis_d2(n, i, 0.0); break;
                case KernelKind::y2: w = basis_d2(n, j, 0.0) * basis(n, i, 0.0); break;
                case KernelKind::xy: w = basis_d1(n, j, 0.0) * basis_d1(n, i, 0.0); break;
                default: throw Error(Errc::invalid_argument, "oracle handles x2, y2 and xy only");
            }
            sum += p * w;
        }
    }
    return sum;
}

}  // namespace sodsteg
