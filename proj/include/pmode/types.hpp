// types.hpp — Common scalar/matrix aliases and small grid helpers

#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace pmode {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Uniform grid of n points covering [start, end], endpoints included.
inline std::vector<double> linspace(double start, double end, int n) {
    std::vector<double> out(static_cast<std::size_t>(n));
    if (n == 1) {
        out[0] = start;
        return out;
    }
    const double h = (end - start) / static_cast<double>(n - 1);
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = start + h * i;
    out.back() = end;
    return out;
}

} // namespace pmode
