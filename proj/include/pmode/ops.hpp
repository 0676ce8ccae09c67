// ops.hpp — Elementary qubit and Fock-space operators

#pragma once

#include <cmath>

#include "pmode/types.hpp"

namespace pmode::ops {

// Qubit basis order is {|g>, |e>} throughout.

inline Matrix identity(Eigen::Index n) { return Matrix::Identity(n, n); }

inline Matrix sigma_plus() {
    Matrix m = Matrix::Zero(2, 2);
    m(1, 0) = 1.0;
    return m;
}

inline Matrix sigma_minus() {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 1) = 1.0;
    return m;
}

inline Matrix sigma_x() {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
    return m;
}

// Excited-state projector |e><e|.
inline Matrix excited_projector() {
    Matrix m = Matrix::Zero(2, 2);
    m(1, 1) = 1.0;
    return m;
}

// Bosonic lowering operator on an n-dimensional truncated Fock space.
inline Matrix lowering(Eigen::Index n) {
    Matrix a = Matrix::Zero(n, n);
    for (Eigen::Index k = 1; k < n; ++k) a(k - 1, k) = std::sqrt(static_cast<double>(k));
    return a;
}

inline Matrix number_op(Eigen::Index n) {
    Matrix m = Matrix::Zero(n, n);
    for (Eigen::Index k = 0; k < n; ++k) m(k, k) = static_cast<double>(k);
    return m;
}

} // namespace pmode::ops
