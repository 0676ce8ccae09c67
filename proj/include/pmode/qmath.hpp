// qmath.hpp — Dense complex linear algebra: tensor products, partial trace,
// Hermitian spectra, entropies and trace-norm distances.

#pragma once

#include <vector>

#include "pmode/types.hpp"

namespace pmode {

// Full spectrum of a Hermitian matrix. Eigenvalues are sorted descending,
// eigenvector columns are orthonormal and match the eigenvalue order.
struct HermitianSpectrum {
    RealVector eigenvalues;
    Matrix eigenvectors;

    Matrix reconstruct() const {
        return eigenvectors * eigenvalues.asDiagonal().toDenseMatrix().cast<Complex>() *
               eigenvectors.adjoint();
    }
};

// Kronecker product; works on any dense Eigen expressions.
template <typename DerivedA, typename DerivedB>
auto kron(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
    using Scalar = decltype(typename DerivedA::Scalar{} * typename DerivedB::Scalar{});
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(a.rows() * b.rows(),
                                                              a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b.derived();
    return out;
}

// Trace out every subsystem not listed in `keep`. `dims` are the subsystem
// dimensions in tensor order (first factor varies slowest); their product must
// equal the matrix dimension. The kept subsystems retain their original order.
Matrix partial_trace(const Matrix& rho, const std::vector<Eigen::Index>& dims,
                     const std::vector<int>& keep);

// Eigendecomposition of a Hermitian matrix. Throws std::invalid_argument if
// the input deviates from Hermiticity beyond a 1e-10 (scaled) tolerance.
HermitianSpectrum hermitian_eig(const Matrix& m);

// Von Neumann entropy in bits, -sum lambda log2 lambda with 0 log 0 := 0.
// Eigenvalues in [-1e-10, 0) are clamped to zero; anything more negative
// throws, as does a trace away from one by more than 1e-9.
double von_neumann_entropy(const Matrix& rho);

// Trace distance D = 0.5 * ||a - b||_1 for Hermitian a, b of equal dimension.
double trace_norm_distance(const Matrix& a, const Matrix& b);

// Binary entropy in bits.
double binary_entropy(double p);

} // namespace pmode
