#include "pmode/qmath.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace pmode {

namespace {

void require_hermitian(const Matrix& m, const char* who) {
    if (m.rows() != m.cols()) throw std::invalid_argument(std::string(who) + ": matrix not square");
    const double scale = std::max(1.0, m.norm());
    if ((m - m.adjoint()).norm() > 1e-10 * scale)
        throw std::invalid_argument(std::string(who) + ": matrix not Hermitian within tolerance");
}

} // namespace

Matrix partial_trace(const Matrix& rho, const std::vector<Eigen::Index>& dims,
                     const std::vector<int>& keep) {
    if (rho.rows() != rho.cols()) throw std::invalid_argument("partial_trace: matrix not square");
    Eigen::Index total = 1;
    for (Eigen::Index d : dims) total *= d;
    if (total != rho.rows())
        throw std::invalid_argument("partial_trace: subsystem dimensions do not match matrix");

    const int n = static_cast<int>(dims.size());
    std::vector<int> keep_sorted = keep;
    std::sort(keep_sorted.begin(), keep_sorted.end());
    keep_sorted.erase(std::unique(keep_sorted.begin(), keep_sorted.end()), keep_sorted.end());
    for (int k : keep_sorted)
        if (k < 0 || k >= n) throw std::invalid_argument("partial_trace: keep index out of range");

    std::vector<char> kept(static_cast<std::size_t>(n), 0);
    for (int k : keep_sorted) kept[static_cast<std::size_t>(k)] = 1;

    // Row-major strides: first subsystem varies slowest.
    std::vector<Eigen::Index> stride(static_cast<std::size_t>(n), 1);
    for (int i = n - 2; i >= 0; --i)
        stride[static_cast<std::size_t>(i)] =
            stride[static_cast<std::size_t>(i + 1)] * dims[static_cast<std::size_t>(i + 1)];

    Eigen::Index kept_dim = 1, traced_dim = 1;
    for (int i = 0; i < n; ++i)
        (kept[static_cast<std::size_t>(i)] ? kept_dim : traced_dim) *= dims[static_cast<std::size_t>(i)];

    // Map a (kept-index, traced-index) pair to a global basis index.
    auto global_index = [&](Eigen::Index kidx, Eigen::Index tidx) {
        Eigen::Index g = 0;
        for (int i = n - 1; i >= 0; --i) {
            const Eigen::Index d = dims[static_cast<std::size_t>(i)];
            Eigen::Index digit;
            if (kept[static_cast<std::size_t>(i)]) {
                digit = kidx % d;
                kidx /= d;
            } else {
                digit = tidx % d;
                tidx /= d;
            }
            g += digit * stride[static_cast<std::size_t>(i)];
        }
        return g;
    };

    Matrix out = Matrix::Zero(kept_dim, kept_dim);
    for (Eigen::Index r = 0; r < kept_dim; ++r)
        for (Eigen::Index c = 0; c < kept_dim; ++c) {
            Complex acc = 0.0;
            for (Eigen::Index t = 0; t < traced_dim; ++t)
                acc += rho(global_index(r, t), global_index(c, t));
            out(r, c) = acc;
        }
    return out;
}

HermitianSpectrum hermitian_eig(const Matrix& m) {
    require_hermitian(m, "hermitian_eig");
    Eigen::SelfAdjointEigenSolver<Matrix> solver((m + m.adjoint()) * 0.5);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("hermitian_eig: eigensolver failed to converge");

    const Eigen::Index d = m.rows();
    HermitianSpectrum spec;
    spec.eigenvalues = RealVector(d);
    spec.eigenvectors = Matrix(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
        spec.eigenvalues(i) = solver.eigenvalues()(d - 1 - i);
        spec.eigenvectors.col(i) = solver.eigenvectors().col(d - 1 - i);
    }
    return spec;
}

double von_neumann_entropy(const Matrix& rho) {
    require_hermitian(rho, "von_neumann_entropy");
    if (std::abs(rho.trace().real() - 1.0) > 1e-9 || std::abs(rho.trace().imag()) > 1e-9)
        throw std::invalid_argument("von_neumann_entropy: trace deviates from one");

    const HermitianSpectrum spec = hermitian_eig(rho);
    double s = 0.0;
    for (Eigen::Index i = 0; i < spec.eigenvalues.size(); ++i) {
        double lam = spec.eigenvalues(i);
        if (lam < -1e-10)
            throw std::invalid_argument("von_neumann_entropy: negative eigenvalue beyond tolerance");
        if (lam < 0.0) lam = 0.0;
        if (lam > 0.0) s -= lam * std::log2(lam);
    }
    return s;
}

double trace_norm_distance(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("trace_norm_distance: dimension mismatch");
    require_hermitian(a, "trace_norm_distance");
    require_hermitian(b, "trace_norm_distance");
    const HermitianSpectrum spec = hermitian_eig(a - b);
    return 0.5 * spec.eigenvalues.cwiseAbs().sum();
}

double binary_entropy(double p) {
    double s = 0.0;
    if (p > 0.0) s -= p * std::log2(p);
    if (p < 1.0) s -= (1.0 - p) * std::log2(1.0 - p);
    return s;
}

} // namespace pmode
