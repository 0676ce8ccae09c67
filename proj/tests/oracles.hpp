// oracles.hpp — Independent reference computations used only by the tests:
// closed-form damped-JC amplitude, brute-force discord grids, cubic
// characteristic roots and random-state generators.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include "pmode/correlations.hpp"
#include "pmode/types.hpp"

namespace oracles {

using pmode::Complex;
using pmode::Matrix;

// |b(t)| for a single Lorentzian environment at resonance: the damped
// Jaynes-Cummings amplitude. delta = sqrt(G^2 - 16 Omega^2) handled uniformly
// through complex arithmetic, so both the overdamped and the oscillatory
// branch come out of one expression.
inline double damped_jc_amplitude(double gamma, double omega, double t) {
    const Complex delta = std::sqrt(Complex(gamma * gamma - 16.0 * omega * omega, 0.0));
    if (std::abs(delta) < 1e-12) {
        // Critically damped limit of the same expression.
        return std::abs(std::exp(-gamma * t / 4.0) * (1.0 + gamma * t / 4.0));
    }
    const Complex arg = delta * t / 4.0;
    const Complex b = std::exp(-gamma * t / 4.0) * (std::cosh(arg) + (gamma / delta) * std::sinh(arg));
    return std::abs(b);
}

// Conditional entropy after measuring B along (polar, azimuth), computed by
// dense contraction of the full 4x4 density matrix. Independent of the
// closed-form X-state expressions in the library.
inline double dense_conditional_entropy(const Matrix& rho, double polar, double azimuth) {
    const double c = std::cos(polar), s = std::sin(polar);
    Matrix proj_up(2, 2), proj_dn(2, 2);
    const Complex e_phi = std::polar(1.0, azimuth);
    proj_up << 0.5 * (1.0 + c), 0.5 * s * std::conj(e_phi), 0.5 * s * e_phi, 0.5 * (1.0 - c);
    proj_dn << 0.5 * (1.0 - c), -0.5 * s * std::conj(e_phi), -0.5 * s * e_phi, 0.5 * (1.0 + c);

    double total = 0.0;
    for (const Matrix& proj : {proj_up, proj_dn}) {
        // M[a,a'] = sum_{b,b'} rho[(a,b),(a',b')] proj[b',b]
        Matrix m = Matrix::Zero(2, 2);
        for (int a = 0; a < 2; ++a)
            for (int ap = 0; ap < 2; ++ap)
                for (int b = 0; b < 2; ++b)
                    for (int bp = 0; bp < 2; ++bp)
                        m(a, ap) += rho(2 * a + b, 2 * ap + bp) * proj(bp, b);
        const double p = m.trace().real();
        if (p <= 1e-15) continue;
        const double tr = p;
        const double det = (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)).real();
        const double disc = std::max(tr * tr - 4.0 * det, 0.0);
        const double l1 = std::max(0.5 * (tr + std::sqrt(disc)), 0.0);
        const double l2 = std::max(0.5 * (tr - std::sqrt(disc)), 0.0);
        double s_un = 0.0;
        if (l1 > 0.0) s_un -= l1 * std::log2(l1);
        if (l2 > 0.0) s_un -= l2 * std::log2(l2);
        total += s_un + p * std::log2(p);
    }
    return total;
}

// Discord by exhaustive measurement grid (256 polar x 128 azimuth), built on
// the dense conditional entropy above.
inline double brute_force_discord(const pmode::XState& state) {
    const Matrix rho = state.to_matrix();
    const double q_b = state.r11 + state.r33;
    const double s_b = pmode::binary_entropy(q_b);
    const double s_ab = pmode::von_neumann_entropy(rho);

    double best = std::numeric_limits<double>::infinity();
    constexpr int kPolar = 256, kAzimuth = 128;
    for (int i = 0; i <= kPolar; ++i) {
        const double polar = std::numbers::pi * static_cast<double>(i) / kPolar;
        for (int j = 0; j < kAzimuth; ++j) {
            const double azimuth = 2.0 * std::numbers::pi * static_cast<double>(j) / kAzimuth;
            best = std::min(best, dense_conditional_entropy(rho, polar, azimuth));
        }
    }
    return s_b - s_ab + best;
}

// Roots of x^3 + a2 x^2 + a1 x + a0 for a real-rooted cubic (trigonometric
// method); used to cross-check Hermitian 3x3 eigenvalues.
inline std::vector<double> real_cubic_roots(double a2, double a1, double a0) {
    const double p = a1 - a2 * a2 / 3.0;
    const double q = 2.0 * a2 * a2 * a2 / 27.0 - a2 * a1 / 3.0 + a0;
    const double m = 2.0 * std::sqrt(-p / 3.0);
    const double arg = std::clamp(3.0 * q / (p * m), -1.0, 1.0);
    const double phi = std::acos(arg) / 3.0;
    std::vector<double> roots(3);
    for (int k = 0; k < 3; ++k)
        roots[static_cast<std::size_t>(k)] =
            m * std::cos(phi - 2.0 * std::numbers::pi * k / 3.0) - a2 / 3.0;
    std::sort(roots.begin(), roots.end(), std::greater<>());
    return roots;
}

inline Matrix random_complex(std::mt19937& rng, Eigen::Index rows, Eigen::Index cols) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = Complex(gauss(rng), gauss(rng));
    return m;
}

inline Matrix random_hermitian(std::mt19937& rng, Eigen::Index dim) {
    const Matrix a = random_complex(rng, dim, dim);
    return 0.5 * (a + a.adjoint());
}

inline Matrix random_density(std::mt19937& rng, Eigen::Index dim) {
    const Matrix g = random_complex(rng, dim, dim);
    Matrix rho = g * g.adjoint();
    rho /= rho.trace();
    return rho;
}

inline Matrix random_unitary(std::mt19937& rng, Eigen::Index dim) {
    const Matrix a = random_complex(rng, dim, dim);
    Eigen::HouseholderQR<Matrix> qr(a);
    return qr.householderQ();
}

inline pmode::XState random_x_state(std::mt19937& rng) {
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    double r11 = uni(rng) + 1e-3, r22 = uni(rng), r44 = uni(rng) + 1e-3;
    const double norm = r11 + 2.0 * r22 + r44;
    r11 /= norm;
    r22 /= norm;
    r44 /= norm;
    pmode::XState x;
    x.r11 = r11;
    x.r22 = r22;
    x.r33 = r22;
    x.r44 = 1.0 - r11 - 2.0 * r22;
    x.r14 = std::polar(uni(rng) * std::sqrt(x.r11 * x.r44), 2.0 * std::numbers::pi * uni(rng));
    return x;
}

} // namespace oracles
