#include <doctest.h>

#include <random>

#include "pmode/ops.hpp"
#include "pmode/qmath.hpp"

#include "oracles.hpp"

using namespace pmode;

TEST_CASE("kron basics") {
    const Matrix i2 = ops::identity(2);
    CHECK((kron(i2, i2) - ops::identity(4)).norm() == doctest::Approx(0.0));

    // sigma+ x 1 maps |g,0> to |e,0>
    Vector g0 = Vector::Zero(4);
    g0(0) = 1.0;
    Vector e0 = Vector::Zero(4);
    e0(2) = 1.0;
    CHECK((kron(ops::sigma_plus(), i2) * g0 - e0).norm() == doctest::Approx(0.0));

    Matrix a = Matrix::Zero(2, 2), b = Matrix::Zero(2, 2);
    a.diagonal() << 1.0, 2.0;
    b.diagonal() << 3.0, 4.0;
    Matrix expected = Matrix::Zero(4, 4);
    expected.diagonal() << 3.0, 4.0, 6.0, 8.0;
    CHECK((kron(a, b) - expected).norm() == doctest::Approx(0.0));
}

TEST_CASE("kron accepts expressions") {
    const Matrix i2 = ops::identity(2);
    const Matrix direct = kron(2.0 * i2, i2 + i2);
    CHECK((direct - 4.0 * ops::identity(4)).norm() == doctest::Approx(0.0));
}

TEST_CASE("partial trace on product and entangled states") {
    // |e,0><e,0| reduced over the mode leaves |e><e|.
    Vector e0 = Vector::Zero(4);
    e0(2) = 1.0;
    Matrix rho = e0 * e0.adjoint();
    Matrix atom = partial_trace(rho, {2, 2}, {0});
    CHECK(atom(1, 1).real() == doctest::Approx(1.0));
    CHECK(atom.trace().real() == doctest::Approx(1.0));

    // Maximally entangled pair reduces to I/2 on either side.
    Vector bell = Vector::Zero(4);
    bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
    Matrix rho_bell = bell * bell.adjoint();
    for (int keep : {0, 1}) {
        Matrix red = partial_trace(rho_bell, {2, 2}, {keep});
        CHECK((red - 0.5 * ops::identity(2)).norm() < 1e-12);
    }

    // (|e0> + |g1>)/sqrt(2): single excitation shared between atom and mode.
    Vector shared = Vector::Zero(4);
    shared(2) = shared(1) = 1.0 / std::sqrt(2.0);
    Matrix red = partial_trace(shared * shared.adjoint(), {2, 2}, {1});
    CHECK(red(0, 0).real() == doctest::Approx(0.5));
    CHECK(red(1, 1).real() == doctest::Approx(0.5));
    CHECK(std::abs(red(0, 1)) < 1e-14);
}

TEST_CASE("partial trace validates dimensions") {
    CHECK_THROWS_AS(partial_trace(ops::identity(4), {2, 3}, {0}), std::invalid_argument);
    CHECK_THROWS_AS(partial_trace(ops::identity(4), {2, 2}, {5}), std::invalid_argument);
}

TEST_CASE("partial trace preserves trace on random inputs") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 30; ++trial) {
        Matrix h = oracles::random_hermitian(rng, 8);
        Matrix red = partial_trace(h, {2, 2, 2}, {0, 2});
        CHECK(std::abs(red.trace() - h.trace()) < 1e-12);
    }
}

TEST_CASE("hermitian_eig: known spectra") {
    auto spec = hermitian_eig(ops::identity(2));
    CHECK(spec.eigenvalues(0) == doctest::Approx(1.0));
    CHECK(spec.eigenvalues(1) == doctest::Approx(1.0));

    auto sx = hermitian_eig(ops::sigma_x());
    CHECK(sx.eigenvalues(0) == doctest::Approx(1.0));
    CHECK(sx.eigenvalues(1) == doctest::Approx(-1.0));
}

TEST_CASE("hermitian_eig matches characteristic-polynomial roots") {
    Matrix m(3, 3);
    m << Complex(4.0, 0.0), Complex(1.0, 0.0), Complex(0.5, 0.0),
         Complex(1.0, 0.0), Complex(3.0, 0.0), Complex(0.25, 0.0),
         Complex(0.5, 0.0), Complex(0.25, 0.0), Complex(2.0, 0.0);
    // det(xI - m) = x^3 + a2 x^2 + a1 x + a0
    const double tr = m.trace().real();
    const double sum2 = ((m * m).trace().real());
    const double det = m.determinant().real();
    const double a2 = -tr;
    const double a1 = 0.5 * (tr * tr - sum2);
    const double a0 = -det;
    const auto roots = oracles::real_cubic_roots(a2, a1, a0);

    const auto spec = hermitian_eig(m);
    for (int i = 0; i < 3; ++i)
        CHECK(spec.eigenvalues(i) == doctest::Approx(roots[static_cast<std::size_t>(i)]).epsilon(1e-10));
}

TEST_CASE("hermitian_eig reconstruction and orthonormality on random matrices") {
    std::mt19937 rng(777);
    for (Eigen::Index dim : {2, 4, 7, 16}) {
        for (int trial = 0; trial < 10; ++trial) {
            Matrix h = oracles::random_hermitian(rng, dim);
            auto spec = hermitian_eig(h);
            CHECK((spec.reconstruct() - h).norm() < 1e-10);
            CHECK((spec.eigenvectors.adjoint() * spec.eigenvectors - ops::identity(dim)).norm() <
                  1e-10);
            for (Eigen::Index i = 1; i < dim; ++i)
                CHECK(spec.eigenvalues(i) <= spec.eigenvalues(i - 1) + 1e-14);
        }
    }
}

TEST_CASE("hermitian_eig rejects non-Hermitian input") {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 1) = 1.0;
    CHECK_THROWS_AS(hermitian_eig(m), std::invalid_argument);
}

TEST_CASE("von Neumann entropy reference values") {
    // Pure state.
    Vector v = Vector::Zero(2);
    v(0) = 1.0;
    CHECK(von_neumann_entropy(v * v.adjoint()) == doctest::Approx(0.0).epsilon(1e-12));

    CHECK(von_neumann_entropy(0.5 * ops::identity(2)) == doctest::Approx(1.0));

    Matrix d = Matrix::Zero(2, 2);
    d.diagonal() << 0.25, 0.75;
    CHECK(von_neumann_entropy(d) == doctest::Approx(0.811278).epsilon(1e-6));
    CHECK(von_neumann_entropy(d) == doctest::Approx(binary_entropy(0.25)).epsilon(1e-12));
}

TEST_CASE("entropy rejects unnormalized or indefinite input") {
    CHECK_THROWS_AS(von_neumann_entropy(ops::identity(2)), std::invalid_argument);
    Matrix bad = Matrix::Zero(2, 2);
    bad.diagonal() << 1.2, -0.2;
    CHECK_THROWS_AS(von_neumann_entropy(bad), std::invalid_argument);
}

TEST_CASE("entropy is unitarily invariant") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 10; ++trial) {
        Matrix rho = oracles::random_density(rng, 4);
        Matrix u = oracles::random_unitary(rng, 4);
        const double s0 = von_neumann_entropy(rho);
        const double s1 = von_neumann_entropy(u * rho * u.adjoint());
        CHECK(s1 == doctest::Approx(s0).epsilon(1e-9));
    }
}

TEST_CASE("trace norm distance reference values") {
    Matrix e = Matrix::Zero(2, 2), g = Matrix::Zero(2, 2);
    e(1, 1) = 1.0;
    g(0, 0) = 1.0;
    CHECK(trace_norm_distance(e, e) == doctest::Approx(0.0));
    CHECK(trace_norm_distance(e, g) == doctest::Approx(1.0));
    CHECK(trace_norm_distance(e, 0.5 * ops::identity(2)) == doctest::Approx(0.5));
    CHECK_THROWS_AS(trace_norm_distance(e, ops::identity(3)), std::invalid_argument);
}

TEST_CASE("trace norm distance: symmetry and triangle inequality") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix a = oracles::random_density(rng, 4);
        Matrix b = oracles::random_density(rng, 4);
        Matrix c = oracles::random_density(rng, 4);
        const double dab = trace_norm_distance(a, b);
        const double dba = trace_norm_distance(b, a);
        const double dac = trace_norm_distance(a, c);
        const double dcb = trace_norm_distance(c, b);
        CHECK(dab == doctest::Approx(dba).epsilon(1e-10));
        CHECK(dab <= dac + dcb + 1e-10);
        CHECK(dab >= -1e-12);
        CHECK(dab <= 1.0 + 1e-10);
    }
}
