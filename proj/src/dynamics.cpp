#include "pmode/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <unsupported/Eigen/MatrixFunctions>

#include "pmode/ops.hpp"
#include "pmode/qmath.hpp"

namespace pmode {

namespace {

// op acting on subsystem `pos`, identity elsewhere.
Matrix embed(const Matrix& op, const std::vector<Eigen::Index>& dims, int pos) {
    Matrix out = Matrix::Identity(1, 1);
    for (int i = 0; i < static_cast<int>(dims.size()); ++i) {
        if (i == pos)
            out = kron(out, op);
        else
            out = kron(out, ops::identity(dims[static_cast<std::size_t>(i)]));
    }
    return out;
}

struct Observables {
    Eigen::Index idx_e_vac = 0;
    std::vector<char> atom_excited;      // basis mask
    std::vector<double> excitation;      // excitation number per basis state
};

Observables make_observables(const LindbladSystem& sys) {
    Observables obs;
    const auto& dims = sys.dims;
    const Eigen::Index dim = sys.dimension();
    obs.atom_excited.assign(static_cast<std::size_t>(dim), 0);
    obs.excitation.assign(static_cast<std::size_t>(dim), 0.0);

    Eigen::Index mode_space = 1;
    for (std::size_t i = 1; i < dims.size(); ++i) mode_space *= dims[i];
    obs.idx_e_vac = mode_space; // atom digit 1, all modes in vacuum

    for (Eigen::Index g = 0; g < dim; ++g) {
        Eigen::Index rest = g;
        double exc = 0.0;
        for (int i = static_cast<int>(dims.size()) - 1; i >= 0; --i) {
            const Eigen::Index d = dims[static_cast<std::size_t>(i)];
            const Eigen::Index digit = rest % d;
            rest /= d;
            exc += static_cast<double>(digit);
            if (i == 0) obs.atom_excited[static_cast<std::size_t>(g)] = digit == 1 ? 1 : 0;
        }
        obs.excitation[static_cast<std::size_t>(g)] = exc;
    }
    return obs;
}

void record_point(EvolutionRecord& rec, const Observables& obs, double t, const Matrix& rho,
                  bool store_states, bool guard_sector) {
    const double b_sq = rho(obs.idx_e_vac, obs.idx_e_vac).real();
    if (b_sq < -1e-9) throw std::runtime_error("evolve: negative excited-state population");

    double atom_pop = 0.0, total_exc = 0.0, leaked = 0.0;
    for (Eigen::Index i = 0; i < rho.rows(); ++i) {
        const double p = rho(i, i).real();
        const std::size_t si = static_cast<std::size_t>(i);
        if (obs.atom_excited[si]) atom_pop += p;
        total_exc += obs.excitation[si] * p;
        if (obs.excitation[si] >= 2.0) leaked += p;
    }
    if (guard_sector && std::abs(leaked) > 1e-10)
        throw std::runtime_error("evolve: population leaked out of the single-excitation sector; "
                                 "raise the Fock cutoff");

    rec.times.push_back(t);
    rec.b_magnitude_sq.push_back(std::max(b_sq, 0.0));
    rec.atom_excited_pop.push_back(atom_pop);
    rec.total_excitation.push_back(total_exc);
    if (store_states) rec.full_states->push_back(rho);
}

// Dormand-Prince 5(4) tableau.
constexpr double A21 = 1.0 / 5.0;
constexpr double A31 = 3.0 / 40.0, A32 = 9.0 / 40.0;
constexpr double A41 = 44.0 / 45.0, A42 = -56.0 / 15.0, A43 = 32.0 / 9.0;
constexpr double A51 = 19372.0 / 6561.0, A52 = -25360.0 / 2187.0, A53 = 64448.0 / 6561.0,
                 A54 = -212.0 / 729.0;
constexpr double A61 = 9017.0 / 3168.0, A62 = -355.0 / 33.0, A63 = 46732.0 / 5247.0,
                 A64 = 49.0 / 176.0, A65 = -5103.0 / 18656.0;
constexpr double A71 = 35.0 / 384.0, A73 = 500.0 / 1113.0, A74 = 125.0 / 192.0,
                 A75 = -2187.0 / 6784.0, A76 = 11.0 / 84.0;
// Error weights (5th-order minus embedded 4th-order solution).
constexpr double E1 = 71.0 / 57600.0, E3 = -71.0 / 16695.0, E4 = 71.0 / 1920.0,
                 E5 = -17253.0 / 339200.0, E6 = 22.0 / 525.0, E7 = -1.0 / 40.0;
// Dense-output weights for the 4th-order continuous extension.
constexpr double D1 = -12715105075.0 / 11282082432.0;
constexpr double D3 = 87487479700.0 / 32700410799.0;
constexpr double D4 = -10690763975.0 / 1880347072.0;
constexpr double D5 = 701980252875.0 / 199316789632.0;
constexpr double D6 = -1453857185.0 / 822651844.0;
constexpr double D7 = 69997945.0 / 29380423.0;

} // namespace

LindbladSystem build_system(const PseudomodeNetwork& network, double detuning, int fock_cutoff) {
    if (fock_cutoff < 1) throw std::invalid_argument("build_system: fock_cutoff must be >= 1");
    if (network.mode_count < 1 || network.mode_count > 2)
        throw std::invalid_argument("build_system: one or two pseudomodes supported");

    LindbladSystem sys;
    sys.dims.push_back(2);
    for (int k = 0; k < network.mode_count; ++k) sys.dims.push_back(fock_cutoff + 1);

    Eigen::Index dim = 1;
    for (Eigen::Index d : sys.dims) dim *= d;
    sys.hamiltonian = Matrix::Zero(dim, dim);

    const Matrix sp = embed(ops::sigma_plus(), sys.dims, 0);
    std::vector<Matrix> lower(static_cast<std::size_t>(network.mode_count));
    for (int k = 0; k < network.mode_count; ++k) {
        const std::size_t sk = static_cast<std::size_t>(k);
        lower[sk] = embed(ops::lowering(fock_cutoff + 1), sys.dims, k + 1);
        const Matrix number = lower[sk].adjoint() * lower[sk];
        sys.hamiltonian += detuning * number;
        const Complex g = network.atom_couplings[sk];
        const Matrix exchange = g * (sp * lower[sk]);
        sys.hamiltonian += exchange + exchange.adjoint();
        sys.collapse_ops.push_back({lower[sk], network.decay_rates[sk]});
    }
    if (network.mode_count == 2 && network.intermode_coupling != 0.0) {
        const Matrix hop = network.intermode_coupling * (lower[0].adjoint() * lower[1]);
        sys.hamiltonian += hop + hop.adjoint();
    }
    return sys;
}

Matrix excited_vacuum_state(const LindbladSystem& system) {
    Matrix rho = Matrix::Zero(system.dimension(), system.dimension());
    Eigen::Index mode_space = 1;
    for (std::size_t i = 1; i < system.dims.size(); ++i) mode_space *= system.dims[i];
    rho(mode_space, mode_space) = 1.0;
    return rho;
}

Matrix ground_vacuum_state(const LindbladSystem& system) {
    Matrix rho = Matrix::Zero(system.dimension(), system.dimension());
    rho(0, 0) = 1.0;
    return rho;
}

EvolutionRecord evolve(const LindbladSystem& system, const Matrix& initial,
                       const std::vector<double>& t_grid, double tol, bool store_states) {
    if (t_grid.size() < 2) throw std::invalid_argument("evolve: grid needs at least two points");
    for (std::size_t i = 1; i < t_grid.size(); ++i)
        if (t_grid[i] <= t_grid[i - 1])
            throw std::invalid_argument("evolve: time grid must be strictly increasing");
    if (initial.rows() != system.dimension() || initial.cols() != system.dimension())
        throw std::invalid_argument("evolve: initial state dimension mismatch");
    if ((initial - initial.adjoint()).norm() > 1e-10)
        throw std::invalid_argument("evolve: initial state not Hermitian");
    if (std::abs(initial.trace().real() - 1.0) > 1e-9)
        throw std::invalid_argument("evolve: initial state trace deviates from one");
    if (tol <= 0.0) throw std::invalid_argument("evolve: tolerance must be positive");

    // Precompute dissipator pieces; zero-rate modes contribute nothing.
    struct Channel {
        Matrix a, ad, n;
        double rate;
    };
    std::vector<Channel> channels;
    for (const auto& c : system.collapse_ops) {
        if (c.rate < 0.0) throw std::invalid_argument("evolve: negative collapse rate");
        if (c.rate == 0.0) continue;
        channels.push_back({c.op, c.op.adjoint(), c.op.adjoint() * c.op, c.rate});
    }
    const Matrix& H = system.hamiltonian;
    const Complex minus_i(0.0, -1.0);

    auto rhs = [&](const Matrix& rho) {
        Matrix d = minus_i * (H * rho - rho * H);
        for (const auto& ch : channels) {
            d.noalias() += ch.rate * (ch.a * rho * ch.ad);
            d.noalias() -= (0.5 * ch.rate) * (ch.n * rho + rho * ch.n);
        }
        return d;
    };

    const Observables obs = make_observables(system);
    const bool guard_sector = [&] {
        double leaked = 0.0;
        for (Eigen::Index i = 0; i < initial.rows(); ++i)
            if (obs.excitation[static_cast<std::size_t>(i)] >= 2.0)
                leaked += initial(i, i).real();
        return std::abs(leaked) <= 1e-12;
    }();

    EvolutionRecord rec;
    if (store_states) rec.full_states.emplace();
    record_point(rec, obs, t_grid.front(), initial, store_states, guard_sector);

    const double t_end = t_grid.back();
    double t = t_grid.front();
    Matrix y = initial;
    std::size_t next_grid = 1;

    const double atol = tol, rtol = tol;
    auto error_norm = [&](const Matrix& err, const Matrix& y0, const Matrix& y1) {
        double acc = 0.0;
        const Eigen::Index dim = err.rows();
        for (Eigen::Index i = 0; i < dim; ++i)
            for (Eigen::Index j = 0; j < dim; ++j) {
                const double sc =
                    atol + rtol * std::max(std::abs(y0(i, j)), std::abs(y1(i, j)));
                const double e = std::abs(err(i, j)) / sc;
                acc += e * e;
            }
        return std::sqrt(acc / static_cast<double>(dim * dim));
    };

    Matrix k1 = rhs(y);
    double h = [&] {
        const double d0 = y.norm(), d1 = k1.norm();
        double h0 = d1 > 1e-12 ? 0.01 * (d0 + atol) / d1 : 1e-4 * (t_end - t);
        return std::min(h0, (t_end - t) / 10.0);
    }();

    bool just_rejected = false;
    while (t < t_end) {
        if (h < 1e-14 * std::max(1.0, std::abs(t)))
            throw std::runtime_error("evolve: step size underflow");
        if (t + h > t_end) h = t_end - t;

        const Matrix k2 = rhs(y + h * (A21 * k1));
        const Matrix k3 = rhs(y + h * (A31 * k1 + A32 * k2));
        const Matrix k4 = rhs(y + h * (A41 * k1 + A42 * k2 + A43 * k3));
        const Matrix k5 = rhs(y + h * (A51 * k1 + A52 * k2 + A53 * k3 + A54 * k4));
        const Matrix k6 = rhs(y + h * (A61 * k1 + A62 * k2 + A63 * k3 + A64 * k4 + A65 * k5));
        const Matrix y_new =
            y + h * (A71 * k1 + A73 * k3 + A74 * k4 + A75 * k5 + A76 * k6);
        const Matrix k7 = rhs(y_new);
        const Matrix err = h * (E1 * k1 + E3 * k3 + E4 * k4 + E5 * k5 + E6 * k6 + E7 * k7);

        const double en = error_norm(err, y, y_new);
        if (en <= 1.0) {
            // Accepted: serve every grid point inside (t, t+h] from the
            // quartic continuous extension.
            const Matrix ydiff = y_new - y;
            const Matrix rcont3 = h * k1 - ydiff;
            const Matrix rcont4 = ydiff - h * k7 - rcont3;
            const Matrix rcont5 =
                h * (D1 * k1 + D3 * k3 + D4 * k4 + D5 * k5 + D6 * k6 + D7 * k7);
            while (next_grid < t_grid.size() && t_grid[next_grid] <= t + h + 1e-14) {
                const double theta = std::clamp((t_grid[next_grid] - t) / h, 0.0, 1.0);
                const double theta1 = 1.0 - theta;
                const Matrix yg =
                    y + theta * (ydiff + theta1 * (rcont3 + theta * (rcont4 + theta1 * rcont5)));
                record_point(rec, obs, t_grid[next_grid], yg, store_states, guard_sector);
                ++next_grid;
            }
            if (next_grid == t_grid.size()) break;

            t += h;
            y = y_new;
            k1 = k7; // first-same-as-last
            if (std::abs(y.trace().real() - 1.0) > 1e-7)
                throw std::runtime_error("evolve: trace drift beyond tolerance (stiffness?)");

            const double facmax = just_rejected ? 1.0 : 5.0;
            h *= std::clamp(0.9 * std::pow(std::max(en, 1e-10), -0.2), 0.2, facmax);
            just_rejected = false;
        } else {
            h *= std::clamp(0.9 * std::pow(en, -0.2), 0.2, 1.0);
            just_rejected = true;
        }
    }

    if (next_grid != t_grid.size())
        throw std::runtime_error("evolve: internal error, grid not fully served");
    return rec;
}

std::vector<Complex> amplitude_ode_oracle(const PseudomodeNetwork& network, double detuning,
                                          const std::vector<double>& t_grid) {
    if (t_grid.empty()) return {};
    for (std::size_t i = 1; i < t_grid.size(); ++i)
        if (t_grid[i] <= t_grid[i - 1])
            throw std::invalid_argument("amplitude_ode_oracle: grid must be strictly increasing");

    const int m = network.mode_count;
    const Eigen::Index n = 1 + m;
    Matrix gen = Matrix::Zero(n, n); // effective non-Hermitian H in the 1-excitation sector
    for (int k = 0; k < m; ++k) {
        const std::size_t sk = static_cast<std::size_t>(k);
        gen(0, k + 1) = network.atom_couplings[sk];
        gen(k + 1, 0) = std::conj(network.atom_couplings[sk]);
        gen(k + 1, k + 1) = Complex(detuning, -0.5 * network.decay_rates[sk]);
    }
    if (m == 2) {
        gen(1, 2) += network.intermode_coupling;
        gen(2, 1) += network.intermode_coupling;
    }

    Vector c = Vector::Zero(n);
    c(0) = 1.0;
    std::vector<Complex> out;
    out.reserve(t_grid.size());
    out.push_back(c(0));
    for (std::size_t i = 1; i < t_grid.size(); ++i) {
        const double dt = t_grid[i] - t_grid[i - 1];
        const Matrix propagator = (Complex(0.0, -1.0) * dt * gen).exp();
        c = propagator * c;
        out.push_back(c(0));
    }
    return out;
}

} // namespace pmode
