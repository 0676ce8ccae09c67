// dynamics.hpp — Atom-pseudomode Lindblad systems and their time evolution.
//
// The Hamiltonian is built in the frame rotating at the atomic frequency, so
// only the detuning Delta = omega_c - omega_0 appears:
//   H = Delta * sum_k n_k + sum_k (g_k sigma+ a_k + h.c.) + V (a1+ a2 + a1 a2+)
// and each mode k decays with its network rate through
//   (rate_k/2) (2 a_k rho a_k+ - n_k rho - rho n_k).

#pragma once

#include <optional>
#include <vector>

#include "pmode/spectral.hpp"
#include "pmode/types.hpp"

namespace pmode {

struct LindbladSystem {
    struct Collapse {
        Matrix op;   // lowering operator on one mode, embedded in the full space
        double rate; // >= 0
    };

    Matrix hamiltonian;
    std::vector<Collapse> collapse_ops;
    std::vector<Eigen::Index> dims; // {2, n_max+1 per mode}

    Eigen::Index dimension() const { return hamiltonian.rows(); }
};

// Per-grid-point observables of one master-equation run.
struct EvolutionRecord {
    std::vector<double> times;
    std::vector<double> b_magnitude_sq;    // <e,vac| rho |e,vac>
    std::vector<double> atom_excited_pop;  // tr[rho (|e><e| x 1)]
    std::vector<double> total_excitation;  // tr[rho (sigma+sigma- + sum n_k)]
    std::optional<std::vector<Matrix>> full_states;
};

// Assemble the Lindblad system for a pseudomode network at given detuning.
LindbladSystem build_system(const PseudomodeNetwork& network, double detuning,
                            int fock_cutoff = 1);

// |e, vac><e, vac| and |g, vac><g, vac| on the system's full space.
Matrix excited_vacuum_state(const LindbladSystem& system);
Matrix ground_vacuum_state(const LindbladSystem& system);

// Integrate d rho/dt = -i[H, rho] + dissipators over the grid with an adaptive
// embedded Runge-Kutta 5(4) pair (Dormand-Prince), local tolerance `tol` used
// both absolutely and relatively; grid values come from 4th-order dense
// output. Throws on step-size underflow, on trace drift beyond 1e-7, and on
// single-excitation sector leakage beyond 1e-10 (which signals that the Fock
// cutoff is too small for the initial state).
EvolutionRecord evolve(const LindbladSystem& system, const Matrix& initial,
                       const std::vector<double>& t_grid, double tol = 1e-10,
                       bool store_states = false);

// Excited-state amplitude via the single-excitation non-Hermitian amplitude
// ODE, propagated with matrix exponentials. Valid because every generator
// here conserves excitation number and the initial state holds one quantum;
// serves as an integrator-independent cross-check of evolve().
std::vector<Complex> amplitude_ode_oracle(const PseudomodeNetwork& network, double detuning,
                                          const std::vector<double>& t_grid);

} // namespace pmode
