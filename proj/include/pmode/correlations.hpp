// correlations.hpp — Two-qubit X states, quantum discord and the BLP
// non-Markovianity measure built on the trace-distance series.

#pragma once

#include <vector>

#include "pmode/dynamics.hpp"
#include "pmode/types.hpp"

namespace pmode {

// X-structured two-qubit density matrix in the basis {gg, ge, eg, ee}. The
// only off-diagonal element is the gg-ee coherence r14; the construction used
// here additionally forces r22 = r33.
struct XState {
    double r11 = 1.0;
    double r22 = 0.0;
    double r33 = 0.0;
    double r44 = 0.0;
    Complex r14 = 0.0;

    Matrix to_matrix() const;
    // Throws std::invalid_argument on broken population/positivity invariants.
    void validate() const;
};

struct DiscordResult {
    double discord = 0.0;                // bits
    double classical_correlation = 0.0;  // bits
    double mutual_information = 0.0;     // bits
    double optimal_polar = 0.0;          // measurement direction on B
    double optimal_azimuth = 0.0;
};

struct GrowthInterval {
    double t_start = 0.0; // parabola-refined interval endpoints
    double t_end = 0.0;
    double d_start = 0.0; // refined trace-distance values at those endpoints
    double d_end = 0.0;
};

struct NonMarkovResult {
    double measure = 0.0; // N(Phi): summed trace-distance growth
    std::vector<GrowthInterval> growth_intervals;
    std::vector<double> trace_distance_series;
};

// State of two qubits prepared in cos(theta)|gg> + sin(theta)|ee> after each
// qubit passed its own amplitude-damping channel with survival amplitude b.
XState assemble_two_qubit(double theta, Complex b);

// Conditional entropy of A after a von Neumann measurement of B along the
// Bloch direction (polar, azimuth), in bits.
double conditional_entropy(const XState& state, double polar, double azimuth);

// Quantum discord with measurement on subsystem B. The minimization evaluates
// the sigma_z / sigma_x closed-form candidates plus a 64x32 angular grid
// refined by golden-section coordinate descent to 1e-8.
DiscordResult discord(const XState& state);

// Trace distance D(t) between the channel outputs of |e><e| and |g><g|,
// which for these models equals |b(t)|^2. The two records must share a grid
// and carry stored states: 20 sampled points are cross-checked against the
// trace-norm distance of the reduced atom states to 1e-8.
std::vector<double> trace_distance_series(const EvolutionRecord& excited,
                                          const EvolutionRecord& ground);

// BLP non-Markovianity: detect the maximal growth intervals of the series,
// refine each interval's endpoints by local 3-point parabolic interpolation,
// and sum the refined increments D(b_i) - D(a_i). The refinement restores the
// peak/trough mass the sampling clips, which keeps the measure stable under
// grid refinement.
NonMarkovResult non_markovianity(const std::vector<double>& times,
                                 const std::vector<double>& distances);

} // namespace pmode
