// spectral.hpp — Structured-environment spectral densities and their exact
// pseudomode networks.
//
// Four families are supported, all centered at omega_c and parameterized in
// units of the atom-pseudomode coupling Omega:
//   single Lorentzian   G / ((w-wc)^2 + (G/2)^2)
//   squared Lorentzian  (G^3/2) / ((w-wc)^2 + (G/2)^2)^2
//   two Lorentzians     sum of weighted Lorentzians, W1 + W2 = 1
//   band gap            difference of same-center Lorentzians, W1 - W2 = 1
// Each family maps exactly onto one or two damped pseudomodes; the atom then
// couples coherently to the network while the modes decay into flat baths.

#pragma once

#include <string>
#include <vector>

#include "pmode/types.hpp"

namespace pmode {

struct SpectralModel {
    enum class Kind { SingleLorentzian, SquaredLorentzian, TwoLorentzian, BandGap };

    Kind kind = Kind::SingleLorentzian;
    double omega_c = 0.0; // center frequency; figures only ever use offsets from it
    double gamma = 0.0;   // width (single / squared Lorentzian)
    double gamma1 = 0.0;  // widths and weights (two-Lorentzian / band-gap)
    double gamma2 = 0.0;
    double w1 = 0.0;
    double w2 = 0.0;

    static SpectralModel single_lorentzian(double gamma, double omega_c = 0.0);
    static SpectralModel squared_lorentzian(double gamma, double omega_c = 0.0);
    // Default weights are the symmetric mixture W1 = W2 = 1/2.
    static SpectralModel two_lorentzian(double gamma1, double gamma2, double w1 = 0.5,
                                        double omega_c = 0.0);
    // Default weights W1 = G1/(G1-G2), W2 = G2/(G1-G2) zero the density at the
    // center (a perfect gap). Pass w1 explicitly to override; w2 = w1 - 1.
    static SpectralModel band_gap(double gamma1, double gamma2, double w1 = -1.0,
                                  double omega_c = 0.0);

    // Throws std::invalid_argument when widths or weights violate the family
    // constraints (positive widths; W1+W2=1 for TL; W1-W2=1, G2<G1 for BG).
    void validate() const;

    std::string kind_name() const;
};

// Discrete system equivalent to a structured environment: mode frequencies,
// decay rates (in the -(rate/2)[n rho - 2 a rho a+ + rho n] convention),
// atom-mode couplings and an optional mode-mode coupling V.
struct PseudomodeNetwork {
    int mode_count = 0;
    std::vector<double> mode_freqs;
    std::vector<double> decay_rates;
    std::vector<Complex> atom_couplings;
    double intermode_coupling = 0.0;
};

// Evaluate the closed-form spectral density D(omega). Result is >= 0 for any
// model passing validate().
double density(const SpectralModel& model, double omega);

// Derive the exact pseudomode network for the model. `atom_coupling` is the
// overall coupling strength Omega. Throws if a derived decay rate is negative.
PseudomodeNetwork to_pseudomodes(const SpectralModel& model, double atom_coupling = 1.0);

} // namespace pmode
