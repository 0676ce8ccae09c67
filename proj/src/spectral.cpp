#include "pmode/spectral.hpp"

#include <cmath>
#include <stdexcept>

namespace pmode {

namespace {

double lorentzian(double gamma, double x) {
    return gamma / (x * x + 0.25 * gamma * gamma);
}

// Snap rounding residue of an analytically-zero rate to exactly zero.
double snap_rate(double rate, double scale) {
    return std::abs(rate) <= 1e-12 * scale ? 0.0 : rate;
}

} // namespace

SpectralModel SpectralModel::single_lorentzian(double gamma, double omega_c) {
    SpectralModel m;
    m.kind = Kind::SingleLorentzian;
    m.gamma = gamma;
    m.omega_c = omega_c;
    m.validate();
    return m;
}

SpectralModel SpectralModel::squared_lorentzian(double gamma, double omega_c) {
    SpectralModel m;
    m.kind = Kind::SquaredLorentzian;
    m.gamma = gamma;
    m.omega_c = omega_c;
    m.validate();
    return m;
}

SpectralModel SpectralModel::two_lorentzian(double gamma1, double gamma2, double w1,
                                            double omega_c) {
    SpectralModel m;
    m.kind = Kind::TwoLorentzian;
    m.gamma1 = gamma1;
    m.gamma2 = gamma2;
    m.w1 = w1;
    m.w2 = 1.0 - w1;
    m.omega_c = omega_c;
    m.validate();
    return m;
}

SpectralModel SpectralModel::band_gap(double gamma1, double gamma2, double w1, double omega_c) {
    SpectralModel m;
    m.kind = Kind::BandGap;
    m.gamma1 = gamma1;
    m.gamma2 = gamma2;
    if (w1 < 0.0) {
        if (gamma1 <= gamma2)
            throw std::invalid_argument("band_gap: perfect-gap weights need gamma2 < gamma1");
        m.w1 = gamma1 / (gamma1 - gamma2);
    } else {
        m.w1 = w1;
    }
    m.w2 = m.w1 - 1.0;
    m.omega_c = omega_c;
    m.validate();
    return m;
}

void SpectralModel::validate() const {
    switch (kind) {
    case Kind::SingleLorentzian:
    case Kind::SquaredLorentzian:
        if (gamma <= 0.0) throw std::invalid_argument("spectral model: width must be positive");
        break;
    case Kind::TwoLorentzian:
        if (gamma1 <= 0.0 || gamma2 <= 0.0)
            throw std::invalid_argument("spectral model: widths must be positive");
        if (std::abs(w1 + w2 - 1.0) > 1e-9 || w1 <= 0.0 || w1 >= 1.0 || w2 <= 0.0 || w2 >= 1.0)
            throw std::invalid_argument("two_lorentzian: weights must lie in (0,1) with W1+W2=1");
        break;
    case Kind::BandGap:
        if (gamma1 <= 0.0 || gamma2 <= 0.0)
            throw std::invalid_argument("spectral model: widths must be positive");
        if (std::abs(w1 - w2 - 1.0) > 1e-9 || w2 <= 0.0)
            throw std::invalid_argument("band_gap: weights must satisfy W1-W2=1 with W2>0");
        if (gamma2 >= gamma1)
            throw std::invalid_argument("band_gap: gamma2 < gamma1 required for positivity");
        break;
    }
}

std::string SpectralModel::kind_name() const {
    switch (kind) {
    case Kind::SingleLorentzian: return "single_lorentzian";
    case Kind::SquaredLorentzian: return "squared_lorentzian";
    case Kind::TwoLorentzian: return "two_lorentzian";
    case Kind::BandGap: return "band_gap";
    }
    return "unknown";
}

double density(const SpectralModel& model, double omega) {
    model.validate();
    const double x = omega - model.omega_c;
    switch (model.kind) {
    case SpectralModel::Kind::SingleLorentzian:
        return lorentzian(model.gamma, x);
    case SpectralModel::Kind::SquaredLorentzian: {
        const double denom = x * x + 0.25 * model.gamma * model.gamma;
        return 0.5 * model.gamma * model.gamma * model.gamma / (denom * denom);
    }
    case SpectralModel::Kind::TwoLorentzian:
        return model.w1 * lorentzian(model.gamma1, x) + model.w2 * lorentzian(model.gamma2, x);
    case SpectralModel::Kind::BandGap:
        return model.w1 * lorentzian(model.gamma1, x) - model.w2 * lorentzian(model.gamma2, x);
    }
    return 0.0;
}

PseudomodeNetwork to_pseudomodes(const SpectralModel& model, double atom_coupling) {
    model.validate();
    const double omega = atom_coupling;
    PseudomodeNetwork net;

    switch (model.kind) {
    case SpectralModel::Kind::SingleLorentzian:
        net.mode_count = 1;
        net.mode_freqs = {model.omega_c};
        net.decay_rates = {model.gamma};
        net.atom_couplings = {Complex(omega, 0.0)};
        net.intermode_coupling = 0.0;
        break;

    case SpectralModel::Kind::TwoLorentzian:
        net.mode_count = 2;
        net.mode_freqs = {model.omega_c, model.omega_c};
        net.decay_rates = {model.gamma1, model.gamma2};
        net.atom_couplings = {Complex(omega * std::sqrt(model.w1), 0.0),
                              Complex(omega * std::sqrt(model.w2), 0.0)};
        net.intermode_coupling = 0.0;
        break;

    case SpectralModel::Kind::BandGap: {
        const double scale = std::max(model.gamma1, model.gamma2);
        const double rate1 = snap_rate(model.w1 * model.gamma2 - model.w2 * model.gamma1, scale);
        const double rate2 = snap_rate(model.w1 * model.gamma1 - model.w2 * model.gamma2, scale);
        if (rate1 < 0.0 || rate2 < 0.0)
            throw std::invalid_argument(
                "band_gap: weight/width combination yields a negative pseudomode rate");
        net.mode_count = 2;
        net.mode_freqs = {model.omega_c, model.omega_c};
        net.decay_rates = {rate1, rate2};
        // The atom talks only to the second mode; the first is reached via V.
        net.atom_couplings = {Complex(0.0, 0.0), Complex(omega, 0.0)};
        net.intermode_coupling =
            std::sqrt(model.w1 * model.w2) * (model.gamma1 - model.gamma2) * 0.5;
        break;
    }

    case SpectralModel::Kind::SquaredLorentzian:
        net.mode_count = 2;
        net.mode_freqs = {model.omega_c, model.omega_c};
        // The dissipator carries a bare Gamma prefactor on the Lindblad
        // bracket, i.e. rate 2*Gamma in the uniform -(rate/2)[...] form.
        net.decay_rates = {2.0 * model.gamma, 0.0};
        net.atom_couplings = {Complex(0.0, 0.0), Complex(omega, 0.0)};
        net.intermode_coupling = 0.5 * model.gamma;
        break;
    }
    return net;
}

} // namespace pmode
