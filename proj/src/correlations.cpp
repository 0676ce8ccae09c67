#include "pmode/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

#include "pmode/qmath.hpp"

namespace pmode {

namespace {

constexpr double kPi = std::numbers::pi;

// Entropy in bits of a 2x2 Hermitian block given its trace and determinant.
double block_entropy(double trace, double det) {
    const double disc = std::max(trace * trace - 4.0 * det, 0.0);
    const double root = std::sqrt(disc);
    const double l1 = std::max(0.5 * (trace + root), 0.0);
    const double l2 = std::max(0.5 * (trace - root), 0.0);
    double s = 0.0;
    if (l1 > 0.0) s -= l1 * std::log2(l1);
    if (l2 > 0.0) s -= l2 * std::log2(l2);
    return s;
}

// Golden-section minimum of f on [lo, hi] down to an `xtol` window.
double golden_min(const std::function<double(double)>& f, double lo, double hi, double xtol) {
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > xtol) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        }
    }
    return f1 <= f2 ? x1 : x2;
}

} // namespace

Matrix XState::to_matrix() const {
    Matrix rho = Matrix::Zero(4, 4);
    rho(0, 0) = r11;
    rho(1, 1) = r22;
    rho(2, 2) = r33;
    rho(3, 3) = r44;
    rho(0, 3) = r14;
    rho(3, 0) = std::conj(r14);
    return rho;
}

void XState::validate() const {
    const double pops[4] = {r11, r22, r33, r44};
    for (double p : pops)
        if (p < -1e-10) throw std::invalid_argument("XState: negative population");
    if (std::abs(r11 + r22 + r33 + r44 - 1.0) > 1e-9)
        throw std::invalid_argument("XState: populations do not sum to one");
    if (std::abs(r22 - r33) > 1e-9)
        throw std::invalid_argument("XState: r22 and r33 must coincide");
    if (std::norm(r14) > r11 * r44 + 1e-10)
        throw std::invalid_argument("XState: coherence violates positivity");
}

XState assemble_two_qubit(double theta, Complex b) {
    const double p = std::norm(b);
    if (p > 1.0 + 1e-9)
        throw std::invalid_argument("assemble_two_qubit: |b| exceeds one beyond tolerance");
    const double pc = std::min(p, 1.0);
    const double s = std::sin(theta) * std::sin(theta);

    XState x;
    x.r44 = s * pc * pc;
    x.r22 = s * pc * (1.0 - pc);
    x.r33 = x.r22;
    x.r11 = 1.0 - 2.0 * x.r22 - x.r44;
    x.r14 = std::cos(theta) * std::sin(theta) * b * b;
    return x;
}

double conditional_entropy(const XState& state, double polar, double azimuth) {
    const double c = std::cos(polar);
    const double s = std::sin(polar);
    const Complex phase = std::polar(1.0, azimuth);

    double result = 0.0;
    for (int sign = 0; sign < 2; ++sign) {
        const double sg = sign == 0 ? 1.0 : -1.0;
        // Unnormalized post-measurement block on A.
        const double a_gg = 0.5 * (state.r11 * (1.0 + sg * c) + state.r22 * (1.0 - sg * c));
        const double a_ee = 0.5 * (state.r33 * (1.0 + sg * c) + state.r44 * (1.0 - sg * c));
        const Complex off = 0.5 * sg * s * phase * state.r14;
        const double prob = a_gg + a_ee;
        if (prob <= 1e-15) continue;
        const double det = a_gg * a_ee - std::norm(off);
        // S(M/p) = S(M)/p + log2 p, so the probability-weighted term is
        // S(M) + p log2 p.
        result += block_entropy(prob, det) + prob * std::log2(prob);
    }
    return result;
}

DiscordResult discord(const XState& state) {
    state.validate();

    const double q_b = state.r11 + state.r33; // B marginal, |g> population
    const double q_a = state.r11 + state.r22; // A marginal
    const double s_b = binary_entropy(q_b);
    const double s_a = binary_entropy(q_a);
    const double s_ab = von_neumann_entropy(state.to_matrix());

    auto cond = [&](double polar, double azimuth) {
        return conditional_entropy(state, polar, azimuth);
    };

    // Closed-form candidate bases.
    double best = cond(0.0, 0.0);
    double best_polar = 0.0, best_azimuth = 0.0;
    const double sx = cond(kPi / 2.0, 0.0);
    if (sx < best) {
        best = sx;
        best_polar = kPi / 2.0;
    }

    // Angular grid, then golden-section coordinate descent around the best cell.
    constexpr int kPolarGrid = 64, kAzimuthGrid = 32;
    double grid_best = best, grid_polar = best_polar, grid_azimuth = best_azimuth;
    for (int i = 0; i < kPolarGrid; ++i) {
        const double polar = kPi * (static_cast<double>(i) + 0.5) / kPolarGrid;
        for (int j = 0; j < kAzimuthGrid; ++j) {
            const double azimuth = 2.0 * kPi * static_cast<double>(j) / kAzimuthGrid;
            const double v = cond(polar, azimuth);
            if (v < grid_best) {
                grid_best = v;
                grid_polar = polar;
                grid_azimuth = azimuth;
            }
        }
    }

    const double dp = kPi / kPolarGrid;
    const double da = 2.0 * kPi / kAzimuthGrid;
    double polar = grid_polar, azimuth = grid_azimuth;
    for (int round = 0; round < 3; ++round) {
        polar = golden_min([&](double x) { return cond(x, azimuth); },
                           std::max(0.0, polar - dp), std::min(kPi, polar + dp), 1e-8);
        azimuth = golden_min([&](double x) { return cond(polar, x); }, azimuth - da,
                             azimuth + da, 1e-8);
    }
    if (grid_best < best) {
        best = grid_best;
        best_polar = grid_polar;
        best_azimuth = grid_azimuth;
    }
    const double refined = cond(polar, azimuth);
    if (refined < best) {
        best = refined;
        best_polar = polar;
        best_azimuth = azimuth;
    }

    DiscordResult out;
    out.mutual_information = s_a + s_b - s_ab;
    out.classical_correlation = s_a - best;
    out.discord = s_b - s_ab + best;
    out.optimal_polar = best_polar;
    out.optimal_azimuth = best_azimuth;
    return out;
}

std::vector<double> trace_distance_series(const EvolutionRecord& excited,
                                          const EvolutionRecord& ground) {
    if (excited.times.size() != ground.times.size())
        throw std::invalid_argument("trace_distance_series: grid size mismatch");
    for (std::size_t i = 0; i < excited.times.size(); ++i)
        if (excited.times[i] != ground.times[i])
            throw std::invalid_argument("trace_distance_series: grids differ");
    if (excited.b_magnitude_sq.empty() || std::abs(excited.b_magnitude_sq.front() - 1.0) > 1e-9)
        throw std::invalid_argument("trace_distance_series: first record must start from |e,vac>");
    if (!excited.full_states || !ground.full_states)
        throw std::invalid_argument("trace_distance_series: records must carry stored states");

    const std::vector<double>& series = excited.b_magnitude_sq;

    // Cross-check |b|^2 against the trace-norm distance of the reduced atom
    // states on 20 sampled grid points.
    const std::size_t n = series.size();
    const auto& rho_e = *excited.full_states;
    const auto& rho_g = *ground.full_states;
    const Eigen::Index dim = rho_e.front().rows();
    // For the reduction onto the atom the modes can be lumped into one
    // composite subsystem.
    const std::vector<Eigen::Index> dims = {2, dim / 2};

    const int samples = 20;
    for (int i = 0; i < samples; ++i) {
        const std::size_t k =
            n == 1 ? 0 : static_cast<std::size_t>(std::llround(
                             static_cast<double>(i) * static_cast<double>(n - 1) / (samples - 1)));
        const Matrix a = partial_trace(rho_e[k], dims, {0});
        const Matrix b = partial_trace(rho_g[k], dims, {0});
        const double d = trace_norm_distance(a, b);
        if (std::abs(d - series[k]) > 1e-8)
            throw std::runtime_error("trace_distance_series: |b|^2 disagrees with the "
                                     "trace-norm distance of the reduced states");
    }
    return series;
}

NonMarkovResult non_markovianity(const std::vector<double>& times,
                                 const std::vector<double>& distances) {
    if (times.size() != distances.size())
        throw std::invalid_argument("non_markovianity: series length mismatch");
    if (times.size() < 2) throw std::invalid_argument("non_markovianity: need at least 2 samples");
    for (std::size_t i = 1; i < times.size(); ++i)
        if (times[i] <= times[i - 1])
            throw std::invalid_argument("non_markovianity: time grid must be increasing");

    // Parabolic vertex through three samples around index k; falls back to the
    // sample itself at boundaries or for degenerate curvature.
    auto refine = [&](std::size_t k) -> std::pair<double, double> {
        if (k == 0 || k + 1 >= times.size()) return {times[k], distances[k]};
        const double t0 = times[k - 1], t1 = times[k], t2 = times[k + 1];
        const double d0 = distances[k - 1], d1 = distances[k], d2 = distances[k + 1];
        // Quadratic through the three points (Newton form).
        const double s01 = (d1 - d0) / (t1 - t0);
        const double s12 = (d2 - d1) / (t2 - t1);
        const double curv = (s12 - s01) / (t2 - t0);
        if (curv == 0.0) return {t1, d1};
        const double tv = 0.5 * (t0 + t1 - s01 / curv);
        if (tv < t0 || tv > t2) return {t1, d1};
        const double dv = d0 + s01 * (tv - t0) + curv * (tv - t0) * (tv - t1);
        return {tv, dv};
    };

    NonMarkovResult out;
    out.trace_distance_series = distances;

    const std::size_t n = times.size();
    std::size_t k = 0;
    while (k + 1 < n) {
        if (distances[k + 1] > distances[k]) {
            const std::size_t start = k;
            while (k + 1 < n && distances[k + 1] > distances[k]) ++k;
            const std::size_t end = k;

            // The samples clip the true extrema; the parabolic vertices
            // recover the part of the growth the grid missed.
            const auto [t_lo, d_lo] = refine(start);
            const auto [t_hi, d_hi] = refine(end);
            GrowthInterval gi;
            gi.t_start = t_lo;
            gi.t_end = t_hi;
            gi.d_start = std::min(d_lo, distances[start]);
            gi.d_end = std::max(d_hi, distances[end]);
            out.growth_intervals.push_back(gi);
            out.measure += gi.d_end - gi.d_start;
        } else {
            ++k;
        }
    }
    return out;
}

} // namespace pmode
