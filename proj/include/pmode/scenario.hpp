// scenario.hpp — Scenario configuration, the spectral->dynamics->correlations
// pipeline, and parameter sweeps.

#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pmode/correlations.hpp"
#include "pmode/spectral.hpp"

namespace pmode {

enum class OutputKind { Discord, TraceDistance, NonMarkovianity, SpectralDensity, Populations };

std::string output_name(OutputKind kind);
OutputKind output_from_name(const std::string& name);

struct ScenarioConfig {
    SpectralModel model;
    double detuning = 0.0; // Delta in units of Omega
    double theta = 0.0;    // mixing angle of the initial two-qubit state
    std::string regime;    // free-text label
    std::string label = "scenario";
    double time_start = 0.0;
    double time_end = 10.0;
    int samples = 1000;
    std::vector<OutputKind> outputs;
    std::string output_path = "./out";
    double tol = 1e-10;  // integrator tolerance
    int fock_cutoff = 1;
    double freq_span = 10.0;  // spectral-density scans cover +-freq_span
    int freq_samples = 2001;

    void validate() const;
};

// Time grid plus the per-time quantities a scenario produced. Vectors for
// outputs that were not requested stay empty.
struct TimeSeries {
    std::vector<double> times;
    std::vector<double> b_magnitude_sq;
    std::vector<double> discord_bits;
    std::vector<double> trace_distance;
    std::vector<double> atom_population;
    std::vector<double> freq_offsets; // x axis of spectral-density scans
    std::vector<double> spectral_density;
};

struct ScenarioResult {
    TimeSeries series;
    std::optional<NonMarkovResult> blp;
    std::vector<std::filesystem::path> written_files;
};

// Run the full pipeline for one scenario and write one CSV per requested
// output into the scenario's output path.
ScenarioResult run_scenario(const ScenarioConfig& config);

// Same pipeline without touching the filesystem.
ScenarioResult evaluate_scenario(const ScenarioConfig& config);

struct SweepRow {
    double value = 0.0;
    double discord_final = 0.0;
    double blp_measure = 0.0;
};

// Run one scenario per value of the swept parameter (in parallel), write a
// summary CSV and return its rows. Supported parameters: detuning, theta,
// gamma, gamma1, gamma2, w1.
std::vector<SweepRow> sweep(const ScenarioConfig& base, const std::string& param,
                            const std::vector<double>& values);

// JSON (de)serialization; the schema is documented in the README.
nlohmann::json scenario_to_json(const ScenarioConfig& config);
ScenarioConfig scenario_from_json(const nlohmann::json& j);
ScenarioConfig load_scenario(const std::filesystem::path& path);

} // namespace pmode
