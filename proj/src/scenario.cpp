#include "pmode/scenario.hpp"

#include <cmath>
#include <fstream>
#include <future>
#include <stdexcept>

#include <json.hpp>

#include "pmode/csv.hpp"
#include "pmode/dynamics.hpp"

namespace pmode {

std::string output_name(OutputKind kind) {
    switch (kind) {
    case OutputKind::Discord: return "discord";
    case OutputKind::TraceDistance: return "trace_distance";
    case OutputKind::NonMarkovianity: return "non_markovianity";
    case OutputKind::SpectralDensity: return "spectral_density";
    case OutputKind::Populations: return "populations";
    }
    return "unknown";
}

OutputKind output_from_name(const std::string& name) {
    if (name == "discord") return OutputKind::Discord;
    if (name == "trace_distance") return OutputKind::TraceDistance;
    if (name == "non_markovianity") return OutputKind::NonMarkovianity;
    if (name == "spectral_density") return OutputKind::SpectralDensity;
    if (name == "populations") return OutputKind::Populations;
    throw std::invalid_argument("unknown output kind: " + name);
}

void ScenarioConfig::validate() const {
    model.validate();
    if (!(time_end > time_start) || time_start < 0.0)
        throw std::invalid_argument("scenario: need time_end > time_start >= 0");
    if (samples < 2) throw std::invalid_argument("scenario: need at least 2 samples");
    if (theta < 0.0 || theta > std::acos(-1.0) + 1e-12)
        throw std::invalid_argument("scenario: theta must lie in [0, pi]");
    if (tol <= 0.0) throw std::invalid_argument("scenario: tolerance must be positive");
    if (fock_cutoff < 1 || fock_cutoff > 4)
        throw std::invalid_argument("scenario: fock cutoff must lie in [1, 4]");
    if (freq_span <= 0.0 || freq_samples < 2)
        throw std::invalid_argument("scenario: bad spectral scan grid");
}

namespace {

bool wants(const ScenarioConfig& cfg, OutputKind kind) {
    for (OutputKind k : cfg.outputs)
        if (k == kind) return true;
    return false;
}

} // namespace

ScenarioResult evaluate_scenario(const ScenarioConfig& config) {
    config.validate();
    ScenarioResult result;

    const bool need_discord = wants(config, OutputKind::Discord);
    const bool need_tdist =
        wants(config, OutputKind::TraceDistance) || wants(config, OutputKind::NonMarkovianity);
    const bool need_pop = wants(config, OutputKind::Populations);
    const bool need_dynamics = need_discord || need_tdist || need_pop;

    if (need_dynamics) {
        const PseudomodeNetwork net = to_pseudomodes(config.model, 1.0);
        const LindbladSystem system = build_system(net, config.detuning, config.fock_cutoff);
        const std::vector<double> grid =
            linspace(config.time_start, config.time_end, config.samples);

        const EvolutionRecord rec_e =
            evolve(system, excited_vacuum_state(system), grid, config.tol, need_tdist);
        result.series.times = rec_e.times;
        result.series.b_magnitude_sq = rec_e.b_magnitude_sq;
        if (need_pop) result.series.atom_population = rec_e.atom_excited_pop;

        if (need_discord) {
            result.series.discord_bits.reserve(rec_e.times.size());
            for (double p : rec_e.b_magnitude_sq) {
                const XState x = assemble_two_qubit(config.theta, std::sqrt(p));
                result.series.discord_bits.push_back(discord(x).discord);
            }
        }

        if (need_tdist) {
            const EvolutionRecord rec_g =
                evolve(system, ground_vacuum_state(system), grid, config.tol, true);
            result.series.trace_distance = trace_distance_series(rec_e, rec_g);
            if (wants(config, OutputKind::NonMarkovianity))
                result.blp = non_markovianity(result.series.times, result.series.trace_distance);
        }
    }

    if (wants(config, OutputKind::SpectralDensity)) {
        result.series.freq_offsets = linspace(-config.freq_span, config.freq_span,
                                              config.freq_samples);
        result.series.spectral_density.reserve(result.series.freq_offsets.size());
        for (double x : result.series.freq_offsets)
            result.series.spectral_density.push_back(density(config.model, config.model.omega_c + x));
    }

    return result;
}

ScenarioResult run_scenario(const ScenarioConfig& config) {
    ScenarioResult result = evaluate_scenario(config);
    const std::filesystem::path dir = config.output_path;

    auto emit = [&](OutputKind kind, const std::vector<double>& x, const std::vector<double>& y,
                    const std::string& x_name) {
        const std::string name = config.label + "_" + output_name(kind);
        const std::filesystem::path path = dir / (name + ".csv");
        write_series_csv(path, x_name, name, x, y);
        result.written_files.push_back(path);
    };

    for (OutputKind kind : config.outputs) {
        switch (kind) {
        case OutputKind::Discord:
            emit(kind, result.series.times, result.series.discord_bits, "omega_t");
            break;
        case OutputKind::TraceDistance:
            emit(kind, result.series.times, result.series.trace_distance, "omega_t");
            break;
        case OutputKind::NonMarkovianity: {
            // Cumulative positive increments; the last row equals N(Phi).
            const auto& d = result.series.trace_distance;
            std::vector<double> cumulative(d.size(), 0.0);
            for (std::size_t i = 1; i < d.size(); ++i)
                cumulative[i] = cumulative[i - 1] + std::max(0.0, d[i] - d[i - 1]);
            emit(kind, result.series.times, cumulative, "omega_t");
            break;
        }
        case OutputKind::Populations:
            emit(kind, result.series.times, result.series.atom_population, "omega_t");
            break;
        case OutputKind::SpectralDensity:
            emit(kind, result.series.freq_offsets, result.series.spectral_density, "omega_offset");
            break;
        }
    }
    return result;
}

namespace {

ScenarioConfig apply_parameter(const ScenarioConfig& base, const std::string& param, double v) {
    ScenarioConfig cfg = base;
    using Kind = SpectralModel::Kind;
    if (param == "detuning") {
        cfg.detuning = v;
    } else if (param == "theta") {
        cfg.theta = v;
    } else if (param == "gamma") {
        if (cfg.model.kind != Kind::SingleLorentzian && cfg.model.kind != Kind::SquaredLorentzian)
            throw std::invalid_argument("sweep: gamma applies to single/squared Lorentzian only");
        cfg.model.gamma = v;
    } else if (param == "gamma1") {
        cfg.model.gamma1 = v;
    } else if (param == "gamma2") {
        cfg.model.gamma2 = v;
    } else if (param == "w1") {
        if (cfg.model.kind == Kind::TwoLorentzian) {
            cfg.model.w1 = v;
            cfg.model.w2 = 1.0 - v;
        } else if (cfg.model.kind == Kind::BandGap) {
            cfg.model.w1 = v;
            cfg.model.w2 = v - 1.0;
        } else {
            throw std::invalid_argument("sweep: w1 applies to two-Lorentzian/band-gap only");
        }
    } else {
        throw std::invalid_argument("sweep: unknown parameter " + param);
    }
    cfg.model.validate();
    return cfg;
}

} // namespace

std::vector<SweepRow> sweep(const ScenarioConfig& base, const std::string& param,
                            const std::vector<double>& values) {
    // Validate the parameter name up front, even for an empty sweep.
    if (!values.empty()) {
        apply_parameter(base, param, values.front());
    } else {
        apply_parameter(base, param, param == "w1" ? base.model.w1 : 1.0);
    }

    std::vector<std::future<SweepRow>> jobs;
    jobs.reserve(values.size());
    for (double v : values) {
        jobs.push_back(std::async(std::launch::async, [&, v] {
            ScenarioConfig cfg = apply_parameter(base, param, v);
            cfg.outputs = {OutputKind::Discord, OutputKind::TraceDistance,
                           OutputKind::NonMarkovianity};
            const ScenarioResult r = evaluate_scenario(cfg);
            SweepRow row;
            row.value = v;
            row.discord_final = r.series.discord_bits.back();
            row.blp_measure = r.blp ? r.blp->measure : 0.0;
            return row;
        }));
    }

    std::vector<SweepRow> rows;
    rows.reserve(values.size());
    for (auto& job : jobs) rows.push_back(job.get());

    std::vector<std::vector<double>> table;
    table.reserve(rows.size());
    for (const auto& r : rows) table.push_back({r.value, r.discord_final, r.blp_measure});
    const std::filesystem::path path =
        std::filesystem::path(base.output_path) / (base.label + "_sweep_" + param + ".csv");
    write_table_csv(path, {param, "discord_final", "blp_measure"}, table);
    return rows;
}

nlohmann::json scenario_to_json(const ScenarioConfig& config) {
    nlohmann::json model;
    model["kind"] = config.model.kind_name();
    model["omega_c"] = config.model.omega_c;
    switch (config.model.kind) {
    case SpectralModel::Kind::SingleLorentzian:
    case SpectralModel::Kind::SquaredLorentzian:
        model["gamma"] = config.model.gamma;
        break;
    case SpectralModel::Kind::TwoLorentzian:
    case SpectralModel::Kind::BandGap:
        model["gamma1"] = config.model.gamma1;
        model["gamma2"] = config.model.gamma2;
        model["w1"] = config.model.w1;
        model["w2"] = config.model.w2;
        break;
    }

    nlohmann::json j;
    j["model"] = model;
    j["detuning"] = config.detuning;
    j["theta"] = config.theta;
    j["regime"] = config.regime;
    j["label"] = config.label;
    j["time_start"] = config.time_start;
    j["time_end"] = config.time_end;
    j["samples"] = config.samples;
    j["outputs"] = nlohmann::json::array();
    for (OutputKind k : config.outputs) j["outputs"].push_back(output_name(k));
    j["output_path"] = config.output_path;
    j["tol"] = config.tol;
    j["fock_cutoff"] = config.fock_cutoff;
    j["freq_span"] = config.freq_span;
    j["freq_samples"] = config.freq_samples;
    return j;
}

ScenarioConfig scenario_from_json(const nlohmann::json& j) {
    ScenarioConfig cfg;
    const auto& m = j.at("model");
    const std::string kind = m.at("kind").get<std::string>();
    const double omega_c = m.value("omega_c", 0.0);
    if (kind == "single_lorentzian") {
        cfg.model = SpectralModel::single_lorentzian(m.at("gamma").get<double>(), omega_c);
    } else if (kind == "squared_lorentzian") {
        cfg.model = SpectralModel::squared_lorentzian(m.at("gamma").get<double>(), omega_c);
    } else if (kind == "two_lorentzian") {
        cfg.model = SpectralModel::two_lorentzian(m.at("gamma1").get<double>(),
                                                  m.at("gamma2").get<double>(),
                                                  m.value("w1", 0.5), omega_c);
    } else if (kind == "band_gap") {
        cfg.model = SpectralModel::band_gap(m.at("gamma1").get<double>(),
                                            m.at("gamma2").get<double>(), m.value("w1", -1.0),
                                            omega_c);
    } else {
        throw std::invalid_argument("unknown spectral model kind: " + kind);
    }

    cfg.detuning = j.value("detuning", 0.0);
    cfg.theta = j.value("theta", 0.0);
    cfg.regime = j.value("regime", std::string());
    cfg.label = j.value("label", std::string("scenario"));
    cfg.time_start = j.value("time_start", 0.0);
    cfg.time_end = j.value("time_end", 10.0);
    cfg.samples = j.value("samples", 1000);
    if (j.contains("outputs"))
        for (const auto& o : j.at("outputs"))
            cfg.outputs.push_back(output_from_name(o.get<std::string>()));
    cfg.output_path = j.value("output_path", std::string("./out"));
    cfg.tol = j.value("tol", 1e-10);
    cfg.fock_cutoff = j.value("fock_cutoff", 1);
    cfg.freq_span = j.value("freq_span", 10.0);
    cfg.freq_samples = j.value("freq_samples", 2001);
    cfg.validate();
    return cfg;
}

ScenarioConfig load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open scenario file: " + path.string());
    nlohmann::json j;
    in >> j;
    return scenario_from_json(j);
}

} // namespace pmode
