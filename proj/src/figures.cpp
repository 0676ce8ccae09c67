#include "pmode/figures.hpp"

#include <cmath>
#include <fstream>
#include <future>
#include <numbers>
#include <stdexcept>

#include <json.hpp>

#include "pmode/svg.hpp"

namespace pmode {

namespace {

constexpr double kTheta = std::numbers::pi / 3.0;

// Coupling-regime parameter sets used throughout the figure presets.
constexpr double kWeakGamma = 11.0, kStrongGamma = 0.11;
constexpr double kWeakGamma1 = 11.0, kWeakGamma2 = 1.0;
constexpr double kStrongGamma1 = 0.11, kStrongGamma2 = 0.01;

ScenarioConfig base_scenario(const SpectralModel& model, double detuning, bool strong,
                             OutputKind output) {
    ScenarioConfig cfg;
    cfg.model = model;
    cfg.detuning = detuning;
    cfg.theta = kTheta;
    cfg.regime = strong ? "strong" : "weak";
    cfg.time_start = 0.0;
    cfg.time_end = strong ? 30.0 : 10.0;
    cfg.samples = strong ? 3000 : 1000;
    cfg.outputs = {output};
    if (output == OutputKind::TraceDistance)
        cfg.outputs.push_back(OutputKind::NonMarkovianity);
    return cfg;
}

FigureSpec make_pair_figure(const std::string& id, const std::string& title, bool lorentz_pair,
                            double detuning, bool strong, OutputKind output) {
    FigureSpec fig;
    fig.id = id;
    fig.title = title;
    if (lorentz_pair) {
        fig.labels = {"SL", "SQ"};
        fig.scenarios = {
            base_scenario(SpectralModel::single_lorentzian(strong ? kStrongGamma : kWeakGamma),
                          detuning, strong, output),
            base_scenario(SpectralModel::squared_lorentzian(strong ? kStrongGamma : kWeakGamma),
                          detuning, strong, output)};
    } else {
        const double g1 = strong ? kStrongGamma1 : kWeakGamma1;
        const double g2 = strong ? kStrongGamma2 : kWeakGamma2;
        fig.labels = {"TL", "BG"};
        fig.scenarios = {base_scenario(SpectralModel::two_lorentzian(g1, g2), detuning, strong,
                                       output),
                         base_scenario(SpectralModel::band_gap(g1, g2), detuning, strong, output)};
    }
    for (std::size_t i = 0; i < fig.scenarios.size(); ++i)
        fig.scenarios[i].label = id + "_" + fig.labels[i];
    return fig;
}

std::vector<FigureSpec> build_presets() {
    std::vector<FigureSpec> figs;
    const OutputKind qd = OutputKind::Discord;
    const OutputKind td = OutputKind::TraceDistance;
    const OutputKind sd = OutputKind::SpectralDensity;

    figs.push_back(make_pair_figure("fig1a", "Discord, weak coupling, resonance (SL vs SQ)",
                                    true, 0.0, false, qd));
    figs.push_back(make_pair_figure("fig1b", "Discord, strong coupling, resonance (SL vs SQ)",
                                    true, 0.0, true, qd));
    figs.push_back(make_pair_figure("fig1c", "Discord, weak coupling, resonance (TL vs BG)",
                                    false, 0.0, false, qd));
    figs.push_back(make_pair_figure("fig1d", "Discord, strong coupling, resonance (TL vs BG)",
                                    false, 0.0, true, qd));

    figs.push_back(make_pair_figure("fig2a", "Discord, weak coupling, near resonance (SL vs SQ)",
                                    true, 0.2, false, qd));
    figs.push_back(make_pair_figure("fig2b", "Discord, weak coupling, far off-resonance (SL vs SQ)",
                                    true, 8.0, false, qd));
    figs.push_back(make_pair_figure("fig2c", "Discord, weak coupling, near resonance (TL vs BG)",
                                    false, 0.2, false, qd));
    figs.push_back(make_pair_figure("fig2d", "Discord, weak coupling, far off-resonance (TL vs BG)",
                                    false, 8.0, false, qd));

    figs.push_back(make_pair_figure("fig3a", "Spectral density, weak coupling (SL vs SQ)", true,
                                    0.0, false, sd));
    figs.push_back(make_pair_figure("fig3b", "Spectral density, weak coupling (TL vs BG)", false,
                                    0.0, false, sd));

    figs.push_back(make_pair_figure("fig4a", "Discord, strong coupling, near resonance (SL vs SQ)",
                                    true, 0.2, true, qd));
    figs.push_back(make_pair_figure("fig4b",
                                    "Discord, strong coupling, far off-resonance (SL vs SQ)", true,
                                    8.0, true, qd));
    figs.push_back(make_pair_figure("fig4c", "Discord, strong coupling, near resonance (TL vs BG)",
                                    false, 0.2, true, qd));
    figs.push_back(make_pair_figure("fig4d",
                                    "Discord, strong coupling, far off-resonance (TL vs BG)",
                                    false, 8.0, true, qd));

    // Fig. 5 overlays all four strong-regime densities in one panel.
    FigureSpec fig5;
    fig5.id = "fig5";
    fig5.title = "Spectral density, strong coupling (all models)";
    fig5.labels = {"SL", "SQ", "TL", "BG"};
    fig5.scenarios = {
        base_scenario(SpectralModel::single_lorentzian(kStrongGamma), 0.0, true, sd),
        base_scenario(SpectralModel::squared_lorentzian(kStrongGamma), 0.0, true, sd),
        base_scenario(SpectralModel::two_lorentzian(kStrongGamma1, kStrongGamma2), 0.0, true, sd),
        base_scenario(SpectralModel::band_gap(kStrongGamma1, kStrongGamma2), 0.0, true, sd)};
    for (std::size_t i = 0; i < fig5.scenarios.size(); ++i)
        fig5.scenarios[i].label = fig5.id + "_" + fig5.labels[i];
    figs.push_back(fig5);

    figs.push_back(make_pair_figure("fig6a",
                                    "Trace distance, strong coupling, far off-resonance (SL vs SQ)",
                                    true, 8.0, true, td));
    figs.push_back(make_pair_figure("fig6b",
                                    "Trace distance, strong coupling, far off-resonance (TL vs BG)",
                                    false, 8.0, true, td));
    return figs;
}

std::string y_label_for(OutputKind kind) {
    switch (kind) {
    case OutputKind::Discord: return "quantum discord (bits)";
    case OutputKind::TraceDistance: return "trace distance";
    case OutputKind::SpectralDensity: return "D(omega)";
    case OutputKind::Populations: return "excited population";
    case OutputKind::NonMarkovianity: return "cumulative trace-distance growth";
    }
    return "value";
}

} // namespace

OutputKind FigureSpec::primary_output() const {
    if (scenarios.empty() || scenarios.front().outputs.empty())
        throw std::invalid_argument("figure: no scenarios or outputs");
    return scenarios.front().outputs.front();
}

void FigureSpec::validate() const {
    if (scenarios.empty()) throw std::invalid_argument("figure: empty scenario list");
    if (labels.size() != scenarios.size())
        throw std::invalid_argument("figure: one label per scenario required");
    const OutputKind primary = primary_output();
    for (const auto& s : scenarios) {
        s.validate();
        if (s.outputs.empty() || s.outputs.front() != primary)
            throw std::invalid_argument("figure: members disagree on the primary output");
        if (s.time_start != scenarios.front().time_start ||
            s.time_end != scenarios.front().time_end || s.samples != scenarios.front().samples)
            throw std::invalid_argument("figure: members must share the time grid");
        if (s.freq_span != scenarios.front().freq_span ||
            s.freq_samples != scenarios.front().freq_samples)
            throw std::invalid_argument("figure: members must share the frequency grid");
    }
}

std::vector<std::string> figure_ids() {
    std::vector<std::string> ids;
    for (const auto& f : build_presets()) ids.push_back(f.id);
    return ids;
}

FigureSpec figure_preset(const std::string& id) {
    for (const auto& f : build_presets())
        if (f.id == id) return f;
    throw std::invalid_argument("unknown figure preset: " + id);
}

FigureResult reproduce_figure(const FigureSpec& spec, const std::filesystem::path& out_dir) {
    spec.validate();

    FigureSpec fig = spec;
    for (auto& s : fig.scenarios) s.output_path = out_dir.string();

    std::vector<std::future<ScenarioResult>> jobs;
    jobs.reserve(fig.scenarios.size());
    for (const auto& s : fig.scenarios)
        jobs.push_back(std::async(std::launch::async, [s] { return run_scenario(s); }));
    std::vector<ScenarioResult> results;
    results.reserve(jobs.size());
    for (auto& j : jobs) results.push_back(j.get());

    const OutputKind primary = fig.primary_output();
    const bool spectral = primary == OutputKind::SpectralDensity;

    FigureResult out;
    std::vector<PlotSeries> plot;
    nlohmann::json meta;
    meta["id"] = fig.id;
    meta["title"] = fig.title;
    meta["x_axis"] = spectral ? "(omega - omega_c)/Omega" : "Omega t";
    meta["y_axis"] = y_label_for(primary);
    meta["note"] = "time-axis extents are toolkit defaults (weak: 10, strong: 30 in 1/Omega)";
    meta["series"] = nlohmann::json::array();

    for (std::size_t i = 0; i < results.size(); ++i) {
        const auto& series = results[i].series;
        PlotSeries ps;
        ps.label = fig.labels[i];
        if (spectral) {
            ps.x = series.freq_offsets;
            ps.y = series.spectral_density;
        } else {
            ps.x = series.times;
            switch (primary) {
            case OutputKind::Discord: ps.y = series.discord_bits; break;
            case OutputKind::TraceDistance: ps.y = series.trace_distance; break;
            case OutputKind::Populations: ps.y = series.atom_population; break;
            default:
                throw std::invalid_argument("figure: unsupported primary output");
            }
        }
        plot.push_back(ps);

        nlohmann::json entry;
        entry["label"] = fig.labels[i];
        entry["scenario"] = scenario_to_json(fig.scenarios[i]);
        if (results[i].blp) entry["blp_measure"] = results[i].blp->measure;
        meta["series"].push_back(entry);
        for (const auto& p : results[i].written_files) out.csv_paths.push_back(p);
    }

    out.svg_path = out_dir / (fig.id + ".svg");
    write_svg_plot(out.svg_path, fig.title, meta["x_axis"].get<std::string>(),
                   y_label_for(primary), plot);

    out.metadata_path = out_dir / (fig.id + "_meta.json");
    std::filesystem::create_directories(out_dir);
    std::ofstream mf(out.metadata_path, std::ios::binary);
    if (!mf) throw std::runtime_error("cannot write " + out.metadata_path.string());
    mf << meta.dump(2) << '\n';
    return out;
}

nlohmann::json figure_to_json(const FigureSpec& spec) {
    nlohmann::json j;
    j["id"] = spec.id;
    j["title"] = spec.title;
    j["labels"] = spec.labels;
    j["scenarios"] = nlohmann::json::array();
    for (const auto& s : spec.scenarios) j["scenarios"].push_back(scenario_to_json(s));
    return j;
}

FigureSpec figure_from_json(const nlohmann::json& j) {
    FigureSpec spec;
    spec.id = j.at("id").get<std::string>();
    spec.title = j.value("title", spec.id);
    for (const auto& l : j.at("labels")) spec.labels.push_back(l.get<std::string>());
    for (const auto& s : j.at("scenarios")) spec.scenarios.push_back(scenario_from_json(s));
    spec.validate();
    return spec;
}

} // namespace pmode
