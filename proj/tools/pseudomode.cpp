// pseudomode — scenario runner and figure-reproduction CLI

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pmode/csv.hpp"
#include "pmode/figures.hpp"
#include "pmode/scenario.hpp"

namespace {

std::string default_out_dir() {
    if (const char* env = std::getenv("PSEUDOMODE_OUT"); env && *env) return env;
    return "./out";
}

std::vector<double> parse_value_list(const std::string& text) {
    std::vector<double> values;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        std::size_t pos = 0;
        const double v = std::stod(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("bad value in list: " + tok);
        values.push_back(v);
    }
    return values;
}

struct Overrides {
    std::optional<std::string> out;
    std::optional<double> tol;
    std::optional<int> fock;

    void apply(pmode::ScenarioConfig& cfg) const {
        cfg.output_path = out ? *out : default_out_dir();
        if (tol) cfg.tol = *tol;
        if (fock) cfg.fock_cutoff = *fock;
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"pseudomode: structured-environment qubit dynamics, discord and "
                 "non-Markovianity toolkit"};
    app.require_subcommand(1);
    app.fallthrough(); // allow the global --out/--tol/--fock after a subcommand

    Overrides ov;
    std::string out_flag;
    double tol_flag = 0.0;
    int fock_flag = 0;
    app.add_option("--out", out_flag, "output directory (default ./out or $PSEUDOMODE_OUT)");
    app.add_option("--tol", tol_flag, "integrator tolerance override");
    app.add_option("--fock", fock_flag, "pseudomode Fock cutoff override");

    std::string run_config;
    CLI::App* run = app.add_subcommand("run", "run one scenario from a JSON config");
    run->add_option("config", run_config, "scenario JSON file")->required();

    std::string figure_id;
    CLI::App* figure = app.add_subcommand("figure", "reproduce a built-in figure, 'all', or a "
                                                    "figure-spec JSON file");
    figure->add_option("id", figure_id, "figure id (fig1a..fig6b), 'all', or a JSON path")
        ->required();

    std::string sweep_config, sweep_param, sweep_values;
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "sweep one parameter of a scenario");
    sweep_cmd->add_option("config", sweep_config, "base scenario JSON file")->required();
    sweep_cmd->add_option("--param", sweep_param, "parameter name")->required();
    sweep_cmd->add_option("--values", sweep_values, "comma-separated values")->required();

    std::string dump_id;
    CLI::App* dump = app.add_subcommand("dump-preset", "print a figure preset as JSON");
    dump->add_option("id", dump_id, "figure id")->required();

    CLI11_PARSE(app, argc, argv);

    if (app.count("--out")) ov.out = out_flag;
    if (app.count("--tol")) ov.tol = tol_flag;
    if (app.count("--fock")) ov.fock = fock_flag;

    try {
        if (*run) {
            pmode::ScenarioConfig cfg = pmode::load_scenario(run_config);
            ov.apply(cfg);
            const pmode::ScenarioResult result = pmode::run_scenario(cfg);
            for (const auto& p : result.written_files) std::cout << p.string() << '\n';
            if (result.blp)
                std::cout << "blp_measure " << pmode::format_value(result.blp->measure) << '\n';
        } else if (*figure) {
            std::vector<pmode::FigureSpec> specs;
            if (figure_id == "all") {
                for (const auto& id : pmode::figure_ids())
                    specs.push_back(pmode::figure_preset(id));
            } else if (figure_id.size() > 5 && figure_id.ends_with(".json")) {
                std::ifstream in(figure_id);
                if (!in) throw std::runtime_error("cannot open figure spec: " + figure_id);
                nlohmann::json j;
                in >> j;
                specs.push_back(pmode::figure_from_json(j));
            } else {
                specs.push_back(pmode::figure_preset(figure_id));
            }
            const std::filesystem::path out_dir = ov.out ? *ov.out : default_out_dir();
            for (auto& spec : specs) {
                for (auto& s : spec.scenarios) {
                    if (ov.tol) s.tol = *ov.tol;
                    if (ov.fock) s.fock_cutoff = *ov.fock;
                }
                const pmode::FigureResult fr = pmode::reproduce_figure(spec, out_dir);
                std::cout << fr.svg_path.string() << '\n';
            }
        } else if (*sweep_cmd) {
            pmode::ScenarioConfig cfg = pmode::load_scenario(sweep_config);
            ov.apply(cfg);
            const auto rows = pmode::sweep(cfg, sweep_param, parse_value_list(sweep_values));
            std::cout << "rows " << rows.size() << '\n';
        } else if (*dump) {
            const pmode::FigureSpec spec = pmode::figure_preset(dump_id);
            std::cout << pmode::figure_to_json(spec).dump(2) << '\n';
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
