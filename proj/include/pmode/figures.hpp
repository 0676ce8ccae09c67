// figures.hpp — Built-in figure presets and figure reproduction

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "pmode/scenario.hpp"

namespace pmode {

// A figure bundles scenarios that share one time (or frequency) grid; each
// member contributes one series under the matching label.
struct FigureSpec {
    std::string id;
    std::string title;
    std::vector<ScenarioConfig> scenarios;
    std::vector<std::string> labels;

    // The quantity the figure plots (the first output of every member).
    OutputKind primary_output() const;
    void validate() const;
};

struct FigureResult {
    std::filesystem::path svg_path;
    std::filesystem::path metadata_path;
    std::vector<std::filesystem::path> csv_paths;
};

// All built-in presets, in figure order.
std::vector<std::string> figure_ids();
FigureSpec figure_preset(const std::string& id);

// Run every member scenario, write per-series CSVs, one SVG and a metadata
// JSON into out_dir. Throws on an empty or inconsistent spec.
FigureResult reproduce_figure(const FigureSpec& spec, const std::filesystem::path& out_dir);

nlohmann::json figure_to_json(const FigureSpec& spec);
FigureSpec figure_from_json(const nlohmann::json& j);

} // namespace pmode
