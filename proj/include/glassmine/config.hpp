// Pipeline configuration: one JSON file, paths resolved relative to it.
#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "glassmine/filter_core.hpp"
#include "glassmine/ingest.hpp"
#include "glassmine/liquidus.hpp"
#include "glassmine/optics.hpp"
#include "glassmine/tabular.hpp"

namespace glassmine {

struct PipelineConfig {
    std::filesystem::path corpus_dir;
    std::filesystem::path out_dir;
    std::filesystem::path url_list;
    std::filesystem::path lexicon_file;
    std::filesystem::path curation_file;
    std::filesystem::path molar_mass_file;
    std::vector<std::filesystem::path> references;

    FetchPolicy fetch_policy = FetchPolicy::OfflineOnly;
    int fetch_delay_ms = 2000;

    HeuristicConfig heuristics;
    FilterConfig filter;
    LiquidusConfig liquidus;
    OpticsConfig optics;

    int key_precision = 2;
    size_t histogram_bins = 40;
    std::vector<std::string> violin_oxides = {"Bi2O3", "TiO2", "Nb2O5", "La2O3", "SiO2", "B2O3"};

    // Throws std::runtime_error with an actionable message on parse errors,
    // out-of-range values, or referenced files that do not exist.
    static PipelineConfig load(const std::filesystem::path& config_path);
};

}  // namespace glassmine
