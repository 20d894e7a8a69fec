// glassmine: patent glass-data pipeline CLI.
#include <filesystem>
#include <iostream>

#include <CLI11.hpp>

#include "glassmine/config.hpp"
#include "glassmine/io_util.hpp"
#include "glassmine/pipeline.hpp"

namespace fs = std::filesystem;

int main(int argc, char** argv) {
    CLI::App app{"glassmine — extract, clean, and compare oxide-glass data from patent HTML"};
    app.require_subcommand(0, 1);

    std::string config_path = "config.json";
    std::string stage_flag;
    std::string out_override;
    long long chunk_override = -1;
    bool offline = false;
    app.add_option("--config", config_path, "pipeline configuration file")
        ->capture_default_str();
    app.add_option("--stage", stage_flag, "stage to run (alternative to subcommands)");
    app.add_option("--chunk-size", chunk_override, "override filter chunk size");
    app.add_option("--out", out_override, "override output directory");
    app.add_flag("--offline", offline, "force offline_only fetch policy");

    std::vector<std::string> stage_cmds = glassmine::stage_names();
    stage_cmds.push_back("all");
    std::string selected;
    for (const auto& name : stage_cmds) {
        auto* sub = app.add_subcommand(name, "run the " + name + " stage");
        sub->fallthrough();  // root options may follow the stage name
        sub->callback([&selected, name]() { selected = name; });
    }

    // import an already-saved page into the fetch cache
    std::string add_url, add_file;
    auto* cache_add = app.add_subcommand("cache-add", "store a saved HTML page under its URL key");
    cache_add->fallthrough();
    cache_add->add_option("url", add_url, "source URL")->required();
    cache_add->add_option("file", add_file, "saved HTML file")->required();
    cache_add->callback([&selected]() { selected = "cache-add"; });

    CLI11_PARSE(app, argc, argv);

    if (selected.empty() && !stage_flag.empty()) selected = stage_flag;
    if (selected.empty()) {
        std::cerr << app.help();
        return 1;
    }
    if (selected != "cache-add" && selected != "all" &&
        std::find(stage_cmds.begin(), stage_cmds.end(), selected) == stage_cmds.end()) {
        std::cerr << "unknown stage: " << selected << "\n";
        return 1;
    }

    glassmine::PipelineConfig cfg;
    try {
        cfg = glassmine::PipelineConfig::load(config_path);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    if (!out_override.empty()) cfg.out_dir = out_override;
    if (chunk_override > 0) cfg.filter.chunk_size = static_cast<size_t>(chunk_override);
    if (offline) cfg.fetch_policy = glassmine::FetchPolicy::OfflineOnly;

    if (selected == "cache-add") {
        try {
            auto dest = glassmine::Fetcher::cache_path(cfg.corpus_dir, add_url);
            fs::create_directories(cfg.corpus_dir);
            glassmine::write_file(dest, glassmine::read_file(add_file));
            std::cout << dest.string() << "\n";
            return 0;
        } catch (const std::exception& e) {
            std::cerr << e.what() << "\n";
            return 2;
        }
    }

    return glassmine::run_stage(selected, cfg);
}
