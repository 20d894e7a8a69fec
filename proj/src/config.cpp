#include "glassmine/config.hpp"

#include <json.hpp>

#include "glassmine/io_util.hpp"

namespace glassmine {

using nlohmann::json;

namespace {

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& p) {
    std::filesystem::path path(p);
    return path.is_absolute() ? path : base / path;
}

void require_exists(const std::filesystem::path& path, const std::string& what) {
    if (!path.empty() && !std::filesystem::exists(path))
        throw std::runtime_error("config: " + what + " does not exist: " + path.string());
}

}  // namespace

PipelineConfig PipelineConfig::load(const std::filesystem::path& config_path) {
    json j;
    try {
        j = json::parse(read_file(config_path));
    } catch (const json::parse_error& e) {
        throw std::runtime_error("config: JSON parse error in " + config_path.string() + ": " +
                                 e.what());
    }
    PipelineConfig cfg;
    auto base = config_path.has_parent_path() ? config_path.parent_path()
                                              : std::filesystem::path(".");

    const json paths = j.value("paths", json::object());
    cfg.corpus_dir = resolve(base, paths.value("corpus_dir", "corpus"));
    cfg.out_dir = resolve(base, paths.value("out_dir", "out"));
    if (paths.contains("url_list")) cfg.url_list = resolve(base, paths["url_list"]);
    if (paths.contains("lexicon")) cfg.lexicon_file = resolve(base, paths["lexicon"]);
    if (paths.contains("curation")) cfg.curation_file = resolve(base, paths["curation"]);
    if (paths.contains("molar_masses"))
        cfg.molar_mass_file = resolve(base, paths["molar_masses"]);
    if (paths.contains("references"))
        for (const auto& r : paths["references"]) cfg.references.push_back(resolve(base, r));

    if (j.contains("fetch")) {
        const json& f = j["fetch"];
        std::string policy = f.value("policy", "offline_only");
        if (policy == "offline_only") {
            cfg.fetch_policy = FetchPolicy::OfflineOnly;
        } else if (policy == "fetch_if_missing") {
            cfg.fetch_policy = FetchPolicy::FetchIfMissing;
        } else {
            throw std::runtime_error("config: unknown fetch policy: " + policy);
        }
        cfg.fetch_delay_ms = f.value("delay_ms", 2000);
        if (cfg.fetch_delay_ms < 0) throw std::runtime_error("config: delay_ms must be >= 0");
    }
    if (j.contains("heuristics")) {
        const json& h = j["heuristics"];
        if (h.contains("property_keywords"))
            cfg.heuristics.property_keywords =
                h["property_keywords"].get<std::vector<std::string>>();
        cfg.heuristics.max_columns = h.value("max_columns", cfg.heuristics.max_columns);
        cfg.heuristics.max_label_len = h.value("max_label_len", cfg.heuristics.max_label_len);
        if (cfg.heuristics.max_columns == 0)
            throw std::runtime_error("config: max_columns must be >= 1");
    }
    if (j.contains("filter")) {
        const json& f = j["filter"];
        cfg.filter.closure_target = f.value("closure_target", cfg.filter.closure_target);
        cfg.filter.closure_tolerance = f.value("closure_tolerance", cfg.filter.closure_tolerance);
        cfg.filter.chunk_size = f.value("chunk_size", cfg.filter.chunk_size);
        if (f.contains("property_patterns"))
            cfg.filter.property_patterns = f["property_patterns"].get<std::vector<std::string>>();
        if (cfg.filter.closure_tolerance <= 0)
            throw std::runtime_error("config: closure_tolerance must be > 0");
        if (cfg.filter.chunk_size == 0)
            throw std::runtime_error("config: chunk_size must be >= 1");
    }
    if (j.contains("liquidus")) {
        const json& l = j["liquidus"];
        cfg.liquidus.min_c = l.value("min_c", cfg.liquidus.min_c);
        cfg.liquidus.max_c = l.value("max_c", cfg.liquidus.max_c);
        if (cfg.liquidus.min_c >= cfg.liquidus.max_c)
            throw std::runtime_error("config: liquidus range is empty");
    }
    if (j.contains("optics")) {
        const json& o = j["optics"];
        cfg.optics.lower = o.value("lower", cfg.optics.lower);
        cfg.optics.upper = o.value("upper", cfg.optics.upper);
        if (cfg.optics.lower >= cfg.optics.upper)
            throw std::runtime_error("config: optics plausibility range is empty");
    }
    cfg.key_precision = j.value("key_precision", cfg.key_precision);
    if (cfg.key_precision < 0 || cfg.key_precision > 12)
        throw std::runtime_error("config: key_precision out of range");
    cfg.histogram_bins = j.value("histogram_bins", cfg.histogram_bins);
    if (cfg.histogram_bins == 0) throw std::runtime_error("config: histogram_bins must be >= 1");
    if (j.contains("violin_oxides"))
        cfg.violin_oxides = j["violin_oxides"].get<std::vector<std::string>>();

    require_exists(cfg.url_list, "url_list");
    require_exists(cfg.lexicon_file, "lexicon");
    require_exists(cfg.curation_file, "curation dictionary");
    require_exists(cfg.molar_mass_file, "molar mass file");
    for (const auto& r : cfg.references) require_exists(r, "reference dataset");
    return cfg;
}

}  // namespace glassmine
