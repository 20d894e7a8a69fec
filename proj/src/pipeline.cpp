#include "glassmine/pipeline.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <set>

#include <json.hpp>

#include "glassmine/basis.hpp"
#include "glassmine/compare.hpp"
#include "glassmine/consolidate.hpp"
#include "glassmine/html.hpp"
#include "glassmine/io_util.hpp"
#include "glassmine/text.hpp"

namespace glassmine {

using nlohmann::json;

namespace {

void require_input(const std::filesystem::path& path, const std::string& producer) {
    if (!std::filesystem::exists(path))
        throw std::runtime_error("missing input " + path.string() + " — run the " + producer +
                                 " stage first");
}

json run_ingest_stage(const PipelineConfig& cfg) {
    if (cfg.url_list.empty())
        throw std::runtime_error("no url_list configured — set paths.url_list");
    auto urls = load_url_list(cfg.url_list);
    if (urls.empty()) std::cerr << "warning: URL list is empty after deduplication\n";

    auto records_dir = cfg.out_dir / "records";
    std::filesystem::create_directories(records_dir);
    ControlList absent(cfg.out_dir / "control" / "absent_tables.txt");
    ControlList failures(cfg.out_dir / "control" / "fetch_failures.txt");

    Fetcher fetcher(cfg.corpus_dir, cfg.fetch_policy, cfg.fetch_delay_ms);
    size_t serialized = 0, skipped = 0, rejected = 0, failed = 0, no_tables = 0, no_pub = 0;
    for (const auto& url : urls) {
        FetchResult fetched = fetcher.fetch_or_load(url);
        if (fetched.status == FetchResult::Status::Rejected) {
            failures.append(url);
            std::cerr << "warning: " << fetched.error << "\n";
            ++rejected;
            continue;
        }
        if (fetched.status == FetchResult::Status::Failed) {
            failures.append(url);
            ++failed;
            continue;
        }
        PatentRecord record = extract_metadata(fetched.body, url);
        record.html_tables = extract_table_sections(fetched.body);
        if (record.html_tables.empty()) {
            absent.append(url);
            ++no_tables;
            continue;
        }
        if (record.publication_number.empty()) {
            std::cerr << "warning: no publication number for " << url << "\n";
            ++no_pub;
            continue;
        }
        if (serialize_record(record, records_dir) == SerializeStatus::SkippedExisting)
            ++skipped;
        ++serialized;
    }

    json report;
    report["rows_in"] = urls.size();
    report["rows_out"] = serialized;
    report["drops"] = {{"rejected_url", rejected},
                       {"fetch_failed", failed},
                       {"absent_tables", no_tables},
                       {"no_publication", no_pub}};
    report["skipped_existing"] = skipped;
    report["outputs"] = {records_dir.string()};
    return report;
}

json run_extract_stage(const PipelineConfig& cfg) {
    auto records_dir = cfg.out_dir / "records";
    require_input(records_dir, "ingest");
    if (cfg.lexicon_file.empty())
        throw std::runtime_error("no lexicon configured — set paths.lexicon");
    CompoundLexicon lexicon = CompoundLexicon::load(cfg.lexicon_file.string());

    auto blocks_dir = cfg.out_dir / "blocks";
    std::filesystem::create_directories(blocks_dir);
    ControlList skipped_fragments(cfg.out_dir / "control" / "skipped_fragments.txt");

    size_t records_in = 0, records_out = 0, irrelevant = 0, no_block = 0;
    size_t blocks_out = 0, fragments_skipped = 0;
    std::map<std::string, size_t> rejects;
    std::vector<CsvRow> unit_rows;

    for (const auto& path : list_files_sorted(records_dir, ".json")) {
        ++records_in;
        PatentRecord record = PatentRecord::from_json(read_file(path));
        if (!filter_relevant(record, lexicon)) {
            ++irrelevant;
            continue;
        }
        std::string pub = to_lower_ascii(record.publication_number);
        unit_rows.push_back({pub, to_string(detect_unit_label(record.html_tables))});

        size_t block_index = 0;
        size_t accepted = 0;
        for (size_t f = 0; f < record.html_tables.size(); ++f) {
            BlockSplit blocks = split_blocks(record.html_tables[f]);
            if (!blocks.ok) {
                skipped_fragments.append(pub + " fragment " + std::to_string(f));
                ++fragments_skipped;
                continue;
            }
            for (const auto& block : blocks.blocks) {
                PatentId id{pub, block_index++};
                auto grid = html::table_cell_grid(block);
                HeaderDetection det = detect_header(grid, lexicon, cfg.heuristics);
                if (!det.accepted) {
                    switch (det.reject) {
                        case HeaderReject::TooFewCompounds: ++rejects["too_few_compounds"]; break;
                        case HeaderReject::NoPropertyKeyword:
                            ++rejects["no_property_keyword"];
                            break;
                        case HeaderReject::WidthExceeded: ++rejects["width_exceeded"]; break;
                    }
                    continue;
                }
                ColumnarTable table = block_to_table(grid, det.header_index, id);
                write_block_csv(table, (blocks_dir / (id.render() + ".csv")).string());
                ++accepted;
                ++blocks_out;
            }
        }
        if (accepted > 0) {
            ++records_out;
        } else {
            ++no_block;
        }
    }

    write_csv_file((cfg.out_dir / "units.csv").string(), {"publication_number", "unit"},
                   unit_rows);

    json report;
    report["rows_in"] = records_in;
    report["rows_out"] = records_out;
    report["drops"] = {{"irrelevant", irrelevant}, {"no_accepted_block", no_block}};
    report["blocks_out"] = blocks_out;
    report["blocks_rejected"] = rejects;
    report["fragments_skipped"] = fragments_skipped;
    report["outputs"] = {blocks_dir.string(), (cfg.out_dir / "units.csv").string()};
    return report;
}

json run_consolidate_stage(const PipelineConfig& cfg) {
    auto blocks_dir = cfg.out_dir / "blocks";
    require_input(blocks_dir, "extract");
    auto paths = list_files_sorted(blocks_dir, ".csv");
    if (paths.empty())
        throw std::runtime_error("no block CSVs in " + blocks_dir.string() +
                                 " — run the extract stage first");
    auto out_path = cfg.out_dir / "consolidated.csv";
    ConsolidateReport r = consolidate_files(paths, out_path.string());
    for (const auto& w : r.warnings) std::cerr << "warning: " << w << "\n";

    json report;
    report["rows_in"] = r.rows_in;
    report["rows_out"] = r.rows_out;
    report["drops"] = {{"empty_row", r.empty_rows_dropped}};
    report["files_in"] = paths.size();
    report["header_warnings"] = r.warnings.size();
    report["outputs"] = {out_path.string()};
    return report;
}

std::unordered_map<std::string, std::string> load_units_map(const std::filesystem::path& path) {
    std::unordered_map<std::string, std::string> units;
    CsvFile file = read_csv_file(path.string());
    for (const auto& row : file.rows)
        if (row.size() >= 2) units[row[0]] = row[1];
    return units;
}

json run_filter_stage(const PipelineConfig& cfg) {
    auto consolidated = cfg.out_dir / "consolidated.csv";
    require_input(consolidated, "consolidate");
    auto units_path = cfg.out_dir / "units.csv";
    require_input(units_path, "extract");
    CompoundLexicon lexicon = CompoundLexicon::load(cfg.lexicon_file.string());

    FilterRunReport r = run_chunked(consolidated.string(), cfg.filter, lexicon,
                                    load_units_map(units_path), cfg.out_dir);
    json report;
    report["rows_in"] = r.rows_in;
    report["rows_out"] = r.rows_out;
    report["drops"] = {{"closure_failed", r.drop_closure},
                       {"no_property", r.drop_no_property}};
    report["parts_written"] = r.parts_written;
    report["parts_reused"] = r.parts_reused;
    report["outputs"] = {(cfg.out_dir / "filtered.csv").string(),
                         (cfg.out_dir / "contributions_by_patent.csv").string()};
    return report;
}

json run_optics_stage(const PipelineConfig& cfg) {
    auto filtered = cfg.out_dir / "filtered.csv";
    require_input(filtered, "filter");
    if (cfg.curation_file.empty())
        throw std::runtime_error("no curation dictionary configured — set paths.curation");
    CurationDictionary dict = CurationDictionary::load(cfg.curation_file.string());
    CompoundLexicon lexicon = CompoundLexicon::load(cfg.lexicon_file.string());

    auto queue = cfg.out_dir / "curation_queue_optics.txt";
    write_file(queue, "");
    OpticsReport r = run_optics(filtered.string(), dict, lexicon, cfg.filter, cfg.optics,
                                cfg.out_dir, queue);
    json report;
    report["rows_in"] = r.rows_in;
    report["rows_out"] = r.rows_out;
    report["drops"] = {{"no_n_candidate", r.drop_no_candidate},
                       {"unresolved_n", r.drop_unresolved}};
    report["rows_simple_n"] = r.rows_simple;
    report["ambiguous_rows"] = r.ambiguous_rows;
    report["queued_labels"] = r.queued_labels;
    report["outputs"] = {(cfg.out_dir / "optics_standardized.csv").string(),
                         (cfg.out_dir / "optics_simple_n.csv").string()};
    return report;
}

json run_liquidus_stage(const PipelineConfig& cfg) {
    auto filtered = cfg.out_dir / "filtered.csv";
    require_input(filtered, "filter");
    CurationDictionary dict = CurationDictionary::load(cfg.curation_file.string());
    CompoundLexicon lexicon = CompoundLexicon::load(cfg.lexicon_file.string());

    auto queue = cfg.out_dir / "curation_queue_liquidus.txt";
    write_file(queue, "");
    LiquidusReport r = run_liquidus(filtered.string(), dict, lexicon, cfg.filter, cfg.liquidus,
                                    cfg.out_dir, queue);
    json report;
    report["rows_in"] = r.rows_in;
    report["rows_out"] = r.rows_out;
    report["drops"] = {{"no_tliq_candidate", r.drop_no_candidate},
                       {"plausibility_failed", r.drop_plausibility}};
    report["output_rows"] = r.output_rows;
    report["generic_superseded"] = r.generic_superseded;
    report["queued_labels"] = r.queued_labels;
    report["outputs"] = {(cfg.out_dir / "liquidus.csv").string()};
    return report;
}

json run_basis_stage(const PipelineConfig& cfg) {
    auto optics_in = cfg.out_dir / "optics_standardized.csv";
    require_input(optics_in, "optics");
    auto liquidus_in = cfg.out_dir / "liquidus.csv";
    require_input(liquidus_in, "liquidus");
    if (cfg.molar_mass_file.empty())
        throw std::runtime_error("no molar mass file configured — set paths.molar_masses");
    CurationDictionary dict = CurationDictionary::load(cfg.curation_file.string());
    CompoundLexicon lexicon = CompoundLexicon::load(cfg.lexicon_file.string());
    MolarMassTable masses = MolarMassTable::load(cfg.molar_mass_file.string(), lexicon);

    auto audit = cfg.out_dir / "basis_audit.txt";
    auto errors = cfg.out_dir / "basis_errors.txt";
    write_file(audit, "");
    write_file(errors, "");

    json report;
    size_t rows_in = 0, rows_out = 0, unresolved = 0, conv_errors = 0;
    for (const auto& [input, flow] :
         {std::pair{optics_in, std::string("optics")}, {liquidus_in, std::string("liquidus")}}) {
        BasisReport r = run_basis(input.string(), dict, lexicon, masses, cfg.out_dir, flow,
                                  audit, errors);
        json flow_report;
        flow_report["rows_in"] = r.rows_in;
        flow_report["rows_out"] = r.rows_out;
        flow_report["unit_unresolved"] = r.drop_unit_unresolved;
        flow_report["conversion_errors"] = r.drop_conversion_error;
        report["flows"][flow] = flow_report;
        rows_in += r.rows_in;
        rows_out += r.rows_out;
        unresolved += r.drop_unit_unresolved;
        conv_errors += r.drop_conversion_error;
    }
    report["rows_in"] = rows_in;
    report["rows_out"] = rows_out;
    report["drops"] = {{"unit_unresolved", unresolved}, {"conversion_error", conv_errors}};
    report["outputs"] = {(cfg.out_dir / "optics_molpct.csv").string(),
                         (cfg.out_dir / "optics_wtpct.csv").string(),
                         (cfg.out_dir / "liquidus_molpct.csv").string(),
                         (cfg.out_dir / "liquidus_wtpct.csv").string(),
                         audit.string()};
    return report;
}

json run_compare_stage(const PipelineConfig& cfg) {
    auto optics_mol = cfg.out_dir / "optics_molpct.csv";
    auto liquidus_mol = cfg.out_dir / "liquidus_molpct.csv";
    require_input(optics_mol, "basis");
    require_input(liquidus_mol, "basis");
    if (cfg.references.size() < 2)
        throw std::runtime_error("compare needs two reference datasets in paths.references");
    CompoundLexicon lexicon = CompoundLexicon::load(cfg.lexicon_file.string());

    CompareDataset patents = merge_datasets(
        {load_compare_dataset(optics_mol.string(), lexicon, "Patents"),
         load_compare_dataset(liquidus_mol.string(), lexicon, "Patents")},
        "Patents");
    CompareDataset ref_a = load_compare_dataset(cfg.references[0].string(), lexicon,
                                                cfg.references[0].stem().string());
    CompareDataset ref_b = load_compare_dataset(cfg.references[1].string(), lexicon,
                                                cfg.references[1].stem().string());

    SubsetReport subsets = subset_report(patents, ref_a, ref_b, cfg.key_precision);
    write_file(cfg.out_dir / "subset_report.csv", subsets.to_csv());

    std::vector<CompareDataset> all = {patents, ref_a, ref_b};
    export_oxide_freq(all, 20, (cfg.out_dir / "oxide_freq.csv").string());
    export_histogram(all, "nd", cfg.histogram_bins, (cfg.out_dir / "hist_nd.csv").string());
    export_histogram(all, "abbe", cfg.histogram_bins, (cfg.out_dir / "hist_abbe.csv").string());
    export_histogram(all, "tliq", cfg.histogram_bins, (cfg.out_dir / "hist_tliq.csv").string());
    export_abbe_diagram(all, (cfg.out_dir / "abbe_diagram.csv").string());
    export_violin(all, cfg.violin_oxides, "nd", (cfg.out_dir / "violin_nd.csv").string());
    export_violin(all, cfg.violin_oxides, "abbe", (cfg.out_dir / "violin_abbe.csv").string());
    export_violin(all, cfg.violin_oxides, "tliq", (cfg.out_dir / "violin_tliq.csv").string());

    // patents-per-year over the publication dates of contributing patents
    std::set<std::string> pubs;
    for (const auto& id : patents.patent_ids)
        if (!id.empty()) pubs.insert(patent_prefix(id));
    std::vector<std::string> dates;
    for (const auto& pub : pubs) {
        auto record_path = cfg.out_dir / "records" / (pub + ".json");
        if (!std::filesystem::exists(record_path)) continue;
        PatentRecord record = PatentRecord::from_json(read_file(record_path));
        if (record.dates.size() >= 2) {
            dates.push_back(record.dates[1]);
        } else if (!record.dates.empty()) {
            dates.push_back(record.dates[0]);
        }
    }
    export_years(patents_per_year(dates), (cfg.out_dir / "patents_per_year.csv").string());

    json report;
    report["rows_in"] = patents.rows();
    report["rows_out"] = patents.rows();
    report["drops"] = json::object();
    report["reference_rows"] = {{ref_a.label, ref_a.rows()}, {ref_b.label, ref_b.rows()}};
    report["contributing_patents"] = pubs.size();
    report["outputs"] = {(cfg.out_dir / "subset_report.csv").string(),
                         (cfg.out_dir / "oxide_freq.csv").string(),
                         (cfg.out_dir / "abbe_diagram.csv").string(),
                         (cfg.out_dir / "patents_per_year.csv").string()};
    return report;
}

}  // namespace

const std::vector<std::string>& stage_names() {
    static const std::vector<std::string> names = {"ingest",  "extract",  "consolidate",
                                                   "filter",  "optics",   "liquidus",
                                                   "basis",   "compare"};
    return names;
}

int run_stage(const std::string& stage, const PipelineConfig& cfg, bool truncate_report) {
    std::filesystem::create_directories(cfg.out_dir);
    auto report_path = cfg.out_dir / "run_report.jsonl";
    if (truncate_report) write_file(report_path, "");

    std::vector<std::string> to_run;
    if (stage == "all") {
        to_run = stage_names();
    } else {
        to_run = {stage};
    }

    for (const auto& name : to_run) {
        auto start = std::chrono::steady_clock::now();
        json report;
        try {
            if (name == "ingest") report = run_ingest_stage(cfg);
            else if (name == "extract") report = run_extract_stage(cfg);
            else if (name == "consolidate") report = run_consolidate_stage(cfg);
            else if (name == "filter") report = run_filter_stage(cfg);
            else if (name == "optics") report = run_optics_stage(cfg);
            else if (name == "liquidus") report = run_liquidus_stage(cfg);
            else if (name == "basis") report = run_basis_stage(cfg);
            else if (name == "compare") report = run_compare_stage(cfg);
            else throw std::runtime_error("unknown stage: " + name);
        } catch (const std::exception& e) {
            std::cerr << "stage " << name << " failed: " << e.what() << "\n";
            return 2;
        }
        auto wall = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
        report["stage"] = name;
        report["wall_ms"] = wall;
        std::ofstream out(report_path, std::ios::binary | std::ios::app);
        out << report.dump() << "\n";
        std::cout << "stage " << name << ": rows_in=" << report.value("rows_in", 0)
                  << " rows_out=" << report.value("rows_out", 0) << " (" << wall << " ms)\n";
    }
    return 0;
}

}  // namespace glassmine
