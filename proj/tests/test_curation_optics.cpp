#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>

#include "glassmine/io_util.hpp"
#include "glassmine/optics.hpp"

using namespace glassmine;
namespace fs = std::filesystem;

namespace {
fs::path fresh_dir(const std::string& name) {
    fs::path dir = fs::temp_directory_path() / ("glassmine_optics_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

CompoundLexicon lex() {
    return CompoundLexicon::from_formulas(
        {"SiO2", "ZrO2", "B2O3", "La2O3", "Na2O", "Al2O3", "CaO"});
}

CurationDictionary seed_dict() {
    CurationDictionary d;
    d.label_map = {{"nd", "nD"},
                   {"refractive index (587.6 nm)", "nD"},
                   {"nf (486.13 nm)", "nF"},
                   {"νd", "Abbe Number"}};
    d.blacklist = {"density"};
    d.patent_wavelength_map = {{"USMAPPED1", "nD"}};
    return d;
}
}  // namespace

TEST_CASE("curation dictionary round trip and validation") {
    CurationDictionary d = seed_dict();
    d.patent_unit_map = {{"USX1", "Tliq(°C)"}};
    d.patent_basis_map = {{"USX1", "mol"}};
    auto path = fresh_dir("dict") / "dict.json";
    d.dump(path.string());
    CurationDictionary back = CurationDictionary::load(path.string());
    CHECK(back.label_map == d.label_map);
    CHECK(back.blacklist == d.blacklist);
    CHECK(back.patent_wavelength_map == d.patent_wavelength_map);
    CHECK(back.patent_unit_map == d.patent_unit_map);
    CHECK(back.patent_basis_map == d.patent_basis_map);

    CurationDictionary broken = d;
    broken.blacklist.insert("nd");  // same label in both routes
    CHECK_THROWS(broken.validate());

    CurationDictionary bad_target = d;
    bad_target.label_map["x"] = "nQ";
    CHECK_THROWS(bad_target.validate());

    CurationDictionary bad_basis = d;
    bad_basis.patent_basis_map["USY"] = "grams";
    CHECK_THROWS(bad_basis.validate());
}

TEST_CASE("shipped curation dictionary is valid") {
    CHECK_NOTHROW(CurationDictionary::load(std::string(GLASSMINE_DATA_DIR) + "/curation.json"));
}

TEST_CASE("label classification partition is total and disjoint") {
    CurationDictionary d = seed_dict();
    std::vector<std::string> labels = {"nd", "density", "n", "refractive index (587.6 nm)",
                                       "n (656.3 nm)", "merged index"};
    for (const auto& label : labels) {
        auto r = classify_label(label, d, has_wavelength_marker(label));
        int clazz = r.cls == ColumnClass::FalsePositive ? 0
                    : r.cls == ColumnClass::ExplicitUnit ? 1
                                                         : 2;
        CHECK((clazz == 0 || clazz == 1 || clazz == 2));
    }
    CHECK(classify_label("density", d, false).cls == ColumnClass::FalsePositive);
    CHECK(classify_label("nd", d, false).cls == ColumnClass::ExplicitUnit);
    CHECK(classify_label("nd", d, false).target == "nD");
    // explicit wavelength marker without a curated entry: class i, unresolved
    auto unresolved = classify_label("n (656.3 nm)", d, has_wavelength_marker("n (656.3 nm)"));
    CHECK(unresolved.cls == ColumnClass::ExplicitUnit);
    CHECK(unresolved.target.empty());
    CHECK(classify_label("n", d, false).cls == ColumnClass::Generic);
}

TEST_CASE("wavelength and abbe markers") {
    CHECK(has_wavelength_marker("refractive index (587.6 nm)"));
    CHECK(has_wavelength_marker("n at 486.13nm"));
    CHECK_FALSE(has_wavelength_marker("nd"));
    CHECK_FALSE(has_wavelength_marker("n 1"));
    CHECK(mentions_abbe("νd"));
    CHECK(mentions_abbe("abbe number"));
    CHECK(mentions_abbe("vd"));
    CHECK_FALSE(mentions_abbe("nd"));  // Greek distinction preserved
}

TEST_CASE("plausible n column rule") {
    OpticsConfig cfg;
    CHECK(plausible_n_column({1.8046, 1.8082}, cfg));
    CHECK_FALSE(plausible_n_column({2.5, 6.1}, cfg));
    CHECK_FALSE(plausible_n_column({1.0}, cfg));  // open lower bound
    CHECK(plausible_n_column({5.0}, cfg));        // closed upper bound
}

TEST_CASE("merged refractive marker") {
    CHECK(merged_refractive_marker({1.950}) == 1.950);
    CHECK(merged_refractive_marker({1.95, 1.96}) == kAmbiguousMarker);
    CHECK(merged_refractive_marker({}) == 0.0);
    CHECK(merged_refractive_marker({0.0, 1.8046, 0.0}) == 1.8046);
}

namespace {
OpticsReport run_on(const std::string& csv, const fs::path& dir, const CurationDictionary& d,
                    CsvFile* standardized = nullptr, CsvFile* simple = nullptr) {
    auto input = dir / "filtered.csv";
    write_file(input, csv);
    auto queue = dir / "queue.txt";
    write_file(queue, "");
    OpticsReport r = run_optics(input.string(), d, lex(), FilterConfig{}, OpticsConfig{}, dir,
                                queue);
    if (standardized)
        *standardized = read_csv_file((dir / "optics_standardized.csv").string());
    if (simple) *simple = read_csv_file((dir / "optics_simple_n.csv").string());
    return r;
}
}  // namespace

TEST_CASE("curated nd and νd labels standardize to nD and Abbe Number") {
    auto dir = fresh_dir("t4");
    std::string csv =
        "sio2,zro2,b2o3,la2o3,nd,νd,patent_id,unit\n"
        "12.32,3.23,29.72,54.73,1.8046,40.6,usopt1_b0,mol\n";
    CsvFile std_out;
    CsvFile simple;
    auto r = run_on(csv, dir, seed_dict(), &std_out, &simple);
    CHECK(r.rows_out == 1);
    REQUIRE(std_out.rows.size() == 1);
    // header: oxides, nD..nC, Abbe Number, patent_id, unit
    REQUIRE(std_out.header.size() == 4 + 5 + 1 + 2);
    CHECK(std_out.header[4] == "nD");
    CHECK(std_out.rows[0][4] == "1.8046");
    CHECK(std_out.header[9] == "Abbe Number");
    CHECK(std_out.rows[0][9] == "40.6");
    REQUIRE(simple.rows.size() == 1);
    CHECK(simple.rows[0][4] == "1.8046");  // Merged Refractive Index
}

TEST_CASE("row with only abbe value is excluded") {
    auto dir = fresh_dir("abbeonly");
    std::string csv =
        "sio2,zro2,b2o3,la2o3,nd,νd,patent_id,unit\n"
        "12.32,3.23,29.72,54.73,0,40.6,usopt1_b0,mol\n";
    auto r = run_on(csv, dir, seed_dict());
    CHECK(r.rows_out == 0);
    CHECK(r.rows_simple == 0);
}

TEST_CASE("blacklisted column is suppressed and blackonly rows drop") {
    auto dir = fresh_dir("blacklist");
    // three rows traced by hand: (1) nd + density, kept; (2) density only,
    // dropped; (3) nd only, kept
    std::string csv =
        "sio2,zro2,b2o3,la2o3,nd,density,patent_id,unit\n"
        "50,10,20,20,1.72,3.5,usopt2_b0,mol\n"
        "60,10,15,15,0,3.6,usopt2_b0,mol\n"
        "55,15,15,15,1.69,0,usopt2_b0,mol\n";
    CsvFile std_out;
    auto r = run_on(csv, dir, seed_dict(), &std_out);
    CHECK(r.rows_out == 2);
    CHECK(r.drop_no_candidate == 1);
    for (const auto& row : std_out.rows)
        for (const auto& cell : row) CHECK(cell != "3.5");
}

TEST_CASE("generic resolution via the patent wavelength map") {
    auto dir = fresh_dir("generic");
    CurationDictionary d = seed_dict();
    std::string csv =
        "sio2,zro2,b2o3,la2o3,n,patent_id,unit\n"
        "50,10,20,20,1.52,usmapped1_b0,mol\n"    // mapped -> nD
        "60,10,15,15,1.55,usunmapped_b0,mol\n";  // unmapped -> queued
    CsvFile std_out;
    auto r = run_on(csv, dir, d, &std_out);
    CHECK(r.rows_out == 1);
    CHECK(r.drop_unresolved == 1);
    REQUIRE(std_out.rows.size() == 1);
    CHECK(std_out.rows[0][4] == "1.52");  // nD column
    std::string queued = read_file(dir / "queue.txt");
    CHECK(queued.find("usunmapped_b0\tn") != std::string::npos);
    CHECK(queued.find("usmapped1_b0") == std::string::npos);
}

TEST_CASE("two generic values are ambiguous and never promoted") {
    auto dir = fresh_dir("twogeneric");
    std::string csv =
        "sio2,zro2,b2o3,la2o3,n 1,n 2,patent_id,unit\n"
        "50,10,20,20,1.95,1.96,usmapped1_b0,mol\n";
    CsvFile std_out;
    CsvFile simple;
    auto r = run_on(csv, dir, seed_dict(), &std_out, &simple);
    CHECK(r.rows_out == 0);
    CHECK(r.ambiguous_rows == 1);
    CHECK(std_out.rows.empty());
    CHECK(simple.rows.empty());  // ambiguous row absent from the simple subset
    CHECK(r.queued_labels == 2);
}

TEST_CASE("values are relocated, never modified") {
    auto dir = fresh_dir("relocate");
    std::string csv =
        "sio2,zro2,b2o3,la2o3,nd,nf (486.13 nm),patent_id,unit\n"
        "40,20,20,20,1.8046,1.8121,usopt3_b0,mol\n"
        "45,15,20,20,1.756,0,usopt3_b0,mol\n";
    CsvFile std_out;
    auto r = run_on(csv, dir, seed_dict(), &std_out);
    CHECK(r.rows_out == 2);
    std::multiset<std::string> in_values = {"1.8046", "1.8121", "1.756"};
    std::multiset<std::string> out_values;
    for (const auto& row : std_out.rows)
        for (size_t c = 4; c < 9; ++c)
            if (row[c] != "0") out_values.insert(row[c]);
    CHECK(out_values == in_values);
    // ambiguity marker never appears in outputs
    for (const auto& row : std_out.rows)
        for (const auto& cell : row) CHECK(cell != "-1");
}
