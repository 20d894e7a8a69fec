#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "glassmine/consolidate.hpp"
#include "glassmine/io_util.hpp"

using namespace glassmine;
namespace fs = std::filesystem;

namespace {
fs::path scratch() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "glassmine_consolidate";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string make_csv(const std::string& name, const std::string& content) {
    auto path = scratch() / name;
    write_file(path, content);
    return path.string();
}
}  // namespace

TEST_CASE("union_headers first-occurrence order") {
    auto a = make_csv("u1.csv", "A,B\n1,2\n");
    auto b = make_csv("u2.csv", "B,C\n3,4\n");
    auto u = union_headers({a, b});
    CHECK(u.schema == SchemaUnion{"A", "B", "C"});
    CHECK(u.warnings.empty());

    // single file: its own header
    CHECK(union_headers({a}).schema == SchemaUnion{"A", "B"});
}

TEST_CASE("union_headers skips unreadable headers with a warning") {
    auto good = make_csv("g.csv", "A,B\n1,2\n");
    auto corrupt = make_csv("bad.csv", "\"A,B\n1,2\n");  // dangling quote
    auto empty = make_csv("empty.csv", "");
    auto u = union_headers({corrupt, good, empty});
    CHECK(u.schema == SchemaUnion{"A", "B"});
    CHECK(u.warnings.size() == 2);

    CHECK_THROWS_WITH(union_headers({corrupt, empty}),
                      doctest::Contains("no valid header"));
}

TEST_CASE("append_aligned pads, reorders, and drops empty rows") {
    auto file = make_csv("a1.csv", "B,C\n1,2\n,\n3,4\n");
    std::ostringstream sink;
    size_t rows_read = 0;
    size_t appended = append_aligned(sink, file, {"A", "B", "C"}, &rows_read);
    CHECK(appended == 2);
    CHECK(rows_read == 3);
    CHECK(sink.str() == ",1,2\n,3,4\n");
}

TEST_CASE("consolidate_files row count equals sum of non-empty input rows") {
    auto a = make_csv("c1.csv", "A,B\n1,2\n3,4\n");
    auto b = make_csv("c2.csv", "B,C\n5,6\n,\n7,8\n");
    auto out = (scratch() / "consolidated.csv").string();
    auto report = consolidate_files({a, b}, out);
    CHECK(report.rows_in == 5);
    CHECK(report.rows_out == 4);  // hand count of non-empty rows
    CHECK(report.empty_rows_dropped == 1);
    auto merged = read_csv_file(out);
    CHECK(merged.header == CsvRow{"A", "B", "C"});
    REQUIRE(merged.rows.size() == 4);
    CHECK(merged.rows[0] == CsvRow{"1", "2", ""});
    CHECK(merged.rows[2] == CsvRow{"", "5", "6"});
}

TEST_CASE("prune_empty_columns") {
    auto path = make_csv("p.csv", "A,B,C\n1,,2\n3,,4\n");
    prune_empty_columns(path);
    auto file = read_csv_file(path);
    CHECK(file.header == CsvRow{"A", "C"});

    // column with a single value among many rows is kept
    std::string many = "A,B\n";
    for (int i = 0; i < 9999; ++i) many += "1,\n";
    many += "1,x\n";
    auto sparse = make_csv("sparse.csv", many);
    prune_empty_columns(sparse);
    CHECK(read_csv_file(sparse).header == CsvRow{"A", "B"});

    // idempotence
    auto before = read_file(path);
    prune_empty_columns(path);
    CHECK(read_file(path) == before);
}

TEST_CASE("output is independent of enumeration order up to row order") {
    auto a = make_csv("o1.csv", "A,B\n1,2\n");
    auto b = make_csv("o2.csv", "B,C\n3,4\n5,6\n");
    auto c = make_csv("o3.csv", "C,A\n7,8\n");
    auto out1 = (scratch() / "order1.csv").string();
    auto out2 = (scratch() / "order2.csv").string();
    consolidate_files({a, b, c}, out1);
    consolidate_files({c, a, b}, out2);
    auto f1 = read_csv_file(out1);
    auto f2 = read_csv_file(out2);
    // align rows of the second run to the first run's schema, then compare as sets
    auto normalize = [](const CsvFile& f) {
        std::multiset<std::multiset<std::pair<std::string, std::string>>> rows;
        for (const auto& row : f.rows) {
            std::multiset<std::pair<std::string, std::string>> cells;
            for (size_t i = 0; i < row.size(); ++i)
                if (!row[i].empty()) cells.insert({f.header[i], row[i]});
            rows.insert(cells);
        }
        return rows;
    };
    CHECK(normalize(f1) == normalize(f2));
}

TEST_CASE("append aborts with file and row index on write failure") {
    auto a = make_csv("w.csv", "A\n1\n2\n");
    std::ostringstream sink;
    sink.setstate(std::ios::badbit);
    CHECK_THROWS_WITH(append_aligned(sink, a, {"A"}), doctest::Contains("row 1"));
}

TEST_CASE("consolidation preserves the multiset of non-empty cells") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> ncols(1, 4), nrows(0, 6), val(0, 9);
    std::vector<std::string> all_labels = {"A", "B", "C", "D", "E"};

    std::vector<std::string> paths;
    std::multiset<std::pair<std::string, std::string>> expected;
    for (int f = 0; f < 5; ++f) {
        std::shuffle(all_labels.begin(), all_labels.end(), rng);
        int cols = ncols(rng);
        std::ostringstream csv;
        for (int c = 0; c < cols; ++c) csv << (c ? "," : "") << all_labels[c];
        csv << "\n";
        int rows = nrows(rng);
        for (int r = 0; r < rows; ++r) {
            bool any = false;
            std::vector<std::string> cells;
            for (int c = 0; c < cols; ++c) {
                if (val(rng) < 7) {
                    cells.push_back(std::to_string(val(rng)));
                    any = true;
                } else {
                    cells.push_back("");
                }
            }
            for (int c = 0; c < cols; ++c) csv << (c ? "," : "") << cells[c];
            csv << "\n";
            if (any)
                for (int c = 0; c < cols; ++c)
                    if (!cells[c].empty()) expected.insert({all_labels[c], cells[c]});
        }
        paths.push_back(make_csv("m" + std::to_string(f) + ".csv", csv.str()));
    }
    auto out = (scratch() / "multiset.csv").string();
    consolidate_files(paths, out);
    auto merged = read_csv_file(out);
    std::multiset<std::pair<std::string, std::string>> got;
    for (const auto& row : merged.rows)
        for (size_t c = 0; c < row.size(); ++c)
            if (!row[c].empty()) got.insert({merged.header[c], row[c]});
    CHECK(got == expected);
}
