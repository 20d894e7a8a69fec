// Streaming CSV reader/writer. UTF-8, comma-delimited, RFC4180-style quoting,
// memory bounded by one row regardless of file size.
#pragma once

#include <fstream>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace glassmine {

using CsvRow = std::vector<std::string>;

class CsvParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class CsvReader {
  public:
    explicit CsvReader(std::istream& in) : in_(in) {}

    // Reads the next row. Returns false on clean EOF. Throws CsvParseError on
    // an unterminated quoted field.
    bool next(CsvRow& row);

  private:
    std::istream& in_;
};

class CsvWriter {
  public:
    explicit CsvWriter(std::ostream& out) : out_(out) {}
    void write_row(const CsvRow& row);

  private:
    std::ostream& out_;
};

// Reads a whole CSV file. First row is the header unless the file is empty.
struct CsvFile {
    CsvRow header;
    std::vector<CsvRow> rows;
};
CsvFile read_csv_file(const std::string& path);

void write_csv_file(const std::string& path, const CsvRow& header,
                    const std::vector<CsvRow>& rows);

// Header line only, without loading data. nullopt if the file cannot be
// opened, is empty, or the header fails to parse.
std::optional<CsvRow> read_csv_header(const std::string& path);

}  // namespace glassmine
