#include "glassmine/csv.hpp"

#include <istream>
#include <ostream>

namespace glassmine {

bool CsvReader::next(CsvRow& row) {
    row.clear();
    int c = in_.get();
    if (c == EOF) return false;

    std::string field;
    bool in_quotes = false;
    bool any = false;
    while (true) {
        if (c == EOF) {
            if (in_quotes) throw CsvParseError("unterminated quoted field at end of input");
            row.push_back(std::move(field));
            return true;
        }
        char ch = static_cast<char>(c);
        if (in_quotes) {
            if (ch == '"') {
                int peek = in_.peek();
                if (peek == '"') {
                    in_.get();
                    field.push_back('"');
                } else {
                    in_quotes = false;
                }
            } else {
                field.push_back(ch);
            }
        } else if (ch == '"' && field.empty() && !any) {
            in_quotes = true;
        } else if (ch == ',') {
            row.push_back(std::move(field));
            field.clear();
            any = false;
            c = in_.get();
            continue;
        } else if (ch == '\n') {
            row.push_back(std::move(field));
            return true;
        } else if (ch == '\r') {
            if (in_.peek() == '\n') in_.get();
            row.push_back(std::move(field));
            return true;
        } else {
            field.push_back(ch);
            any = true;
        }
        if (!in_quotes && ch == '"') any = true;  // closed quote: bare quotes after are literal
        c = in_.get();
    }
}

void CsvWriter::write_row(const CsvRow& row) {
    for (size_t i = 0; i < row.size(); ++i) {
        if (i) out_.put(',');
        const std::string& f = row[i];
        bool needs_quote = f.find_first_of(",\"\r\n") != std::string::npos;
        if (!needs_quote) {
            out_ << f;
        } else {
            out_.put('"');
            for (char c : f) {
                if (c == '"') out_.put('"');
                out_.put(c);
            }
            out_.put('"');
        }
    }
    out_.put('\n');
}

CsvFile read_csv_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open CSV file: " + path);
    CsvFile file;
    CsvReader reader(in);
    CsvRow row;
    if (reader.next(row)) file.header = row;
    while (reader.next(row)) file.rows.push_back(row);
    return file;
}

void write_csv_file(const std::string& path, const CsvRow& header,
                    const std::vector<CsvRow>& rows) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write CSV file: " + path);
    CsvWriter writer(out);
    writer.write_row(header);
    for (const auto& r : rows) writer.write_row(r);
}

std::optional<CsvRow> read_csv_header(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    CsvReader reader(in);
    CsvRow row;
    try {
        if (!reader.next(row)) return std::nullopt;
    } catch (const CsvParseError&) {
        return std::nullopt;
    }
    bool all_empty = true;
    for (const auto& f : row)
        if (!f.empty()) all_empty = false;
    if (all_empty) return std::nullopt;
    return row;
}

}  // namespace glassmine
