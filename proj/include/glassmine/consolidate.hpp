// Merge per-block CSVs under one schema: header union, streaming vertical
// append, empty-column pruning.
#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "glassmine/csv.hpp"

namespace glassmine {

// Ordered union of column labels across files, first occurrence preserved.
using SchemaUnion = std::vector<std::string>;

struct UnionResult {
    SchemaUnion schema;
    std::vector<std::string> warnings;  // files whose header could not be read
};

// Reads only the header line of each file. Throws when no file yields a
// valid header.
UnionResult union_headers(const std::vector<std::string>& paths);

// Streams one file's rows into the sink, reordered/padded to the schema
// (missing columns filled with the empty string). Fully empty rows are
// discarded; no deduplication. Returns rows appended; rows_read reports the
// data rows scanned when non-null.
size_t append_aligned(std::ostream& sink, const std::string& path, const SchemaUnion& schema,
                      size_t* rows_read = nullptr);

struct ConsolidateReport {
    size_t rows_in = 0;
    size_t rows_out = 0;
    size_t empty_rows_dropped = 0;
    std::vector<std::string> warnings;
};

// Full consolidation: union headers, write header once, append every file in
// the given order, then prune 100% empty columns.
ConsolidateReport consolidate_files(const std::vector<std::string>& paths,
                                    const std::string& out_path);

// Removes columns that are empty in every row; rewrites the file in place.
// Idempotent.
void prune_empty_columns(const std::string& path);

}  // namespace glassmine
