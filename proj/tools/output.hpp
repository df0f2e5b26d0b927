#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace qws::cli {

/// Column-oriented result table. CSV: header row, comma delimiter, LF
/// endings. JSON: {"meta": {...}, "data": [...]} with one object per
/// row. Numeric tokens go through format_number in both formats so
/// identical runs emit identical bytes; non-finite values become null in
/// JSON.
struct Table {
    std::vector<std::pair<std::string, std::string>> meta;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

void write_csv(std::ostream& os, const Table& table);
void write_json(std::ostream& os, const Table& table);

/// Dispatch on "csv" / "json".
void write_table(std::ostream& os, const Table& table, const std::string& format);

}  // namespace qws::cli
