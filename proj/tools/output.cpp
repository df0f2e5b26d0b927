#include "output.hpp"

#include <cmath>
#include <stdexcept>

#include "qws/format.hpp"

namespace qws::cli {

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

}  // namespace

void write_csv(std::ostream& os, const Table& table) {
    for (std::size_t i = 0; i < table.columns.size(); ++i)
        os << (i ? "," : "") << table.columns[i];
    os << "\n";
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            os << (i ? "," : "") << format_number(row[i]);
        os << "\n";
    }
}

void write_json(std::ostream& os, const Table& table) {
    os << "{\"meta\":{";
    for (std::size_t i = 0; i < table.meta.size(); ++i) {
        os << (i ? "," : "") << "\"" << json_escape(table.meta[i].first) << "\":\""
           << json_escape(table.meta[i].second) << "\"";
    }
    os << "},\"data\":[";
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        os << (r ? "," : "") << "{";
        const auto& row = table.rows[r];
        for (std::size_t i = 0; i < row.size(); ++i) {
            os << (i ? "," : "") << "\"" << json_escape(table.columns[i]) << "\":";
            if (std::isfinite(row[i]))
                os << format_number(row[i]);
            else
                os << "null";
        }
        os << "}";
    }
    os << "]}\n";
}

void write_table(std::ostream& os, const Table& table, const std::string& format) {
    if (format == "csv")
        write_csv(os, table);
    else if (format == "json")
        write_json(os, table);
    else
        throw std::invalid_argument("output format must be csv or json");
}

}  // namespace qws::cli
