#include "switchtherm/report.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <ostream>

namespace switchtherm::report {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm_utc{};
    gmtime_r(&now, &tm_utc);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buf;
}

void write_csv(std::ostream& os, const sweep::Table& table) {
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        if (c > 0) os << ',';
        os << table.columns[c];
    }
    os << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0) os << ',';
            os << format_double(row[c]);
        }
        os << '\n';
    }
}

nlohmann::ordered_json table_json(const sweep::Table& table) {
    nlohmann::ordered_json j;
    j["columns"] = table.columns;
    j["rows"] = table.rows;
    return j;
}

}  // namespace switchtherm::report
