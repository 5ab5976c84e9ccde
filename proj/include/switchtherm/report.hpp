// report.hpp — deterministic CSV/JSON serialization for sweep tables and
// scalar reports.

#pragma once

#include "switchtherm/sweep.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>

namespace switchtherm::report {

inline constexpr const char* kToolVersion = "0.1.0";

// 17 significant digits, '.' decimal separator; round-trips any double.
std::string format_double(double v);

// ISO-8601 UTC, e.g. 2026-08-09T12:34:56Z.
std::string utc_timestamp();

// One header row with the column names, then one comma-separated row per grid
// point. Byte-identical for identical tables.
void write_csv(std::ostream& os, const sweep::Table& table);

// {"columns": [...], "rows": [[...], ...]} with insertion-ordered keys.
nlohmann::ordered_json table_json(const sweep::Table& table);

}  // namespace switchtherm::report
