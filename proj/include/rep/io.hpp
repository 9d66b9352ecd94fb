#pragma once

// Output formatting: shortest round-trip floats (so emitted numbers parse
// back to the identical bit pattern), minimal CSV assembly, and the JSON
// report rows {test, params, statistic, estimate, target, tolerance,
// comparison, pass, seeds, wall_time} described by docs/report.schema.json.
// wall_time is emitted only on request: identical invocations must produce
// byte-identical output, and wall time is the one field that never repeats.

#include "rep/harness.hpp"

#include "json.hpp"

#include <span>
#include <string>

namespace rep::io {

// Shortest decimal form that round-trips the exact double.
std::string format_double(double v);

// One CSV record: cells joined by commas, newline-terminated. Cells are
// emitted as-is (numeric output needs no quoting).
std::string csv_line(std::span<const std::string> cells);

// Per-checkpoint/component aggregate table with a header row.
std::string summary_csv(const McSummary& summary);

// A report flattened to an array of row objects; params is echoed into every
// row so each row is self-describing.
nlohmann::json report_rows(const CheckReport& report, nlohmann::json params,
                           bool include_wall_time);

} // namespace rep::io
