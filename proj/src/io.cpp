#include "rep/io.hpp"

#include <array>
#include <charconv>

namespace rep::io {

std::string format_double(double v) {
    std::array<char, 32> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    if (ec != std::errc()) throw state_error("float formatting failed");
    return std::string(buf.data(), end);
}

std::string csv_line(std::span<const std::string> cells) {
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i > 0) line += ',';
        line += cells[i];
    }
    line += '\n';
    return line;
}

std::string summary_csv(const McSummary& summary) {
    std::string out = "checkpoint,component,mean,variance,se,min,max,count\n";
    for (std::size_t ci = 0; ci < summary.checkpoints.size(); ++ci) {
        for (std::size_t c = 0; c < summary.components.size(); ++c) {
            SummaryCell const& cell = summary.cell(ci, c);
            std::array<std::string, 8> const cells{
                std::to_string(summary.checkpoints[ci]),
                summary.components[c],
                format_double(cell.mean),
                format_double(cell.variance),
                format_double(cell.se),
                format_double(cell.min),
                format_double(cell.max),
                std::to_string(cell.count),
            };
            out += csv_line(cells);
        }
    }
    return out;
}

namespace {

const char* comparison_name(CheckRow::Kind kind) {
    switch (kind) {
        case CheckRow::Kind::two_sided: return "two_sided";
        case CheckRow::Kind::at_least: return "at_least";
        case CheckRow::Kind::at_most: return "at_most";
    }
    return "unknown";
}

} // namespace

nlohmann::json report_rows(const CheckReport& report, nlohmann::json params,
                           bool include_wall_time) {
    nlohmann::json rows = nlohmann::json::array();
    for (CheckRow const& row : report.rows) {
        nlohmann::json r{
            {"test", report.name},
            {"params", params},
            {"statistic", row.label},
            {"estimate", row.estimate},
            {"target", row.target},
            {"tolerance", row.tolerance},
            {"comparison", comparison_name(row.kind)},
            {"pass", row.pass},
            {"seeds", {{"master", report.master_seed}}},
        };
        if (include_wall_time) r["wall_time"] = report.wall_seconds;
        rows.push_back(std::move(r));
    }
    return rows;
}

} // namespace rep::io
