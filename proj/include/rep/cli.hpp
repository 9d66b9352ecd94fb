#pragma once

// Command-line front end: every module behind a subcommand, reproducible
// seeds (flag > REINFORCED_EP_SEED > 42), CSV or JSON output, and the
// acceptance suite behind `accept`. Exit codes: 0 success (for `accept`,
// only when every criterion passes), 1 runtime failure, 2 usage error.

#include <cstdint>
#include <string>

namespace rep::cli {

struct RunConfig {
    std::string subcommand;  // "help" when a help flag was parsed
    std::string help_text;   // filled alongside subcommand == "help"

    double p = 0.5;
    std::uint64_t n = 1'000;
    std::uint64_t n_min = 0;  // 0: derived from n / points
    std::uint64_t n_max = 1'000'000;
    std::uint64_t replicates = 100;
    std::uint64_t trunc = 0;  // bp bridge jump truncation; 0 = automatic
    std::uint64_t seed = 42;
    std::uint32_t points = 0;  // 0: per-command default
    std::uint32_t grid = 0;    // 0: per-command default
    std::uint32_t k_max = 5;
    std::uint32_t workers = 1;
    std::uint32_t count = 1;         // bridge sample paths
    std::string kind = "brownian";   // bridge: brownian | bp
    std::string steps = "pm1";       // walk: pm1 | uniform
    std::string profile = "quick";   // accept: quick | full
    std::string method = "recursion";  // moments: recursion | closed
    std::string isa = "auto";        // auto | scalar | avx2
    std::string format = "csv";      // csv | json
    std::string out;                 // empty: stdout
    bool timing = false;             // include wall_time in reports
    bool report = false;             // walk: regime report instead of a path
};

// Parses argv (argv[0] is the program name). Help requests come back as
// subcommand == "help" with the text to print; invalid usage throws
// param_error. Programmatic entry point — the binary goes through run().
RunConfig parse_args(int argc, const char* const* argv);

// Executes a parsed config; may throw on runtime failures.
int dispatch(const RunConfig& config);

// Full front end: parse, print usage/help, dispatch, map errors to exit
// codes 0/1/2.
int run(int argc, const char* const* argv) noexcept;

} // namespace rep::cli
