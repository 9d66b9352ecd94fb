#include "rep/cli.hpp"

#include "rep/accept.hpp"
#include "rep/empirical.hpp"
#include "rep/errors.hpp"
#include "rep/harness.hpp"
#include "rep/io.hpp"
#include "rep/kernels.hpp"
#include "rep/limits.hpp"
#include "rep/oracles.hpp"
#include "rep/rng.hpp"
#include "rep/simon.hpp"
#include "rep/steps.hpp"
#include "rep/walks.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

namespace rep::cli {
namespace {

using nlohmann::json;

// Probabilities are validated at parse time so a bad --p is a usage error
// (exit 2), not a runtime failure.
const CLI::Validator kOpenUnit(
    [](std::string& value) -> std::string {
        char* end = nullptr;
        const double v = std::strtod(value.c_str(), &end);
        if (end == nullptr || *end != '\0' || !(v > 0.0 && v < 1.0))
            return "must lie strictly inside (0, 1)";
        return std::string{};
    },
    "(0,1)");

void add_common(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--seed", cfg.seed, "Master seed (env REINFORCED_EP_SEED, then 42)")
        ->envname("REINFORCED_EP_SEED")
        ->capture_default_str();
    sub->add_option("--workers", cfg.workers, "Worker threads for replicate sweeps")
        ->check(CLI::Range(1u, 256u))
        ->capture_default_str();
    sub->add_option("--isa", cfg.isa, "Kernel instruction set")
        ->check(CLI::IsMember({"auto", "scalar", "avx2"}))
        ->capture_default_str();
    sub->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sub->add_option("--out", cfg.out, "Write output to a file instead of stdout");
    sub->add_flag("--timing", cfg.timing, "Include wall-clock time in reports");
}

void build_app(CLI::App& app, RunConfig& cfg) {
    app.require_subcommand(1);

    auto* simulate = app.add_subcommand(
        "simulate", "One reinforced sequence; snapshot rows at checkpoints");
    simulate->add_option("--p", cfg.p, "Reinforcement probability")
        ->check(kOpenUnit)
        ->capture_default_str();
    simulate->add_option("--n", cfg.n, "Final length")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    simulate->add_option("--points", cfg.points, "Checkpoints, geometric up to n (default 1)")
        ->check(CLI::Range(1u, 512u));
    simulate->add_option("--n-min", cfg.n_min, "First checkpoint (default n/1000, at least 1)");
    add_common(simulate, cfg);

    auto* moments = app.add_subcommand(
        "moments", "Exact E S^2(m) table for m = 1..n");
    moments->add_option("--p", cfg.p, "Reinforcement probability")
        ->check(kOpenUnit)
        ->capture_default_str();
    moments->add_option("--n", cfg.n, "Table length")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    moments->add_option("--method", cfg.method, "recursion (O(n) total) or closed (per-row gamma form)")
        ->check(CLI::IsMember({"recursion", "closed"}))
        ->capture_default_str();
    add_common(moments, cfg);

    auto* empirical = app.add_subcommand(
        "empirical", "Scaled empirical bridge of one run on a uniform grid");
    empirical->add_option("--p", cfg.p, "Reinforcement probability")
        ->check(kOpenUnit)
        ->capture_default_str();
    empirical->add_option("--n", cfg.n, "Run length")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    empirical->add_option("--grid", cfg.grid, "Grid points (default 101)")
        ->check(CLI::Range(2u, 1u << 24));
    add_common(empirical, cfg);

    auto* bridge = app.add_subcommand(
        "bridge", "Sample limiting bridges (Brownian or supercritical jump)");
    bridge->add_option("--kind", cfg.kind, "brownian or bp")
        ->check(CLI::IsMember({"brownian", "bp"}))
        ->capture_default_str();
    bridge->add_option("--p", cfg.p, "Reinforcement probability (bp kind; needs p > 1/2)")
        ->check(kOpenUnit)
        ->capture_default_str();
    bridge->add_option("--n", cfg.n, "Engine length for bp jump-size estimation")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    bridge->add_option("--grid", cfg.grid, "Grid points (default 2048)")
        ->check(CLI::Range(2u, 1u << 24));
    bridge->add_option("--count", cfg.count, "Sample paths to draw")
        ->check(CLI::Range(1u, 1u << 20))
        ->capture_default_str();
    bridge->add_option("--trunc", cfg.trunc, "bp jump truncation (0 = automatic)");
    add_common(bridge, cfg);

    auto* scan = app.add_subcommand(
        "regime-scan", "Mean S^2 growth exponent over a geometric checkpoint grid");
    scan->add_option("--p", cfg.p, "Reinforcement probability")
        ->check(kOpenUnit)
        ->capture_default_str();
    scan->add_option("--n-min", cfg.n_min, "Smallest checkpoint (default 1000)");
    scan->add_option("--n-max", cfg.n_max, "Largest checkpoint")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    scan->add_option("--points", cfg.points, "Checkpoints (default 4)")
        ->check(CLI::Range(4u, 64u));
    scan->add_option("--replicates", cfg.replicates, "Replicates per sweep")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_common(scan, cfg);

    auto* yule = app.add_subcommand(
        "yule", "Cluster-size frequencies against the Yule-Simon law");
    yule->add_option("--p", cfg.p, "Reinforcement probability")
        ->check(kOpenUnit)
        ->capture_default_str();
    yule->add_option("--n", cfg.n, "Run length")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    yule->add_option("--replicates", cfg.replicates, "Monte Carlo replicates")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    yule->add_option("--k-max", cfg.k_max, "Largest class size checked")
        ->check(CLI::Range(1u, 64u))
        ->capture_default_str();
    add_common(yule, cfg);

    auto* walk = app.add_subcommand(
        "walk", "Step-reinforced random walk (elephant walk for +/-1 steps)");
    walk->add_option("--p", cfg.p, "Memory / reinforcement probability")
        ->check(kOpenUnit)
        ->capture_default_str();
    walk->add_option("--n", cfg.n, "Walk length")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    walk->add_option("--points", cfg.points, "Checkpoints, geometric up to n (default 1)")
        ->check(CLI::Range(1u, 512u));
    walk->add_option("--n-min", cfg.n_min, "First checkpoint (default n/1000, at least 1)");
    walk->add_option("--steps", cfg.steps, "Step measure: pm1 or uniform")
        ->check(CLI::IsMember({"pm1", "uniform"}))
        ->capture_default_str();
    walk->add_flag("--report", cfg.report, "Regime report over replicates instead of one path");
    walk->add_option("--replicates", cfg.replicates, "Replicates for --report")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_common(walk, cfg);

    auto* accept = app.add_subcommand(
        "accept", "Acceptance suite; exit 0 only when every criterion passes");
    accept->add_option("--profile", cfg.profile, "quick or full")
        ->check(CLI::IsMember({"quick", "full"}))
        ->capture_default_str();
    add_common(accept, cfg);
}

void apply_isa(const RunConfig& cfg) {
    if (cfg.isa == "scalar") {
        kern::force_isa(kern::Isa::scalar);
    } else if (cfg.isa == "avx2") {
        kern::force_isa(kern::Isa::avx2);
    }
}

void emit(const RunConfig& cfg, const std::string& payload) {
    if (cfg.out.empty()) {
        std::cout << payload << std::flush;
        return;
    }
    std::ofstream file(cfg.out, std::ios::binary | std::ios::trunc);
    if (!file) throw param_error("cannot open --out file: " + cfg.out);
    file << payload;
    if (!file) throw param_error("short write to --out file: " + cfg.out);
}

std::vector<std::uint64_t> geometric_checkpoints(std::uint64_t lo,
                                                 std::uint64_t hi,
                                                 std::uint32_t points) {
    if (lo == 0 || lo > hi)
        throw param_error("checkpoint range needs 1 <= n-min <= n");
    std::vector<std::uint64_t> cps;
    if (points <= 1 || lo == hi) {
        if (lo != hi) cps.push_back(lo);
        cps.push_back(hi);
        return cps;
    }
    const double la = std::log(static_cast<double>(lo));
    const double lb = std::log(static_cast<double>(hi));
    for (std::uint32_t i = 0; i < points; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(points - 1);
        const double raw = std::exp(la + t * (lb - la));
        auto v = static_cast<std::uint64_t>(std::llround(raw));
        v = std::clamp(v, lo, hi);
        if (cps.empty() || v > cps.back()) cps.push_back(v);
    }
    if (cps.back() != hi) cps.push_back(hi);
    return cps;
}

std::uint64_t default_first_checkpoint(const RunConfig& cfg) {
    if (cfg.n_min != 0) return cfg.n_min;
    return std::max<std::uint64_t>(1, cfg.n / 1000);
}

const char* comparison_name(CheckRow::Kind kind) {
    switch (kind) {
        case CheckRow::Kind::two_sided: return "two_sided";
        case CheckRow::Kind::at_least: return "at_least";
        case CheckRow::Kind::at_most: return "at_most";
    }
    return "two_sided";
}

// Shared rendering for CheckReport-shaped results (yule, walk --report).
std::string render_report(const RunConfig& cfg, const CheckReport& report,
                          json params) {
    if (cfg.format == "json")
        return io::report_rows(report, std::move(params), cfg.timing).dump(2) + "\n";
    std::string out = "statistic,estimate,target,tolerance,comparison,pass\n";
    for (const CheckRow& row : report.rows) {
        const std::array<std::string, 6> cells{
            row.label,
            io::format_double(row.estimate),
            io::format_double(row.target),
            io::format_double(row.tolerance),
            comparison_name(row.kind),
            row.pass ? std::string("true") : std::string("false")};
        out += io::csv_line(cells);
    }
    return out;
}

int cmd_simulate(const RunConfig& cfg) {
    const std::uint32_t points = cfg.points == 0 ? 1 : cfg.points;
    const std::vector<std::uint64_t> cps =
        points <= 1 ? std::vector<std::uint64_t>{cfg.n}
                    : geometric_checkpoints(default_first_checkpoint(cfg), cfg.n, points);
    const ReinforcementParams params{cfg.p, cfg.n, cfg.seed};
    SimonState state(params);
    const std::vector<ClusterSnapshot> snaps = state.run_to(cps);

    if (cfg.format == "json") {
        json rows = json::array();
        for (const ClusterSnapshot& s : snaps) {
            rows.push_back({{"n", s.n},
                            {"innovations", s.innovations},
                            {"sum_sq", s.sum_sq},
                            {"max_count", s.max_count}});
        }
        emit(cfg, json{{"p", cfg.p}, {"seed", cfg.seed}, {"rows", rows}}.dump(2) + "\n");
        return 0;
    }
    std::string out = "n,innovations,sum_sq,max_count\n";
    for (const ClusterSnapshot& s : snaps) {
        const std::array<std::string, 4> cells{
            std::to_string(s.n), std::to_string(s.innovations),
            std::to_string(s.sum_sq), std::to_string(s.max_count)};
        out += io::csv_line(cells);
    }
    emit(cfg, out);
    return 0;
}

int cmd_moments(const RunConfig& cfg) {
    // The closed form costs O(m) per row, so a full ladder would be
    // quadratic; keep it for spot checks and route big tables through the
    // recursion (whose row 1 is exactly 1).
    if (cfg.method == "closed" && cfg.n > 20'000)
        throw param_error("--method closed is quadratic in n; use --method recursion above n = 20000");

    json jrows = json::array();
    std::string out = "n,expected_s2\n";
    double s = 1.0;  // E S^2(1)
    for (std::uint64_t m = 1; m <= cfg.n; ++m) {
        const double value =
            cfg.method == "closed" ? oracles::expected_s2(cfg.p, m) : s;
        if (cfg.format == "json") {
            jrows.push_back({{"n", m}, {"expected_s2", value}});
        } else {
            const std::array<std::string, 2> cells{std::to_string(m),
                                                   io::format_double(value)};
            out += io::csv_line(cells);
        }
        s = (1.0 + 2.0 * cfg.p / static_cast<double>(m)) * s + 1.0;
    }
    if (cfg.format == "json")
        emit(cfg, json{{"p", cfg.p}, {"rows", jrows}}.dump(2) + "\n");
    else
        emit(cfg, out);
    return 0;
}

int cmd_empirical(const RunConfig& cfg) {
    const std::uint32_t grid = cfg.grid == 0 ? 101 : cfg.grid;
    const ReinforcementParams params{cfg.p, cfg.n, cfg.seed};
    SimonState state(params);
    state.advance(cfg.n - state.n());
    const EmpiricalPath path = scaled_path(state, RegimeSpec::from_p(cfg.p));
    const std::vector<double> xs = make_grid(grid);
    const std::vector<double> values = evaluate_grid(path, grid);
    const double sup = sup_norm(path);

    if (cfg.format == "json") {
        emit(cfg, json{{"p", cfg.p},
                       {"n", cfg.n},
                       {"seed", cfg.seed},
                       {"grid", xs},
                       {"values", values},
                       {"sup_norm", sup}}
                          .dump(2) +
                      "\n");
        return 0;
    }
    std::string out = "x,value\n";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const std::array<std::string, 2> cells{io::format_double(xs[i]),
                                               io::format_double(values[i])};
        out += io::csv_line(cells);
    }
    emit(cfg, out);
    std::cerr << "sup_norm=" << io::format_double(sup) << "\n";
    return 0;
}

int cmd_bridge(const RunConfig& cfg) {
    const std::uint32_t grid = cfg.grid == 0 ? 2048 : cfg.grid;
    std::vector<BridgeSample> samples;
    samples.reserve(cfg.count);
    if (cfg.kind == "brownian") {
        const std::uint64_t base =
            substream_seed(cfg.seed, StreamPurpose::bridge);
        for (std::uint32_t s = 0; s < cfg.count; ++s)
            samples.push_back(sample_brownian_bridge(grid, replicate_seed(base, s)));
    } else {
        const ReinforcementParams params{cfg.p, cfg.n, cfg.seed};
        const XpVector xp = estimate_xp(params, cfg.n, cfg.trunc);
        const std::uint64_t base =
            substream_seed(cfg.seed, StreamPurpose::xp_bridge);
        for (std::uint32_t s = 0; s < cfg.count; ++s)
            samples.push_back(sample_bp_bridge(xp, grid, replicate_seed(base, s)));
    }

    if (cfg.format == "json") {
        json out{{"kind", cfg.kind}, {"seed", cfg.seed}, {"grid", samples.front().grid}};
        if (cfg.kind == "bp") out["p"] = cfg.p;
        json arr = json::array();
        for (std::uint32_t s = 0; s < cfg.count; ++s)
            arr.push_back({{"sample", s}, {"values", samples[s].values}});
        out["samples"] = std::move(arr);
        emit(cfg, out.dump(2) + "\n");
        return 0;
    }
    std::string out = "sample,x,value\n";
    for (std::uint32_t s = 0; s < cfg.count; ++s) {
        const BridgeSample& b = samples[s];
        for (std::size_t i = 0; i < b.grid.size(); ++i) {
            const std::array<std::string, 3> cells{
                std::to_string(s), io::format_double(b.grid[i]),
                io::format_double(b.values[i])};
            out += io::csv_line(cells);
        }
    }
    emit(cfg, out);
    return 0;
}

int cmd_regime_scan(const RunConfig& cfg) {
    const std::uint64_t lo = cfg.n_min == 0 ? 1000 : cfg.n_min;
    const std::uint32_t points = cfg.points == 0 ? 4 : cfg.points;
    const std::vector<std::uint64_t> cps = geometric_checkpoints(lo, cfg.n_max, points);

    McPlan plan;
    plan.params = ReinforcementParams{cfg.p, cps.back(), cfg.seed};
    plan.replicates = cfg.replicates;
    plan.checkpoints = cps;
    plan.statistic = StatisticSpec::s2();
    plan.master_seed = cfg.seed;
    const McSummary summary = run_plan(plan, cfg.workers);

    std::vector<std::pair<std::uint64_t, double>> means;
    means.reserve(cps.size());
    for (std::size_t i = 0; i < cps.size(); ++i)
        means.emplace_back(cps[i], summary.cell(i).mean);
    const double slope = growth_exponent(means);

    if (cfg.format == "json") {
        json pts = json::array();
        for (std::size_t i = 0; i < cps.size(); ++i) {
            pts.push_back({{"n", cps[i]},
                           {"mean", summary.cell(i).mean},
                           {"se", summary.cell(i).se}});
        }
        json out{{"p", cfg.p},
                 {"replicates", cfg.replicates},
                 {"seed", cfg.seed},
                 {"slope", slope},
                 {"points", std::move(pts)}};
        if (cfg.timing) out["wall_time"] = summary.wall_seconds;
        emit(cfg, out.dump(2) + "\n");
        return 0;
    }
    std::string out = "n,mean_s2,se\n";
    for (std::size_t i = 0; i < cps.size(); ++i) {
        const std::array<std::string, 3> cells{
            std::to_string(cps[i]), io::format_double(summary.cell(i).mean),
            io::format_double(summary.cell(i).se)};
        out += io::csv_line(cells);
    }
    emit(cfg, out);
    std::cerr << "slope=" << io::format_double(slope) << "\n";
    return 0;
}

int cmd_yule(const RunConfig& cfg) {
    const CheckReport report = yule_frequency_check(
        cfg.p, cfg.n, cfg.replicates, cfg.k_max, cfg.seed, cfg.workers);
    emit(cfg, render_report(cfg, report,
                            json{{"p", cfg.p},
                                 {"n", cfg.n},
                                 {"replicates", cfg.replicates},
                                 {"k_max", cfg.k_max}}));
    return 0;
}

StepSpec step_spec_for(const std::string& name) {
    if (name == "pm1") return StepSpec::plus_minus_one();
    // Uniform[0,1] steps centered at 1/2: bounded by 1/2, variance 1/12.
    return StepSpec::from_measure([](double u) { return u; }, 0.5, 1.0 / 12.0,
                                  0.5);
}

int cmd_walk(const RunConfig& cfg) {
    const StepSpec spec = step_spec_for(cfg.steps);
    if (cfg.report) {
        const CheckReport report = regime_report(cfg.p, spec, cfg.n,
                                                 cfg.replicates, cfg.seed,
                                                 cfg.workers);
        emit(cfg, render_report(cfg, report,
                                json{{"p", cfg.p},
                                     {"n", cfg.n},
                                     {"replicates", cfg.replicates},
                                     {"steps", cfg.steps}}));
        return 0;
    }
    const std::uint32_t points = cfg.points == 0 ? 1 : cfg.points;
    const std::vector<std::uint64_t> cps =
        points <= 1 ? std::vector<std::uint64_t>{cfg.n}
                    : geometric_checkpoints(default_first_checkpoint(cfg), cfg.n, points);
    const ReinforcementParams params{cfg.p, cfg.n, cfg.seed};
    const auto path = run_walk(params, spec, cps);

    if (cfg.format == "json") {
        json rows = json::array();
        for (const auto& [n, s_hat] : path)
            rows.push_back({{"n", n}, {"s_hat", s_hat}});
        emit(cfg, json{{"p", cfg.p},
                       {"steps", cfg.steps},
                       {"seed", cfg.seed},
                       {"rows", rows}}
                          .dump(2) +
                      "\n");
        return 0;
    }
    std::string out = "n,s_hat\n";
    for (const auto& [n, s_hat] : path) {
        const std::array<std::string, 2> cells{std::to_string(n),
                                               io::format_double(s_hat)};
        out += io::csv_line(cells);
    }
    emit(cfg, out);
    return 0;
}

int cmd_accept(const RunConfig& cfg) {
    const AcceptProfile profile = *parse_profile(cfg.profile);
    const std::vector<CriterionResult> results =
        run_acceptance(profile, cfg.seed, cfg.workers);

    bool all_pass = true;
    for (const CriterionResult& r : results) {
        all_pass = all_pass && r.pass;
        std::fprintf(stderr, "[%2d/11] %s  %s\n", r.number,
                     r.pass ? "PASS" : "FAIL", r.title.c_str());
        if (!r.pass) {
            for (const CheckRow& row : r.report.rows) {
                if (row.pass) continue;
                std::fprintf(stderr,
                             "        %s: estimate=%s target=%s tolerance=%s (%s)\n",
                             row.label.c_str(),
                             io::format_double(row.estimate).c_str(),
                             io::format_double(row.target).c_str(),
                             io::format_double(row.tolerance).c_str(),
                             comparison_name(row.kind));
            }
        }
    }

    if (cfg.format == "json") {
        json criteria = json::array();
        for (const CriterionResult& r : results) {
            criteria.push_back(
                {{"number", r.number},
                 {"title", r.title},
                 {"pass", r.pass},
                 {"rows", io::report_rows(r.report,
                                          json{{"profile", cfg.profile},
                                               {"criterion", r.number}},
                                          cfg.timing)}});
        }
        emit(cfg, json{{"profile", cfg.profile},
                       {"seed", cfg.seed},
                       {"pass", all_pass},
                       {"criteria", std::move(criteria)}}
                          .dump(2) +
                      "\n");
    } else {
        std::string out =
            "criterion,statistic,estimate,target,tolerance,comparison,pass\n";
        for (const CriterionResult& r : results) {
            for (const CheckRow& row : r.report.rows) {
                const std::array<std::string, 7> cells{
                    std::to_string(r.number),
                    row.label,
                    io::format_double(row.estimate),
                    io::format_double(row.target),
                    io::format_double(row.tolerance),
                    comparison_name(row.kind),
                    row.pass ? std::string("true") : std::string("false")};
                out += io::csv_line(cells);
            }
        }
        emit(cfg, out);
    }
    return all_pass ? 0 : 1;
}

} // namespace

RunConfig parse_args(int argc, const char* const* argv) {
    RunConfig cfg;
    CLI::App app{"Reinforced empirical processes toolkit", "rep"};
    build_app(app, cfg);
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        cfg.subcommand = "help";
        cfg.help_text = app.help();
        return cfg;
    } catch (const CLI::ParseError& e) {
        throw param_error(std::string("usage: ") + e.what());
    }
    cfg.subcommand = app.get_subcommands().at(0)->get_name();
    return cfg;
}

int dispatch(const RunConfig& cfg) {
    if (cfg.subcommand == "help") {
        std::cout << cfg.help_text;
        return 0;
    }
    apply_isa(cfg);
    if (cfg.subcommand == "simulate") return cmd_simulate(cfg);
    if (cfg.subcommand == "moments") return cmd_moments(cfg);
    if (cfg.subcommand == "empirical") return cmd_empirical(cfg);
    if (cfg.subcommand == "bridge") return cmd_bridge(cfg);
    if (cfg.subcommand == "regime-scan") return cmd_regime_scan(cfg);
    if (cfg.subcommand == "yule") return cmd_yule(cfg);
    if (cfg.subcommand == "walk") return cmd_walk(cfg);
    if (cfg.subcommand == "accept") return cmd_accept(cfg);
    throw param_error("unknown subcommand: " + cfg.subcommand);
}

int run(int argc, const char* const* argv) noexcept {
    RunConfig cfg;
    CLI::App app{"Reinforced empirical processes toolkit", "rep"};
    build_app(app, cfg);
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);  // prints contextual help, returns 0
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints the diagnostic to stderr
        return 2;
    }
    cfg.subcommand = app.get_subcommands().at(0)->get_name();
    try {
        return dispatch(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (...) {
        std::cerr << "error: unknown failure\n";
        return 1;
    }
}

} // namespace rep::cli
