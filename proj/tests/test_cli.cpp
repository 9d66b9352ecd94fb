#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rep/cli.hpp"
#include "rep/errors.hpp"

#include "json.hpp"

#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>
#include <vector>

using namespace rep;
using nlohmann::json;

namespace {

// ctest runs every test from the build directory, where the front end lands
// as ./rep. Subprocess checks exercise the real exit-code and byte-output
// contract; parse-level checks go through parse_args directly.
constexpr const char* kRep = "./rep";

struct CmdResult {
    int exit_code = -1;
    std::string output;  // captured stdout
};

CmdResult capture(const std::string& args) {
    CmdResult result;
    const std::string cmd = std::string(kRep) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t got = 0;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0)
        result.output.append(buf, got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

rep::cli::RunConfig parse(std::vector<const char*> argv) {
    argv.insert(argv.begin(), "rep");
    return rep::cli::parse_args(static_cast<int>(argv.size()), argv.data());
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        const std::size_t end = text.find('\n', start);
        if (end == std::string::npos) {
            lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    return lines;
}

} // namespace

TEST_CASE("parse_args: subcommands, option domains, help routing") {
    CHECK(parse({"simulate", "--p", "0.7", "--n", "50"}).subcommand ==
          "simulate");
    CHECK(parse({"simulate", "--p", "0.7"}).p == 0.7);
    CHECK(parse({"walk", "--steps", "uniform"}).steps == "uniform");
    CHECK(parse({"accept", "--profile", "full"}).profile == "full");
    CHECK(parse({"simulate", "--seed", "99"}).seed == 99);

    const rep::cli::RunConfig help = parse({"--help"});
    CHECK(help.subcommand == "help");
    CHECK(!help.help_text.empty());
    CHECK(help.help_text.find("simulate") != std::string::npos);

    CHECK_THROWS_AS(parse({}), param_error);               // no subcommand
    CHECK_THROWS_AS(parse({"bogus"}), param_error);        // unknown command
    CHECK_THROWS_AS(parse({"simulate", "--p", "0"}), param_error);
    CHECK_THROWS_AS(parse({"simulate", "--p", "1"}), param_error);
    CHECK_THROWS_AS(parse({"simulate", "--p", "1.5"}), param_error);
    CHECK_THROWS_AS(parse({"simulate", "--n", "0"}), param_error);
    CHECK_THROWS_AS(parse({"simulate", "--workers", "0"}), param_error);
    CHECK_THROWS_AS(parse({"walk", "--steps", "zigzag"}), param_error);
    CHECK_THROWS_AS(parse({"accept", "--profile", "nope"}), param_error);
    CHECK_THROWS_AS(parse({"bridge", "--kind", "levy"}), param_error);
    CHECK_THROWS_AS(parse({"moments", "--method", "guess"}), param_error);
    CHECK_THROWS_AS(parse({"yule", "--k-max", "0"}), param_error);
}

TEST_CASE("exit codes: 0 on success, 1 at runtime, 2 on usage") {
    CHECK(capture("moments --n 3").exit_code == 0);
    CHECK(capture("--help").exit_code == 0);
    CHECK(capture("simulate --help").exit_code == 0);

    CHECK(capture("").exit_code == 2);
    CHECK(capture("bogus").exit_code == 2);
    CHECK(capture("simulate --p 1.5").exit_code == 2);
    CHECK(capture("walk --steps zigzag").exit_code == 2);

    // Valid usage, rejected while running: the closed-form ladder guard and
    // the supercritical-only jump bridge.
    CHECK(capture("moments --method closed --n 30000").exit_code == 1);
    CHECK(capture("bridge --kind bp --p 0.4").exit_code == 1);
    CHECK(capture("moments --n 3 --out /nonexistent-dir/t.csv").exit_code == 1);
}

TEST_CASE("moments: exact ladder rows in csv") {
    const CmdResult r = capture("moments --n 3 --p 0.5");
    CHECK(r.exit_code == 0);
    // E S^2: 1, then 3 = 2*1 + 1, then 5.5 = 1.5*3 + 1.
    CHECK(r.output == "n,expected_s2\n1,1\n2,3\n3,5.5\n");

    // Both methods agree where the closed form is allowed.
    const CmdResult closed = capture("moments --n 200 --p 0.3 --method closed");
    const CmdResult rec = capture("moments --n 200 --p 0.3");
    CHECK(closed.exit_code == 0);
    const auto a = lines_of(closed.output);
    const auto b = lines_of(rec.output);
    REQUIRE(a.size() == b.size());
    CHECK(a[1] == "1,1");  // row 1 is exact under either method
}

TEST_CASE("simulate: snapshot shape and the n = 1 row") {
    const CmdResult r = capture("simulate --n 1 --p 0.3 --seed 4");
    CHECK(r.exit_code == 0);
    // Time 1 is the forced innovation: one cluster of size one.
    CHECK(r.output == "n,innovations,sum_sq,max_count\n1,1,1,1\n");

    const CmdResult multi =
        capture("simulate --n 10000 --points 4 --p 0.6 --seed 4");
    const auto lines = lines_of(multi.output);
    REQUIRE(lines.size() >= 3);
    CHECK(lines[0] == "n,innovations,sum_sq,max_count");
    CHECK(lines.back().substr(0, 6) == "10000,");
}

TEST_CASE("byte-identical reruns, worker counts, isa lanes and seed routes") {
    SUBCASE("rerun stability") {
        const std::string cmd = "bridge --count 2 --grid 64 --seed 11";
        CHECK(capture(cmd).output == capture(cmd).output);
    }
    SUBCASE("worker count never shows in the bytes") {
        const std::string base =
            "regime-scan --p 0.6 --n-min 100 --n-max 20000 --points 5 "
            "--replicates 60 --seed 3";
        const CmdResult w1 = capture(base + " --workers 1");
        const CmdResult w3 = capture(base + " --workers 3");
        CHECK(w1.exit_code == 0);
        CHECK(w1.output == w3.output);
    }
    SUBCASE("scalar and avx2 lanes produce identical output") {
        const std::string base = "simulate --n 20000 --p 0.3 --seed 9 ";
        const CmdResult scalar = capture(base + "--isa scalar");
        const CmdResult avx2 = capture(base + "--isa avx2");
        CHECK(scalar.exit_code == 0);
        CHECK(avx2.exit_code == 0);
        CHECK(scalar.output == avx2.output);
    }
    SUBCASE("seed precedence: flag beats environment beats default") {
        const CmdResult flagged = capture("simulate --n 200 --seed 123");
        CmdResult via_env;
        {
            const std::string cmd =
                std::string("REINFORCED_EP_SEED=123 ") + kRep +
                " simulate --n 200 2>/dev/null";
            FILE* pipe = popen(cmd.c_str(), "r");
            REQUIRE(pipe != nullptr);
            char buf[4096];
            std::size_t got = 0;
            while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0)
                via_env.output.append(buf, got);
            via_env.exit_code = WEXITSTATUS(pclose(pipe));
        }
        CHECK(via_env.exit_code == 0);
        CHECK(via_env.output == flagged.output);

        CmdResult env_overridden;
        {
            const std::string cmd =
                std::string("REINFORCED_EP_SEED=123 ") + kRep +
                " simulate --n 200 --seed 77 2>/dev/null";
            FILE* pipe = popen(cmd.c_str(), "r");
            REQUIRE(pipe != nullptr);
            char buf[4096];
            std::size_t got = 0;
            while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0)
                env_overridden.output.append(buf, got);
            env_overridden.exit_code = WEXITSTATUS(pclose(pipe));
        }
        CHECK(env_overridden.output == capture("simulate --n 200 --seed 77").output);
        CHECK(env_overridden.output != flagged.output);
    }
}

TEST_CASE("empirical: grid output pins both endpoints at zero") {
    const CmdResult r = capture("empirical --n 1000 --p 0.3 --seed 5");
    CHECK(r.exit_code == 0);
    const auto lines = lines_of(r.output);
    REQUIRE(lines.size() == 102);  // header + default 101-point grid
    CHECK(lines[0] == "x,value");
    CHECK(lines[1] == "0,0");
    CHECK(lines[101] == "1,0");
}

TEST_CASE("bridge: csv layout for multiple samples") {
    const CmdResult r = capture("bridge --count 2 --grid 16 --seed 8");
    CHECK(r.exit_code == 0);
    const auto lines = lines_of(r.output);
    REQUIRE(lines.size() == 1 + 2 * 16);
    CHECK(lines[0] == "sample,x,value");
    CHECK(lines[1].substr(0, 4) == "0,0,");
    CHECK(lines[17].substr(0, 4) == "1,0,");
}

TEST_CASE("json outputs parse and carry the documented keys") {
    SUBCASE("simulate") {
        const CmdResult r =
            capture("simulate --n 100 --p 0.4 --seed 6 --format json");
        CHECK(r.exit_code == 0);
        const json doc = json::parse(r.output);
        CHECK(doc.at("p") == 0.4);
        CHECK(doc.at("seed") == 6);
        REQUIRE(doc.at("rows").size() == 1);
        const json& row = doc.at("rows").at(0);
        for (const char* key : {"n", "innovations", "sum_sq", "max_count"})
            CHECK(row.contains(key));
    }
    SUBCASE("walk report rows match the published report-row shape") {
        const CmdResult r = capture(
            "walk --report --p 0.75 --n 2000 --replicates 150 --seed 10 "
            "--format json");
        CHECK(r.exit_code == 0);
        const json rows = json::parse(r.output);
        REQUIRE(rows.is_array());
        REQUIRE(rows.size() == 2);  // supercritical: variance + centering
        for (const json& row : rows) {
            for (const char* key :
                 {"test", "params", "statistic", "estimate", "target",
                  "tolerance", "comparison", "pass", "seeds"})
                CHECK(row.contains(key));
            CHECK(row.at("seeds").at("master") == 10);
            CHECK(!row.contains("wall_time"));  // only with --timing
        }
        const CmdResult timed = capture(
            "walk --report --p 0.75 --n 2000 --replicates 150 --seed 10 "
            "--format json --timing");
        const json timed_rows = json::parse(timed.output);
        CHECK(timed_rows.at(0).contains("wall_time"));
    }
    SUBCASE("regime-scan") {
        const CmdResult r = capture(
            "regime-scan --p 0.75 --n-min 100 --n-max 100000 --points 4 "
            "--replicates 50 --seed 12 --format json");
        CHECK(r.exit_code == 0);
        const json doc = json::parse(r.output);
        REQUIRE(doc.at("points").size() >= 4);
        // Supercritical growth: the fitted exponent sits near 2p = 1.5.
        const double slope = doc.at("slope").get<double>();
        CHECK(slope > 1.3);
        CHECK(slope < 1.7);
        CHECK(!doc.contains("wall_time"));
    }
}

TEST_CASE("--out writes the same bytes a terminal run prints") {
    const char* path = "test_cli_moments_out.csv";
    const CmdResult direct = capture("moments --n 5 --p 0.25");
    const CmdResult filed =
        capture(std::string("moments --n 5 --p 0.25 --out ") + path);
    CHECK(filed.exit_code == 0);
    CHECK(filed.output.empty());

    std::string written;
    {
        FILE* f = std::fopen(path, "rb");
        REQUIRE(f != nullptr);
        char buf[4096];
        std::size_t got = 0;
        while ((got = std::fread(buf, 1, sizeof buf, f)) > 0)
            written.append(buf, got);
        std::fclose(f);
    }
    std::remove(path);
    CHECK(written == direct.output);
}

TEST_CASE("dispatch: help configs print and return success") {
    rep::cli::RunConfig cfg;
    cfg.subcommand = "help";
    cfg.help_text = "";  // nothing to print; the return path is the contract
    CHECK(rep::cli::dispatch(cfg) == 0);

    cfg.subcommand = "no-such-command";
    CHECK_THROWS_AS(rep::cli::dispatch(cfg), param_error);
}
