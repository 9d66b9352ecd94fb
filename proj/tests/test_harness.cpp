#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rep/errors.hpp"
#include "rep/harness.hpp"
#include "rep/rng.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <vector>

using namespace rep;

namespace {

bool same_bits(double a, double b) {
    return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b);
}

bool summaries_identical(const McSummary& a, const McSummary& b) {
    if (a.cells.size() != b.cells.size()) return false;
    for (std::size_t i = 0; i < a.cells.size(); ++i) {
        if (!same_bits(a.cells[i].mean, b.cells[i].mean)) return false;
        if (!same_bits(a.cells[i].variance, b.cells[i].variance)) return false;
        if (!same_bits(a.cells[i].min, b.cells[i].min)) return false;
        if (!same_bits(a.cells[i].max, b.cells[i].max)) return false;
    }
    if (a.samples.size() != b.samples.size()) return false;
    for (std::size_t i = 0; i < a.samples.size(); ++i)
        for (std::size_t r = 0; r < a.samples[i].size(); ++r)
            if (!same_bits(a.samples[i][r], b.samples[i][r])) return false;
    return true;
}

McPlan small_plan() {
    McPlan plan;
    plan.params = ReinforcementParams{0.6, 0, 0};
    plan.replicates = 50;
    plan.checkpoints = {10, 100, 1000};
    plan.statistic = StatisticSpec::s2();
    plan.master_seed = 42;
    return plan;
}

} // namespace

TEST_CASE("plan validation rejects malformed inputs") {
    McPlan plan = small_plan();
    CHECK_NOTHROW(plan.validate());

    plan.replicates = 0;
    CHECK_THROWS_AS(plan.validate(), param_error);

    plan = small_plan();
    plan.checkpoints = {};
    CHECK_THROWS_AS(plan.validate(), param_error);

    plan = small_plan();
    plan.checkpoints = {10, 10};
    CHECK_THROWS_AS(plan.validate(), param_error);

    plan = small_plan();
    plan.checkpoints = {100, 10};
    CHECK_THROWS_AS(plan.validate(), param_error);

    plan = small_plan();
    plan.params.n_max = 500;  // declared capacity below the last checkpoint
    CHECK_THROWS_AS(plan.validate(), param_error);

    plan = small_plan();
    plan.grid = 1;  // a 1-point grid cannot carry a sup
    CHECK_THROWS_AS(plan.validate(), param_error);

    // Scaled statistics are undefined at the critical point for n = 1.
    plan = small_plan();
    plan.params.p = 0.5;
    plan.checkpoints = {1, 10};
    plan.statistic = StatisticSpec::sup_scaled();
    CHECK_THROWS_AS(plan.validate(), regime_error);

    CHECK_THROWS_AS(StatisticSpec::histogram(0).validate(), param_error);
    CHECK_NOTHROW(StatisticSpec::marginal(0.0).validate());  // closed interval
    CHECK_THROWS_AS(StatisticSpec::marginal(-0.1).validate(), param_error);
    CHECK_THROWS_AS(StatisticSpec::marginal(1.5).validate(), param_error);
}

TEST_CASE("summaries are bit-identical across reruns and worker counts") {
    McPlan plan = small_plan();
    plan.statistic = StatisticSpec::sup_scaled();
    plan.grid = 64;

    const McSummary w1 = run_plan(plan, 1, true);
    const McSummary w2 = run_plan(plan, 2, true);
    const McSummary w5 = run_plan(plan, 5, true);
    const McSummary again = run_plan(plan, 1, true);

    CHECK(summaries_identical(w1, w2));
    CHECK(summaries_identical(w1, w5));
    CHECK(summaries_identical(w1, again));

    REQUIRE(w1.checkpoints == std::vector<std::uint64_t>{10, 100, 1000});
    REQUIRE(w1.components.size() == 1);
    REQUIRE(w1.cells.size() == 3);
    for (const SummaryCell& cell : w1.cells) {
        CHECK(cell.count == 50);
        CHECK(cell.min <= cell.mean);
        CHECK(cell.mean <= cell.max);
        CHECK(cell.se == std::sqrt(cell.variance / 50.0));
    }

    // keep_samples returns each cell's sorted replicate values.
    for (std::size_t i = 0; i < 3; ++i) {
        const auto& s = w1.sample(i);
        REQUIRE(s.size() == 50);
        CHECK(std::is_sorted(s.begin(), s.end()));
    }
    const McSummary bare = run_plan(plan, 1, false);
    CHECK_THROWS_AS(bare.sample(0), state_error);
}

TEST_CASE("degenerate cells: s2 at n = 1 is exactly 1 with zero spread") {
    McPlan plan = small_plan();
    plan.checkpoints = {1, 50};
    const McSummary s = run_plan(plan);
    CHECK(s.cell(0).mean == 1.0);
    CHECK(s.cell(0).variance == 0.0);
    CHECK(s.cell(0).min == 1.0);
    CHECK(s.cell(0).max == 1.0);
    CHECK(s.cell(1).mean > 1.0);
}

TEST_CASE("histogram statistic: one component per class, frequencies sane") {
    McPlan plan = small_plan();
    plan.statistic = StatisticSpec::histogram(3);
    plan.checkpoints = {2000};
    const McSummary s = run_plan(plan);
    REQUIRE(s.components.size() == 3);
    CHECK(s.components[0] != s.components[1]);
    // C_k(n)/((1-p) n) is near the Yule-Simon pmf, so all means are in (0,1)
    // and decreasing in k for this p.
    double prev = 1.0;
    for (std::size_t c = 0; c < 3; ++c) {
        const double m = s.cell(0, c).mean;
        CHECK(m > 0.0);
        CHECK(m < prev);
        prev = m;
    }
}

TEST_CASE("growth exponent: exact on synthetic power laws, guarded inputs") {
    std::vector<std::pair<std::uint64_t, double>> pts;
    for (std::uint64_t n : {100ull, 1000ull, 10000ull, 100000ull})
        pts.emplace_back(n, 0.37 * std::pow(double(n), 1.5));
    CHECK(growth_exponent(pts) == doctest::Approx(1.5).epsilon(1e-12));

    for (auto& [n, v] : pts) v = 2.0 * double(n);
    CHECK(growth_exponent(pts) == doctest::Approx(1.0).epsilon(1e-12));

    // Too few points.
    std::vector<std::pair<std::uint64_t, double>> three(pts.begin(),
                                                        pts.begin() + 3);
    CHECK_THROWS_AS(growth_exponent(three), param_error);
    // Not spanning two decades.
    std::vector<std::pair<std::uint64_t, double>> narrow{
        {100, 1.0}, {120, 1.1}, {140, 1.2}, {160, 1.3}};
    CHECK_THROWS_AS(growth_exponent(narrow), param_error);
    // Nonpositive means cannot be log-fit.
    auto bad = pts;
    bad[1].second = 0.0;
    CHECK_THROWS_AS(growth_exponent(bad), param_error);
    // Checkpoints must increase.
    auto swapped = pts;
    std::swap(swapped[0], swapped[1]);
    CHECK_THROWS_AS(growth_exponent(swapped), param_error);
}

TEST_CASE("two-sample ks: exact distances and input contract") {
    const std::vector<double> a{1.0, 2.0, 3.0, 4.0};
    SUBCASE("identical samples") {
        const KsResult r = two_sample_ks(a, a);
        CHECK(r.distance == 0.0);
        CHECK(r.p_value == 1.0);
    }
    SUBCASE("disjoint supports") {
        const std::vector<double> b{10.0, 11.0, 12.0, 13.0};
        const KsResult r = two_sample_ks(a, b);
        CHECK(r.distance == 1.0);
        CHECK(r.p_value < 0.1);
    }
    SUBCASE("hand-computed interleaving") {
        // a = {1,2,3,4}, b = {2.5}: F_a jumps by 1/4, F_b jumps to 1 at 2.5.
        // Max gap is at x in [2.5, 3): |1/2 - 1| = 1/2.
        const std::vector<double> b{2.5};
        CHECK(two_sample_ks(a, b).distance == doctest::Approx(0.5));
    }
    SUBCASE("ties across samples are walked together") {
        // F_a - F_b grows to 3/4 - 3/5 = 0.15 just after x = 3, then the
        // double weight at 4 closes both CDFs to 1 simultaneously.
        const std::vector<double> b{1.0, 2.0, 3.0, 4.0, 4.0};
        const KsResult r = two_sample_ks(a, b);
        CHECK(r.distance == doctest::Approx(0.15));
    }
    SUBCASE("unsorted input is rejected") {
        const std::vector<double> bad{2.0, 1.0};
        CHECK_THROWS_AS(two_sample_ks(bad, a), param_error);
        CHECK_THROWS_AS(two_sample_ks(a, bad), param_error);
        CHECK_THROWS_AS(two_sample_ks(a, {}), param_error);
    }
}

TEST_CASE("two-sample ks p-values are calibrated under the null") {
    // Both samples from the same normal stream: the rejection rate at level
    // alpha must not exceed alpha (the asymptotic p-value is conservative
    // for moderate sample sizes).
    const int trials = 2000, m = 500;
    int rej01 = 0, rej001 = 0;
    for (int t = 0; t < trials; ++t) {
        NormalStream g(replicate_seed(60601, static_cast<std::uint64_t>(t)));
        std::vector<double> a(m), b(m);
        for (int i = 0; i < m; ++i) a[static_cast<std::size_t>(i)] = g.next();
        for (int i = 0; i < m; ++i) b[static_cast<std::size_t>(i)] = g.next();
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        const KsResult r = two_sample_ks(a, b);
        rej01 += r.p_value < 0.01;
        rej001 += r.p_value < 0.001;
    }
    // Binomial 4-sigma bands around 20 and 2 expected rejections.
    CHECK(rej01 <= 20 + 4 * 5);
    CHECK(rej01 >= 1);
    CHECK(rej001 <= 8);
}

TEST_CASE("report row builders pin the comparison semantics") {
    CheckReport report;
    report.name = "demo";
    report.two_sided("a", 1.0, 1.05, 0.1);
    report.two_sided("b", 1.0, 1.2, 0.1);
    report.at_least("c", 0.5, 0.1);
    report.at_least("d", 0.05, 0.1);
    report.at_most("e", 0.3, 0.3);
    report.at_most("f", 0.33, 0.3, 0.04);
    report.at_most("g", 0.35, 0.3);
    CHECK(report.rows[0].pass);
    CHECK(!report.rows[1].pass);
    CHECK(report.rows[2].pass);
    CHECK(!report.rows[3].pass);
    CHECK(report.rows[4].pass);
    CHECK(report.rows[5].pass);
    CHECK(!report.rows[6].pass);
    CHECK(!report.pass);  // any failing row fails the report
}

TEST_CASE("moment check passes against the exact oracle at small scale") {
    const std::vector<double> ps{0.3, 0.5, 0.8};
    const std::vector<std::uint64_t> ns{1, 2, 64};
    const CheckReport r = s2_oracle_check(ps, ns, 2000, 42);
    CHECK(r.pass);
    CHECK(r.rows.size() == ps.size() * ns.size());
}

TEST_CASE("regime checks run and pass at pinned small scales") {
    SUBCASE("supercritical moments and marginals") {
        const CheckReport r = theorem1_check(0.75, 10000, 1500, 42);
        CHECK(r.pass);
        CHECK_THROWS_AS(theorem1_check(0.75, 5000, 10, 42), param_error);
    }
    SUBCASE("subcritical functional limit") {
        const CheckReport r = theorem1_check(0.25, 20000, 600, 42, 1, 512);
        CHECK(r.pass);
    }
    SUBCASE("yule frequencies") {
        const CheckReport r = yule_frequency_check(0.5, 100000, 100, 3, 42);
        CHECK(r.pass);
        REQUIRE(r.rows.size() == 4);  // k = 1..3 plus the mass-bound row
        CHECK_THROWS_AS(yule_frequency_check(0.5, 50000, 10, 3, 42),
                        param_error);
    }
    SUBCASE("glivenko-cantelli medians decrease") {
        const std::vector<std::uint64_t> cps{100, 1000, 10000};
        const CheckReport r = glivenko_cantelli_check(0.6, cps, 150, 42);
        CHECK(r.pass);
    }
    SUBCASE("critical max-cluster tails") {
        const CheckReport r = max_cluster_check(0.5, 20000, 400, 42);
        CHECK(r.pass);
        CHECK_THROWS_AS(max_cluster_check(0.6, 20000, 400, 42), regime_error);
    }
}
