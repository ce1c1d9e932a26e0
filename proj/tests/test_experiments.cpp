#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "oracle_helpers.hpp"
#include "ramsey/experiments.hpp"

using namespace ramsey;
using namespace ramsey::testing;

namespace {

// strips the volatile fields, keeping everything reproducibility promises
nlohmann::json stable_view(const std::string& line, int line_no) {
    auto rec = ExperimentRecord::from_line(line, line_no);
    nlohmann::json j = rec.to_json();
    j.erase("wall_ms");
    j.erase("version");
    return j;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) out.push_back(line);
    return out;
}

}  // namespace

TEST_CASE("wilson interval") {
    auto zero = wilson_interval(0, 50);
    CHECK(zero.point == 0.0);
    CHECK(zero.lo == 0.0);
    CHECK(zero.hi > 0.0);
    CHECK(zero.hi < 0.12);

    auto full = wilson_interval(50, 50);
    CHECK(full.point == 1.0);
    CHECK(full.hi == 1.0);
    CHECK(full.lo < 1.0);
    CHECK(full.lo > 0.88);

    auto mid = wilson_interval(8, 10);
    CHECK(mid.lo <= mid.point);
    CHECK(mid.point <= mid.hi);
    // independent evaluation of the score interval at z = 1.959963984540054
    double z = 1.959963984540054, ph = 0.8, n = 10;
    double denom = 1 + z * z / n;
    double center = (ph + z * z / (2 * n)) / denom;
    double half = z * std::sqrt(ph * 0.2 / n + z * z / (4 * n * n)) / denom;
    CHECK(mid.lo == doctest::Approx(center - half));
    CHECK(mid.hi == doctest::Approx(center + half));

    CHECK_THROWS_AS(wilson_interval(5, 0), parameter_error);
    CHECK_THROWS_AS(wilson_interval(5, 4), parameter_error);
}

TEST_CASE("experiment record round trip") {
    ExperimentRecord rec;
    rec.experiment = "demo";
    rec.params = {{"k", 3.0}, {"n", 7.0}};
    rec.seed = 0xDEADBEEFCAFEULL;
    rec.outcome = {{"success", true}, {"count", 12}};
    rec.constants_mode = "override";
    rec.wall_ms = 1.25;

    std::string line = rec.to_line();
    CHECK(line.find('\n') == std::string::npos);
    ExperimentRecord back = ExperimentRecord::from_line(line, 1);
    CHECK(back.experiment == rec.experiment);
    CHECK(back.params == rec.params);
    CHECK(back.seed == rec.seed);
    CHECK(back.outcome == rec.outcome);
    CHECK(back.constants_mode == rec.constants_mode);
    CHECK(back.to_line() == line);

    // keys are serialized in sorted order
    CHECK(line.find("\"constants\"") < line.find("\"experiment\""));
    CHECK(line.find("\"experiment\"") < line.find("\"outcome\""));
    CHECK(line.find("\"outcome\"") < line.find("\"params\""));
    CHECK(line.find("\"params\"") < line.find("\"seed\""));

    CHECK_THROWS_AS(ExperimentRecord::from_line("not json", 3), parse_error);
    CHECK_THROWS_AS(ExperimentRecord::from_line("{\"experiment\":1}", 4),
                    parse_error);
}

TEST_CASE("coloring schemes") {
    Graph g = make_complete_bipartite(4, 6).graph;
    Coloring red = make_coloring(g, {"all_red", {}}, 1);
    CHECK(red.red_count() == g.m());
    Coloring blue = make_coloring(g, {"all_blue", {}}, 1);
    CHECK(blue.blue_count() == g.m());
    Coloring uni = make_coloring(g, {"uniform", {}}, 7);
    uni.check_partition();

    Coloring bal = make_coloring(g, {"balanced_majority", {{"part_a", 4}}}, 9);
    for (int v = 4; v < g.n(); ++v) CHECK(bal.red_degree(v) == 2);

    // hypergeometric auto-pads small graphs for the plan
    Graph small = make_clique(4);
    Coloring hyper = make_coloring(small, {"hypergeometric", {{"levels", 3}}}, 2);
    hyper.check_partition();
    CHECK(hyper.red_count() + hyper.blue_count() == small.m());

    CHECK_THROWS_AS(make_coloring(g, {"nope", {}}, 1), parameter_error);
}

TEST_CASE("mc estimate of monochromatic probability") {
    Graph edge(2);
    edge.add_edge(0, 1);
    auto sure = mc_estimate_mono_probability(
        edge, {"all_red", {}}, FamilyParams::complete_bipartite(1, 1), 50, 3);
    CHECK(sure.estimate.point == 1.0);

    Graph k3 = make_clique(3);
    auto tri = mc_estimate_mono_probability(k3, {"uniform", {}},
                                            FamilyParams::clique(3), 20000, 5);
    CHECK(tri.estimate.lo <= 0.25);
    CHECK(0.25 <= tri.estimate.hi);

    // K_5 vs monochromatic K_3: exact fraction over all 1024 colorings
    Graph k5 = make_clique(5);
    auto edges = k5.edges();
    long long mono = 0;
    for (long long mask = 0; mask < (1 << 10); ++mask) {
        Coloring c(k5);
        for (int i = 0; i < 10; ++i)
            c.set(edges[i].first, edges[i].second,
                  (mask >> i) & 1 ? Color::Red : Color::Blue);
        if (contains_family(c.red_rows(), FamilyParams::clique(3)) ||
            contains_family(c.blue_rows(), FamilyParams::clique(3)))
            ++mono;
    }
    double exact = double(mono) / 1024.0;
    CHECK(exact == doctest::Approx((1024.0 - 12.0) / 1024.0));
    auto est = mc_estimate_mono_probability(k5, {"uniform", {}},
                                            FamilyParams::clique(3), 20000, 11);
    CHECK(est.estimate.lo <= exact);
    CHECK(exact <= est.estimate.hi);

    // parallel trials see the same per-trial seeds
    auto seq = mc_estimate_mono_probability(k5, {"uniform", {}},
                                            FamilyParams::clique(3), 5000, 13, 1);
    auto par = mc_estimate_mono_probability(k5, {"uniform", {}},
                                            FamilyParams::clique(3), 5000, 13, 4);
    CHECK(seq.estimate.point == par.estimate.point);
}

TEST_CASE("lower-bound suite: starburst") {
    SuiteConfig cfg;
    cfg.family = "starburst";
    cfg.params = {{"k", 3}, {"n", 3}, {"delta", 5}, {"N", 36},
                  {"m_lo", 12},      {"m_hi", 40}};
    cfg.trials = 10;
    cfg.seed = 99;
    std::ostringstream out;
    SuiteSummary sum = run_lowerbound_suite(cfg, out);
    CHECK(sum.trials == 10);
    CHECK(sum.successes == 10);
    CHECK(sum.ok());
    auto lines = lines_of(out.str());
    REQUIRE(lines.size() == 10);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        auto rec = ExperimentRecord::from_line(lines[i], int(i + 1));
        CHECK(rec.experiment == "lower_starburst");
        CHECK(rec.outcome.at("success").get<bool>());
        CHECK(rec.outcome.at("m").get<long long>() < 45);
    }
}

TEST_CASE("lower-bound suite: book audit") {
    SuiteConfig cfg;
    cfg.family = "book";
    cfg.params = {{"k", 4}, {"n", 20}, {"K", 30}, {"Npages", 100}};
    cfg.trials = 5;
    cfg.seed = 7;
    std::ostringstream out;
    SuiteSummary sum = run_lowerbound_suite(cfg, out);
    CHECK(sum.ok());
    for (const auto& line : lines_of(out.str())) {
        auto rec = ExperimentRecord::from_line(line, 1);
        CHECK(rec.outcome.at("audit").get<bool>());
    }
}

TEST_CASE("lower-bound suite: kst hypergeometric") {
    SuiteConfig cfg;
    cfg.family = "kst";
    cfg.params = {{"s", 2}, {"t", 4}, {"N", 40}, {"p", 0.4}, {"levels", 3}};
    cfg.trials = 8;
    cfg.seed = 21;
    std::ostringstream out;
    SuiteSummary sum = run_lowerbound_suite(cfg, out);
    CHECK(sum.trials == 8);
    // monochromatic K_{2,4} may or may not appear at this desk scale; the
    // records just report the counts
    for (const auto& line : lines_of(out.str())) {
        auto rec = ExperimentRecord::from_line(line, 1);
        CHECK(rec.outcome.contains("mono_red"));
        CHECK(rec.outcome.contains("mono_blue"));
    }
}

TEST_CASE("upper-bound suite: kst") {
    SuiteConfig cfg;
    cfg.family = "kst";
    cfg.params = {{"s", 2}, {"t", 3}};
    cfg.trials = 25;
    cfg.seed = 1234;
    std::ostringstream out;
    SuiteSummary sum = run_upperbound_suite(cfg, out);
    CHECK(sum.ok());
    for (const auto& line : lines_of(out.str())) {
        auto rec = ExperimentRecord::from_line(line, 1);
        CHECK(rec.outcome.at("success").get<bool>());
        CHECK(revalidate_record(rec));
    }

    cfg.scheme = "balanced_majority";
    std::ostringstream out2;
    CHECK(run_upperbound_suite(cfg, out2).ok());
    for (const auto& line : lines_of(out2.str()))
        CHECK(revalidate_record(ExperimentRecord::from_line(line, 1)));
}

TEST_CASE("upper-bound suite: starburst with overrides") {
    SuiteConfig cfg;
    cfg.family = "starburst";
    cfg.params = {{"k", 3}, {"n", 4}, {"N", 200}, {"p", 0.5}};
    cfg.trials = 5;
    cfg.seed = 31;
    cfg.paper_constants = false;
    std::ostringstream out;
    SuiteSummary sum = run_upperbound_suite(cfg, out);
    CHECK(sum.ok());
    for (const auto& line : lines_of(out.str())) {
        auto rec = ExperimentRecord::from_line(line, 1);
        CHECK(rec.constants_mode == "override");
        CHECK(revalidate_record(rec));
    }
}

TEST_CASE("book upper-bound suite is out of scope") {
    SuiteConfig cfg;
    cfg.family = "book";
    std::ostringstream out;
    CHECK_THROWS_AS(run_upperbound_suite(cfg, out), parameter_error);
}

TEST_CASE("suite reproducibility") {
    SuiteConfig cfg;
    cfg.family = "starburst";
    cfg.params = {{"k", 3}, {"n", 3}, {"delta", 5}, {"N", 30}, {"m_lo", 10},
                  {"m_hi", 35}};
    cfg.trials = 6;
    cfg.seed = 2025;
    std::ostringstream a, b;
    run_lowerbound_suite(cfg, a);
    cfg.jobs = 4;  // concurrency must not change outcomes or order
    run_lowerbound_suite(cfg, b);
    auto la = lines_of(a.str()), lb = lines_of(b.str());
    REQUIRE(la.size() == lb.size());
    for (std::size_t i = 0; i < la.size(); ++i)
        CHECK(stable_view(la[i], 1) == stable_view(lb[i], 1));
}

TEST_CASE("report aggregation") {
    std::istringstream empty("");
    CHECK(aggregate_records(empty).empty());

    ExperimentRecord rec;
    rec.experiment = "x";
    rec.seed = 1;
    rec.outcome = {{"success", true}};
    rec.wall_ms = 2.0;
    ExperimentRecord fail = rec;
    fail.outcome = {{"success", false}};
    ExperimentRecord other = rec;
    other.constants_mode = "override";

    std::string blob =
        rec.to_line() + "\n" + rec.to_line() + "\n" + fail.to_line() + "\n";
    std::istringstream three(blob);
    auto rows = aggregate_records(three);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].trials == 3);
    CHECK(rows[0].successes == 2);

    // constants modes aggregate separately
    std::istringstream mixed(rec.to_line() + "\n" + other.to_line() + "\n");
    auto rows2 = aggregate_records(mixed);
    CHECK(rows2.size() == 2);

    std::istringstream bad("{}\n");
    CHECK_THROWS_AS(aggregate_records(bad), parse_error);

    std::ostringstream text, csv;
    print_report(rows, text, false);
    CHECK(text.str().find("x") != std::string::npos);
    print_report(rows, csv, true);
    CHECK(csv.str().find("experiment,constants,") == 0);
}
