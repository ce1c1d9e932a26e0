#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "ramsey/coloring.hpp"
#include "ramsey/rng.hpp"

using namespace ramsey;

namespace {

bool same_coloring(const Coloring& a, const Coloring& b) {
    const Graph& g = a.graph();
    if (&g != &b.graph() && !(g == b.graph())) return false;
    for (auto [u, v] : g.edges())
        if (a.color(u, v) != b.color(u, v)) return false;
    return true;
}

// P(all f picks land in the chosen half) for a half-subset of `size`.
double hyper_all_red(int size, int f) {
    double p = 1.0;
    for (int i = 0; i < f; ++i) p *= double(size / 2 - i) / double(size - i);
    return p;
}

// Fixture for the dyadic coloring: K_{14,20} puts the 14-side (degree 20) in
// the first 14 positions, which is exactly A for 3 levels; a pentagon among
// five B-vertices provides B-internal edges below the A degrees.
Graph dyadic_host() {
    Graph g = make_complete_bipartite(14, 20).graph;
    for (int i = 0; i < 5; ++i) g.add_edge(14 + i, 14 + (i + 1) % 5);
    return g;
}

}  // namespace

TEST_CASE("coloring partition invariant") {
    Graph g = make_book(3, 4);
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        Coloring c = color_uniform(g, seed);
        c.check_partition();
        CHECK(c.red_count() + c.blue_count() == g.m());
    }
    Coloring all = color_all(g, Color::Red);
    all.check_partition();
    CHECK(all.red_count() == g.m());
    CHECK(color_all(g, Color::Blue).blue_count() == g.m());
}

TEST_CASE("uniform coloring marginals") {
    Graph edgeless(5);
    Coloring empty = color_uniform(edgeless, 9);
    CHECK(empty.red_count() == 0);

    Graph one(2);
    one.add_edge(0, 1);
    const long long trials = 100000;
    long long red = 0;
    for (long long s = 0; s < trials; ++s)
        if (color_uniform(one, Rng::mix(77, s)).is_red(0, 1)) ++red;
    double sigma = std::sqrt(0.25 / trials);
    CHECK(std::abs(double(red) / trials - 0.5) < 5 * sigma);

    // fixed triangle: monochromatic with probability 2/8 (exhaustive over the
    // 8 colorings), checked empirically
    Graph tri = make_clique(3);
    long long mono = 0;
    for (long long s = 0; s < trials; ++s) {
        Coloring c = color_uniform(tri, Rng::mix(123, s));
        Color c01 = c.color(0, 1);
        if (c.color(0, 2) == c01 && c.color(1, 2) == c01) ++mono;
    }
    double msigma = std::sqrt(0.25 * 0.75 / trials);
    CHECK(std::abs(double(mono) / trials - 0.25) < 5 * msigma);
}

TEST_CASE("uniform coloring determinism") {
    Graph g = sample_gnp(30, 0.4, 4);
    CHECK(same_coloring(color_uniform(g, 555), color_uniform(g, 555)));
}

TEST_CASE("dyadic plan shape") {
    CHECK(DyadicPlan::positions_needed(1) == 2);
    CHECK(DyadicPlan::positions_needed(3) == 14);

    Graph g = pad_isolated(Graph(0), 14);
    auto ord = degree_order(g);
    DyadicPlan p1 = build_dyadic_plan(g, ord, 1);
    REQUIRE(p1.intervals.size() == 1);
    CHECK(p1.intervals[0] == std::pair(0, 2));  // the two highest positions

    DyadicPlan p3 = build_dyadic_plan(g, ord, 3);
    REQUIRE(p3.intervals.size() == 3);
    CHECK(p3.intervals[0].second - p3.intervals[0].first == 2);
    CHECK(p3.intervals[1].second - p3.intervals[1].first == 4);
    CHECK(p3.intervals[2].second - p3.intervals[2].first == 8);
    CHECK(p3.a_size == 14);
    CHECK(p3.level_of_position(0) == 1);
    CHECK(p3.level_of_position(1) == 1);
    CHECK(p3.level_of_position(2) == 2);
    CHECK(p3.level_of_position(5) == 2);
    CHECK(p3.level_of_position(6) == 3);
    CHECK(p3.level_of_position(13) == 3);
    CHECK(p3.level_of_position(14) == 0);

    CHECK_THROWS_AS(build_dyadic_plan(g, ord, 0), parameter_error);
    Graph small(4);
    CHECK_THROWS_AS(build_dyadic_plan(small, degree_order(small), 3),
                    parameter_error);

    // L = log2(s^2 t / (50 (t-s))): s=100, t=200 gives log2(400), floored to 8
    CHECK(dyadic_levels_for_kst(100, 200) == 8);
    CHECK(dyadic_levels_for_kst(2, 3) == 1);  // clamped to at least 1
}

TEST_CASE("hypergeometric marginals and correlations") {
    Graph g = dyadic_host();
    auto ord = degree_order(g);
    // sanity: A = the 14-side
    for (int i = 0; i < 14; ++i) CHECK(ord.order[i] == i);
    DyadicPlan plan = build_dyadic_plan(g, ord, 3);

    const long long trials = 100000;
    // tracked events
    long long red_i1 = 0;   // edge from I_1 (vertex 0) to B (vertex 14)
    long long red_i3 = 0;   // edge from I_3 (vertex 6) to B (vertex 15)
    long long pair_i2 = 0;  // edges (2,14),(3,14): both red
    long long trip_i3 = 0;  // edges (6,16),(7,16),(8,16): all red
    long long quad_i3 = 0;  // edges (6,17),(7,17),(8,17),(9,17): all red
    long long b_red = 0;    // B-internal edge (14,15)
    long long b_pair = 0;   // B-internal edges (14,15),(15,16): both red
    for (long long s = 0; s < trials; ++s) {
        Coloring c = color_hypergeometric_dyadic(g, plan, Rng::mix(2024, s));
        if (c.is_red(0, 14)) ++red_i1;
        if (c.is_red(6, 15)) ++red_i3;
        if (c.is_red(2, 14) && c.is_red(3, 14)) ++pair_i2;
        if (c.is_red(6, 16) && c.is_red(7, 16) && c.is_red(8, 16)) ++trip_i3;
        if (c.is_red(6, 17) && c.is_red(7, 17) && c.is_red(8, 17) &&
            c.is_red(9, 17))
            ++quad_i3;
        if (c.is_red(14, 15)) ++b_red;
        if (c.is_red(14, 15) && c.is_red(15, 16)) ++b_pair;
    }
    auto near = [&](long long hits, double p, double slack = 5.0) {
        double sigma = std::sqrt(std::max(p * (1 - p), 1e-6) / trials);
        return std::abs(double(hits) / trials - p) < slack * sigma;
    };
    CHECK(near(red_i1, 0.5));
    CHECK(near(red_i3, 0.5));
    // joint probabilities straight from the half-subset distribution
    CHECK(near(pair_i2, hyper_all_red(4, 2)));  // = 1/6
    CHECK(near(trip_i3, hyper_all_red(8, 3)));  // = 1/14
    CHECK(near(quad_i3, hyper_all_red(8, 4)));  // = 1/70
    // negative correlation: joint red never above the independent 2^-|F|
    CHECK(double(pair_i2) / trials < 0.25 + 5 * std::sqrt(0.25 / trials));
    CHECK(double(trip_i3) / trials < 0.125 + 5 * std::sqrt(0.125 / trials));
    CHECK(double(quad_i3) / trials < 0.0625 + 5 * std::sqrt(0.0625 / trials));
    // B-internal edges behave exactly uniformly (marginal 1/2, independent)
    CHECK(near(b_red, 0.5));
    CHECK(near(b_pair, 0.25));

    CHECK(same_coloring(color_hypergeometric_dyadic(g, plan, 42),
                        color_hypergeometric_dyadic(g, plan, 42)));

    // partition invariant on every sample shape
    color_hypergeometric_dyadic(g, plan, 7).check_partition();

    // edgeless graph: trivially equal to the uniform coloring
    Graph none = pad_isolated(Graph(0), 14);
    DyadicPlan nplan = build_dyadic_plan(none, degree_order(none), 3);
    Coloring nc = color_hypergeometric_dyadic(none, nplan, 3);
    CHECK(nc.red_count() == 0);
    CHECK(nc.blue_count() == 0);
}

TEST_CASE("book lower-bound coloring structure") {
    Graph g = sample_gnp(80, 0.3, 31);
    int k = 6, n = 20;  // s = 2 tiers of width 2
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto bc = color_book_lowerbound(g, k, n, seed);
        bc.coloring.check_partition();
        REQUIRE(bc.plan.tiers == 2);
        REQUIRE(bc.plan.width == 2);
        CHECK(bc.plan.probs[0] == 0.0);
        CHECK(bc.plan.probs[2] == doctest::Approx(0.5));
        CHECK(bc.plan.probs[1] == doctest::Approx(0.5 * std::pow(0.5, 1.0 / 6)));
        for (auto [u, v] : g.edges()) {
            int tu = bc.plan.tier_of[u], tv = bc.plan.tier_of[v];
            if (tu >= 0 && tv >= 0) {
                if (tu == tv) CHECK(bc.coloring.color(u, v) == Color::Red);
                if (tu != tv) CHECK(bc.coloring.color(u, v) == Color::Blue);
            } else if (std::max(tu, tv) == 0) {
                // V_0 to U is deterministically blue
                CHECK(bc.coloring.color(u, v) == Color::Blue);
            }
        }
    }

    // V_1-U red marginal matches p_1 across trials
    long long red = 0, total = 0;
    double p1 = 0.5 * std::pow(0.5, 1.0 / 6);
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        auto bc = color_book_lowerbound(g, k, n, Rng::mix(888, seed));
        for (auto [u, v] : g.edges()) {
            int tu = bc.plan.tier_of[u], tv = bc.plan.tier_of[v];
            if ((tu >= 0) == (tv >= 0)) continue;
            if (std::max(tu, tv) != 1) continue;
            ++total;
            if (bc.coloring.color(u, v) == Color::Red) ++red;
        }
    }
    REQUIRE(total > 3000);
    double sigma = std::sqrt(p1 * (1 - p1) / double(total));
    CHECK(std::abs(double(red) / double(total) - p1) < 5 * sigma);

    CHECK_THROWS_AS(color_book_lowerbound(Graph(2), 6, 20, 1), parameter_error);
}

TEST_CASE("max k-cut local search") {
    // triangle: best 2-cut is 2; the doubleton's vertices sit at equality
    Graph tri = make_clique(3);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Partition part = max_k_cut_local_search(tri, 2, seed);
        CHECK(cut_size(tri, part) == 2);
    }

    // local optimality: own-part neighbors <= neighbors in every other part
    auto locally_optimal = [](const Graph& g, const Partition& part, int parts) {
        for (int v = 0; v < g.n(); ++v) {
            std::vector<int> cnt(parts, 0);
            const Bitset& nb = g.adj(v);
            for (int u = nb.find_first(); u >= 0; u = nb.find_next(u))
                ++cnt[part[u]];
            for (int p = 0; p < parts; ++p)
                if (p != part[v] && cnt[part[v]] > cnt[p]) return false;
        }
        return true;
    };

    Graph c4 = make_cycle(4);
    bool saw_optimal = false;
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Partition part = max_k_cut_local_search(c4, 2, seed);
        CHECK(locally_optimal(c4, part, 2));
        long long cut = cut_size(c4, part);
        // strict single moves can stall at the 2-cut; both are locally optimal
        CHECK((cut == 2 || cut == 4));
        if (cut == 4) saw_optimal = true;
    }
    CHECK(saw_optimal);

    Graph g = sample_gnp(40, 0.3, 17);
    for (int parts : {2, 3, 4})
        CHECK(locally_optimal(g, max_k_cut_local_search(g, parts, 5), parts));

    // edgeless: anything goes
    Partition p = max_k_cut_local_search(Graph(6), 3, 0);
    CHECK(int(p.size()) == 6);
}

TEST_CASE("turan coloring") {
    Graph k4 = make_clique(4);
    Coloring one = turan_coloring(k4, Partition{0, 0, 0, 0});
    CHECK(one.red_count() == 6);
    Coloring singles = turan_coloring(k4, Partition{0, 1, 2, 3});
    CHECK(singles.blue_count() == 6);
    Coloring pairs = turan_coloring(k4, Partition{0, 0, 1, 1});
    CHECK(pairs.red_count() == 2);
    CHECK(pairs.blue_count() == 4);
    CHECK_THROWS_AS(turan_coloring(k4, Partition{0, 1, 2}), parameter_error);
    CHECK_THROWS_AS(turan_coloring(k4, Partition{0, 1, 2, -1}), parameter_error);
}

TEST_CASE("starburst lower-bound coloring") {
    // K_4 with k=3, n=3, delta=5: peel degrees (3,2,1,0), so j* = 1
    Graph k4 = make_clique(4);
    auto sc = color_starburst_lowerbound(k4, 3, 3, 5, 1);
    CHECK(sc.partition.jstar == 1);
    sc.coloring.check_partition();

    // sparse random hosts: invariants hold exactly
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        Graph g = sample_gnm(36, 20 + long(seed), Rng::mix(606, seed));
        int k = 3, n = 3, delta = 5;
        auto col = color_starburst_lowerbound(g, k, n, delta, seed);
        col.coloring.check_partition();
        CHECK(col.partition.jstar >= 1);
        CHECK(col.partition.jstar <= k - 1);
        // blue graph is k-partite: no blue edge inside a part
        for (auto [u, v] : g.edges()) {
            if (col.partition.part_of[u] == col.partition.part_of[v])
                CHECK(col.coloring.color(u, v) == Color::Red);
            else
                CHECK(col.coloring.color(u, v) == Color::Blue);
        }
        // cut parts have internal degree < delta
        for (int v = 0; v < g.n(); ++v) {
            if (col.partition.part_of[v] < col.partition.jstar) continue;
            int internal = 0;
            const Bitset& nb = g.adj(v);
            for (int u = nb.find_first(); u >= 0; u = nb.find_next(u))
                if (col.partition.part_of[u] == col.partition.part_of[v])
                    ++internal;
            CHECK(internal < delta);
        }
        // peeled blocks have exactly n vertices
        std::vector<int> sizes(k, 0);
        for (int v = 0; v < g.n(); ++v) ++sizes[col.partition.part_of[v]];
        for (int j = 0; j < col.partition.jstar; ++j) CHECK(sizes[j] == n);
    }

    // dense graph: the peel test never fails and the hypothesis is violated
    CHECK_THROWS_AS(color_starburst_lowerbound(make_clique(10), 3, 1, 1, 0),
                    parameter_error);

    Graph h1 = sample_gnm(30, 30, 1), h2 = sample_gnm(30, 30, 1);
    CHECK(same_coloring(color_starburst_lowerbound(h1, 3, 3, 5, 9).coloring,
                        color_starburst_lowerbound(h2, 3, 3, 5, 9).coloring));
}

TEST_CASE("coloring io") {
    Graph g = make_book(3, 2);
    Coloring c = color_uniform(g, 99);
    std::ostringstream out;
    write_coloring(c, out);
    std::istringstream in(out.str());
    Coloring back = read_coloring(in, g);
    CHECK(same_coloring(c, back));

    std::istringstream missing("c 5 9\n0 1 R\n");
    CHECK_THROWS_AS(read_coloring(missing, g), parse_error);
    std::istringstream badcolor("c 5 9\n0 1 X\n");
    CHECK_THROWS_AS(read_coloring(badcolor, g), parse_error);
    Graph other = make_clique(3);
    std::istringstream mismatched(out.str());
    CHECK_THROWS_AS(read_coloring(mismatched, other), parse_error);
}
