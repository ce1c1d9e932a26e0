#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracle_helpers.hpp"
#include "ramsey/detect.hpp"

using namespace ramsey;
using namespace ramsey::testing;

TEST_CASE("count_kst small cases") {
    CHECK(count_kst(make_complete_bipartite(2, 3).graph, 2, 3) == 1);
    CHECK(count_kst(make_cycle(4), 2, 2) == 1);
    CHECK(count_kst(make_clique(4), 1, 1) == 6);  // the edges
    CHECK(count_kst(make_complete_bipartite(3, 3).graph, 2, 2) == 9);
    CHECK(count_kst(Graph(6), 1, 1) == 0);
    // argument order does not matter
    CHECK(count_kst(make_complete_bipartite(2, 3).graph, 3, 2) == 1);
}

TEST_CASE("count_kst agrees with brute force on a corpus") {
    auto corpus = small_graph_corpus(60, 0xC0FFEE);
    for (const auto& g : corpus) {
        for (auto [s, t] : {std::pair{1, 1}, {1, 2}, {2, 2}, {2, 3}, {3, 3}}) {
            CAPTURE(g.n());
            CAPTURE(s);
            CAPTURE(t);
            CHECK(count_kst(g, s, t) == naive_count_kst(g, s, t));
        }
    }
}

TEST_CASE("count_kst budget") {
    DetectBudget tiny{10};
    Graph k12 = make_clique(12);
    CHECK_THROWS_AS(count_kst(k12.rows(), 3, 3, tiny), resource_error);
}

TEST_CASE("count_mono_kst") {
    Graph g = make_complete_bipartite(3, 3).graph;
    Coloring red = color_all(g, Color::Red);
    auto counts = count_mono_kst(g, red, 2, 2);
    CHECK(counts.red == count_kst(g, 2, 2));
    CHECK(counts.blue == 0);

    // alternating C_4: no monochromatic K_{2,2}
    Graph c4 = make_cycle(4);
    Coloring alt(c4);
    alt.set(0, 1, Color::Red);
    alt.set(1, 2, Color::Blue);
    alt.set(2, 3, Color::Red);
    alt.set(0, 3, Color::Blue);
    auto ac = count_mono_kst(c4, alt, 2, 2);
    CHECK(ac.red == 0);
    CHECK(ac.blue == 0);

    // mean monochromatic K_{2,2} count in K_{3,3} under uniform coloring:
    // 9 copies, each monochromatic with probability 2^{1-4}
    const int trials = 10000;
    double sum = 0, sumsq = 0;
    for (int s = 0; s < trials; ++s) {
        Coloring c = color_uniform(g, Rng::mix(31337, s));
        auto mc = count_mono_kst(g, c, 2, 2);
        double v = double(mc.red + mc.blue);
        sum += v;
        sumsq += v * v;
    }
    double mean = sum / trials;
    double se = std::sqrt((sumsq / trials - mean * mean) / trials);
    CHECK(std::abs(mean - 9.0 * std::pow(2.0, 1 - 4)) < 5 * se);
}

TEST_CASE("clique enumeration") {
    CHECK(list_cliques(make_clique(5), 3).size() == 10);
    CHECK(list_cliques(make_cycle(5), 3).empty());
    // triangles of B_2^(3): the spine plus page-spine-pair triangles
    CHECK(list_cliques(make_book(3, 2), 3).size() == 7);

    // lexicographic order, each exactly once
    auto cliques = list_cliques(sample_gnp(12, 0.6, 5), 3);
    std::set<std::vector<int>> seen;
    for (const auto& c : cliques) {
        CHECK(std::is_sorted(c.begin(), c.end()));
        CHECK(seen.insert(c).second);
    }
    CHECK(std::is_sorted(cliques.begin(), cliques.end()));

    // early stop
    int visits = 0;
    enumerate_cliques(make_clique(6).rows(), 2, [&](std::span<const int>) {
        ++visits;
        return visits < 3;
    });
    CHECK(visits == 3);

    CHECK(list_cliques(make_clique(3), 1).size() == 3);
    CHECK(list_cliques(Graph(4), 2).empty());
}

TEST_CASE("has_* detectors") {
    CHECK(has_clique(make_clique(6).rows(), 6));
    Graph c5 = make_cycle(5);
    CHECK(!has_clique(c5.rows(), 3));
    Graph p5 = make_path(5);
    CHECK(has_path(p5.rows(), 5));
    CHECK(!has_path(p5.rows(), 6));
    Graph c4 = make_cycle(4);
    CHECK(has_path(c4.rows(), 4));
    Graph k34 = make_complete_bipartite(3, 4).graph;
    CHECK(has_kst(k34.rows(), 3, 4));
    CHECK(!has_kst(k34.rows(), 4, 4));
    Graph b32 = make_book(3, 2);
    CHECK(has_book(b32.rows(), 3, 2));
    CHECK(!has_book(b32.rows(), 3, 3));
    Graph s32 = make_starburst(3, 2);
    CHECK(has_starburst(s32.rows(), 3, 2));
    CHECK(!has_starburst(s32.rows(), 3, 3));
    Graph k4 = make_clique(4);
    CHECK(contains_family(k4.rows(), FamilyParams::parse("clique:4")));
}

TEST_CASE("book extensions") {
    Graph g = make_book(3, 3);  // spine {0,1,2}, pages {3,4,5}
    Coloring c = color_all(g, Color::Red);
    std::vector<int> spine{0, 1, 2};
    CHECK(book_extensions(g, c, spine) == 3);

    // one blue spine edge: not monochromatic
    c.set(0, 1, Color::Blue);
    CHECK(book_extensions(g, c, spine) == 0);
    c.set(0, 1, Color::Red);

    // spine red, exactly 2 pages fully red
    c.set(0, 5, Color::Blue);
    CHECK(book_extensions(g, c, spine) == 2);

    // all-red K_m: every other vertex extends
    Graph km = make_clique(7);
    Coloring rc = color_all(km, Color::Red);
    std::vector<int> q{0, 1, 2};
    CHECK(book_extensions(km, rc, q) == 4);

    // non-clique spine is rejected
    Graph p3 = make_path(3);
    Coloring pc = color_all(p3, Color::Red);
    std::vector<int> bad{0, 2};
    CHECK_THROWS_AS(book_extensions(p3, pc, bad), parameter_error);

    // |Q| = 1: the larger color degree
    Coloring mixed(g);
    mixed.set(0, 3, Color::Red);
    std::vector<int> single{0};
    CHECK(book_extensions(g, mixed, single) == 4);  // 4 blue vs 1 red
}

TEST_CASE("book extensions equals direct intersection oracle") {
    auto corpus = small_graph_corpus(25, 0xB00C);
    for (const auto& g : corpus) {
        if (g.n() < 3) continue;
        Coloring c = color_uniform(g, std::uint64_t(g.n()));
        for (const auto& q : list_cliques(g, 3)) {
            Color qc = c.color(q[0], q[1]);
            bool mono = c.color(q[0], q[2]) == qc && c.color(q[1], q[2]) == qc;
            int expected = 0;
            if (mono)
                for (int v = 0; v < g.n(); ++v) {
                    if (v == q[0] || v == q[1] || v == q[2]) continue;
                    bool ext = true;
                    for (int u : q)
                        if (!g.has_edge(u, v) || c.color(u, v) != qc) ext = false;
                    if (ext) ++expected;
                }
            CHECK(book_extensions(g, c, q) == expected);
        }
    }
}

TEST_CASE("find_mono_book") {
    // all-red K_{k+n} has a book on any spine
    Graph km = make_clique(6);
    Coloring rc = color_all(km, Color::Red);
    auto w = find_mono_book(km, rc, 3, 3);
    REQUIRE(w);
    CHECK(w->color == Color::Red);
    CHECK(validate_witness(km, &rc, *w));

    // n = 0: any monochromatic clique qualifies
    auto w0 = find_mono_book(km, rc, 3, 0);
    REQUIRE(w0);
    CHECK(validate_witness(km, &rc, *w0));

    // alternating 4-cycle has no monochromatic triangle at all
    Graph c4 = make_cycle(4);
    Coloring alt(c4);
    alt.set(0, 1, Color::Red);
    alt.set(2, 3, Color::Red);
    CHECK(!find_mono_book(c4, alt, 3, 0));
}

TEST_CASE("find_starburst basics") {
    Graph s = make_starburst(3, 2);
    Coloring rc = color_all(s, Color::Red);
    auto w = find_starburst(s, rc, 3, 2, Color::Red);
    REQUIRE(w);
    CHECK(validate_witness(s, &rc, *w));
    CHECK(!find_starburst(s, rc, 3, 2, Color::Blue));

    // K_k alone: no pendants available
    Graph k3 = make_clique(3);
    Coloring k3c = color_all(k3, Color::Red);
    CHECK(!find_starburst(k3, k3c, 3, 1, Color::Red));
    // n = 0 degenerates to a clique search
    CHECK(find_starburst(k3, k3c, 3, 0, Color::Red));

    // K_{k+kn} all red: flow saturates
    Graph big = make_clique(3 + 6);
    Coloring bigc = color_all(big, Color::Red);
    auto bw = find_starburst(big, bigc, 3, 2, Color::Red);
    REQUIRE(bw);
    CHECK(validate_witness(big, &bigc, *bw));
}

TEST_CASE("find_starburst agrees with exhaustive assignment search") {
    auto corpus = small_graph_corpus(40, 0x5AB);
    int checked = 0;
    for (const auto& g : corpus) {
        if (g.n() > 12) continue;
        Coloring c = color_uniform(g, 77 + std::uint64_t(g.m()));
        for (auto [k, n] : {std::pair{2, 1}, {2, 2}, {3, 1}, {3, 2}}) {
            for (Color col : {Color::Red, Color::Blue}) {
                bool naive = naive_has_starburst(g, c, k, n, col);
                auto found = find_starburst(g, c, k, n, col);
                CHECK(bool(found) == naive);
                if (found) CHECK(validate_witness(g, &c, *found));
                ++checked;
            }
        }
    }
    CHECK(checked >= 200);
}

TEST_CASE("witness validation rejects corrupt embeddings") {
    Graph g = make_starburst(3, 2);
    Coloring c = color_all(g, Color::Red);
    auto w = find_starburst(g, c, 3, 2, Color::Red);
    REQUIRE(w);

    WitnessEmbedding bad = *w;
    bad.pendants[0][0] = bad.pendants[1][0];  // duplicate vertex
    CHECK(!validate_witness(g, &c, bad));

    WitnessEmbedding wrong_color = *w;
    wrong_color.color = Color::Blue;
    CHECK(!validate_witness(g, &c, wrong_color));

    WitnessEmbedding out_of_range = *w;
    out_of_range.core[0] = 99;
    CHECK(!validate_witness(g, &c, out_of_range));

    WitnessEmbedding short_pendants = *w;
    short_pendants.pendants[2].pop_back();
    CHECK(!validate_witness(g, &c, short_pendants));
}
