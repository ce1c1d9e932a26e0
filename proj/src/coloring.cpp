#include "ramsey/coloring.hpp"

#include <bit>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "ramsey/rng.hpp"

namespace ramsey {

Coloring::Coloring(const Graph& g) : g_(&g) {
    red_.assign(g.n(), Bitset(g.n()));
    blue_.reserve(g.n());
    for (int v = 0; v < g.n(); ++v) blue_.push_back(g.adj(v));
}

Color Coloring::color(int u, int v) const {
    if (!g_->has_edge(u, v)) throw parameter_error("color() on a non-edge");
    return red_[u].test(v) ? Color::Red : Color::Blue;
}

void Coloring::set(int u, int v, Color c) {
    if (!g_->has_edge(u, v)) throw parameter_error("set() on a non-edge");
    if (c == Color::Red) {
        red_[u].set(v);
        red_[v].set(u);
        blue_[u].reset(v);
        blue_[v].reset(u);
    } else {
        blue_[u].set(v);
        blue_[v].set(u);
        red_[u].reset(v);
        red_[v].reset(u);
    }
}

long long Coloring::red_count() const {
    long long c = 0;
    for (const auto& row : red_) c += row.count();
    return c / 2;
}

long long Coloring::blue_count() const {
    long long c = 0;
    for (const auto& row : blue_) c += row.count();
    return c / 2;
}

void Coloring::check_partition() const {
    for (int v = 0; v < g_->n(); ++v) {
        if (red_[v].intersects(blue_[v]))
            throw error("coloring invariant broken: red and blue overlap");
        Bitset both = red_[v] | blue_[v];
        if (!(both == g_->adj(v)))
            throw error("coloring invariant broken: colors do not cover E");
        for (int u = red_[v].find_first(); u >= 0; u = red_[v].find_next(u))
            if (!red_[u].test(v))
                throw error("coloring invariant broken: red not symmetric");
    }
}

Coloring color_all(const Graph& g, Color c) {
    Coloring col(g);
    if (c == Color::Red)
        for (auto [u, v] : g.edges()) col.set(u, v, Color::Red);
    return col;
}

Coloring color_uniform(const Graph& g, std::uint64_t seed) {
    Coloring col(g);
    Rng rng(seed);
    for (auto [u, v] : g.edges())
        col.set(u, v, rng.bernoulli(0.5) ? Color::Red : Color::Blue);
    return col;
}

// ---- hypergeometric dyadic ----------------------------------------------

int DyadicPlan::level_of_position(int pos) const {
    if (pos < 0 || pos >= a_size) return 0;
    // position p (0-based) sits in interval floor(log2(p + 2))
    return std::bit_width(unsigned(pos) + 2) - 1;
}

int dyadic_levels_for_kst(int s, int t) {
    if (t <= s) throw parameter_error("dyadic level formula needs t > s");
    double raw = std::log2(double(s) * s * t / (50.0 * (t - s)));
    return std::max(1, int(std::floor(raw)));
}

DyadicPlan build_dyadic_plan(const Graph& g, const VertexOrdering& ordering,
                             int levels) {
    if (levels < 1) throw parameter_error("dyadic plan needs at least 1 level");
    if (levels > 24) throw resource_error("dyadic plan with 2^25+ positions refused");
    if (ordering.size() != g.n())
        throw parameter_error("ordering does not match graph");
    int need = DyadicPlan::positions_needed(levels);
    if (g.n() < need)
        throw parameter_error(
            "graph has " + std::to_string(g.n()) + " vertices but the plan needs " +
            std::to_string(need) + " positions; pad_isolated first");
    DyadicPlan plan;
    plan.levels = levels;
    plan.a_size = need;
    plan.order = ordering;
    for (int l = 1; l <= levels; ++l)
        plan.intervals.emplace_back((1 << l) - 2, (1 << (l + 1)) - 2);
    return plan;
}

Coloring color_hypergeometric_dyadic(const Graph& g, const DyadicPlan& plan,
                                     std::uint64_t seed) {
    if (plan.order.size() != g.n())
        throw parameter_error("plan was built for a different graph");
    Coloring col(g);
    const auto& ord = plan.order;

    // Edges with both endpoints in B: dedicated uniform stream, edge order
    // lexicographic.
    Rng bstream(Rng::mix(seed, 0xB57EA11ULL));
    for (auto [u, v] : g.edges()) {
        if (ord.pos[u] >= plan.a_size &&
            ord.pos[v] >= plan.a_size)
            col.set(u, v, bstream.bernoulli(0.5) ? Color::Red : Color::Blue);
    }

    // For every later endpoint position j and every interval l up to j's own
    // level, draw the half-subset R_{j,l} and color the edges into it. The
    // draw happens on its own substream keyed by (j, l), so skipping pairs
    // with no incident edges leaves all other draws unchanged.
    std::uint64_t hbase = Rng::mix(seed, 0xD1AD1CULL);
    std::vector<int> offsets;
    for (int j = 1; j < g.n(); ++j) {
        int vj = ord.order[j];
        const Bitset& nb = g.adj(vj);
        int own_level = std::bit_width(unsigned(j) + 2) - 1;  // 1-based j+1
        int top = std::min(plan.levels, own_level);
        for (int l = 1; l <= top; ++l) {
            auto [lo, hi] = plan.intervals[l - 1];
            int limit = std::min(hi, j);  // earlier positions only
            bool touched = false;
            for (int p = lo; p < limit; ++p)
                if (nb.test(ord.order[p])) {
                    touched = true;
                    break;
                }
            if (!touched) continue;
            int size = hi - lo;
            offsets.resize(size);
            std::iota(offsets.begin(), offsets.end(), 0);
            Rng draw(Rng::mix(hbase, std::uint64_t(j) * 64 + std::uint64_t(l)));
            draw.partial_shuffle(offsets, size / 2);
            Bitset in_r(size);
            for (int i = 0; i < size / 2; ++i) in_r.set(offsets[i]);
            for (int p = lo; p < limit; ++p) {
                int vi = ord.order[p];
                if (nb.test(vi))
                    col.set(vi, vj, in_r.test(p - lo) ? Color::Red : Color::Blue);
            }
        }
    }
    return col;
}

// ---- book lower-bound ----------------------------------------------------

BookColoring color_book_lowerbound(const Graph& g, int k, int n,
                                   std::uint64_t seed) {
    if (k < 2 || n < 1)
        throw parameter_error("book lower-bound coloring needs k >= 2, n >= 1");
    BookTierPlan plan;
    plan.tiers = std::max(1, k / 3);
    plan.width = (n + 9) / 10;
    int need = (plan.tiers + 1) * plan.width;
    if (g.n() < need)
        throw parameter_error("graph has " + std::to_string(g.n()) +
                              " vertices; tiers need " + std::to_string(need));
    plan.order = degree_order(g);
    plan.tier_of.assign(g.n(), -1);
    for (int i = 0; i <= plan.tiers; ++i)
        for (int p = i * plan.width; p < (i + 1) * plan.width; ++p)
            plan.tier_of[plan.order.order[p]] = i;
    plan.probs.resize(plan.tiers + 1);
    plan.probs[0] = 0.0;
    for (int i = 1; i <= plan.tiers; ++i)
        plan.probs[i] =
            0.5 * std::pow(double(i) / plan.tiers, 1.0 / k);
    plan.degree_caps.resize(plan.tiers + 1, 0.0);
    for (int i = 1; i <= plan.tiers; ++i)
        plan.degree_caps[i] =
            double(plan.tiers) * std::pow(2.0, k) * n / (20.0 * i);

    Coloring col(g);
    Rng rng(seed);
    for (auto [u, v] : g.edges()) {
        int tu = plan.tier_of[u], tv = plan.tier_of[v];
        if (tu >= 0 && tv >= 0) {
            col.set(u, v, tu == tv ? Color::Red : Color::Blue);
        } else if (tu < 0 && tv < 0) {
            col.set(u, v, rng.bernoulli(0.5) ? Color::Red : Color::Blue);
        } else {
            int tier = std::max(tu, tv);
            col.set(u, v,
                    rng.bernoulli(plan.probs[tier]) ? Color::Red
                                                                 : Color::Blue);
        }
    }
    return {std::move(col), std::move(plan)};
}

// ---- Turan-style ----------------------------------------------------------

Partition max_k_cut_local_search(const Graph& g, int parts, std::uint64_t seed) {
    if (parts < 1) throw parameter_error("cut needs at least 1 part");
    int n = g.n();
    Partition part(n);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Rng rng(seed);
    rng.shuffle(perm);
    for (int i = 0; i < n; ++i) part[perm[i]] = i % parts;
    if (parts == 1 || n == 0) return part;

    // neighbor counts per part, updated incrementally
    std::vector<std::vector<int>> cnt(n, std::vector<int>(parts, 0));
    for (int v = 0; v < n; ++v) {
        const Bitset& nb = g.adj(v);
        for (int u = nb.find_first(); u >= 0; u = nb.find_next(u))
            ++cnt[v][part[u]];
    }
    bool improved = true;
    while (improved) {
        improved = false;
        for (int v = 0; v < n; ++v) {
            int own = cnt[v][part[v]];
            for (int p = 0; p < parts; ++p) {
                if (p == part[v]) continue;
                if (cnt[v][p] < own) {
                    int old = part[v];
                    const Bitset& nb = g.adj(v);
                    for (int u = nb.find_first(); u >= 0; u = nb.find_next(u)) {
                        --cnt[u][old];
                        ++cnt[u][p];
                    }
                    part[v] = p;
                    improved = true;
                    break;
                }
            }
        }
    }
    return part;
}

long long cut_size(const Graph& g, const Partition& part) {
    if (int(part.size()) != g.n())
        throw parameter_error("partition does not cover V(G)");
    long long cut = 0;
    for (auto [u, v] : g.edges())
        if (part[u] != part[v]) ++cut;
    return cut;
}

Coloring turan_coloring(const Graph& g, const Partition& part) {
    if (int(part.size()) != g.n())
        throw parameter_error("partition does not cover V(G)");
    for (int p : part)
        if (p < 0) throw parameter_error("partition does not cover V(G)");
    Coloring col(g);
    for (auto [u, v] : g.edges())
        col.set(u, v,
                part[u] == part[v] ? Color::Red
                                                             : Color::Blue);
    return col;
}

StarburstColoring color_starburst_lowerbound(const Graph& g, int k, int n,
                                             int max_degree,
                                             std::uint64_t seed) {
    if (k < 2 || n < 1 || max_degree < 1)
        throw parameter_error(
            "starburst lower-bound coloring needs k >= 2, n >= 1, max_degree >= 1");
    StarburstPartition sp;
    sp.parts = k;
    sp.peel = peel_order(g);
    int N = g.n();
    auto peel_degree = [&](long long i) {  // 1-based, 0 beyond N
        return (i >= 1 && i <= N) ? sp.peel.degrees[i - 1] : 0;
    };
    sp.jstar = 0;
    for (int j = 1; j <= k - 1; ++j) {
        if (peel_degree((long long)j * n) < (long long)(k - j) * max_degree) {
            sp.jstar = j;
            break;
        }
    }
    if (sp.jstar == 0)
        throw parameter_error(
            "peel degrees never fell below the threshold: graph has m = " +
            std::to_string(g.m()) + " >= C(k,2)*max_degree*n = " +
            std::to_string((long long)k * (k - 1) / 2 * max_degree * n));

    sp.part_of.assign(N, -1);
    long long peeled = std::min<long long>((long long)sp.jstar * n, N);
    for (long long i = 0; i < peeled; ++i)
        sp.part_of[sp.peel.order[i]] = int(i / n);

    // remainder: local max (k - j*)-cut on the induced subgraph
    std::vector<int> rest;
    for (long long i = peeled; i < N; ++i)
        rest.push_back(sp.peel.order[i]);
    if (!rest.empty()) {
        Graph sub(int(rest.size()));
        std::vector<int> idx(N, -1);
        for (int i = 0; i < int(rest.size()); ++i) idx[rest[i]] = i;
        for (int i = 0; i < int(rest.size()); ++i) {
            const Bitset& nb = g.adj(rest[i]);
            for (int u = nb.find_first(); u >= 0; u = nb.find_next(u))
                if (idx[u] > i) sub.add_edge(i, idx[u]);
        }
        Partition cut =
            max_k_cut_local_search(sub, k - sp.jstar, Rng::mix(seed, 0xC17ULL));
        for (int i = 0; i < int(rest.size()); ++i)
            sp.part_of[rest[i]] =
                sp.jstar + cut[i];
    }
    Coloring col = turan_coloring(g, sp.part_of);
    return {std::move(col), std::move(sp)};
}

// ---- io --------------------------------------------------------------------

void write_coloring(const Coloring& c, std::ostream& out) {
    const Graph& g = c.graph();
    out << "c " << g.n() << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << ' ' << color_char(c.color(u, v)) << '\n';
}

void write_coloring_file(const Coloring& c, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw error("cannot open " + path);
    write_coloring(c, out);
}

Coloring read_coloring(std::istream& in, const Graph& base) {
    std::string line;
    int line_no = 0;
    bool header = false;
    Coloring col(base);
    std::vector<Bitset> seen(base.n(), Bitset(base.n()));
    long long edges_seen = 0, declared = -1;
    while (std::getline(in, line)) {
        ++line_no;
        bool blank = true;
        for (char ch : line) {
            if (ch == '#') break;
            if (!isspace(static_cast<unsigned char>(ch))) {
                blank = false;
                break;
            }
        }
        if (blank) continue;
        std::istringstream ss(line);
        if (!header) {
            std::string tag;
            long long n;
            if (!(ss >> tag >> n >> declared) || tag != "c")
                throw parse_error("expected header 'c <n> <m>'", line_no);
            if (n != base.n() || declared != base.m())
                throw parse_error("coloring header does not match base graph",
                                  line_no);
            header = true;
            continue;
        }
        long long u, v;
        std::string cs;
        if (!(ss >> u >> v >> cs) || (cs != "R" && cs != "B"))
            throw parse_error("expected '<u> <v> <R|B>'", line_no);
        if (u < 0 || v < 0 || u >= base.n() || v >= base.n() || u >= v)
            throw parse_error("bad edge endpoints", line_no);
        if (!base.has_edge(int(u), int(v)))
            throw parse_error("edge not in base graph", line_no);
        if (seen[u].test(int(v)))
            throw parse_error("edge colored twice", line_no);
        seen[u].set(int(v));
        col.set(int(u), int(v), cs == "R" ? Color::Red : Color::Blue);
        ++edges_seen;
    }
    if (!header) throw parse_error("missing header 'c <n> <m>'", line_no + 1);
    if (edges_seen != base.m())
        throw parse_error("coloring lists " + std::to_string(edges_seen) +
                              " of " + std::to_string(base.m()) + " edges",
                          line_no + 1);
    return col;
}

Coloring read_coloring_file(const std::string& path, const Graph& base) {
    std::ifstream in(path);
    if (!in) throw error("cannot open " + path);
    return read_coloring(in, base);
}

}  // namespace ramsey
