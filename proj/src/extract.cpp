#include "ramsey/extract.hpp"

#include <algorithm>
#include <map>

namespace ramsey {

std::optional<WitnessEmbedding> extract_kst(const BipartiteHost& host,
                                            const Coloring& c, int s, int t,
                                            const ExtractBudget& budget) {
    const Graph& g = host.graph;
    if (&c.graph() != &g) throw parameter_error("coloring is not over the host");
    if (s < 1 || t < 1) throw parameter_error("extract_kst needs s, t >= 1");
    int a = host.part_a;
    int total = g.n();
    if (a < 0 || a > total) throw parameter_error("bad part boundary");

    // Classify each B-vertex: red when at least half its edges are red.
    std::vector<int> red_class, blue_class;
    for (int v = a; v < total; ++v) {
        int deg = g.degree(v);
        if (2 * c.red_degree(v) >= deg)
            red_class.push_back(v);
        else
            blue_class.push_back(v);
    }
    Color col =
        red_class.size() >= blue_class.size() ? Color::Red : Color::Blue;
    std::vector<int>& majority = col == Color::Red ? red_class : blue_class;

    // A-neighborhoods in the majority color, processed by ascending size so
    // the bucket table grows as slowly as possible.
    auto class_nbrs = [&](int v) {
        std::vector<int> out;
        const Bitset& row = c.rows(col)[v];
        for (int u = row.find_first(); u >= 0 && u < a; u = row.find_next(u))
            out.push_back(u);
        return out;
    };
    std::sort(majority.begin(), majority.end(), [&](int x, int y) {
        return std::pair(c.rows(col)[x].count(), x) <
               std::pair(c.rows(col)[y].count(), y);
    });

    // Pigeonhole bucketing: map each s-subset of a vertex's color class to
    // the list of B-vertices that contributed it; stop at t contributors.
    std::map<std::vector<int>, std::vector<int>> buckets;
    std::vector<int> subset(s);
    std::optional<WitnessEmbedding> found;
    for (int bv : majority) {
        std::vector<int> nbrs = class_nbrs(bv);
        if (int(nbrs.size()) < s) continue;
        auto rec = [&](auto&& self, int depth, int start) -> bool {
            if (depth == s) {
                auto& entry = buckets[subset];
                if (entry.empty() &&
                    (long long)buckets.size() > budget.max_tuples)
                    throw resource_error("pigeonhole bucket budget exceeded");
                entry.push_back(bv);
                if (int(entry.size()) >= t) {
                    WitnessEmbedding w;
                    w.family = FamilyParams::complete_bipartite(s, t);
                    w.color = col;
                    w.core = subset;
                    w.leaves = entry;
                    w.method = "pigeonhole";
                    found = std::move(w);
                    return true;
                }
                return false;
            }
            for (int i = start; i < int(nbrs.size()); ++i) {
                subset[depth] = nbrs[i];
                if (self(self, depth + 1, i + 1)) return true;
            }
            return false;
        };
        if (rec(rec, 0, 0)) break;
    }
    if (found && !validate_witness(g, &c, *found))
        throw error("internal: pigeonhole witness failed validation");
    return found;
}

// ---- neighborhood chase -----------------------------------------------------

ChaseResult chase_mono_clique(const Graph& g, const Coloring& c,
                              const Bitset& v0, const ChaseParams& params) {
    if (&c.graph() != &g) throw parameter_error("coloring is not over the graph");
    if (params.k < 1) throw parameter_error("chase needs k >= 1");
    if (v0.capacity() != g.n()) throw parameter_error("v0 does not match graph");
    ChaseResult res;
    int steps = 2 * params.k;
    int reserve_need = (3 * params.n + 1) / 2;  // ceil(3n/2) per color

    Bitset current = v0;
    Bitset zunion(g.n());
    for (int step = 0; step < steps; ++step) {
        double need_inside = (params.p - params.delta) * current.count();
        double z_cap = (params.p + params.delta) * zunion.count();
        int pick = -1;
        for (int v = current.find_first(); v >= 0; v = current.find_next(v)) {
            if (double(Bitset::and_count(g.adj(v), current)) < need_inside)
                continue;
            if (double(Bitset::and_count(g.adj(v), zunion)) > z_cap) continue;
            pick = v;
            break;
        }
        if (pick < 0) {
            res.failed_step = step;
            return res;
        }
        int red_in = Bitset::and_count(c.red_adj(pick), current);
        int blue_in = Bitset::and_count(c.blue_adj(pick), current);
        Color col = red_in >= blue_in ? Color::Red : Color::Blue;

        ChaseStep cs;
        cs.vertex = pick;
        cs.color = col;
        auto carve = [&](const Bitset& side, std::vector<int>* out) {
            for (int u = side.find_first();
                 u >= 0 && int(out->size()) < reserve_need;
                 u = side.find_next(u))
                if (!zunion.test(u)) out->push_back(u);
            return int(out->size()) >= reserve_need;
        };
        bool ok_red = carve(c.red_adj(pick), &cs.reservoir_red);
        bool ok_blue = carve(c.blue_adj(pick), &cs.reservoir_blue);
        if (!ok_red || !ok_blue) {
            res.failed_step = step;
            return res;
        }
        for (int u : cs.reservoir_red) zunion.set(u);
        for (int u : cs.reservoir_blue) zunion.set(u);

        Bitset next = current;
        next &= c.rows(col)[pick];
        if (!next.is_subset_of(current))
            throw error("internal: chase neighborhoods not nested");
        current = std::move(next);
        res.steps.push_back(std::move(cs));
    }

    // majority color among the 2k steps; the first k matching steps give the
    // clique (later vertices were drawn from earlier color neighborhoods)
    int reds = 0;
    for (const auto& st : res.steps)
        if (st.color == Color::Red) ++reds;
    res.clique_color = reds >= params.k ? Color::Red : Color::Blue;
    for (const auto& st : res.steps) {
        if (st.color != res.clique_color) continue;
        res.clique.push_back(st.vertex);
        if (int(res.clique.size()) == params.k) break;
    }
    for (std::size_t i = 0; i < res.clique.size(); ++i)
        for (std::size_t j = i + 1; j < res.clique.size(); ++j)
            if (c.color(res.clique[i], res.clique[j]) != res.clique_color)
                throw error("internal: chase clique not monochromatic");
    res.completed = true;
    res.failed_step = steps;
    return res;
}

// ---- starburst extractor ------------------------------------------------------

namespace {

// k-cliques of the color graph restricted to `inside`, each tried with a
// greedy pendant assignment from full-graph color neighborhoods.
std::optional<WitnessEmbedding> dense_branch(const Graph& g, const Coloring& c,
                                             const Bitset& inside, Color col,
                                             int k, int n,
                                             const ExtractBudget& budget) {
    std::vector<Bitset> sub(g.n(), Bitset(g.n()));
    for (int v = inside.find_first(); v >= 0; v = inside.find_next(v)) {
        sub[v] = c.rows(col)[v];
        sub[v] &= inside;
    }
    std::optional<WitnessEmbedding> found;
    Bitset used(g.n());
    DetectBudget db{budget.max_steps};
    enumerate_cliques(
        sub, k,
        [&](std::span<const int> q) {
            used.clear();
            for (int v : q) used.set(v);
            std::vector<std::vector<int>> pendants(k);
            bool ok = true;
            for (int i = 0; i < k && ok; ++i) {
                const Bitset& nbr = c.rows(col)[q[i]];
                auto& mine = pendants[i];
                for (int u = nbr.find_first();
                     u >= 0 && int(mine.size()) < n; u = nbr.find_next(u))
                    if (!used.test(u)) {
                        mine.push_back(u);
                        used.set(u);
                    }
                ok = int(mine.size()) == n;
            }
            if (!ok) return true;
            WitnessEmbedding w;
            w.family = FamilyParams::starburst(k, n);
            w.color = col;
            w.core.assign(q.begin(), q.end());
            w.pendants = std::move(pendants);
            w.method = col == Color::Red ? "red-degree-branch" : "blue-degree-branch";
            found = std::move(w);
            return false;
        },
        db);
    return found;
}

}  // namespace

std::optional<WitnessEmbedding> extract_starburst(
    const Graph& g, const Coloring& c, int k, int n,
    const StarburstExtractOptions& opt, const ExtractBudget& budget) {
    if (&c.graph() != &g) throw parameter_error("coloring is not over the graph");
    if (k < 1 || n < 0)
        throw parameter_error("extract_starburst parameter out of range");
    double p = opt.p > 0 ? opt.p : 1.0 / (10.0 * k);
    double delta = opt.delta > 0 ? opt.delta : p * p;

    Bitset vr(g.n()), vb(g.n()), v0(g.n());
    for (int v = 0; v < g.n(); ++v) {
        int rd = c.red_degree(v), bd = c.blue_degree(v);
        if (bd < 3 * n) vr.set(v);
        if (rd < 3 * n) vb.set(v);
        if (rd >= 3 * n && bd >= 3 * n) v0.set(v);
    }
    int nr = vr.count(), nb = vb.count(), n0 = v0.count();

    std::optional<WitnessEmbedding> found;
    if (nr >= nb && nr >= n0) {
        found = dense_branch(g, c, vr, Color::Red, k, n, budget);
    } else if (nb >= n0) {
        found = dense_branch(g, c, vb, Color::Blue, k, n, budget);
    } else {
        ChaseResult chase =
            chase_mono_clique(g, c, v0, ChaseParams{p, delta, k, n});
        if (chase.completed) {
            Color col = chase.clique_color;
            WitnessEmbedding w;
            w.family = FamilyParams::starburst(k, n);
            w.color = col;
            w.core = chase.clique;
            w.method = "chase";
            Bitset spine(g.n());
            for (int v : w.core) spine.set(v);
            bool ok = true;
            for (int v : w.core) {
                const ChaseStep* owner = nullptr;
                for (const auto& st : chase.steps)
                    if (st.vertex == v) owner = &st;
                const auto& pool = col == Color::Red ? owner->reservoir_red
                                                     : owner->reservoir_blue;
                std::vector<int> mine;
                for (int u : pool) {
                    if (spine.test(u)) continue;
                    mine.push_back(u);
                    if (int(mine.size()) == n) break;
                }
                if (int(mine.size()) < n) {
                    ok = false;
                    break;
                }
                w.pendants.push_back(std::move(mine));
            }
            if (ok) found = std::move(w);
        }
    }

    if (!found && opt.allow_fallback) {
        DetectBudget db{budget.max_steps};
        found = find_starburst(g, c, k, n, Color::Red, db);
        if (!found) found = find_starburst(g, c, k, n, Color::Blue, db);
        if (found) found->via_fallback = true;
    }
    if (found && !validate_witness(g, &c, *found))
        throw error("internal: starburst witness failed validation");
    return found;
}

}  // namespace ramsey
