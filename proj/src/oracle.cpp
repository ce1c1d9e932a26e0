#include "ramsey/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "ramsey/quadrature.hpp"
#include "ramsey/rng.hpp"

namespace ramsey {

const char* tristate_name(Tristate t) {
    switch (t) {
        case Tristate::True: return "true";
        case Tristate::False: return "false";
        case Tristate::Unknown: return "unknown";
    }
    return "?";
}

namespace {

struct budget_out {};  // internal: arrowing node budget hit

std::vector<int> core_numbers(const Graph& g) {
    int n = g.n();
    std::vector<int> deg(n), core(n, 0);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    Bitset alive(n);
    for (int v = 0; v < n; ++v) alive.set(v);
    int level = 0;
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = alive.find_first(); v >= 0; v = alive.find_next(v))
            if (best < 0 || deg[v] < deg[best]) best = v;
        level = std::max(level, deg[best]);
        core[best] = level;
        alive.reset(best);
        const Bitset& nb = g.adj(best);
        for (int u = nb.find_first(); u >= 0; u = nb.find_next(u))
            if (alive.test(u)) --deg[u];
    }
    return core;
}

}  // namespace

ArrowResult arrows(const Graph& g, const FamilyParams& h1,
                   const FamilyParams& h2, const OracleBudget& budget) {
    if (g.m() > budget.max_arrow_edges)
        throw resource_error("exhaustive arrowing capped at " +
                             std::to_string(budget.max_arrow_edges) +
                             " edges; graph has " + std::to_string(g.m()));
    auto edges = g.edges();
    // densest endpoints first, so monochromatic closures appear early
    std::vector<int> core = core_numbers(g);
    std::sort(edges.begin(), edges.end(), [&](auto e, auto f) {
        int ce = std::min(core[e.first], core[e.second]);
        int cf = std::min(core[f.first], core[f.second]);
        if (ce != cf) return ce > cf;
        int de = g.degree(e.first) + g.degree(e.second);
        int df = g.degree(f.first) + g.degree(f.second);
        if (de != df) return de > df;
        return e < f;
    });

    int n = g.n();
    std::vector<Bitset> red(n, Bitset(n));
    std::vector<Bitset> blue(n, Bitset(n));
    bool symmetric = h1 == h2;
    long long nodes = 0;
    std::optional<Coloring> witness;
    DetectBudget db;

    auto rec = [&](auto&& self, std::size_t idx) -> bool {
        if (idx == edges.size()) {
            // the incremental checks keep monochromatic copies out of every
            // branch unless a target has no edges at all, so re-check here
            if (contains_family(red, h1, db) || contains_family(blue, h2, db))
                return false;
            Coloring col(g);
            for (auto [u, v] : edges)
                col.set(u, v, red[u].test(v) ? Color::Red : Color::Blue);
            witness = std::move(col);
            return true;
        }
        auto [u, v] = edges[idx];
        for (int ci = 0; ci < 2; ++ci) {
            if (idx == 0 && symmetric && ci == 1) break;
            if (++nodes > budget.max_nodes) throw budget_out{};
            auto& rows = ci == 0 ? red : blue;
            rows[u].set(v);
            rows[v].set(u);
            bool closed = contains_family(rows, ci == 0 ? h1 : h2, db);
            if (!closed && self(self, idx + 1)) return true;
            rows[u].reset(v);
            rows[v].reset(u);
        }
        return false;
    };

    try {
        bool counterexample = rec(rec, 0);
        return {counterexample ? Tristate::False : Tristate::True,
                std::move(witness), nodes};
    } catch (const budget_out&) {
        return {Tristate::Unknown, std::nullopt, nodes};
    }
}

// ---- size Ramsey search -----------------------------------------------------

namespace {

std::string canonical_string(const Graph& g) {
    int n = g.n();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    std::string cur(n * (n - 1) / 2, '0');
    do {
        int idx = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                cur[idx++] =
                    g.has_edge(perm[u], perm[v]) ? '1' : '0';
        if (best.empty() || cur < best) best = cur;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace

SizeRamseyResult size_ramsey_exact(const FamilyParams& h, int max_vertices,
                                   int max_edges, const OracleBudget& budget) {
    SizeRamseyResult out;
    if (h.edge_count() == 0) {
        out.status = Tristate::True;
        out.edges = 0;
        out.host = Graph(std::max(h.vertex_count(), 0));
        return out;
    }
    for (int q = 1; q <= max_edges; ++q) {
        if (q < h.edge_count()) {
            out.exhausted_through = q;  // hosts this small hold no copy at all
            continue;
        }
        bool incomplete = 2 * q > max_vertices;
        for (int nv = 2; nv <= std::min(2 * q, max_vertices); ++nv) {
            long long slots = (long long)nv * (nv - 1) / 2;
            if (slots < q) continue;
            std::vector<std::pair<int, int>> pairs;
            for (int u = 0; u < nv; ++u)
                for (int v = u + 1; v < nv; ++v) pairs.emplace_back(u, v);
            std::set<std::string> seen;
            std::vector<int> comb(q);
            std::iota(comb.begin(), comb.end(), 0);
            while (true) {
                if (++out.hosts_checked > budget.max_hosts) {
                    out.status = Tristate::Unknown;
                    return out;
                }
                Graph cand(nv);
                for (int slot : comb)
                    cand.add_edge(pairs[slot].first,
                                  pairs[slot].second);
                bool isolated = false;
                for (int v = 0; v < nv && !isolated; ++v)
                    if (cand.degree(v) == 0) isolated = true;
                if (!isolated) {
                    bool fresh = true;
                    if (nv <= 8) fresh = seen.insert(canonical_string(cand)).second;
                    if (fresh) {
                        ArrowResult ar = arrows(cand, h, h, budget);
                        if (ar.arrows == Tristate::True) {
                            out.status = Tristate::True;
                            out.edges = q;
                            out.host = std::move(cand);
                            return out;
                        }
                        if (ar.arrows == Tristate::Unknown) incomplete = true;
                    }
                }
                // next combination
                int i = q - 1;
                while (i >= 0 && comb[i] == int(slots) - q + i) --i;
                if (i < 0) break;
                ++comb[i];
                for (int j = i + 1; j < q; ++j)
                    comb[j] = comb[j - 1] + 1;
            }
        }
        if (incomplete) {
            out.status = Tristate::Unknown;
            return out;
        }
        out.exhausted_through = q;
    }
    out.status = Tristate::Unknown;
    return out;
}

// ---- analytic lemma checks ---------------------------------------------------

LemmaCheckReport check_lagrange_lemma(int m, int x) {
    if (m < 1) throw parameter_error("m must be >= 1");
    if (x < 2 * m) throw parameter_error("hypothesis needs x >= 2m");
    if (m + 5 >= 62 || x > 100'000)
        throw resource_error("lagrange check parameters too large");
    double compositions = 1;
    for (int i = 1; i < m; ++i) compositions *= double(x + m - i) / i;
    if (compositions > 5e7)
        throw resource_error("too many compositions to enumerate");

    const int scale_shift = m + 5;
    unsigned long long best = ~0ULL;
    std::vector<long long> parts(m, 0), best_parts;
    auto evaluate = [&]() {
        unsigned long long total = 0;
        for (int kk = 1; kk <= m; ++kk) {
            long long xk = parts[kk - 1];
            total += (unsigned long long)(xk * xk - xk) << (scale_shift - kk);
        }
        if (total < best) {
            best = total;
            best_parts = parts;
        }
    };
    auto rec = [&](auto&& self, int idx, long long remaining) -> void {
        if (idx == m - 1) {
            parts[idx] = remaining;
            evaluate();
            return;
        }
        for (long long v = 0; v <= remaining; ++v) {
            parts[idx] = v;
            self(self, idx + 1, remaining - v);
        }
    };
    rec(rec, 0, x);

    LemmaCheckReport rep;
    rep.lemma = "lagrange";
    rep.params = {{"m", double(m)}, {"x", double(x)}};
    double scale = std::pow(2.0, scale_shift);
    rep.computed = double(best) / scale;
    rep.bound = double((long long)x * x) / scale;
    rep.holds = best >= (unsigned long long)((long long)x * x);
    rep.argmin = best_parts;
    rep.note = "exact integer arithmetic scaled by 2^(m+5)";
    return rep;
}

LemmaCheckReport check_beta_integral(int k, double tol) {
    if (k < 1) throw parameter_error("k must be >= 1");
    if (tol <= 0) throw parameter_error("tolerance must be positive");
    auto original = [k](double y) {
        return std::log1p(-0.5 * std::pow(y, 1.0 / k));
    };
    auto substituted = [k](double u) {
        return k * std::pow(u, k - 1) * std::log1p(-0.5 * u);
    };
    QuadResult main = adaptive_gauss_kronrod(original, 0.0, 1.0, tol);
    if (!main.converged)
        throw numeric_error("quadrature failed to reach tolerance");
    QuadResult cross = adaptive_simpson(substituted, 0.0, 1.0, tol);
    if (!cross.converged)
        throw numeric_error("cross-check quadrature failed to reach tolerance");
    if (std::abs(main.value - cross.value) > std::max(1e-7, 50 * tol))
        throw numeric_error("independent integrators disagree");

    LemmaCheckReport rep;
    rep.lemma = "beta-integral";
    rep.params = {{"k", double(k)},
                  {"tol", tol},
                  {"cross", cross.value},
                  {"evals", double(main.evaluations)}};
    rep.computed = main.value;
    rep.bound = 1.0 / k - std::log(2.0);
    rep.holds = rep.computed <= rep.bound + tol;
    rep.note = "gauss-kronrod main, simpson cross-check on substituted form";
    return rep;
}

LemmaCheckReport check_kst_count_bound(const Graph& g, int s, int t,
                                       const DetectBudget& budget) {
    if (s < 1 || t < s + 2)
        throw parameter_error("count bound needs t >= s + 2");
    unsigned long long count = count_kst(g, s, t, budget);
    double q = double(g.m());
    const double e2 = std::exp(2.0);
    double bound = std::pow(8.0 * e2 * q / (double(s) * t), t);

    LemmaCheckReport rep;
    rep.lemma = "kst-count-bound";
    rep.params = {{"s", double(s)}, {"t", double(t)}, {"q", q}};
    rep.computed = double(count);
    rep.bound = bound;
    rep.holds = rep.computed <= bound;
    rep.note = "exact count vs (8 e^2 q / (s t))^t";
    return rep;
}

LemmaCheckReport check_chernoff_tail(int n, std::span<const double> probs,
                                     long long trials, std::uint64_t seed) {
    if (n < 1) throw parameter_error("n must be >= 1");
    if (trials < 1) throw parameter_error("trials must be >= 1");
    double mean = 0;
    for (double p : probs) {
        if (p < 0 || p > 1) throw parameter_error("probabilities must be in [0,1]");
        mean += p;
    }
    if (mean > n / 2.0 + 1e-12)
        throw parameter_error("hypothesis needs E[X] <= n/2");
    Rng rng(seed);
    long long tail = 0;
    for (long long t = 0; t < trials; ++t) {
        int x = 0;
        for (double p : probs)
            if (rng.bernoulli(p)) ++x;
        if (x >= n) ++tail;
    }
    double est = double(tail) / double(trials);
    // Wilson 95%
    double z = 1.959963984540054, z2 = z * z;
    double denom = 1.0 + z2 / double(trials);
    double center = (est + z2 / (2.0 * trials)) / denom;
    double half =
        z * std::sqrt(est * (1 - est) / trials + z2 / (4.0 * trials * trials)) /
        denom;

    LemmaCheckReport rep;
    rep.lemma = "chernoff-tail";
    rep.params = {{"n", double(n)},
                  {"indicators", double(probs.size())},
                  {"mean", mean},
                  {"trials", double(trials)},
                  {"wilson_lo", std::max(0.0, center - half)},
                  {"wilson_hi", std::min(1.0, center + half)}};
    rep.computed = est;
    rep.bound = std::exp(-double(n) / 6.0);
    rep.holds = est <= rep.bound;
    rep.note = "monte carlo tail estimate";
    return rep;
}

// ---- random graph properties ---------------------------------------------------

long long max_kfree_edges_exact(const Graph& g, int k, long long max_nodes) {
    if (k < 2) throw parameter_error("K_k-freeness needs k >= 2");
    if (k == 2) return 0;
    int n = g.n();
    auto edges = g.edges();
    int m = int(edges.size());
    std::vector<Bitset> kept(n, Bitset(n));
    long long best = 0, nodes = 0;

    auto has_clique_within = [&](auto&& self, const Bitset& cand,
                                 int size) -> bool {
        if (size == 0) return true;
        if (cand.count() < size) return false;
        for (int v = cand.find_first(); v >= 0; v = cand.find_next(v)) {
            Bitset next = cand;
            next &= kept[v];
            next.reset_prefix(v);
            if (self(self, next, size - 1)) return true;
        }
        return false;
    };
    auto rec = [&](auto&& self, int idx, long long cnt) -> void {
        if (++nodes > max_nodes)
            throw resource_error("branch-and-bound node budget exceeded");
        if (cnt + (m - idx) <= best) return;
        if (idx == m) {
            best = std::max(best, cnt);
            return;
        }
        auto [u, v] = edges[idx];
        Bitset common = kept[u];
        common &= kept[v];
        bool creates = has_clique_within(has_clique_within, common, k - 2);
        if (!creates) {
            kept[u].set(v);
            kept[v].set(u);
            self(self, idx + 1, cnt + 1);
            kept[u].reset(v);
            kept[v].reset(u);
        }
        self(self, idx + 1, cnt);
    };
    rec(rec, 0, 0);
    return best;
}

namespace {

// Greedy K_k-free subgraph in a random edge order; a lower bound on the
// exact maximum.
long long greedy_kfree(const Graph& g, const std::vector<int>& verts, int k,
                       Rng& rng, int starts) {
    std::vector<std::pair<int, int>> edges;
    Bitset in_set(g.n());
    for (int v : verts) in_set.set(v);
    for (int v : verts) {
        const Bitset& nb = g.adj(v);
        for (int u = nb.find_next(v); u >= 0; u = nb.find_next(u))
            if (in_set.test(u)) edges.emplace_back(v, u);
    }
    long long best = 0;
    std::vector<Bitset> kept(g.n(), Bitset(g.n()));
    auto has_clique_within = [&](auto&& self, const Bitset& cand,
                                 int size) -> bool {
        if (size == 0) return true;
        if (cand.count() < size) return false;
        for (int v = cand.find_first(); v >= 0; v = cand.find_next(v)) {
            Bitset next = cand;
            next &= kept[v];
            next.reset_prefix(v);
            if (self(self, next, size - 1)) return true;
        }
        return false;
    };
    for (int s = 0; s < starts; ++s) {
        rng.shuffle(edges);
        for (auto& row : kept) row.clear();
        long long cnt = 0;
        for (auto [u, v] : edges) {
            Bitset common = kept[u];
            common &= kept[v];
            if (k >= 3 && has_clique_within(has_clique_within, common, k - 2))
                continue;
            kept[u].set(v);
            kept[v].set(u);
            ++cnt;
        }
        best = std::max(best, cnt);
    }
    return best;
}

}  // namespace

GnpPropertyReport check_gnp_properties(const Graph& g, double p, double delta,
                                       int k, long long sample_budget,
                                       std::uint64_t seed) {
    if (p < 0 || p > 1 || delta < 0)
        throw parameter_error("need 0 <= p <= 1 and delta >= 0");
    if (k < 2) throw parameter_error("k must be >= 2");
    int N = g.n();
    GnpPropertyReport rep;
    rep.size_threshold = std::pow(p, 8.0 * k) * N;
    const double eps = 1e-9;

    // (a) degrees: |deg(v) - p(N-1)| <= delta N
    double mean_deg = p * (N - 1);
    for (int v = 0; v < N; ++v) {
        ++rep.degrees.checks;
        if (std::abs(g.degree(v) - mean_deg) > delta * N + eps)
            ++rep.degrees.violations;
    }
    rep.degrees.holds = rep.degrees.violations == 0;

    long long min_size =
        std::max<long long>(1, (long long)std::ceil(rep.size_threshold - eps));
    Rng rng(seed);
    bool exhaustive = N <= 10 && N >= 1;

    auto pair_edges = [&](const Bitset& X, const Bitset& Y) {
        long long e = 0;
        for (int v = X.find_first(); v >= 0; v = X.find_next(v))
            e += Bitset::and_count(g.adj(v), Y);
        return e;  // ordered pairs
    };
    auto random_set = [&](Rng& r) {
        Bitset s(N);
        do {
            s.clear();
            for (int v = 0; v < N; ++v)
                if (r.bernoulli(0.5)) s.set(v);
        } while (s.count() < min_size);
        return s;
    };

    // (b) pair densities
    if (exhaustive) {
        std::vector<Bitset> subsets;
        for (unsigned mask = 1; mask < (1u << N); ++mask) {
            Bitset s(N);
            for (int v = 0; v < N; ++v)
                if (mask & (1u << v)) s.set(v);
            if (s.count() >= min_size) subsets.push_back(std::move(s));
        }
        for (const auto& X : subsets)
            for (const auto& Y : subsets) {
                ++rep.pair_density.checks;
                double d = double(pair_edges(X, Y)) /
                           (double(X.count()) * double(Y.count()));
                if (std::abs(d - p) > delta + eps) ++rep.pair_density.violations;
            }
        rep.pair_density.note = "exhaustive";
    } else {
        for (long long i = 0; i < sample_budget; ++i) {
            Bitset X = random_set(rng), Y = random_set(rng);
            ++rep.pair_density.checks;
            double d = double(pair_edges(X, Y)) /
                       (double(X.count()) * double(Y.count()));
            if (std::abs(d - p) > delta + eps) ++rep.pair_density.violations;
        }
        rep.pair_density.note = "sampled";
    }
    rep.pair_density.holds = rep.pair_density.violations == 0;

    // (c) vertex-to-set degree exceptions
    auto check_set = [&](const Bitset& S) {
        long long low = 0, high = 0;
        double lo_thr = (p - delta) * S.count(), hi_thr = (p + delta) * S.count();
        for (int v = 0; v < N; ++v) {
            int into = Bitset::and_count(g.adj(v), S);
            if (double(into) < lo_thr - eps) ++low;
            if (double(into) > hi_thr + eps) ++high;
        }
        ++rep.vertex_to_set.checks;
        if (double(low) > rep.size_threshold + eps ||
            double(high) > rep.size_threshold + eps)
            ++rep.vertex_to_set.violations;
    };
    if (exhaustive) {
        for (unsigned mask = 1; mask < (1u << N); ++mask) {
            Bitset s(N);
            for (int v = 0; v < N; ++v)
                if (mask & (1u << v)) s.set(v);
            if (s.count() >= min_size) check_set(s);
        }
        rep.vertex_to_set.note = "exhaustive";
    } else {
        for (long long i = 0; i < sample_budget; ++i) check_set(random_set(rng));
        rep.vertex_to_set.note = "sampled";
    }
    rep.vertex_to_set.holds = rep.vertex_to_set.violations == 0;

    // (d) Turan-type probe on sets of at least N/3 vertices
    long long dsamples = std::min<long long>(sample_budget, 4);
    for (long long i = 0; i < dsamples && N >= 3; ++i) {
        Bitset S(N);
        do {
            S.clear();
            for (int v = 0; v < N; ++v)
                if (rng.bernoulli(0.5)) S.set(v);
        } while (S.count() < (N + 2) / 3);
        std::vector<int> verts = S.to_vector();
        long long sz = S.count();
        double bound = (1.0 - 1.0 / (2.0 * k)) * p * (double(sz) * (sz - 1) / 2.0);
        long long found;
        bool exact = false;
        // count induced edges to decide whether branch and bound is feasible
        long long sub_m = 0;
        for (int v : verts)
            sub_m += Bitset::and_count(g.adj(v), S);
        sub_m /= 2;
        if (N <= 16 && sub_m <= 24) {
            Graph sub(int(verts.size()));
            std::vector<int> idx(N, -1);
            for (int j = 0; j < int(verts.size()); ++j)
                idx[verts[j]] = j;
            for (int v : verts) {
                const Bitset& nb = g.adj(v);
                for (int u = nb.find_next(v); u >= 0; u = nb.find_next(u))
                    if (idx[u] >= 0)
                        sub.add_edge(idx[v], idx[u]);
            }
            found = max_kfree_edges_exact(sub, k);
            exact = true;
        } else {
            found = greedy_kfree(g, verts, k, rng, 4);
        }
        ++rep.turan_free.checks;
        if (double(found) > bound + eps) ++rep.turan_free.violations;
        if (rep.turan_free.note.empty())
            rep.turan_free.note = exact ? "exact" : "heuristic lower bound";
    }
    rep.turan_free.holds = rep.turan_free.violations == 0;
    return rep;
}

}  // namespace ramsey
