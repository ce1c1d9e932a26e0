#include "ramsey/detect.hpp"

#include <algorithm>

#include "ramsey/flow.hpp"

namespace ramsey {

namespace {

struct StepCounter {
    long long left;
    void spend(long long amount = 1) {
        left -= amount;
        if (left < 0) throw resource_error("detection budget exceeded");
    }
};

unsigned long long checked_add(unsigned long long a, unsigned long long b) {
    unsigned long long r;
    if (__builtin_add_overflow(a, b, &r))
        throw resource_error("count exceeds 64-bit range");
    return r;
}

unsigned long long checked_mul(unsigned long long a, unsigned long long b) {
    unsigned long long r;
    if (__builtin_mul_overflow(a, b, &r))
        throw resource_error("count exceeds 64-bit range");
    return r;
}

// C(n, k) with overflow detection.
unsigned long long binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned long long r = 1;
    for (long long i = 1; i <= k; ++i) {
        // r * (n - k + i) / i is integral at every step
        unsigned long long num = checked_mul(r, (unsigned long long)(n - k + i));
        r = num / (unsigned long long)i;
    }
    return r;
}

bool all_distinct(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) == v.end();
}

// Sum over s-subsets S (built in increasing vertex order) of C(|common(S)|, t),
// pruning when the running neighborhood intersection drops below t.
class KstCounter {
public:
    KstCounter(std::span<const Bitset> adj, int s, int t, long long budget,
               bool exists_only)
        : adj_(adj), s_(s), t_(t), counter_{budget}, exists_only_(exists_only) {}

    unsigned long long run() {
        int n = int(adj_.size());
        if (n == 0 || s_ < 1 || t_ < 1) return 0;
        scratch_.assign(s_, Bitset(n));
        total_ = 0;
        for (int v = 0; v < n && !stop_; ++v) {
            counter_.spend();
            if (adj_[v].count() < t_) continue;
            scratch_[0] = adj_[v];
            extend(1, v);
        }
        return total_;
    }

    bool found() const { return stop_; }

private:
    void extend(int depth, int last) {
        const Bitset& common = scratch_[depth - 1];
        if (depth == s_) {
            unsigned long long ways = binomial(common.count(), t_);
            total_ = checked_add(total_, ways);
            if (exists_only_ && total_ > 0) stop_ = true;
            return;
        }
        for (int v = last + 1; v < int(adj_.size()) && !stop_; ++v) {
            counter_.spend();
            int cnt = Bitset::and_count(common, adj_[v]);
            if (cnt < t_) continue;
            scratch_[depth] = common;
            scratch_[depth] &= adj_[v];
            extend(depth + 1, v);
        }
    }

    std::span<const Bitset> adj_;
    int s_, t_;
    StepCounter counter_;
    bool exists_only_;
    bool stop_ = false;
    unsigned long long total_ = 0;
    std::vector<Bitset> scratch_;
};

}  // namespace

unsigned long long count_kst(std::span<const Bitset> adj, int s, int t,
                             const DetectBudget& budget) {
    if (s < 1 || t < 1) throw parameter_error("count_kst needs s, t >= 1");
    if (s > t) std::swap(s, t);
    KstCounter counter(adj, s, t, budget.max_steps, false);
    unsigned long long total = counter.run();
    if (s == t) {
        // each unordered {S, T} was seen from both sides
        return total / 2;
    }
    return total;
}

bool has_kst(std::span<const Bitset> adj, int s, int t,
             const DetectBudget& budget) {
    if (s < 1 || t < 1) throw parameter_error("has_kst needs s, t >= 1");
    if (s > t) std::swap(s, t);
    KstCounter counter(adj, s, t, budget.max_steps, true);
    counter.run();
    return counter.found();
}

void enumerate_cliques(std::span<const Bitset> adj, int k,
                       const std::function<bool(std::span<const int>)>& visit,
                       const DetectBudget& budget) {
    if (k < 1) throw parameter_error("clique size must be >= 1");
    int n = int(adj.size());
    if (k > n) return;
    StepCounter counter{budget.max_steps};
    std::vector<int> clique;
    clique.reserve(k);
    // cands[d]: vertices extending clique[0..d], all greater than clique[d]
    std::vector<Bitset> cands(k, Bitset(n));
    bool stop = false;

    auto step = [&](auto&& self, int depth, int v) -> void {
        counter.spend();
        clique.push_back(v);
        if (depth + 1 == k) {
            if (!visit(clique)) stop = true;
        } else {
            Bitset& next = cands[depth];
            if (depth == 0)
                next = adj[v];
            else {
                next = cands[depth - 1];
                next &= adj[v];
            }
            next.reset_prefix(v);
            if (next.count() >= k - depth - 1)
                for (int u = next.find_first(); u >= 0 && !stop;
                     u = cands[depth].find_next(u))
                    self(self, depth + 1, u);
        }
        clique.pop_back();
    };
    for (int v = 0; v < n && !stop; ++v) step(step, 0, v);
}

bool has_clique(std::span<const Bitset> adj, int k, const DetectBudget& budget) {
    if (k < 1) throw parameter_error("clique size must be >= 1");
    if (k > int(adj.size())) return false;
    bool found = false;
    enumerate_cliques(
        adj, k,
        [&](std::span<const int>) {
            found = true;
            return false;
        },
        budget);
    return found;
}

bool has_path(std::span<const Bitset> adj, int nvertices,
              const DetectBudget& budget) {
    if (nvertices < 1) throw parameter_error("path size must be >= 1");
    int n = int(adj.size());
    if (nvertices > n) return false;
    if (nvertices == 1) return n >= 1;
    StepCounter counter{budget.max_steps};
    Bitset used(n);
    auto rec = [&](auto&& self, int v, int len) -> bool {
        if (len == nvertices) return true;
        const Bitset& nb = adj[v];
        for (int u = nb.find_first(); u >= 0; u = nb.find_next(u)) {
            if (used.test(u)) continue;
            counter.spend();
            used.set(u);
            if (self(self, u, len + 1)) return true;
            used.reset(u);
        }
        return false;
    };
    for (int v = 0; v < n; ++v) {
        counter.spend();
        used.clear();
        used.set(v);
        if (rec(rec, v, 1)) return true;
    }
    return false;
}

bool has_book(std::span<const Bitset> adj, int k, int n,
              const DetectBudget& budget) {
    if (k < 1 || n < 0) throw parameter_error("book parameters out of range");
    bool found = false;
    Bitset common(int(adj.size()));
    enumerate_cliques(
        adj, k,
        [&](std::span<const int> q) {
            common = adj[q[0]];
            for (int i = 1; i < k; ++i) common &= adj[q[i]];
            if (common.count() >= n) {
                found = true;
                return false;
            }
            return true;
        },
        budget);
    return found;
}

namespace {

// Disjoint n-sets of private neighbors for each spine vertex, decided by max
// flow; fills `pendants` on success.
bool assign_pendants(std::span<const Bitset> adj, std::span<const int> spine,
                     int n, std::vector<std::vector<int>>* pendants) {
    int k = int(spine.size());
    if (n == 0) {
        if (pendants) pendants->assign(k, {});
        return true;
    }
    Bitset in_spine(int(adj.size()));
    for (int v : spine) in_spine.set(v);
    Bitset candidates(int(adj.size()));
    for (int v : spine) {
        Bitset c = adj[v];
        c.subtract(in_spine);
        candidates |= c;
    }
    std::vector<int> cand = candidates.to_vector();
    if ((long long)cand.size() < (long long)k * n) return false;
    // nodes: 0 = source, 1..k spine, then candidates, last = sink
    int base = 1 + k;
    int sink = base + int(cand.size());
    MaxFlow flow(sink + 1);
    for (int i = 0; i < k; ++i) flow.add_edge(0, 1 + i, n);
    std::vector<std::vector<int>> arc(k);
    for (int ci = 0; ci < int(cand.size()); ++ci) {
        flow.add_edge(base + ci, sink, 1);
        for (int i = 0; i < k; ++i)
            if (adj[spine[i]].test(cand[ci]))
                arc[i].push_back(flow.add_edge(1 + i, base + ci, 1));
    }
    if (flow.solve(0, sink) != (long long)k * n) return false;
    if (pendants) {
        pendants->assign(k, {});
        for (int i = 0; i < k; ++i) {
            int ci_index = 0;
            for (int ci = 0; ci < int(cand.size()); ++ci)
                if (adj[spine[i]].test(cand[ci])) {
                    if (flow.flow_on(arc[i][ci_index]) > 0)
                        (*pendants)[i].push_back(cand[ci]);
                    ++ci_index;
                }
        }
    }
    return true;
}

}  // namespace

bool has_starburst(std::span<const Bitset> adj, int k, int n,
                   const DetectBudget& budget) {
    if (k < 1 || n < 0) throw parameter_error("starburst parameters out of range");
    bool found = false;
    enumerate_cliques(
        adj, k,
        [&](std::span<const int> q) {
            if (assign_pendants(adj, q, n, nullptr)) {
                found = true;
                return false;
            }
            return true;
        },
        budget);
    return found;
}

bool contains_family(std::span<const Bitset> adj, const FamilyParams& f,
                     const DetectBudget& budget) {
    switch (f.kind) {
        case FamilyKind::CompleteBipartite: return has_kst(adj, f.a, f.b, budget);
        case FamilyKind::Book: return has_book(adj, f.a, f.b, budget);
        case FamilyKind::Starburst: return has_starburst(adj, f.a, f.b, budget);
        case FamilyKind::Clique: return has_clique(adj, f.a, budget);
        case FamilyKind::Path: return has_path(adj, f.a, budget);
    }
    throw parameter_error("unknown family");
}

// ---- graph/coloring level ----------------------------------------------

unsigned long long count_kst(const Graph& g, int s, int t,
                             const DetectBudget& budget) {
    return count_kst(g.rows(), s, t, budget);
}

MonoCounts count_mono_kst(const Graph& g, const Coloring& c, int s, int t,
                          const DetectBudget& budget) {
    if (&c.graph() != &g) throw parameter_error("coloring is not over the graph");
    return {count_kst(c.red_rows(), s, t, budget),
            count_kst(c.blue_rows(), s, t, budget)};
}

std::vector<std::vector<int>> list_cliques(const Graph& g, int k,
                                           const DetectBudget& budget) {
    std::vector<std::vector<int>> out;
    enumerate_cliques(
        g.rows(), k,
        [&](std::span<const int> q) {
            out.emplace_back(q.begin(), q.end());
            return true;
        },
        budget);
    return out;
}

int book_extensions(const Graph& g, const Coloring& c,
                    std::span<const int> spine) {
    if (spine.empty()) throw parameter_error("spine must be non-empty");
    for (std::size_t i = 0; i < spine.size(); ++i)
        for (std::size_t j = i + 1; j < spine.size(); ++j)
            if (!g.has_edge(spine[i], spine[j]))
                throw parameter_error("spine is not a clique");
    auto extensions = [&](Color col) {
        Bitset common = c.rows(col)[spine[0]];
        for (std::size_t i = 1; i < spine.size(); ++i)
            common &= c.rows(col)[spine[i]];
        return common.count();
    };
    if (spine.size() == 1)
        return std::max(extensions(Color::Red), extensions(Color::Blue));
    Color col = c.color(spine[0], spine[1]);
    for (std::size_t i = 0; i < spine.size(); ++i)
        for (std::size_t j = i + 1; j < spine.size(); ++j)
            if (c.color(spine[i], spine[j]) != col) return 0;
    return extensions(col);
}

std::optional<WitnessEmbedding> find_mono_book(const Graph& g, const Coloring& c,
                                               int k, int n,
                                               const DetectBudget& budget) {
    if (k < 1 || n < 0) throw parameter_error("book parameters out of range");
    for (Color col : {Color::Red, Color::Blue}) {
        std::optional<WitnessEmbedding> hit;
        Bitset common(g.n());
        enumerate_cliques(
            c.rows(col), k,
            [&](std::span<const int> q) {
                common = c.rows(col)[q[0]];
                for (int i = 1; i < k; ++i)
                    common &= c.rows(col)[q[i]];
                if (common.count() < n) return true;
                WitnessEmbedding w;
                w.family = FamilyParams::book(k, n);
                w.color = col;
                w.core.assign(q.begin(), q.end());
                for (int u = common.find_first();
                     u >= 0 && int(w.leaves.size()) < n; u = common.find_next(u))
                    w.leaves.push_back(u);
                w.method = "spine-scan";
                hit = std::move(w);
                return false;
            },
            budget);
        if (hit) return hit;
    }
    return std::nullopt;
}

std::optional<WitnessEmbedding> find_starburst(const Graph& g, const Coloring& c,
                                               int k, int n, Color color,
                                               const DetectBudget& budget) {
    if (&c.graph() != &g) throw parameter_error("coloring is not over the graph");
    if (k < 1 || n < 0) throw parameter_error("starburst parameters out of range");
    std::optional<WitnessEmbedding> hit;
    std::vector<std::vector<int>> pendants;
    enumerate_cliques(
        c.rows(color), k,
        [&](std::span<const int> q) {
            if (!assign_pendants(c.rows(color), q, n, &pendants)) return true;
            WitnessEmbedding w;
            w.family = FamilyParams::starburst(k, n);
            w.color = color;
            w.core.assign(q.begin(), q.end());
            w.pendants = pendants;
            for (auto& ps : w.pendants)
                if (int(ps.size()) > n) ps.resize(n);
            w.method = "clique-flow";
            hit = std::move(w);
            return false;
        },
        budget);
    return hit;
}

// ---- witness validation ---------------------------------------------------

bool validate_witness(const Graph& g, const Coloring* coloring,
                      const WitnessEmbedding& w) {
    auto edge_ok = [&](int u, int v) {
        if (u < 0 || v < 0 || u >= g.n() || v >= g.n() || u == v) return false;
        if (!g.has_edge(u, v)) return false;
        if (coloring && w.color && coloring->color(u, v) != *w.color) return false;
        return true;
    };
    std::vector<int> all = w.core;
    all.insert(all.end(), w.leaves.begin(), w.leaves.end());
    for (const auto& ps : w.pendants) all.insert(all.end(), ps.begin(), ps.end());
    if (!all_distinct(all)) return false;
    for (int v : all)
        if (v < 0 || v >= g.n()) return false;

    switch (w.family.kind) {
        case FamilyKind::CompleteBipartite: {
            int cs = int(w.core.size()), ls = int(w.leaves.size());
            bool sized = (cs == w.family.a && ls == w.family.b) ||
                         (cs == w.family.b && ls == w.family.a);
            if (!sized) return false;
            for (int u : w.core)
                for (int v : w.leaves)
                    if (!edge_ok(u, v)) return false;
            return true;
        }
        case FamilyKind::Book: {
            if (int(w.core.size()) != w.family.a ||
                int(w.leaves.size()) != w.family.b)
                return false;
            for (std::size_t i = 0; i < w.core.size(); ++i)
                for (std::size_t j = i + 1; j < w.core.size(); ++j)
                    if (!edge_ok(w.core[i], w.core[j])) return false;
            for (int page : w.leaves)
                for (int u : w.core)
                    if (!edge_ok(u, page)) return false;
            return true;
        }
        case FamilyKind::Starburst: {
            if (int(w.core.size()) != w.family.a ||
                int(w.pendants.size()) != w.family.a)
                return false;
            for (std::size_t i = 0; i < w.core.size(); ++i)
                for (std::size_t j = i + 1; j < w.core.size(); ++j)
                    if (!edge_ok(w.core[i], w.core[j])) return false;
            for (std::size_t i = 0; i < w.core.size(); ++i) {
                if (int(w.pendants[i].size()) != w.family.b) return false;
                for (int u : w.pendants[i])
                    if (!edge_ok(w.core[i], u)) return false;
            }
            return true;
        }
        case FamilyKind::Clique: {
            if (int(w.core.size()) != w.family.a) return false;
            for (std::size_t i = 0; i < w.core.size(); ++i)
                for (std::size_t j = i + 1; j < w.core.size(); ++j)
                    if (!edge_ok(w.core[i], w.core[j])) return false;
            return true;
        }
        case FamilyKind::Path: {
            if (int(w.core.size()) != w.family.a) return false;
            for (std::size_t i = 0; i + 1 < w.core.size(); ++i)
                if (!edge_ok(w.core[i], w.core[i + 1])) return false;
            return true;
        }
    }
    return false;
}

}  // namespace ramsey
