#pragma once

// Brute-force reference implementations used only by the test suites. They
// stay deliberately naive and independent of the library's counting and
// search paths.

#include <algorithm>
#include <optional>
#include <vector>

#include "ramsey/coloring.hpp"
#include "ramsey/detect.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/rng.hpp"

namespace ramsey::testing {

inline void subsets_of_size(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> pick;
    auto rec = [&](auto&& self, int start) -> void {
        if (int(pick.size()) == k) {
            fn(pick);
            return;
        }
        for (int v = start; v < n; ++v) {
            pick.push_back(v);
            self(self, v + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
}

// Unordered K_{s,t} copies by double subset enumeration.
inline unsigned long long naive_count_kst(const Graph& g, int s, int t) {
    if (s > t) std::swap(s, t);
    unsigned long long total = 0;
    subsets_of_size(g.n(), s, [&](const std::vector<int>& side_s) {
        subsets_of_size(g.n(), t, [&](const std::vector<int>& side_t) {
            for (int v : side_t)
                for (int u : side_s)
                    if (u == v) return;
            for (int u : side_s)
                for (int v : side_t)
                    if (!g.has_edge(u, v)) return;
            ++total;
        });
    });
    return s == t ? total / 2 : total;
}

// Monochromatic starburst existence by exhaustive clique + pendant
// backtracking over one color class.
inline bool naive_has_starburst(const Graph& g, const Coloring& c, int k, int n,
                                Color col) {
    bool found = false;
    subsets_of_size(g.n(), k, [&](const std::vector<int>& clique) {
        if (found) return;
        for (std::size_t i = 0; i < clique.size(); ++i)
            for (std::size_t j = i + 1; j < clique.size(); ++j) {
                if (!g.has_edge(clique[i], clique[j])) return;
                if (c.color(clique[i], clique[j]) != col) return;
            }
        std::vector<bool> used(g.n(), false);
        for (int v : clique) used[v] = true;
        auto assign = [&](auto&& self, std::size_t idx, int have) -> bool {
            if (idx == clique.size()) return true;
            if (have == n) return self(self, idx + 1, 0);
            const Bitset& nb = c.rows(col)[clique[idx]];
            for (int u = nb.find_first(); u >= 0; u = nb.find_next(u)) {
                if (used[u]) continue;
                used[u] = true;
                if (self(self, idx, have + 1)) return true;
                used[u] = false;
            }
            return false;
        };
        if (assign(assign, 0, 0)) found = true;
    });
    return found;
}

// Arrowing by full enumeration of the 2^m colorings, no pruning.
inline bool naive_arrows(const Graph& g, const FamilyParams& h1,
                         const FamilyParams& h2) {
    auto edges = g.edges();
    int m = int(edges.size());
    for (long long mask = 0; mask < (1LL << m); ++mask) {
        Coloring col(g);
        for (int i = 0; i < m; ++i)
            col.set(edges[i].first, edges[i].second,
                    (mask >> i) & 1 ? Color::Red : Color::Blue);
        if (!contains_family(col.red_rows(), h1) &&
            !contains_family(col.blue_rows(), h2))
            return false;  // counterexample coloring
    }
    return true;
}

// Deterministic mixed corpus of small graphs.
inline std::vector<Graph> small_graph_corpus(int count, std::uint64_t seed) {
    std::vector<Graph> out;
    out.push_back(Graph(0));
    out.push_back(Graph(3));
    out.push_back(make_clique(4));
    out.push_back(make_clique(5));
    out.push_back(make_path(6));
    out.push_back(make_cycle(5));
    out.push_back(make_cycle(4));
    out.push_back(make_complete_bipartite(2, 3).graph);
    out.push_back(make_complete_bipartite(3, 3).graph);
    out.push_back(make_book(3, 2));
    out.push_back(make_book(2, 4));
    out.push_back(make_starburst(3, 1));
    out.push_back(make_starburst(2, 2));
    Rng rng(seed);
    while (int(out.size()) < count) {
        int n = 4 + int(rng.below(7));  // 4..10 vertices
        double p = 0.15 + 0.7 * rng.next_double();
        out.push_back(sample_gnp(n, p, rng.next()));
    }
    return out;
}

}  // namespace ramsey::testing
