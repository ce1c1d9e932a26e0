#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ramsey/coloring.hpp"
#include "ramsey/family.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

struct DetectBudget {
    long long max_steps = 50'000'000;  // recursion nodes / subsets examined
};

// An explicit copy of a target family, re-validatable against the host and
// (optionally) a coloring.
//   CompleteBipartite: core = s-side, leaves = t-side
//   Book:              core = spine, leaves = pages
//   Starburst:         core = clique, pendants[i] attached to core[i]
//   Clique:            core
//   Path:              core in path order
struct WitnessEmbedding {
    FamilyParams family;
    std::optional<Color> color;  // empty = uncolored context
    std::vector<int> core;
    std::vector<int> leaves;
    std::vector<std::vector<int>> pendants;
    bool via_fallback = false;
    std::string method;
};

// Checks vertex ranges, distinctness/disjointness and the presence of every
// required edge (in the witness color when a coloring is given).
bool validate_witness(const Graph& g, const Coloring* coloring,
                      const WitnessEmbedding& w);

// ---- kernels over adjacency views --------------------------------------
// These operate on any symmetric bit-row adjacency (a Graph's rows or one
// color class of a Coloring).

// Unordered copies of K_{s,t}: pairs of disjoint sets (S, T), |S| = s,
// |T| = t, with every S x T edge present. For s == t each unordered pair
// {S, T} counts once (an (S, T)-ordered convention would give exactly twice
// this value). Exact; throws resource_error if the subset budget or 64-bit
// range is exceeded, never returns a truncated count.
unsigned long long count_kst(std::span<const Bitset> adj, int s, int t,
                             const DetectBudget& budget = {});
bool has_kst(std::span<const Bitset> adj, int s, int t,
             const DetectBudget& budget = {});

bool has_clique(std::span<const Bitset> adj, int k,
                const DetectBudget& budget = {});
bool has_path(std::span<const Bitset> adj, int nvertices,
              const DetectBudget& budget = {});
bool has_book(std::span<const Bitset> adj, int k, int n,
              const DetectBudget& budget = {});
bool has_starburst(std::span<const Bitset> adj, int k, int n,
                   const DetectBudget& budget = {});
bool contains_family(std::span<const Bitset> adj, const FamilyParams& f,
                     const DetectBudget& budget = {});

// Every k-clique exactly once, in lexicographic order of the sorted vertex
// tuple. Return false from the visitor to stop early.
void enumerate_cliques(std::span<const Bitset> adj, int k,
                       const std::function<bool(std::span<const int>)>& visit,
                       const DetectBudget& budget = {});

// ---- graph/coloring level ops -------------------------------------------

unsigned long long count_kst(const Graph& g, int s, int t,
                             const DetectBudget& budget = {});

struct MonoCounts {
    unsigned long long red = 0;
    unsigned long long blue = 0;
};
MonoCounts count_mono_kst(const Graph& g, const Coloring& c, int s, int t,
                          const DetectBudget& budget = {});

std::vector<std::vector<int>> list_cliques(const Graph& g, int k,
                                           const DetectBudget& budget = {});

// ext(Q): 0 if the clique Q is not monochromatic, otherwise the number of
// vertices adjacent to all of Q in the color of Q. For |Q| == 1 (no spine
// edges) returns the larger of the two color counts. Throws parameter_error
// if Q is not a clique of g.
int book_extensions(const Graph& g, const Coloring& c, std::span<const int> spine);

// First monochromatic book B_n^(k) (red cliques scanned before blue),
// or nullopt.
std::optional<WitnessEmbedding> find_mono_book(const Graph& g, const Coloring& c,
                                               int k, int n,
                                               const DetectBudget& budget = {});

// First monochromatic S_n^(k) in the given color: for each color clique,
// pendant availability is decided exactly by bipartite max flow (spine
// capacity n, candidate pendant capacity 1).
std::optional<WitnessEmbedding> find_starburst(const Graph& g, const Coloring& c,
                                               int k, int n, Color color,
                                               const DetectBudget& budget = {});

}  // namespace ramsey
