#pragma once

#include <cstdint>
#include <optional>

#include "ramsey/coloring.hpp"
#include "ramsey/detect.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

struct ExtractBudget {
    long long max_tuples = 1 << 22;     // pigeonhole bucket entries
    long long max_steps = 50'000'000;   // clique scans etc.
};

// Constructive monochromatic K_{s,t} from a colored complete bipartite
// host. Classifies each B-vertex by majority color, then tallies the
// s-subsets of same-colored A-neighborhoods of majority-class vertices
// (processed by ascending class size) until one subset collects t
// contributors. Succeeds on every coloring when |A| >= 2s^2 and
// |B| >= ceil(2e t 2^s); smaller hosts are legal inputs and yield nullopt
// when the pigeonhole fails.
std::optional<WitnessEmbedding> extract_kst(const BipartiteHost& host,
                                            const Coloring& c, int s, int t,
                                            const ExtractBudget& budget = {});

// ---- neighborhood chase --------------------------------------------------

struct ChaseParams {
    double p = 0;      // ambient edge density the degree conditions use
    double delta = 0;  // slack
    int k = 0;         // target clique size; the chase runs 2k steps
    int n = 0;         // reservoir sizing: ceil(3n/2) per color per step
};

struct ChaseStep {
    int vertex = -1;
    Color color = Color::Red;  // majority color toward the current set
    std::vector<int> reservoir_red, reservoir_blue;
};

struct ChaseResult {
    bool completed = false;
    int failed_step = 0;  // steps completed before failure
    std::vector<ChaseStep> steps;
    std::vector<int> clique;  // k vertices monochromatic in clique_color
    Color clique_color = Color::Red;
};

// 2k alternating-color steps inside v0: each step picks the lowest-index
// vertex of the current common neighborhood with at least (p - delta)|N|
// neighbors in N and at most (p + delta)|Z| neighbors in the union of
// reservoirs, takes its majority color toward N, shrinks N to that color
// class, and carves a fresh reservoir of ceil(3n/2) red and ceil(3n/2) blue
// neighbors disjoint from all earlier reservoirs. On completion at least k
// recorded colors agree and those vertices form a monochromatic clique.
ChaseResult chase_mono_clique(const Graph& g, const Coloring& c,
                              const Bitset& v0, const ChaseParams& params);

// ---- starburst extractor ---------------------------------------------------

struct StarburstExtractOptions {
    double p = 0;      // 0 -> 1/(10k)
    double delta = 0;  // 0 -> p^2
    bool allow_fallback = true;
};

// Splits V by the 3n color-degree thresholds into V_R (blue degree < 3n),
// V_B (red degree < 3n) and V_0 (both >= 3n), runs the branch for the
// largest part (clique-plus-greedy inside V_R / V_B, neighborhood chase for
// V_0), and falls back to the exhaustive clique-scan-plus-flow detector when
// the prescribed branch fails. The returned witness always re-validates;
// via_fallback records which path produced it.
std::optional<WitnessEmbedding> extract_starburst(
    const Graph& g, const Coloring& c, int k, int n,
    const StarburstExtractOptions& opt = {}, const ExtractBudget& budget = {});

}  // namespace ramsey
