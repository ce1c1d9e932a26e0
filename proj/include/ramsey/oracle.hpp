#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ramsey/coloring.hpp"
#include "ramsey/detect.hpp"
#include "ramsey/family.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

struct OracleBudget {
    long long max_nodes = 20'000'000;  // arrowing search tree nodes
    long long max_hosts = 1'000'000;   // host candidates in rhat search
    int max_arrow_edges = 30;          // refuse larger exhaustive searches
};

enum class Tristate { True, False, Unknown };
const char* tristate_name(Tristate t);

struct ArrowResult {
    Tristate arrows = Tristate::Unknown;
    // Present iff arrows == False: a coloring with no red h1 and no blue h2.
    // References the graph passed to arrows(); keep that graph alive while
    // the witness is in use.
    std::optional<Coloring> witness;
    long long nodes_explored = 0;
};

// Exhaustive backtracking over edge colorings, pruning a branch as soon as
// the partial coloring closes a red h1 or blue h2; first-edge color fixed
// when h1 == h2. Exact within budget; budget exhaustion yields Unknown,
// never a guess.
ArrowResult arrows(const Graph& g, const FamilyParams& h1,
                   const FamilyParams& h2, const OracleBudget& budget = {});

struct SizeRamseyResult {
    Tristate status = Tristate::Unknown;  // True = exact value found
    int edges = -1;
    std::optional<Graph> host;  // a Ramsey host with `edges` edges
    long long hosts_checked = 0;
    int exhausted_through = 0;  // all graphs with <= this many edges excluded
};

// Minimum q such that some graph with q edges (at most max_vertices
// vertices) arrows (h, h). Candidates are enumerated by edge count with
// isolated vertices forbidden; isomorphism rejection by brute-force
// canonical adjacency string for hosts on <= 8 vertices (beyond that,
// candidates are tested without deduplication). Unknown when the caps stop
// the sweep before a host is found and smaller counts remain unexcluded.
SizeRamseyResult size_ramsey_exact(const FamilyParams& h, int max_vertices = 8,
                                   int max_edges = 8,
                                   const OracleBudget& budget = {});

// ---- analytic lemma checks -------------------------------------------------

struct LemmaCheckReport {
    std::string lemma;
    std::map<std::string, double> params;
    double computed = 0;
    double bound = 0;
    bool holds = false;
    std::vector<long long> argmin;  // minimizing assignment where applicable
    std::string note;
};

// Exhaustively minimizes sum_k 2^{-k} (x_k^2 - x_k) over compositions of x
// into m non-negative parts and compares with x^2 / 2^{m+5}. The comparison
// is done in exact integer arithmetic scaled by 2^{m+5}. Requires x >= 2m.
LemmaCheckReport check_lagrange_lemma(int m, int x);

// I(k) = integral_0^1 ln(1 - y^{1/k}/2) dy by adaptive quadrature, compared
// against 1/k - ln 2. Two independent integrators (Gauss-Kronrod on the
// original variable, Simpson on the substituted form k u^{k-1} ln(1 - u/2))
// must agree; disagreement or non-convergence raises numeric_error.
LemmaCheckReport check_beta_integral(int k, double tol = 1e-9);

// Exact count_kst(g, s, t) versus (8 e^2 q / (s t))^t with q = m(g).
// Requires t >= s + 2.
LemmaCheckReport check_kst_count_bound(const Graph& g, int s, int t,
                                       const DetectBudget& budget = {});

// Monte Carlo tail of X = sum Bernoulli(p_i) against e^{-n/6}. Requires
// sum p_i <= n/2. Wilson bounds go in params["wilson_lo"/"wilson_hi"].
LemmaCheckReport check_chernoff_tail(int n, std::span<const double> probs,
                                     long long trials, std::uint64_t seed);

// ---- random graph property checks ------------------------------------------

struct GnpPropertyReport {
    struct Item {
        bool holds = true;
        long long violations = 0;
        long long checks = 0;
        std::string note;
    };
    Item degrees;        // (a) |deg(v) - p(N-1)| <= delta N, all vertices
    Item pair_density;   // (b) |d(X,Y) - p| <= delta, sampled/exhaustive
    Item vertex_to_set;  // (c) degree-into-S exceptions <= p^{8k} N
    Item turan_free;     // (d) K_k-free subgraph edges <= (1 - 1/2k) p C(|S|,2)
    double size_threshold = 0;  // p^{8k} N
    bool all_hold() const {
        return degrees.holds && pair_density.holds && vertex_to_set.holds &&
               turan_free.holds;
    }
};

// Tests the four properties on a concrete graph and reports violations;
// nothing is asserted. Sets X, Y, S are exhaustive for N <= 12, otherwise
// uniformly random subsets (resampled until they meet the size threshold).
// Item (d) uses a greedy multi-start probe and is labeled heuristic except
// for tiny instances where branch and bound is exact.
GnpPropertyReport check_gnp_properties(const Graph& g, double p, double delta,
                                       int k, long long sample_budget,
                                       std::uint64_t seed);

// Exact maximum edge count of a K_k-free subgraph by branch and bound.
// Feasible only for small m; the node budget guards it.
long long max_kfree_edges_exact(const Graph& g, int k,
                                long long max_nodes = 50'000'000);

}  // namespace ramsey
