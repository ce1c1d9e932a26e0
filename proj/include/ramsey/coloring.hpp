#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

enum class Color : std::uint8_t { Red, Blue };

inline Color other(Color c) { return c == Color::Red ? Color::Blue : Color::Red; }
inline char color_char(Color c) { return c == Color::Red ? 'R' : 'B'; }
inline const char* color_name(Color c) { return c == Color::Red ? "red" : "blue"; }

// Two-coloring of the edges of a base graph. Every edge carries exactly one
// color; both color classes are kept as per-vertex bit rows so detectors can
// intersect color-restricted neighborhoods directly. Immutable once a
// constructor function has returned it.
class Coloring {
public:
    // All edges blue.
    explicit Coloring(const Graph& g);

    const Graph& graph() const { return *g_; }

    bool is_red(int u, int v) const { return red_[u].test(v); }
    Color color(int u, int v) const;
    void set(int u, int v, Color c);

    const Bitset& red_adj(int v) const { return red_[v]; }
    const Bitset& blue_adj(int v) const { return blue_[v]; }
    std::span<const Bitset> red_rows() const { return red_; }
    std::span<const Bitset> blue_rows() const { return blue_; }
    std::span<const Bitset> rows(Color c) const {
        return c == Color::Red ? red_rows() : blue_rows();
    }

    int red_degree(int v) const { return red_[v].count(); }
    int blue_degree(int v) const { return blue_[v].count(); }
    long long red_count() const;
    long long blue_count() const;

    // Throws if {red, blue} is not an exact partition of E (symmetry,
    // disjointness, coverage). Constructors in this module always produce
    // partitions; this is the assertable invariant.
    void check_partition() const;

private:
    const Graph* g_;
    std::vector<Bitset> red_, blue_;
};

Coloring color_all(const Graph& g, Color c);

// Each edge independently red with probability 1/2, edges visited in
// lexicographic order.
Coloring color_uniform(const Graph& g, std::uint64_t seed);

// ---- hypergeometric dyadic coloring -----------------------------------

// Dyadic position intervals over a degree ordering: interval l (1-based,
// l = 1..levels) holds positions [2^l - 2, 2^{l+1} - 2) and has size 2^l.
// A = the union (positions 0..2^{levels+1}-3), B = all later positions.
struct DyadicPlan {
    int levels = 0;
    std::vector<std::pair<int, int>> intervals;  // [lo, hi) position ranges
    int a_size = 0;                              // positions in A
    VertexOrdering order;

    static int positions_needed(int levels) { return (1 << (levels + 1)) - 2; }
    // 1-based interval index for a position, or 0 if the position is in B.
    int level_of_position(int pos) const;
};

// floor(log2(s^2 t / (50 (t - s)))), clamped to at least 1. Requires t > s.
int dyadic_levels_for_kst(int s, int t);

// Requires ordering.size() >= positions_needed(levels); pad the graph with
// isolated vertices first when it is smaller (pad_isolated).
DyadicPlan build_dyadic_plan(const Graph& g, const VertexOrdering& ordering,
                             int levels);

// Edges with both endpoints in B are colored uniformly. Every other edge
// v_i v_j (positions i < j, i in interval l) is red iff i falls in R_{j,l},
// a uniformly random half-size subset of interval l drawn independently per
// (j, l). Red indicators within one (j, l) group are negatively correlated;
// the per-edge red marginal is exactly 1/2.
Coloring color_hypergeometric_dyadic(const Graph& g, const DyadicPlan& plan,
                                     std::uint64_t seed);

// ---- book lower-bound coloring ----------------------------------------

struct BookTierPlan {
    int tiers = 0;  // s; tier ranges cover positions 0..(s+1)*width-1
    int width = 0;  // ceil(n/10)
    std::vector<double> probs;        // p_0..p_s, p_i = (1/2)(i/s)^{1/k}
    std::vector<double> degree_caps;  // D_i = s 2^k n / (20 i), diagnostics
    VertexOrdering order;
    std::vector<int> tier_of;  // vertex -> 0..s, or -1 for U
};

struct BookColoring {
    Coloring coloring;
    BookTierPlan plan;
};

// Tiers V_0..V_s of width ceil(n/10) in degree order (s = max(1, k/3)).
// Edges inside a tier red; between tiers blue; inside U uniform; V_i-U red
// with probability p_i (so V_0-U is deterministically blue).
BookColoring color_book_lowerbound(const Graph& g, int k, int n,
                                   std::uint64_t seed);

// ---- Turan-style colorings --------------------------------------------

using Partition = std::vector<int>;  // vertex -> part id

// Locally optimal cut: starts from a seeded balanced assignment and applies
// strict-improvement single-vertex moves (first improvement, vertices
// scanned by index) until no move increases the cut. On return every vertex
// has at most as many neighbors in its own part as in any other part.
Partition max_k_cut_local_search(const Graph& g, int parts, std::uint64_t seed);

long long cut_size(const Graph& g, const Partition& part);

// Red iff both endpoints share a part. Partition must cover V(G).
Coloring turan_coloring(const Graph& g, const Partition& part);

struct StarburstPartition {
    int jstar = 0;  // number of peeled blocks
    int parts = 0;  // k; block part ids 0..jstar-1, cut part ids jstar..k-1
    Partition part_of;
    VertexOrdering peel;
};

struct StarburstColoring {
    Coloring coloring;
    StarburstPartition partition;
};

// Peel blocks of n vertices while the peel degree D(jn) stays at least
// (k-j)*max_degree; the remainder is split by a local max (k-j*)-cut; then
// Turan coloring. Throws parameter_error when no j <= k-1 fails the peel
// test, which can only happen when m >= C(k,2)*max_degree*n.
StarburstColoring color_starburst_lowerbound(const Graph& g, int k, int n,
                                             int max_degree,
                                             std::uint64_t seed);

// ---- text format -------------------------------------------------------
//
//   c <n> <m>
//   <u> <v> <R|B>     (every edge of the base graph exactly once)

void write_coloring(const Coloring& c, std::ostream& out);
void write_coloring_file(const Coloring& c, const std::string& path);
Coloring read_coloring(std::istream& in, const Graph& base);
Coloring read_coloring_file(const std::string& path, const Graph& base);

}  // namespace ramsey
