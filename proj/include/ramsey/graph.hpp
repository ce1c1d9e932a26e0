#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ramsey/bitset.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/family.hpp"

namespace ramsey {

// Undirected simple graph over vertices 0..n-1, adjacency as per-vertex
// bit rows. Immutable once a generator has returned it; generators and
// samplers are pure functions of their arguments (and seed).
class Graph {
public:
    static constexpr int kDefaultVertexCap = 1 << 20;

    Graph() = default;
    explicit Graph(int n, int vertex_cap = kDefaultVertexCap);

    int n() const { return int(adj_.size()); }
    long long m() const { return m_; }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return u != v && adj_[u].test(v);
    }

    // Returns false if the edge was already present.
    bool add_edge(int u, int v);

    const Bitset& adj(int v) const {
        check_vertex(v);
        return adj_[v];
    }
    std::span<const Bitset> rows() const { return adj_; }
    int degree(int v) const { return adj(v).count(); }

    // Edge list in lexicographic order, u < v.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n()) throw parameter_error("vertex index out of range");
    }

    std::vector<Bitset> adj_;
    long long m_ = 0;
};

// ---- generators ------------------------------------------------------

// Complete bipartite host with the part boundary kept alongside the graph:
// vertices [0, part_a) form side A, the rest side B.
struct BipartiteHost {
    Graph graph;
    int part_a = 0;
};

BipartiteHost make_complete_bipartite(int a, int b);

// Book: vertices [0, spine) form a clique, each of the `pages` remaining
// vertices is adjacent to every spine vertex and to no other page.
Graph make_book(int spine, int pages);

// Starburst: vertices [0, k) form a clique; vertex k + i*n + j is a pendant
// attached only to clique vertex i.
Graph make_starburst(int k, int pendants_per_vertex);

// Host book B_N^(K) with K = 2kn and N = 2^{k+1} n unless overridden.
// Sizes that would exceed vertex_cap are refused with a resource_error.
struct BooksHostOptions {
    std::optional<long long> spine;  // K
    std::optional<long long> pages;  // N
    int vertex_cap = Graph::kDefaultVertexCap;
};
Graph make_books_host(int k, int n, const BooksHostOptions& opt = {});

Graph make_clique(int k);
Graph make_path(int nvertices);
Graph make_cycle(int nvertices);

// Builds the family as a standalone graph (bicliques lose the recorded
// part boundary; use make_complete_bipartite when it matters).
Graph make_family(const FamilyParams& f);

// G(n, p): each pair independently with probability p, pairs visited in
// lexicographic order. Deterministic given seed.
Graph sample_gnp(int n, double p, std::uint64_t seed);

// G(n, m): uniformly random m-edge graph (partial shuffle of pair slots).
Graph sample_gnm(int n, long long m, std::uint64_t seed);

// Same graph plus isolated vertices up to n_total.
Graph pad_isolated(const Graph& g, int n_total);

// ---- vertex orderings ------------------------------------------------

struct VertexOrdering {
    enum class Kind { Static, Peel };
    Kind kind = Kind::Static;
    std::vector<int> order;    // position -> vertex
    std::vector<int> degrees;  // degree recorded per position
    std::vector<int> pos;      // vertex -> position

    int size() const { return int(order.size()); }
};

// Non-increasing static degrees, ties by ascending vertex index.
// Satisfies degrees[i] <= 2m/(i+1) for every position i.
VertexOrdering degree_order(const Graph& g);

// Iteratively remove a maximum-degree vertex (ties by lowest index) and
// record its degree in the remaining induced subgraph. Degrees are
// non-increasing and sum to m.
VertexOrdering peel_order(const Graph& g);

// ---- text format ------------------------------------------------------
//
//   # comment lines allowed
//   p <n> <m>
//   e <u> <v>        (0 <= u < v < n, each edge exactly once)
//
// Writing is canonical: header then edges in lexicographic order.

Graph read_graph(std::istream& in, int vertex_cap = Graph::kDefaultVertexCap);
Graph read_graph_file(const std::string& path,
                      int vertex_cap = Graph::kDefaultVertexCap);
void write_graph(const Graph& g, std::ostream& out);
void write_graph_file(const Graph& g, const std::string& path);

}  // namespace ramsey
