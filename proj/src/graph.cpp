#include "ramsey/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "ramsey/rng.hpp"

namespace ramsey {

Graph::Graph(int n, int vertex_cap) {
    if (n < 0) throw parameter_error("vertex count must be non-negative");
    if (n > vertex_cap)
        throw resource_error("graph would need " + std::to_string(n) +
                             " vertices, cap is " + std::to_string(vertex_cap));
    adj_.assign(n, Bitset(n));
}

bool Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw parameter_error("self-loop rejected");
    if (adj_[u].test(v)) return false;
    adj_[u].set(v);
    adj_[v].set(u);
    ++m_;
    return true;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n(); ++u)
        for (int v = adj_[u].find_next(u); v >= 0; v = adj_[u].find_next(v))
            out.emplace_back(u, v);
    return out;
}

// ---- generators ------------------------------------------------------

BipartiteHost make_complete_bipartite(int a, int b) {
    if (a < 0 || b < 0) throw parameter_error("part sizes must be non-negative");
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) g.add_edge(u, v);
    return {std::move(g), a};
}

Graph make_book(int spine, int pages) {
    if (spine < 1) throw parameter_error("book spine must have at least 1 vertex");
    if (pages < 0) throw parameter_error("page count must be non-negative");
    Graph g(spine + pages);
    for (int u = 0; u < spine; ++u)
        for (int v = u + 1; v < spine; ++v) g.add_edge(u, v);
    for (int p = spine; p < spine + pages; ++p)
        for (int u = 0; u < spine; ++u) g.add_edge(u, p);
    return g;
}

Graph make_starburst(int k, int pendants_per_vertex) {
    if (k < 1) throw parameter_error("starburst clique must have at least 1 vertex");
    if (pendants_per_vertex < 0)
        throw parameter_error("pendant count must be non-negative");
    int n = pendants_per_vertex;
    Graph g(k + k * n);
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) g.add_edge(u, v);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < n; ++j) g.add_edge(i, k + i * n + j);
    return g;
}

Graph make_books_host(int k, int n, const BooksHostOptions& opt) {
    long long spine, pages;
    if (opt.spine || opt.pages) {
        spine = opt.spine.value_or(2LL * k * n);
        pages = opt.pages.value_or(-1);
        if (pages < 0) {
            if (k + 1 >= 62)
                throw resource_error("2^{k+1} n overflows the vertex budget");
            pages = (1LL << (k + 1)) * n;
        }
    } else {
        if (k < 2 || n < 1)
            throw parameter_error("books host needs k >= 2 and n >= 1");
        spine = 2LL * k * n;
        if (k + 1 >= 62)
            throw resource_error("2^{k+1} n overflows the vertex budget");
        pages = (1LL << (k + 1)) * n;
    }
    if (spine < 1 || pages < 0)
        throw parameter_error("books host sizes must be positive");
    long long total = spine + pages;
    if (total > opt.vertex_cap)
        throw resource_error("books host would need " + std::to_string(total) +
                             " vertices, cap is " + std::to_string(opt.vertex_cap));
    return make_book(int(spine), int(pages));
}

Graph make_clique(int k) {
    if (k < 0) throw parameter_error("clique size must be non-negative");
    Graph g(k);
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) g.add_edge(u, v);
    return g;
}

Graph make_path(int nvertices) {
    if (nvertices < 0) throw parameter_error("path size must be non-negative");
    Graph g(nvertices);
    for (int v = 0; v + 1 < nvertices; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph make_cycle(int nvertices) {
    if (nvertices < 3) throw parameter_error("cycle needs at least 3 vertices");
    Graph g = make_path(nvertices);
    g.add_edge(0, nvertices - 1);
    return g;
}

Graph make_family(const FamilyParams& f) {
    switch (f.kind) {
        case FamilyKind::CompleteBipartite:
            return make_complete_bipartite(f.a, f.b).graph;
        case FamilyKind::Book: return make_book(f.a, f.b);
        case FamilyKind::Starburst: return make_starburst(f.a, f.b);
        case FamilyKind::Clique: return make_clique(f.a);
        case FamilyKind::Path: return make_path(f.a);
    }
    throw parameter_error("unknown family");
}

Graph sample_gnp(int n, double p, std::uint64_t seed) {
    if (p < 0 || p > 1) throw parameter_error("edge probability must be in [0,1]");
    Graph g(n);
    Rng rng(seed);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.bernoulli(p)) g.add_edge(u, v);
    return g;
}

Graph sample_gnm(int n, long long m, std::uint64_t seed) {
    long long slots = (long long)n * (n - 1) / 2;
    if (m < 0 || m > slots)
        throw parameter_error("edge count out of range for " + std::to_string(n) +
                              " vertices");
    std::vector<long long> ids(slots);
    std::iota(ids.begin(), ids.end(), 0);
    Rng rng(seed);
    rng.partial_shuffle(ids, int(m));
    Graph g(n);
    for (long long i = 0; i < m; ++i) {
        // slot id -> pair (u, v), u < v, lexicographic
        long long id = ids[i];
        int u = 0;
        long long row = n - 1;
        while (id >= row) {
            id -= row;
            --row;
            ++u;
        }
        int v = u + 1 + int(id);
        g.add_edge(u, v);
    }
    return g;
}

Graph pad_isolated(const Graph& g, int n_total) {
    if (n_total < g.n()) throw parameter_error("padding cannot shrink a graph");
    Graph out(n_total);
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    return out;
}

// ---- orderings -------------------------------------------------------

VertexOrdering degree_order(const Graph& g) {
    VertexOrdering ord;
    ord.kind = VertexOrdering::Kind::Static;
    ord.order.resize(g.n());
    std::iota(ord.order.begin(), ord.order.end(), 0);
    std::vector<int> deg(g.n());
    for (int v = 0; v < g.n(); ++v) deg[v] = g.degree(v);
    std::sort(ord.order.begin(), ord.order.end(), [&](int a, int b) {
        if (deg[a] != deg[b])
            return deg[a] > deg[b];
        return a < b;
    });
    ord.degrees.reserve(ord.order.size());
    for (int v : ord.order) ord.degrees.push_back(deg[v]);
    ord.pos.resize(ord.order.size());
    for (int i = 0; i < int(ord.order.size()); ++i)
        ord.pos[ord.order[i]] = i;
    return ord;
}

VertexOrdering peel_order(const Graph& g) {
    VertexOrdering ord;
    ord.kind = VertexOrdering::Kind::Peel;
    int n = g.n();
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    Bitset alive(n);
    for (int v = 0; v < n; ++v) alive.set(v);
    ord.order.reserve(n);
    ord.degrees.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = alive.find_first(); v >= 0; v = alive.find_next(v))
            if (best < 0 || deg[v] > deg[best]) best = v;
        ord.order.push_back(best);
        ord.degrees.push_back(deg[best]);
        alive.reset(best);
        const Bitset& nb = g.adj(best);
        for (int u = nb.find_first(); u >= 0; u = nb.find_next(u))
            if (alive.test(u)) --deg[u];
    }
    ord.pos.resize(n);
    for (int i = 0; i < n; ++i) ord.pos[ord.order[i]] = i;
    return ord;
}

// ---- io ----------------------------------------------------------------

namespace {

bool data_line(const std::string& line) {
    for (char ch : line) {
        if (ch == '#') return false;
        if (!isspace(static_cast<unsigned char>(ch))) return true;
    }
    return false;
}

}  // namespace

Graph read_graph(std::istream& in, int vertex_cap) {
    std::string line;
    int line_no = 0;
    long long n = -1, m = -1;
    Graph g;
    long long seen = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!data_line(line)) continue;
        std::istringstream ss(line);
        std::string tag;
        ss >> tag;
        if (n < 0) {
            if (tag != "p") throw parse_error("expected header 'p <n> <m>'", line_no);
            if (!(ss >> n >> m) || n < 0 || m < 0)
                throw parse_error("malformed header 'p <n> <m>'", line_no);
            std::string extra;
            if (ss >> extra) throw parse_error("trailing tokens after header", line_no);
            if (n > vertex_cap)
                throw resource_error("graph declares " + std::to_string(n) +
                                     " vertices, cap is " + std::to_string(vertex_cap));
            g = Graph(int(n), vertex_cap);
            continue;
        }
        if (tag != "e") throw parse_error("expected edge line 'e <u> <v>'", line_no);
        long long u, v;
        if (!(ss >> u >> v)) throw parse_error("malformed edge line", line_no);
        std::string extra;
        if (ss >> extra) throw parse_error("trailing tokens after edge", line_no);
        if (u == v) throw parse_error("self-loop", line_no);
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw parse_error("vertex index out of range", line_no);
        if (u > v) throw parse_error("edges must satisfy u < v", line_no);
        if (seen >= m) throw parse_error("more edges than declared", line_no);
        if (!g.add_edge(int(u), int(v))) throw parse_error("duplicate edge", line_no);
        ++seen;
    }
    if (n < 0) throw parse_error("missing header 'p <n> <m>'", line_no + 1);
    if (seen != m)
        throw parse_error("declared " + std::to_string(m) + " edges, found " +
                              std::to_string(seen),
                          line_no + 1);
    return g;
}

Graph read_graph_file(const std::string& path, int vertex_cap) {
    std::ifstream in(path);
    if (!in) throw error("cannot open " + path);
    return read_graph(in, vertex_cap);
}

void write_graph(const Graph& g, std::ostream& out) {
    out << "p " << g.n() << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
}

void write_graph_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw error("cannot open " + path);
    write_graph(g, out);
}

}  // namespace ramsey
