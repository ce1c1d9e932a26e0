// Command-line front end: graph generation, colorings, detectors, arrowing,
// exact size-Ramsey search, lemma checks, Monte Carlo estimates, experiment
// suites and record aggregation.
//
// Exit codes: 0 success/holds, 1 counterexample-found/violated,
//             2 resource-budget/numeric, 3 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "ramsey/experiments.hpp"
#include "ramsey/extract.hpp"
#include "ramsey/oracle.hpp"
#include "ramsey/rng.hpp"

using namespace ramsey;

namespace {

constexpr int kOk = 0;
constexpr int kViolated = 1;
constexpr int kResource = 2;
constexpr int kUsage = 3;

std::map<std::string, double> parse_params(const std::string& text) {
    std::map<std::string, double> out;
    if (text.empty()) return out;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t comma = text.find(',', start);
        std::string item = text.substr(
            start, comma == std::string::npos ? std::string::npos : comma - start);
        std::size_t eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw parameter_error("expected k=v in --params, got '" + item + "'");
        try {
            out[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
        } catch (const std::exception&) {
            throw parameter_error("bad numeric value in --params: '" + item + "'");
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

double need(const std::map<std::string, double>& m, const std::string& key) {
    auto it = m.find(key);
    if (it == m.end()) throw parameter_error("missing parameter '" + key + "'");
    return it->second;
}

Graph load_graph(const std::string& path) {
    if (path == "-") return read_graph(std::cin);
    return read_graph_file(path);
}

void emit_graph(const Graph& g, const std::string& path) {
    if (path.empty() || path == "-")
        write_graph(g, std::cout);
    else
        write_graph_file(g, path);
}

std::ostream& record_stream(const std::string& path, std::ofstream& file) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path);
    if (!file) throw error("cannot open " + path);
    return file;
}

int cmd_gen(const std::string& kind, const std::map<std::string, double>& pr,
            std::uint64_t seed, const std::string& out) {
    Graph g;
    if (kind == "kab") {
        g = make_complete_bipartite(int(need(pr, "a")), int(need(pr, "b"))).graph;
    } else if (kind == "book") {
        g = make_book(int(need(pr, "k")), int(need(pr, "n")));
    } else if (kind == "starburst") {
        g = make_starburst(int(need(pr, "k")), int(need(pr, "n")));
    } else if (kind == "bookshost") {
        BooksHostOptions opt;
        if (pr.count("K")) opt.spine = (long long)pr.at("K");
        if (pr.count("Npages")) opt.pages = (long long)pr.at("Npages");
        g = make_books_host(int(need(pr, "k")), int(need(pr, "n")), opt);
    } else if (kind == "clique") {
        g = make_clique(int(need(pr, "k")));
    } else if (kind == "path") {
        g = make_path(int(need(pr, "n")));
    } else if (kind == "cycle") {
        g = make_cycle(int(need(pr, "n")));
    } else if (kind == "gnp") {
        g = sample_gnp(int(need(pr, "N")), need(pr, "p"), seed);
    } else if (kind == "gnm") {
        g = sample_gnm(int(need(pr, "N")), (long long)need(pr, "m"), seed);
    } else {
        throw parameter_error("unknown generator kind '" + kind + "'");
    }
    emit_graph(g, out);
    return kOk;
}

int cmd_color(const std::string& graph_path, const std::string& scheme,
              const std::map<std::string, double>& pr, std::uint64_t seed,
              const std::string& out) {
    Graph g = load_graph(graph_path);
    Coloring c = make_coloring(g, ColorSchemeSpec{scheme, pr}, seed);
    if (out.empty() || out == "-")
        write_coloring(c, std::cout);
    else
        write_coloring_file(c, out);
    return kOk;
}

int cmd_detect(const std::string& graph_path, const std::string& coloring_path,
               const std::string& target_text, bool count,
               const std::string& color_text) {
    Graph g = load_graph(graph_path);
    FamilyParams target = FamilyParams::parse(target_text);
    if (coloring_path.empty()) {
        if (count && target.kind == FamilyKind::CompleteBipartite) {
            std::cout << "count " << count_kst(g, target.a, target.b) << '\n';
        } else {
            bool found = contains_family(g.rows(), target);
            std::cout << (found ? "found" : "none") << '\n';
        }
        return kOk;
    }
    Coloring c = read_coloring_file(coloring_path, g);
    if (count && target.kind == FamilyKind::CompleteBipartite) {
        auto mc = count_mono_kst(g, c, target.a, target.b);
        std::cout << "red " << mc.red << "\nblue " << mc.blue << '\n';
        return kOk;
    }
    if (target.kind == FamilyKind::Starburst) {
        std::optional<WitnessEmbedding> w;
        if (color_text == "R")
            w = find_starburst(g, c, target.a, target.b, Color::Red);
        else if (color_text == "B")
            w = find_starburst(g, c, target.a, target.b, Color::Blue);
        else {
            w = find_starburst(g, c, target.a, target.b, Color::Red);
            if (!w) w = find_starburst(g, c, target.a, target.b, Color::Blue);
        }
        std::cout << (w ? "found" : "none") << '\n';
        return kOk;
    }
    if (target.kind == FamilyKind::Book) {
        auto w = find_mono_book(g, c, target.a, target.b);
        std::cout << (w ? "found" : "none") << '\n';
        return kOk;
    }
    bool red = contains_family(c.red_rows(), target);
    bool blue = contains_family(c.blue_rows(), target);
    std::cout << "red " << (red ? "found" : "none") << "\nblue "
              << (blue ? "found" : "none") << '\n';
    return kOk;
}

int cmd_arrows(const std::string& graph_path, const std::string& h1_text,
               const std::string& h2_text, long long max_nodes,
               const std::string& witness_out) {
    Graph g = load_graph(graph_path);
    OracleBudget budget;
    if (max_nodes > 0) budget.max_nodes = max_nodes;
    ArrowResult r = arrows(g, FamilyParams::parse(h1_text),
                           FamilyParams::parse(h2_text), budget);
    std::cout << "arrows " << tristate_name(r.arrows) << " nodes "
              << r.nodes_explored << '\n';
    if (r.arrows == Tristate::False && !witness_out.empty())
        write_coloring_file(*r.witness, witness_out);
    if (r.arrows == Tristate::Unknown) return kResource;
    return r.arrows == Tristate::True ? kOk : kViolated;
}

int cmd_rhat(const std::string& target_text, int max_vertices, int max_edges,
             const std::string& host_out) {
    SizeRamseyResult r =
        size_ramsey_exact(FamilyParams::parse(target_text), max_vertices, max_edges);
    if (r.status != Tristate::True) {
        std::cout << "unknown (exhausted through " << r.exhausted_through
                  << " edges, " << r.hosts_checked << " hosts)\n";
        return kResource;
    }
    std::cout << "size_ramsey " << r.edges << " hosts_checked "
              << r.hosts_checked << '\n';
    if (!host_out.empty()) write_graph_file(*r.host, host_out);
    return kOk;
}

void print_lemma(const LemmaCheckReport& rep) {
    std::cout << rep.lemma << " computed " << rep.computed << " bound "
              << rep.bound << ' ' << (rep.holds ? "holds" : "VIOLATED") << '\n';
    if (!rep.argmin.empty()) {
        std::cout << "argmin";
        for (auto v : rep.argmin) std::cout << ' ' << v;
        std::cout << '\n';
    }
}

int cmd_lemma(const std::string& which, const std::map<std::string, double>& pr,
              long long trials, std::uint64_t seed,
              const std::string& graph_path) {
    if (which == "lagrange") {
        auto rep = check_lagrange_lemma(int(need(pr, "m")), int(need(pr, "x")));
        print_lemma(rep);
        return rep.holds ? kOk : kViolated;
    }
    if (which == "beta") {
        auto rep = check_beta_integral(int(need(pr, "k")),
                                       pr.count("tol") ? pr.at("tol") : 1e-9);
        print_lemma(rep);
        return rep.holds ? kOk : kViolated;
    }
    if (which == "chernoff") {
        int count = int(need(pr, "count"));
        std::vector<double> probs(count, need(pr, "p"));
        auto rep = check_chernoff_tail(int(need(pr, "n")), probs, trials, seed);
        print_lemma(rep);
        return rep.holds ? kOk : kViolated;
    }
    if (which == "gnp") {
        Graph g = graph_path.empty()
                      ? sample_gnp(int(need(pr, "N")), need(pr, "p"),
                                   Rng::mix(seed, 0x6e9))
                      : load_graph(graph_path);
        auto rep = check_gnp_properties(
            g, need(pr, "p"), need(pr, "delta"), int(need(pr, "k")),
            pr.count("budget") ? (long long)pr.at("budget") : 50, seed);
        auto show = [](const char* name, const GnpPropertyReport::Item& item) {
            std::cout << name << ' ' << (item.holds ? "holds" : "VIOLATED") << " ("
                      << item.violations << '/' << item.checks << " violations";
            if (!item.note.empty()) std::cout << ", " << item.note;
            std::cout << ")\n";
        };
        show("degrees", rep.degrees);
        show("pair_density", rep.pair_density);
        show("vertex_to_set", rep.vertex_to_set);
        show("turan_free", rep.turan_free);
        return rep.all_hold() ? kOk : kViolated;
    }
    throw parameter_error("lemma must be lagrange, beta, chernoff or gnp");
}

int cmd_mc(const std::string& graph_path, const std::string& scheme,
           const std::map<std::string, double>& pr,
           const std::string& target_text, long long trials,
           std::uint64_t seed, int jobs) {
    Graph g = load_graph(graph_path);
    auto res = mc_estimate_mono_probability(g, ColorSchemeSpec{scheme, pr},
                                            FamilyParams::parse(target_text),
                                            trials, seed, jobs);
    std::cout << "estimate " << res.estimate.point << " wilson95 ["
              << res.estimate.lo << ", " << res.estimate.hi << "] trials "
              << res.estimate.trials << " resource_failures "
              << res.resource_failures << '\n';
    return kOk;
}

int cmd_suite(const std::string& direction, const SuiteConfig& cfg,
              const std::string& out_path) {
    std::ofstream file;
    std::ostream& out = record_stream(out_path, file);
    SuiteSummary sum;
    if (direction == "lowerbound")
        sum = run_lowerbound_suite(cfg, out);
    else if (direction == "upperbound")
        sum = run_upperbound_suite(cfg, out);
    else
        throw parameter_error("suite direction must be lowerbound or upperbound");
    std::cerr << "trials " << sum.trials << " successes " << sum.successes
              << " resource_failures " << sum.resource_failures << '\n';
    if (sum.resource_failures > 0) return kResource;
    return sum.ok() ? kOk : kViolated;
}

int cmd_report(const std::string& in_path, bool csv) {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (!in_path.empty() && in_path != "-") {
        file.open(in_path);
        if (!file) throw error("cannot open " + in_path);
        in = &file;
    }
    print_report(aggregate_records(*in), std::cout, csv);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"size Ramsey number experiment toolkit"};
    app.require_subcommand(1);

    std::string kind, graph_path, coloring_path, out_path, scheme = "uniform";
    std::string target_text, h1_text, h2_text, params_text, override_text;
    std::string color_text, lemma_which, suite_direction, suite_family;
    std::uint64_t seed = 0;
    long long trials = 1, mc_trials = 1000, lemma_trials = 100000;
    long long max_nodes = 0;
    int jobs = 1, max_vertices = 8, max_edges = 8;
    bool count = false, csv = false, paper_constants = false;

    auto* gen = app.add_subcommand("gen", "generate a graph");
    gen->add_option("--kind", kind, "kab|book|starburst|bookshost|clique|path|cycle|gnp|gnm")
        ->required();
    gen->add_option("--params", params_text, "k=v,... generator parameters");
    gen->add_option("--seed", seed, "random seed");
    gen->add_option("--out", out_path, "output file (default stdout)");

    auto* color = app.add_subcommand("color", "apply a named coloring scheme");
    color->add_option("--graph", graph_path)->required();
    color->add_option("--scheme", scheme,
                      "uniform|all_red|all_blue|hypergeometric|book_lb|"
                      "starburst_lb|balanced_majority");
    color->add_option("--params", params_text);
    color->add_option("--seed", seed);
    color->add_option("--out", out_path);

    auto* detect = app.add_subcommand("detect", "count or find targets");
    detect->add_option("--graph", graph_path)->required();
    detect->add_option("--coloring", coloring_path);
    detect->add_option("--target", target_text, "e.g. kst:2,3")->required();
    detect->add_flag("--count", count, "count copies (bicliques)");
    detect->add_option("--color", color_text, "R or B (starburst search)");

    auto* arrows_cmd = app.add_subcommand("arrows", "exhaustive arrowing decision");
    arrows_cmd->add_option("--graph", graph_path)->required();
    arrows_cmd->add_option("--h1", h1_text, "red target")->required();
    arrows_cmd->add_option("--h2", h2_text, "blue target")->required();
    arrows_cmd->add_option("--max-nodes", max_nodes, "search node budget");
    arrows_cmd->add_option("--witness-out", out_path,
                           "write the counterexample coloring here");

    auto* rhat = app.add_subcommand("rhat", "exact size Ramsey number search");
    rhat->add_option("--target", target_text)->required();
    rhat->add_option("--max-vertices", max_vertices);
    rhat->add_option("--max-edges", max_edges);
    rhat->add_option("--host-out", out_path, "write the Ramsey host here");

    auto* lemma = app.add_subcommand("lemma", "analytic and random-graph checks");
    lemma->add_option("which", lemma_which, "lagrange|beta|chernoff|gnp")
        ->required();
    lemma->add_option("--params", params_text);
    lemma->add_option("--trials", lemma_trials, "Monte Carlo trials (chernoff)");
    lemma->add_option("--seed", seed);
    lemma->add_option("--graph", graph_path, "check an existing graph (gnp)");

    auto* mc = app.add_subcommand("mc", "Monte Carlo monochromatic probability");
    mc->add_option("--graph", graph_path)->required();
    mc->add_option("--scheme", scheme);
    mc->add_option("--params", params_text);
    mc->add_option("--target", target_text)->required();
    mc->add_option("--trials", mc_trials);
    mc->add_option("--seed", seed);
    mc->add_option("--jobs", jobs);

    auto* suite = app.add_subcommand("suite", "run an experiment suite");
    suite->add_option("direction", suite_direction, "lowerbound|upperbound")
        ->required();
    suite->add_option("--family", suite_family, "kst|book|starburst")->required();
    suite->add_option("--params", params_text);
    suite->add_option("--scheme", scheme, "coloring strategy (upper suites)");
    suite->add_option("--trials", trials);
    suite->add_option("--seed", seed);
    suite->add_option("--jobs", jobs);
    suite->add_option("--out", out_path, "record file (default stdout)");
    auto* paper_flag = suite->add_flag("--paper-constants", paper_constants,
                                       "label records as paper-constant runs");
    suite->add_option("--override", override_text,
                      "k=v,... overrides (labels records as overridden)")
        ->excludes(paper_flag);

    auto* report = app.add_subcommand("report", "aggregate a record file");
    report->add_option("--in", graph_path, "records file (default stdin)");
    report->add_flag("--csv", csv);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        auto params = parse_params(params_text);
        if (gen->parsed()) return cmd_gen(kind, params, seed, out_path);
        if (color->parsed())
            return cmd_color(graph_path, scheme, params, seed, out_path);
        if (detect->parsed())
            return cmd_detect(graph_path, coloring_path, target_text, count,
                              color_text);
        if (arrows_cmd->parsed())
            return cmd_arrows(graph_path, h1_text, h2_text, max_nodes, out_path);
        if (rhat->parsed())
            return cmd_rhat(target_text, max_vertices, max_edges, out_path);
        if (lemma->parsed())
            return cmd_lemma(lemma_which, params, lemma_trials, seed, graph_path);
        if (mc->parsed())
            return cmd_mc(graph_path, scheme, params, target_text, mc_trials,
                          seed, jobs);
        if (suite->parsed()) {
            SuiteConfig cfg;
            cfg.family = suite_family;
            cfg.params = params;
            cfg.scheme = scheme;
            cfg.trials = trials;
            cfg.seed = seed;
            cfg.jobs = jobs;
            cfg.paper_constants = override_text.empty();
            for (auto& [k, v] : parse_params(override_text)) cfg.params[k] = v;
            return cmd_suite(suite_direction, cfg, out_path);
        }
        if (report->parsed()) return cmd_report(graph_path, csv);
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const parameter_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const resource_error& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return kResource;
    } catch (const numeric_error& e) {
        std::cerr << "numeric failure: " << e.what() << '\n';
        return kResource;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
