#include "ramsey/experiments.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <istream>
#include <iomanip>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "ramsey/extract.hpp"
#include "ramsey/rng.hpp"

namespace ramsey {

using nlohmann::json;

EstimateWithCI wilson_interval(long long successes, long long trials) {
    if (trials < 1) throw parameter_error("interval needs at least one trial");
    if (successes < 0 || successes > trials)
        throw parameter_error("successes out of range");
    const double z = 1.959963984540054;  // 97.5 percentile of the normal
    double ph = double(successes) / double(trials);
    double z2 = z * z;
    double denom = 1.0 + z2 / double(trials);
    double center = (ph + z2 / (2.0 * trials)) / denom;
    double half =
        z * std::sqrt(ph * (1.0 - ph) / trials + z2 / (4.0 * double(trials) * trials)) /
        denom;
    // clamp away rounding noise so lo <= point <= hi holds exactly
    double lo = std::min(ph, std::max(0.0, center - half));
    double hi = std::max(ph, std::min(1.0, center + half));
    return {ph, lo, hi, trials};
}

// ---- records ---------------------------------------------------------------

json ExperimentRecord::to_json() const {
    json j;
    j["experiment"] = experiment;
    j["params"] = params;
    j["seed"] = seed;
    j["outcome"] = outcome;
    j["constants"] = constants_mode;
    j["wall_ms"] = wall_ms;
    j["version"] = tool_version;
    return j;
}

std::string ExperimentRecord::to_line() const { return to_json().dump(); }

ExperimentRecord ExperimentRecord::from_json(const json& j, int line_no) {
    ExperimentRecord rec;
    try {
        rec.experiment = j.at("experiment").get<std::string>();
        rec.params = j.at("params").get<std::map<std::string, double>>();
        rec.seed = j.at("seed").get<std::uint64_t>();
        rec.outcome = j.at("outcome");
        rec.constants_mode = j.at("constants").get<std::string>();
        rec.wall_ms = j.at("wall_ms").get<double>();
        rec.tool_version = j.at("version").get<std::string>();
    } catch (const json::exception& e) {
        throw parse_error(std::string("bad record: ") + e.what(), line_no);
    }
    return rec;
}

ExperimentRecord ExperimentRecord::from_line(const std::string& line,
                                             int line_no) {
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded()) throw parse_error("record is not valid JSON", line_no);
    return from_json(j, line_no);
}

// ---- coloring factory --------------------------------------------------------

namespace {

double param_or(const std::map<std::string, double>& m, const std::string& key,
                double fallback) {
    auto it = m.find(key);
    return it == m.end() ? fallback : it->second;
}

double need_param(const std::map<std::string, double>& m, const std::string& key,
                  const std::string& who) {
    auto it = m.find(key);
    if (it == m.end())
        throw parameter_error(who + " needs parameter '" + key + "'");
    return it->second;
}

}  // namespace

Coloring make_coloring(const Graph& g, const ColorSchemeSpec& scheme,
                       std::uint64_t seed) {
    const auto& pr = scheme.params;
    if (scheme.name == "uniform") return color_uniform(g, seed);
    if (scheme.name == "all_red") return color_all(g, Color::Red);
    if (scheme.name == "all_blue") return color_all(g, Color::Blue);
    if (scheme.name == "hypergeometric") {
        int levels = int(param_or(pr, "levels", 0));
        if (levels < 1) {
            int s = int(need_param(pr, "s", "hypergeometric scheme"));
            int t = int(need_param(pr, "t", "hypergeometric scheme"));
            levels = dyadic_levels_for_kst(s, t);
        }
        int needed = DyadicPlan::positions_needed(levels);
        if (g.n() >= needed) {
            DyadicPlan plan = build_dyadic_plan(g, degree_order(g), levels);
            return color_hypergeometric_dyadic(g, plan, seed);
        }
        // pad with isolated vertices for the plan; they are appended, so
        // vertex ids and edge colors transfer back unchanged
        Graph padded = pad_isolated(g, needed);
        DyadicPlan plan = build_dyadic_plan(padded, degree_order(padded), levels);
        Coloring wide = color_hypergeometric_dyadic(padded, plan, seed);
        Coloring out(g);
        for (auto [u, v] : g.edges()) out.set(u, v, wide.color(u, v));
        return out;
    }
    if (scheme.name == "book_lb") {
        int k = int(need_param(pr, "k", "book_lb scheme"));
        int n = int(need_param(pr, "n", "book_lb scheme"));
        return color_book_lowerbound(g, k, n, seed).coloring;
    }
    if (scheme.name == "starburst_lb") {
        int k = int(need_param(pr, "k", "starburst_lb scheme"));
        int n = int(need_param(pr, "n", "starburst_lb scheme"));
        int delta = int(param_or(pr, "delta", n + k - 1.0));
        return color_starburst_lowerbound(g, k, n, delta, seed).coloring;
    }
    if (scheme.name == "balanced_majority") {
        // every B-vertex gets an exactly-half red edge set: the adversarial
        // input for majority classification
        int part_a = int(need_param(pr, "part_a", "balanced_majority scheme"));
        Coloring col(g);
        Rng rng(seed);
        std::vector<int> nbrs;
        for (int v = part_a; v < g.n(); ++v) {
            nbrs.clear();
            const Bitset& row = g.adj(v);
            for (int u = row.find_first(); u >= 0 && u < part_a;
                 u = row.find_next(u))
                nbrs.push_back(u);
            rng.partial_shuffle(nbrs, int(nbrs.size()) / 2);
            for (std::size_t i = 0; i < nbrs.size() / 2; ++i)
                col.set(nbrs[i], v, Color::Red);
        }
        return col;
    }
    throw parameter_error("unknown coloring scheme '" + scheme.name + "'");
}

// ---- parallel driver -----------------------------------------------------------

namespace {

void parallel_for(long long count, int jobs,
                  const std::function<void(long long)>& body) {
    jobs = std::max(1, jobs);
    if (jobs == 1 || count <= 1) {
        for (long long i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<long long> next{0};
    std::vector<std::thread> pool;
    auto worker = [&] {
        while (true) {
            long long i = next.fetch_add(1);
            if (i >= count) break;
            body(i);
        }
    };
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start)
        .count();
}

}  // namespace

McResult mc_estimate_mono_probability(const Graph& g,
                                      const ColorSchemeSpec& scheme,
                                      const FamilyParams& target,
                                      long long trials, std::uint64_t seed,
                                      int jobs) {
    if (trials < 1) throw parameter_error("trials must be >= 1");
    std::atomic<long long> hits{0}, resource_fails{0};
    parallel_for(trials, jobs, [&](long long i) {
        std::uint64_t trial_seed = Rng::mix(seed, std::uint64_t(i));
        try {
            Coloring col = make_coloring(g, scheme, trial_seed);
            bool mono = contains_family(col.red_rows(), target) ||
                        contains_family(col.blue_rows(), target);
            if (mono) hits.fetch_add(1);
        } catch (const resource_error&) {
            resource_fails.fetch_add(1);
        }
    });
    long long valid = trials - resource_fails.load();
    McResult res;
    res.resource_failures = resource_fails.load();
    if (valid > 0) res.estimate = wilson_interval(hits.load(), valid);
    return res;
}

// ---- suites ------------------------------------------------------------------

namespace {

struct TrialOutput {
    ExperimentRecord record;
    bool success = false;
    bool resource_failed = false;
};

SuiteSummary emit_records(std::vector<TrialOutput>& outs, std::ostream& records) {
    SuiteSummary sum;
    for (auto& t : outs) {
        ++sum.trials;
        if (t.resource_failed)
            ++sum.resource_failures;
        else if (t.success)
            ++sum.successes;
        records << t.record.to_line() << '\n';
    }
    records.flush();
    return sum;
}

json witness_json(const WitnessEmbedding& w) {
    json j;
    j["family"] = w.family.str();
    j["color"] = w.color ? std::string(1, color_char(*w.color)) : "?";
    j["core"] = w.core;
    if (!w.leaves.empty()) j["leaves"] = w.leaves;
    if (!w.pendants.empty()) j["pendants"] = w.pendants;
    j["method"] = w.method;
    j["fallback"] = w.via_fallback;
    return j;
}

WitnessEmbedding witness_from_json(const json& j, const FamilyParams& fam) {
    WitnessEmbedding w;
    w.family = fam;
    std::string c = j.at("color").get<std::string>();
    if (c == "R") w.color = Color::Red;
    if (c == "B") w.color = Color::Blue;
    w.core = j.at("core").get<std::vector<int>>();
    if (j.contains("leaves")) w.leaves = j.at("leaves").get<std::vector<int>>();
    if (j.contains("pendants"))
        w.pendants = j.at("pendants").get<std::vector<std::vector<int>>>();
    w.method = j.value("method", "");
    w.via_fallback = j.value("fallback", false);
    return w;
}

// Structural audit of the starburst lower-bound coloring: no blue edge
// inside a part; every cut-part vertex has internal degree < max_degree.
bool audit_starburst_coloring(const Graph& g, const StarburstColoring& sc,
                              int max_degree) {
    const auto& part = sc.partition.part_of;
    for (auto [u, v] : g.edges()) {
        bool same = part[u] == part[v];
        if (same && sc.coloring.color(u, v) != Color::Red) return false;
        if (!same && sc.coloring.color(u, v) != Color::Blue) return false;
    }
    for (int v = 0; v < g.n(); ++v) {
        if (part[v] < sc.partition.jstar) continue;  // peel block
        int internal = 0;
        const Bitset& nb = g.adj(v);
        for (int u = nb.find_first(); u >= 0; u = nb.find_next(u))
            if (part[u] == part[v]) ++internal;
        if (internal >= max_degree) return false;
    }
    return true;
}

// Deterministic constraints of the book lower-bound coloring.
bool audit_book_coloring(const Graph& g, const BookColoring& bc) {
    const auto& tier = bc.plan.tier_of;
    for (auto [u, v] : g.edges()) {
        int tu = tier[u], tv = tier[v];
        Color c = bc.coloring.color(u, v);
        if (tu >= 0 && tv >= 0) {
            if (tu == tv && c != Color::Red) return false;
            if (tu != tv && c != Color::Blue) return false;
        } else if (tu >= 0 || tv >= 0) {
            int t = std::max(tu, tv);
            if (t == 0 && c != Color::Blue) return false;  // p_0 = 0
        }
    }
    return true;
}

SuiteSummary run_starburst_lower(const SuiteConfig& cfg, std::ostream& records) {
    int k = int(param_or(cfg.params, "k", 3));
    int n = int(param_or(cfg.params, "n", 3));
    int delta = int(param_or(cfg.params, "delta", n + k - 1.0));
    int host_n = int(param_or(cfg.params, "N", 36));
    long long cap = (long long)k * (k - 1) / 2 * delta * n;  // m must stay below
    long long m_lo = (long long)param_or(cfg.params, "m_lo", 5);
    long long m_hi = (long long)param_or(cfg.params, "m_hi", double(cap - 1));
    if (m_hi >= cap) m_hi = cap - 1;
    if (m_lo > m_hi) m_lo = m_hi;

    std::vector<TrialOutput> outs(cfg.trials);
    parallel_for(cfg.trials, cfg.jobs, [&](long long i) {
        auto start = std::chrono::steady_clock::now();
        std::uint64_t trial_seed = Rng::mix(cfg.seed, std::uint64_t(i));
        TrialOutput& t = outs[i];
        t.record.experiment = "lower_starburst";
        t.record.params = cfg.params;
        t.record.params["k"] = k;
        t.record.params["n"] = n;
        t.record.params["delta"] = delta;
        t.record.params["N"] = host_n;
        t.record.seed = trial_seed;
        t.record.constants_mode = cfg.paper_constants ? "paper" : "override";
        try {
            Rng pick(Rng::mix(trial_seed, 0));
            long long m = m_lo + (long long)pick.below(std::uint64_t(m_hi - m_lo + 1));
            Graph host = sample_gnm(host_n, m, Rng::mix(trial_seed, 1));
            StarburstColoring sc = color_starburst_lowerbound(
                host, k, n, delta, Rng::mix(trial_seed, 2));
            bool audit = audit_starburst_coloring(host, sc, delta);
            auto red = find_starburst(host, sc.coloring, k, n, Color::Red);
            auto blue = find_starburst(host, sc.coloring, k, n, Color::Blue);
            t.success = audit && !red && !blue;
            t.record.outcome = {{"success", t.success},
                                {"audit", audit},
                                {"mono_red", bool(red)},
                                {"mono_blue", bool(blue)},
                                {"m", m},
                                {"jstar", sc.partition.jstar}};
        } catch (const resource_error& e) {
            t.resource_failed = true;
            t.record.outcome = {{"success", false}, {"resource_error", e.what()}};
        }
        t.record.wall_ms = elapsed_ms(start);
    });
    return emit_records(outs, records);
}

SuiteSummary run_book_lower(const SuiteConfig& cfg, std::ostream& records) {
    int k = int(param_or(cfg.params, "k", 4));
    int n = int(param_or(cfg.params, "n", 40));
    BooksHostOptions opt;
    if (cfg.params.count("K")) opt.spine = (long long)cfg.params.at("K");
    if (cfg.params.count("Npages")) opt.pages = (long long)cfg.params.at("Npages");
    Graph host = make_books_host(k, n, opt);
    bool detect = param_or(cfg.params, "detect", 0) > 0;

    std::vector<TrialOutput> outs(cfg.trials);
    parallel_for(cfg.trials, cfg.jobs, [&](long long i) {
        auto start = std::chrono::steady_clock::now();
        std::uint64_t trial_seed = Rng::mix(cfg.seed, std::uint64_t(i));
        TrialOutput& t = outs[i];
        t.record.experiment = "lower_book";
        t.record.params = cfg.params;
        t.record.params["k"] = k;
        t.record.params["n"] = n;
        t.record.params["host_vertices"] = host.n();
        t.record.seed = trial_seed;
        t.record.constants_mode = cfg.paper_constants ? "paper" : "override";
        try {
            BookColoring bc = color_book_lowerbound(host, k, n, trial_seed);
            bool audit = audit_book_coloring(host, bc);
            // per-tier red tallies on tier-U edges, for marginal checks
            std::vector<long long> red_cnt(bc.plan.probs.size(), 0),
                tot_cnt(bc.plan.probs.size(), 0);
            for (auto [u, v] : host.edges()) {
                int tu = bc.plan.tier_of[u];
                int tv = bc.plan.tier_of[v];
                if ((tu >= 0) == (tv >= 0)) continue;
                int tier = std::max(tu, tv);
                ++tot_cnt[tier];
                if (bc.coloring.color(u, v) == Color::Red)
                    ++red_cnt[tier];
            }
            bool mono = false;
            if (detect)
                mono = bool(find_mono_book(host, bc.coloring, k, n));
            t.success = audit && !mono;
            t.record.outcome = {{"success", t.success},
                                {"audit", audit},
                                {"tier_red", red_cnt},
                                {"tier_total", tot_cnt},
                                {"tiers", bc.plan.tiers}};
            if (detect) t.record.outcome["mono_book"] = mono;
        } catch (const resource_error& e) {
            t.resource_failed = true;
            t.record.outcome = {{"success", false}, {"resource_error", e.what()}};
        }
        t.record.wall_ms = elapsed_ms(start);
    });
    return emit_records(outs, records);
}

SuiteSummary run_kst_lower(const SuiteConfig& cfg, std::ostream& records) {
    int s = int(param_or(cfg.params, "s", 2));
    int t_side = int(param_or(cfg.params, "t", 4));
    int host_n = int(param_or(cfg.params, "N", 40));
    double host_p = param_or(cfg.params, "p", 0.5);
    int levels = int(param_or(cfg.params, "levels", 0));
    if (levels < 1)
        levels = t_side > s ? dyadic_levels_for_kst(s, t_side) : 1;
    std::uint64_t host_seed = Rng::mix(cfg.seed, 0x5057ULL);
    Graph host = sample_gnp(host_n, host_p, host_seed);
    int need = DyadicPlan::positions_needed(levels);
    if (host.n() < need) host = pad_isolated(host, need);
    VertexOrdering ord = degree_order(host);
    DyadicPlan plan = build_dyadic_plan(host, ord, levels);

    std::vector<TrialOutput> outs(cfg.trials);
    parallel_for(cfg.trials, cfg.jobs, [&](long long i) {
        auto start = std::chrono::steady_clock::now();
        std::uint64_t trial_seed = Rng::mix(cfg.seed, std::uint64_t(i));
        TrialOutput& t = outs[i];
        t.record.experiment = "lower_kst";
        t.record.params = cfg.params;
        t.record.params["s"] = s;
        t.record.params["t"] = t_side;
        t.record.params["levels"] = levels;
        t.record.seed = trial_seed;
        t.record.constants_mode = cfg.paper_constants ? "paper" : "override";
        try {
            Coloring col = color_hypergeometric_dyadic(host, plan, trial_seed);
            MonoCounts counts = count_mono_kst(host, col, s, t_side);
            t.success = counts.red == 0 && counts.blue == 0;
            t.record.outcome = {{"success", t.success},
                                {"host_seed", host_seed},
                                {"mono_red", counts.red},
                                {"mono_blue", counts.blue}};
        } catch (const resource_error& e) {
            t.resource_failed = true;
            t.record.outcome = {{"success", false}, {"resource_error", e.what()}};
        }
        t.record.wall_ms = elapsed_ms(start);
    });
    return emit_records(outs, records);
}

SuiteSummary run_kst_upper(const SuiteConfig& cfg, std::ostream& records) {
    int s = int(param_or(cfg.params, "s", 2));
    int t_side = int(param_or(cfg.params, "t", 3));
    int a = int(param_or(cfg.params, "a", 2.0 * s * s));
    int b = int(param_or(cfg.params, "b",
                         std::ceil(2.0 * std::exp(1.0) * t_side *
                                   std::pow(2.0, s))));
    const std::string& strategy = cfg.scheme;
    BipartiteHost host = make_complete_bipartite(a, b);

    std::vector<TrialOutput> outs(cfg.trials);
    parallel_for(cfg.trials, cfg.jobs, [&](long long i) {
        auto start = std::chrono::steady_clock::now();
        std::uint64_t trial_seed = Rng::mix(cfg.seed, std::uint64_t(i));
        TrialOutput& t = outs[i];
        t.record.experiment = "upper_kst";
        t.record.params = cfg.params;
        t.record.params["s"] = s;
        t.record.params["t"] = t_side;
        t.record.params["a"] = a;
        t.record.params["b"] = b;
        t.record.seed = trial_seed;
        t.record.constants_mode = cfg.paper_constants ? "paper" : "override";
        try {
            ColorSchemeSpec scheme{strategy, {{"part_a", double(a)}}};
            Coloring col = make_coloring(host.graph, scheme, trial_seed);
            auto w = extract_kst(host, col, s, t_side);
            bool valid = w && validate_witness(host.graph, &col, *w);
            t.success = valid;
            t.record.outcome = {{"success", t.success}, {"scheme", strategy}};
            if (w) t.record.outcome["witness"] = witness_json(*w);
        } catch (const resource_error& e) {
            t.resource_failed = true;
            t.record.outcome = {{"success", false}, {"resource_error", e.what()}};
        }
        t.record.wall_ms = elapsed_ms(start);
    });
    return emit_records(outs, records);
}

SuiteSummary run_starburst_upper(const SuiteConfig& cfg, std::ostream& records) {
    int k = int(param_or(cfg.params, "k", 3));
    int n = int(param_or(cfg.params, "n", 10));
    double p = param_or(cfg.params, "p", 1.0 / (10.0 * k));
    long long host_n =
        (long long)param_or(cfg.params, "N", 1000.0 * k * k * n);
    if (host_n > Graph::kDefaultVertexCap)
        throw resource_error("host would need " + std::to_string(host_n) +
                             " vertices; override N for desk-scale runs");
    std::uint64_t host_seed = Rng::mix(cfg.seed, 0x6057ULL);
    Graph host = sample_gnp(int(host_n), p, host_seed);
    StarburstExtractOptions opt;
    opt.p = p;
    opt.delta = param_or(cfg.params, "delta", p * p);

    std::vector<TrialOutput> outs(cfg.trials);
    parallel_for(cfg.trials, cfg.jobs, [&](long long i) {
        auto start = std::chrono::steady_clock::now();
        std::uint64_t trial_seed = Rng::mix(cfg.seed, std::uint64_t(i));
        TrialOutput& t = outs[i];
        t.record.experiment = "upper_starburst";
        t.record.params = cfg.params;
        t.record.params["k"] = k;
        t.record.params["n"] = n;
        t.record.params["N"] = double(host_n);
        t.record.params["p"] = p;
        t.record.seed = trial_seed;
        t.record.constants_mode = cfg.paper_constants ? "paper" : "override";
        try {
            Coloring col = color_uniform(host, trial_seed);
            auto w = extract_starburst(host, col, k, n, opt);
            bool valid = w && validate_witness(host, &col, *w);
            t.success = valid;
            t.record.outcome = {{"success", t.success}, {"host_seed", host_seed}};
            if (w) t.record.outcome["witness"] = witness_json(*w);
        } catch (const resource_error& e) {
            t.resource_failed = true;
            t.record.outcome = {{"success", false}, {"resource_error", e.what()}};
        }
        t.record.wall_ms = elapsed_ms(start);
    });
    return emit_records(outs, records);
}

}  // namespace

SuiteSummary run_lowerbound_suite(const SuiteConfig& cfg, std::ostream& records) {
    if (cfg.trials < 1) throw parameter_error("trials must be >= 1");
    if (cfg.family == "starburst") return run_starburst_lower(cfg, records);
    if (cfg.family == "book") return run_book_lower(cfg, records);
    if (cfg.family == "kst") return run_kst_lower(cfg, records);
    throw parameter_error("lower-bound suite knows kst, book, starburst; got '" +
                          cfg.family + "'");
}

SuiteSummary run_upperbound_suite(const SuiteConfig& cfg, std::ostream& records) {
    if (cfg.trials < 1) throw parameter_error("trials must be >= 1");
    if (cfg.family == "kst") return run_kst_upper(cfg, records);
    if (cfg.family == "starburst") return run_starburst_upper(cfg, records);
    if (cfg.family == "book")
        throw parameter_error(
            "no book upper-bound suite: the regularity-based extractor is out "
            "of scope");
    throw parameter_error("upper-bound suite knows kst, starburst; got '" +
                          cfg.family + "'");
}

bool revalidate_record(const ExperimentRecord& rec) {
    if (!rec.outcome.contains("witness")) return true;
    const json& wj = rec.outcome.at("witness");
    if (rec.experiment == "upper_kst") {
        int s = int(rec.params.at("s")), t = int(rec.params.at("t"));
        int a = int(rec.params.at("a")), b = int(rec.params.at("b"));
        BipartiteHost host = make_complete_bipartite(a, b);
        std::string strategy = rec.outcome.value("scheme", "uniform");
        ColorSchemeSpec scheme{strategy, {{"part_a", double(a)}}};
        Coloring col = make_coloring(host.graph, scheme, rec.seed);
        WitnessEmbedding w =
            witness_from_json(wj, FamilyParams::complete_bipartite(s, t));
        return validate_witness(host.graph, &col, w);
    }
    if (rec.experiment == "upper_starburst") {
        int k = int(rec.params.at("k")), n = int(rec.params.at("n"));
        int host_n = int(rec.params.at("N"));
        double p = rec.params.at("p");
        std::uint64_t host_seed =
            rec.outcome.at("host_seed").get<std::uint64_t>();
        Graph host = sample_gnp(host_n, p, host_seed);
        Coloring col = color_uniform(host, rec.seed);
        WitnessEmbedding w = witness_from_json(wj, FamilyParams::starburst(k, n));
        return validate_witness(host, &col, w);
    }
    return true;
}

// ---- aggregation ----------------------------------------------------------------

std::vector<ReportRow> aggregate_records(std::istream& in) {
    std::map<std::pair<std::string, std::string>,
             std::tuple<long long, long long, double>>
        acc;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        bool blank = true;
        for (char ch : line)
            if (!isspace(static_cast<unsigned char>(ch))) {
                blank = false;
                break;
            }
        if (blank) continue;
        ExperimentRecord rec = ExperimentRecord::from_line(line, line_no);
        auto& [trials, successes, wall] =
            acc[{rec.experiment, rec.constants_mode}];
        ++trials;
        if (rec.outcome.value("success", false)) ++successes;
        wall += rec.wall_ms;
    }
    std::vector<ReportRow> rows;
    for (auto& [key, val] : acc) {
        ReportRow row;
        row.experiment = key.first;
        row.constants_mode = key.second;
        std::tie(row.trials, row.successes, row.mean_wall_ms) = val;
        row.mean_wall_ms /= double(row.trials);
        row.ci = wilson_interval(row.successes, row.trials);
        rows.push_back(std::move(row));
    }
    return rows;
}

void print_report(const std::vector<ReportRow>& rows, std::ostream& out,
                  bool csv) {
    if (csv) {
        out << "experiment,constants,trials,successes,rate,ci_lo,ci_hi,mean_wall_ms\n";
        for (const auto& r : rows)
            out << r.experiment << ',' << r.constants_mode << ',' << r.trials
                << ',' << r.successes << ',' << r.ci.point << ',' << r.ci.lo
                << ',' << r.ci.hi << ',' << r.mean_wall_ms << '\n';
        return;
    }
    out << std::left << std::setw(20) << "experiment" << std::setw(10)
        << "constants" << std::right << std::setw(8) << "trials" << std::setw(10)
        << "success" << std::setw(9) << "rate" << std::setw(17) << "wilson95"
        << std::setw(13) << "mean_ms" << '\n';
    for (const auto& r : rows) {
        std::ostringstream ci;
        ci << '[' << std::fixed << std::setprecision(3) << r.ci.lo << ','
           << r.ci.hi << ']';
        out << std::left << std::setw(20) << r.experiment << std::setw(10)
            << r.constants_mode << std::right << std::setw(8) << r.trials
            << std::setw(10) << r.successes << std::setw(9) << std::fixed
            << std::setprecision(3) << r.ci.point << std::setw(17) << ci.str()
            << std::setw(13) << std::setprecision(2) << r.mean_wall_ms << '\n';
    }
}

}  // namespace ramsey
