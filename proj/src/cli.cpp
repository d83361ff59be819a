#include "walkrank/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <memory>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "walkrank/centrality.hpp"
#include "walkrank/error.hpp"
#include "walkrank/fixtures.hpp"
#include "walkrank/generators.hpp"
#include "walkrank/io.hpp"
#include "walkrank/pagerank.hpp"
#include "walkrank/ranking.hpp"
#include "walkrank/spectral.hpp"

namespace walkrank::cli {
namespace {

constexpr int kScoreDigits = 12;

struct InputConfig {
    std::string path;
    std::string format = "edgelist";
    bool directed = false;
    bool weighted = false;
    bool allow_loops = false;
    int index_base = 1;
};

void add_input_options(CLI::App &cmd, InputConfig &in) {
    cmd.add_option("--input,-i", in.path, "Graph file")->required();
    cmd.add_option("--format", in.format, "Input format")
        ->check(CLI::IsMember({"edgelist", "mtx"}));
    cmd.add_flag("--directed", in.directed, "Edge list describes a digraph");
    cmd.add_flag("--weighted", in.weighted, "Edge list has a weight column");
    cmd.add_flag("--allow-loops", in.allow_loops, "Keep self-loops");
    cmd.add_option("--index-base", in.index_base, "Smallest node id in the edge list")
        ->check(CLI::IsMember({0, 1}));
}

Graph load_input(const InputConfig &in) {
    EdgeListOptions options;
    options.directed = in.directed;
    options.weighted = in.weighted;
    options.index_base = in.index_base;
    options.allow_loops = in.allow_loops;
    return load_graph_file(in.path, in.format == "mtx" ? GraphFormat::MatrixMarket : GraphFormat::EdgeList,
                           options);
}

Side parse_side(const std::string &s) { return s == "receive" ? Side::Receive : Side::Broadcast; }

/// Opens --out when given, otherwise writes to `fallback`.
class Sink {
public:
    Sink(const std::string &path, std::ostream &fallback) : stream_(&fallback) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) throw ValidationError("cannot write " + path);
            stream_ = file_.get();
        }
    }
    std::ostream &get() { return *stream_; }

private:
    std::unique_ptr<std::ofstream> file_;
    std::ostream *stream_;
};

/// "uniform" or a file with one value per node in id order.
std::optional<std::vector<double>> load_preference(const std::string &spec, std::size_t n) {
    if (spec.empty() || spec == "uniform") return std::nullopt;
    std::ifstream in(spec);
    if (!in) throw ValidationError("cannot open preference file " + spec);
    std::vector<double> v;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string token;
        while (fields >> token) {
            std::size_t used = 0;
            double x = 0.0;
            try {
                x = std::stod(token, &used);
            } catch (const std::exception &) {
                used = 0;
            }
            if (used != token.size()) throw ParseError("bad preference value '" + token + "'", line_no);
            v.push_back(x);
        }
    }
    if (v.size() != n)
        throw ValidationError("preference file has " + std::to_string(v.size()) + " values for " +
                              std::to_string(n) + " nodes");
    return v;
}

std::string side_name(Orientation o) { return std::string(to_string(o)); }

void write_scores(std::ostream &out, const Graph &g, const CentralityVector &c, const std::string &mode) {
    const Ranking r = rank(c.scores);
    std::vector<std::size_t> position(c.scores.size());
    for (std::size_t p = 0; p < r.order.size(); ++p) position[r.order[p]] = p + 1;

    if (mode == "json") {
        nlohmann::json j;
        j["measure"] = std::string(to_string(c.measure));
        j["side"] = side_name(c.side);
        j["parameter"] = c.parameter ? nlohmann::json(*c.parameter) : nlohmann::json();
        j["tol"] = c.meta.tol;
        j["iterations"] = c.meta.iterations;
        j["residual"] = c.meta.residual;
        auto nodes = nlohmann::json::array();
        for (std::size_t i = 0; i < c.scores.size(); ++i)
            nodes.push_back({{"node", g.label(static_cast<NodeId>(i))},
                             {"score", c.scores[i]},
                             {"rank", position[i]}});
        j["nodes"] = nodes;
        out << j.dump(2) << '\n';
        return;
    }
    out << std::setprecision(kScoreDigits);
    if (mode == "table") {
        out << std::left << std::setw(10) << "node" << std::setw(22) << "score" << "rank\n";
        for (NodeId id : r.order)
            out << std::setw(10) << g.label(id) << std::setw(22) << c.scores[id] << position[id] << '\n';
        out << std::right;
        return;
    }
    out << "node,score,rank\n";
    for (std::size_t i = 0; i < c.scores.size(); ++i)
        out << g.label(static_cast<NodeId>(i)) << ',' << c.scores[i] << ',' << position[i] << '\n';
}

// ---------------------------------------------------------------- compute

struct ComputeConfig {
    InputConfig input;
    std::string measure;
    std::string side = "broadcast";
    std::string preference = "uniform";
    std::string out;
    double tol = 0.0;
    bool json = false;
    bool table = false;
    CLI::Option *alpha = nullptr;
    CLI::Option *beta = nullptr;
    CLI::Option *t = nullptr;
    CLI::Option *tol_opt = nullptr;
    double alpha_value = 0.0, beta_value = 0.0, t_value = 0.0;
};

void reject(const CLI::Option *opt, const std::string &measure) {
    if (opt && opt->count() > 0)
        throw ValidationError(opt->get_name() + " does not apply to measure " + measure);
}

int cmd_compute(const ComputeConfig &cfg, std::ostream &out) {
    const Measure m = *parse_measure(cfg.measure);
    const Graph g = load_input(cfg.input);
    const Side side = parse_side(cfg.side);
    auto pref = load_preference(cfg.preference, g.num_nodes());
    const bool has_alpha = cfg.alpha->count() > 0, has_beta = cfg.beta->count() > 0;
    const bool has_tol = cfg.tol_opt->count() > 0;

    auto no_preference = [&] {
        if (pref) throw ValidationError("--preference does not apply to measure " + cfg.measure);
    };

    CentralityVector c;
    switch (m) {
    case Measure::Degree:
        reject(cfg.alpha, cfg.measure), reject(cfg.beta, cfg.measure), reject(cfg.t, cfg.measure);
        no_preference();
        c = degree_centrality(g, side);
        break;
    case Measure::Eigenvector:
        reject(cfg.alpha, cfg.measure), reject(cfg.beta, cfg.measure), reject(cfg.t, cfg.measure);
        no_preference();
        c = eigenvector_centrality(g, side, has_tol ? cfg.tol : kDefaultEigenTol);
        break;
    case Measure::Katz:
        reject(cfg.beta, cfg.measure), reject(cfg.t, cfg.measure);
        c = katz(g, has_alpha ? cfg.alpha_value : default_katz_alpha(g), pref, side,
                 has_tol ? cfg.tol : kDefaultSeriesTol);
        break;
    case Measure::ResolventSubgraph:
        reject(cfg.beta, cfg.measure), reject(cfg.t, cfg.measure);
        no_preference();
        c = resolvent_subgraph(g, has_alpha ? cfg.alpha_value : default_katz_alpha(g));
        break;
    case Measure::ExpSubgraph:
        reject(cfg.alpha, cfg.measure), reject(cfg.t, cfg.measure);
        no_preference();
        c = exp_subgraph(g, has_beta ? cfg.beta_value : kDefaultBeta);
        break;
    case Measure::TotalCommunicability:
        reject(cfg.alpha, cfg.measure), reject(cfg.t, cfg.measure);
        c = total_communicability(g, has_beta ? cfg.beta_value : kDefaultBeta, pref, side,
                                  has_tol ? cfg.tol : kDefaultSeriesTol);
        break;
    case Measure::HitsHub:
    case Measure::HitsAuthority: {
        reject(cfg.alpha, cfg.measure), reject(cfg.beta, cfg.measure), reject(cfg.t, cfg.measure);
        no_preference();
        auto h = hits(g, has_tol ? cfg.tol : kDefaultEigenTol);
        c = m == Measure::HitsHub ? std::move(h.hub) : std::move(h.authority);
        break;
    }
    case Measure::PageRank: {
        reject(cfg.beta, cfg.measure), reject(cfg.t, cfg.measure);
        const double alpha = has_alpha ? cfg.alpha_value : kDefaultDamping;
        const GoogleModel model = build_model(g, alpha, pref);
        const double tol = has_tol ? cfg.tol : kDefaultPageRankTol;
        auto result = pagerank_power(model, tol);
        c.measure = m;
        c.side = Orientation::Receive;
        c.parameter = alpha;
        c.preference = pref;
        c.scores = std::move(result.p);
        c.meta = {tol, result.iterations, 0.0};
        break;
    }
    case Measure::HeatKernel: {
        reject(cfg.beta, cfg.measure);
        const double alpha = has_alpha ? cfg.alpha_value : kDefaultDamping;
        const double t = cfg.t->count() > 0 ? cfg.t_value : 1.0;
        const GoogleModel model = build_model(g, alpha, pref);
        auto rows = heat_kernel_rowsums(model, t, has_tol ? cfg.tol : 1e-12);
        // Column sums of e^{tP} are e^t, so this is a probability vector.
        const double scale = std::exp(-t) / static_cast<double>(g.num_nodes());
        for (double &x : rows) x *= scale;
        c.measure = m;
        c.side = Orientation::Receive;
        c.parameter = t;
        c.preference = pref;
        c.scores = std::move(rows);
        c.meta.tol = has_tol ? cfg.tol : 1e-12;
        break;
    }
    }
    Sink sink(cfg.out, out);
    write_scores(sink.get(), g, c, cfg.json ? "json" : cfg.table ? "table" : "csv");
    return kOk;
}

// ---------------------------------------------------------------- sweep

struct SweepConfig {
    InputConfig input;
    std::string measure;
    std::string side = "broadcast";
    std::vector<double> grid;
    bool normalized = false;
    std::size_t k = 0;
    double threshold = 0.05;
    std::string out;
    std::string report;
    bool json = false;
};

void write_report(std::ostream &out, const SweepResult &s, const ConvergenceReport &r) {
    out << "family: " << to_string(s.family) << '\n';
    out << "lambda1: " << std::setprecision(kScoreDigits) << s.lambda1 << '\n';
    out << "k: ";
    if (s.k_is_all)
        out << "all\n";
    else
        out << s.k << '\n';
    out << "threshold: " << r.threshold << '\n';
    out << "degenerate: " << (r.degenerate ? "yes" : "no") << '\n';
    out << "informative band: ";
    if (r.informative_band)
        out << '[' << r.informative_band->first << ", " << r.informative_band->second << "]\n";
    else
        out << "none\n";
    out << "recommendation: " << r.recommendation << '\n';
}

int cmd_sweep(const SweepConfig &cfg, std::ostream &out, std::ostream &err) {
    const Family family = *parse_family(cfg.measure);
    const Graph g = load_input(cfg.input);
    const Side side = parse_side(cfg.side);
    const std::optional<std::size_t> k = cfg.k ? std::optional<std::size_t>(cfg.k) : std::nullopt;

    std::vector<double> grid = cfg.grid;
    if (grid.empty() || (cfg.normalized && uses_normalized_alpha(family))) {
        double lambda1 = 1.0;
        if (uses_normalized_alpha(family)) lambda1 = spectral_radius(g);
        if (grid.empty()) {
            grid = default_grid(family, lambda1);
        } else {
            for (double &tau : grid) {
                if (!(tau < 1.0)) throw DomainError("tau must be < 1, got " + std::to_string(tau));
                tau /= lambda1;
            }
        }
    }
    const SweepResult s = limit_sweep(g, family, grid, k, side);
    const ConvergenceReport report = convergence_report(s, cfg.threshold);

    Sink sink(cfg.out, out);
    if (cfg.json) {
        sink.get() << to_json(s, &report) << '\n';
    } else {
        write_csv(sink.get(), s);
    }
    if (!cfg.report.empty()) {
        Sink rep(cfg.report, err);
        write_report(rep.get(), s, report);
    } else if (!cfg.json) {
        write_report(err, s, report);
    }
    return kOk;
}

// ---------------------------------------------------------------- compare

struct ScoreFile {
    std::vector<std::string> nodes;
    std::vector<double> scores;
};

bool parse_double(const std::string &s, double &x) {
    std::size_t used = 0;
    try {
        x = std::stod(s, &used);
    } catch (const std::exception &) {
        return false;
    }
    return used == s.size();
}

/// "node,score[,...]" or "node score" rows; a non-numeric score on the first
/// row marks a header.
ScoreFile read_scores(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open " + path);
    ScoreFile f;
    std::map<std::string, std::size_t> seen;
    std::string line;
    std::size_t line_no = 0;
    bool first = true;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream fields(line);
        std::string node, score;
        if (!(fields >> node)) continue;
        if (!(fields >> score)) throw ParseError(path + ": expected node and score", line_no);
        double x = 0.0;
        if (!parse_double(score, x)) {
            if (first) {
                first = false;
                continue;
            }
            throw ParseError(path + ": bad score '" + score + "'", line_no);
        }
        first = false;
        if (!std::isfinite(x)) throw ParseError(path + ": non-finite score", line_no);
        if (!seen.emplace(node, f.nodes.size()).second)
            throw ValidationError(path + ": node " + node + " listed twice");
        f.nodes.push_back(node);
        f.scores.push_back(x);
    }
    if (f.nodes.empty()) throw ValidationError(path + " holds no scores");
    return f;
}

/// Numeric labels sort numerically, others lexicographically; ids follow that order.
std::vector<std::string> canonical_nodes(std::vector<std::string> nodes) {
    auto numeric = [](const std::string &s) {
        return !s.empty() && std::all_of(s.begin() + (s[0] == '-' ? 1 : 0), s.end(),
                                         [](unsigned char ch) { return std::isdigit(ch); });
    };
    const bool all_numeric = std::all_of(nodes.begin(), nodes.end(), numeric);
    std::sort(nodes.begin(), nodes.end(), [&](const std::string &a, const std::string &b) {
        if (all_numeric) return std::stoll(a) < std::stoll(b);
        return a < b;
    });
    return nodes;
}

int cmd_compare(const std::string &a_path, const std::string &b_path, std::size_t k,
                std::ostream &out) {
    const ScoreFile a = read_scores(a_path), b = read_scores(b_path);
    const std::vector<std::string> nodes = canonical_nodes(a.nodes);
    std::map<std::string, std::size_t> id;
    for (std::size_t i = 0; i < nodes.size(); ++i) id[nodes[i]] = i;

    auto to_vector = [&](const ScoreFile &f, const std::string &path) {
        if (f.nodes.size() != nodes.size())
            throw ValidationError("node sets differ: " + a_path + " has " + std::to_string(nodes.size()) +
                                  " nodes, " + path + " has " + std::to_string(f.nodes.size()));
        std::vector<double> v(nodes.size());
        for (std::size_t i = 0; i < f.nodes.size(); ++i) {
            auto it = id.find(f.nodes[i]);
            if (it == id.end()) throw ValidationError("node sets differ: " + f.nodes[i] + " missing from " + a_path);
            v[it->second] = f.scores[i];
        }
        return v;
    };
    const auto x = to_vector(a, a_path), y = to_vector(b, b_path);
    const double d = intersection_distance(rank(x), rank(y), k ? std::optional<std::size_t>(k) : std::nullopt);
    out << std::setprecision(kScoreDigits) << d << '\n';
    return kOk;
}

// ---------------------------------------------------------------- pagerank-demo

struct DemoCase {
    double alpha;
    std::array<double, 6> p;
    double tol;
};

// Reference digits of the six-node example: five digits, seven for α = 0.001.
const std::array<DemoCase, 4> kDemoCases{{
    {0.9, {.03721, .05396, .04151, .37510, .20600, .28620}, 5e-6},
    {0.1, {.15812, .16603, .16067, .17812, .16703, .17002}, 5e-6},
    {0.01, {.16583, .16666, .16610, .16778, .16667, .16695}, 5e-6},
    {0.001, {.1665833, .1666666, .1666111, .1667778, .1666667, .1666945}, 5e-8},
}};
const std::array<double, 6> kDemoH1{1.0 / 3, 5.0 / 6, 1.0 / 2, 3.0 / 2, 5.0 / 6, 1.0};
const std::array<std::int64_t, 6> kDemoOrder{4, 6, 5, 2, 3, 1};

std::string as_fraction(double x) {
    if (x == 0.0) return "0";
    for (int q = 1; q <= 12; ++q) {
        const double p = std::round(x * q);
        if (std::abs(p / q - x) < 1e-12) {
            if (q == 1) return std::to_string(static_cast<long long>(p));
            return std::to_string(static_cast<long long>(p)) + "/" + std::to_string(q);
        }
    }
    std::ostringstream s;
    s << std::setprecision(kScoreDigits) << x;
    return s.str();
}

std::string labels_of(const Graph &g, const Ranking &r) {
    std::string s;
    for (NodeId id : r.order) s += (s.empty() ? "" : " ") + std::to_string(g.label(id));
    return s;
}

Ranking reference_ranking(const Graph &g, const Ranking &computed) {
    Ranking ref = computed;
    for (std::size_t pos = 0; pos < kDemoOrder.size(); ++pos) {
        NodeId id = 0;
        while (g.label(id) != kDemoOrder[pos]) ++id;
        ref.order[pos] = id;
    }
    return ref;
}

int cmd_pagerank_demo(std::ostream &out) {
    const Graph g = fixtures::six_node_digraph();
    const std::size_t n = g.num_nodes();
    std::vector<std::string> mismatches;

    const GoogleModel base = build_model(g, kDefaultDamping);
    out << "H =\n";
    for (NodeId i = 0; i < n; ++i) {
        out << " ";
        for (NodeId j = 0; j < n; ++j) out << std::setw(6) << as_fraction(base.h(i, j));
        out << '\n';
    }

    for (const auto &c : kDemoCases) {
        const auto result = pagerank_power(build_model(g, c.alpha), 1e-14);
        out << "\np(" << c.alpha << ") =";
        out << std::fixed << std::setprecision(c.tol < 1e-7 ? 7 : 5);
        for (double x : result.p) out << ' ' << x;
        out.unsetf(std::ios::floatfield);
        out << "\n  reference    ";
        out << std::fixed << std::setprecision(c.tol < 1e-7 ? 7 : 5);
        for (double x : c.p) out << ' ' << x;
        out.unsetf(std::ios::floatfield);
        out << std::setprecision(6);
        const Ranking r = rank(result.p);
        out << "\n  ranking: " << labels_of(g, r) << '\n';
        for (std::size_t i = 0; i < n; ++i) {
            if (std::abs(result.p[i] - c.p[i]) > c.tol) {
                std::ostringstream m;
                m << std::setprecision(10) << "p(" << c.alpha << ")[" << g.label(static_cast<NodeId>(i))
                  << "] = " << result.p[i] << ", reference " << c.p[i] << " (tolerance " << c.tol << ")";
                mismatches.push_back(m.str());
            }
        }
        const Ranking ref = reference_ranking(g, r);
        if (r.order != ref.order) {
            std::ostringstream m;
            m << "ranking at alpha = " << c.alpha << " is " << labels_of(g, r);
            mismatches.push_back(m.str());
        }
    }

    const auto h1 = small_alpha_limit(g);
    out << "\nH1 =";
    for (double x : h1) out << ' ' << as_fraction(x);
    const Ranking r = rank(h1);
    out << "\n  ranking: " << labels_of(g, r);
    for (const auto &[first, last] : r.tie_groups)
        if (last - first > 1) {
            out << " (tied:";
            for (std::size_t p = first; p < last; ++p) out << ' ' << g.label(r.order[p]);
            out << ')';
        }
    out << '\n';
    for (std::size_t i = 0; i < n; ++i)
        if (std::abs(h1[i] - kDemoH1[i]) > 1e-12)
            mismatches.push_back("H1[" + std::to_string(g.label(static_cast<NodeId>(i))) + "] = " +
                                 as_fraction(h1[i]) + ", reference " + as_fraction(kDemoH1[i]));
    if (!equal_modulo_ties(reference_ranking(g, r), r))
        mismatches.push_back("H1 ranking is " + labels_of(g, r));

    if (mismatches.empty()) {
        out << "\nall entries match the reference\n";
        return kOk;
    }
    out << "\n" << mismatches.size() << " divergent entries:\n";
    for (const auto &m : mismatches) out << "  " << m << '\n';
    return kMismatch;
}

// ---------------------------------------------------------------- generate

struct GenerateConfig {
    std::string kind;
    std::size_t n = 0;
    double p = 0.1;
    double mean_degree = 4.0;
    bool directed = false;
    std::uint64_t seed = 0;
    std::string out;
};

int cmd_generate(const GenerateConfig &cfg, std::ostream &out) {
    Graph g;
    if (cfg.kind == "erdos-renyi")
        g = generators::erdos_renyi(cfg.n, cfg.p, cfg.directed, cfg.seed);
    else if (cfg.kind == "ring")
        g = generators::ring(cfg.n, cfg.directed);
    else if (cfg.kind == "star")
        g = generators::star(cfg.n, cfg.directed);
    else if (cfg.kind == "connected")
        g = generators::random_connected(cfg.n, cfg.mean_degree, cfg.seed);
    else
        g = generators::random_strongly_connected(cfg.n, cfg.mean_degree, cfg.seed);

    std::vector<std::int64_t> labels(g.num_nodes());
    for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = static_cast<std::int64_t>(i) + 1;
    const Graph labelled = Graph::from_edges(g.num_nodes(), g.edges(), g.options(), labels);

    Sink sink(cfg.out, out);
    sink.get() << "# " << cfg.kind << " n=" << g.num_nodes() << (g.directed() ? " directed" : " undirected")
               << " seed=" << cfg.seed << '\n';
    write_edge_list(sink.get(), labelled);
    return kOk;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Walk-based centrality measures and ranking limit sweeps", "walkrank"};
    app.require_subcommand(1);

    ComputeConfig compute;
    auto *c = app.add_subcommand("compute", "Compute one centrality measure");
    add_input_options(*c, compute.input);
    c->add_option("--measure,-m", compute.measure, "Measure name")
        ->required()
        ->check(CLI::IsMember({"degree", "eigenvector", "katz", "resolvent-subgraph", "exp-subgraph",
                               "total-communicability", "hits-hub", "hits-authority", "pagerank",
                               "heat-kernel"}));
    c->add_option("--side", compute.side, "Walk direction on digraphs")
        ->check(CLI::IsMember({"broadcast", "receive"}));
    compute.alpha = c->add_option("--alpha", compute.alpha_value,
                                  "Resolvent parameter (default 0.85/lambda1) or PageRank damping (default 0.85)");
    compute.beta = c->add_option("--beta", compute.beta_value, "Exponential parameter (default 1)");
    compute.t = c->add_option("--t", compute.t_value, "Heat-kernel time (default 1)");
    c->add_option("--preference", compute.preference, "'uniform' or a file of per-node weights");
    compute.tol_opt = c->add_option("--tol", compute.tol, "Solver tolerance")->check(CLI::PositiveNumber);
    c->add_option("--out,-o", compute.out, "Output file (default stdout)");
    auto *json_flag = c->add_flag("--json", compute.json, "JSON output");
    c->add_flag("--table", compute.table, "Aligned table output")->excludes(json_flag);

    SweepConfig sweep;
    auto *s = app.add_subcommand("sweep", "Compare a measure's rankings with its limits over a grid");
    add_input_options(*s, sweep.input);
    s->add_option("--measure,-m", sweep.measure, "Measure family")
        ->required()
        ->check(CLI::IsMember({"exp-subgraph", "total-communicability", "resolvent-subgraph", "katz",
                               "pagerank"}));
    s->add_option("--side", sweep.side, "Walk direction on digraphs")
        ->check(CLI::IsMember({"broadcast", "receive"}));
    s->add_option("--grid", sweep.grid, "Comma-separated parameter values")->delimiter(',');
    s->add_flag("--normalized", sweep.normalized, "Grid holds tau = alpha*lambda1 for resolvent families");
    s->add_option("--k", sweep.k, "Top-k depth for isim (default all nodes)")->check(CLI::PositiveNumber);
    s->add_option("--threshold", sweep.threshold, "isim threshold of the informative band");
    s->add_option("--out,-o", sweep.out, "CSV output file (default stdout)");
    s->add_option("--report", sweep.report, "Convergence report file (default stderr)");
    s->add_flag("--json", sweep.json, "JSON output including the report");

    std::string cmp_a, cmp_b;
    std::size_t cmp_k = 0;
    auto *cmp = app.add_subcommand("compare", "Intersection distance between two score files");
    cmp->add_option("first", cmp_a, "Score file")->required();
    cmp->add_option("second", cmp_b, "Score file")->required();
    cmp->add_option("--k", cmp_k, "Top-k depth (default all nodes)")->check(CLI::PositiveNumber);

    auto *demo = app.add_subcommand("pagerank-demo", "Six-node small-damping PageRank example");

    GenerateConfig gen;
    auto *g = app.add_subcommand("generate", "Write a synthetic graph as an edge list");
    g->add_option("--kind", gen.kind, "Generator")
        ->required()
        ->check(CLI::IsMember({"erdos-renyi", "ring", "star", "connected", "strongly-connected"}));
    g->add_option("--n", gen.n, "Node count")->required()->check(CLI::PositiveNumber);
    g->add_option("--p", gen.p, "Edge probability (erdos-renyi)")->check(CLI::Range(0.0, 1.0));
    g->add_option("--mean-degree", gen.mean_degree, "Expected degree (connected, strongly-connected)");
    g->add_flag("--directed", gen.directed, "Directed edges (erdos-renyi, ring, star)");
    g->add_option("--seed", gen.seed, "Random seed")->required();
    g->add_option("--out,-o", gen.out, "Output file (default stdout)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kInvalid;
    }

    try {
        if (c->parsed()) return cmd_compute(compute, out);
        if (s->parsed()) return cmd_sweep(sweep, out, err);
        if (cmp->parsed()) return cmd_compare(cmp_a, cmp_b, cmp_k, out);
        if (demo->parsed()) return cmd_pagerank_demo(out);
        if (g->parsed()) return cmd_generate(gen, out);
    } catch (const CapacityError &e) {
        err << "error: " << e.what() << '\n';
        return kFailure;
    } catch (const ConvergenceError &e) {
        err << "error: " << e.what() << '\n';
        return kFailure;
    } catch (const TruncationError &e) {
        err << "error: " << e.what() << '\n';
        return kFailure;
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return kInvalid;
    }
    return kInvalid;
}

} // namespace walkrank::cli
