// uhg: command-line surface for the universal-hypergraph toolkit.
//
// Subcommands: construct, verify, decompose, hit, expand, scaling, aa.
// Every command is a pure function of (input files, flags, seed): rerunning
// with the same arguments produces byte-identical output, so no timing or
// host-specific data ever reaches a report.
//
// Exit codes: 0 success, 1 verification failed (witness in report),
// 2 budget/generation exhausted, 3 usage or parse error.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "uhg/aa.hpp"
#include "uhg/concentrator.hpp"
#include "uhg/decomposition.hpp"
#include "uhg/errors.hpp"
#include "uhg/expander.hpp"
#include "uhg/family.hpp"
#include "uhg/hitting.hpp"
#include "uhg/io.hpp"
#include "uhg/layered.hpp"
#include "uhg/product.hpp"
#include "uhg/universal.hpp"
#include "uhg/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBudget = 2;
constexpr int kExitUsage = 3;

long long env_budget(const char* name, long long fallback) {
    const char* s = std::getenv(name);
    if (!s || !*s) return fallback;
    try {
        long long v = std::stoll(s);
        if (v <= 0) throw std::invalid_argument("budget must be positive");
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string(name) + ": not a positive integer: " + s);
    }
}

uhg::Hypergraph load_hypergraph(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::invalid_argument("cannot open input file: " + path);
    return uhg::read_hypergraph(is);
}

uhg::Graph as_graph(const uhg::Hypergraph& h, const std::string& what) {
    if (h.num_edges() > 0 && h.uniformity() != 2)
        throw std::invalid_argument(what + ": expected a 2-uniform (graph) input");
    std::vector<uhg::Edge> es;
    for (const auto& e : h.edges()) es.emplace_back(e[0], e[1]);
    return uhg::Graph(h.num_vertices(), std::move(es));
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream os(path);
    if (!os) throw std::invalid_argument("cannot open output file: " + path);
    os << content;
}

// Reports go to --report when given, stdout otherwise.
struct ReportSink {
    std::string path;
    bool json = false;

    void emit(const uhg::Report& rep) const {
        std::string text = json ? rep.to_json() + "\n" : rep.to_text();
        if (path.empty())
            std::cout << text;
        else
            write_file(path, text);
    }
    void attach(CLI::App* cmd) {
        cmd->add_option("--report", path, "write the report to this file instead of stdout");
        cmd->add_flag("--json", json, "emit the report as a single JSON object");
    }
};

// Surrogate expanders by name: k<m> (complete), petersen, random:<m>,<d>.
void parse_surrogate(const std::string& name, uhg::BuildOptions& opt) {
    using uhg::ExpanderGenerator;
    if (name == "petersen") {
        opt.surrogate = uhg::ExpanderSpec{10, 3, 2.0 * std::sqrt(2.0), 5,
                                          ExpanderGenerator::explicit_graph};
        opt.surrogate_graph = uhg::petersen_graph();
        return;
    }
    if (name.size() > 1 && name[0] == 'k') {
        int m = 0;
        try {
            m = std::stoi(name.substr(1));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad surrogate name: " + name);
        }
        if (m < 2) throw std::invalid_argument("surrogate k<m> needs m >= 2");
        // K_m: every nontrivial adjacency eigenvalue is exactly -1.
        opt.surrogate = uhg::ExpanderSpec{m, m - 1, 1.0, 0, ExpanderGenerator::complete};
        return;
    }
    if (name.rfind("random:", 0) == 0) {
        std::istringstream is(name.substr(7));
        int m = 0, d = 0;
        char comma = 0;
        if (!(is >> m >> comma >> d) || comma != ',')
            throw std::invalid_argument("surrogate random:<m>,<d> malformed: " + name);
        opt.surrogate = uhg::ExpanderSpec::ramanujan(m, d);
        return;
    }
    throw std::invalid_argument("unknown surrogate: " + name +
                                " (use k<m>, petersen, or random:<m>,<d>)");
}

uhg::FamilyParams parse_family(const std::string& s) {
    // format: r=3,n=8,delta=2 (any order)
    uhg::FamilyParams p{0, 0, 0};
    std::istringstream is(s);
    std::string item;
    while (std::getline(is, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("--family items must be key=value: " + item);
        std::string key = item.substr(0, eq);
        int val = 0;
        try {
            val = std::stoi(item.substr(eq + 1));
        } catch (const std::exception&) {
            throw std::invalid_argument("--family value not an integer: " + item);
        }
        if (key == "r")
            p.r = val;
        else if (key == "n")
            p.n = val;
        else if (key == "delta")
            p.delta = val;
        else
            throw std::invalid_argument("--family: unknown key " + key);
    }
    if (p.r == 0 || p.n == 0 || p.delta == 0)
        throw std::invalid_argument("--family must set r, n and delta");
    return p;
}

std::string one_line(const std::string& multi) {
    std::string out;
    for (char c : multi) {
        if (c == '\n') {
            if (!out.empty() && out.back() != ';') out += "; ";
        } else {
            out += c;
        }
    }
    while (!out.empty() && (out.back() == ' ' || out.back() == ';')) out.pop_back();
    return out;
}

// ---------------------------------------------------------------------------
// construct

struct ConstructArgs {
    std::string strategy;
    int r = 0, n = 0, delta = 2, r_prime = 2;
    std::uint64_t seed = 0;
    std::string surrogate = "k3";
    std::vector<int> product;  // k,r_indices,ell
    std::string out;
    ReportSink sink;
    long long candidate_budget = 0, vertex_budget = 0;
};

int cmd_construct(const ConstructArgs& a) {
    uhg::BuildOptions opt;
    parse_surrogate(a.surrogate, opt);
    if (!a.product.empty()) {
        if (a.product.size() != 3)
            throw std::invalid_argument("--product needs three values: k r_indices ell");
        opt.product = uhg::ProductParams{a.product[0], a.product[1], a.product[2]};
    }
    opt.seed = a.seed;
    opt.r_prime = a.r_prime;
    opt.candidate_budget = a.candidate_budget;
    opt.vertex_budget = a.vertex_budget;
    uhg::Strategy strategy = uhg::strategy_from_string(a.strategy);
    if (strategy == uhg::Strategy::delta2_layered && a.out.empty()) {
        // Structure-only report: the layered host is defined by a membership
        // test, and its explicit edge list is usually far beyond any edge
        // budget. Materialization happens only when --out asks for the file.
        uhg::FamilyParams{a.r, a.n, a.delta}.validate();
        uhg::Graph base = uhg::detail::surrogate_expander(opt);
        uhg::Graph prod = uhg::product_graph(base, opt.product, opt.vertex_budget);
        uhg::LayeredHypergraph lh = uhg::layered_hypergraph(a.n, a.r, prod);
        uhg::Report rep;
        rep.add("construction", "layered_host");
        rep.add("strategy", a.strategy);
        rep.add("r", a.r);
        rep.add("n", a.n);
        rep.add("delta", a.delta);
        rep.add("seed", a.seed);
        rep.add("path_layers", lh.t);
        rep.add("product_layer_vertices", prod.num_vertices());
        rep.add("product_layer_edges", prod.num_edges());
        rep.add("vertices", lh.num_vertices());
        rep.add("materialized", "false");
        a.sink.emit(rep);
        return kExitOk;
    }
    uhg::BuildResult res =
        uhg::build_universal(uhg::FamilyParams{a.r, a.n, a.delta}, strategy, opt);
    if (!a.out.empty()) write_file(a.out, uhg::to_string(res.hypergraph));
    a.sink.emit(res.report);
    return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
    std::string family, host, mode = "exhaustive";
    std::uint64_t seed = 0;
    bool seed_given = false;
    int samples = 100;
    long long node_budget = 0;
    ReportSink sink;
};

int cmd_verify(const VerifyArgs& a) {
    uhg::FamilyParams fam = parse_family(a.family);
    uhg::Hypergraph host = load_hypergraph(a.host);
    uhg::VerifyMode mode;
    if (a.mode == "exhaustive")
        mode = uhg::VerifyMode::exhaustive;
    else if (a.mode == "sampled")
        mode = uhg::VerifyMode::sampled;
    else
        throw std::invalid_argument("--mode must be exhaustive or sampled");
    if (mode == uhg::VerifyMode::sampled && !a.seed_given)
        throw std::invalid_argument("sampled verification needs an explicit --seed");

    uhg::VerifyReport vr =
        uhg::verify_universal(host, fam, mode, a.seed, a.samples, a.node_budget);

    uhg::Report rep;
    rep.add("command", "verify");
    rep.add("family_r", fam.r);
    rep.add("family_n", fam.n);
    rep.add("family_delta", fam.delta);
    rep.add("mode", a.mode);
    rep.add("tested", vr.tested);
    rep.add("embedded", vr.embedded);
    rep.add("inconclusive", vr.inconclusive);
    if (mode == uhg::VerifyMode::sampled) {
        rep.add("seed", vr.seed);
        auto [lo, hi] = vr.wilson_interval();
        rep.add("rate", vr.tested ? static_cast<double>(vr.embedded) / vr.tested : 0.0);
        rep.add("rate_ci_low", lo);
        rep.add("rate_ci_high", hi);
    }
    rep.add("failures", vr.failures.size());
    bool definite_failure = false;
    constexpr std::size_t kMaxWitnesses = 5;
    for (std::size_t i = 0; i < vr.failures.size(); ++i) {
        const auto& f = vr.failures[i];
        if (!f.inconclusive) definite_failure = true;
        if (i >= kMaxWitnesses) continue;
        std::string base = "failure_" + std::to_string(i);
        rep.add(base + "_index", f.index);
        rep.add(base + "_kind", f.inconclusive ? "budget" : "absent");
        rep.add(base + "_member", one_line(f.member));
    }
    if (vr.failures.size() > kMaxWitnesses)
        rep.add("failures_omitted", vr.failures.size() - kMaxWitnesses);
    rep.add("verified", definite_failure ? "false" : "true");
    a.sink.emit(rep);
    return definite_failure ? kExitVerifyFailed : kExitOk;
}

// ---------------------------------------------------------------------------
// decompose

struct DecomposeArgs {
    std::string kind, in, out;
    long long node_budget = 0;
    ReportSink sink;
};

int cmd_decompose(const DecomposeArgs& a) {
    uhg::Hypergraph h = load_hypergraph(a.in);
    uhg::Report rep;
    rep.add("command", "decompose");
    rep.add("kind", a.kind);
    rep.add("input_vertices", h.num_vertices());
    rep.add("input_edges", h.num_edges());
    if (a.kind == "p3") {
        uhg::P3HitDecomposition d = uhg::p3_hitting_decomposition(h, a.node_budget);
        bool cert_ok = uhg::validate_hit_certificate(d.hitting_graph, h, d.certificate);
        rep.add("hitting_vertices", d.hitting_graph.num_vertices());
        rep.add("hitting_edges", d.hitting_graph.num_edges());
        rep.add("parts", d.parts.size());
        for (std::size_t i = 0; i < d.parts.size(); ++i) {
            auto cls = uhg::classify_thin(d.parts[i]);
            rep.add("part_" + std::to_string(i) + "_edges", d.parts[i].num_edges());
            rep.add("part_" + std::to_string(i) + "_thin",
                    cls.kind == uhg::ThinKind::thin
                        ? "thin"
                        : (cls.kind == uhg::ThinKind::augmented_thin ? "augmented_thin"
                                                                     : "neither"));
        }
        rep.add("matching_size", d.matching.size());
        rep.add("deleted_size", d.deleted_set.size());
        rep.add("certificate_valid", cert_ok ? "true" : "false");
        if (!a.out.empty()) {
            std::ostringstream os;
            uhg::write_graph(os, d.hitting_graph);
            write_file(a.out, os.str());
        }
        a.sink.emit(rep);
        return cert_ok ? kExitOk : kExitVerifyFailed;
    }
    if (a.kind == "layers") {
        uhg::LayerDecomposition ld = uhg::layer_decompose(h, a.node_budget);
        // layer_decompose re-checks its own postconditions before returning
        rep.add("levels", ld.layers.size());
        for (std::size_t i = 0; i < ld.layers.size(); ++i) {
            std::string base = "level_" + std::to_string(i);
            rep.add(base + "_edges", ld.layers[i].num_edges());
            std::ostringstream cs;
            for (std::size_t j = 0; j < ld.classes[i].size(); ++j)
                cs << (j ? " " : "") << ld.classes[i][j];
            rep.add(base + "_class", cs.str());
        }
        rep.add("certificate_valid", "true");
        if (!a.out.empty()) write_file(a.out, ld.to_text());
        a.sink.emit(rep);
        return kExitOk;
    }
    throw std::invalid_argument("decompose kind must be p3 or layers");
}

// ---------------------------------------------------------------------------
// hit

struct HitArgs {
    std::string in, mode = "path", out, cert;
    int r_prime = 2;
    ReportSink sink;
};

int cmd_hit(const HitArgs& a) {
    uhg::Hypergraph h = load_hypergraph(a.in);
    uhg::Report rep;
    rep.add("command", "hit");
    rep.add("mode", a.mode);
    rep.add("input_vertices", h.num_vertices());
    rep.add("input_edges", h.num_edges());
    bool cert_ok;
    std::string out_text, cert_text;
    if (a.mode == "path") {
        auto [g, cert] = uhg::hit_matching_path(h);
        cert_ok = uhg::validate_hit_certificate(g, h, cert);
        rep.add("output_kind", "graph");
        rep.add("output_vertices", g.num_vertices());
        rep.add("output_edges", g.num_edges());
        rep.add("output_max_degree", g.max_degree());
        std::ostringstream os;
        uhg::write_graph(os, g);
        out_text = os.str();
        std::ostringstream cs;
        uhg::write_hit_certificate(cs, h, cert);
        cert_text = cs.str();
    } else if (a.mode == "matching") {
        auto [hg, cert] = uhg::hit_perfect_matching(h, a.r_prime);
        cert_ok = uhg::validate_hit_certificate(uhg::HypergraphView(hg), h, cert);
        rep.add("output_kind", "hypergraph");
        rep.add("r_prime", a.r_prime);
        rep.add("output_vertices", hg.num_vertices());
        rep.add("output_edges", hg.num_edges());
        out_text = uhg::to_string(hg);
        std::ostringstream cs;
        uhg::write_hit_certificate(cs, h, cert);
        cert_text = cs.str();
    } else {
        throw std::invalid_argument("--mode must be path or matching");
    }
    rep.add("certificate_valid", cert_ok ? "true" : "false");
    if (!a.out.empty()) write_file(a.out, out_text);
    if (!a.cert.empty()) write_file(a.cert, cert_text);
    a.sink.emit(rep);
    return cert_ok ? kExitOk : kExitVerifyFailed;
}

// ---------------------------------------------------------------------------
// expand

struct ExpandArgs {
    std::string in, pattern = "matching", out;
    int r = 0, r_prime = 2;
    long long candidate_budget = 0;
    ReportSink sink;
};

int cmd_expand(const ExpandArgs& a) {
    uhg::Hypergraph host = load_hypergraph(a.in);
    uhg::Hypergraph out;
    uhg::Report rep;
    rep.add("command", "expand");
    rep.add("pattern", a.pattern);
    rep.add("r", a.r);
    rep.add("input_vertices", host.num_vertices());
    rep.add("input_edges", host.num_edges());
    if (a.pattern == "uniform_matching") {
        rep.add("r_prime", a.r_prime);
        out = uhg::expand(host, uhg::uniform_matching_pattern(a.r, a.r_prime), a.r,
                          a.candidate_budget);
    } else {
        uhg::Graph g = as_graph(host, "expand");
        uhg::Graph pat;
        if (a.pattern == "matching")
            pat = uhg::matching_pattern(a.r);
        else if (a.pattern == "p3")
            pat = uhg::p3_pattern();
        else if (a.pattern == "matching_p3")
            pat = uhg::matching_plus_p3_pattern(a.r);
        else
            throw std::invalid_argument(
                "--pattern must be matching, p3, matching_p3 or uniform_matching");
        out = uhg::expand(g, pat, a.r, a.candidate_budget);
    }
    rep.add("output_vertices", out.num_vertices());
    rep.add("output_edges", out.num_edges());
    if (!a.out.empty()) write_file(a.out, uhg::to_string(out));
    a.sink.emit(rep);
    return kExitOk;
}

// ---------------------------------------------------------------------------
// scaling

struct ScalingArgs {
    ConstructArgs base;  // strategy, r, delta, seed, surrogate, budgets
    std::vector<int> n_list;
};

int cmd_scaling(const ScalingArgs& a) {
    if (a.n_list.size() < 3)
        throw std::invalid_argument("--n-list needs at least 3 values");
    uhg::BuildOptions opt;
    parse_surrogate(a.base.surrogate, opt);
    opt.seed = a.base.seed;
    opt.r_prime = a.base.r_prime;
    opt.candidate_budget = a.base.candidate_budget;
    opt.vertex_budget = a.base.vertex_budget;
    uhg::Strategy strat = uhg::strategy_from_string(a.base.strategy);
    std::vector<std::pair<long long, long long>> points;
    for (int n : a.n_list) {
        uhg::BuildResult res =
            uhg::build_universal(uhg::FamilyParams{a.base.r, n, a.base.delta}, strat, opt);
        points.emplace_back(n, static_cast<long long>(res.hypergraph.num_edges()));
    }
    double target = static_cast<double>(a.base.r) -
                    static_cast<double>(a.base.r) / a.base.delta;
    uhg::ScalingFit fit = uhg::scaling_fit(points, target);
    uhg::Report rep;
    rep.add("command", "scaling");
    rep.add("strategy", a.base.strategy);
    rep.add("r", a.base.r);
    rep.add("delta", a.base.delta);
    rep.add("seed", a.base.seed);
    rep.add("points", points.size());
    for (auto [n, e] : points)
        rep.add("edges_n" + std::to_string(n), e);
    rep.add("fitted_exponent", fit.fitted_exponent);
    rep.add("target_exponent", fit.target_exponent);
    rep.add("max_abs_residual", fit.max_abs_residual);
    a.base.sink.emit(rep);
    return kExitOk;
}

// ---------------------------------------------------------------------------
// aa

struct AaArgs {
    long long m = 0;
    int seeds = 0, r = 3;
    std::uint64_t seed = 0;
    ReportSink sink;
};

int cmd_aa(const AaArgs& a) {
    if (a.r != 3)
        throw std::invalid_argument("aa: only r = 3 (triangle counting) is supported");
    if (a.seeds < 1) throw std::invalid_argument("aa: need --seeds >= 1");
    uhg::Report rep;
    rep.add("command", "aa");
    rep.add("m", a.m);
    rep.add("seeds", a.seeds);
    rep.add("r", a.r);
    double lg = std::log2(static_cast<double>(a.m));
    double bound = 3.0 * std::pow(2.0, 36.0) * std::pow(4.0 * a.m / lg, 3.0);
    long double sum_tri = 0;
    long long max_tri = 0;
    long double sum_edges = 0, sum_expected = 0;
    int layers_reported = 0;
    for (int s = 0; s < a.seeds; ++s) {
        uhg::AAParams p = uhg::AAParams::from_m(a.m, a.seed + static_cast<std::uint64_t>(s));
        uhg::AAGraph g = uhg::alon_asodi_graph(p);
        if (s == 0) {
            rep.add("k", p.k);
            for (std::size_t i = 0; i < p.layer_sizes.size(); ++i)
                rep.add("layer_" + std::to_string(i) + "_size", p.layer_sizes[i]);
            rep.add("vertices", g.num_vertices());
            layers_reported = static_cast<int>(p.layer_sizes.size());
        }
        long long tri = g.triangle_count();
        sum_tri += tri;
        max_tri = std::max(max_tri, tri);
        for (int i = 0; i < layers_reported; ++i)
            for (int j = i; j < layers_reported; ++j) {
                if (std::max(i, j) <= 3 || i == 0) continue;  // deterministic region
                sum_edges += g.pair_edge_count(i, j);
                sum_expected +=
                    static_cast<long double>(g.pair_possible(i, j)) * g.pair_probability(i, j);
            }
    }
    rep.add("mean_triangles", static_cast<double>(sum_tri / a.seeds));
    rep.add("max_triangles", max_tri);
    rep.add("triangle_bound", bound);
    rep.add("triangle_bound_ok", static_cast<double>(sum_tri / a.seeds) <= bound ? "true"
                                                                                 : "false");
    rep.add("random_edges_mean", static_cast<double>(sum_edges / a.seeds));
    rep.add("random_edges_expected", static_cast<double>(sum_expected / a.seeds));
    a.sink.emit(rep);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"universal hypergraph toolkit"};
    app.require_subcommand(1);

    ConstructArgs ca;
    VerifyArgs va;
    DecomposeArgs da;
    HitArgs ha;
    ExpandArgs ea;
    ScalingArgs sa;
    AaArgs aa;

    try {
        ca.candidate_budget = env_budget("UHG_CANDIDATE_BUDGET", 5'000'000);
        ca.vertex_budget = env_budget("UHG_VERTEX_BUDGET", 20'000);
        va.node_budget = env_budget("UHG_NODE_BUDGET", 2'000'000);
        da.node_budget = env_budget("UHG_NODE_BUDGET", 50'000'000);
        ea.candidate_budget = env_budget("UHG_CANDIDATE_BUDGET", 5'000'000);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    sa.base = ca;

    auto* construct = app.add_subcommand("construct", "build a universal host hypergraph");
    construct->add_option("--strategy", ca.strategy, "construction strategy")->required();
    construct->add_option("--r", ca.r, "target uniformity")->required();
    construct->add_option("--n", ca.n, "family vertex count")->required();
    construct->add_option("--delta", ca.delta, "family max degree");
    construct->add_option("--seed", ca.seed, "random seed");
    construct->add_option("--surrogate", ca.surrogate,
                          "surrogate expander: k<m>, petersen, random:<m>,<d>");
    construct->add_option("--r-prime", ca.r_prime, "inner uniformity for divisor_composition");
    construct->add_option("--product", ca.product,
                          "tuple product parameters: k r_indices ell")->expected(3);
    construct->add_option("--candidate-budget", ca.candidate_budget, "subset enumeration cap");
    construct->add_option("--vertex-budget", ca.vertex_budget, "product materialization cap");
    construct->add_option("--out", ca.out, "write the hypergraph to this file");
    ca.sink.attach(construct);

    auto* verify = app.add_subcommand("verify", "check universality of a host file");
    verify->add_option("--family", va.family, "target family, e.g. r=2,n=8,delta=2")->required();
    verify->add_option("--host", va.host, "host hypergraph file")->required();
    verify->add_option("--mode", va.mode, "exhaustive or sampled");
    auto* seed_opt = verify->add_option("--seed", va.seed, "random seed (sampled mode)");
    verify->add_option("--samples", va.samples, "sample count (sampled mode)");
    verify->add_option("--node-budget", va.node_budget, "embedding search node cap");
    va.sink.attach(verify);

    auto* decompose = app.add_subcommand("decompose", "run a decomposition pipeline");
    decompose->add_option("kind", da.kind, "p3 or layers")->required();
    decompose->add_option("--in", da.in, "input hypergraph file")->required();
    decompose->add_option("--out", da.out, "write the primary artifact to this file");
    decompose->add_option("--node-budget", da.node_budget, "search node cap");
    da.sink.attach(decompose);

    auto* hit = app.add_subcommand("hit", "build a hitting host with certificate");
    hit->add_option("--in", ha.in, "input hypergraph file")->required();
    hit->add_option("--mode", ha.mode, "path (matching + P_3) or matching (r'-blocks)");
    hit->add_option("--r-prime", ha.r_prime, "block size for matching mode");
    hit->add_option("--out", ha.out, "write the hitting host to this file");
    hit->add_option("--cert", ha.cert, "write the placement certificate to this file");
    ha.sink.attach(hit);

    auto* expand = app.add_subcommand("expand", "expand a host along a hitting pattern");
    expand->add_option("--in", ea.in, "input host file")->required();
    expand->add_option("--pattern", ea.pattern,
                       "matching, p3, matching_p3 or uniform_matching");
    expand->add_option("--r", ea.r, "output uniformity")->required();
    expand->add_option("--r-prime", ea.r_prime, "block size for uniform_matching");
    expand->add_option("--candidate-budget", ea.candidate_budget, "subset enumeration cap");
    expand->add_option("--out", ea.out, "write the expanded hypergraph to this file");
    ea.sink.attach(expand);

    auto* scaling = app.add_subcommand("scaling", "edge-count scaling across n");
    scaling->add_option("--strategy", sa.base.strategy, "construction strategy")->required();
    scaling->add_option("--r", sa.base.r, "target uniformity")->required();
    scaling->add_option("--delta", sa.base.delta, "family max degree");
    scaling->add_option("--seed", sa.base.seed, "random seed");
    scaling->add_option("--surrogate", sa.base.surrogate, "surrogate expander name");
    scaling->add_option("--r-prime", sa.base.r_prime, "inner uniformity");
    scaling->add_option("--n-list", sa.n_list, "family sizes to construct")
        ->required()
        ->delimiter(',');
    sa.base.sink.attach(scaling);

    auto* aacmd = app.add_subcommand("aa", "layered random graph Monte Carlo summary");
    aacmd->add_option("--m", aa.m, "target clique-count parameter m")->required();
    aacmd->add_option("--seeds", aa.seeds, "number of independent seeds")->required();
    aacmd->add_option("--r", aa.r, "clique size (only 3 supported)");
    aacmd->add_option("--seed", aa.seed, "base seed (instances use seed .. seed+seeds-1)");
    aa.sink.attach(aacmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        va.seed_given = seed_opt->count() > 0;
        if (construct->parsed()) return cmd_construct(ca);
        if (verify->parsed()) return cmd_verify(va);
        if (decompose->parsed()) return cmd_decompose(da);
        if (hit->parsed()) return cmd_hit(ha);
        if (expand->parsed()) return cmd_expand(ea);
        if (scaling->parsed()) return cmd_scaling(sa);
        if (aacmd->parsed()) return cmd_aa(aa);
    } catch (const uhg::budget_error& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const uhg::generation_error& e) {
        std::cerr << "generation error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const uhg::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
