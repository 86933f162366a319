#ifndef UHG_UNIVERSAL_HPP
#define UHG_UNIVERSAL_HPP

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "uhg/errors.hpp"
#include "uhg/expander.hpp"
#include "uhg/family.hpp"
#include "uhg/hitting.hpp"
#include "uhg/layered.hpp"
#include "uhg/product.hpp"

namespace uhg {

/// Flat ordered key-value report; text form is one `key = value` per line,
/// JSON form a single object with string values.
struct Report {
    std::vector<std::pair<std::string, std::string>> items;

    void add(const std::string& key, const std::string& value) { items.emplace_back(key, value); }
    template <class T>
    void add(const std::string& key, const T& value) {
        std::ostringstream os;
        os << value;
        items.emplace_back(key, os.str());
    }

    std::string get(const std::string& key) const {
        for (const auto& [k, v] : items)
            if (k == key) return v;
        return {};
    }

    std::string to_text() const {
        std::ostringstream os;
        for (const auto& [k, v] : items) os << k << " = " << v << "\n";
        return os.str();
    }

    std::string to_json() const {
        auto escape = [](const std::string& s) {
            std::string out;
            for (char ch : s) {
                if (ch == '"' || ch == '\\') out.push_back('\\');
                out.push_back(ch);
            }
            return out;
        };
        std::ostringstream os;
        os << "{";
        for (std::size_t i = 0; i < items.size(); ++i) {
            if (i) os << ", ";
            os << '"' << escape(items[i].first) << "\": \"" << escape(items[i].second) << '"';
        }
        os << "}";
        return os.str();
    }
};

enum class Strategy {
    even_r_matching,       // even r: graph host expanded on a perfect matching
    divisor_composition,   // r' | r: r'-uniform host expanded on an r'-uniform matching
    odd_r_path,            // odd r: graph host for delta' = ceil((r+1)delta/r), matching + P_3
    delta2_product,        // r = 3, delta = 2: tuple product expanded on P_3
    delta2_layered,        // odd r >= 5, delta = 2: layered host
};

inline Strategy strategy_from_string(const std::string& s) {
    if (s == "even_r_matching") return Strategy::even_r_matching;
    if (s == "divisor_composition") return Strategy::divisor_composition;
    if (s == "odd_r_path") return Strategy::odd_r_path;
    if (s == "delta2_product") return Strategy::delta2_product;
    if (s == "delta2_layered") return Strategy::delta2_layered;
    throw std::invalid_argument("unknown strategy: " + s);
}

inline std::string to_string(Strategy s) {
    switch (s) {
        case Strategy::even_r_matching: return "even_r_matching";
        case Strategy::divisor_composition: return "divisor_composition";
        case Strategy::odd_r_path: return "odd_r_path";
        case Strategy::delta2_product: return "delta2_product";
        case Strategy::delta2_layered: return "delta2_layered";
    }
    return "?";
}

struct BuildOptions {
    ExpanderSpec surrogate = ExpanderSpec::ramanujan(3, 2, 0, ExpanderGenerator::complete);
    Graph surrogate_graph = Graph(0, {});  // used when surrogate.generator == explicit_graph
    ProductParams product = ProductParams{4, 3, 8};
    std::uint64_t seed = 0;
    int r_prime = 2;                          // used by divisor_composition
    long long candidate_budget = 5'000'000;   // r-subset enumeration in expand
    long long vertex_budget = 20'000;         // product materialization
};

struct BuildResult {
    Hypergraph hypergraph;
    Report report;
};

namespace detail {

inline Graph surrogate_expander(const BuildOptions& opt) {
    if (opt.surrogate.generator == ExpanderGenerator::explicit_graph)
        return make_expander(opt.surrogate, opt.surrogate_graph);
    return make_expander(opt.surrogate, opt.seed);
}

/// Desk-scale stand-in for a graph-universal host: the squared cycle for
/// max degree 2, otherwise a tuple product over the surrogate expander.
inline Graph universal_base_graph(int n, int delta, const BuildOptions& opt, Report& rep) {
    if (delta == 2) {
        rep.add("base", "cycle_power_2");
        rep.add("base_n", n);
        return build_cycle_power(n, 2);
    }
    rep.add("base", "surrogate_product");
    rep.add("surrogate_m", opt.surrogate.m);
    rep.add("surrogate_d", opt.surrogate.d);
    Graph base = surrogate_expander(opt);
    return product_graph(base, opt.product, opt.vertex_budget);
}

}  // namespace detail

/// Dispatches the construction strategies for F^(r)(n, delta)-universal
/// candidates and reports the achieved counts next to the theoretical target
/// exponent r - r/delta.
inline BuildResult build_universal(const FamilyParams& p, Strategy strategy,
                                   const BuildOptions& opt = BuildOptions{}) {
    p.validate();
    Report rep;
    rep.add("construction", "universal_hypergraph");
    rep.add("strategy", to_string(strategy));
    rep.add("r", p.r);
    rep.add("n", p.n);
    rep.add("delta", p.delta);
    rep.add("seed", opt.seed);
    Hypergraph out;

    switch (strategy) {
        case Strategy::even_r_matching: {
            if (p.r % 2 != 0)
                throw std::invalid_argument("even_r_matching: r must be even");
            Graph base = detail::universal_base_graph(p.n, p.delta, opt, rep);
            rep.add("base_edges", base.num_edges());
            // r = 2 is the graph case: the base host is already the answer.
            out = p.r == 2 ? Hypergraph::from_graph(base)
                           : expand(base, matching_pattern(p.r), p.r, opt.candidate_budget);
            break;
        }
        case Strategy::divisor_composition: {
            int rp = opt.r_prime;
            if (rp < 2 || rp >= p.r || p.r % rp != 0)
                throw std::invalid_argument(
                    "divisor_composition: r_prime must be a proper divisor of r, >= 2");
            rep.add("r_prime", rp);
            if (rp == 2) {
                Graph base = detail::universal_base_graph(p.n, p.delta, opt, rep);
                rep.add("base_edges", base.num_edges());
                out = expand(base, matching_pattern(p.r), p.r, opt.candidate_budget);
            } else {
                Strategy inner =
                    rp % 2 == 0 ? Strategy::even_r_matching : Strategy::odd_r_path;
                BuildOptions inner_opt = opt;
                auto base = build_universal(FamilyParams{rp, p.n, p.delta}, inner, inner_opt);
                rep.add("base_uniformity", rp);
                rep.add("base_edges", base.hypergraph.num_edges());
                out = expand(base.hypergraph, uniform_matching_pattern(p.r, rp), p.r,
                             opt.candidate_budget);
            }
            break;
        }
        case Strategy::odd_r_path: {
            if (p.r % 2 == 0) throw std::invalid_argument("odd_r_path: r must be odd");
            int delta_prime = ((p.r + 1) * p.delta + p.r - 1) / p.r;  // ceil
            rep.add("delta_prime", delta_prime);
            Graph base = detail::universal_base_graph(p.n, delta_prime, opt, rep);
            rep.add("base_edges", base.num_edges());
            out = expand(base, matching_plus_p3_pattern(p.r), p.r, opt.candidate_budget);
            break;
        }
        case Strategy::delta2_product: {
            if (p.r != 3 || p.delta != 2)
                throw std::invalid_argument("delta2_product: applies to r = 3, delta = 2 only");
            Graph base = detail::surrogate_expander(opt);
            rep.add("surrogate_m", opt.surrogate.m);
            rep.add("surrogate_d", opt.surrogate.d);
            Graph prod = product_graph(base, opt.product, opt.vertex_budget);
            rep.add("product_vertices", prod.num_vertices());
            rep.add("product_edges", prod.num_edges());
            out = expand(prod, p3_pattern(), 3, opt.candidate_budget);
            break;
        }
        case Strategy::delta2_layered: {
            if (p.delta != 2 || p.r < 5 || p.r % 2 == 0)
                throw std::invalid_argument("delta2_layered: applies to odd r >= 5, delta = 2");
            Graph base = detail::surrogate_expander(opt);
            LayeredHypergraph lh = layered_hypergraph(
                p.n, p.r, product_graph(base, opt.product, opt.vertex_budget));
            rep.add("path_layers", lh.t);
            rep.add("product_layer_vertices", lh.layers.back().num_vertices());
            out = lh.materialize(opt.candidate_budget);
            break;
        }
        default: {
            std::ostringstream os;
            os << "no construction for r = " << p.r << ", delta = " << p.delta
               << ": matching the lower bound for odd r with r not dividing delta is open";
            throw std::invalid_argument(os.str());
        }
    }

    rep.add("vertices", out.num_vertices());
    rep.add("edges", out.num_edges());
    rep.add("predicted_exponent",
            static_cast<double>(p.r) - static_cast<double>(p.r) / p.delta);
    return BuildResult{std::move(out), std::move(rep)};
}

}  // namespace uhg

#endif
