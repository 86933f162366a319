#ifndef UHG_VERIFY_HPP
#define UHG_VERIFY_HPP

#include <chrono>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "uhg/family.hpp"
#include "uhg/io.hpp"
#include "uhg/subiso.hpp"

namespace uhg {

enum class VerifyMode { exhaustive, sampled };

/// Result of checking a host against a family F^(r)(n,delta).
///
/// In exhaustive mode a nonzero failure list is a definitive non-universality
/// witness.  In sampled mode the report only states an empirical rate; it
/// never claims universality.  Budget-exhausted embedding attempts are kept
/// apart from proven-absent ones.
struct VerifyReport {
    VerifyMode mode = VerifyMode::exhaustive;
    long long tested = 0;
    long long embedded = 0;
    long long inconclusive = 0;  // embedding search hit its node budget
    std::uint64_t seed = 0;      // sampled mode only

    struct Failure {
        long long index;      // member index in enumeration/sampling order
        std::string member;   // hypergraph text format
        bool inconclusive;    // true if budget-exhausted rather than proven absent
    };
    std::vector<Failure> failures;

    std::vector<double> timings_ms;  // per-member embedding time
    double total_ms = 0.0;

    bool all_embedded() const { return embedded == tested; }

    /// Wilson score interval for the embed rate (sampled mode).
    std::pair<double, double> wilson_interval(double z = 1.96) const {
        if (tested == 0) return {0.0, 1.0};
        double n = static_cast<double>(tested);
        double p = static_cast<double>(embedded) / n;
        double denom = 1.0 + z * z / n;
        double center = (p + z * z / (2 * n)) / denom;
        double half = (z / denom) * std::sqrt(p * (1 - p) / n + z * z / (4 * n * n));
        return {std::max(0.0, center - half), std::min(1.0, center + half)};
    }

    std::string to_text() const {
        std::ostringstream os;
        os << "mode=" << (mode == VerifyMode::exhaustive ? "exhaustive" : "sampled") << "\n";
        os << "tested=" << tested << "\n";
        os << "embedded=" << embedded << "\n";
        os << "inconclusive=" << inconclusive << "\n";
        if (mode == VerifyMode::sampled) {
            os << "seed=" << seed << "\n";
            auto [lo, hi] = wilson_interval();
            os << "rate=" << (tested ? static_cast<double>(embedded) / tested : 0.0) << "\n";
            os << "rate_ci_low=" << lo << "\n";
            os << "rate_ci_high=" << hi << "\n";
        }
        os << "total_ms=" << total_ms << "\n";
        os << "failures=" << failures.size() << "\n";
        for (const auto& f : failures) {
            os << "failure_index=" << f.index
               << (f.inconclusive ? " (budget)" : " (absent)") << "\n";
            os << f.member;  // inline hypergraph text block
        }
        return os.str();
    }
};

/// Check that `big` contains every member of F^(r)(n,delta) (exhaustive), or
/// estimate the containment rate from `sample_count` sampled members.
/// Members are processed in a fixed order; aggregation is by member index, so
/// the report does not depend on scheduling.
inline VerifyReport verify_universal(const HostView& big, const FamilyParams& p,
                                     VerifyMode mode, std::uint64_t seed = 0,
                                     int sample_count = 100,
                                     long long node_budget = 2'000'000,
                                     const EnumBudget& enum_budget = {}) {
    p.validate();
    VerifyReport rep;
    rep.mode = mode;
    rep.seed = seed;

    std::vector<Hypergraph> members;
    if (mode == VerifyMode::exhaustive) {
        members = enumerate_family_vec(p, enum_budget);
    } else {
        members = sample_family(p, seed, sample_count);
    }

    auto t0 = std::chrono::steady_clock::now();
    for (std::size_t i = 0; i < members.size(); ++i) {
        auto s0 = std::chrono::steady_clock::now();
        EmbedResult res = embed_hypergraph(members[i], big, node_budget);
        auto s1 = std::chrono::steady_clock::now();
        rep.timings_ms.push_back(std::chrono::duration<double, std::milli>(s1 - s0).count());
        ++rep.tested;
        if (res.status == EmbedStatus::found) {
            ++rep.embedded;
        } else {
            bool inconclusive = res.status == EmbedStatus::budget_exhausted;
            if (inconclusive) ++rep.inconclusive;
            rep.failures.push_back({static_cast<long long>(i),
                                    to_string(members[i]), inconclusive});
        }
    }
    auto t1 = std::chrono::steady_clock::now();
    rep.total_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return rep;
}

inline VerifyReport verify_universal(const Hypergraph& big, const FamilyParams& p,
                                     VerifyMode mode, std::uint64_t seed = 0,
                                     int sample_count = 100,
                                     long long node_budget = 2'000'000,
                                     const EnumBudget& enum_budget = {}) {
    HypergraphView view(big);
    return verify_universal(view, p, mode, seed, sample_count, node_budget, enum_budget);
}

/// Exact r-clique count by ordered extension: cliques are enumerated with
/// vertices in increasing order, extending only through later neighbors.
inline long long count_cliques(const Graph& g, int r,
                               long long node_budget = 2'000'000'000) {
    if (r < 1) throw std::invalid_argument("count_cliques: r >= 1 required");
    if (r == 1) return g.num_vertices();
    if (r == 2) return g.num_edges();

    int n = g.num_vertices();
    // later[v] = neighbors of v with larger index, sorted
    std::vector<std::vector<Vertex>> later(n);
    for (auto [u, v] : g.edges()) later[u].push_back(v);

    long long count = 0;
    long long nodes = 0;
    std::vector<Vertex> common;
    // cand: vertices > all clique members, adjacent to all of them
    std::function<void(const std::vector<Vertex>&, int)> rec =
        [&](const std::vector<Vertex>& cand, int depth) {
            if (++nodes > node_budget)
                throw budget_error("count_cliques: node budget exceeded", nodes);
            if (depth == r - 1) {
                count += static_cast<long long>(cand.size());
                return;
            }
            for (std::size_t i = 0; i < cand.size(); ++i) {
                Vertex v = cand[i];
                common.clear();
                std::set_intersection(cand.begin() + i + 1, cand.end(),
                                      later[v].begin(), later[v].end(),
                                      std::back_inserter(common));
                std::vector<Vertex> next = common;
                rec(next, depth + 1);
            }
        };
    for (Vertex v = 0; v < n; ++v) rec(later[v], 1);
    return count;
}

/// Log-log least-squares fit of edge counts against vertex counts.
struct ScalingFit {
    std::vector<std::pair<long long, long long>> points;  // (n, edges)
    double fitted_exponent = 0.0;
    double intercept = 0.0;  // log-space
    double target_exponent = 0.0;
    std::vector<double> residuals;  // per point, log-space
    double max_abs_residual = 0.0;

    std::string to_text() const {
        std::ostringstream os;
        os << "points=" << points.size() << "\n";
        for (auto [n, e] : points) os << "point=" << n << "," << e << "\n";
        os << "fitted_exponent=" << fitted_exponent << "\n";
        os << "target_exponent=" << target_exponent << "\n";
        os << "max_abs_residual=" << max_abs_residual << "\n";
        return os.str();
    }
};

inline ScalingFit scaling_fit(const std::vector<std::pair<long long, long long>>& points,
                              double target_exponent = 0.0) {
    if (points.size() < 3)
        throw std::invalid_argument("scaling_fit: need at least 3 points");
    for (auto [n, e] : points)
        if (n <= 0 || e <= 0)
            throw std::invalid_argument("scaling_fit: all values must be positive");
    {
        std::vector<long long> ns;
        for (auto [n, e] : points) ns.push_back(n);
        std::sort(ns.begin(), ns.end());
        if (std::adjacent_find(ns.begin(), ns.end()) != ns.end())
            throw std::invalid_argument("scaling_fit: duplicate n values");
    }

    ScalingFit fit;
    fit.points = points;
    fit.target_exponent = target_exponent;

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    double m = static_cast<double>(points.size());
    for (auto [n, e] : points) {
        double x = std::log(static_cast<double>(n));
        double y = std::log(static_cast<double>(e));
        sx += x; sy += y; sxx += x * x; sxy += x * y;
    }
    double denom = m * sxx - sx * sx;
    fit.fitted_exponent = (m * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.fitted_exponent * sx) / m;

    for (auto [n, e] : points) {
        double x = std::log(static_cast<double>(n));
        double y = std::log(static_cast<double>(e));
        double resid = y - (fit.intercept + fit.fitted_exponent * x);
        fit.residuals.push_back(resid);
        fit.max_abs_residual = std::max(fit.max_abs_residual, std::abs(resid));
    }
    return fit;
}

}  // namespace uhg

#endif
