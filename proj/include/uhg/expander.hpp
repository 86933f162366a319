#ifndef UHG_EXPANDER_HPP
#define UHG_EXPANDER_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "uhg/errors.hpp"
#include "uhg/graph.hpp"
#include "uhg/rng.hpp"

namespace uhg {

/// Largest absolute value among the nontrivial adjacency eigenvalues, i.e.
/// all eigenvalues except one copy of the largest. For a connected d-regular
/// graph the excluded eigenvalue is d.
inline double second_eigenvalue(const Graph& g) {
    int n = g.num_vertices();
    if (n == 0) throw std::invalid_argument("second_eigenvalue: empty graph");
    if (n == 1) return 0.0;
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (const auto& [u, v] : g.edges()) {
        a(u, v) = 1.0;
        a(v, u) = 1.0;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
    const auto& ev = solver.eigenvalues();  // ascending
    double lambda = std::abs(ev(0));
    for (int i = 1; i + 1 < n; ++i) lambda = std::max(lambda, std::abs(ev(i)));
    return lambda;
}

/// Length of a shortest cycle; infinity (INT_MAX) for forests.
inline int girth(const Graph& g) {
    int best = std::numeric_limits<int>::max();
    int n = g.num_vertices();
    std::vector<int> dist(n), parent(n);
    for (Vertex s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        dist[s] = 0;
        std::vector<Vertex> queue = {s};
        for (std::size_t i = 0; i < queue.size(); ++i) {
            Vertex v = queue[i];
            if (2 * dist[v] >= best) break;
            for (Vertex w : g.neighbors(v)) {
                if (dist[w] == -1) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                } else if (w != parent[v]) {
                    // Cycle through s of length dist[v] + dist[w] + 1 (or
                    // shorter when the meet is off s; still an upper bound
                    // that is tight for some start vertex).
                    best = std::min(best, dist[v] + dist[w] + 1);
                }
            }
        }
    }
    return best;
}

enum class ExpanderGenerator { complete, random_regular, explicit_graph };

/// Target parameters for a small verified spectral expander. The paper-scale
/// regime (d > 720) is unreachable here; instances are accepted only after a
/// numeric eigenvalue check and a girth check.
struct ExpanderSpec {
    int m = 0;                                   // vertex count
    int d = 0;                                   // degree
    double lambda_bound = 0.0;                   // max allowed nontrivial |eigenvalue|
    int girth_bound = 0;                         // min allowed girth (0 = no constraint)
    ExpanderGenerator generator = ExpanderGenerator::random_regular;

    static ExpanderSpec ramanujan(int m, int d, int girth_bound = 0,
                                  ExpanderGenerator gen = ExpanderGenerator::random_regular) {
        return ExpanderSpec{m, d, 2.0 * std::sqrt(std::max(0, d - 1)), girth_bound, gen};
    }
};

struct ExpanderCheck {
    bool ok = false;
    double lambda = 0.0;
    int girth = 0;
    std::string violation;
};

inline ExpanderCheck check_expander(const Graph& g, const ExpanderSpec& spec) {
    ExpanderCheck c;
    if (g.num_vertices() != spec.m) {
        c.violation = "vertex count mismatch";
        return c;
    }
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (g.degree(v) != spec.d) {
            c.violation = "not regular of the requested degree";
            return c;
        }
    c.lambda = second_eigenvalue(g);
    c.girth = girth(g);
    if (c.lambda > spec.lambda_bound + 1e-9) {
        std::ostringstream os;
        os << "nontrivial eigenvalue " << c.lambda << " exceeds bound " << spec.lambda_bound;
        c.violation = os.str();
        return c;
    }
    if (spec.girth_bound > 0 && c.girth < spec.girth_bound) {
        std::ostringstream os;
        os << "girth " << c.girth << " below bound " << spec.girth_bound;
        c.violation = os.str();
        return c;
    }
    c.ok = true;
    return c;
}

namespace detail {

/// Configuration-model draw of a d-regular simple graph; returns nullopt when
/// the pairing produces a loop or a repeated edge.
inline std::optional<Graph> random_regular_attempt(int m, int d, Rng& rng) {
    std::vector<int> stubs;
    stubs.reserve(static_cast<std::size_t>(m) * d);
    for (int v = 0; v < m; ++v)
        for (int i = 0; i < d; ++i) stubs.push_back(v);
    rng.shuffle(stubs);
    std::vector<Edge> es;
    es.reserve(stubs.size() / 2);
    for (std::size_t i = 0; i < stubs.size(); i += 2) {
        int u = stubs[i], v = stubs[i + 1];
        if (u == v) return std::nullopt;
        es.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(es.begin(), es.end());
    if (std::adjacent_find(es.begin(), es.end()) != es.end()) return std::nullopt;
    return Graph(m, std::move(es));
}

}  // namespace detail

/// Builds a graph meeting `spec`, retrying the random generator until both the
/// spectral and the girth check pass. `explicit_graph` instances are supplied
/// via the overload below.
inline Graph make_expander(const ExpanderSpec& spec, std::uint64_t seed, int retry_budget = 200) {
    if (spec.m <= 0 || spec.d <= 0) throw std::invalid_argument("make_expander: need m, d > 0");
    switch (spec.generator) {
        case ExpanderGenerator::complete: {
            if (spec.d != spec.m - 1)
                throw std::invalid_argument("make_expander: complete generator needs d = m - 1");
            Graph g = complete_graph(spec.m);
            auto c = check_expander(g, spec);
            if (!c.ok) throw generation_error("make_expander: K_m fails check: " + c.violation, 1);
            return g;
        }
        case ExpanderGenerator::explicit_graph:
            throw std::invalid_argument(
                "make_expander: explicit generator requires a supplied graph");
        case ExpanderGenerator::random_regular: {
            if ((static_cast<long long>(spec.m) * spec.d) % 2 != 0)
                throw std::invalid_argument("make_expander: m*d must be even");
            if (spec.d >= spec.m)
                throw std::invalid_argument("make_expander: need d < m");
            Rng rng(seed);
            double best_lambda = std::numeric_limits<double>::infinity();
            for (int attempt = 0; attempt < retry_budget; ++attempt) {
                auto g = detail::random_regular_attempt(spec.m, spec.d, rng);
                if (!g) continue;
                auto c = check_expander(*g, spec);
                if (c.ok) return *g;
                best_lambda = std::min(best_lambda, c.lambda);
            }
            std::ostringstream os;
            os << "make_expander: no accepted instance in " << retry_budget
               << " attempts; best lambda achieved " << best_lambda << " (bound "
               << spec.lambda_bound << ")";
            throw generation_error(os.str(), retry_budget);
        }
    }
    throw std::invalid_argument("make_expander: unknown generator");
}

/// Validates an explicitly supplied graph against the spec.
inline Graph make_expander(const ExpanderSpec& spec, const Graph& g) {
    auto c = check_expander(g, spec);
    if (!c.ok)
        throw generation_error("make_expander: explicit graph fails check: " + c.violation, 1);
    return g;
}

}  // namespace uhg

#endif
