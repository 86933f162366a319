#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "uhg/hitting.hpp"
#include "uhg/io.hpp"
#include "uhg/rng.hpp"

using namespace uhg;

namespace {

// brute-force: does g induced on `set` contain a copy of f? (all injections)
bool brute_contains(const Graph& g, const HEdge& set, const Graph& f) {
    std::vector<Vertex> perm(set);
    std::sort(perm.begin(), perm.end());
    if (f.num_vertices() > static_cast<int>(perm.size())) return false;
    std::vector<int> idx(perm.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    // iterate all injections f -> set via permutations of index prefix
    std::sort(idx.begin(), idx.end());
    do {
        bool ok = true;
        for (const auto& [a, b] : f.edges())
            if (!g.has_edge(perm[idx[a]], perm[idx[b]])) {
                ok = false;
                break;
            }
        if (ok) return true;
    } while (std::next_permutation(idx.begin(), idx.end()));
    return false;
}

Graph random_graph(Rng& rng, int n, double p) {
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.bernoulli(p)) es.emplace_back(i, j);
    return Graph(n, std::move(es));
}

}  // namespace

TEST_CASE("check_hits basics") {
    Graph path = path_graph(3);
    Hypergraph h(3, {{0, 1, 2}});
    auto res = check_hits(path, h, p3_pattern());
    REQUIRE(res.ok());
    CHECK(validate_hit_certificate(path, h, *res.certificate));

    Graph empty(3, {});
    auto fail = check_hits(empty, h, Graph(2, {{0, 1}}));
    CHECK_FALSE(fail.ok());
    CHECK(*fail.failed_edge == HEdge{0, 1, 2});
}

TEST_CASE("check_hits star on two triples") {
    Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
    Hypergraph h(4, {{0, 1, 2}, {0, 2, 3}});
    auto res = check_hits(star, h, p3_pattern());
    REQUIRE(res.ok());
    CHECK(validate_hit_certificate(star, h, *res.certificate));
    // the star center must be the middle vertex (pattern vertex 1) of each path
    for (const auto& img : res.certificate->placements) CHECK(img[1] == 0);
}

TEST_CASE("check_hits dimension mismatch") {
    Hypergraph h(4, {{0, 1, 2}});
    CHECK_THROWS_AS(check_hits(complete_graph(4), h, complete_graph(4)),
                    std::invalid_argument);
}

TEST_CASE("expand basics") {
    auto p3 = path_graph(3);
    auto h1 = expand(p3, p3_pattern(), 3);
    CHECK(h1.edges() == std::vector<HEdge>{{0, 1, 2}});

    auto h2 = expand(path_graph(4), matching_pattern(4), 4);
    CHECK(h2.edges() == std::vector<HEdge>{{0, 1, 2, 3}});

    Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
    auto h3 = expand(star, p3_pattern(), 3);
    CHECK(h3.edges() == std::vector<HEdge>{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}});
}

TEST_CASE("expand agrees with brute-force pattern search") {
    Rng rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_graph(rng, 7, 0.4);
        Graph f = trial % 2 ? p3_pattern() : matching_pattern(4);
        int r = trial % 2 ? 3 : 4;
        auto h = expand(g, f, r);
        for (auto& e : detail::all_r_subsets(7, r))
            CHECK(h.has_edge(e) == brute_contains(g, e, f));
    }
}

TEST_CASE("ExpandView membership matches materialization") {
    Rng rng(5);
    Graph g = random_graph(rng, 8, 0.35);
    auto view_base = std::make_shared<GraphPairView>(g);
    ExpandView view(view_base, p3_pattern(), 3);
    auto mat = expand(g, p3_pattern(), 3);
    for (auto& e : detail::all_r_subsets(8, 3)) CHECK(view.has_edge(e) == mat.has_edge(e));
}

TEST_CASE("expand budget") {
    CHECK_THROWS_AS(expand(complete_graph(40), p3_pattern(), 3, 1000), budget_error);
}

TEST_CASE("labeled Lemma 2.1: hit edges survive expansion under supergraphs") {
    Rng rng(42);
    for (int trial = 0; trial < 40; ++trial) {
        Hypergraph h = sample_family({3, 7, 2}, 1000 + trial, 1)[0];
        Graph g = random_graph(rng, 7, 0.5);
        auto res = check_hits(g, h, p3_pattern());
        if (!res.ok()) continue;
        // supergraph g' of g
        Graph sup = random_graph(rng, 7, 0.3);
        std::vector<Edge> es = g.edges();
        es.insert(es.end(), sup.edges().begin(), sup.edges().end());
        Graph gp(7, es);
        auto big = expand(gp, p3_pattern(), 3);
        for (const auto& f : h.edges()) CHECK(big.has_edge(f));
    }
}

TEST_CASE("hit_perfect_matching") {
    Hypergraph h1(4, {{0, 1, 2, 3}});
    auto [g1, c1] = hit_perfect_matching(h1, 2);
    CHECK(g1.edges() == std::vector<HEdge>{{0, 1}, {2, 3}});

    Hypergraph h2(7, {{0, 1, 2, 3}, {0, 4, 5, 6}});
    auto [g2, c2] = hit_perfect_matching(h2, 2);
    CHECK(g2.edges() == std::vector<HEdge>{{0, 1}, {0, 4}, {2, 3}, {5, 6}});
    CHECK(g2.max_degree() == 2);
    CHECK(g2.max_degree() <= h2.max_degree());
    HypergraphView gv(g2);
    CHECK(validate_hit_certificate(gv, h2, c2));

    Hypergraph h3(6, {{0, 1, 2, 3, 4, 5}});
    auto [g3, c3] = hit_perfect_matching(h3, 3);
    CHECK(g3.edges() == std::vector<HEdge>{{0, 1, 2}, {3, 4, 5}});

    CHECK_THROWS_AS(hit_perfect_matching(h3, 4), std::invalid_argument);
}

TEST_CASE("hit_perfect_matching degree never increases") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto h = sample_family({4, 10, 3}, seed, 1)[0];
        if (h.num_edges() == 0) continue;
        auto [g, cert] = hit_perfect_matching(h, 2);
        CHECK(g.max_degree() <= h.max_degree());
        HypergraphView gv(g);
        CHECK(validate_hit_certificate(gv, h, cert));
    }
}

TEST_CASE("hit_matching_path single edge") {
    Hypergraph h(3, {{0, 1, 2}});
    auto [g, cert] = hit_matching_path(h);
    CHECK(g.num_edges() == 2);
    CHECK(g.max_degree() == 2);
    CHECK(validate_hit_certificate(g, h, cert));
}

TEST_CASE("hit_matching_path triangle-ish 3-uniform") {
    Hypergraph h(6, {{0, 1, 2}, {2, 3, 4}, {0, 4, 5}});
    auto [g, cert] = hit_matching_path(h);
    CHECK(g.max_degree() <= 3);  // ceil((r+1)*Delta/r) = ceil(8/3) = 3
    CHECK(validate_hit_certificate(g, h, cert));
    auto hits = check_hits(g, h, p3_pattern());
    CHECK(hits.ok());
}

TEST_CASE("hit_matching_path degree bound on sampled inputs") {
    for (auto [r, delta] : {std::pair{3, 2}, {3, 3}, {5, 2}, {5, 4}, {7, 2}}) {
        int n = 3 * r;
        for (std::uint64_t seed = 0; seed < 6; ++seed) {
            auto h = sample_family({r, n, delta}, seed * 7 + r, 1)[0];
            if (h.num_edges() == 0) continue;
            auto [g, cert] = hit_matching_path(h);
            int bound = ((r + 1) * h.max_degree() + r - 1) / r;
            CHECK(g.max_degree() <= bound);
            CHECK(validate_hit_certificate(g, h, cert));
            CHECK(check_hits(g, h, matching_plus_p3_pattern(r)).ok());
        }
    }
}

TEST_CASE("3.1 inequality: e(expand(G, M_4, 4)) <= e(G)^2 on small graphs") {
    Rng rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = random_graph(rng, 8, 0.3);
        if (g.num_edges() > 12) continue;
        auto h = expand(g, matching_pattern(4), 4);
        CHECK(h.num_edges() <= g.num_edges() * g.num_edges());
    }
}

TEST_CASE("certificate serialization format") {
    Hypergraph h(3, {{0, 1, 2}});
    auto res = check_hits(path_graph(3), h, p3_pattern());
    std::ostringstream os;
    write_hit_certificate(os, h, *res.certificate);
    CHECK(os.str() == "0 1 2 -> 0 1 2\n");
}
