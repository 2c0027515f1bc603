#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "metrics.hpp"

using namespace bter;

namespace {

Graph make_graph(uint64_t n, std::vector<Edge> edges) {
    std::sort(edges.begin(), edges.end());
    return Graph{n, std::move(edges)};
}

Graph random_er(uint64_t n, double p, uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<Edge> edges;
    for (uint64_t i = 0; i < n; ++i)
        for (uint64_t j = i + 1; j < n; ++j)
            if (u(gen) < p) edges.push_back({i, j});
    return Graph{n, std::move(edges)};
}

// adjacency-matrix wedge enumeration, kept deliberately naive
struct BruteCcd {
    std::vector<double> cd;
    std::vector<uint64_t> wedges;
    double gcc = 0.0;
};

BruteCcd brute_ccd(const Graph& g) {
    uint64_t n = g.num_nodes;
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    std::vector<std::vector<uint64_t>> nbr(n);
    for (const Edge& e : g.edges) {
        adj[e.u][e.v] = adj[e.v][e.u] = true;
        nbr[e.u].push_back(e.v);
        nbr[e.v].push_back(e.u);
    }
    uint64_t dmax = 0;
    for (uint64_t v = 0; v < n; ++v) dmax = std::max<uint64_t>(dmax, nbr[v].size());

    BruteCcd out;
    out.wedges.assign(dmax + 1, 0);
    std::vector<uint64_t> closed(dmax + 1, 0);
    for (uint64_t v = 0; v < n; ++v) {
        uint64_t d = nbr[v].size();
        out.wedges[d] += d * (d - 1) / 2;
        for (size_t a = 0; a < nbr[v].size(); ++a)
            for (size_t b = a + 1; b < nbr[v].size(); ++b)
                if (adj[nbr[v][a]][nbr[v][b]]) ++closed[d];
    }
    out.cd.assign(dmax + 1, std::numeric_limits<double>::quiet_NaN());
    uint64_t tw = 0, tc = 0;
    for (uint64_t d = 0; d <= dmax; ++d) {
        tw += out.wedges[d];
        tc += closed[d];
        if (out.wedges[d])
            out.cd[d] = static_cast<double>(closed[d]) / static_cast<double>(out.wedges[d]);
    }
    out.gcc = tw ? static_cast<double>(tc) / static_cast<double>(tw) : 0.0;
    return out;
}

}  // namespace

TEST_CASE("degree counts include isolated nodes") {
    Graph g = make_graph(6, {{0, 1}, {1, 2}, {1, 3}});
    DegreeCounts dc = degree_distribution(g);
    REQUIRE(dc.max_degree() == 3);
    CHECK(dc.counts[0] == 2);  // ids 4, 5
    CHECK(dc.counts[1] == 3);
    CHECK(dc.counts[2] == 0);
    CHECK(dc.counts[3] == 1);
}

TEST_CASE("triangle clusters perfectly") {
    Graph g = make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    CcdExact m = ccd_exact(g);
    CHECK(m.total_wedges == 3);
    CHECK(m.total_closed == 3);
    CHECK(m.gcc == 1.0);
    CHECK(m.cd[2] == 1.0);
}

TEST_CASE("path has open wedges only") {
    Graph g = make_graph(3, {{0, 1}, {1, 2}});
    CcdExact m = ccd_exact(g);
    CHECK(m.total_wedges == 1);
    CHECK(m.total_closed == 0);
    CHECK(m.gcc == 0.0);
    CHECK(m.cd[2] == 0.0);
    CHECK(std::isnan(m.cd[1]));
    CHECK(m.wedges[1] == 0);
}

TEST_CASE("chorded square reference values") {
    Graph g = make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {1, 3}});
    CcdExact m = ccd_exact(g);
    CHECK(m.total_wedges == 8);
    CHECK(m.total_closed == 6);
    CHECK(m.gcc == doctest::Approx(0.75));
    CHECK(m.cd[2] == doctest::Approx(1.0));
    CHECK(m.cd[3] == doctest::Approx(4.0 / 6.0));
    CHECK(m.wedges[2] == 2);
    CHECK(m.wedges[3] == 6);
    CHECK(m.closed[3] == 4);
}

TEST_CASE("empty and edgeless graphs do not blow up") {
    Graph g;
    g.num_nodes = 5;
    CcdExact m = ccd_exact(g);
    CHECK(m.total_wedges == 0);
    CHECK(std::isnan(m.gcc));
    DegreeCounts dc = degree_distribution(g);
    CHECK(dc.counts[0] == 5);
}

TEST_CASE("exact clustering matches naive enumeration") {
    for (uint64_t seed : {1, 2, 3, 4, 5}) {
        Graph g = random_er(48, 0.12, seed);
        CcdExact fast = ccd_exact(g);
        BruteCcd slow = brute_ccd(g);
        REQUIRE(fast.cd.size() == slow.cd.size());
        CHECK(fast.gcc == doctest::Approx(slow.gcc).epsilon(1e-12));
        for (size_t d = 0; d < slow.cd.size(); ++d) {
            CHECK(fast.wedges[d] == slow.wedges[d]);
            if (std::isnan(slow.cd[d]))
                CHECK(std::isnan(fast.cd[d]));
            else
                CHECK(fast.cd[d] == doctest::Approx(slow.cd[d]).epsilon(1e-12));
        }
    }
}

TEST_CASE("sampled clustering lands inside its half-width") {
    Graph g = random_er(400, 0.04, 99);
    CcdExact exact = ccd_exact(g);
    CcdSampled s = ccd_sampled(g, 2000, 7);

    CHECK(s.confidence == doctest::Approx(0.999));
    double hw_expect = std::sqrt(std::log(2.0 / 0.001) / (2.0 * 2000.0));
    CHECK(hw_expect < 0.05);

    bool any_bin = false;
    for (size_t d = 2; d < s.cd.size(); ++d) {
        if (std::isnan(s.cd[d])) {
            if (d < exact.cd.size() && exact.wedges[d] > 0) FAIL("bin lost by the sampler");
            continue;
        }
        any_bin = true;
        CHECK(s.halfwidth[d] == doctest::Approx(hw_expect));
        CHECK(s.wedges[d] == exact.wedges[d]);
        CHECK(std::abs(s.cd[d] - exact.cd[d]) <= s.halfwidth[d]);
    }
    CHECK(any_bin);
    CHECK(std::abs(s.gcc - exact.gcc) < 0.02);
}

TEST_CASE("sampled clustering is exact on saturated bins") {
    // every wedge in the triangle is closed, so sampling cannot miss
    Graph g = make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    CcdSampled s = ccd_sampled(g, 500, 3);
    CHECK(s.cd[2] == 1.0);
    CHECK(s.gcc == 1.0);
}

TEST_CASE("sampled clustering is deterministic per seed") {
    Graph g = random_er(200, 0.05, 17);
    CcdSampled a = ccd_sampled(g, 300, 42);
    CcdSampled b = ccd_sampled(g, 300, 42);
    REQUIRE(a.cd.size() == b.cd.size());
    for (size_t d = 0; d < a.cd.size(); ++d) {
        if (std::isnan(a.cd[d]))
            CHECK(std::isnan(b.cd[d]));
        else
            CHECK(a.cd[d] == b.cd[d]);
    }
    CHECK(a.gcc == b.gcc);
}

TEST_CASE("log-binned estimates straddle the exact bin averages") {
    Graph g = random_er(500, 0.035, 31);
    CcdExact exact = ccd_exact(g);
    CcdLogBinned lb = ccd_sampled_logbin(g, 4000, 13);

    REQUIRE(lb.lo.size() > 1);
    for (size_t b = 0; b < lb.lo.size(); ++b) {
        CHECK(lb.lo[b] >= 2);
        CHECK(lb.hi[b] >= lb.lo[b]);
        CHECK(lb.hi[b] <= 2 * lb.lo[b] - 1);
        if (b) CHECK(lb.lo[b] == 2 * lb.lo[b - 1]);

        double wedges = 0.0, closed = 0.0;
        for (uint64_t d = lb.lo[b]; d <= lb.hi[b] && d < exact.cd.size(); ++d) {
            if (exact.wedges[d] == 0) continue;
            wedges += static_cast<double>(exact.wedges[d]);
            closed += static_cast<double>(exact.closed[d]);
        }
        REQUIRE(wedges > 0.0);
        CHECK(lb.wedges[b] == static_cast<uint64_t>(wedges));
        CHECK(std::abs(lb.cd[b] - closed / wedges) <= lb.halfwidth[b]);
    }
}

TEST_CASE("metric input validation") {
    Graph g = make_graph(3, {{0, 1}});
    CHECK_THROWS_AS(ccd_sampled(g, 0, 1), Error);
    CHECK_THROWS_AS(ccd_sampled(g, 10, 1, 1.5), Error);
    CHECK_THROWS_AS(ccd_sampled_logbin(g, 0, 1), Error);
}
