#include "doctest.h"

#include <limits>

#include "model.hpp"

using namespace bter;

TEST_CASE("degree distribution basics") {
    // 2 nodes of degree 1, 1 node of degree 2: 3 nodes, 2 edges.
    DegreeDistribution dd({0, 2, 1});
    CHECK(dd.max_degree() == 2);
    CHECK(dd.num_nodes() == 3);
    CHECK(dd.num_edges_target() == 2);
    CHECK(dd.mean_degree() == doctest::Approx(4.0 / 3.0));
    CHECK(dd.count(1) == 2);
    CHECK(dd.count(2) == 1);
    CHECK(dd.count(3) == 0);
    CHECK(dd.count(100) == 0);
}

TEST_CASE("degree distribution trims trailing zeros") {
    DegreeDistribution dd({0, 2, 1, 0, 0});
    CHECK(dd.max_degree() == 2);
}

TEST_CASE("degree distribution with gaps") {
    DegreeDistribution dd({0, 0, 0, 4});
    CHECK(dd.max_degree() == 3);
    CHECK(dd.num_nodes() == 4);
    CHECK(dd.num_edges_target() == 6);
}

TEST_CASE("degree distribution rejects bad input") {
    CHECK_THROWS_AS(DegreeDistribution({}), Error);
    CHECK_THROWS_AS(DegreeDistribution({0}), Error);
    CHECK_THROWS_AS(DegreeDistribution({5, 1}), Error);      // degree-0 nodes
    CHECK_THROWS_AS(DegreeDistribution({0, 0, 0}), Error);   // no nodes at all

    try {
        DegreeDistribution dd({5, 1});
        FAIL("expected throw");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::validation);
    }
}

TEST_CASE("clustering profile validation") {
    ClusteringProfile cp(std::vector<double>{0, 0, 0.5, 0.25});
    CHECK(cp.value(2) == 0.5);
    CHECK(cp.value(3) == 0.25);
    CHECK(cp.value(4) == 0.0);
    CHECK(cp.value(0) == 0.0);

    CHECK_THROWS_AS(ClusteringProfile(std::vector<double>{0, 0, 1.5}), Error);
    CHECK_THROWS_AS(ClusteringProfile(std::vector<double>{0, 0, -0.1}), Error);
}

TEST_CASE("model inputs validation") {
    DegreeDistribution dd({0, 2, 1});
    ClusteringProfile cp(std::vector<double>{0, 0, 0.0});

    CHECK_NOTHROW(ModelInputs(dd, cp, 1.0));
    CHECK_THROWS_AS(ModelInputs(dd, cp, 0.0), Error);
    CHECK_THROWS_AS(ModelInputs(dd, cp, -1.0), Error);
    CHECK_THROWS_AS(ModelInputs(dd, cp, std::numeric_limits<double>::infinity()), Error);
    CHECK_THROWS_AS(ModelInputs(dd, cp, std::numeric_limits<double>::quiet_NaN()), Error);
}

TEST_CASE("edge ordering") {
    Edge a{1, 2};
    Edge b{1, 3};
    Edge c{2, 0};
    CHECK(a < b);
    CHECK(b < c);
    CHECK(a == Edge{1, 2});
    CHECK_FALSE(a == b);
}
