#include <doctest.h>

#include <stdexcept>

#include "polarcheck/grassmann.hpp"
#include "polarcheck/theorems.hpp"

using namespace polarcheck;

TEST_CASE("grassmann graph counts") {
    CHECK(GrassmannGraph::build(4, 2, 2).size() == 35);
    CHECK(GrassmannGraph::build(5, 2, 2).size() == 155);
    CHECK(GrassmannGraph::build(6, 3, 2, 2).size() == 1395);
    CHECK(GrassmannGraph::build(4, 2, 3).size() == 130);
}

TEST_CASE("grassmann preconditions") {
    CHECK_THROWS_AS(GrassmannGraph::build(3, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(GrassmannGraph::build(4, 3, 2), std::invalid_argument);
    CHECK_THROWS_AS(GrassmannGraph::build(4, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(GrassmannGraph::build(8, 4, 3, 1, 1000), std::runtime_error);  // budget
}

TEST_CASE("grassmann distance formula and opposition") {
    GrassmannGraph g = GrassmannGraph::build(4, 2, 2);
    CHECK(g.diameter() == 2);
    for (int a = 0; a < g.size(); ++a) {
        auto bfs = bfs_distances(g.adjacency(), a);
        for (int b = 0; b < g.size(); ++b) {
            CHECK(bfs[size_t(b)] == g.distance(a, b));
            // at d = 2k, opposite means disjoint
            CHECK(g.opposite(a, b) == (g.intersection_vdim(a, b) == 0));
        }
        CHECK(g.distance(a, a) == 0);
    }
    CHECK_THROWS_AS(g.distance(0, 35), std::out_of_range);
}

TEST_CASE("grassmann formula-vs-BFS sweeps") {
    for (auto [d, k] : {std::pair{4u, 2u}, std::pair{5u, 2u}, std::pair{6u, 3u}}) {
        GrassmannCharReport rep = verify_grassmann_characterization(d, k, 2, false, 2);
        CHECK(rep.formula_vs_bfs_pass);
        CHECK(rep.vertices == rep.expected_vertices);
        CHECK(rep.diameter == int(std::min(k, d - k)));
    }
}

TEST_CASE("vertex ids round trip") {
    GrassmannGraph g = GrassmannGraph::build(4, 2, 2);
    for (int i = 0; i < g.size(); ++i) CHECK(g.vertex_id(g.vertices()[size_t(i)]) == i);
    CHECK(g.vertex_id(Subspace::zero(4, 2)) == -1);
}
