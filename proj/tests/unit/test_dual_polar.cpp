#include <doctest.h>

#include <stdexcept>

#include "polarcheck/dual_polar.hpp"
#include "polarcheck/incidence.hpp"
#include "polarcheck/theorems.hpp"

using namespace polarcheck;

namespace {

Vec e(unsigned d, unsigned i) {
    Vec v(d, 0);
    v[i] = 1;
    return v;
}

}  // namespace

TEST_CASE("dual polar distances against BFS, Sp(6,2)") {
    PolarSpace ps = PolarSpace::build(Form::symplectic(3, 2));
    DualPolarSpace dps(ps, 2);
    CHECK(dps.size() == 135);

    int s = ps.maximal_id(rref(std::vector<Vec>{e(6, 0), e(6, 2), e(6, 4)}, 6, 2));
    int u = ps.maximal_id(rref(std::vector<Vec>{e(6, 1), e(6, 2), e(6, 4)}, 6, 2));
    int opp = ps.maximal_id(rref(std::vector<Vec>{e(6, 1), e(6, 3), e(6, 5)}, 6, 2));
    REQUIRE(s >= 0);
    REQUIRE(u >= 0);
    REQUIRE(opp >= 0);
    CHECK(dps.distance(s, s) == 0);
    CHECK(dps.distance(s, u) == 1);
    CHECK(dps.opposite(s, opp));
    CHECK_FALSE(dps.opposite(s, s));

    auto bfs = bfs_distances(dps.adjacency(), s);
    CHECK(bfs[size_t(u)] == 1);
    for (int t = 0; t < dps.size(); ++t) CHECK(bfs[size_t(t)] == dps.distance(s, t));

    CHECK(is_connected(dps.adjacency()));
    CHECK(graph_diameter(dps.adjacency(), 2) == 3);

    CHECK_THROWS_AS(dps.distance(-1, 0), std::out_of_range);
    CHECK_THROWS_AS(dps.distance(0, 135), std::out_of_range);
}

TEST_CASE("dual polar full formula-vs-BFS sweeps") {
    auto check_space = [](Form form, int expected_diameter) {
        PolarSpace ps = PolarSpace::build(std::move(form));
        DistanceFormulaReport rep = verify_distance_formulas(ps, 2);
        CHECK(rep.dp_connected);
        CHECK(rep.dp_formula_vs_bfs);
        CHECK(rep.dp_diameter == expected_diameter);
        CHECK(rep.dp_diameter_is_rank);
    };
    check_space(Form::symplectic(3, 2), 3);
    check_space(Form::hyperbolic_quadric(4, 2), 4);
    check_space(Form::symplectic(3, 3), 3);
}

TEST_CASE("opposite count is the same for every vertex") {
    PolarSpace ps = PolarSpace::build(Form::symplectic(3, 2));
    DualPolarSpace dps(ps, 2);
    int expected = -1;
    for (int s = 0; s < dps.size(); ++s) {
        int count = 0;
        for (int u = 0; u < dps.size(); ++u) {
            if (u != s && dps.opposite(s, u)) ++count;
        }
        if (expected < 0) expected = count;
        CHECK(count == expected);
    }
    CHECK(expected == 64);  // q^(n(n+1)/2) maximals disjoint from a fixed one
}

TEST_CASE("dual polar lines") {
    PolarSpace sp = PolarSpace::build(Form::symplectic(3, 2));
    DualPolarSpace dps(sp, 2);
    Subspace m = rref(std::vector<Vec>{e(6, 2), e(6, 4)}, 6, 2);  // <x2, x3>
    const auto& line = dps.line(m);
    CHECK(line.size() == 3);
    for (int32_t id : line) CHECK(contains_sub(sp.maximal(id), m));
    for (const auto& [core, ids] : dps.lines()) CHECK(ids.size() == 3);
    // count: every next-to-max singular defines one line
    CHECK(dps.lines().size() == 315);

    CHECK_THROWS_AS(dps.line(rref(std::vector<Vec>{e(6, 0)}, 6, 2)), std::invalid_argument);
    Subspace nonsingular = rref(std::vector<Vec>{e(6, 0), e(6, 1)}, 6, 2);
    CHECK_THROWS_AS(dps.line(nonsingular), std::invalid_argument);

    PolarSpace qd = PolarSpace::build(Form::hyperbolic_quadric(4, 2));
    DualPolarSpace dq(qd, 2);
    for (const auto& [core, ids] : dq.lines()) CHECK(ids.size() == 2);
}

TEST_CASE("graph exports are canonical") {
    PolarSpace ps = PolarSpace::build(Form::hyperbolic_quadric(3, 2));
    DualPolarSpace dps(ps, 1);
    std::string dot = to_dot(dps.adjacency());
    CHECK(dot.rfind("digraph G {", 0) == 0);
    std::string adj = to_adjlist(dps.adjacency());
    size_t lines = std::count(adj.begin(), adj.end(), '\n');
    CHECK(lines == size_t(dps.size()));
    CHECK(adj.rfind("0:", 0) == 0);
    // labels remap vertices
    std::vector<int32_t> labels(size_t(dps.size()));
    for (size_t i = 0; i < labels.size(); ++i) labels[i] = int32_t(100 + i);
    std::string relabeled = to_adjlist(dps.adjacency(), labels);
    CHECK(relabeled.rfind("100:", 0) == 0);
}
