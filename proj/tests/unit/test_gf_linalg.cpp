#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <random>

#include "polarcheck/subspace.hpp"
#include "test_util.hpp"

using namespace polarcheck;
using testutil::random_subspace;
using testutil::random_vec;

namespace {

Vec e(unsigned d, unsigned i) {
    Vec v(d, 0);
    v[i] = 1;
    return v;
}

}  // namespace

TEST_CASE("prime field arithmetic") {
    CHECK_THROWS_AS(PrimeField(4), std::invalid_argument);
    CHECK_THROWS_AS(PrimeField(1), std::invalid_argument);
    CHECK_THROWS_AS(PrimeField(256), std::invalid_argument);
    PrimeField f3(3);
    CHECK(f3.add(2, 2) == 1);
    CHECK(f3.sub(0, 1) == 2);
    CHECK(f3.neg(1) == 2);
    CHECK(f3.mul(2, 2) == 1);
    CHECK(f3.inv(2) == 2);
    CHECK_THROWS_AS(f3.inv(0), std::invalid_argument);
    PrimeField f251(251);
    for (unsigned a = 1; a < 251; ++a) CHECK(f251.mul(uint8_t(a), f251.inv(uint8_t(a))) == 1);
    CHECK(f3.reduce(-1) == 2);
    CHECK(f3.reduce(7) == 1);
}

TEST_CASE("rref canonical form") {
    CHECK(rref({}, 4, 2).vdim() == 0);
    CHECK(rref({}, 4, 2).is_zero());

    std::vector<Vec> rows{e(4, 0), {1, 1, 0, 0}};
    Subspace s = rref(rows, 4, 2);
    CHECK(s.vdim() == 2);
    CHECK(s.row(0) == e(4, 0));
    CHECK(s.row(1) == e(4, 1));

    std::vector<Vec> bad{e(4, 0), e(3, 0)};
    CHECK_THROWS_AS(rref(bad, 4, 2), std::invalid_argument);

    // span invariance under permutation and scaling, GF(3), 3x6 matrices
    std::mt19937_64 rng(12345);
    PrimeField f(3);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Vec> m;
        for (int i = 0; i < 3; ++i) m.push_back(random_vec(rng, 6, 3));
        Subspace base = rref(m, 6, 3);
        std::vector<Vec> shuffled = m;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        for (Vec& row : shuffled) {
            uint8_t c = uint8_t(1 + rng() % 2);
            for (uint8_t& x : row) x = f.mul(x, c);
        }
        CHECK(rref(shuffled, 6, 3) == base);
        // idempotence
        std::vector<Vec> again;
        for (unsigned i = 0; i < base.vdim(); ++i) again.push_back(base.row(i));
        CHECK(rref(again, 6, 3) == base);
    }
}

TEST_CASE("sum and intersect") {
    std::mt19937_64 rng(99);

    Subspace a = rref(std::vector<Vec>{e(4, 0)}, 4, 2);
    Subspace b = rref(std::vector<Vec>{e(4, 1)}, 4, 2);
    CHECK(sum(a, a) == a);
    CHECK(sum(a, b) == rref(std::vector<Vec>{e(4, 0), e(4, 1)}, 4, 2));
    CHECK_THROWS_AS(sum(a, rref({}, 5, 2)), std::invalid_argument);

    CHECK(intersect(a, Subspace::full(4, 2)) == a);
    CHECK(intersect(a, a) == a);

    // the symplectic triple intersection at n=3: <x1,x2,x3> meet <y1,y2,x3>
    std::vector<Vec> r1{e(6, 0), e(6, 2), e(6, 4)};
    std::vector<Vec> r2{e(6, 1), e(6, 3), e(6, 4)};
    Subspace inter = intersect(rref(r1, 6, 2), rref(r2, 6, 2));
    CHECK(inter == rref(std::vector<Vec>{e(6, 4)}, 6, 2));

    // modular law over 1000 random pairs, GF(2), d=8
    for (int trial = 0; trial < 1000; ++trial) {
        Subspace x = random_subspace(rng, 8, 2, 5);
        Subspace y = random_subspace(rng, 8, 2, 5);
        Subspace s = sum(x, y), i = intersect(x, y);
        CHECK(x.vdim() + y.vdim() == s.vdim() + i.vdim());
        CHECK(intersect(x, y) == intersect(y, x));
        CHECK(contains_sub(x, i));
        CHECK(contains_sub(s, x));
        CHECK(intersection_dim(x, y) == int(i.vdim()));
    }
    // same, GF(3) byte path
    for (int trial = 0; trial < 200; ++trial) {
        Subspace x = random_subspace(rng, 6, 3, 4);
        Subspace y = random_subspace(rng, 6, 3, 4);
        CHECK(x.vdim() + y.vdim() == sum(x, y).vdim() + intersect(x, y).vdim());
        CHECK(intersection_dim(x, y) == int(intersect(x, y).vdim()));
    }
}

TEST_CASE("brute force set oracle, GF(2), d<=6") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 50; ++trial) {
        unsigned d = 4 + unsigned(rng() % 3);
        Subspace a = random_subspace(rng, d, 2, 4);
        Subspace b = random_subspace(rng, d, 2, 4);
        auto sa = testutil::subspace_set(a);
        auto sb = testutil::subspace_set(b);
        CHECK(sa.size() == testutil::pow_u64(2, a.vdim()));

        std::set<Vec> inter_set;
        std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(),
                              std::inserter(inter_set, inter_set.begin()));
        CHECK(inter_set.size() == testutil::pow_u64(2, intersect(a, b).vdim()));
        CHECK(inter_set == testutil::subspace_set(intersect(a, b)));

        std::set<Vec> sum_set;
        PrimeField f(2);
        for (const Vec& u : sa) {
            for (const Vec& v : sb) {
                Vec w(d);
                for (unsigned i = 0; i < d; ++i) w[i] = f.add(u[i], v[i]);
                sum_set.insert(w);
            }
        }
        CHECK(sum_set == testutil::subspace_set(sum(a, b)));
    }
}

TEST_CASE("membership") {
    Subspace a = rref(std::vector<Vec>{e(4, 0), e(4, 1)}, 4, 2);
    CHECK(contains(a, Vec(4, 0)));
    CHECK(contains(a, Vec{1, 1, 0, 0}));
    CHECK_FALSE(contains(a, e(4, 2)));
    CHECK_THROWS_AS(contains(a, Vec(5, 0)), std::invalid_argument);

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        Subspace x = random_subspace(rng, 6, 2, 4);
        Subspace y = random_subspace(rng, 6, 2, 4);
        bool mutual = contains_sub(x, y) && contains_sub(y, x);
        CHECK(mutual == (x == y));
    }
}

TEST_CASE("vector and point enumeration") {
    Subspace a = rref(std::vector<Vec>{e(4, 0), e(4, 1)}, 4, 3);
    CHECK(all_vectors(a).size() == 9);
    CHECK(points_of(a).size() == 4);
    CHECK(subspaces_of(a, 1).size() == 4);
    CHECK(subspaces_of(a, 2).size() == 1);
    CHECK(subspaces_of(Subspace::full(4, 2), 2).size() == gaussian_binomial(4, 2, 2));
}

TEST_CASE("gaussian binomial oracle values") {
    CHECK(gaussian_binomial(4, 2, 2) == 35);
    CHECK(gaussian_binomial(5, 2, 2) == 155);
    CHECK(gaussian_binomial(6, 3, 2) == 1395);
    CHECK(gaussian_binomial(4, 1, 3) == 40);
    CHECK(gaussian_binomial(4, 2, 3) == 130);
    CHECK(gaussian_binomial(3, 0, 2) == 1);
    CHECK(gaussian_binomial(3, 4, 2) == 0);
}

TEST_CASE("text format round trip") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 100; ++trial) {
        unsigned q = trial % 2 == 0 ? 2 : 3;
        Subspace s = random_subspace(rng, 6, q, 4);
        CHECK(subspace_from_text(to_text(s)) == s);
    }
    // non-RREF generating rows are accepted and canonicalized
    Subspace parsed = subspace_from_text("d=4 q=2\n1 1 0 0\n1 0 0 0\n");
    CHECK(parsed == rref(std::vector<Vec>{e(4, 0), e(4, 1)}, 4, 2));
    CHECK_THROWS_AS(subspace_from_text("not a header\n"), std::invalid_argument);
    CHECK_THROWS_AS(subspace_from_text("d=4 q=2\n1 2 0 0\n"), std::invalid_argument);
    CHECK_THROWS_AS(subspace_from_text("d=4 q=2\n1 0 0\n"), std::invalid_argument);
}
