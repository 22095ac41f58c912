#include <doctest.h>

#include <stdexcept>

#include <random>

#include "polarcheck/frames.hpp"
#include "polarcheck/polar_space.hpp"

using namespace polarcheck;

namespace {

Vec e(unsigned d, unsigned i) {
    Vec v(d, 0);
    v[i] = 1;
    return v;
}

// The frame vectors lying inside s are independent, so they span s exactly
// when there are vdim(s) of them.
bool frame_spans(const Frame& fr, const Subspace& s) {
    unsigned inside = 0;
    for (const Vec& v : fr.vectors()) {
        if (contains(s, v)) ++inside;
    }
    return inside >= s.vdim();
}

Subspace random_singular_subspace(std::mt19937_64& rng, const PolarSpace& ps, unsigned r) {
    const Subspace& m = ps.maximals()[rng() % ps.maximals().size()];
    auto subs = subspaces_of(m, r);
    return subs[rng() % subs.size()];
}

}  // namespace

TEST_CASE("standard frame") {
    for (unsigned q : {2u, 3u}) {
        for (auto kind : {FormKind::Symplectic, FormKind::Quadratic}) {
            Form f = kind == FormKind::Symplectic ? Form::symplectic(3, q)
                                                  : Form::hyperbolic_quadric(3, q);
            Frame fr = standard_frame(f);
            CHECK(fr.pair_count() == 3);
            CHECK(frame_valid(f, fr));
            for (unsigned i = 0; i < 3; ++i) CHECK(f.bilinear(fr.x(i), fr.y(i)) == 1);
            CHECK(rref(fr.vectors(), 6, q).vdim() == 6);
        }
    }
}

TEST_CASE("frame_through basic cases") {
    Form f = Form::symplectic(3, 2);
    Subspace a = rref(std::vector<Vec>{e(6, 0), e(6, 2), e(6, 4)}, 6, 2);

    Frame fr = frame_through(f, a, a);
    CHECK(frame_valid(f, fr));
    CHECK(frame_spans(fr, a));

    // spans of the symplectic triple's first two members
    Subspace b = rref(std::vector<Vec>{e(6, 1), e(6, 3), e(6, 4)}, 6, 2);
    Frame fr2 = frame_through(f, a, b);
    CHECK(frame_valid(f, fr2));
    CHECK(frame_spans(fr2, a));
    CHECK(frame_spans(fr2, b));

    // zero subspaces work
    Frame fr3 = frame_through(f, Subspace::zero(6, 2), Subspace::zero(6, 2));
    CHECK(frame_valid(f, fr3));

    // non-singular input is rejected
    Subspace bad = rref(std::vector<Vec>{e(6, 0), e(6, 1)}, 6, 2);
    CHECK_THROWS_AS(frame_through(f, bad, a), std::invalid_argument);

    // determinism
    Frame r1 = frame_through(f, a, b), r2 = frame_through(f, a, b);
    CHECK(r1.vectors() == r2.vectors());
}

TEST_CASE("frame_through randomized postcondition, O+(8,2)") {
    PolarSpace ps = PolarSpace::build(Form::hyperbolic_quadric(4, 2));
    const Form& f = ps.form();
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        Subspace a = random_singular_subspace(rng, ps, 1 + rng() % 4);
        Subspace b = random_singular_subspace(rng, ps, 1 + rng() % 4);
        Frame fr = frame_through(f, a, b);
        CHECK(frame_valid(f, fr));
        CHECK(frame_spans(fr, a));
        CHECK(frame_spans(fr, b));
    }
}

TEST_CASE("frame_through randomized postcondition, Sp(6,3)") {
    PolarSpace ps = PolarSpace::build(Form::symplectic(3, 3));
    const Form& f = ps.form();
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 60; ++trial) {
        Subspace a = random_singular_subspace(rng, ps, 1 + rng() % 3);
        Subspace b = random_singular_subspace(rng, ps, 1 + rng() % 3);
        Frame fr = frame_through(f, a, b);
        CHECK(frame_valid(f, fr));
        CHECK(frame_spans(fr, a));
        CHECK(frame_spans(fr, b));
    }
}

TEST_CASE("opposite_extension") {
    PolarSpace ps = PolarSpace::build(Form::hyperbolic_quadric(4, 2));
    const Form& f = ps.form();
    const unsigned n = ps.rank();

    // zero input: any maximal disjoint from s
    const Subspace& s = ps.maximals()[0];
    Subspace u0 = opposite_extension(f, Subspace::zero(8, 2), s);
    CHECK(u0.vdim() == n);
    CHECK(f.totally_singular(u0));
    CHECK(intersection_dim(u0, s) == 0);

    std::mt19937_64 rng(31);
    int disjoint_cases = 0, point_cases = 0;
    for (int trial = 0; trial < 150; ++trial) {
        const Subspace& sm = ps.maximals()[rng() % ps.maximals().size()];
        Subspace p = random_singular_subspace(rng, ps, 1 + rng() % 3);
        Subspace u = opposite_extension(f, p, sm);
        CHECK(u.vdim() == n);
        CHECK(f.totally_singular(u));
        CHECK(contains_sub(u, p));
        CHECK(intersect(u, sm) == intersect(p, sm));
        if (intersect(p, sm).is_zero()) ++disjoint_cases;
        if (intersect(p, sm).vdim() == 1) ++point_cases;
    }
    CHECK(disjoint_cases > 0);
    CHECK(point_cases > 0);

    // plane meeting s in exactly one point: the odd-rank construction shape
    const Subspace& sm = ps.maximals()[3];
    Subspace plane;
    for (const Subspace& other : ps.maximals()) {
        if (intersection_dim(other, sm) != 1) continue;
        for (const Subspace& cand : subspaces_of(other, 3)) {
            if (intersection_dim(cand, sm) == 1) {
                plane = cand;
                break;
            }
        }
        break;
    }
    REQUIRE(plane.vdim() == 3);
    Subspace u = opposite_extension(f, plane, sm);
    CHECK(contains_sub(u, plane));
    CHECK(intersect(u, sm) == intersect(plane, sm));
    CHECK(intersect(u, sm).vdim() == 1);

    CHECK_THROWS_AS(opposite_extension(f, Subspace::zero(8, 2), plane), std::invalid_argument);
}
