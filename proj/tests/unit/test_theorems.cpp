#include <doctest.h>

#include <stdexcept>

#include "polarcheck/theorems.hpp"

using namespace polarcheck;

namespace {

Vec e(unsigned d, unsigned i) {
    Vec v(d, 0);
    v[i] = 1;
    return v;
}

struct Dn4 {
    PolarSpace ps = PolarSpace::build(Form::hyperbolic_quadric(4, 2));
};

}  // namespace

TEST_CASE("witness search on a rank-4 half-spin family") {
    Dn4 fix;
    auto [plus, minus] = split_families(fix.ps, 2);
    OppositionTable opp = OppositionTable::from(plus);

    // a collinear pair: first line of the family
    const auto& [core, line_ids] = plus.lines().front();
    int s1 = line_ids[0], s2 = line_ids[1], third = line_ids[2];
    REQUIRE(plus.collinear(s1, s2));
    WitnessReport rep = find_witness(plus, s1, s2);
    CHECK(rep.witness.has_value());
    // the remaining line point is itself a witness
    CHECK(opp.is_witness(plus.local_index(third), plus.local_index(s1), plus.local_index(s2)));

    // rejections re-validate independently of the scan
    for (const auto& rej : rep.rejections) {
        CHECK(plus.opposite(rej.violating_u, rej.candidate));
        CHECK_FALSE(plus.opposite(rej.violating_u, s1));
        CHECK_FALSE(plus.opposite(rej.violating_u, s2));
    }

    // a non-collinear pair has no witness, with one certificate per candidate
    int nc1 = -1, nc2 = -1;
    for (int i = 0; i < plus.member_count() && nc1 < 0; ++i) {
        for (int j = i + 1; j < plus.member_count(); ++j) {
            if (!plus.collinear(plus.members()[size_t(i)], plus.members()[size_t(j)])) {
                nc1 = plus.members()[size_t(i)];
                nc2 = plus.members()[size_t(j)];
                break;
            }
        }
    }
    REQUIRE(nc1 >= 0);
    WitnessReport none = find_witness(plus, nc1, nc2);
    CHECK_FALSE(none.witness.has_value());
    CHECK(none.rejections.size() == size_t(plus.member_count() - 2));
    CHECK(all_witnesses(plus, nc1, nc2).empty());

    CHECK_THROWS_AS(find_witness(plus, s1, s1), std::invalid_argument);
}

TEST_CASE("witness characterization, exhaustive and deterministic") {
    Dn4 fix;
    auto [plus, minus] = split_families(fix.ps, 2);

    CharacterizationOptions opt;
    opt.exhaustive = true;
    opt.threads = 4;
    for (const HalfSpinSpace* fam : {&plus, &minus}) {
        CharacterizationReport rep = verify_witness_characterization(*fam, opt);
        CHECK(rep.pass);
        CHECK(rep.members == 135);
        CHECK(rep.pairs_total == 9045);
        CHECK(rep.collinear_pairs == 4725);
        CHECK(rep.failures.empty());
    }

    // thread count must not affect the result
    CharacterizationOptions opt1 = opt;
    opt1.threads = 1;
    CharacterizationReport a = verify_witness_characterization(plus, opt);
    CharacterizationReport b = verify_witness_characterization(plus, opt1);
    CHECK(a.collinear_pairs == b.collinear_pairs);
    CHECK(a.failures.size() == b.failures.size());

    // sampled mode is seeded and deterministic
    CharacterizationOptions sampled;
    sampled.exhaustive = false;
    sampled.noncollinear_samples = 40;
    sampled.seed = 11;
    CharacterizationReport s1 = verify_witness_characterization(plus, sampled);
    CharacterizationReport s2 = verify_witness_characterization(plus, sampled);
    CHECK(s1.pass);
    CHECK(s1.noncollinear_pairs_checked == 40);
    CHECK(s1.collinear_pairs == s2.collinear_pairs);
    CHECK(s1.noncollinear_pairs_checked == s2.noncollinear_pairs_checked);
}

TEST_CASE("characterization precondition: rank at least 4") {
    PolarSpace small = PolarSpace::build(Form::hyperbolic_quadric(3, 2));
    auto [plus, minus] = split_families(small, 1);
    CHECK_THROWS_AS(verify_witness_characterization(plus, {}), std::invalid_argument);
}

TEST_CASE("line witnesses") {
    Dn4 fix;
    auto [plus, minus] = split_families(fix.ps, 2);
    LineWitnessReport rep = verify_line_witnesses(plus);
    CHECK(rep.pass);
    CHECK(rep.collinear_pairs == 4725);
    CHECK(rep.witnesses_checked == 4725);  // 3-point lines leave one witness per pair

    // the same direction holds in a C_n dual polar space: 315 lines of
    // three points give 945 collinear pairs, one further witness each
    PolarSpace cn = PolarSpace::build(Form::symplectic(3, 2));
    DualPolarSpace dps(cn, 2);
    LineWitnessReport dp_rep = verify_line_witnesses(dps);
    CHECK(dp_rep.pass);
    CHECK(dp_rep.collinear_pairs == 945);
    CHECK(dp_rep.witnesses_checked == 945);
}

TEST_CASE("witness triple geometry") {
    Dn4 fix;
    auto [plus, minus] = split_families(fix.ps, 2);
    const auto& [core, line_ids] = plus.lines().front();
    WitnessGeometryReport rep =
        verify_witness_geometry(plus, line_ids[0], line_ids[1], line_ids[2]);
    CHECK(rep.dims_ok);
    CHECK(rep.inter_s_s1 == 2);
    CHECK(rep.inter_s_s2 == 2);
    CHECK(rep.inter_s1_s2 == 2);
    CHECK(rep.lines_meet_witness);
    CHECK(rep.point_pairs_checked > 0);
    CHECK(rep.pass);

    // a non-witness triple is a precondition error
    int nc = -1;
    for (int32_t id : plus.members()) {
        if (id != line_ids[0] && id != line_ids[1] &&
            !plus.collinear(id, line_ids[0])) {
            nc = id;
            break;
        }
    }
    REQUIRE(nc >= 0);
    CHECK_THROWS_AS(verify_witness_geometry(plus, line_ids[0], nc, line_ids[2]),
                    std::invalid_argument);
    CHECK_THROWS_AS(verify_witness_geometry(plus, line_ids[0], line_ids[0], line_ids[2]),
                    std::invalid_argument);
}

TEST_CASE("symplectic triple, q=2") {
    SymplecticTriple t = build_symplectic_triple(3, 2);
    CHECK(t.s1_singular);
    CHECK(t.s2_singular);
    CHECK(t.s_singular);
    CHECK(t.s1_id >= 0);
    CHECK(t.s_id >= 0);

    // over GF(2) the third subspace is <x1+y2, x2+y1, x3>
    std::vector<Vec> expected{Vec{1, 0, 0, 1, 0, 0}, Vec{0, 1, 1, 0, 0, 0}, e(6, 4)};
    CHECK(t.s == rref(expected, 6, 2));
    CHECK(t.n_core == rref(std::vector<Vec>{e(6, 4)}, 6, 2));

    SymplecticTripleReport rep = verify_symplectic_triple(t, 2);
    CHECK(rep.construction_ok);
    CHECK(rep.s1_s2_noncollinear);
    CHECK(rep.inter_s1_s2 == 1);
    CHECK(rep.intersections_match_core);
    CHECK(rep.witness_property);
    CHECK(rep.violations.empty());
    CHECK(rep.maximals_scanned == 135);
    CHECK(rep.pass);

    // the constructed third subspace is exactly the first witness found
    SymplecticTripleReport scan = verify_symplectic_triple(t, 2, true);
    REQUIRE(scan.witness_scan.has_value());
    REQUIRE(scan.witness_scan->witness.has_value());
    CHECK(*scan.witness_scan->witness == t.s_id);

    CHECK_THROWS_AS(build_symplectic_triple(2, 2), std::invalid_argument);
}

TEST_CASE("symplectic triple, q=3: the third subspace is not isotropic") {
    // gram(x1+y2, x2-y1) = -2, nonzero in odd characteristic, so the
    // frame-literal triple cannot be built as three maximal singular
    // subspaces over GF(3); the report records that honestly.
    SymplecticTriple t = build_symplectic_triple(3, 3);
    CHECK(t.s1_singular);
    CHECK(t.s2_singular);
    CHECK_FALSE(t.s_singular);
    CHECK(t.s_id == -1);

    const Form& form = t.space.form();
    Vec u{1, 0, 0, 1, 0, 0};  // x1 + y2
    Vec v{0, 2, 1, 0, 0, 0};  // x2 - y1
    CHECK(form.bilinear(u, v) == 1);  // -2 mod 3

    SymplecticTripleReport rep = verify_symplectic_triple(t, 2, true);
    CHECK_FALSE(rep.construction_ok);
    CHECK(rep.s1_s2_noncollinear);
    CHECK(rep.intersections_match_core);
    // set-theoretic disjointness implication still holds for the subspace
    CHECK(rep.witness_property);
    CHECK_FALSE(rep.pass);
    // and no maximal at all is a witness for the pair
    REQUIRE(rep.witness_scan.has_value());
    CHECK_FALSE(rep.witness_scan->witness.has_value());
    CHECK(rep.witness_scan->rejections.size() == 1118);
}

TEST_CASE("symplectic triple, Sp(8,2)") {
    SymplecticTriple t = build_symplectic_triple(4, 2);
    SymplecticTripleReport rep = verify_symplectic_triple(t, 4);
    CHECK(rep.pass);
    CHECK(rep.maximals_scanned == 2295);
    CHECK(rep.inter_s1_s2 == 2);
}

TEST_CASE("parametrized line pencils") {
    for (unsigned q : {2u, 3u}) {
        CAPTURE(q);
        SymplecticTriple t = build_symplectic_triple(3, q);
        TripleLinesReport rep = verify_triple_lines(t);
        CHECK(rep.scalars.size() == q);
        for (const ScalarLineCheck& chk : rep.scalars) {
            CHECK(chk.p_q_collinear);
            CHECK(chk.meet_is_point);
            CHECK(chk.meet_matches);
        }
        CHECK(rep.scalars_pass);
        CHECK(rep.generalized_pass);
        CHECK(rep.generalized_pairs_checked > 0);
        CHECK(rep.pass);
    }

    // spot check the q=2, a=1 meeting point: <x1+x2+y1+y2>
    SymplecticTriple t = build_symplectic_triple(3, 2);
    const Form& form = t.space.form();
    Vec common{1, 1, 1, 1, 0, 0};
    Vec p{1, 0, 1, 0, 0, 0};   // x1 + x2
    Vec r{0, 1, 0, 1, 0, 0};   // y2 - y1 == y1 + y2
    CHECK(form.bilinear(p, r) == 0);
    Subspace pq = rref(std::vector<Vec>{p, r}, 6, 2);
    Subspace L = rref(std::vector<Vec>{Vec{1, 0, 0, 1, 0, 0}, Vec{0, 1, 1, 0, 0, 0}}, 6, 2);
    CHECK(intersect(pq, L) == rref(std::vector<Vec>{common}, 6, 2));
}

TEST_CASE("grassmann characterization") {
    GrassmannCharReport rep = verify_grassmann_characterization(4, 2, 2, true, 2);
    CHECK(rep.characterization_pass);
    CHECK(rep.formula_vs_bfs_pass);
    CHECK(rep.pairs_checked == 595);
    CHECK(rep.pass);
    CHECK_THROWS_AS(verify_grassmann_characterization(3, 1, 2, true, 1), std::invalid_argument);
}
