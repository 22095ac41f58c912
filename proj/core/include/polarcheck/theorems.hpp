#pragma once

#include <cstdint>
#include <optional>

#include "polarcheck/dual_polar.hpp"
#include "polarcheck/frames.hpp"
#include "polarcheck/grassmann.hpp"
#include "polarcheck/half_spin.hpp"
#include "polarcheck/incidence.hpp"

namespace polarcheck {

// Throughout this module a "witness" for a pair (S1, S2) is a third point S
// of the same geometry such that everything opposite to S is opposite to S1
// or to S2.  The half-spin claim under verification: S1, S2 are collinear
// if and only if a witness exists (rank >= 4).  The symplectic triple shows
// the same equivalence fails in C_n dual polar spaces.

/// Per-vertex opposition bitsets over local indices; turns the inner
/// "is opp(S) covered by opp(S1) | opp(S2)" scans into word operations.
class OppositionTable {
public:
    static OppositionTable from(const HalfSpinSpace& hss);
    static OppositionTable from(const DualPolarSpace& dps);
    static OppositionTable from_predicate(int n, const std::function<bool(int, int)>& opp);

    int size() const { return n_; }
    bool opposite(int a, int b) const {
        return (bits_[size_t(a) * words_ + size_t(b) / 64] >> (b % 64)) & 1;
    }
    /// First u with opp(u, s) but neither opp(u, s1) nor opp(u, s2); -1 if none.
    int first_violation(int s, int s1, int s2) const;
    bool is_witness(int s, int s1, int s2) const { return first_violation(s, s1, s2) < 0; }

private:
    OppositionTable(int n) : n_(n), words_((n + 63) / 64), bits_(size_t(n) * words_, 0) {}
    void set(int a, int b) { bits_[size_t(a) * words_ + size_t(b) / 64] |= uint64_t(1) << (b % 64); }

    int n_;
    size_t words_;
    std::vector<uint64_t> bits_;
};

/// Result of the witness search for one pair.  IDs are global maximal IDs
/// for half-spin pairs and dual-polar vertex IDs otherwise.
struct WitnessReport {
    int32_t s1 = -1, s2 = -1;
    std::optional<int32_t> witness;  // first witness in canonical ID order
    struct Rejection {
        int32_t candidate;
        int32_t violating_u;  // opp(u, candidate), not opp(u, s1), not opp(u, s2)
    };
    /// One certificate per candidate scanned before the witness was found
    /// (every candidate, when there is no witness).
    std::vector<Rejection> rejections;
};

/// Scans all candidates in canonical ID order.  Throws std::invalid_argument
/// when s1 == s2 or an ID is outside the family.
WitnessReport find_witness(const HalfSpinSpace& hss, int s1_id, int s2_id);
WitnessReport find_witness(const DualPolarSpace& dps, int s1_id, int s2_id);

/// Every witness for the pair, ascending; purely exploratory.
std::vector<int32_t> all_witnesses(const HalfSpinSpace& hss, int s1_id, int s2_id);
std::vector<int32_t> all_witnesses(const DualPolarSpace& dps, int s1_id, int s2_id);

struct PairFailure {
    int32_t s1, s2;
    bool collinear;      // expected (collinearity)
    bool witness_found;  // observed
};

struct CharacterizationOptions {
    bool exhaustive = true;
    /// Sampled mode: all collinear pairs are still checked through their
    /// line points; this many non-collinear pairs get the full candidate scan.
    uint64_t noncollinear_samples = 200;
    uint64_t seed = 0;
    int threads = 1;
};

struct CharacterizationReport {
    bool pass = false;
    bool exhaustive = true;
    char family = '+';
    uint64_t members = 0;
    uint64_t pairs_total = 0;
    uint64_t collinear_pairs = 0;
    uint64_t noncollinear_pairs_checked = 0;
    std::vector<PairFailure> failures;
};

/// Verifies "collinear <=> witness exists" over one half-spin family.
/// Exhaustive mode scans every unordered pair; sampled mode checks every
/// collinear pair through its line (each further line point must be a
/// witness) plus a seeded sample of non-collinear pairs with the full scan.
/// Requires rank >= 4 and a D_n space; throws std::invalid_argument otherwise.
CharacterizationReport verify_witness_characterization(const HalfSpinSpace& hss,
                                                       const CharacterizationOptions& opt = {});

struct LineWitnessFailure {
    int32_t s1, s2, candidate;
    int32_t violating_u;
};

struct LineWitnessReport {
    bool pass = false;
    uint64_t collinear_pairs = 0;
    uint64_t witnesses_checked = 0;
    std::vector<LineWitnessFailure> failures;
};

/// For every collinear pair, every further point of the joining line must
/// be a witness.  Works on a half-spin family or on a dual polar space
/// (where the same direction of the equivalence still holds on C_n spaces).
LineWitnessReport verify_line_witnesses(const HalfSpinSpace& hss, int threads = 1);
LineWitnessReport verify_line_witnesses(const DualPolarSpace& dps, int threads = 1);

struct WitnessGeometryReport {
    int32_t s1 = -1, s2 = -1, witness = -1;
    unsigned inter_s_s1 = 0, inter_s_s2 = 0, inter_s1_s2 = 0;
    bool dims_ok = false;  // all three equal rank - 2
    uint64_t point_pairs_checked = 0;
    bool lines_meet_witness = false;  // p1p2 meets S for collinear p1 in S1, p2 in S2
    bool pass = false;
};

/// Given a verified witness triple, checks the geometric shape behind it:
/// the three pairwise intersections all have vdim n-2, and every line
/// joining collinear points p1 of S1 and p2 of S2 meets S.  Throws
/// std::invalid_argument when the triple fails the witness precondition.
WitnessGeometryReport verify_witness_geometry(const HalfSpinSpace& hss, int s1_id, int s2_id,
                                              int s_id);

/// The symplectic triple built on the standard frame:
///   S1 = <x1, ..., xn>,  S2 = <y1, y2, x3, ..., xn>,
///   S  = <x1 + y2, x2 - y1, x3, ..., xn>,  N = <x3, ..., xn>.
/// S1 and S2 are not collinear in the dual polar space (they meet in
/// vdim n-2), yet S is supposed to be a witness for them.
struct SymplecticTriple {
    PolarSpace space;
    Subspace s1, s2, s, n_core;
    bool s1_singular = false, s2_singular = false, s_singular = false;
    int32_t s1_id = -1, s2_id = -1, s_id = -1;
};

/// Builds the triple on Sp(2n, q); n >= 3.  Total singularity of each
/// subspace is recorded, not assumed: over GF(3) the third subspace is not
/// isotropic for an alternating form (gram(x1+y2, x2-y1) = -2 != 0), and
/// the verifier reports that honestly instead of failing to construct.
SymplecticTriple build_symplectic_triple(unsigned n, unsigned q,
                                         const BuildOptions& options = {});

struct TripleViolation {
    int32_t u;  // disjoint from S but meets both S1 and S2
};

struct SymplecticTripleReport {
    bool construction_ok = false;   // all three subspaces are maximal singular
    bool s1_s2_noncollinear = false;
    unsigned inter_s1_s2 = 0, inter_s_s1 = 0, inter_s_s2 = 0, core_vdim = 0;
    bool intersections_match_core = false;  // pairwise intersections == N
    uint64_t maximals_scanned = 0;
    bool witness_property = false;  // every U disjoint from S meets S1 or S2
    std::vector<TripleViolation> violations;
    /// Optional exhaustive search over every candidate S for the pair
    /// (S1, S2); records whether any witness at all exists.
    std::optional<WitnessReport> witness_scan;
    bool pass = false;
};

/// Scans every maximal U of the space: disjoint from S implies disjoint
/// from S1 or from S2; also asserts that S1, S2 are not collinear.  Passing
/// proves that a witness exists for a non-collinear pair, so the half-spin
/// equivalence fails on this C_n space.
SymplecticTripleReport verify_symplectic_triple(const SymplecticTriple& triple,
                                                int threads = 1,
                                                bool scan_all_witnesses = false);

struct ScalarLineCheck {
    uint8_t a = 0;
    bool p_q_collinear = false;   // <x1 + a x2> pairs to zero with <y2 - a y1>
    bool meet_is_point = false;   // the two lines meet in exactly one point
    bool meet_matches = false;    // and it is <(x1+y2) + a(x2-y1)>
};

struct TripleLinesReport {
    std::vector<ScalarLineCheck> scalars;
    bool scalars_pass = false;
    uint64_t generalized_pairs_checked = 0;
    bool generalized_pass = false;  // every line between collinear p in S1\N,
                                    // r in S2\N meets S\N
    bool pass = false;
};

/// The two parametrized pencils of the triple: for every scalar a, the line
/// through <x1+y2> and <x2-y1> meets the line through <x1 + a x2> and
/// <y2 - a y1> precisely in <(x1+y2) + a(x2-y1)>; plus the generalized
/// line-meeting scan over all collinear point pairs off the common core.
TripleLinesReport verify_triple_lines(const SymplecticTriple& triple);

struct GrassmannCharReport {
    unsigned d = 0, k = 0, q = 0;
    uint64_t vertices = 0;
    uint64_t expected_vertices = 0;  // Gaussian binomial oracle
    bool characterization_enabled = true;
    uint64_t pairs_checked = 0;
    std::vector<PairFailure> failures;
    bool characterization_pass = false;
    bool formula_vs_bfs_pass = false;  // distance k - vdim == BFS everywhere
    int diameter = 0;
    bool pass = false;
};

/// The same adjacency-vs-opposition characterization on the Grassmann graph
/// of k-subspaces of GF(q)^d, verified exhaustively, together with the
/// distance-formula-vs-BFS cross-check.
GrassmannCharReport verify_grassmann_characterization(unsigned d, unsigned k, unsigned q,
                                                      bool characterization = true,
                                                      int threads = 1);

struct DistanceFormulaReport {
    bool dp_formula_vs_bfs = false;
    uint64_t dp_pairs = 0;
    int dp_diameter = 0;
    bool dp_diameter_is_rank = false;
    bool dp_connected = false;
    // D_n only: half-spin cross-checks per family.
    bool has_half_spin = false;
    bool hs_opposite_iff_max_distance = false;
    bool hs_distance_is_half_dp = false;
    uint64_t hs_pairs = 0;
    int hs_diameter_plus = 0, hs_diameter_minus = 0;
    bool pass = false;
};

/// Distance-formula checks: dual-polar formula distance against BFS on all
/// pairs, diameter == rank, and on D_n spaces the half-spin cross-checks
/// (opposition dimension criterion <=> maximal BFS distance; BFS distance
/// is half the dual-polar distance within a family).
DistanceFormulaReport verify_distance_formulas(const PolarSpace& ps, int threads = 1);

}  // namespace polarcheck
