#pragma once

#include "polarcheck/dual_polar.hpp"
#include "polarcheck/half_spin.hpp"
#include "polarcheck/polar_space.hpp"

namespace polarcheck {

/// An abstract point-line geometry: points 0..points-1, each line a sorted
/// list of point IDs.  Used to check the axioms of a structure without
/// reference to the coordinates it was built from.
struct IncidenceGeometry {
    int points = 0;
    std::vector<std::vector<int32_t>> lines;
};

/// The ambient polar space as a point-line geometry (points and totally
/// singular lines, IDs by canonical order).
IncidenceGeometry ambient_incidence(const PolarSpace& ps);

/// The dual polar space as a geometry over its vertex IDs.
IncidenceGeometry dual_polar_incidence(const DualPolarSpace& dps);

/// One half-spin family as a geometry over local member indices.
IncidenceGeometry half_spin_incidence(const HalfSpinSpace& hss);

struct PolarAxiomsReport {
    bool partial_linear = false;       // at most one line through two points
    bool every_point_on_a_line = false;
    bool lines_have_3_points = false;  // axiom (1)
    bool buekenhout_shult = false;     // axiom (2): one or all
    bool nondegenerate = false;        // axiom (3): a non-collinear partner
    bool pass = false;
};

/// Checks polar-space axioms (1)-(3) exhaustively on the given geometry.
PolarAxiomsReport check_polar_axioms(const IncidenceGeometry& g);

struct LinearSpaceReport {
    int points = 0;
    int lines = 0;
    bool uniform_line_size = false;
    int line_size = 0;
    bool every_pair_on_unique_line = false;
    bool pass = false;
};

/// Checks that the geometry is a linear space with uniform line size,
/// e.g. the PG(3, q) profile of a rank-3 half-spin family.
LinearSpaceReport check_linear_space(const IncidenceGeometry& g);

struct AbstractClassification {
    bool valid = false;     // closure-based subspace enumeration succeeded
    unsigned rank = 0;      // common dimension of maximal singular subspaces
    uint64_t maximal_count = 0;
    bool uniform_next_to_max = false;
    unsigned through_next_to_max = 0;
    PolarType type = PolarType::Cn;
};

/// Classifies an abstract polar space by enumerating its singular subspaces
/// through line closure: rank and the C_n / D_n dichotomy, coordinate-free.
AbstractClassification classify_abstract(const IncidenceGeometry& g);

}  // namespace polarcheck
