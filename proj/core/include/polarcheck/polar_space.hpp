#pragma once

#include <cstdint>
#include <unordered_map>

#include "polarcheck/forms.hpp"

namespace polarcheck {

enum class PolarType { Cn, Dn };

/// Turns a polar space type into the CLI/JSON tag ("Cn" or "Dn").
const char* to_string(PolarType t);

struct BuildOptions {
    /// Refuse to enumerate spaces whose maximal count exceeds this.
    uint64_t max_maximals = 10000;
};

/// The polar space of a form: its singular points, the complete list of
/// maximal singular subspaces, and the C_n / D_n classification.
///
/// Maximal singular subspaces are canonically sorted by their RREF bytes;
/// the index into that list is the stable ID used by every graph, report
/// and export in the project.  Immutable after build; all queries are
/// read-only and thread-safe.
class PolarSpace {
public:
    static PolarSpace build(Form form, const BuildOptions& options = {});

    const Form& form() const { return form_; }
    unsigned rank() const { return form_.witt_index(); }
    PolarType type() const { return type_; }

    /// Singular points (vdim-1 subspaces), canonically ordered.
    const std::vector<Subspace>& points() const { return points_; }

    /// All maximal singular subspaces, canonically ordered; index == ID.
    const std::vector<Subspace>& maximals() const { return maximals_; }
    const Subspace& maximal(int id) const;
    int maximal_count() const { return int(maximals_.size()); }

    /// ID lookup; -1 when the subspace is not a maximal singular subspace.
    int maximal_id(const Subspace& m) const;

    /// How many maximal singular subspaces pass through each next-to-maximal
    /// singular subspace (uniform by the C_n / D_n dichotomy).
    unsigned maximals_per_next_to_max() const { return through_next_to_max_; }

    /// Closed-form count of maximal singular subspaces, used as the
    /// independent oracle against the enumeration:
    ///   symplectic (C_n):        prod_{i=1..n} (q^i + 1)
    ///   hyperbolic quadric (D_n): prod_{i=0..n-1} (q^i + 1)
    static uint64_t expected_maximal_count(FormKind kind, unsigned n, unsigned q);

    /// Closed-form count of singular points, also an independent oracle.
    static uint64_t expected_point_count(FormKind kind, unsigned n, unsigned q);

private:
    explicit PolarSpace(Form form) : form_(std::move(form)) {}

    Form form_;
    PolarType type_ = PolarType::Cn;
    unsigned through_next_to_max_ = 0;
    std::vector<Subspace> points_;
    std::vector<Subspace> maximals_;
    std::unordered_map<Subspace, int, SubspaceHash> maximal_ids_;
};

}  // namespace polarcheck
