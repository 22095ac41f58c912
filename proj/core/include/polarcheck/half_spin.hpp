#pragma once

#include "polarcheck/graph.hpp"
#include "polarcheck/polar_space.hpp"

namespace polarcheck {

/// One half-spin family of a type-D_n polar space: the maximal singular
/// subspaces at even dual-polar distance from an anchor, with the point-line
/// geometry whose lines collect the family members through a fixed
/// vdim-(n-2) singular subspace.  Members are addressed by their global
/// maximal IDs; local indices (positions in members()) are used for graph
/// work.  The caller keeps the PolarSpace alive.
class HalfSpinSpace {
public:
    char delta() const { return delta_; }
    const PolarSpace& space() const { return ps_; }
    unsigned rank() const { return ps_.rank(); }

    const std::vector<int32_t>& members() const { return members_; }
    int member_count() const { return int(members_.size()); }

    bool contains_id(int global_id) const;
    /// Throws std::invalid_argument when the ID is outside the family.
    int local_index(int global_id) const;
    int global_id(int local_index) const { return members_[size_t(local_index)]; }

    int intersection_vdim(int s_id, int u_id) const;

    /// Distinct members meeting in vdim n-2 (equivalently, on a common line).
    bool collinear(int s_id, int u_id) const;

    /// BFS distance in the family collinearity graph.
    int distance(int s_id, int u_id) const;

    /// Dimension criterion for maximal distance: disjoint for even n,
    /// meeting in a single point for odd n.
    bool opposite(int s_id, int u_id) const;

    /// Opposition via local indices, used by the scan loops.
    bool opposite_local(int a, int b) const {
        int dim = inter_[size_t(a) * members_.size() + size_t(b)];
        return rank() % 2 == 0 ? dim == 0 : dim == 1;
    }
    int intersection_vdim_local(int a, int b) const {
        return inter_[size_t(a) * members_.size() + size_t(b)];
    }

    /// Family members through a vdim-(n-2) totally singular subspace
    /// (global IDs, ascending).  Throws std::invalid_argument on wrong input.
    const std::vector<int32_t>& line(const Subspace& m) const;
    const std::vector<std::pair<Subspace, std::vector<int32_t>>>& lines() const {
        return lines_;
    }

    /// Collinearity graph on local indices.
    const AdjacencyList& local_adjacency() const { return adj_; }
    std::vector<int32_t> bfs_from(int s_id) const;

private:
    friend std::pair<HalfSpinSpace, HalfSpinSpace> split_families(const PolarSpace&, int);
    explicit HalfSpinSpace(const PolarSpace& ps) : ps_(ps) {}
    void finish(int threads);

    const PolarSpace& ps_;
    char delta_ = '+';
    std::vector<int32_t> members_;            // ascending global IDs
    std::vector<int32_t> local_of_global_;    // -1 outside the family
    std::vector<int8_t> inter_;               // member x member intersection vdims
    AdjacencyList adj_;
    std::vector<std::pair<Subspace, std::vector<int32_t>>> lines_;
    std::unordered_map<Subspace, int, SubspaceHash> line_index_;
};

/// Splits the maximals of a D_n space into the two half-spin families.
/// The family of the anchor (maximal ID 0) is returned first as delta '+';
/// membership is by parity of n - vdim(S Intersect anchor), and the parity
/// rule is then re-verified across all pairs, which proves the split is
/// well defined.  Throws std::invalid_argument on a C_n space.
std::pair<HalfSpinSpace, HalfSpinSpace> split_families(const PolarSpace& ps, int threads = 1);

}  // namespace polarcheck
