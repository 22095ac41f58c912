#pragma once

#include <stdexcept>

#include "polarcheck/graph.hpp"
#include "polarcheck/polar_space.hpp"

namespace polarcheck {

/// The dual polar space of a polar space of rank n: points are the maximal
/// singular subspaces, lines are the pencils through next-to-maximal
/// singular subspaces, and two points are collinear exactly when their
/// intersection has vdim n-1.  Collinearity-graph distance obeys
/// d(S, U) == n - vdim(S Intersect U), which is cross-checked against BFS
/// in the verification suite.  The caller keeps the underlying PolarSpace
/// alive for the lifetime of this object.
class DualPolarSpace {
public:
    explicit DualPolarSpace(const PolarSpace& ps, int threads = 1);

    const PolarSpace& space() const { return ps_; }
    int size() const { return int(adj_.size()); }
    unsigned rank() const { return ps_.rank(); }

    int intersection_vdim(int s_id, int u_id) const {
        check_id(s_id);
        check_id(u_id);
        return inter_[size_t(s_id) * adj_.size() + size_t(u_id)];
    }

    /// n - vdim(S Intersect U).
    int distance(int s_id, int u_id) const {
        return int(rank()) - intersection_vdim(s_id, u_id);
    }

    /// Maximum distance, equivalently disjointness.
    bool opposite(int s_id, int u_id) const { return intersection_vdim(s_id, u_id) == 0; }

    const std::vector<int32_t>& neighbors(int s_id) const {
        check_id(s_id);
        return adj_[size_t(s_id)];
    }
    const AdjacencyList& adjacency() const { return adj_; }

    /// All maximals through a next-to-maximal singular subspace, ascending.
    /// Throws std::invalid_argument for wrong vdim or non-singular input.
    const std::vector<int32_t>& line(const Subspace& m) const;

    /// Lines in canonical order of their defining subspace.
    const std::vector<std::pair<Subspace, std::vector<int32_t>>>& lines() const {
        return lines_;
    }

private:
    void check_id(int id) const {
        if (id < 0 || size_t(id) >= adj_.size()) {
            throw std::out_of_range("DualPolarSpace: bad vertex ID " + std::to_string(id));
        }
    }

    const PolarSpace& ps_;
    std::vector<int8_t> inter_;
    AdjacencyList adj_;
    std::vector<std::pair<Subspace, std::vector<int32_t>>> lines_;
    std::unordered_map<Subspace, int, SubspaceHash> line_index_;
};

}  // namespace polarcheck
