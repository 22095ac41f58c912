#pragma once

#include <algorithm>
#include <unordered_map>

#include "polarcheck/graph.hpp"
#include "polarcheck/subspace.hpp"

namespace polarcheck {

/// The Grassmann graph on all k-subspaces of GF(q)^d: vertices are
/// canonically ordered subspaces, edges join pairs meeting in vdim k-1.
/// Graph distance equals k - vdim(S Intersect U) and the diameter is
/// min(k, d-k); both are cross-checked against BFS in the tests.
/// Requires 1 < k < d-1 (outside that range any two subspaces are adjacent
/// and the graph is uninteresting).
class GrassmannGraph {
public:
    static GrassmannGraph build(unsigned d, unsigned k, unsigned q, int threads = 1,
                                uint64_t max_vertices = 100000);

    unsigned d() const { return d_; }
    unsigned k() const { return k_; }
    unsigned q() const { return q_; }

    int size() const { return int(verts_.size()); }
    const std::vector<Subspace>& vertices() const { return verts_; }
    int vertex_id(const Subspace& s) const;

    int intersection_vdim(int a, int b) const {
        check_id(a);
        check_id(b);
        return inter_[size_t(a) * verts_.size() + size_t(b)];
    }
    int distance(int a, int b) const { return int(k_) - intersection_vdim(a, b); }
    int diameter() const { return int(std::min(k_, d_ - k_)); }
    bool opposite(int a, int b) const { return distance(a, b) == diameter(); }

    const AdjacencyList& adjacency() const { return adj_; }

private:
    GrassmannGraph() = default;
    void check_id(int id) const {
        if (id < 0 || size_t(id) >= verts_.size()) {
            throw std::out_of_range("GrassmannGraph: bad vertex ID " + std::to_string(id));
        }
    }

    unsigned d_ = 0, k_ = 0, q_ = 2;
    std::vector<Subspace> verts_;
    std::unordered_map<Subspace, int, SubspaceHash> ids_;
    std::vector<int8_t> inter_;
    AdjacencyList adj_;
};

}  // namespace polarcheck
